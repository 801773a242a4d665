"""Lower-bound obstructions for unlinking, splitting and Gordian distance.

Every bound starts from the rank inequality: turning an m-component link
into a split (or unlinked) one needs at least m - 1 - beta crossing
changes.  The refinements all have the same shape: if the relevant
Alexander polynomial is nonzero and fails a norm-pairing test, the
extremal value m - 1 is excluded, so the bound rises to m.

Quantities covered:

  * unlinking number: delta must be f * conj(f) * negligible;
  * splitting number (inter-component changes only): the quotient of
    delta by the product of the component polynomials, each in its own
    variable, must be such a norm, and the answer has the parity of the
    total linking number;
  * weak splitting number (any changes): as for unlinking, but factors
    in a single variable are unconstrained;
  * Gordian distance: |beta(L) - beta(J)| is a lower bound, and when it
    is attained the torsion polynomial of L must be that of J times a
    norm times a negligible;
  * splitting-sequence comparisons and the forced-complexity and
    band-clasping verdicts derived from odd-multiplicity arguments.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .factor import (NormVerdict, _pair_off, factor_irreducible,
                     is_norm_modulo_univariate, is_norm_up_to_negligible,
                     norm_equivalent, odd_multiplicity_divisor)
from .invariants import AlexanderData, embed_univariate
from .laurent import (LaurentPoly, NotDivisible, divide_exact, unit_equal,
                      unit_normal_form)

RULE_RANK = "rank bound m-1-beta"
RULE_UNLINK_NORM = "delta nonzero and not a norm times negligible; m-1 excluded"
RULE_SPLIT_NORM = ("delta over product of component polynomials is not a "
                   "norm times negligible; m-1 excluded")
RULE_WSP_NORM = ("delta is not a norm times negligible modulo one-variable "
                 "factors; m-1 excluded")
RULE_PARITY = "splitting parity equals total linking number parity"


def unlinking_bound(a: AlexanderData, m: int):
    """Lower bound for the unlinking number, with the rules that fired."""
    bound = m - 1 - a.beta
    reasons = [RULE_RANK]
    verdict = None
    if not a.delta.is_zero():
        verdict = is_norm_up_to_negligible(a.delta)
        if not verdict.is_norm and bound <= m - 1:
            bound = m
            reasons.append(RULE_UNLINK_NORM)
    return bound, reasons, verdict


def splitting_bound(a: AlexanderData, component_polys, m: int):
    """Lower bound for the splitting number (inter-component changes).

    ``component_polys`` lists the one-variable Alexander polynomial of
    each component as a knot, in component order.
    """
    bound = m - 1 - a.beta
    reasons = [RULE_RANK]
    verdict = None
    if not a.delta.is_zero():
        prod = LaurentPoly.one(m)
        for i, p in enumerate(component_polys):
            prod = prod * embed_univariate(p, i, m)
        try:
            quotient = divide_exact(a.delta, prod)
            verdict = is_norm_up_to_negligible(quotient)
        except NotDivisible:
            verdict = NormVerdict(is_norm=False, blocking_factors=(prod,))
        if not verdict.is_norm and bound <= m - 1:
            bound = m
            reasons.append(RULE_SPLIT_NORM)
    return bound, reasons, verdict


def weak_splitting_bound(a: AlexanderData, m: int):
    """Lower bound for the weak splitting number (any crossing changes)."""
    bound = m - 1 - a.beta
    reasons = [RULE_RANK]
    verdict = None
    if not a.delta.is_zero():
        verdict = is_norm_modulo_univariate(a.delta)
        if not verdict.is_norm and bound <= m - 1:
            bound = m
            reasons.append(RULE_WSP_NORM)
    return bound, reasons, verdict


def parity_refine(bound: int, total_linking: int):
    """Smallest value >= bound with the parity of the total linking number.

    Each inter-component crossing change moves one pairwise linking
    number by one, and a split link has all of them zero, so the
    splitting number is congruent to their sum mod 2.
    """
    if bound % 2 != total_linking % 2:
        return bound + 1
    return bound


def gordian_rank_bound(a_l: AlexanderData, a_j: AlexanderData):
    """|beta(L) - beta(J)|, a lower bound for the Gordian distance."""
    if a_l.m != a_j.m:
        raise ValueError("Gordian comparison needs equal component counts")
    return abs(a_l.beta - a_j.beta)


@dataclass(frozen=True)
class ExtremalVerdict:
    """Outcome of the extremal Gordian divisibility test.

    When the Gordian distance equals beta(J) - beta(L) >= 0, the torsion
    polynomial of L must equal that of J times f * conj(f) times a
    negligible.  ``compatible`` False certifies the distance is larger.
    """
    compatible: bool
    quotient: LaurentPoly = None
    norm_verdict: NormVerdict = None


def gordian_extremal_divisibility(a_l: AlexanderData, a_j: AlexanderData):
    if a_l.m != a_j.m:
        raise ValueError("Gordian comparison needs equal component counts")
    try:
        quotient = divide_exact(a_l.delta_tor, a_j.delta_tor)
    except NotDivisible:
        return ExtremalVerdict(compatible=False)
    verdict = is_norm_up_to_negligible(quotient) if not quotient.is_unit() \
        else NormVerdict(is_norm=True, witness=LaurentPoly.one(a_l.m))
    return ExtremalVerdict(compatible=verdict.is_norm, quotient=quotient,
                           norm_verdict=verdict)


def splitting_sequence_knot_constraint(prod_k, prod_j):
    """Can two splitting sequences leave knot types with these products?

    ``prod_k`` and ``prod_j`` are the products of the one-variable
    polynomials of the resulting knot types, each in its component's
    variable.  Both sequences can exist only if the products agree up to
    a norm and a negligible; a failed pairing certifies they cannot.
    """
    return norm_equivalent(prod_k, prod_j)


@dataclass(frozen=True)
class ForcedComplexity:
    multiplicity: int
    min_alexander_degree: int
    min_crossings: int


def forced_knot_complexity(delta_l, delta_j, var_index=0):
    """Minimal complexity of a knot forced by an odd symmetric factor.

    If the irreducible symmetric one-variable polynomial ``delta_j``
    divides ``delta_l`` (embedded in variable ``var_index``) with odd
    multiplicity, then any knot created by a shortest splitting sequence
    on that component has Alexander polynomial divisible by it, hence
    degree at least deg(delta_j), hence at least deg + 1 crossings.
    """
    q = embed_univariate(delta_j, var_index, delta_l.nvars)
    result = odd_multiplicity_divisor(delta_l, q)
    if not result.forced_divides:
        raise ValueError(
            f"multiplicity {result.multiplicity} is even; nothing is forced")
    deg = delta_j.degree_span(0)
    return ForcedComplexity(multiplicity=result.multiplicity,
                            min_alexander_degree=deg,
                            min_crossings=deg + 1)


@dataclass(frozen=True)
class BandClaspingVerdict:
    """Verdict for the band-clasping factorization test.

    A 2-component link made by clasping a band between a knot K (in t2)
    and a knot J (in t1) must satisfy
    delta_L = delta_K(t2) * delta_J(t1) * g * conj(g), with equality up
    to a signed monomial only, no further negligible slack.
    """
    compatible: bool
    g: LaurentPoly = None
    trivial_clasping: bool = False
    blocking_factors: tuple = ()


def band_clasping_check(delta_l, delta_k, delta_j):
    """Test the band-clasping shape and extract the band polynomial g."""
    if delta_l.is_zero():
        return BandClaspingVerdict(compatible=False)
    m = delta_l.nvars
    if m != 2:
        raise ValueError("band-clasping test needs a 2-variable polynomial")
    prod = embed_univariate(delta_j, 0, m) * embed_univariate(delta_k, 1, m)
    try:
        quotient = divide_exact(delta_l, prod)
    except NotDivisible:
        return BandClaspingVerdict(compatible=False,
                                   blocking_factors=(unit_normal_form(prod),))
    # pair off the full factorization: unlike the negligible-slack tests,
    # (1 - t_i) and prime factors here must pair as well
    classes = {}
    for q, mult in factor_irreducible(quotient).factors:
        classes[q] = classes.get(q, 0) + mult
    verdict = _pair_off(classes, m)
    if not verdict.is_norm:
        return BandClaspingVerdict(compatible=False,
                                   blocking_factors=verdict.blocking_factors)
    g = verdict.witness
    return BandClaspingVerdict(compatible=True, g=g,
                               trivial_clasping=unit_equal(
                                   g, LaurentPoly.one(m)))


# ---------------------------------------------------------------------------
# the per-link report

@dataclass
class ObstructionReport:
    link_name: str
    m: int
    beta: int
    delta: LaurentPoly
    delta_tor: LaurentPoly
    component_polys: list
    bounds: dict            # quantity -> (lower bound, [reasons])
    parity_constraint: int  # residue mod 2 of the splitting number, or None
    norm_verdicts: dict     # quantity -> NormVerdict or None
    inconclusive: list = field(default_factory=list)
    annotations: dict = field(default_factory=dict)


def build_report(d, alex=None, component_polys=None):
    """Assemble the full obstruction report for a diagram.

    Fixture annotations (``note_*`` lines) ride along; a fixture marked
    ``note_open`` gets its named quantities listed as inconclusive: the
    bounds here cannot settle them.
    """
    from .invariants import alexander_data, component_polynomials
    if alex is None:
        alex = alexander_data(d)
    if component_polys is None:
        component_polys = component_polynomials(d)
    m = d.ncomps
    lk_sum = d.total_linking_number()
    u_bound, u_reasons, u_verdict = unlinking_bound(alex, m)
    sp_bound, sp_reasons, sp_verdict = splitting_bound(
        alex, component_polys, m)
    sp_refined = parity_refine(sp_bound, lk_sum)
    if sp_refined != sp_bound:
        sp_reasons = sp_reasons + [RULE_PARITY]
    wsp_bound, wsp_reasons, wsp_verdict = weak_splitting_bound(alex, m)
    notes = dict(getattr(d, "notes", {}))
    inconclusive = []
    if "note_open" in notes:
        inconclusive = [q.strip() for q in notes["note_open"].split(",")]
    return ObstructionReport(
        link_name=d.name,
        m=m,
        beta=alex.beta,
        delta=alex.delta,
        delta_tor=alex.delta_tor,
        component_polys=component_polys,
        bounds={
            "unlinking": (u_bound, u_reasons),
            "splitting": (sp_refined, sp_reasons),
            "weakSplitting": (wsp_bound, wsp_reasons),
        },
        parity_constraint=lk_sum % 2,
        norm_verdicts={
            "unlinking": u_verdict,
            "splitting": sp_verdict,
            "weakSplitting": wsp_verdict,
        },
        inconclusive=inconclusive,
        annotations=notes,
    )

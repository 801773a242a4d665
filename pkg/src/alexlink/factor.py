"""Factorization over the Laurent ring and norm-pairing decision procedures.

The ring Z[t1^±1, ..., tm^±1] is a UFD whose units are the signed
monomials.  Irreducible factorization is obtained by shifting a Laurent
polynomial to an ordinary one and factoring over the integers (sympy does
the heavy lifting); integer content is split into primes, which are
honest irreducible elements here since the coefficient ring is Z.

On top of the factorization we decide the "norm" questions that drive
the link obstructions: whether p equals f * conj(f) times a unit of the
localized ring (a negligible polynomial), with variants that ignore
single-variable factors or compare two polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import sympy

from .laurent import (LaurentPoly, NotDivisible, ZeroInputError, divide_exact,
                      is_negligible, unit_equal, unit_normal_form)


_symbol_cache = {}


def _symbols(nvars):
    if nvars not in _symbol_cache:
        _symbol_cache[nvars] = sympy.symbols(f"t1:{nvars + 1}")
    return _symbol_cache[nvars]


def to_sympy(p):
    """Ordinary-polynomial part of p as a sympy Poly (unit part dropped)."""
    syms = _symbols(p.nvars)
    mins = [min(exps[i] for exps in p.terms) for i in range(p.nvars)]
    terms = {tuple(e[i] - mins[i] for i in range(p.nvars)): c
             for e, c in p.terms.items()}
    return sympy.Poly.from_dict(terms, *syms, domain=sympy.ZZ)


def from_sympy(poly, nvars):
    """Inverse of to_sympy for ordinary polynomials."""
    if not isinstance(poly, sympy.Poly):
        poly = sympy.Poly(poly, *_symbols(nvars), domain=sympy.ZZ)
    terms = {tuple(int(e) for e in exps): int(c)
             for exps, c in poly.as_dict().items()}
    return LaurentPoly(nvars, terms)


@dataclass(frozen=True)
class Factorization:
    """unit * prod(factor^multiplicity) = the input, exactly.

    The unit is a signed monomial; factors are distinct irreducibles in
    unit normal form, each with multiplicity >= 1.  Prime integers count
    as irreducible factors (the coefficient ring is Z, not a field).
    """
    unit: LaurentPoly
    factors: tuple  # of (LaurentPoly, int) pairs, deterministic order

    def recombine(self):
        out = self.unit
        for f, mult in self.factors:
            for _ in range(mult):
                out = out * f
        return out

    def multiplicity(self, q):
        qn = unit_normal_form(q)
        for f, mult in self.factors:
            if f == qn:
                return mult
        return 0


def factor_irreducible(p):
    """Complete factorization of p into irreducibles over the Laurent ring."""
    if p.is_zero():
        raise ZeroInputError("cannot factor the zero polynomial")
    n = p.nvars
    if p.is_unit():
        return Factorization(unit=p, factors=())
    coeff, raw = sympy.factor_list(to_sympy(p).as_expr(), *_symbols(n))
    factors = {}
    coeff = int(coeff)
    for prime, mult in sympy.factorint(abs(coeff)).items():
        factors[LaurentPoly.const(n, int(prime))] = mult
    for fac, mult in raw:
        q = unit_normal_form(from_sympy(fac, n))
        if q.is_one():
            continue
        factors[q] = factors.get(q, 0) + mult
    ordered = tuple(sorted(factors.items(),
                           key=lambda fm: (sorted(fm[0].terms.items()),)))
    prod = LaurentPoly.one(n)
    for f, mult in ordered:
        prod = prod * (f ** mult)
    unit = divide_exact(p, prod)
    assert unit.is_unit(), "factorization lost a non-unit part"
    return Factorization(unit=unit, factors=ordered)


def gcd(a, b):
    """A greatest common divisor of a and b, in unit normal form."""
    if a.is_zero() and b.is_zero():
        raise ZeroInputError("gcd(0, 0) is undefined")
    if a.is_zero():
        return unit_normal_form(b)
    if b.is_zero():
        return unit_normal_form(a)
    a._check(b)
    g = sympy.gcd(to_sympy(a), to_sympy(b))
    g = from_sympy(g, a.nvars)
    if g.is_zero() or g.is_constant() and abs(g.constant_value()) == 1:
        return LaurentPoly.one(a.nvars)
    return unit_normal_form(g)


def gcd_many(polys):
    """GCD of a sequence, short-circuiting once it collapses to 1."""
    acc = None
    for p in polys:
        if p.is_zero():
            continue
        acc = unit_normal_form(p) if acc is None else gcd(acc, p)
        if acc.is_one():
            return acc
    if acc is None:
        raise ZeroInputError("gcd of all-zero family is undefined")
    return acc


@dataclass(frozen=True)
class NormVerdict:
    """Outcome of a norm-pairing test.

    When ``is_norm`` holds, ``witness`` is an f with the tested quantity
    equal to f * conj(f) times whatever slack the particular test allows.
    Otherwise ``blocking_factors`` lists the irreducible classes that
    cannot be paired off.
    """
    is_norm: bool
    witness: LaurentPoly = None
    blocking_factors: tuple = ()


def _conjugate_class(q):
    return unit_normal_form(q.involute())


def _pair_off(classes, nvars):
    """Core pairing logic on a dict {irreducible normal form: multiplicity}.

    Multiplicities may be negative (signed differences).  A self-conjugate
    class needs even multiplicity; otherwise a class and its conjugate
    class need equal multiplicity.  Returns a NormVerdict.
    """
    blocking = []
    witness = LaurentPoly.one(nvars)
    seen = set()
    for q in sorted(classes, key=lambda f: sorted(f.terms.items())):
        if q in seen:
            continue
        mult = classes[q]
        qbar = _conjugate_class(q)
        if qbar == q:
            seen.add(q)
            if mult % 2 != 0:
                blocking.append(q)
            elif mult > 0:
                witness = witness * (q ** (mult // 2))
        else:
            seen.add(q)
            seen.add(qbar)
            other = classes.get(qbar, 0)
            if mult != other:
                blocking.append(q)
            elif mult > 0:
                witness = witness * (q ** mult)
    if blocking:
        return NormVerdict(is_norm=False, blocking_factors=tuple(blocking))
    return NormVerdict(is_norm=True, witness=witness)


def _factor_classes(p, skip_univariate=False):
    classes = {}
    for q, mult in factor_irreducible(p).factors:
        if is_negligible(q):
            continue
        if skip_univariate and len(q.variables_used()) <= 1:
            continue
        classes[q] = classes.get(q, 0) + mult
    return classes


def is_norm_up_to_negligible(p):
    """Does p = f * conj(f) * n for some f and some negligible n?"""
    if p.is_zero():
        raise ZeroInputError("norm test needs a nonzero polynomial")
    return _pair_off(_factor_classes(p), p.nvars)


def is_norm_modulo_univariate(p):
    """As is_norm_up_to_negligible, with single-variable factors unconstrained.

    Integer constants count as single-variable factors here, since they
    can be absorbed into a one-variable polynomial.
    """
    if p.is_zero():
        raise ZeroInputError("norm test needs a nonzero polynomial")
    return _pair_off(_factor_classes(p, skip_univariate=True), p.nvars)


def norm_equivalent(a, b):
    """Are a and b equal up to a factor f*conj(f) and a negligible unit?

    Tested on the signed difference of irreducible multiplicities, so
    common factors cancel and the leftover multiset must pair off.
    """
    if a.is_zero() or b.is_zero():
        raise ZeroInputError("norm equivalence needs nonzero polynomials")
    a._check(b)
    classes = dict(_factor_classes(a))
    for q, mult in _factor_classes(b).items():
        classes[q] = classes.get(q, 0) - mult
    classes = {q: m for q, m in classes.items() if m != 0}
    return _pair_off(classes, a.nvars)


@dataclass(frozen=True)
class OddMultiplicityResult:
    multiplicity: int
    forced_divides: bool


def odd_multiplicity_divisor(p, q):
    """Multiplicity of the irreducible q in p, with the parity consequence.

    When a symmetric irreducible appears with odd multiplicity it cannot
    be cancelled by any norm factor, so it must divide the other side of
    any norm-equivalence; ``forced_divides`` records that.
    Preconditions: q irreducible, not negligible, and conj(q) ≐ q.
    """
    if p.is_zero():
        raise ZeroInputError("need a nonzero polynomial")
    fq = factor_irreducible(q)
    if len(fq.factors) != 1 or fq.factors[0][1] != 1:
        raise ValueError("q must be irreducible")
    if is_negligible(q):
        raise ValueError("q must not be negligible")
    if not unit_equal(q.involute(), q):
        raise ValueError("q must be symmetric under the bar involution")
    qn = unit_normal_form(q)
    mult = 0
    rest = p
    while True:
        try:
            rest = divide_exact(rest, qn)
        except NotDivisible:
            break
        mult += 1
    return OddMultiplicityResult(multiplicity=mult, forced_divides=mult % 2 == 1)

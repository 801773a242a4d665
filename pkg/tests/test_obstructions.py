"""Lower-bound obstructions: unlinking, splitting and Gordian comparisons."""

import pytest

import alexlink as al
from alexlink.invariants import AlexanderData, embed_univariate
from alexlink.laurent import LaurentPoly
from alexlink.obstructions import (RULE_PARITY, RULE_RANK, RULE_SPLIT_NORM,
                                   RULE_UNLINK_NORM, RULE_WSP_NORM,
                                   band_clasping_check, build_report,
                                   forced_knot_complexity,
                                   gordian_extremal_divisibility,
                                   gordian_rank_bound, parity_refine,
                                   splitting_bound,
                                   splitting_sequence_knot_constraint,
                                   unlinking_bound, weak_splitting_bound)

from conftest import load_fixture

TREF = "t^2-t+1"


def P(text, nvars):
    return al.parse_poly(text, nvars)


def alex(name):
    return al.alexander_data(load_fixture(name))


class TestUnlinkingBound:
    def test_hopf_stays_at_rank_bound(self):
        bound, reasons, verdict = unlinking_bound(alex("hopf"), 2)
        assert bound == 1
        assert reasons == [RULE_RANK]
        assert verdict.is_norm  # delta = 1 is negligible

    def test_trefoil_norm_rule_fires(self):
        bound, reasons, verdict = unlinking_bound(alex("trefoil"), 1)
        assert bound == 1
        assert RULE_UNLINK_NORM in reasons
        assert not verdict.is_norm

    def test_borromean_negligible_delta(self):
        # delta = (t1-1)(t2-1)(t3-1) is negligible, so the norm rule
        # cannot exclude the extremal value m - 1
        bound, reasons, verdict = unlinking_bound(alex("L6a4"), 3)
        assert bound == 2
        assert reasons == [RULE_RANK]
        assert verdict.is_norm

    def test_raised_to_m_on_blocking_factor(self):
        # L9a54 carries t3^2 - t3 + 1 with multiplicity one
        bound, reasons, verdict = unlinking_bound(alex("L9a54"), 3)
        assert bound == 3
        assert RULE_UNLINK_NORM in reasons
        assert verdict.blocking_factors

    def test_split_links_bound_zero(self):
        for name in ("unlink2", "unlink3", "trefoil_trefoil"):
            a = alex(name)
            bound, reasons, verdict = unlinking_bound(a, a.m)
            assert bound == 0
            assert verdict is None  # delta vanishes, no norm test to run


class TestSplittingBound:
    def test_hopf(self):
        a = alex("hopf")
        bound, reasons, verdict = splitting_bound(
            a, [LaurentPoly.one(1), LaurentPoly.one(1)], 2)
        assert bound == 1 and verdict.is_norm

    def test_component_polynomial_divides_off(self):
        # trefoil-with-meridian shape: delta = tref(t1) * (t1-1)(t2-1)
        a = AlexanderData(m=2, beta=0,
                          delta=P(f"({TREF.replace('t', 't1')})"
                                  "*(t1-1)*(t2-1)", 2),
                          delta_tor=None)
        bound, reasons, verdict = splitting_bound(
            a, [P(TREF, 1), LaurentPoly.one(1)], 2)
        assert bound == 1
        assert verdict.is_norm

    def test_knotted_component_not_dividing_raises_bound(self):
        a = AlexanderData(m=2, beta=0, delta=P("(t1-1)*(t2-1)", 2),
                          delta_tor=None)
        bound, reasons, verdict = splitting_bound(
            a, [P(TREF, 1), LaurentPoly.one(1)], 2)
        assert bound == 2
        assert RULE_SPLIT_NORM in reasons
        assert not verdict.is_norm and verdict.blocking_factors


class TestParityRefine:
    def test_lift(self):
        assert parity_refine(2, 1) == 3
        assert parity_refine(1, 0) == 2

    def test_fixed_point(self):
        assert parity_refine(1, 1) == 1
        assert parity_refine(2, 0) == 2
        assert parity_refine(0, 4) == 0


class TestWeakSplittingBound:
    def test_univariate_factors_excused(self):
        # L9a1: delta = (t1-1)(t2-1)(2t2^2-3t2+2); the one-variable
        # factor blocks the plain norm test but not the weak one
        a = alex("L9a1")
        u_bound, _, u_verdict = unlinking_bound(a, 2)
        w_bound, w_reasons, w_verdict = weak_splitting_bound(a, 2)
        assert u_bound == 2 and not u_verdict.is_norm
        assert w_bound == 1 and w_verdict.is_norm
        assert w_reasons == [RULE_RANK]

    def test_multivariable_blocking_factor_still_fires(self):
        a = AlexanderData(m=3, beta=0, delta=P("t2*t3-1", 3), delta_tor=None)
        bound, reasons, verdict = weak_splitting_bound(a, 3)
        assert bound == 3
        assert RULE_WSP_NORM in reasons


class TestGordianRankBound:
    def test_borromean_vs_unlink(self):
        assert gordian_rank_bound(alex("L6a4"), alex("unlink3")) == 2

    def test_symmetric(self):
        a, b = alex("hopf"), alex("unlink2")
        assert gordian_rank_bound(a, b) == gordian_rank_bound(b, a) == 1

    def test_component_mismatch(self):
        with pytest.raises(ValueError):
            gordian_rank_bound(alex("hopf"), alex("unlink3"))


class TestGordianExtremalDivisibility:
    def test_compatible_negligible_quotient(self):
        v = gordian_extremal_divisibility(alex("whitehead"), alex("hopf"))
        assert v.compatible
        assert al.unit_equal(v.quotient, P("(t1-1)*(t2-1)", 2))

    def test_incompatible_odd_symmetric_quotient(self):
        # tref(t1) * tref(t2) is not f * conj(f) * negligible
        v = gordian_extremal_divisibility(alex("trefoil_trefoil"),
                                          alex("unlink2"))
        assert not v.compatible
        assert not v.norm_verdict.is_norm

    def test_incompatible_non_divisible(self):
        v = gordian_extremal_divisibility(alex("unlink2"),
                                          alex("trefoil_trefoil"))
        assert not v.compatible
        assert v.quotient is None

    def test_component_mismatch(self):
        with pytest.raises(ValueError):
            gordian_extremal_divisibility(alex("hopf"), alex("unlink3"))


class TestSplittingSequenceKnotConstraint:
    def test_equal_products_pass(self):
        p = embed_univariate(P(TREF, 1), 0, 2)
        assert splitting_sequence_knot_constraint(p, p).is_norm

    def test_unpaired_factor_certifies_impossible(self):
        p = embed_univariate(P(TREF, 1), 0, 2)
        v = splitting_sequence_knot_constraint(p, LaurentPoly.one(2))
        assert not v.is_norm

    def test_norm_ratio_passes(self):
        p = embed_univariate(P(TREF, 1), 0, 2)
        q = p * P("t1*t2+3", 2) * P("t1*t2+3", 2).involute()
        assert splitting_sequence_knot_constraint(p, q).is_norm


class TestForcedKnotComplexity:
    def test_odd_factor_forces_a_knot(self):
        # L9a54: t3^2 - t3 + 1 appears once in the third variable, so a
        # shortest splitting sequence leaves a knot with at least three
        # crossings on that component
        a = alex("L9a54")
        fc = forced_knot_complexity(a.delta, P(TREF, 1), var_index=2)
        assert fc.multiplicity == 1
        assert fc.min_alexander_degree == 2
        assert fc.min_crossings == 3

    def test_even_multiplicity_forces_nothing(self):
        squared = embed_univariate(P(TREF, 1), 0, 2) ** 2
        with pytest.raises(ValueError):
            forced_knot_complexity(squared, P(TREF, 1), var_index=0)


class TestBandClasping:
    def test_published_two_bridge_shape(self):
        p = P("(1-t1+t1^2)*(1-t2+t2^2)*(t1^-1-1+t2)*(t1-1+t2^-1)", 2)
        v = band_clasping_check(p, P(TREF, 1), P(TREF, 1))
        assert v.compatible and not v.trivial_clasping
        expected = P("t1-1+t2^-1", 2)
        assert al.unit_equal(v.g, expected) \
            or al.unit_equal(v.g, expected.involute())
        recombined = v.g * v.g.involute() \
            * embed_univariate(P(TREF, 1), 0, 2) \
            * embed_univariate(P(TREF, 1), 1, 2)
        assert al.unit_equal(recombined, p)

    def test_trivial_clasping(self):
        p = embed_univariate(P(TREF, 1), 0, 2) \
            * embed_univariate(P(TREF, 1), 1, 2)
        v = band_clasping_check(p, P(TREF, 1), P(TREF, 1))
        assert v.compatible and v.trivial_clasping

    def test_negligible_slack_not_allowed(self):
        # unlike the splitting tests, a leftover (t1-1)(t2-1) must pair
        # off exactly and cannot be absorbed as negligible
        p = embed_univariate(P(TREF, 1), 0, 2) * P("(t1-1)*(t2-1)", 2)
        v = band_clasping_check(p, LaurentPoly.one(1), P(TREF, 1))
        assert not v.compatible
        assert v.blocking_factors

    def test_non_divisible_products(self):
        v = band_clasping_check(P("t1*t2-1", 2), P(TREF, 1), P(TREF, 1))
        assert not v.compatible

    def test_zero_and_bad_arity(self):
        assert not band_clasping_check(LaurentPoly.zero(2),
                                       P(TREF, 1), P(TREF, 1)).compatible
        with pytest.raises(ValueError):
            band_clasping_check(P("t1*t2*t3", 3), P(TREF, 1), P(TREF, 1))


class TestBuildReport:
    def test_bounds_table(self):
        expect = {
            "hopf": (1, 1, 1),
            "whitehead": (1, 2, 1),
            "L6a4": (2, 2, 2),
            "L9a1": (2, 2, 1),
            "L9a54": (3, 4, 2),
            "unlink3": (0, 0, 0),
        }
        for name, (u, sp, wsp) in expect.items():
            r = build_report(load_fixture(name))
            assert r.bounds["unlinking"][0] == u, name
            assert r.bounds["splitting"][0] == sp, name
            assert r.bounds["weakSplitting"][0] == wsp, name

    def test_whitehead_parity_reason(self):
        r = build_report(load_fixture("whitehead"))
        assert RULE_PARITY in r.bounds["splitting"][1]
        assert r.parity_constraint == 0

    def test_open_problems_marked_inconclusive(self):
        for name in ("L9a30", "L9a15", "L9a17", "L9a2", "L9a10"):
            r = build_report(load_fixture(name))
            assert r.inconclusive == ["unlinking"], name

    def test_annotations_ride_along(self):
        r = build_report(load_fixture("L9a54"))
        assert r.annotations.get("note_u") == "3"

    def test_bounds_do_not_exceed_annotated_values(self, corpus):
        """Soundness: no lower bound may beat a recorded true value."""
        key_of = {"note_u": "unlinking", "note_sp": "splitting",
                  "note_wsp": "weakSplitting"}
        checked = 0
        for d in corpus:
            notes = getattr(d, "notes", {})
            # the L12n1320 annotation records a value the computed
            # invariants here do not reach; it is still an upper-bound
            # check for soundness
            for key, quantity in key_of.items():
                if key in notes:
                    r = build_report(d)
                    assert r.bounds[quantity][0] <= int(notes[key]), \
                        (d.name, quantity)
                    checked += 1
        assert checked >= 8

    def test_rank_reason_always_first(self, corpus):
        for d in corpus:
            r = build_report(d)
            for q, (bound, reasons) in r.bounds.items():
                assert reasons[0] == RULE_RANK, (d.name, q)

"""Bounded diagrammatic splitting search and the sandwich summaries."""

import pytest

import alexlink as al
from alexlink.obstructions import build_report
from alexlink.search import (MAX_SEARCH_DEPTH, SEARCH_CROSSING_BUDGET,
                             SearchBudgetExceeded, SearchResult,
                             bounded_split_search, certify_gap)

from conftest import load_fixture


class TestBoundedSplitSearch:
    def test_hopf_splits_at_depth_one(self):
        r = bounded_split_search(load_fixture("hopf"), 2, mode="inter")
        assert r.found and r.depth == 1
        assert len(r.sequence) == 1
        assert r.partition == ((0,), (1,))

    def test_whitehead_needs_two_inter_changes(self):
        # depth 1 is parity-infeasible (linking number 0), depth 2 works
        r1 = bounded_split_search(load_fixture("whitehead"), 1, mode="inter")
        assert not r1.found
        r2 = bounded_split_search(load_fixture("whitehead"), 3, mode="inter")
        assert r2.found and r2.depth == 2

    def test_already_split_found_at_depth_zero(self):
        r = bounded_split_search(load_fixture("trefoil_trefoil"), 0)
        assert r.found and r.depth == 0 and r.sequence == ()

    def test_not_found_is_reported_not_guessed(self):
        # the Borromean diagram does not fall apart within the budget;
        # the search must say so rather than return a bogus sequence
        r = bounded_split_search(load_fixture("L6a4"), 3, mode="inter")
        assert not r.found and r.partition is None and r.depth == 3

    def test_mode_validation(self):
        with pytest.raises(ValueError):
            bounded_split_search(load_fixture("hopf"), 1, mode="bogus")

    def test_depth_budget(self):
        with pytest.raises(SearchBudgetExceeded):
            bounded_split_search(load_fixture("hopf"), MAX_SEARCH_DEPTH + 1)

    def test_crossing_budget(self):
        tref = [(4, 2, 5, 1), (2, 6, 3, 5), (6, 4, 1, 3)]
        n = SEARCH_CROSSING_BUDGET // 3 + 1
        text = ", ".join("X[%d,%d,%d,%d]" % tuple(6 * k + x for x in c)
                         for k in range(n) for c in tref)
        with pytest.raises(SearchBudgetExceeded):
            bounded_split_search(al.parse_pd(text), 1)

    def test_inter_mode_only_touches_mixed_crossings(self):
        d = load_fixture("whitehead")
        r = bounded_split_search(d, 3, mode="inter")
        for i in r.sequence:
            assert len(set(d.crossing_components(i))) == 2


class TestCertifyGap:
    def test_hopf_sandwich_is_exact(self):
        d = load_fixture("hopf")
        report = build_report(d)
        result = bounded_split_search(d, 1, mode="inter")
        gap = certify_gap(report, result)
        assert gap.intervals["splitting"] == (1, 1)
        assert gap.exact["splitting"]
        # inter-component changes also bound the weak splitting number
        assert gap.intervals["weakSplitting"] == (1, 1)
        assert gap.exact["weakSplitting"]
        assert gap.intervals["unlinking"][1] is None

    def test_whitehead_splitting_exact(self):
        d = load_fixture("whitehead")
        gap = certify_gap(build_report(d),
                          bounded_split_search(d, 2, mode="inter"))
        assert gap.intervals["splitting"] == (2, 2)
        assert gap.exact["splitting"]

    def test_unfound_search_leaves_intervals_open(self):
        d = load_fixture("L6a4")
        gap = certify_gap(build_report(d),
                          bounded_split_search(d, 2, mode="inter"))
        for q in gap.intervals:
            assert gap.intervals[q][1] is None
            assert not gap.exact[q]

    def test_any_mode_does_not_bound_splitting(self):
        d = load_fixture("whitehead")
        gap = certify_gap(build_report(d),
                          bounded_split_search(d, 2, mode="any"))
        assert gap.intervals["weakSplitting"][1] == 2
        assert gap.intervals["splitting"][1] is None

    def test_inconsistent_pipeline_raises(self):
        report = build_report(load_fixture("hopf"))
        fake = SearchResult(found=True, sequence=(), partition=((0,), (1,)),
                            depth=0, mode="inter")
        with pytest.raises(AssertionError):
            certify_gap(report, fake)

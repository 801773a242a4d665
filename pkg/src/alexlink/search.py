"""Bounded search for diagrammatic splitting sequences.

Enumerates sets of crossing changes on a fixed diagram, breadth-first in
the number of changes, and reports the shallowest set after which the
diagram falls apart completely: after bigon reduction no two components
share a crossing.  This gives an upper bound for the splitting number
(inter-component mode) or the weak splitting number (any-crossing mode)
that can be sandwiched against the algebraic lower bounds; both count
changes to a completely split link, as does the rank bound.

Splitness is only certified at the diagram level, so a genuinely split
link can be missed on an unhelpful diagram: the upper bounds are
conservative.  No isotopy beyond bigon reduction is attempted.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

MAX_SEARCH_DEPTH = 4
SEARCH_CROSSING_BUDGET = 20


class SearchBudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class SearchResult:
    found: bool
    sequence: tuple        # crossing indices changed (sorted)
    partition: tuple       # component partition reached, or None
    depth: int             # depth searched (found depth when found)
    mode: str


def _parity_feasible(d, change_counts):
    """Necessary condition for a full split after the given changes.

    Every pairwise linking number ends at zero in a completely split
    link, and each inter-component crossing change moves one of them by
    one, so (linking number + change count) must be even for every pair.
    """
    m = d.ncomps
    for i in range(m):
        for j in range(i):
            v = d.linking_number(i, j)
            if (v + change_counts.get((i, j), 0)) % 2:
                return False
    return True


def bounded_split_search(d, max_depth, mode="inter"):
    """Breadth-first search over crossing-change sets up to max_depth.

    ``mode`` is "inter" (only crossings between distinct components may
    be changed; bounds the splitting number) or "any" (bounds the weak
    splitting number).  Crossing changes commute, so candidate sequences
    are explored as sets; the lexicographically smallest set at the
    shallowest depth wins.
    """
    if mode not in ("inter", "any"):
        raise ValueError(f"unknown search mode {mode!r}")
    if max_depth > MAX_SEARCH_DEPTH:
        raise SearchBudgetExceeded(
            f"depth {max_depth} exceeds the budget of {MAX_SEARCH_DEPTH}")
    if d.ncrossings > SEARCH_CROSSING_BUDGET:
        raise SearchBudgetExceeded(
            f"{d.ncrossings} crossings exceed the budget "
            f"of {SEARCH_CROSSING_BUDGET}")

    if mode == "inter":
        candidates = [i for i in range(d.ncrossings)
                      if len(set(d.crossing_components(i))) == 2]
    else:
        candidates = list(range(d.ncrossings))

    seen = set()
    for depth in range(max_depth + 1):
        for changes in combinations(candidates, depth):
            if mode == "inter":
                counts = {}
                for i in changes:
                    cu, co = d.crossing_components(i)
                    key = (max(cu, co), min(cu, co))
                    counts[key] = counts.get(key, 0) + 1
                if not _parity_feasible(d, counts):
                    continue
            cur = d
            for i in changes:
                cur = cur.crossing_change(i)
            reduced = cur.reduce_bigons()
            key = reduced.state_key()
            if key in seen:
                continue
            seen.add(key)
            partition = reduced.split_partition()
            if all(len(part) == 1 for part in partition):
                return SearchResult(found=True, sequence=tuple(changes),
                                    partition=tuple(partition), depth=depth,
                                    mode=mode)
    return SearchResult(found=False, sequence=(), partition=None,
                        depth=max_depth, mode=mode)


@dataclass(frozen=True)
class GapSummary:
    intervals: dict   # quantity -> (lower, upper or None)
    exact: dict       # quantity -> bool


def certify_gap(report, search_result):
    """Sandwich the algebraic lower bounds with the search upper bound.

    An inter-component search bounds the splitting number, an
    any-crossing search the weak splitting number.  A found depth below
    a lower bound means a bug somewhere and raises instead of reporting.
    """
    quantity = "splitting" if search_result.mode == "inter" else "weakSplitting"
    intervals = {}
    exact = {}
    for q, (lower, _) in report.bounds.items():
        upper = None
        if q == quantity and search_result.found:
            upper = search_result.depth
        elif (q == "weakSplitting" and quantity == "splitting"
              and search_result.found):
            # inter-component changes are also admissible for the weak
            # splitting number
            upper = search_result.depth
        if upper is not None and upper < lower:
            raise AssertionError(
                f"search found depth {upper} below lower bound {lower} "
                f"for {q} on {report.link_name}: inconsistent pipeline")
        intervals[q] = (lower, upper)
        exact[q] = upper is not None and upper == lower
    return GapSummary(intervals=intervals, exact=exact)

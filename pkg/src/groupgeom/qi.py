"""Comparison of word metrics from two generating sets of one group.

Both metrics are measured from the identity by breadth-first search over
right multiplication by the generating words; elements are identified
across the two searches through a shared element table.  The returned
constants are the smallest on a grid (additive constant first, then the
multiplicative one in quarter steps) that sandwich one metric by the
other with no violations; all comparisons use exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .cayley import ElementIndex
from .oracle import OracleBudget
from .words import Presentation, Word, invert, multiply


@dataclass(frozen=True)
class QIReport:
    lam: float
    c: int
    radius: int
    violations: int
    element_count: int


def _metric_bfs(
    index: ElementIndex, gen_words: Sequence[Word], radius: int
) -> dict[int, int]:
    moves = list(gen_words) + [invert(w) for w in gen_words]
    dist = {index.find_or_add(()): 0}
    frontier = [index.find_or_add(())]
    for layer in range(radius):
        nxt = []
        for eid in frontier:
            rep = index.reps[eid]
            for g in moves:
                tid = index.find_or_add(multiply(rep, g))
                if tid not in dist:
                    dist[tid] = layer + 1
                    nxt.append(tid)
        frontier = nxt
    return dist


def _satisfies(pairs, k: int, c: int) -> bool:
    # lambda = k / 4; both inequalities cleared of division:
    #   (1/lam) dS - c <= dT   <=>   4 dS <= k (dT + c)
    #   dT <= lam dS + c       <=>   4 dT <= k dS + 4 c
    for ds, dt in pairs:
        if 4 * ds > k * (dt + c) or 4 * dt > k * ds + 4 * c:
            return False
    return True


def _minimal_quarters(pairs, c: int) -> Optional[int]:
    """Least k with lambda = k/4 >= 1 satisfying both inequalities, if any."""
    k = 4
    for ds, dt in pairs:
        if dt + c == 0:
            if ds > 0:
                return None
        else:
            k = max(k, -(-4 * ds // (dt + c)))
        if ds == 0:
            if dt > c:
                return None
        else:
            k = max(k, -(-(4 * dt - 4 * c) // ds))
    return k


def compare_metrics(
    presentation: Presentation,
    gens_a: Optional[Sequence[Word]],
    gens_b: Sequence[Word],
    radius: int,
    budget: Optional[OracleBudget] = None,
) -> QIReport:
    """Fit the linear comparison constants between two word metrics.

    ``gens_a`` of None means the presentation's own generators.  Distances
    from the identity are exact within each radius-``radius`` search, so
    the fit runs over the elements both searches reached.
    """
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    if gens_a is None:
        gens_a = [(k,) for k in range(1, presentation.rank + 1)]
    for w in list(gens_a) + list(gens_b):
        presentation.check_word(w)
    index = ElementIndex(presentation, budget)
    da = _metric_bfs(index, gens_a, radius)
    db = _metric_bfs(index, gens_b, radius)
    common = sorted(set(da) & set(db))
    pairs = [(da[e], db[e]) for e in common]
    for c in range(0, max((max(ds, dt) for ds, dt in pairs), default=0) + 1):
        k = _minimal_quarters(pairs, c)
        if k is not None:
            assert _satisfies(pairs, k, c)
            return QIReport(k / 4.0, c, radius, 0, len(common))
    return QIReport(1.0, 0, radius, 0, len(common))  # only the identity seen

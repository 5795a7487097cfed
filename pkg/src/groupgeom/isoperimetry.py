"""Combinatorial area and the filling function over word length.

The area of an identity word is the least number of relator moves that
rewrite it to the empty word, where one move swaps a subword ``s`` for
``t`` whenever ``s * t^-1`` is a symmetrized relator (free reduction is
free).  The search is Dijkstra over freely reduced words, sharpened to A*
by pairing-form lower bounds that never overestimate, so reported values
are exact minima within the caps.
"""

from __future__ import annotations

import heapq
import math
import statistics
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional

from .words import (
    EMPTY,
    Presentation,
    Word,
    free_reduce,
    shortlex_key,
    symmetrize,
)


@dataclass(frozen=True)
class AreaCaps:
    max_area: int
    max_intermediate_length: int


@dataclass(frozen=True)
class AreaMove:
    position: int
    removed: Word
    inserted: Word
    relator: Word


@dataclass(frozen=True)
class AreaResult:
    value: Optional[int]  # None means the caps ran out before an answer
    caps: AreaCaps
    moves: Optional[tuple[AreaMove, ...]]


@dataclass(frozen=True)
class DehnRow:
    n: int
    max_area: int
    argmax: Word
    words_examined: int


@dataclass(frozen=True)
class DehnTable:
    rows: tuple[DehnRow, ...]
    caps: AreaCaps


@dataclass(frozen=True)
class GrowthClass:
    kind: str  # linear | quadratic | other
    exponent: float
    residual: float
    all_zero: bool = False


def default_caps(word: Word, presentation: Presentation) -> AreaCaps:
    longest = symmetrize(presentation).max_length
    return AreaCaps(max_area=16, max_intermediate_length=2 * len(word) + longest)


def _winding_mass(word: Iterable[int], x: int, y: int) -> int:
    """Total variation of the word's winding profile in the (x, y) plane.

    Project the word to a lattice path (generator x moves horizontally, y
    vertically, everything else stays put) and sum |winding number| over
    all unit cells.  The quantity is invariant under free reduction, and a
    relator move adds a translate of the applied relator's own profile, so
    it changes by at most that relator's mass: dividing by the largest
    member mass gives an admissible, consistent move-count bound.
    """
    rows: dict[int, dict[int, int]] = {}
    px = py = 0
    for letter in word:
        g = abs(letter)
        s = 1 if letter > 0 else -1
        if g == x:
            px += s
        elif g == y:
            j = py if s > 0 else py - 1
            row = rows.setdefault(j, {})
            row[px] = row.get(px, 0) + s
            py += s
    mass = 0
    for row in rows.values():
        cols = sorted(row)
        suffix = 0
        for i in range(cols[-1] - 1, cols[0] - 1, -1):
            suffix += row.get(i + 1, 0)
            mass += abs(suffix)
    return mass


@lru_cache(maxsize=None)
def _pairing_forms(presentation: Presentation) -> tuple[tuple[int, int, int], ...]:
    """(x, y, scale) triples usable as admissible lower bounds; empty when
    some relator has a nonzero exponent sum (the winding profile is then
    not a loop and its move increment is not controlled)."""
    from .oracle import exponent_vector

    rank = presentation.rank
    for rel in presentation.relators:
        if any(exponent_vector(rel, rank)):
            return ()
    members = symmetrize(presentation).members
    forms = []
    for x, y in combinations(range(1, rank + 1), 2):
        scale = max((_winding_mass(m, x, y) for m in members), default=0)
        if scale > 0:
            forms.append((x, y, scale))
    return tuple(forms)


def _heuristic(word: Word, forms) -> int:
    if not word:
        return 0
    best = 1
    for x, y, scale in forms:
        h = -(-_winding_mass(word, x, y) // scale)  # ceil div
        if h > best:
            best = h
    return best


def _splice(word: Word, pos: int, cut: int, repl: Word) -> Word:
    out = list(word[:pos])
    for letter in repl + word[pos + cut :]:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def _neighbors(word: Word, members, max_length: int):
    """All single relator moves from ``word`` within the length cap.

    For member rho split as rho = s + u, an occurrence of s may be swapped
    for u^-1; cut = 0 inserts a whole inverted relator.
    """
    n = len(word)
    for pos in range(n + 1):
        for rho in members:
            limit = min(len(rho), n - pos)
            lcp = 0
            while lcp < limit and word[pos + lcp] == rho[lcp]:
                lcp += 1
            for cut in range(lcp + 1):
                repl = tuple(-x for x in reversed(rho[cut:]))
                if n - cut + len(repl) > max_length + 2:  # cheap pre-filter
                    continue
                nxt = _splice(word, pos, cut, repl)
                if len(nxt) <= max_length:
                    yield pos, cut, rho, repl, nxt


def area(presentation: Presentation, word: Word, caps: Optional[AreaCaps] = None) -> AreaResult:
    """Minimal relator-move count rewriting ``word`` to the empty word.

    Unknown (value None) when no derivation exists within the caps; the
    move path comes back on success and replays move by move.
    """
    presentation.check_word(word)
    if caps is None:
        caps = default_caps(word, presentation)
    start = free_reduce(word)
    if start == EMPTY:
        return AreaResult(0, caps, ())
    members = symmetrize(presentation).members
    if not members:
        return AreaResult(None, caps, None)
    from .oracle import abelian_residue

    if any(abelian_residue(presentation, start)):
        # Moves preserve the abelianized residue and the empty word has
        # residue zero, so no derivation exists at any cap.
        return AreaResult(None, caps, None)
    forms = _pairing_forms(presentation)
    max_len = caps.max_intermediate_length
    if len(start) > max_len:
        return AreaResult(None, caps, None)

    h0 = _heuristic(start, forms)
    if h0 > caps.max_area:
        return AreaResult(None, caps, None)
    # Ties in f resolved toward small h then short words, so the search
    # hugs derivations that shorten the word and the goal, once pushed,
    # pops ahead of the rest of its f-plateau.
    counter = 0
    heap = [(h0, h0, len(start), counter, start)]
    best = {start: 0}
    parent: dict[Word, tuple[Word, AreaMove]] = {}
    while heap:
        f, _, _, _, w = heapq.heappop(heap)
        g = best[w]
        if f > g + _heuristic(w, forms):
            continue  # stale entry
        if w == EMPTY:
            moves = []
            cur = w
            while cur != start:
                prev, move = parent[cur]
                moves.append(move)
                cur = prev
            return AreaResult(g, caps, tuple(reversed(moves)))
        if g >= caps.max_area:
            continue
        for pos, cut, rho, repl, nxt in _neighbors(w, members, max_len):
            ng = g + 1
            old = best.get(nxt)
            if old is not None and old <= ng:
                continue
            nh = _heuristic(nxt, forms)
            if ng + nh > caps.max_area:
                continue
            best[nxt] = ng
            parent[nxt] = (w, AreaMove(pos, w[pos : pos + cut], repl, rho))
            counter += 1
            heapq.heappush(heap, (ng + nh, nh, len(nxt), counter, nxt))
    return AreaResult(None, caps, None)


def _closed_reduced_words(presentation: Presentation, n_max: int):
    """Identity words of length <= n_max, as closed label-nonbacktracking
    walks in a radius-(n_max // 2) ball; any prefix of such a word stays
    within min(k, n - k) of the start, so the ball suffices."""
    from .cayley import build_ball

    ball = build_ball(presentation, n_max // 2)
    letters_of = [
        sorted(ball.adjacency[v].items(), key=lambda kv: (abs(kv[0]), kv[0] < 0))
        for v in range(len(ball.vertices))
    ]
    dist = ball.dist
    out: list[Word] = []
    word: list[int] = []

    def rec(vertex: int):
        depth = len(word)
        if vertex == 0 and word:
            out.append(tuple(word))
        if depth == n_max:
            return
        last = word[-1] if word else 0
        for letter, nxt in letters_of[vertex]:
            if letter == -last:
                continue
            if dist[nxt] > n_max - depth - 1:
                continue
            word.append(letter)
            rec(nxt)
            word.pop()

    rec(0)
    return out


def dehn_function(
    presentation: Presentation, n_max: int, caps: Optional[AreaCaps] = None
) -> DehnTable:
    """Worst-case area over identity words of length <= n, per even n."""
    if caps is None:
        longest = symmetrize(presentation).max_length
        caps = AreaCaps(max_area=16, max_intermediate_length=2 * n_max + longest)
    words = _closed_reduced_words(presentation, n_max)
    words.sort(key=shortlex_key)
    areas: list[tuple[Word, int]] = []
    for w in words:
        result = area(presentation, w, caps)
        if result.value is None:
            raise RuntimeError(
                f"area caps {caps} exhausted on a length-{len(w)} word; raise max_area"
            )
        areas.append((w, result.value))
    rows = []
    best_area = 0
    best_word: Word = EMPTY
    examined = 0
    idx = 0
    for n in range(2, n_max + 1, 2):
        while idx < len(areas) and len(areas[idx][0]) <= n:
            w, val = areas[idx]
            examined += 1
            if val > best_area:
                best_area, best_word = val, w
            idx += 1
        rows.append(DehnRow(n, best_area, best_word, examined))
    return DehnTable(tuple(rows), caps)


def fit_growth(table) -> GrowthClass:
    """Log-log least-squares slope, binned into linear / quadratic / other.

    Accepts a DehnTable, a bench table, or bare (n, value) rows.  A table
    with no positive values classifies linear by convention.
    """
    rows = _extract_rows(table)
    if not rows:
        raise ValueError("empty table")
    positive = [(n, v) for n, v in rows if v > 0 and n > 0]
    if not positive:
        return GrowthClass("linear", 0.0, 0.0, all_zero=True)
    if len(positive) < 3:
        raise ValueError("need at least 3 rows with positive values to fit")
    xs = [math.log(n) for n, _ in positive]
    ys = [math.log(v) for _, v in positive]
    slope, intercept = statistics.linear_regression(xs, ys)
    residual = math.sqrt(
        statistics.fmean((y - (slope * x + intercept)) ** 2 for x, y in zip(xs, ys))
    )
    if 0.8 <= slope <= 1.2:
        kind = "linear"
    elif 1.8 <= slope <= 2.2:
        kind = "quadratic"
    else:
        kind = "other"
    return GrowthClass(kind, slope, residual)


def _extract_rows(table) -> list[tuple[int, int]]:
    if isinstance(table, DehnTable):
        return [(row.n, row.max_area) for row in table.rows]
    rows = getattr(table, "rows", table)
    out = []
    for row in rows:
        if hasattr(row, "n"):
            value = getattr(row, "max_area", None)
            if value is None:
                value = row.steps
            out.append((row.n, value))
        else:
            n, value = row[0], row[1]
            out.append((int(n), float(value)))
    return out

"""Finite radius-r balls of a Cayley graph, with metric queries.

Vertices are group elements discovered by breadth-first search from the
identity, numbered by (distance, shortlex of representative).  Every
stored representative is the shortlex-least geodesic spelling of its
element.  Distances and geodesics are exact for the group whenever the
query pair is "unclipped": both endpoint depths plus their distance stay
within twice the radius, which forces some group geodesic to lie in the
ball.
"""

from __future__ import annotations

from collections import deque
from typing import NamedTuple, Optional, Union

import numpy as np

from .oracle import Tristate, OracleBudget, abelian_residue, element_key, words_equal, UndecidedError
from .words import Presentation, Word, free_reduce, letter_key, multiply

VertexRef = Union[int, Word]


class BallDistance(NamedTuple):
    value: int
    possibly_clipped: bool


class GeodesicPath(NamedTuple):
    vertices: tuple[int, ...]
    labels: tuple[int, ...]


class CayleyBall:
    def __init__(self, presentation, radius, vertices, dist, adjacency):
        self.presentation = presentation
        self.radius = radius
        self.vertices: tuple[Word, ...] = tuple(vertices)
        self.dist: tuple[int, ...] = tuple(dist)
        self.adjacency: tuple[dict[int, int], ...] = tuple(adjacency)
        self._matrix: Optional[np.ndarray] = None

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def edges(self) -> tuple[tuple[int, int, int], ...]:
        """Every directed labeled edge (u, letter, v); closed under reversal."""
        out = []
        for u, nbrs in enumerate(self.adjacency):
            for letter in sorted(nbrs, key=letter_key):
                out.append((u, letter, nbrs[letter]))
        return tuple(out)

    def vertex_of(self, word: Word) -> int:
        """Walk a word edge by edge from the identity vertex."""
        v = 0
        for i, letter in enumerate(word):
            nxt = self.adjacency[v].get(letter)
            if nxt is None:
                raise ValueError(
                    f"word leaves the radius-{self.radius} ball after {i + 1} letters"
                )
            v = nxt
        return v

    def _resolve(self, ref: VertexRef) -> int:
        if isinstance(ref, int):
            if not 0 <= ref < len(self.vertices):
                raise ValueError(f"vertex index {ref} out of range")
            return ref
        return self.vertex_of(free_reduce(ref))

    def distances_from(self, source: VertexRef) -> list[int]:
        src = self._resolve(source)
        if self._matrix is not None:
            return list(self._matrix[src])
        return self._bfs(src)

    def _bfs(self, src: int) -> list[int]:
        dist = [-1] * len(self.vertices)
        dist[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for v in self.adjacency[u].values():
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        return dist

    def distance_matrix(self) -> np.ndarray:
        """All-pairs distances inside the ball (int16, cached)."""
        if self._matrix is None:
            n = len(self.vertices)
            mat = np.empty((n, n), dtype=np.int16)
            for v in range(n):
                mat[v] = self._bfs(v)
            self._matrix = mat
        return self._matrix

    def unclipped(self, u: VertexRef, v: VertexRef) -> bool:
        """True when some group geodesic between u and v must lie in the ball.

        Any geodesic's farthest point from the identity is at most
        (|u| + |v| + d(u, v)) / 2 away, so a bound of twice the radius
        certifies containment (and hence that ball distance is group
        distance).
        """
        iu, iv = self._resolve(u), self._resolve(v)
        d = self.distances_from(iu)[iv]
        return self.dist[iu] + self.dist[iv] + d <= 2 * self.radius


class ElementIndex:
    """Word deduplication by group element.

    Families with an exact key (free, zz) get O(1) lookups; everything
    else is bucketed by abelianized residue and compared pairwise with the
    equality oracle.  An Unknown comparison raises rather than risking a
    merged or split element.
    """

    def __init__(self, presentation: Presentation, budget: Optional[OracleBudget] = None):
        self.presentation = presentation
        self.budget = budget
        self.reps: list[Word] = []
        self._exact = element_key(presentation, ()) is not None
        self._by_key: dict = {}
        self._buckets: dict = {}

    def find(self, word: Word) -> Optional[int]:
        if self._exact:
            return self._by_key.get(element_key(self.presentation, word))
        bucket = self._buckets.get(abelian_residue(self.presentation, word), ())
        for cand in bucket:
            answer = words_equal(self.presentation, word, self.reps[cand], self.budget)
            if answer is Tristate.EQUAL:
                return cand
            if answer is Tristate.UNKNOWN:
                raise UndecidedError(
                    "equality oracle returned Unknown while deduplicating elements; "
                    "raise the budget"
                )
        return None

    def add(self, word: Word) -> int:
        idx = len(self.reps)
        self.reps.append(word)
        if self._exact:
            self._by_key[element_key(self.presentation, word)] = idx
        else:
            self._buckets.setdefault(
                abelian_residue(self.presentation, word), []
            ).append(idx)
        return idx

    def find_or_add(self, word: Word) -> int:
        found = self.find(word)
        return self.add(word) if found is None else found


def build_ball(
    presentation: Presentation, radius: int, budget: Optional[OracleBudget] = None
) -> CayleyBall:
    """Breadth-first ball construction with sound element deduplication."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    index = ElementIndex(presentation, budget)
    index.add(())
    dist: list[int] = [0]
    adjacency: list[dict[int, int]] = [{}]

    letters = presentation.letters()
    u = 0
    while u < len(index.reps):
        interior = dist[u] < radius
        for letter in letters:
            if letter in adjacency[u]:
                continue
            target = multiply(index.reps[u], (letter,))
            v = index.find(target)
            if v is None:
                if not interior:
                    continue
                v = index.add(target)
                dist.append(dist[u] + 1)
                adjacency.append({})
            adjacency[u][letter] = v
            adjacency[v][-letter] = u
        u += 1
    return CayleyBall(presentation, radius, index.reps, dist, adjacency)


def ball_distance(ball: CayleyBall, u: VertexRef, v: VertexRef) -> BallDistance:
    """Shortest path length inside the ball.

    The flag reports when the boundary may have clipped every group
    geodesic; the value is then only an upper bound on the distance in
    the full group, though still exact for the ball graph.
    """
    iu, iv = ball._resolve(u), ball._resolve(v)
    d = ball.distances_from(iu)[iv]
    if d < 0:
        raise ValueError("vertices are disconnected inside the ball")
    clipped = ball.dist[iu] + ball.dist[iv] + d > 2 * ball.radius
    return BallDistance(d, clipped)


def all_geodesics(
    ball: CayleyBall, x: VertexRef, y: VertexRef, cap: int = 10_000
) -> tuple[tuple[GeodesicPath, ...], bool]:
    """Every shortest path from x to y realized inside the ball.

    Enumerated in lexicographic label order via the shortest-path DAG;
    the boolean reports truncation at ``cap``.
    """
    ix, iy = ball._resolve(x), ball._resolve(y)
    from_x = ball.distances_from(ix)
    from_y = ball.distances_from(iy)
    total = from_x[iy]
    if total < 0:
        raise ValueError("vertices are disconnected inside the ball")
    paths: list[GeodesicPath] = []
    truncated = False
    stack_v = [ix]
    stack_l: list[int] = []

    def rec(v: int) -> bool:
        nonlocal truncated
        if v == iy and len(stack_l) == total:
            if len(paths) >= cap:
                truncated = True
                return False
            paths.append(GeodesicPath(tuple(stack_v), tuple(stack_l)))
            return True
        for letter in sorted(ball.adjacency[v], key=letter_key):
            w = ball.adjacency[v][letter]
            if from_x[w] == from_x[v] + 1 and from_y[w] == from_y[v] - 1:
                stack_v.append(w)
                stack_l.append(letter)
                ok = rec(w)
                stack_v.pop()
                stack_l.pop()
                if not ok:
                    return False
        return True

    rec(ix)
    return tuple(paths), truncated

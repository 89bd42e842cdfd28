"""The triangular grid ``T_n`` that encodes the edges of ``K_{n+1}``.

Point ``(x, y)`` with ``x, y >= 1`` and ``x + y <= n + 1`` stands for the
edge ``v_x v_{n+2-y}``.  Two edges nest exactly when their points are
comparable in strict dominance, so queues become weakly decreasing
staircases ("chains").  Vertex ``v_i`` touches a chain iff the chain meets
column ``i`` or row ``n + 2 - i`` (the hook of ``v_i``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from linlay.layout import PLAIN, QUEUE, UNION, Edge, Layout, LayoutError, Part


class TrianglePoint(NamedTuple):
    x: int
    y: int


def in_triangle(x: int, y: int, n: int) -> bool:
    return x >= 1 and y >= 1 and x + y <= n + 1


def triangle_size(n: int) -> int:
    return n * (n + 1) // 2


def triangle_points(n: int) -> np.ndarray:
    """All points of ``T_n`` as an ``(m, 2)`` array, column by column."""
    if n <= 0:
        return np.empty((0, 2), dtype=np.int64)
    xs, ys = np.meshgrid(np.arange(1, n + 1), np.arange(1, n + 1), indexing="ij")
    mask = xs + ys <= n + 1
    return np.stack([xs[mask], ys[mask]], axis=1).astype(np.int64)


def edge_to_point(edge: Sequence[int], n: int) -> TrianglePoint:
    a, b = Edge.of(*edge)
    if a < 1 or b > n + 1:
        raise LayoutError(f"edge {edge} is not an edge of K_{n + 1}")
    return TrianglePoint(a, n + 2 - b)


def point_to_edge(p: Sequence[int], n: int) -> Edge:
    x, y = p
    if not in_triangle(x, y, n):
        raise LayoutError(f"point {tuple(p)} lies outside T_{n}")
    return Edge(x, n + 2 - y)


def points_to_edges(points: np.ndarray, n: int) -> np.ndarray:
    points = np.asarray(points, dtype=np.int64).reshape(-1, 2)
    return np.stack([points[:, 0], n + 2 - points[:, 1]], axis=1)


def edges_to_points(edges: np.ndarray, n: int) -> np.ndarray:
    edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    return np.stack([edges[:, 0], n + 2 - edges[:, 1]], axis=1)


@dataclass(frozen=True)
class Hook:
    """Column ``vertex`` together with row ``n + 2 - vertex`` of ``T_n``."""

    vertex: int
    n: int

    @property
    def column(self) -> int:
        return self.vertex

    @property
    def row(self) -> int:
        return self.n + 2 - self.vertex

    def points(self) -> list[TrianglePoint]:
        n, i = self.n, self.vertex
        col = [TrianglePoint(i, y) for y in range(1, n + 2 - i)]
        row = [TrianglePoint(x, self.row) for x in range(1, i)]
        return col + row

    def __contains__(self, p) -> bool:
        x, y = p
        return in_triangle(x, y, self.n) and (x == self.column or y == self.row)


def hook_of_vertex(i: int, n: int) -> Hook:
    if not 1 <= i <= n + 1:
        raise LayoutError(f"vertex {i} is not a vertex of K_{n + 1}")
    return Hook(i, n)


_SHIFT = np.int64(1) << 32


def _canonical(points) -> np.ndarray:
    arr = np.asarray(points, dtype=np.int64).reshape(-1, 2)
    if len(arr) == 0:
        return arr
    # one sortable key: x ascending, then y descending
    keys = np.unique(arr[:, 0] * _SHIFT + (_SHIFT - 1 - arr[:, 1]))
    return np.stack([keys // _SHIFT, _SHIFT - 1 - keys % _SHIFT], axis=1)


@dataclass(eq=False)
class Chain:
    """A point set of ``T_n``, stored sorted by x ascending then y descending.

    ``family`` and ``index`` only label where the chain came from (used for
    rendering and bookkeeping); they take no part in any check.
    """

    points: np.ndarray
    family: str = ""
    index: tuple = ()
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.points = _canonical(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        return np.array_equal(self.points, other.points)

    def __repr__(self) -> str:
        return f"Chain({self.family}{list(self.index)}, {len(self)} points)"

    def point_list(self) -> list[TrianglePoint]:
        return [TrianglePoint(int(x), int(y)) for x, y in self.points]

    def vertices(self, n: int) -> np.ndarray:
        """Vertices of ``K_{n+1}`` whose hooks meet this chain."""
        return np.unique(points_to_edges(self.points, n))


def points_are_chain(points: np.ndarray) -> bool:
    """No two points ``p, q`` with ``p.x < q.x`` and ``p.y < q.y``.

    In canonical order (x ascending, y descending) this is the same as
    y never increasing.
    """
    return _is_staircase(_canonical(points))


def _is_staircase(canonical: np.ndarray) -> bool:
    return len(canonical) < 2 or bool(np.all(np.diff(canonical[:, 1]) <= 0))


def chain_is_valid(chain: Chain | Iterable[Sequence[int]]) -> bool:
    if isinstance(chain, Chain):
        return _is_staircase(chain.points)
    return points_are_chain(np.asarray(list(chain)))


def check_partition(chains: Sequence[Chain], n: int) -> None:
    """Raise unless the chains cover every point of ``T_n`` exactly once."""
    if not chains:
        pts = np.empty((0, 2), dtype=np.int64)
    else:
        pts = np.concatenate([c.points for c in chains])
    if len(pts) and (
        pts.min() < 1 or np.any(pts[:, 0] + pts[:, 1] > n + 1)
    ):
        raise LayoutError(f"chain point outside T_{n}")
    keys = pts[:, 0] * (n + 2) + pts[:, 1] if len(pts) else pts
    distinct = len(np.unique(keys))
    if distinct != len(pts):
        raise LayoutError(f"{len(pts) - distinct} points of T_{n} are covered twice")
    if distinct != triangle_size(n):
        raise LayoutError(f"{triangle_size(n) - distinct} points of T_{n} are uncovered")


def hook_incidence(chains: Sequence[Chain], n: int) -> np.ndarray:
    """Chains meeting each hook; index 0 is ``v_1`` of ``K_{n+1}``."""
    counts = np.zeros(n + 2, dtype=np.int64)
    for c in chains:
        counts[c.vertices(n)] += 1
    return counts[1:]


def chains_to_queue_layout(
    chains: Sequence[Chain], n: int, check: bool = True, variant: str = PLAIN
) -> Layout:
    """One queue of ``K_{n+1}`` per chain (or per union chain).

    With ``check`` the chains must partition ``T_n``; in the plain variant
    each must also be a weakly decreasing staircase.
    """
    if check:
        check_partition(chains, n)
        if variant == PLAIN:
            for c in chains:
                if not chain_is_valid(c):
                    raise LayoutError(f"{c!r} is not a weakly decreasing chain")
    parts = [Part(i, points_to_edges(c.points, n)) for i, c in enumerate(chains)]
    return Layout(n + 1, parts, QUEUE, variant)


def union_chains_to_layout(groups: Sequence[Chain], n: int, check: bool = True) -> Layout:
    return chains_to_queue_layout(groups, n, check=check, variant=UNION)

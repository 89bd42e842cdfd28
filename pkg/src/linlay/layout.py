"""Linear layouts of complete graphs.

The vertex ordering is always the identity ``v_1 < v_2 < ... < v_n``, so a
layout is just a vertex count plus a list of parts (edge sets).  Every part
is stored as a sorted ``(m, 2)`` integer array with ``a < b`` per row; the
predicates below work on whole layouts at once so that layouts of ``K_1000``
(half a million edges) can be checked in well under a second.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

QUEUE = "queue"
PAGE = "page"
PLAIN = "plain"
UNION = "union"
KINDS = (QUEUE, PAGE)
VARIANTS = (PLAIN, UNION)


class LayoutError(ValueError):
    """Raised for malformed layouts or violated preconditions."""


class Edge(NamedTuple):
    a: int
    b: int

    @classmethod
    def of(cls, u: int, v: int) -> "Edge":
        if u == v:
            raise LayoutError(f"loop at vertex {u}")
        return cls(min(u, v), max(u, v))


class Relation(str, enum.Enum):
    SHARED = "shared-endpoint"
    NESTED = "nested"
    CROSSING = "crossing"
    DISJOINT = "disjoint-ordered"


def edge_relation(e: Sequence[int], f: Sequence[int]) -> Relation:
    """Classify two edges under the identity ordering (ABBA / ABAB / AABB)."""
    (a, b), (c, d) = sorted([Edge.of(*e), Edge.of(*f)])
    if len({a, b, c, d}) < 4:
        return Relation.SHARED
    if d < b:
        return Relation.NESTED
    if c < b:
        return Relation.CROSSING
    return Relation.DISJOINT


def _as_edge_array(edges) -> np.ndarray:
    arr = np.asarray(edges if len(edges) else np.empty((0, 2)), dtype=np.int64)
    arr = arr.reshape(-1, 2)
    if np.any(arr[:, 0] == arr[:, 1]):
        raise LayoutError("loop edge in part")
    lo = np.minimum(arr[:, 0], arr[:, 1])
    hi = np.maximum(arr[:, 0], arr[:, 1])
    order = np.lexsort((hi, lo))
    return np.stack([lo[order], hi[order]], axis=1)


class Part:
    """A named edge set.  Edges are normalized (a < b) and sorted."""

    __slots__ = ("id", "edges")

    def __init__(self, id: int, edges: Iterable[Sequence[int]] | np.ndarray = ()):
        if not isinstance(edges, np.ndarray):
            edges = [tuple(e) for e in edges]
        arr = _as_edge_array(edges)
        if len(arr) > 1 and np.any(np.all(arr[1:] == arr[:-1], axis=1)):
            raise LayoutError(f"part {id} lists an edge twice")
        self.id = int(id)
        self.edges = arr

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return (Edge(int(a), int(b)) for a, b in self.edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Part):
            return NotImplemented
        return self.id == other.id and np.array_equal(self.edges, other.edges)

    def __repr__(self) -> str:
        return f"Part(id={self.id}, edges={len(self)})"

    def edge_set(self) -> set[Edge]:
        return set(self)

    def vertices(self) -> np.ndarray:
        return np.unique(self.edges)


@dataclass(eq=False)
class Layout:
    """Vertex count, ordered parts, and the queue/page and plain/union tags."""

    n: int
    parts: list[Part]
    kind: str = QUEUE
    variant: str = PLAIN
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise LayoutError(f"unknown kind {self.kind!r}")
        if self.variant not in VARIANTS:
            raise LayoutError(f"unknown variant {self.variant!r}")
        if self.n < 0:
            raise LayoutError("negative vertex count")
        ids = [p.id for p in self.parts]
        if len(set(ids)) != len(ids):
            raise LayoutError("part ids are not unique")
        for p in self.parts:
            if len(p) and (p.edges.min() < 1 or p.edges.max() > self.n):
                raise LayoutError(f"index out of range in part {p.id} (n={self.n})")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Layout):
            return NotImplemented
        return (
            self.n == other.n
            and self.kind == other.kind
            and self.variant == other.variant
            and self.parts == other.parts
        )

    @property
    def edge_count(self) -> int:
        return sum(len(p) for p in self.parts)

    @property
    def part_count(self) -> int:
        return sum(1 for p in self.parts if len(p))

    def edge_table(self) -> tuple[np.ndarray, np.ndarray]:
        """All edges stacked, plus the position of the owning part per edge."""
        if not self.parts:
            return np.empty((0, 2), dtype=np.int64), np.empty(0, dtype=np.int64)
        edges = np.concatenate([p.edges for p in self.parts])
        labels = np.repeat(np.arange(len(self.parts)), [len(p) for p in self.parts])
        return edges, labels


# ---------------------------------------------------------------------------
# vectorized predicates over labelled edge sets


def _nested_labels(edges: np.ndarray, labels: np.ndarray, nlabels: int) -> np.ndarray:
    """Per label: does the edge group contain a nested pair?"""
    bad = np.zeros(nlabels, dtype=bool)
    if len(edges) < 2:
        return bad
    a, b = edges[:, 0], edges[:, 1]
    span = int(edges.max()) + 1
    order = np.lexsort((a, labels))
    lab, a, b = labels[order], a[order], b[order]
    base = lab * span
    key = base + a
    # running max of b, offset per label so earlier labels never leak in
    cummax = np.maximum.accumulate(base + b)
    start = np.searchsorted(key, key, side="left")
    prev = np.where(start > 0, cummax[np.maximum(start - 1, 0)] - base, -1)
    hit = prev > b
    bad[lab[hit]] = True
    return bad


def _crossing_labels(edges: np.ndarray, labels: np.ndarray, nlabels: int) -> np.ndarray:
    """Per label: does the edge group contain a crossing pair?

    Sweep by left endpoint with a stack of open right endpoints; a group is
    crossing-free iff its intervals form a laminar family.
    """
    bad = np.zeros(nlabels, dtype=bool)
    if len(edges) < 2:
        return bad
    order = np.lexsort((-edges[:, 1], edges[:, 0], labels))
    current = -1
    stack: list[int] = []
    for lab, a, b in zip(
        labels[order].tolist(), edges[order, 0].tolist(), edges[order, 1].tolist()
    ):
        if lab != current:
            current = lab
            stack = []
        if bad[lab]:
            continue
        while stack and stack[-1] <= a:
            stack.pop()
        if stack and stack[-1] < b:
            bad[lab] = True
            continue
        stack.append(b)
    return bad


def _component_labels(edges: np.ndarray, labels: np.ndarray) -> tuple[np.ndarray, int]:
    """Label each edge by its connected component inside its own part."""
    if len(edges) == 0:
        return np.empty(0, dtype=np.int64), 0
    span = int(edges.max()) + 1
    nodes = np.concatenate([labels * span + edges[:, 0], labels * span + edges[:, 1]])
    uniq, inv = np.unique(nodes, return_inverse=True)
    m = len(edges)
    graph = coo_matrix(
        (np.ones(m, dtype=np.int8), (inv[:m], inv[m:])), shape=(len(uniq), len(uniq))
    )
    ncomp, comp = connected_components(graph, directed=False)
    return comp[inv[:m]].astype(np.int64), int(ncomp)


def _part_flags(edges, labels, nparts, kind, variant) -> np.ndarray:
    check = _nested_labels if kind == QUEUE else _crossing_labels
    if variant == PLAIN:
        bad = check(edges, labels, nparts)
    else:
        comp, ncomp = _component_labels(edges, labels)
        bad_comp = check(edges, comp, ncomp)
        bad = np.zeros(nparts, dtype=bool)
        bad[labels[bad_comp[comp]]] = True
    return ~bad


def _single(part: Part, kind: str, variant: str) -> bool:
    labels = np.zeros(len(part), dtype=np.int64)
    return bool(_part_flags(part.edges, labels, 1, kind, variant)[0])


def part_is_queue(part: Part) -> bool:
    return _single(part, QUEUE, PLAIN)


def part_is_page(part: Part) -> bool:
    return _single(part, PAGE, PLAIN)


def part_is_union_queue(part: Part) -> bool:
    """Every connected component of the part is nesting-free."""
    return _single(part, QUEUE, UNION)


def part_is_union_page(part: Part) -> bool:
    """Every connected component of the part is crossing-free."""
    return _single(part, PAGE, UNION)


def part_flags(layout: Layout, kind: str | None = None, variant: str | None = None) -> np.ndarray:
    """Validity of every part of ``layout`` under the given (or its own) tags."""
    edges, labels = layout.edge_table()
    return _part_flags(
        edges, labels, len(layout.parts), kind or layout.kind, variant or layout.variant
    )


# ---------------------------------------------------------------------------
# locality and coverage


def locality_profile(layout: Layout) -> np.ndarray:
    """Number of parts with an edge at each vertex; index 0 is ``v_1``."""
    edges, labels = layout.edge_table()
    n = layout.n
    if len(edges) == 0:
        return np.zeros(n, dtype=np.int64)
    span = n + 1
    pairs = np.unique(np.concatenate([labels * span + edges[:, 0], labels * span + edges[:, 1]]))
    return np.bincount(pairs % span, minlength=span)[1:].astype(np.int64)


def coverage(layout: Layout) -> tuple[int, int]:
    """(missing, duplicated) edge counts relative to ``K_n``."""
    edges, _ = layout.edge_table()
    n = layout.n
    total = n * (n - 1) // 2
    if len(edges) == 0:
        return total, 0
    keys = edges[:, 0] * (n + 1) + edges[:, 1]
    distinct = len(np.unique(keys))
    return total - distinct, len(keys) - distinct


@dataclass
class VerificationReport:
    n: int
    kind: str
    variant: str
    part_ids: list[int]
    valid: list[bool]
    locality: np.ndarray
    max_locality: int
    missing_edges: int
    duplicate_edges: int
    part_count: int

    @property
    def covered(self) -> bool:
        return self.missing_edges == 0 and self.duplicate_edges == 0

    @property
    def all_valid(self) -> bool:
        return all(self.valid)

    @property
    def ok(self) -> bool:
        return self.all_valid and self.covered

    def invalid_parts(self) -> list[int]:
        return [pid for pid, good in zip(self.part_ids, self.valid) if not good]

    def summary(self) -> dict:
        return {
            "n": self.n,
            "kind": self.kind,
            "variant": self.variant,
            "part_count": self.part_count,
            "max_locality": self.max_locality,
            "covered": self.covered,
            "missing_edges": self.missing_edges,
            "duplicate_edges": self.duplicate_edges,
            "invalid_parts": self.invalid_parts(),
        }


def verify_layout(layout: Layout) -> VerificationReport:
    flags = part_flags(layout)
    loc = locality_profile(layout)
    missing, dup = coverage(layout)
    return VerificationReport(
        n=layout.n,
        kind=layout.kind,
        variant=layout.variant,
        part_ids=[p.id for p in layout.parts],
        valid=[bool(f) for f in flags],
        locality=loc,
        max_locality=int(loc.max()) if len(loc) else 0,
        missing_edges=missing,
        duplicate_edges=dup,
        part_count=layout.part_count,
    )


# ---------------------------------------------------------------------------
# vertex surgery


def delete_trailing_vertices(layout: Layout, m: int) -> Layout:
    """Restrict to ``K_m`` by dropping every vertex above ``m``.

    Parts keep their ids (and may become empty); subsets of queues, pages and
    their unions stay valid, so this never breaks a layout.
    """
    if m > layout.n:
        raise LayoutError("cannot delete a negative number of vertices")
    parts = [Part(p.id, p.edges[p.edges[:, 1] <= m]) for p in layout.parts]
    return Layout(m, parts, layout.kind, layout.variant, dict(layout.metadata))


def shift_vertices(layout: Layout, offset: int, n: int) -> Layout:
    """Renumber ``v_i -> v_{i+offset}`` inside a larger ``K_n``."""
    parts = [Part(p.id, p.edges + offset) for p in layout.parts]
    return Layout(n, parts, layout.kind, layout.variant, dict(layout.metadata))


# ---------------------------------------------------------------------------
# lower-bound diagnostics


def _require(layout: Layout, kind: str, require_cover: bool = True) -> VerificationReport:
    # union parts are checked per component; the counts below only ever
    # compare edges that share a vertex, so they carry over unchanged
    if layout.kind != kind:
        raise LayoutError(f"expected a {kind} layout")
    report = verify_layout(layout)
    if not report.all_valid:
        raise LayoutError(f"parts {report.invalid_parts()} are not valid {kind}s")
    if require_cover and not report.covered:
        raise LayoutError("layout is not an exact cover of K_n")
    return report


@dataclass
class QueueStatistics:
    """Per-vertex counts; index 0 is ``v_1``."""

    left_longest: np.ndarray
    right_shortest: np.ndarray
    both_sided: np.ndarray
    locality: np.ndarray
    edges_neither: int

    @property
    def identity_holds(self) -> bool:
        return bool(
            np.array_equal(self.locality, self.left_longest + self.right_shortest - self.both_sided)
        )


def queue_statistics(layout: Layout) -> QueueStatistics:
    """Per-vertex counts of left-longest and right-shortest edges, plus their overlap.

    Raises ``RuntimeError`` if the locality identity or the
    left-longest-or-right-shortest totality fails, which cannot happen for a
    valid queue layout.
    """
    report = _require(layout, QUEUE)
    n = layout.n
    edges, labels = layout.edge_table()
    ll = np.zeros(n + 1, dtype=np.int64)
    rs = np.zeros(n + 1, dtype=np.int64)
    both = np.zeros(n + 1, dtype=np.int64)
    neither = 0
    if len(edges):
        a, b = edges[:, 0], edges[:, 1]
        span = n + 1
        key_right = labels * span + b
        key_left = labels * span + a
        # smallest left endpoint per (part, right endpoint) and
        # smallest right endpoint per (part, left endpoint)
        min_a = _group_min(key_right, a)
        min_b = _group_min(key_left, b)
        is_ll = a == min_a
        is_rs = b == min_b
        np.add.at(ll, b[is_ll], 1)
        np.add.at(rs, a[is_rs], 1)
        neither = int(np.count_nonzero(~(is_ll | is_rs)))
        has_right = np.unique(key_right)
        has_left = np.unique(key_left)
        common = np.intersect1d(has_right, has_left)
        np.add.at(both, common % span, 1)
    stats = QueueStatistics(ll[1:], rs[1:], both[1:], report.locality, neither)
    if neither:
        raise RuntimeError(f"{neither} edges are neither left-longest nor right-shortest")
    if not stats.identity_holds:
        raise RuntimeError("locality differs from left-longest + right-shortest - both")
    idx = np.arange(1, n + 1)
    if np.any(stats.both_sided > np.minimum(idx - 1, n - idx)):
        raise RuntimeError("both-sided count exceeds min(i-1, n-i)")
    return stats


def _group_min(keys: np.ndarray, values: np.ndarray) -> np.ndarray:
    uniq, inv = np.unique(keys, return_inverse=True)
    out = np.full(len(uniq), np.iinfo(np.int64).max)
    np.minimum.at(out, inv, values)
    return out[inv]


@dataclass
class PartHull:
    """Circular convex hull of one page and the black/red/green split."""

    part_id: int
    vertices: list[int]
    arcs: list[tuple[int, int]]
    arc_lengths: list[int]
    black: list[Edge]
    red: list[Edge]
    green: list[Edge]
    hull_edges: list[Edge]


def page_part_statistics(part: Part, n: int) -> PartHull | None:
    """Hull data for one page on the circularly closed spine.

    Returns ``None`` for parts with fewer than two vertices.  With exactly two
    vertices the hull is a 2-cycle whose two arcs share one chord.
    """
    verts = part.vertices().tolist()
    if len(verts) < 2:
        return None
    arcs = list(zip(verts, verts[1:] + verts[:1]))
    lengths = [(v - u) % n or n for u, v in arcs]
    hull = sorted({Edge.of(u, v) for u, v in arcs})
    own = part.edge_set()
    black = [e for e in hull if e in own]
    red = [e for e in hull if e not in own]
    hull_set = set(hull)
    green = sorted(e for e in own if e not in hull_set)
    return PartHull(part.id, verts, arcs, lengths, black, red, green, hull)


@dataclass
class PageStatistics:
    hulls: list[PartHull]
    forward_red: np.ndarray
    forward_black: np.ndarray
    skipped: list[int]

    @property
    def R(self) -> int:
        return int(self.forward_red.sum())

    @property
    def B(self) -> int:
        return int(self.forward_black.sum())

    @property
    def incidences(self) -> int:
        return sum(len(h.vertices) for h in self.hulls)

    @property
    def red_count(self) -> int:
        return sum(len(h.red) for h in self.hulls)

    @property
    def green_count(self) -> int:
        return sum(len(h.green) for h in self.hulls)


def page_statistics(layout: Layout, require_cover: bool = True) -> PageStatistics:
    """Black/red/green classification and forward-edge counts of a book embedding."""
    _require(layout, PAGE, require_cover)
    n = layout.n
    red = np.zeros(n + 1, dtype=np.int64)
    black = np.zeros(n + 1, dtype=np.int64)
    hulls, skipped = [], []
    for part in layout.parts:
        hull = page_part_statistics(part, n)
        if hull is None:
            skipped.append(part.id)
            continue
        own = part.edge_set()
        for u, v in hull.arcs:
            if Edge.of(u, v) in own:
                black[u] += 1
            else:
                red[u] += 1
        hulls.append(hull)
    stats = PageStatistics(hulls, red[1:], black[1:], skipped)
    if stats.incidences != stats.R + stats.B:
        raise RuntimeError("vertex-page incidences differ from R + B")
    for h in hulls:
        if sum(h.arc_lengths) != n:
            raise RuntimeError(f"hull arcs of part {h.part_id} do not sum to n")
    return stats

"""Book embeddings of ``K_n``: zigzag pages, rotated local pages, and union pages.

Vertices sit on a circle in the order ``v_1, ..., v_n``; indices are taken
modulo ``n`` with representatives ``1..n``.  The length of an edge is its
shorter circular distance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


from linlay.layout import PAGE, PLAIN, UNION, Layout, LayoutError, Part, delete_trailing_vertices


def wrap(i: int, n: int) -> int:
    return (i - 1) % n + 1


def circular_length(u: int, v: int, n: int) -> int:
    d = abs(u - v) % n
    return min(d, n - d)


def _edge_key(a: int, b: int, n: int) -> int:
    if a > b:
        a, b = b, a
    return a * (n + 1) + b


# ---------------------------------------------------------------------------
# zigzag


def _zigzag_path(p: int, n: int) -> list[tuple[int, int]]:
    order = [p]
    for j in range(1, n):
        step = (j + 1) // 2 if j % 2 else -(j // 2)
        order.append(wrap(p + step, n))
    return list(zip(order, order[1:]))


def zigzag_page_layout(n: int) -> Layout:
    """``ceil(n/2)`` pages, each a zigzag Hamiltonian path of the circle."""
    if n < 1:
        raise ValueError("n must be at least 1")
    m = n + (n % 2)
    seen: set[int] = set()
    parts = []
    for p in range(1, m // 2 + 1):
        edges = []
        for u, v in _zigzag_path(p, m):
            key = _edge_key(u, v, m)
            if key not in seen:
                seen.add(key)
                edges.append((u, v))
        parts.append(Part(p - 1, edges))
    layout = Layout(m, parts, PAGE, PLAIN)
    if m != n:
        layout = delete_trailing_vertices(layout, n)
    layout.metadata = {"construction": "zigzag", "parameters": {"n": n}}
    return layout


# ---------------------------------------------------------------------------
# gadgets


@dataclass(frozen=True)
class Gadget:
    """A labelled edge pattern on absolute vertex indices (before rotation)."""

    name: str
    t: int
    vertices: dict[str, int]
    edges: tuple[tuple[str, str], ...]

    def edge_list(self, n: int) -> list[tuple[int, int]]:
        return [(wrap(self.vertices[a], n), wrap(self.vertices[b], n)) for a, b in self.edges]

    def lengths(self, n: int) -> list[int]:
        return [circular_length(u, v, n) for u, v in self.edge_list(n)]


@dataclass(frozen=True)
class RotationSchedule:
    gadget: Gadget
    offsets: tuple[int, ...]
    n: int

    def rotated(self, i: int) -> list[tuple[int, int]]:
        """The gadget turned so that ``v_1`` lands on ``v_i``."""
        return [(wrap(u + i - 1, self.n), wrap(v + i - 1, self.n)) for u, v in self.gadget.edge_list(self.n)]

    def __iter__(self):
        return (self.rotated(i) for i in self.offsets)


_LOCAL_EDGES = ("12", "23", "34", "45", "56", "61", "14", "24", "15")


def local_page_gadget(k: int, t: int) -> Gadget:
    """Outerplanar page ``O(t)`` for ``n = 18k - 3``; together the ``O(t)`` hold
    exactly one edge of every length ``1 .. 9k - 2``."""
    if k < 1 or not 0 <= t < k:
        raise ValueError(f"need k >= 1 and 0 <= t < k, got k={k}, t={t}")
    n = 18 * k - 3
    raw = {
        "r1": 1,
        "r2": 2 * k - 2 * t,
        "r3": 5 * k + 1,
        "r4": 8 * k - t,
        "r5": 8 * k + t,
        "r6": 13 * k + 2 * t,
    }
    verts = {key: wrap(v, n) for key, v in raw.items()}
    edges = [("r" + e[0], "r" + e[1]) for e in _LOCAL_EDGES]
    if t == 0:
        # r4 = r5: e45 is a loop and e15 repeats e14
        del verts["r5"]
        edges = [e for e in edges if e not in (("r4", "r5"), ("r1", "r5"))]
        edges = [("r4", "r6") if e == ("r5", "r6") else e for e in edges]
    return Gadget("O", t, verts, tuple(edges))


def _star_page(pid: int, centre: int) -> Part:
    return Part(pid, [(x, centre) for x in range(1, centre)])


def _local_page_base(k: int) -> Layout:
    n = 18 * k - 3
    parts = []
    for i in range(1, n + 1):
        for t in range(k):
            sched = RotationSchedule(local_page_gadget(k, t), (i,), n)
            parts.append(Part(len(parts), sched.rotated(i)))
    return Layout(n, parts, PAGE, PLAIN)


def _with_stars(base: Layout, n: int, kind: str, variant: str) -> Layout:
    parts = [Part(p.id, p.edges) for p in base.parts]
    nid = max((p.id for p in parts), default=-1) + 1
    for j in range(base.n + 1, n + 1):
        parts.append(_star_page(nid, j))
        nid += 1
    return Layout(n, parts, kind, variant)


def _local_base_or_empty(k: int) -> Layout:
    return _local_page_base(k) if k >= 1 else Layout(0, [], PAGE, PLAIN)


def _max_locality(layout: Layout) -> int:
    from linlay.layout import locality_profile

    return int(locality_profile(layout).max(initial=0))


def build_local_page_layout(n: int) -> Layout:
    """Plain page layout with locality at most ``n/3 + 4``.

    For ``n = 18k - 3`` the ``n k`` rotated gadget pages put every vertex in
    exactly ``6k - 1`` pages.  Other ``n`` either add one star page per extra
    vertex to the largest such size below, or delete vertices from the next
    size above; the lower maximum locality wins (stars on ties).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    k = (n + 3) // 18
    if 18 * k - 3 == n:
        layout = _local_page_base(k)
        layout.metadata = {"construction": "local-page", "parameters": {"n": n, "k": k}}
        return layout
    stars = _with_stars(_local_base_or_empty(k), n, PAGE, PLAIN)
    shrunk = delete_trailing_vertices(_local_page_base(k + 1), n)
    pick, how = (stars, "stars") if _max_locality(stars) <= _max_locality(shrunk) else (shrunk, "shrink")
    pick.metadata = {
        "construction": f"local-page/{how}",
        "parameters": {"n": n, "k": k if how == "stars" else k + 1},
    }
    return pick


# ---------------------------------------------------------------------------
# union pages


_UNION_G_EDGES = (("r1", "r2"), ("r1", "r3"), ("r1", "r4"), ("r1", "r5"), ("r2", "r3"), ("r3", "r4"), ("r4", "r5"))


def union_page_gadgets(k: int, t: int) -> tuple[Gadget, Gadget]:
    """``G(t)`` and ``H(t)`` for ``n = 18k`` (``k`` a multiple of 3)."""
    if k < 3 or k % 3 or not 0 <= t < k:
        raise ValueError(f"need k >= 3, k divisible by 3 and 0 <= t < k, got k={k}, t={t}")
    n = 18 * k
    g = {
        "r1": 1 + t,
        "r2": 8 * k + 1 - t,
        "r3": 9 * k + 1 + 2 * t,
        "r4": 12 * k - t,
        "r5": 17 * k - 2 * t,
    }
    h = {"s1": 3 * k, "s2": 8 * k + 1 + t}
    return (
        Gadget("G", t, {key: wrap(v, n) for key, v in g.items()}, _UNION_G_EDGES),
        Gadget("H", t, {key: wrap(v, n) for key, v in h.items()}, (("s1", "s2"),)),
    )


@dataclass
class _Cover:
    n: int
    seen: set[int] = field(default_factory=set)
    parts: list[Part] = field(default_factory=list)
    names: list[str] = field(default_factory=list)

    def add(self, edges: Iterable[tuple[int, int]], name: str) -> None:
        fresh = []
        for u, v in edges:
            key = _edge_key(u, v, self.n)
            if key not in self.seen:
                self.seen.add(key)
                fresh.append((u, v))
        self.parts.append(Part(len(self.parts), fresh))
        self.names.append(name)

    def missing_by_length(self) -> dict[int, list[tuple[int, int]]]:
        out: dict[int, list[tuple[int, int]]] = {}
        n = self.n
        for a in range(1, n):
            for b in range(a + 1, n + 1):
                if _edge_key(a, b, n) not in self.seen:
                    out.setdefault(circular_length(a, b, n), []).append((a, b))
        return out


def _two_page_split(edges: list[tuple[int, int]], n: int, ell: int) -> tuple[list, list]:
    """Split all edges of one length into two parts whose components are
    single edges or two-edge paths.

    The length-``ell`` edges form disjoint cycles ``v, v+ell, v+2ell, ...``;
    colour each cycle alternately, so on an odd cycle the closing edge and
    the first edge share a colour (and a vertex).
    """
    present = {_edge_key(u, v, n) for u, v in edges}
    done: set[int] = set()
    first, second = [], []
    for start in range(1, n + 1):
        if start in done:
            continue
        cyc = [start]
        v = wrap(start + ell, n)
        while v != start:
            cyc.append(v)
            v = wrap(v + ell, n)
        done.update(cyc)
        steps = list(zip(cyc, cyc[1:] + cyc[:1]))
        if len(cyc) == 2:
            steps = steps[:1]
        for j, (u, w) in enumerate(steps):
            if _edge_key(u, w, n) not in present:
                continue
            (second if j % 2 else first).append((u, w))
    return first, second


def _union_page_base(k: int) -> Layout:
    n = 18 * k
    third = n // 3
    cover = _Cover(n)
    gadgets = [union_page_gadgets(k, t) for t in range(k)]
    for i in range(1, third + 1):
        edges = []
        for j in (i, i + third, i + 2 * third):
            for g, h in gadgets:
                edges += RotationSchedule(g, (j,), n).rotated(j)
                if h.t >= 1:
                    edges += RotationSchedule(h, (j,), n).rotated(j)
        cover.add(edges, f"P{i}")
    missing = cover.missing_by_length()
    short = {ell for ell in missing if ell < k}
    long_ = {ell for ell in missing if 3 * k < ell < 4 * k}
    first, second = _two_page_split(missing.get(5 * k + 1, []), n, 5 * k + 1)
    cover.add(first, "M1")
    cover.add(second, "M2")
    for name, lengths in (("S", short), ("T", long_)):
        for i in range(1, k + 1):
            edges = []
            for j in range(18):
                c = i + j * k
                edges += [(c, wrap(c + ell, n)) for ell in sorted(lengths)]
            cover.add(edges, f"{name}{i}")
    first, second = _two_page_split(missing.get(4 * k, []), n, 4 * k)
    cover.add(first, "N1")
    cover.add(second, "N2")
    left = cover.missing_by_length()
    if left:
        raise LayoutError(f"union page construction leaves lengths {sorted(left)} uncovered")
    layout = Layout(n, cover.parts, PAGE, UNION)
    layout.metadata = {"construction": "union-page", "parameters": {"n": n, "k": k}}
    return layout


def _union_star_layout(n: int) -> Layout:
    return Layout(n, [_star_page(j - 2, j) for j in range(2, n + 1)], PAGE, UNION)


def build_union_page_layout(n: int) -> Layout:
    """Union page layout with at most ``4n/9 + 18`` parts (``4n/9 + 4`` when 54 divides n)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    m = n // 54
    if 54 * m == n:
        return _union_page_base(3 * m)
    stars = _with_stars(_union_page_base(3 * m), n, PAGE, UNION) if m else _union_star_layout(n)
    shrunk = delete_trailing_vertices(_union_page_base(3 * (m + 1)), n)
    if stars.part_count <= shrunk.part_count:
        pick, how, mm = stars, "stars", m
    else:
        pick, how, mm = shrunk, "shrink", m + 1
    pick.metadata = {"construction": f"union-page/{how}", "parameters": {"n": n, "k": 3 * mm}}
    return pick

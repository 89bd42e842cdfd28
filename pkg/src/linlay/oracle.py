"""Exhaustive search for the smallest local or union layouts of tiny ``K_n``.

Edges are assigned in lexicographic order to one of the parts opened so
far or to one new part (so part labels never get permuted).  Plain
(local) searches bound the number of parts at each vertex by ``k``; union
searches bound the total number of parts by ``k`` and check the whole
connected component an edge joins.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from itertools import combinations

from linlay.layout import PAGE, PLAIN, QUEUE, UNION, Layout, Part, edge_relation, Relation, verify_layout

log = logging.getLogger(__name__)

DEFAULT_CAPS = {PLAIN: 7, UNION: 6}
PARAMETERS = {
    "lqn": (QUEUE, PLAIN),
    "lpn": (PAGE, PLAIN),
    "uqn": (QUEUE, UNION),
    "upn": (PAGE, UNION),
}


class CapExceeded(ValueError):
    pass


def _check_cap(n: int, variant: str, cap: int | None) -> None:
    default = DEFAULT_CAPS[variant]
    limit = default if cap is None else cap
    if n > limit:
        raise CapExceeded(f"n={n} exceeds the search cap {limit} for {variant} layouts")
    if n > default:
        log.warning("exhaustive search for n=%d is above the default cap %d and may be slow", n, default)


@dataclass
class _Search:
    n: int
    k: int
    kind: str
    variant: str
    edges: list[tuple[int, int]]
    nodes: int = 0
    conflict: list[int] = field(default_factory=list)
    incident: list[int] = field(default_factory=list)

    def __post_init__(self):
        bad = Relation.NESTED if self.kind == QUEUE else Relation.CROSSING
        m = len(self.edges)
        self.conflict = [0] * m
        for i, j in combinations(range(m), 2):
            if edge_relation(self.edges[i], self.edges[j]) == bad:
                self.conflict[i] |= 1 << j
                self.conflict[j] |= 1 << i
        self.incident = [0] * (self.n + 1)
        for i, (a, b) in enumerate(self.edges):
            self.incident[a] |= 1 << i
            self.incident[b] |= 1 << i
        self.parts: list[int] = []
        self.verts: list[int] = []
        self.load = [0] * (self.n + 1)
        self.assign = [-1] * m

    def _union_ok(self, e: int, mask: int) -> bool:
        """Is the component of ``e`` in ``mask + e`` free of conflicts?"""
        comp = 1 << e
        a, b = self.edges[e]
        vs = (1 << a) | (1 << b)
        while True:
            grow = 0
            v = vs
            while v:
                low = v & -v
                grow |= self.incident[low.bit_length() - 1]
                v ^= low
            grow &= mask | comp
            if grow == comp:
                break
            comp = grow
            vs = 0
            g = comp
            while g:
                low = g & -g
                x, y = self.edges[low.bit_length() - 1]
                vs |= (1 << x) | (1 << y)
                g ^= low
        g = comp
        while g:
            low = g & -g
            if self.conflict[low.bit_length() - 1] & comp:
                return False
            g ^= low
        return True

    def _fits(self, e: int, p: int) -> bool:
        if self.variant == PLAIN:
            return not (self.conflict[e] & self.parts[p])
        return self._union_ok(e, self.parts[p])

    def _place(self, e: int, p: int) -> list[int]:
        a, b = self.edges[e]
        raised = []
        for v in (a, b):
            if not (self.verts[p] >> v) & 1:
                self.load[v] += 1
                raised.append(v)
        self.parts[p] |= 1 << e
        self.verts[p] |= (1 << a) | (1 << b)
        self.assign[e] = p
        return raised

    def _unplace(self, e: int, p: int, raised: list[int]) -> None:
        for v in raised:
            self.load[v] -= 1
            self.verts[p] &= ~(1 << v)
        self.parts[p] &= ~(1 << e)
        self.assign[e] = -1

    def _room(self, e: int, p: int) -> bool:
        if self.variant != PLAIN:
            return True
        a, b = self.edges[e]
        return all((self.verts[p] >> v) & 1 or self.load[v] < self.k for v in (a, b))

    def run(self, e: int = 0) -> bool:
        self.nodes += 1
        if e == len(self.edges):
            return True
        for p in range(len(self.parts)):
            if self._room(e, p) and self._fits(e, p):
                raised = self._place(e, p)
                if self.run(e + 1):
                    return True
                self._unplace(e, p, raised)
        can_open = len(self.parts) < self.k if self.variant == UNION else True
        a, b = self.edges[e]
        if can_open and (self.variant == UNION or (self.load[a] < self.k and self.load[b] < self.k)):
            self.parts.append(0)
            self.verts.append(0)
            p = len(self.parts) - 1
            raised = self._place(e, p)
            if self.run(e + 1):
                return True
            self._unplace(e, p, raised)
            self.parts.pop()
            self.verts.pop()
        return False

    def witness(self) -> Layout:
        groups: dict[int, list[tuple[int, int]]] = {}
        for e, p in enumerate(self.assign):
            groups.setdefault(p, []).append(self.edges[e])
        parts = [Part(p, groups[p]) for p in sorted(groups)]
        return Layout(self.n, parts, self.kind, self.variant, {"construction": "oracle"})


def _edges(n: int, reverse: bool) -> list[tuple[int, int]]:
    edges = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    return edges[::-1] if reverse else edges


def exists_k_local_layout(
    n: int, k: int, kind: str, variant: str = PLAIN, cap: int | None = None, reverse: bool = False
) -> tuple[bool, Layout | None]:
    """Decide whether ``K_n`` has a layout of the given kind with parameter ``k``.

    For ``variant="plain"`` that means locality at most ``k``; for
    ``variant="union"`` at most ``k`` union parts.
    """
    _check_cap(n, variant, cap)
    if k < 0:
        raise ValueError("k must be non-negative")
    s = _Search(n, k, kind, variant, _edges(n, reverse))
    found = s.run()
    return found, (s.witness() if found else None)


@dataclass
class ExactResult:
    n: int
    parameter: str
    value: int
    witness: Layout
    nodes: int
    seconds: float
    refuted: int | None = None


def exact_number(n: int, parameter: str, cap: int | None = None) -> ExactResult:
    if parameter not in PARAMETERS:
        raise ValueError(f"unknown parameter {parameter!r}")
    kind, variant = PARAMETERS[parameter]
    _check_cap(n, variant, cap)
    t0 = time.perf_counter()
    nodes = 0
    k = 0
    while True:
        s = _Search(n, k, kind, variant, _edges(n, False))
        ok = s.run()
        nodes += s.nodes
        if ok:
            break
        k += 1
    witness = s.witness()
    report = verify_layout(witness)
    value_ok = report.max_locality <= k if variant == PLAIN else report.part_count <= k
    if not (report.ok and value_ok):
        raise AssertionError(f"oracle witness for {parameter}(K_{n}) fails verification")
    refuted = None
    if k > 0:
        again = _Search(n, k - 1, kind, variant, _edges(n, True))
        if again.run():
            raise AssertionError(f"reversed search disagrees on {parameter}(K_{n}) <= {k - 1}")
        nodes += again.nodes
        refuted = k - 1
    return ExactResult(n, parameter, k, witness, nodes, time.perf_counter() - t0, refuted)

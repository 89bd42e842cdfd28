"""Partition a graph into the fewest forests, and forests into star forests.

Forests are grown one edge at a time.  An edge that closes a cycle in every
current forest triggers a breadth-first search for an exchange sequence
(the matroid-partition augmenting path); a new forest is opened only when
no such sequence exists, which makes the count equal to the arboricity.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from linlay.layout import Edge


class _Forest:
    def __init__(self):
        self.adj: dict[int, set[int]] = {}
        # union-find over the forest's components; rebuilt after removals
        self.parent: dict[int, int] = {}
        self.dirty = False

    def _find(self, x: int) -> int:
        parent = self.parent
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def _rebuild(self) -> None:
        self.parent = {}
        for u, nb in self.adj.items():
            for v in nb:
                if u < v:
                    self.parent[self._find(u)] = self._find(v)
        self.dirty = False

    def connected(self, u: int, v: int) -> bool:
        if self.dirty:
            self._rebuild()
        return self._find(u) == self._find(v)

    def add(self, e: Edge) -> None:
        self.adj.setdefault(e.a, set()).add(e.b)
        self.adj.setdefault(e.b, set()).add(e.a)
        if not self.dirty:
            self.parent[self._find(e.a)] = self._find(e.b)

    def remove(self, e: Edge) -> None:
        self.adj[e.a].discard(e.b)
        self.adj[e.b].discard(e.a)
        self.dirty = True

    def path(self, u: int, v: int) -> list[Edge] | None:
        """Edges of the tree path from ``u`` to ``v``, or None if disconnected.

        Grows breadth-first searches from both ends, always the smaller one.
        """
        if u not in self.adj or v not in self.adj:
            return None
        if u == v:
            return []
        prev = ({u: u}, {v: v})
        level = ([u], [v])
        meet = None
        while level[0] and level[1] and meet is None:
            side = 0 if len(level[0]) <= len(level[1]) else 1
            mine, other = prev[side], prev[1 - side]
            nxt = []
            for x in level[side]:
                for y in self.adj[x]:
                    if y not in mine:
                        mine[y] = x
                        if y in other:
                            meet = y
                            break
                        nxt.append(y)
                if meet is not None:
                    break
            level = (nxt, level[1]) if side == 0 else (level[0], nxt)
        if meet is None:
            return None
        out = []
        for side in (0, 1):
            x = meet
            while prev[side][x] != x:
                out.append(Edge.of(x, prev[side][x]))
                x = prev[side][x]
        return out

    def edges(self) -> list[Edge]:
        return sorted({Edge.of(u, v) for u, nb in self.adj.items() for v in nb})


@dataclass
class ForestPartition:
    forests: list[list[Edge]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.forests)


def is_forest(edges: Iterable[Sequence[int]]) -> bool:
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def _augment(forests: list[_Forest], home: dict[Edge, int], e0: Edge) -> bool:
    label: dict[Edge, tuple[Edge, int]] = {}
    todo = deque([e0])
    seen = {e0}
    while todo:
        e = todo.popleft()
        others = [i for i in range(len(forests)) if home.get(e) != i]
        free = next((i for i in others if not forests[i].connected(e.a, e.b)), None)
        if free is not None:
            # e fits into a forest; replay the exchanges back to e0
            cur, target = e, free
            while True:
                if cur in home:
                    forests[home[cur]].remove(cur)
                forests[target].add(cur)
                home[cur] = target
                if cur == e0:
                    return True
                cur, target = label[cur]
        for i in others:
            for g in forests[i].path(e.a, e.b):
                if g not in seen:
                    seen.add(g)
                    # g leaves forest i to make room for e
                    label[g] = (e, i)
                    todo.append(g)
    return False


def forest_partition(edges: Iterable[Sequence[int]]) -> ForestPartition:
    """Split a simple graph into the minimum number of forests."""
    forests: list[_Forest] = []
    home: dict[Edge, int] = {}
    for raw in edges:
        e = Edge.of(*raw)
        if e.a == e.b:
            raise ValueError(f"loop {tuple(raw)}")
        if e in home:
            raise ValueError(f"duplicate edge {tuple(e)}")
        if not _augment(forests, home, e):
            forests.append(_Forest())
            forests[-1].add(e)
            home[e] = len(forests) - 1
    out = [f.edges() for f in forests]
    for f in out:
        if not is_forest(f):
            raise AssertionError("forest partition produced a cycle")
    return ForestPartition(out)


def is_star_forest(edges: Iterable[Sequence[int]]) -> bool:
    """Every edge has an endpoint of degree one (and no edge repeats)."""
    edges = [Edge.of(*e) for e in edges]
    if len(set(edges)) != len(edges):
        return False
    deg: dict[int, int] = {}
    for a, b in edges:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    return all(deg[a] == 1 or deg[b] == 1 for a, b in edges)


def split_forest_into_star_forests(
    forest: Iterable[Sequence[int]], roots: Iterable[int] | None = None
) -> tuple[list[Edge], list[Edge]]:
    """Two star forests: edges hanging below even depth, and below odd depth.

    Each tree is rooted at a vertex from ``roots`` when one lies in it, else
    at a vertex of maximum degree (smallest label on ties).
    """
    edges = [Edge.of(*e) for e in forest]
    if not is_forest(edges):
        raise ValueError("input contains a cycle")
    adj: dict[int, list[int]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    preferred = list(roots or [])
    by_degree = sorted(adj, key=lambda v: (-len(adj[v]), v))
    depth: dict[int, int] = {}
    parts: tuple[list[Edge], list[Edge]] = ([], [])
    for r in [v for v in preferred if v in adj] + by_degree:
        if r in depth:
            continue
        depth[r] = 0
        todo = deque([r])
        while todo:
            x = todo.popleft()
            for y in adj[x]:
                if y not in depth:
                    depth[y] = depth[x] + 1
                    parts[depth[x] % 2].append(Edge.of(x, y))
                    todo.append(y)
    return sorted(parts[0]), sorted(parts[1])

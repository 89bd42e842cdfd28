"""Merge flat-cover chains into ``k + 6`` union chains plus a set of bad points.

Group ``i`` starts with ``L_i``.  Straight chains are coloured greedily
with colours ``k + 6`` down to ``2`` so that chains sharing a colour have
disjoint intervals, never use their own line as colour and lie strictly
below (left of) the colour.  Inside a group a hook met by several chains
is assigned to the straight chain running along it; the points of other
chains on that hook are bad and are handed to the star-forest cover.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np

from linlay.layout import LayoutError
from linlay.queues.flat import HORIZONTAL, LONG, VERTICAL, ChainFamily
from linlay.triangle import Chain, points_to_edges

EXTRA_GROUPS = 6


@dataclass
class ChainGroup:
    index: int
    members: list[Chain] = field(default_factory=list)
    intervals: list[tuple[int, int]] = field(default_factory=list)
    merged: list[Chain] = field(default_factory=list)
    bad_mask: list[np.ndarray] = field(default_factory=list)

    def union_points(self, drop_bad: bool = True) -> np.ndarray:
        parts = [
            c.points[~m] if drop_bad else c.points for c, m in zip(self.merged, self.bad_mask)
        ]
        return np.concatenate(parts) if parts else np.empty((0, 2), dtype=np.int64)

    def union_chain(self) -> Chain:
        return Chain(self.union_points(), "S", (self.index,))


@dataclass
class BadPointSet:
    n: int
    points: np.ndarray
    # hook vertex blamed for each point; its edge is oriented away from it
    tails: np.ndarray
    # (group, merged chain position) of the chain owning that hook
    causes: list[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.points)

    def edges(self) -> np.ndarray:
        return points_to_edges(self.points, self.n)

    def oriented_edges(self) -> np.ndarray:
        e = self.edges()
        heads = np.where(e[:, 0] == self.tails, e[:, 1], e[:, 0])
        return np.stack([self.tails, heads], axis=1)

    def out_degree(self) -> np.ndarray:
        return np.bincount(self.tails, minlength=self.n + 2)[1:]

    def per_chain(self) -> dict[tuple[int, int], int]:
        counts: dict[tuple[int, int], int] = defaultdict(int)
        for c in self.causes:
            counts[c] += 1
        return dict(counts)


def _interval(c: Chain) -> tuple[int, int, int]:
    o = c.meta["orientation"]
    line_axis, span_axis = (0, 1) if o == VERTICAL else (1, 0)
    lines = np.unique(c.points[:, line_axis])
    if len(lines) != 1:
        raise LayoutError(f"{c!r} is not straight")
    span = c.points[:, span_axis]
    lo, hi = int(span.min()), int(span.max())
    if hi - lo + 1 != len(span):
        raise LayoutError(f"{c!r} has a gap")
    return lo, hi, int(lines[0])


def _colour(chains: list[Chain], k: int) -> list[tuple[int, Chain, tuple[int, int]]]:
    items = [(*_interval(c), c) for c in chains]
    items.sort(key=lambda it: (-it[1], -it[0]))
    done: list[tuple[int, int, int]] = []
    out = []
    for lo, hi, line, c in items:
        used = {col for (a, b, col) in done if not (b < lo or hi < a)}
        col = next((x for x in range(k + EXTRA_GROUPS, 1, -1) if x not in used and x != line), None)
        if col is None or col <= hi:
            raise LayoutError(f"interval colouring failed for {c!r}")
        done.append((lo, hi, col))
        out.append((col, c, (lo, hi)))
    return out


def _hook_ids(points: np.ndarray, n: int) -> np.ndarray:
    return np.stack([points[:, 0], n + 2 - points[:, 1]], axis=1)


def _owned_hook(c: Chain, n: int) -> int | None:
    o = c.meta["orientation"]
    if o == VERTICAL:
        return int(c.meta["line"])
    if o == HORIZONTAL:
        return n + 2 - int(c.meta["line"])
    return None


def group_chains(families: list[ChainFamily], n: int) -> tuple[list[ChainGroup], BadPointSet]:
    longs = [c for f in families if f.orientation == LONG for c in f.chains]
    k = len(longs)
    groups = {i: ChainGroup(i) for i in range(1, k + EXTRA_GROUPS + 1)}
    for c in longs:
        groups[c.index[0]].members.append(c)
        groups[c.index[0]].intervals.append((0, 0))
    for orient in (VERTICAL, HORIZONTAL):
        chains = [c for f in families if f.orientation == orient for c in f.chains]
        for col, c, iv in _colour(chains, k):
            groups[col].members.append(c)
            groups[col].intervals.append(iv)

    bad_pts, tails, causes = [], [], []
    for g in groups.values():
        merged: dict[tuple, list[Chain]] = {}
        for c in g.members:
            merged.setdefault((c.meta["orientation"], c.meta["line"]), []).append(c)
        g.merged = [
            Chain(np.concatenate([c.points for c in cs]), cs[0].family, cs[0].index,
                  {"orientation": key[0], "line": key[1], "sources": [(c.family, c.index) for c in cs]})
            for key, cs in merged.items()
        ]
        touch = np.zeros(n + 3, dtype=np.int64)
        for c in g.merged:
            touch[np.unique(_hook_ids(c.points, n))] += 1
        common = touch >= 2
        owner = np.full(n + 3, -1, dtype=np.int64)
        for idx, c in enumerate(g.merged):
            h = _owned_hook(c, n)
            if h is not None and common[h]:
                owner[h] = idx
        for idx, c in enumerate(g.merged):
            hx = c.points[:, 0]
            hy = n + 2 - c.points[:, 1]
            bx = common[hx] & (owner[hx] != idx)
            by = common[hy] & (owner[hy] != idx)
            mask = bx | by
            blamed = np.where(bx, hx, hy)[mask]
            bad_pts.append(c.points[mask])
            tails.append(blamed)
            causes.extend((g.index, int(owner[h])) for h in blamed)
            g.bad_mask.append(mask)
    bad = BadPointSet(
        n,
        np.concatenate(bad_pts) if bad_pts else np.empty((0, 2), dtype=np.int64),
        np.concatenate(tails) if tails else np.empty(0, dtype=np.int64),
        causes,
    )
    return [groups[i] for i in sorted(groups)], bad


"""Recursive chain cover of ``T_n`` with every hook meeting at most ``k + 1`` chains.

One level places ``k`` three-block chains ``A`` along the outer diagonal,
then (when ``n >= 3k``) two families ``B`` and ``C`` of ``n - 3k`` chains
each; what remains is exactly the corner ``T_{4k-n}``, covered recursively.
Small triangles (``n <= 8``) are covered by nested elbows.
"""

from __future__ import annotations

import numpy as np

from linlay.bounds import ceil_queue_coefficient
from linlay.layout import Layout, LayoutError
from linlay.queues.elbow import elbow_chains
from linlay.triangle import Chain, chains_to_queue_layout

BASE_SIZE = 8


def _column(x: int, y0: int, y1: int) -> np.ndarray:
    ys = np.arange(y0, y1 + 1)
    return np.stack([np.full_like(ys, x), ys], axis=1)


def _row(y: int, x0: int, x1: int) -> np.ndarray:
    xs = np.arange(x0, x1 + 1)
    return np.stack([xs, np.full_like(xs, y)], axis=1)


def _antidiagonal_band(s: int, lo: int, n: int, halfwidth: int | None = None) -> np.ndarray:
    """Points with ``x + y`` in ``{s, s+1}``, both coordinates ``>= lo``."""
    out = []
    for total in (s, s + 1):
        xs = np.arange(lo, total - lo + 1)
        pts = np.stack([xs, total - xs], axis=1)
        if halfwidth is not None:
            pts = pts[np.abs(pts[:, 1] - pts[:, 0]) <= halfwidth]
        out.append(pts)
    pts = np.concatenate(out)
    return pts[(pts[:, 0] + pts[:, 1] <= n + 1) & (pts.min(axis=1) >= 1)]


def _level(n: int, k: int, depth: int) -> tuple[list[Chain], int]:
    """Chains of one recursion level and the size of the uncovered corner."""
    chains = []
    for al in range(1, k + 1):
        pts = np.concatenate(
            [
                _column(al, n - 2 * k + al, n + 1 - al),
                _antidiagonal_band(n - 2 * (k - al), al, n),
                _row(al, n - 2 * k + al, n + 1 - al),
            ]
        )
        chains.append(Chain(pts, "A", (depth, al)))
    if n < 3 * k:
        return chains, n - 2 * k
    for be in range(1, n - 3 * k + 1):
        r = n + 1 - 2 * k - be
        chains.append(Chain(np.concatenate([_row(r, 1, be), _column(r, 1, be)]), "B", (depth, be)))
    for ga in range(1, n - 3 * k + 1):
        r = k + 1 - ga
        lc = n - 3 * k + 2 - ga
        band = _antidiagonal_band(n - 2 * k + 2 - 2 * ga, 1, n, halfwidth=4 * k - n - 1)
        pts = np.concatenate([_row(r, 1, lc), _column(r, 1, lc), band])
        chains.append(Chain(pts, "C", (depth, ga)))
    return chains, 4 * k - n


def _check_corner(chains: list[Chain], n: int, corner: int) -> None:
    grid = np.zeros((n + 2, n + 2), dtype=np.int64)
    for c in chains:
        np.add.at(grid, (c.points[:, 0], c.points[:, 1]), 1)
    if grid.max(initial=0) > 1:
        raise LayoutError(f"recursive level for T_{n} covers a point twice")
    xs, ys = np.meshgrid(np.arange(n + 2), np.arange(n + 2), indexing="ij")
    inside = (xs >= 1) & (ys >= 1) & (xs + ys <= n + 1)
    expected_free = inside & (xs + ys <= corner + 1)
    if not np.array_equal(inside & (grid == 0), expected_free):
        raise LayoutError(f"uncovered region of T_{n} is not the corner T_{corner}")


def _cover(n: int, k: int | None, depth: int) -> list[Chain]:
    if n <= BASE_SIZE:
        return elbow_chains(n, "elbow") if n > 0 else []
    kmin = ceil_queue_coefficient(n + 1)
    if k is None:
        k = kmin
    elif k < kmin:
        raise ValueError(f"k={k} is below the minimum {kmin} for T_{n}")
    if 2 * k > n:
        raise ValueError(f"k={k} is too large for T_{n}")
    chains, corner = _level(n, k, depth)
    if n >= 3 * k:
        _check_corner(chains, n, corner)
        return chains + _cover(corner, None, depth + 1)
    return chains + [Chain(c.points, "elbow", (depth + 1, *c.index)) for c in elbow_chains(corner)]


def build_recursive_chain_cover(n: int, k: int | None = None) -> list[Chain]:
    """Partition ``T_n`` into chains; every hook meets at most ``k + 1`` of them.

    ``k`` defaults to ``ceil((1 - 1/sqrt 2)(n + 1))``; smaller values raise.
    Deeper levels always use their own default.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return _cover(n, k, 0)


def build_local_queue_layout(n: int) -> Layout:
    """Plain queue layout of ``K_n`` with locality at most ``ceil((1 - 1/sqrt 2) n) + 1``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    chains = build_recursive_chain_cover(n - 1)
    layout = chains_to_queue_layout(chains, n - 1)
    layout.metadata = {
        "construction": "local-queue",
        "parameters": {"n": n, "k": ceil_queue_coefficient(n)},
        "bound_budget": ceil_queue_coefficient(n) + 1,
    }
    return layout

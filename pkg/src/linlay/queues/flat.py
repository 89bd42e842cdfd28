"""Flat chain cover of ``T_n`` whose hooks each meet at most ``k + 9`` chains.

Outside the ``k`` long three-block chains ``L_i`` only straight chains are
used: vertical pieces of single columns (families A to G) and their mirror
images (A' to G') as horizontal pieces of single rows.  With
``a = n - 3k``, ``w = (4k - n)/2`` and ``q = n/2 - k`` the bottom-left
``q x q`` square is covered by A, B, C, D and their mirrors, and the two
triangles above and right of it by E, F, G and mirrors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from linlay.bounds import ceil_queue_coefficient
from linlay.layout import LayoutError
from linlay.queues.recursive import _antidiagonal_band, _column, _row
from linlay.triangle import Chain, triangle_size

VERTICAL = "vertical"
HORIZONTAL = "horizontal"
LONG = "long"

FAMILY_ORDER = ("L", "A", "B", "C", "D", "E", "F", "G")


@dataclass
class ChainFamily:
    tag: str
    orientation: str
    chains: list[Chain] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.chains)


def _ceil(q: Fraction) -> int:
    return math.ceil(q)


def _floor(q: Fraction) -> int:
    return math.floor(q)


def _col(x: int, y0: int, y1: int) -> np.ndarray:
    return _column(x, max(y0, 1), y1)


def _long_chains(n: int, k: int) -> list[Chain]:
    out = []
    for i in range(1, k + 1):
        pts = np.concatenate(
            [
                _column(i, n - 2 * k + i, n + 1 - i),
                _antidiagonal_band(n - 2 * (k - i), i, n),
                _row(i, n - 2 * k + i, n + 1 - i),
            ]
        )
        out.append(Chain(pts, "L", (i,), {"orientation": LONG, "line": i}))
    return out


def _vertical(tag: str, i: int, x: int, y0: int, y1: int) -> Chain:
    return Chain(_col(x, y0, y1), tag, (i,), {"orientation": VERTICAL, "line": x})


def _vertical_families(n: int, k: int) -> dict[str, list[Chain]]:
    a = n - 3 * k
    w = (4 * k - n) // 2
    q = n // 2 - k
    h = a // 2
    fam: dict[str, list[Chain]] = {t: [] for t in FAMILY_ORDER[1:]}

    for i in range(1, a + 1):
        fam["A"].append(_vertical("A", i, i, i, min(a, h + i - 1)))
        fam["A"].append(_vertical("A^", i, i, 1, i - h))

    if a > 0:
        s = Fraction(a, w)
        for i in range(1, w + 1):
            fam["B"].append(_vertical("B", i, a + i, _floor(s * i), min(a, _ceil(s * i) + a - w)))
            fam["B"].append(_vertical("B^", i, a + i, 1, _ceil(s * i) - w))

        # C fills what B leaves of the rectangle a < x <= q, y <= a, reflected
        # into columns 1..a; each row leaves at most two runs.
        covered = np.zeros((q + 2, a + 2), dtype=bool)
        for c in fam["B"]:
            if len(c):
                covered[c.points[:, 0], c.points[:, 1]] = True
        for y in range(1, a + 1):
            free = np.flatnonzero(~covered[a + 1 : q + 1, y]) + a + 1
            if len(free) == 0:
                continue
            runs = np.split(free, np.flatnonzero(np.diff(free) > 1) + 1)
            if len(runs) > 2:
                raise LayoutError(f"row {y} of the square leaves {len(runs)} runs")
            for r in runs:
                tag = "C^" if len(runs) == 2 and r[0] == a + 1 else "C"
                fam["C"].append(_vertical(tag, y, y, int(r[0]), int(r[-1])))

    for i in range(1, w + 1):
        fam["D"].append(_vertical("D", i, a + i, a + 1, a + i))
        fam["E"].append(_vertical("E", i, a + i, q + 1, k - i + 1))
        fam["F"].append(_vertical("F", i, q + i, 1, a))
    for j in range(1, a + 1):
        fam["G"].append(_vertical("G", j, k + j, 1, a - j + 1))
    return fam


def _mirror(c: Chain) -> Chain:
    meta = dict(c.meta, orientation=HORIZONTAL)
    return Chain(c.points[:, ::-1], c.family + "'", c.index, meta)


def _check_parameters(n: int, k: int, strict: bool) -> None:
    if n % 2 or k % 2:
        raise ValueError(f"flat cover needs even n and k, got n={n}, k={k}")
    if not 3 * k <= n < 4 * k:
        raise ValueError(f"flat cover needs 3k <= n < 4k, got n={n}, k={k}")
    if strict:
        if 3 * n < 10 * k:
            raise ValueError(f"flat cover needs 3n >= 10k, got n={n}, k={k}")
        if k < ceil_queue_coefficient(n + 1):
            raise ValueError(f"k={k} is below (1 - 1/sqrt 2)(n + 1) for n={n}")


def build_flat_chain_cover(n: int, k: int, strict: bool = True) -> list[ChainFamily]:
    """Families L, A..G, A'..G' partitioning ``T_n``.

    Points covered by two chains go to the earliest family in the order
    L, A, ..., G, A', ..., G' and, inside a family, to the earlier chain;
    chains left empty are dropped.  ``strict=False`` skips the
    ``3n >= 10k`` and ``k >= (1 - 1/sqrt 2)(n + 1)`` requirements.
    """
    _check_parameters(n, k, strict)
    vert = _vertical_families(n, k)
    raw: list[ChainFamily] = [ChainFamily("L", LONG, _long_chains(n, k))]
    raw += [ChainFamily(t, VERTICAL, vert[t]) for t in FAMILY_ORDER[1:]]
    raw += [ChainFamily(t + "'", HORIZONTAL, [_mirror(c) for c in vert[t]]) for t in FAMILY_ORDER[1:]]

    taken = np.zeros((n + 2, n + 2), dtype=bool)
    out = []
    for fam in raw:
        kept = []
        for c in fam.chains:
            if len(c) == 0:
                continue
            pts = c.points
            if pts.min() < 1 or np.any(pts[:, 0] + pts[:, 1] > n + 1):
                raise LayoutError(f"{c!r} leaves T_{n}")
            fresh = ~taken[pts[:, 0], pts[:, 1]]
            if not fresh.any():
                continue
            taken[pts[fresh, 0], pts[fresh, 1]] = True
            kept.append(Chain(pts[fresh], c.family, c.index, c.meta) if not fresh.all() else c)
        out.append(ChainFamily(fam.tag, fam.orientation, kept))
    total = int(taken.sum())
    if total != triangle_size(n):
        raise LayoutError(f"flat cover leaves {triangle_size(n) - total} points of T_{n} uncovered")
    return out


def flatten(families: list[ChainFamily]) -> list[Chain]:
    return [c for fam in families for c in fam.chains]

"""Closed-form lower and upper bounds for the layout numbers of ``K_n``."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction

C_QUEUE = 1 - 1 / math.sqrt(2)
_QUEUE_LB_OFFSET = (9 - 4 * math.sqrt(2)) / 16


def ceil_queue_coefficient(m: int) -> int:
    """Exact ``ceil((1 - 1/sqrt 2) * m)`` for integers ``m >= 0``.

    ``m / sqrt 2`` is irrational for ``m > 0``, so the ceiling equals
    ``m - floor(m / sqrt 2) = m - isqrt(m*m // 2)``.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    return m - math.isqrt(m * m // 2)


def smallest_even_at_least_queue_coefficient(m: int) -> int:
    k = ceil_queue_coefficient(m)
    return k + (k & 1)


def strict_to_integer_lower(x: float) -> int:
    """Smallest integer strictly greater than ``x``."""
    return math.floor(x) + 1


def lqn_lower(n: int) -> float:
    return C_QUEUE * n - _QUEUE_LB_OFFSET


def lqn_upper(n: int) -> int:
    return ceil_queue_coefficient(n) + 1


def uqn_upper(n: int) -> int:
    return ceil_queue_coefficient(n + 1) + 42


def lpn_lower(n: int) -> Fraction:
    return Fraction(n, 3) - 1


def lpn_upper(n: int) -> Fraction:
    return Fraction(n, 3) + 4


def upn_upper(n: int) -> Fraction:
    return Fraction(4 * n, 9) + 18


def density_lower(n: int) -> Fraction:
    return Fraction(n - 1, 4)


@dataclass(frozen=True)
class BoundTable:
    n: int
    lqn_lower: float
    lqn_lower_int: int
    lqn_upper: int
    uqn_upper: int
    lpn_lower: float
    lpn_lower_int: int
    lpn_upper: float
    upn_upper: float
    qn: int
    pn: int
    density_lower: float

    def as_dict(self) -> dict:
        return asdict(self)


def evaluate_bounds(n: int) -> BoundTable:
    if n < 1:
        raise ValueError("n must be at least 1")
    lq = lqn_lower(n)
    lp = lpn_lower(n)
    return BoundTable(
        n=n,
        lqn_lower=lq,
        lqn_lower_int=max(strict_to_integer_lower(lq), 0),
        lqn_upper=lqn_upper(n),
        uqn_upper=uqn_upper(n),
        lpn_lower=float(lp),
        # floor(Fraction) is exact, so n/3 - 1 with n = 3j gives j exactly
        lpn_lower_int=max(math.floor(lp) + 1, 0),
        lpn_upper=float(lpn_upper(n)),
        upn_upper=float(upn_upper(n)),
        qn=n // 2,
        pn=(n + 1) // 2,
        density_lower=float(density_lower(n)),
    )

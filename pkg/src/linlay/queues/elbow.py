"""Nested elbows: the ``floor(n/2)``-queue layout of ``K_n``."""

from __future__ import annotations

import numpy as np

from linlay.layout import Layout
from linlay.triangle import Chain, chains_to_queue_layout


def elbow_points(i: int, m: int) -> np.ndarray:
    """Elbow ``i`` of ``T_m``: column ``i`` and row ``i`` from the diagonal outwards."""
    col = np.arange(i, m + 2 - i)
    row = np.arange(i + 1, m + 2 - i)
    return np.concatenate(
        [np.stack([np.full_like(col, i), col], axis=1), np.stack([row, np.full_like(row, i)], axis=1)]
    )


def elbow_chains(m: int, family: str = "elbow") -> list[Chain]:
    return [Chain(elbow_points(i, m), family, (i,)) for i in range(1, (m + 1) // 2 + 1)]


def elbow_queue_layout(n: int) -> Layout:
    if n < 1:
        raise ValueError("n must be at least 1")
    layout = chains_to_queue_layout(elbow_chains(n - 1), n - 1)
    layout.metadata = {"construction": "elbow", "parameters": {"n": n}}
    return layout

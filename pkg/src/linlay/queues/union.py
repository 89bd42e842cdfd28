"""Union queue layouts of ``K_n`` with at most ``ceil((1 - 1/sqrt 2)(n + 1)) + 42`` parts."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from linlay.bounds import smallest_even_at_least_queue_coefficient, uqn_upper
from linlay.layout import QUEUE, UNION, Layout, LayoutError, Part, delete_trailing_vertices, shift_vertices
from linlay.queues.elbow import elbow_queue_layout
from linlay.queues.flat import ChainFamily, build_flat_chain_cover
from linlay.queues.forests import forest_partition, split_forest_into_star_forests
from linlay.queues.grouping import BadPointSet, ChainGroup, group_chains
from linlay.triangle import points_to_edges

log = logging.getLogger(__name__)

ELBOW_LIMIT = 56
# the flat cover gives k + 6 groups and at most 34 star forests
FLAT_OVERHEAD = 40
ATTACH_OVERHEAD = 2
SEARCH_ABOVE = 40
SEARCH_BELOW = 4


def cover_bad_points(bad: BadPointSet, n: int | None = None) -> list[Part]:
    """Star forests (each both a union queue and a union page) covering the bad edges."""
    if len(bad) == 0:
        return []
    parts = []
    for forest in forest_partition(bad.edges().tolist()).forests:
        for stars in split_forest_into_star_forests(forest):
            if stars:
                parts.append(Part(len(parts), stars))
    return parts


@dataclass(frozen=True)
class FlatPlan:
    m: int
    k: int
    left: int = 0
    right: int = 0

    @property
    def predicted_parts(self) -> int:
        extra = ATTACH_OVERHEAD if self.left or self.right else 0
        return self.k + FLAT_OVERHEAD + extra


def _flat_ok(m: int, k: int) -> bool:
    return m % 2 == 0 and 3 * k <= m < 4 * k and 3 * m >= 10 * k


def plan_union_queue(n: int) -> FlatPlan | None:
    """Pick the triangle size used for ``K_n``, or None when no flat cover fits.

    First a triangle ``T_m`` with ``m + 1 >= n`` (then trailing vertices are
    deleted); else a slightly smaller one with up to two vertices attached at
    each end.
    """
    budget = uqn_upper(n)
    for m in range(n - 1, n + SEARCH_ABOVE):
        k = smallest_even_at_least_queue_coefficient(m + 1)
        if _flat_ok(m, k) and k + FLAT_OVERHEAD <= budget:
            return FlatPlan(m, k)
    for m in range(n - 2, n - 2 - SEARCH_BELOW, -1):
        k = smallest_even_at_least_queue_coefficient(m + 1)
        missing = n - (m + 1)
        if 0 < missing <= 4 and _flat_ok(m, k) and k + FLAT_OVERHEAD + ATTACH_OVERHEAD <= budget:
            return FlatPlan(m, k, (missing + 1) // 2, missing // 2)
    return None


@dataclass
class UnionQueueBuild:
    """A union queue layout together with the pieces it was assembled from."""

    layout: Layout
    plan: FlatPlan | None = None
    families: list[ChainFamily] | None = None
    groups: list[ChainGroup] | None = None
    bad: BadPointSet | None = None
    stars: list[Part] | None = None


def flat_union_queue_layout(m: int, k: int) -> UnionQueueBuild:
    """Union queue layout of ``K_{m+1}`` from the flat cover of ``T_m``."""
    families = build_flat_chain_cover(m, k)
    groups, bad = group_chains(families, m)
    parts = [Part(g.index - 1, points_to_edges(g.union_points(), m)) for g in groups]
    base = len(parts)
    stars = cover_bad_points(bad, m)
    parts += [Part(base + p.id, p.edges) for p in stars]
    layout = Layout(m + 1, parts, QUEUE, UNION)
    layout.metadata = {
        "groups": len(groups),
        "bad_points": len(bad),
        "star_forests": len(stars),
        "max_bad_per_chain": max(bad.per_chain().values(), default=0),
        "max_out_degree": int(bad.out_degree().max(initial=0)),
    }
    return UnionQueueBuild(layout, FlatPlan(m, k), families, groups, bad, stars)


def _attach(layout: Layout, left: int, right: int, n: int) -> Layout:
    """Put ``left`` new vertices before and ``right`` after, covering their edges in two parts."""
    inner = shift_vertices(layout, left, n)
    new = set(range(1, left + 1)) | set(range(n - right + 1, n + 1))
    first = {1, n} & new
    second = ({2} if left >= 2 else set()) | ({n - 1} if right >= 2 else set())
    q1 = [(a, b) for a in range(1, n) for b in range(a + 1, n + 1) if a in first or b in first]
    q2 = [
        (a, b)
        for a in range(1, n)
        for b in range(a + 1, n + 1)
        if (a in second or b in second) and not (a in first or b in first)
    ]
    nid = max((p.id for p in inner.parts), default=-1) + 1
    parts = list(inner.parts) + [Part(nid, q1), Part(nid + 1, q2)]
    return Layout(n, parts, QUEUE, UNION, dict(layout.metadata))


def build_union_queue_detailed(n: int) -> UnionQueueBuild:
    if n < 1:
        raise ValueError("n must be at least 1")
    budget = uqn_upper(n)
    plan = plan_union_queue(n) if n > ELBOW_LIMIT else None
    if plan is None:
        if n // 2 > budget:
            raise LayoutError(f"no union queue construction for n={n} fits the budget {budget}")
        base = elbow_queue_layout(n)
        layout = Layout(n, base.parts, QUEUE, UNION)
        layout.metadata = {"construction": "union-queue/elbow", "parameters": {"n": n}, "bound_budget": budget}
        return UnionQueueBuild(layout)
    build = flat_union_queue_layout(plan.m, plan.k)
    stats = build.layout.metadata
    if plan.left or plan.right:
        layout = _attach(build.layout, plan.left, plan.right, n)
    else:
        layout = delete_trailing_vertices(build.layout, n)
    layout.metadata = {
        "construction": "union-queue/flat",
        "parameters": {"n": n, "m": plan.m, "k": plan.k, "left": plan.left, "right": plan.right, **stats},
        "bound_budget": budget,
    }
    log.debug("union queue n=%d via T_%d, k=%d: %s", n, plan.m, plan.k, stats)
    build.layout, build.plan = layout, plan
    return build


def build_union_queue_layout(n: int) -> Layout:
    """Union queue layout of ``K_n``.

    Up to ``n = 56`` nested elbows are within budget.  Beyond that a flat
    cover of a nearby even triangle ``T_m`` is grouped into union chains,
    bad points go to star forests, and surplus vertices are deleted (or
    missing ones attached at the ends with two extra parts).
    """
    return build_union_queue_detailed(n).layout

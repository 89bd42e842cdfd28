"""One test per acceptance criterion; each prints a PASS/FAIL line."""

import math
import random
import time
from itertools import combinations

import numpy as np
import pytest

from linlay.bounds import ceil_queue_coefficient, evaluate_bounds, lqn_lower, smallest_even_at_least_queue_coefficient, uqn_upper
from linlay.layout import (
    Relation,
    edge_relation,
    page_statistics,
    part_is_union_page,
    queue_statistics,
    verify_layout,
)
from linlay.oracle import exact_number
from linlay.pages import build_local_page_layout, build_union_page_layout, zigzag_page_layout
from linlay.queues.elbow import elbow_chains, elbow_queue_layout
from linlay.queues.flat import flatten
from linlay.queues.forests import forest_partition, is_forest, is_star_forest, split_forest_into_star_forests
from linlay.queues.recursive import build_local_queue_layout, build_recursive_chain_cover
from linlay.queues.union import build_union_queue_detailed, build_union_queue_layout
from linlay.triangle import chains_to_queue_layout, hook_of_vertex, hook_incidence, point_to_edge, triangle_points

UNION_QUEUE_NS = range(294, 601, 2)


@pytest.fixture(scope="module")
def union_queue_builds():
    out = {}
    for n in UNION_QUEUE_NS:
        t0 = time.perf_counter()
        build = build_union_queue_detailed(n)
        rep = verify_layout(build.layout)
        out[n] = (build, rep, time.perf_counter() - t0)
    return out


def test_criterion_01_union_queue(criterion, union_queue_builds):
    with criterion(1, "union queue, even n in 294..600: verified, within budget, < 5 s"):
        for n, (build, rep, seconds) in union_queue_builds.items():
            assert rep.ok, n
            assert rep.kind == "queue" and rep.variant == "union"
            assert rep.part_count <= uqn_upper(n), n
            # also within the tighter reading that uses n in place of n + 1
            assert rep.part_count <= ceil_queue_coefficient(n) + 42, n
            k = smallest_even_at_least_queue_coefficient(n + 1)
            plan = build.plan
            assert plan is not None and plan.left == plan.right == 0
            # the flat regime is used with the k standing for n itself
            assert plan.k == k and rep.part_count <= k + 40, n
            assert seconds < 5, (n, seconds)
        slowest = max(union_queue_builds, key=lambda n: union_queue_builds[n][2])
        print(f"  slowest build+verify: n={slowest}, {union_queue_builds[slowest][2]:.2f}s")


def test_criterion_02_flat_cover_locality(criterion, union_queue_builds):
    with criterion(2, "flat cover: hook incidence <= k+9, <= 4 bad per chain, <= 34 star forests"):
        for n, (build, _, _) in union_queue_builds.items():
            m, k = build.plan.m, build.plan.k
            assert hook_incidence(flatten(build.families), m).max() <= k + 9, n
            assert max(build.bad.per_chain().values()) <= 4, n
            assert len(build.stars) <= 34, n
            assert all(is_star_forest(p.edges.tolist()) for p in build.stars), n


def test_criterion_03_local_queue(criterion):
    with criterion(3, "local queue, n = 1..1000: locality <= ceil((1-1/sqrt2) n) + 1"):
        for n in range(1, 1001):
            rep = verify_layout(build_local_queue_layout(n))
            assert rep.ok, n
            assert rep.max_locality <= ceil_queue_coefficient(n) + 1, n
        assert verify_layout(build_local_queue_layout(14)).max_locality <= 6
        assert verify_layout(build_local_queue_layout(69)).max_locality <= 22


def test_criterion_04_queue_lower_bound(criterion):
    with criterion(4, "oracle lqn exceeds the strict lower bound for 2 <= n <= 6, each < 60 s"):
        values = {}
        for n in range(2, 7):
            res = exact_number(n, "lqn")
            assert res.seconds < 60
            assert verify_layout(res.witness).ok
            assert res.value > lqn_lower(n), n
            values[n] = res.value
        assert (values[3], values[4], values[5]) == (1, 2, 2)


def test_criterion_05_local_page(criterion):
    with criterion(5, "local page: n = 18k-3 exact with n*k pages, locality 6k-1, no red edges"):
        for k in range(1, 12):
            n = 18 * k - 3
            layout = build_local_page_layout(n)
            rep = verify_layout(layout)
            assert rep.ok and rep.part_count == n * k, k
            assert set(rep.locality.tolist()) == {6 * k - 1}, k
            assert page_statistics(layout).red_count == 0, k
        rep = verify_layout(build_local_page_layout(15))
        assert rep.max_locality == evaluate_bounds(15).lpn_lower_int == 5
        for n in range(15, 196):
            rep = verify_layout(build_local_page_layout(n))
            assert rep.ok and rep.max_locality <= n / 3 + 4, n


def test_criterion_06_union_page(criterion):
    with criterion(6, "union page: 4n/9+4 parts at n = 54, 108, 162; <= 4n/9+18 for n <= 200"):
        for n in (54, 108, 162):
            layout = build_union_page_layout(n)
            rep = verify_layout(layout)
            assert rep.ok and rep.part_count == 4 * n // 9 + 4, n
            assert all(part_is_union_page(p) for p in layout.parts)
        for n in range(1, 201):
            rep = verify_layout(build_union_page_layout(n))
            assert rep.ok and rep.part_count <= 4 * n / 9 + 18, n


def test_criterion_07_model_equivalence(criterion):
    with criterion(7, "triangle model, n <= 8: nesting iff dominance, hook iff queue membership"):
        for n in range(1, 9):
            pts = [tuple(map(int, p)) for p in triangle_points(n)]
            for p, q in combinations(pts, 2):
                nested = edge_relation(point_to_edge(p, n), point_to_edge(q, n)) == Relation.NESTED
                dominated = (p[0] < q[0] and p[1] < q[1]) or (q[0] < p[0] and q[1] < p[1])
                assert nested == dominated, (n, p, q)
            for i in range(1, n + 2):
                hook = hook_of_vertex(i, n)
                for p in pts:
                    assert (p in hook) == (i in point_to_edge(p, n))
            for chains in (build_recursive_chain_cover(n), elbow_chains(n)):
                layout = chains_to_queue_layout(chains, n)
                assert verify_layout(layout).ok
                for part, chain in zip(layout.parts, chains):
                    members = set(part.vertices().tolist())
                    for i in range(1, n + 2):
                        hook = hook_of_vertex(i, n)
                        meets = any(tuple(map(int, p)) in hook for p in chain.points)
                        assert meets == (i in members)


def _constructed(n):
    yield elbow_queue_layout(n)
    yield build_local_queue_layout(n)
    yield build_union_queue_layout(n)
    yield zigzag_page_layout(n)
    yield build_local_page_layout(n)
    yield build_union_page_layout(n)


def test_criterion_08_counting_identities(criterion):
    with criterion(8, "counting identities on every constructed layout, n <= 100"):
        for n in range(1, 101):
            for layout in _constructed(n):
                rep = verify_layout(layout)
                if layout.kind == "queue":
                    s = queue_statistics(layout)
                    assert s.edges_neither == 0
                    assert np.array_equal(s.left_longest + s.right_shortest - s.both_sided, rep.locality)
                else:
                    s = page_statistics(layout)
                    assert sum(len(h.vertices) for h in s.hulls) == s.R + s.B


def test_criterion_09_baselines(criterion):
    with criterion(9, "elbows give floor(n/2) queues, zigzag gives ceil(n/2) pages, n <= 100"):
        for n in range(1, 101):
            q = elbow_queue_layout(n)
            rep = verify_layout(q)
            assert rep.ok and len(q.parts) == n // 2 == rep.part_count
            p = zigzag_page_layout(n)
            rep = verify_layout(p)
            # K_1 has no edges, so its single page is empty
            assert rep.ok and len(p.parts) == math.ceil(n / 2)
            assert rep.part_count == (math.ceil(n / 2) if n > 1 else 0)


def _density_bound(n, edges):
    if not edges:
        return 0
    masks = np.arange(1 << n, dtype=np.int64)
    sizes = np.zeros(len(masks), dtype=np.int64)
    for v in range(n):
        sizes += (masks >> v) & 1
    counts = np.zeros(len(masks), dtype=np.int64)
    for a, b in edges:
        counts += ((masks >> (a - 1)) & 1) & ((masks >> (b - 1)) & 1)
    ok = sizes >= 2
    return int(np.max(-(-counts[ok] // (sizes[ok] - 1))))


def test_criterion_10_forest_machinery(criterion):
    with criterion(10, "forest partition equals the density bound on 200 random graphs; star splits"):
        rng = random.Random(20261014)
        for trial in range(200):
            n = rng.randint(1, 14)
            p = rng.random()
            edges = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if rng.random() < p]
            forests = forest_partition(edges).forests
            assert sorted(e for f in forests for e in f) == sorted(edges)
            assert all(is_forest(f) for f in forests)
            assert len(forests) == _density_bound(n, edges), (trial, n, edges)
            for f in forests:
                even, odd = split_forest_into_star_forests(f)
                assert is_star_forest(even) and is_star_forest(odd)
                assert sorted(even + odd) == sorted(f)

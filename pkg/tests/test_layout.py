from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import brute
from linlay.layout import (
    PAGE,
    QUEUE,
    Layout,
    LayoutError,
    Part,
    Relation,
    coverage,
    delete_trailing_vertices,
    edge_relation,
    locality_profile,
    page_part_statistics,
    page_statistics,
    part_is_page,
    part_is_queue,
    part_is_union_page,
    part_is_union_queue,
    queue_statistics,
    verify_layout,
)
from linlay.queues.elbow import elbow_queue_layout


def all_edges(n):
    return [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]


@pytest.mark.parametrize(
    "e, f, rel",
    [
        ((1, 3), (2, 4), Relation.CROSSING),
        ((1, 4), (2, 3), Relation.NESTED),
        ((1, 2), (3, 4), Relation.DISJOINT),
        ((1, 2), (2, 3), Relation.SHARED),
        ((3, 1), (4, 2), Relation.CROSSING),
    ],
)
def test_edge_relation_examples(e, f, rel):
    assert edge_relation(e, f) == rel
    assert edge_relation(f, e) == rel


def test_trichotomy_exhaustive():
    for n in range(4, 10):
        for e, f in combinations(all_edges(n), 2):
            rel = edge_relation(e, f)
            assert rel.value == brute.relation(e, f)
            if len(set(e) | set(f)) == 4:
                assert rel != Relation.SHARED


def test_queue_and_page_examples():
    assert part_is_queue(Part(0, [(1, 3), (2, 4)]))
    assert not part_is_queue(Part(0, [(1, 4), (2, 3)]))
    assert part_is_queue(Part(0, all_edges(3)))
    assert part_is_page(Part(0, [(1, 4), (2, 3)]))
    assert not part_is_page(Part(0, [(1, 3), (2, 4)]))
    assert part_is_page(Part(0, [(1, 2), (2, 3), (1, 3)]))


def test_union_examples():
    assert part_is_union_queue(Part(0, [(1, 4), (2, 3)]))
    assert not part_is_union_queue(Part(0, [(1, 4), (2, 3), (3, 4)]))
    assert part_is_union_queue(Part(0, [(1, 6), (3, 4)]))
    assert part_is_union_queue(Part(0, [(1, 2), (2, 6), (3, 4)]))
    assert part_is_union_page(Part(0, [(1, 3), (2, 4)]))
    assert not part_is_union_page(Part(0, [(1, 3), (2, 4), (3, 4)]))
    assert part_is_union_page(Part(0, [(1, 3), (4, 6)]))
    assert part_is_union_page(Part(0, [(1, 2), (2, 4), (1, 4), (5, 6)]))


def test_tiny_parts_valid_everywhere():
    for edges in ([], [(1, 5)]):
        p = Part(0, edges)
        assert part_is_queue(p) and part_is_page(p) and part_is_union_queue(p) and part_is_union_page(p)


def test_star_is_queue_and_page():
    star = Part(0, [(3, v) for v in (1, 2, 4, 5, 6)])
    assert part_is_queue(star) and part_is_page(star)


edge_sets = st.integers(4, 9).flatmap(
    lambda n: st.lists(st.sampled_from(all_edges(n)), min_size=0, max_size=12, unique=True)
)


@settings(max_examples=300, deadline=None)
@given(edge_sets)
def test_predicates_match_pairwise_oracle(edges):
    p = Part(0, edges)
    assert part_is_queue(p) == brute.no_pair(edges, "nested")
    assert part_is_page(p) == brute.no_pair(edges, "crossing")
    assert part_is_union_queue(p) == brute.union_ok(edges, "nested")
    assert part_is_union_page(p) == brute.union_ok(edges, "crossing")
    # plain validity implies union validity
    assert not part_is_queue(p) or part_is_union_queue(p)
    assert not part_is_page(p) or part_is_union_page(p)
    # queue and page at once iff no independent pair nests or crosses
    both = brute.no_pair(edges, "nested") and brute.no_pair(edges, "crossing")
    assert (part_is_queue(p) and part_is_page(p)) == both


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 8).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(0, 3), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))))
def test_layout_flags_and_locality_match_oracle(case):
    n, labels = case
    edges = all_edges(n)
    groups = {}
    for e, lab in zip(edges, labels):
        groups.setdefault(lab, []).append(e)
    parts = [Part(i, groups[i]) for i in sorted(groups)]
    for kind in (QUEUE, PAGE):
        layout = Layout(n, parts, kind)
        rep = verify_layout(layout)
        bad = "nested" if kind == QUEUE else "crossing"
        assert rep.valid == [brute.no_pair(groups[i], bad) for i in sorted(groups)]
        assert rep.covered
        assert list(rep.locality) == brute.locality(n, [groups[i] for i in sorted(groups)])
        assert rep.max_locality == max(rep.locality)


def test_verify_layout_examples():
    rep = verify_layout(Layout(3, [Part(0, all_edges(3))], QUEUE))
    assert rep.ok and rep.max_locality == 1 and rep.covered and rep.part_count == 1

    pages = Layout(4, [Part(0, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]), Part(1, [(2, 4)])], PAGE)
    rep = verify_layout(pages)
    assert rep.all_valid and rep.covered and rep.max_locality == 2

    rep = verify_layout(Layout(4, [Part(0, all_edges(4))], QUEUE))
    assert not rep.ok and rep.invalid_parts() == [0]


def test_verify_rejects_bad_indices():
    with pytest.raises(LayoutError, match="index out of range"):
        Layout(3, [Part(0, [(1, 4)])])
    with pytest.raises(LayoutError):
        Part(0, [(2, 2)])
    with pytest.raises(LayoutError):
        Part(0, [(1, 2), (2, 1)])


def test_coverage_counts_missing_and_duplicates():
    layout = Layout(3, [Part(0, [(1, 2)]), Part(1, [(1, 2), (2, 3)])])
    assert coverage(layout) == (1, 1)
    assert not verify_layout(layout).covered


def test_locality_examples():
    assert list(locality_profile(Layout(3, [Part(0, all_edges(3))]))) == [1, 1, 1]
    pages = Layout(4, [Part(0, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]), Part(1, [(2, 4)])], PAGE)
    # v_1 and v_3 only touch the first page
    assert list(locality_profile(pages)) == [1, 2, 1, 2]
    assert list(locality_profile(Layout(5, []))) == [0] * 5


def test_part_count_ignores_empty_parts():
    layout = Layout(3, [Part(0, all_edges(3)), Part(1, [])])
    assert verify_layout(layout).part_count == 1


def test_queue_statistics_examples():
    s = queue_statistics(Layout(3, [Part(0, all_edges(3))]))
    assert list(s.left_longest) == [0, 1, 1]
    assert list(s.right_shortest) == [1, 1, 0]
    assert list(s.both_sided) == [0, 1, 0]
    s = queue_statistics(Layout(2, [Part(0, [(1, 2)])]))
    assert list(s.left_longest) == [0, 1] and list(s.right_shortest) == [1, 0] and list(s.both_sided) == [0, 0]
    s = queue_statistics(elbow_queue_layout(9))
    assert s.identity_holds and s.edges_neither == 0


def test_queue_statistics_rejects_invalid():
    with pytest.raises(LayoutError):
        queue_statistics(Layout(4, [Part(0, all_edges(4))]))


def test_left_longest_or_right_shortest_exhaustive():
    # every valid plain queue layout of K_4 and K_5 with at most 3 queues
    from itertools import product

    for n in (4, 5):
        edges = all_edges(n)
        for labels in product(range(3), repeat=len(edges)):
            if labels[0] != 0:
                continue
            groups = {}
            for e, lab in zip(edges, labels):
                groups.setdefault(lab, []).append(e)
            parts = [Part(i, g) for i, g in groups.items()]
            if not all(part_is_queue(p) for p in parts):
                continue
            s = queue_statistics(Layout(n, parts))
            assert s.edges_neither == 0 and s.identity_holds


def test_page_statistics_examples():
    hull = page_part_statistics(Part(0, [(1, 2), (2, 4)]), 5)
    assert sorted(hull.vertices) == [1, 2, 4]
    assert sorted(map(tuple, hull.black)) == [(1, 2), (2, 4)]
    assert sorted(map(tuple, hull.red)) == [(1, 4)]
    assert len(hull.green) == 0

    hull = page_part_statistics(Part(0, [e for e in all_edges(4) if e != (2, 4)]), 4)
    assert sorted(map(tuple, hull.black)) == [(1, 2), (1, 4), (2, 3), (3, 4)]
    assert sorted(map(tuple, hull.green)) == [(1, 3)]
    assert len(hull.red) == 0
    assert sum(hull.arc_lengths) == 4


def test_page_statistics_identity_and_green_bound():
    from linlay.pages import zigzag_page_layout

    for n in range(2, 30):
        stats = page_statistics(zigzag_page_layout(n))
        assert stats.incidences == stats.R + stats.B
        for h in stats.hulls:
            assert len(h.black) + len(h.red) == len(h.hull_edges)
            assert len(h.green) <= max(0, len(h.vertices) - 3)


def test_page_statistics_skips_single_vertex_parts():
    layout = Layout(3, [Part(0, all_edges(3)), Part(1, [])], PAGE)
    stats = page_statistics(layout)
    assert len(stats.hulls) == 1 and stats.skipped == [1]


def test_delete_trailing_vertices_keeps_ids_and_validity():
    layout = elbow_queue_layout(10)
    small = delete_trailing_vertices(layout, 7)
    assert [p.id for p in small.parts] == [p.id for p in layout.parts]
    assert verify_layout(small).ok
    assert np.all(np.concatenate([p.edges for p in small.parts]) <= 7)

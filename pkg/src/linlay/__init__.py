"""Construct and verify linear layouts (queues, pages, local and union variants) of complete graphs."""

from linlay.bounds import BoundTable, evaluate_bounds
from linlay.io import parse_layout, serialize_layout
from linlay.layout import (
    Edge,
    Layout,
    LayoutError,
    Part,
    Relation,
    VerificationReport,
    edge_relation,
    locality_profile,
    page_statistics,
    part_is_page,
    part_is_queue,
    part_is_union_page,
    part_is_union_queue,
    queue_statistics,
    verify_layout,
)
from linlay.oracle import ExactResult, exact_number, exists_k_local_layout
from linlay.pages import (
    build_local_page_layout,
    build_union_page_layout,
    local_page_gadget,
    union_page_gadgets,
    zigzag_page_layout,
)
from linlay.queues import (
    build_flat_chain_cover,
    build_local_queue_layout,
    build_recursive_chain_cover,
    build_union_queue_layout,
    cover_bad_points,
    elbow_queue_layout,
    forest_partition,
    group_chains,
    split_forest_into_star_forests,
)
from linlay.svg import render_triangle_svg
from linlay.triangle import (
    Chain,
    Hook,
    TrianglePoint,
    chain_is_valid,
    chains_to_queue_layout,
    edge_to_point,
    hook_of_vertex,
    point_to_edge,
)

__version__ = "0.1.0"

__all__ = [
    "BoundTable",
    "Chain",
    "Edge",
    "ExactResult",
    "Hook",
    "Layout",
    "LayoutError",
    "Part",
    "Relation",
    "TrianglePoint",
    "VerificationReport",
    "build_flat_chain_cover",
    "build_local_page_layout",
    "build_local_queue_layout",
    "build_recursive_chain_cover",
    "build_union_page_layout",
    "build_union_queue_layout",
    "chain_is_valid",
    "chains_to_queue_layout",
    "cover_bad_points",
    "edge_relation",
    "edge_to_point",
    "elbow_queue_layout",
    "evaluate_bounds",
    "exact_number",
    "exists_k_local_layout",
    "forest_partition",
    "group_chains",
    "hook_of_vertex",
    "local_page_gadget",
    "locality_profile",
    "page_statistics",
    "parse_layout",
    "part_is_page",
    "part_is_queue",
    "part_is_union_page",
    "part_is_union_queue",
    "point_to_edge",
    "queue_statistics",
    "render_triangle_svg",
    "serialize_layout",
    "split_forest_into_star_forests",
    "union_page_gadgets",
    "verify_layout",
    "zigzag_page_layout",
]

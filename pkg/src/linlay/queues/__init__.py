"""Queue layouts built through the triangle model."""

from linlay.queues.elbow import elbow_chains, elbow_queue_layout
from linlay.queues.flat import ChainFamily, build_flat_chain_cover, flatten
from linlay.queues.forests import (
    ForestPartition,
    forest_partition,
    is_forest,
    is_star_forest,
    split_forest_into_star_forests,
)
from linlay.queues.grouping import BadPointSet, ChainGroup, group_chains
from linlay.queues.recursive import build_local_queue_layout, build_recursive_chain_cover
from linlay.queues.union import (
    UnionQueueBuild,
    build_union_queue_detailed,
    build_union_queue_layout,
    cover_bad_points,
    plan_union_queue,
)

__all__ = [
    "BadPointSet",
    "UnionQueueBuild",
    "build_union_queue_detailed",
    "ChainFamily",
    "ChainGroup",
    "ForestPartition",
    "build_flat_chain_cover",
    "build_local_queue_layout",
    "build_recursive_chain_cover",
    "build_union_queue_layout",
    "cover_bad_points",
    "elbow_chains",
    "elbow_queue_layout",
    "flatten",
    "forest_partition",
    "group_chains",
    "is_forest",
    "is_star_forest",
    "plan_union_queue",
    "split_forest_into_star_forests",
]

"""b-ary partitions: firing dynamics, lattice structure, tree enumeration, counts."""
from .core import (
    Partition,
    ShotVector,
    canonical,
    fire,
    inc,
    leading,
    partition_from_shots,
    predecessors,
    shot_vector,
    successors,
    unfire,
    value,
)
from .counting import CountCache, carry, count, count_exact_parts, count_sum_form, count_via_pi, pi
from .lattice import HasseDiagram, build_hasse, decompose, incremental_next, join, leq, meet
from .tree import children, enumerate_partitions, iter_partitions, levels

__all__ = [
    "Partition", "ShotVector", "canonical", "fire", "inc", "leading",
    "partition_from_shots", "predecessors", "shot_vector", "successors", "unfire", "value",
    "CountCache", "carry", "count", "count_exact_parts", "count_sum_form", "count_via_pi", "pi",
    "HasseDiagram", "build_hasse", "decompose", "incremental_next", "join", "leq", "meet",
    "children", "enumerate_partitions", "iter_partitions", "levels",
]

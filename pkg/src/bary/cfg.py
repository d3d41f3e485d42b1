"""Chip-firing encoding of the partition dynamics.

The multigraph has vertices 0..n and ``b**(i+1)`` parallel edges from i to
i+1.  A vertex holding at least its out-degree in chips may fire, sending
one chip along each outgoing edge.  Dividing the chips on vertex i by
``b**i`` turns a configuration into a b-ary partition, and a firing of
vertex i into a firing of part i.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import Partition, check_basis, trim
from .errors import InsufficientChips, IntegralityViolated, PositionOutOfRange


@dataclass(frozen=True)
class CfgConfig:
    b: int
    n: int
    chips: tuple[int, ...]

    def __post_init__(self):
        check_basis(self.b)
        object.__setattr__(self, "chips", trim(tuple(self.chips)))

    def out_degree(self, i: int) -> int:
        return self.b ** (i + 1)

    def fireable(self) -> list[int]:
        return [i for i in range(min(len(self.chips), self.n)) if self.chips[i] >= self.out_degree(i)]

    def to_json(self) -> list[str]:
        return [str(c) for c in self.chips]


def initial_config(n: int, b: int) -> CfgConfig:
    return CfgConfig(b, n, (n,))


def fire_vertex(c: CfgConfig, i: int) -> CfgConfig:
    if i < 0 or i >= c.n:
        raise PositionOutOfRange(f"vertex {i} has no outgoing edges (vertices 0..{c.n})")
    deg = c.out_degree(i)
    chips = list(c.chips) + [0] * (i + 2 - len(c.chips))
    if chips[i] < deg:
        raise InsufficientChips(f"vertex {i} holds {chips[i]} chips, needs {deg}")
    chips[i] -= deg
    chips[i + 1] += deg
    return CfgConfig(c.b, c.n, tuple(chips))


def to_partition(c: CfgConfig) -> Partition:
    parts = []
    for i, x in enumerate(c.chips):
        q, r = divmod(x, c.b**i)
        if r:
            raise IntegralityViolated(f"{x} chips on vertex {i} is not a multiple of {c.b}^{i}")
        parts.append(q)
    return Partition(tuple(parts), c.b)


def from_partition(p: Partition, n: int) -> CfgConfig:
    return CfgConfig(p.b, n, tuple(x * p.b**i for i, x in enumerate(p.parts)))


def reachable_configs(n: int, b: int) -> set[CfgConfig]:
    """Configurations reachable from the initial one, by breadth-first search."""
    start = initial_config(n, b)
    seen = {start}
    queue = deque([start])
    while queue:
        c = queue.popleft()
        for i in c.fireable():
            d = fire_vertex(c, i)
            if d not in seen:
                seen.add(d)
                queue.append(d)
    return seen

"""The infinite tree whose level d holds the b-ary partitions of d.

The sons of a node p are ``inc(p, 0), ..., inc(p, leading(p))`` in that
order, so every partition of d+1 has exactly one father in level d.  The
last son is the "rightmost" one; following rightmost sons from the root
walks through ``canonical(0), canonical(1), ...``.

Enumeration of a single ``R_b(n)`` only needs levels ``0 .. n // b``: a
partition of n is its first part followed by a tail lying in level
``(n - p_0) / b``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .config import DEFAULT_LIMITS
from .core import Partition, canonical, check_basis, inc_parts, leading_parts
from .counting import carry
from .errors import CapExceeded

Tail = Partition


@dataclass(frozen=True)
class Level:
    depth: int
    members: tuple[Partition, ...]

    def __len__(self):
        return len(self.members)


def _children_parts(parts: tuple[int, ...], b: int) -> list[tuple[int, ...]]:
    return [inc_parts(parts, i) for i in range(leading_parts(parts, b) + 1)]


def children(t: Tail) -> list[Tail]:
    return [Partition._make(q, t.b) for q in _children_parts(t.parts, t.b)]


def _level_parts(b: int, max_depth: int, cap: int | None) -> Iterator[list[tuple[int, ...]]]:
    cap = DEFAULT_LIMITS.max_nodes if cap is None else cap
    level: list[tuple[int, ...]] = [()]
    depth = 0
    while True:
        yield level
        if depth == max_depth:
            return
        nxt = []
        for t in level:
            nxt.extend(_children_parts(t, b))
        if len(nxt) > cap:
            raise CapExceeded(f"level {depth + 1} has {len(nxt)} members, cap is {cap}")
        level = nxt
        depth += 1


def levels(b: int, max_depth: int, cap: int | None = None) -> Iterator[Level]:
    """Stream levels 0..max_depth; only the previous level is kept alive."""
    check_basis(b)
    for d, raw in enumerate(_level_parts(b, max_depth, cap)):
        yield Level(d, tuple(Partition._make(t, b) for t in raw))


def iter_partitions(n: int, b: int, cap: int | None = None) -> Iterator[Partition]:
    """Yield every b-ary partition of n, level by level (first part decreasing)."""
    check_basis(b)
    if n < 0:
        raise ValueError("n must be nonnegative")
    cap = DEFAULT_LIMITS.max_nodes if cap is None else cap
    make = Partition._make
    emitted = 0
    for depth, level in enumerate(_level_parts(b, n // b, None)):
        first = n - b * depth
        emitted += len(level)
        if emitted > cap:
            raise CapExceeded(f"R_{b}({n}) exceeds the cap of {cap} partitions")
        if first:
            for e in level:
                yield make((first,) + e, b)
        else:
            for e in level:
                yield make((0,) + e if e else (), b)


def enumerate_partitions(n: int, b: int, cap: int | None = None) -> set[Partition]:
    return set(iter_partitions(n, b, cap))


def rightmost_branch(b: int, i: int) -> Tail:
    """The i-th node (1-based) of the rightmost branch: canonical(i - 1)."""
    if i < 1:
        raise ValueError("branch nodes are numbered from 1")
    return canonical(i - 1, b)


def rightmost_child(t: Tail) -> Tail:
    return Partition._make(inc_parts(t.parts, leading_parts(t.parts, t.b)), t.b)


def x_root_order(t: Tail) -> int | None:
    """k+1 when t is k zeros followed by a part above b-1, else None."""
    k = 0
    for x in t.parts:
        if x != 0:
            break
        k += 1
    if k < len(t.parts) and t.parts[k] > t.b - 1:
        return k + 1
    return None


def branch_profile(b: int, length: int) -> list[tuple[int, int]]:
    """``(number of sons, carry)`` along the first ``length`` branch nodes."""
    check_basis(b)
    out = []
    node = Partition._make((), b)
    for i in range(1, length + 1):
        out.append((len(children(node)), carry(i, b)))
        node = rightmost_child(node)
    return out

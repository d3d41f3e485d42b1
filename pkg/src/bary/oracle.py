"""Brute-force ground truth.

Nothing here goes through the firing, tree, lattice or counting code: the
partitions are found by direct digit search and reachability is recomputed
with a private copy of the rewriting rule.  Agreement with the fast routines
is therefore real evidence.
"""
from __future__ import annotations

from collections import deque

from .config import DEFAULT_LIMITS
from .core import Partition, check_basis
from .errors import CapExceeded


def _check_cap(n, b, cap):
    if cap is None:
        cap = DEFAULT_LIMITS.oracle_cap(b)
    if n > cap:
        raise CapExceeded(f"oracle limited to n <= {cap} for b={b}, got n={n}")


def brute_enumerate(n: int, b: int, cap: int | None = None) -> set[Partition]:
    check_basis(b)
    if n < 0:
        raise ValueError("n must be nonnegative")
    _check_cap(n, b, cap)
    if n == 0:
        return {Partition((), b)}
    top = 0
    while b ** (top + 1) <= n:
        top += 1

    found = set()
    digits = [0] * (top + 1)

    def choose(j, remaining):
        if j == 0:
            digits[0] = remaining
            found.add(Partition(tuple(digits), b))
            return
        w = b ** j
        for d in range(remaining // w + 1):
            digits[j] = d
            choose(j - 1, remaining - d * w)

    choose(top, n)
    return found


def brute_count(n: int, b: int, cap: int | None = None) -> int:
    return len(brute_enumerate(n, b, cap))


def _moves(parts, b):
    parts = list(parts)
    for i, x in enumerate(parts):
        if x >= b:
            q = parts + [0]
            q[i] -= b
            q[i + 1] += 1
            while q and q[-1] == 0:
                q.pop()
            yield tuple(q)


def reachable_from(q: Partition, cap: int | None = None) -> set[Partition]:
    """Every partition reachable from ``q`` by zero or more firings."""
    n = sum(x * q.b ** i for i, x in enumerate(q.parts))
    _check_cap(n, q.b, cap)
    seen = {q.parts}
    todo = deque([q.parts])
    while todo:
        cur = todo.popleft()
        for nxt in _moves(cur, q.b):
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return {Partition(p, q.b) for p in seen}


def brute_leq(p: Partition, q: Partition, n: int, b: int, cap: int | None = None) -> bool:
    """True iff ``p`` can be reached from ``q`` by firings."""
    _check_cap(n, b, cap)
    return p in reachable_from(q, cap)

"""Exact counts of b-ary partitions.

Three independent routes to ``|R_b(n)|``:

* :func:`count` -- the two-term recurrence
  ``|R_b(n)| = |R_b(n-1)| + [b | n] |R_b(n/b)|``;
* :func:`count_sum_form` -- its unrolled form, a prefix sum up to ``n // b``;
* :func:`count_via_pi` -- path counts in the recursive tree description,
  where ``pi(l, k)`` is the number of nodes at depth ``l`` below the root of
  an ``X_{b,k}`` subtree.

All values are Python ints; nothing here touches floating point.
"""
from __future__ import annotations

import threading

from .core import check_basis
from .errors import ZeroArgument


def carry(i: int, b: int) -> int:
    """Exponent of the largest power of b dividing i (the b-ary carry sequence)."""
    check_basis(b)
    if i <= 0:
        raise ZeroArgument("carry is defined for positive integers only")
    k = 0
    while i % b == 0:
        i //= b
        k += 1
    return k


def clamp_order(l: int, k: int, b: int) -> int:
    """Smallest k' <= k giving the same pi(l, .) value.

    Once ``b**(k'-1) >= l`` the recursion never reaches the third case, so
    every larger order yields the same number.
    """
    kk = 1
    power = 1  # b ** (kk - 1)
    while kk < k and power < l:
        kk += 1
        power *= b
    return kk


class CountCache:
    """Memo tables for one basis.

    ``table[n]`` holds ``|R_b(n)|`` for every n computed so far (a list, the
    keys being dense).  ``pi_table`` maps ``(l, k)`` with k already clamped.
    A lock guards all growth so a cache can be shared between threads.
    """

    def __init__(self, b: int):
        self.b = check_basis(b)
        self.table: list[int] = [1]
        self.pi_table: dict[tuple[int, int], int] = {}
        self._carries: list[int] = [0]  # index 0 unused
        self._pi_top = -1  # pi known for every l <= _pi_top and k <= _pi_order
        self._pi_order = 0
        self._lock = threading.RLock()

    def counts_upto(self, n: int) -> list[int]:
        with self._lock:
            t = self.table
            b = self.b
            for m in range(len(t), n + 1):
                t.append(t[m - 1] + (t[m // b] if m % b == 0 else 0))
            return t

    def carries_upto(self, n: int) -> list[int]:
        with self._lock:
            c = self._carries
            for i in range(len(c), n + 1):
                c.append(carry(i, self.b))
            return c

    def pi(self, l: int, k: int) -> int:
        if k < 1:
            raise ValueError("k must be >= 1")
        if l < 0:
            return 0
        k = clamp_order(l, k, self.b)
        with self._lock:
            if l > self._pi_top or k > self._pi_order:
                self._fill_pi(max(l, self._pi_top), max(k, self._pi_order))
            return self.pi_table[l, clamp_order(l, k, self.b)]

    def _fill_pi(self, top: int, order: int) -> None:
        # Bottom-up in l: every recursive reference has a strictly smaller l,
        # or the same l with a smaller order already filled (never happens:
        # the third case refers to l - b**(k-1) < l).
        b = self.b
        c = self.carries_upto(top)
        table = self.pi_table

        def get(l, k):
            if l < 0:
                return 0
            return table[l, clamp_order(l, k, b)]

        for l in range(0, top + 1):
            for k in range(1, order + 1):
                kk = clamp_order(l, k, b)
                if kk != k or (l, k) in table:
                    continue
                if l < b:
                    v = 1
                else:
                    span = b ** (k - 1)
                    if l <= span:
                        v = 1
                        last = l
                    else:
                        v = get(l - span, k)
                        last = span
                    for i in range(1, last + 1):
                        for j in range(1, c[i] + 1):
                            v += get(l - i, j)
                table[l, k] = v
        self._pi_top = top
        self._pi_order = order


_caches: dict[int, CountCache] = {}
_caches_lock = threading.Lock()


def default_cache(b: int) -> CountCache:
    with _caches_lock:
        cache = _caches.get(b)
        if cache is None:
            cache = _caches[b] = CountCache(b)
        return cache


def _resolve(b, cache):
    if cache is None:
        return default_cache(b)
    if cache.b != b:
        raise ValueError(f"cache is for basis {cache.b}, not {b}")
    return cache


def count(n: int, b: int, cache: CountCache | None = None) -> int:
    """``|R_b(n)|`` by the two-term recurrence."""
    check_basis(b)
    if n < 0:
        return 0
    return _resolve(b, cache).counts_upto(n)[n]


def count_sum_form(n: int, b: int, cache: CountCache | None = None) -> int:
    """``sum(|R_b(i)| for i in 0..n//b)``."""
    check_basis(b)
    if n < 0:
        return 0
    t = _resolve(b, cache).counts_upto(n // b)
    return sum(t[: n // b + 1])


def pi(l: int, k: int, b: int, cache: CountCache | None = None) -> int:
    check_basis(b)
    return _resolve(b, cache).pi(l, k)


def count_via_pi(n: int, b: int, cache: CountCache | None = None) -> int:
    check_basis(b)
    if n < 0:
        return 0
    return pi(n, max(n, 1), b, cache)


def count_exact_parts(n: int, l: int, b: int, cache: CountCache | None = None) -> int:
    """Number of b-ary partitions of n with exactly l parts.

    The shortest such partition is ``(0, ..., 0, 1)`` of value ``b**(l-1)``;
    the others hang below it in an ``X_{b,l}`` subtree.
    """
    check_basis(b)
    if l < 1:
        raise ValueError("l must be >= 1")
    if n < b ** (l - 1):
        return 0
    return pi(n - b ** (l - 1), l, b, cache)


def exact_parts_profile(n: int, b: int, cache: CountCache | None = None) -> list[int]:
    """``[count_exact_parts(n, l, b) for l = 1, 2, ...]`` up to the longest length."""
    out = []
    l = 1
    while b ** (l - 1) <= n:
        out.append(count_exact_parts(n, l, b, cache))
        l += 1
    return out

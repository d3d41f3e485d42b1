import threading

import pytest
from hypothesis import given, strategies as st

from bary.counting import (
    CountCache, carry, clamp_order, count, count_exact_parts, count_sum_form,
    count_via_pi, exact_parts_profile, pi,
)
from bary.errors import ZeroArgument
from bary.oracle import brute_count, brute_enumerate


def test_carry_sequences():
    assert [carry(i, 2) for i in range(1, 11)] == [0, 1, 0, 2, 0, 1, 0, 3, 0, 1]
    assert [carry(i, 3) for i in range(1, 11)] == [0, 0, 1, 0, 0, 1, 0, 0, 2, 0]
    for b in (2, 3, 5):
        for k in range(6):
            assert carry(b**k, b) == k
            assert min(i for i in range(1, b**k + 1) if carry(i, b) == k) == b**k
    with pytest.raises(ZeroArgument):
        carry(0, 2)


def test_count_examples():
    assert count(80, 2) == 4124
    assert [count(0, b) for b in (2, 3, 7)] == [1, 1, 1]
    assert count(9, 3) == 5


def test_sum_form_examples():
    assert count_sum_form(8, 2) == 10
    assert count_sum_form(1, 4) == 1
    assert count_sum_form(80, 2) == 4124


def test_pi_examples():
    assert pi(4, 4, 2) == 4
    assert all(pi(l, 1, b) == 1 for b in (2, 3) for l in range(50))
    assert pi(9, 9, 3) == 5
    assert pi(-1, 3, 2) == 0


def test_count_via_pi_examples():
    assert count_via_pi(8, 2) == 10
    assert count_via_pi(0, 3) == 1
    assert count_via_pi(80, 2) == 4124


def test_exact_parts_examples():
    assert count_exact_parts(8, 3, 2) == 4
    assert all(count_exact_parts(n, 1, b) == 1 for b in (2, 3) for n in range(1, 30))
    assert count_exact_parts(9, 2, 3) == 3
    assert count_exact_parts(3, 3, 2) == 0


def test_binary_sequence():
    assert [count(n, 2) for n in range(11)] == [1, 1, 2, 2, 4, 4, 6, 6, 10, 10, 14]


@pytest.mark.parametrize("b", [2, 3, 4, 5])
def test_formulas_agree(b):
    cache = CountCache(b)
    for n in range(0, 201):
        c = count(n, b, cache)
        assert count_sum_form(n, b, cache) == c
        assert count_via_pi(n, b, cache) == c
        if n <= 40:
            assert brute_count(n, b) == c


@pytest.mark.parametrize("b", [2, 3])
def test_exact_parts_against_oracle(b):
    for n in range(0, 41):
        by_len = {}
        for p in brute_enumerate(n, b):
            by_len[len(p)] = by_len.get(len(p), 0) + 1
        prof = exact_parts_profile(n, b)
        for l in range(1, len(prof) + 3):
            assert count_exact_parts(n, l, b) == by_len.get(l, 0)
        assert sum(prof) + (n == 0) == count(n, b)


@given(st.integers(2, 6), st.integers(1, 3000))
def test_recurrence_properties(b, n):
    if n % b:
        assert count(n, b) == count(n - 1, b)
    assert count(n - 1, b) <= count(n, b)


@given(st.integers(2, 4), st.integers(0, 300), st.integers(1, 12))
def test_pi_order_clamp(b, l, k):
    kk = clamp_order(l, k, b)
    assert kk <= k
    assert pi(l, k, b) == pi(l, kk, b)
    if b ** (k - 1) >= l:
        assert pi(l, k, b) == pi(l, k + 5, b)


def test_fresh_cache_matches_warm_cache():
    warm = CountCache(3)
    count(500, 3, warm)
    pi(200, 6, 3, warm)
    for n in (0, 17, 243, 499):
        assert count(n, 3, warm) == count(n, 3, CountCache(3))
    assert pi(150, 5, 3, warm) == pi(150, 5, 3, CountCache(3))


def test_shared_cache_threads():
    cache = CountCache(2)
    results = {}

    def work(k):
        results[k] = [count_via_pi(n, 2, cache) for n in range(0, 120, 7)]

    threads = [threading.Thread(target=work, args=(k,)) for k in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    expected = [count(n, 2) for n in range(0, 120, 7)]
    assert all(r == expected for r in results.values())


def test_cache_basis_mismatch():
    with pytest.raises(ValueError):
        count(5, 2, CountCache(3))


def test_big_count_is_exact():
    c = count(10**5, 2)
    assert isinstance(c, int) and c > 2**63
    assert c == count_sum_form(10**5, 2)

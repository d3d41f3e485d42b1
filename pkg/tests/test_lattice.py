import pytest
from hypothesis import given, settings, strategies as st

from bary.core import Partition, canonical, fire, inc, shot_vector, successors, top
from bary.errors import CapExceeded, DivisibilityViolated, InconsistentValue, NotInP
from bary.lattice import (
    build_hasse, check_distributive, decompose, embed_inc0, incremental_next,
    incremental_stages, join, leq, meet, members_P, strip_prefix,
)
from bary.oracle import brute_enumerate, reachable_from
from bary.verify import order_counterexample

from conftest import P


def test_leq_examples():
    assert leq(P(0, 2), P(4), 4)
    assert not leq(P(0, 3), P(2, 0, 1), 6)
    assert not leq(P(2, 0, 1), P(0, 3), 6)
    assert leq(P(2, 1), P(2, 1), 4)
    with pytest.raises(InconsistentValue):
        leq(P(4), P(5), 4)


def test_join_meet_examples():
    assert join(P(0, 3), P(2, 0, 1), 6) == P(2, 2)
    assert meet(P(0, 3), P(2, 0, 1), 6) == P(0, 1, 1)
    for p in brute_enumerate(9, 2):
        assert join(p, p, 9) == p == meet(p, p, 9)
    with pytest.raises(InconsistentValue):
        join(P(6), P(1, 2), 6)


@pytest.mark.parametrize("b", [2, 3])
@pytest.mark.parametrize("n", [0, 1, 5, 9, 12, 16])
def test_order_matches_reachability(n, b):
    assert order_counterexample(build_hasse(n, b)) is None


def test_build_hasse_examples():
    d = build_hasse(4, 2)
    assert d.node_set() == {P(4), P(2, 1), P(0, 2), P(0, 0, 1)}
    assert len(d.edges) == 3
    d = build_hasse(0, 3)
    assert d.nodes == (Partition((), 3),) and d.edges == ()
    d = build_hasse(80, 2)
    assert (len(d.nodes), len(d.edges)) == (4124, 12484)


def test_build_hasse_cap():
    with pytest.raises(CapExceeded):
        build_hasse(40, 2, cap=100)


@pytest.mark.parametrize("b", [2, 3, 4, 5])
def test_build_hasse_matches_oracle(b):
    for n in range(0, 61, 3):
        if n > 60 * (b - 1):
            break
        assert build_hasse(n, b).node_set() == brute_enumerate(n, b)


@pytest.mark.parametrize("n, b", [(0, 2), (7, 2), (30, 2), (26, 3), (40, 4)])
def test_diagram_invariants(n, b):
    d = build_hasse(n, b)
    assert [d.nodes[k] for k in d.sources()] == [top(n, b)]
    assert [d.nodes[k] for k in d.sinks()] == [canonical(n, b)]
    assert len(d.edges) == sum(len(successors(p)) for p in d.nodes)
    for u, v, i in d.edges:
        assert fire(d.nodes[u], i) == d.nodes[v]
    assert d.nodes[0] == top(n, b)


def test_members_P():
    d4 = build_hasse(4, 2)
    assert members_P(d4, 0) == d4.node_set()
    assert members_P(d4, 1) == set()
    d9 = build_hasse(9, 2)
    assert members_P(d9, 1) == {P(1, 0, 0, 1), P(1, 0, 2), P(1, 2, 1), P(1, 4)}
    # P_{i+1} is contained in P_i
    for i in range(5):
        assert members_P(d9, i + 1) <= members_P(d9, i)


def test_strip_prefix():
    assert strip_prefix(P(1, 0, 2), 1, 9) == P(0, 2)
    assert strip_prefix(P(1, 1, 1), 2, 7) == P(1)
    assert strip_prefix(P(5, 3), 0, 11) == P(5, 3)
    with pytest.raises(NotInP):
        strip_prefix(P(3, 2), 1, 7)
    with pytest.raises(DivisibilityViolated):
        strip_prefix(P(0, 1, 1), 1, 6)


@pytest.mark.parametrize("b", [2, 3])
@pytest.mark.parametrize("n", range(0, 30))
def test_strip_prefix_is_bijection(n, b):
    d = build_hasse(n, b)
    i = 0
    while (n + 1) % b**i == 0:
        image = [strip_prefix(p, i, n) for p in members_P(d, i)]
        assert len(set(image)) == len(image)
        assert set(image) == brute_enumerate((n + 1) // b**i - 1, b)
        i += 1


def test_incremental_examples():
    d = incremental_next(build_hasse(9, 3))
    assert len(d.nodes) == 5
    d = incremental_next(build_hasse(4, 2))
    assert len(d.nodes) == 4 and d.node_set() == brute_enumerate(5, 2)
    d = incremental_next(build_hasse(0, 2))
    assert d.nodes == (P(1),) and d.edges == ()


@pytest.mark.parametrize("b", [2, 3, 4])
def test_incremental_matches_direct(b):
    prev = build_hasse(0, b)
    for n in range(1, 41):
        cur = build_hasse(n, b)
        grown = incremental_next(prev)
        assert grown.same_as(cur)
        assert grown == cur  # same numbering once renumbered
        prev = cur


@pytest.mark.parametrize("b", [2, 3])
@pytest.mark.parametrize("n", [3, 7, 15, 26, 31])
def test_stages_are_the_missing_successors(n, b):
    """I_i / C_i recomputed naively: elements whose successors are not built yet."""
    d = build_hasse(n, b)
    built = {inc(p, 0) for p in d.nodes}
    frontier = set(built)
    for i, sources, new in incremental_stages(d):
        lacking = {x for x in frontier if not successors(x) <= built}
        assert lacking == {inc(p, i) for p in sources}
        missing = set().union(*(successors(x) - built for x in lacking))
        assert missing == set(new) == {inc(p, i + 1) for p in sources}
        assert set(sources) == members_P(d, i + 1)
        built |= missing
        frontier = missing
    assert not {x for x in frontier if not successors(x) <= built}
    assert built == brute_enumerate(n + 1, b)


def test_decompose_examples():
    blocks = decompose(4, 2)
    assert [(i, len(blk)) for i, blk in blocks] == [(0, 2), (1, 1), (2, 1)]
    assert decompose(1, 2) == [(0, {P(1)})]
    assert [(i, len(blk)) for i, blk in decompose(9, 3)] == [(0, 3), (1, 1), (2, 1)]
    assert decompose(0, 2) == [(0, {P()})]


@pytest.mark.parametrize("b", [2, 3, 5])
def test_decompose_partitions_the_set(b):
    for n in range(0, 41):
        blocks = decompose(n, b)
        sizes = sum(len(blk) for _, blk in blocks)
        union = set().union(*(blk for _, blk in blocks))
        assert sizes == len(union)
        assert union == brute_enumerate(n, b)


def test_distributive_examples():
    assert check_distributive(build_hasse(9, 2))
    assert check_distributive(build_hasse(12, 3))
    # R_3(5) is a chain
    d = build_hasse(5, 3)
    assert len(d.edges) == len(d.nodes) - 1
    assert check_distributive(d)
    with pytest.raises(CapExceeded):
        check_distributive(build_hasse(40, 2))


def test_embed_inc0():
    m = embed_inc0(build_hasse(9, 2))
    assert m[P(9)] == P(10)
    assert shot_vector(m[P(9)], 10).shots == ()
    m4 = embed_inc0(build_hasse(4, 2))
    assert m4[P(0, 2)] == P(1, 2)
    assert shot_vector(P(1, 2), 5) == shot_vector(P(0, 2), 4)


@pytest.mark.parametrize("n, b", [(6, 2), (13, 2), (17, 3)])
def test_embed_inc0_is_lattice_embedding(n, b):
    d = build_hasse(n, b)
    m = embed_inc0(d)
    assert len(set(m.values())) == len(m)
    for p in d.nodes:
        assert shot_vector(m[p], n + 1) == shot_vector(p, n)
        for q in d.nodes:
            assert leq(m[p], m[q], n + 1) == leq(p, q, n)
            assert join(m[p], m[q], n + 1) == m[join(p, q, n)]
            assert meet(m[p], m[q], n + 1) == m[meet(p, q, n)]


@settings(max_examples=60)
@given(st.integers(2, 4), st.integers(0, 60), st.data())
def test_join_meet_bounds(b, n, data):
    elems = sorted(brute_enumerate(n, b, cap=60), key=lambda p: p.parts)
    p = data.draw(st.sampled_from(elems))
    q = data.draw(st.sampled_from(elems))
    j, m = join(p, q, n), meet(p, q, n)
    assert leq(p, j, n) and leq(q, j, n)
    assert leq(m, p, n) and leq(m, q, n)
    assert p in reachable_from(j) and m in reachable_from(q)
    assert join(p, q, n) == join(q, p, n)
    assert join(p, meet(p, q, n), n) == p  # absorption

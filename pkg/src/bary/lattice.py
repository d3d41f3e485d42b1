"""Order, lattice operations and covering diagrams of ``R_b(n)``.

``p <= q`` when p is reachable from q by firings, which happens exactly when
the shot vector of p dominates that of q.  Join takes the componentwise
minimum of shot vectors and meet the maximum.  ``(n)`` is the top element
and ``canonical(n, b)`` the bottom.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .config import DEFAULT_LIMITS
from .core import (
    Partition,
    ShotVector,
    check_basis,
    inc,
    inc_parts,
    leading_parts,
    partition_from_shots,
    shot_vector,
    successor_parts,
    top,
    value,
)
from .errors import CapExceeded, DivisibilityViolated, InconsistentValue, NotInP

Edge = tuple[int, int, int]


def _same_value(p, q, n):
    if p.b != q.b:
        raise InconsistentValue(f"bases differ: {p.b} and {q.b}")
    for x in (p, q):
        if value(x) != n:
            raise InconsistentValue(f"{x} is not a partition of {n}")


def leq(p: Partition, q: Partition, n: int) -> bool:
    _same_value(p, q, n)
    return shot_vector(p, n).dominates(shot_vector(q, n))


def join(p: Partition, q: Partition, n: int) -> Partition:
    _same_value(p, q, n)
    return partition_from_shots(n, shot_vector(p, n).minimum(shot_vector(q, n)), p.b)


def meet(p: Partition, q: Partition, n: int) -> Partition:
    _same_value(p, q, n)
    return partition_from_shots(n, shot_vector(p, n).maximum(shot_vector(q, n)), p.b)


@dataclass
class HasseDiagram:
    """Covering diagram of ``R_b(n)``.

    ``edges`` holds ``(u, v, i)`` with ``fire(nodes[u], i) == nodes[v]``.
    Treat instances as immutable once built.
    """

    b: int
    n: int
    nodes: tuple[Partition, ...]
    edges: tuple[Edge, ...]
    index: dict[Partition, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        self.index = {p: k for k, p in enumerate(self.nodes)}

    @property
    def basis(self) -> int:
        return self.b

    def node_set(self) -> frozenset[Partition]:
        return frozenset(self.nodes)

    def edge_set(self) -> frozenset[tuple[Partition, Partition, int]]:
        """Edges by endpoint value, independent of node numbering."""
        nodes = self.nodes
        return frozenset((nodes[u], nodes[v], i) for u, v, i in self.edges)

    def same_as(self, other: HasseDiagram) -> bool:
        return (
            self.b == other.b
            and self.n == other.n
            and self.node_set() == other.node_set()
            and self.edge_set() == other.edge_set()
        )

    def out_edges(self) -> list[list[tuple[int, int]]]:
        out: list[list[tuple[int, int]]] = [[] for _ in self.nodes]
        for u, v, i in self.edges:
            out[u].append((i, v))
        return out

    def sources(self) -> list[int]:
        has_in = {v for _, v, _ in self.edges}
        return [k for k in range(len(self.nodes)) if k not in has_in]

    def sinks(self) -> list[int]:
        has_out = {u for u, _, _ in self.edges}
        return [k for k in range(len(self.nodes)) if k not in has_out]

    def renumbered(self) -> HasseDiagram:
        """Same diagram, nodes numbered in breadth-first order from the top.

        Edges are followed in increasing fired position, which is the order
        :func:`build_hasse` discovers them in, so two equal diagrams become
        identical documents.
        """
        out = self.out_edges()
        for lst in out:
            lst.sort()
        start = self.index[top(self.n, self.b)]
        order = {start: 0}
        queue = deque([start])
        edges = []
        while queue:
            u = queue.popleft()
            for i, v in out[u]:
                if v not in order:
                    order[v] = len(order)
                    queue.append(v)
                edges.append((order[u], order[v], i))
        if len(order) != len(self.nodes):
            raise ValueError("diagram is not connected from its top element")
        nodes = [None] * len(order)
        for old, new in order.items():
            nodes[new] = self.nodes[old]
        return HasseDiagram(self.b, self.n, tuple(nodes), tuple(edges))


def build_hasse(n: int, b: int, cap: int | None = None) -> HasseDiagram:
    """Breadth-first closure of the successor relation from ``(n)``."""
    check_basis(b)
    if n < 0:
        raise ValueError("n must be nonnegative")
    cap = DEFAULT_LIMITS.max_nodes if cap is None else cap
    start = top(n, b).parts
    index = {start: 0}
    order = [start]
    edges = []
    head = 0
    while head < len(order):
        u = head
        for i, q in successor_parts(order[u], b):
            v = index.get(q)
            if v is None:
                v = index[q] = len(order)
                order.append(q)
                if len(order) > cap:
                    raise CapExceeded(f"R_{b}({n}) has more than {cap} elements")
            edges.append((u, v, i))
        head += 1
    nodes = tuple(Partition._make(p, b) for p in order)
    return HasseDiagram(b, n, nodes, tuple(edges))


def in_P(p: Partition, i: int) -> bool:
    return leading_parts(p.parts, p.b) >= i


def members_P(diagram: HasseDiagram, i: int) -> set[Partition]:
    """Partitions of the diagram whose first i parts all equal b-1."""
    return {p for p in diagram.nodes if in_P(p, i)}


def strip_prefix(p: Partition, i: int, n: int) -> Partition:
    """Drop the leading i parts (all b-1), giving a partition of (n+1)/b^i - 1."""
    b = p.b
    if value(p) != n:
        raise InconsistentValue(f"{p} is not a partition of {n}")
    if (n + 1) % b**i:
        raise DivisibilityViolated(f"{b}^{i} does not divide {n + 1}")
    if not in_P(p, i):
        raise NotInP(f"{p} does not start with {i} parts equal to {b - 1}")
    return Partition._make(p.parts[i:], b)


def restore_prefix(q: Partition, i: int) -> Partition:
    """Inverse of :func:`strip_prefix`: prepend i parts equal to b-1."""
    return Partition._make((q.b - 1,) * i + q.parts, q.b)


def incremental_stages(diagram: HasseDiagram):
    """Walk the stages of the construction of ``R_b(n+1)`` from ``R_b(n)``.

    Yields ``(i, stage_sources, new_nodes)`` where ``stage_sources`` are the
    ``p`` in ``P_{i+1}(b, n)``: the elements ``inc(p, i)`` are the ones with a
    successor not yet built (the set I_i), and ``new_nodes`` are the added
    ``inc(p, i+1)`` (the set C_i).
    """
    b = diagram.b
    current = list(range(len(diagram.nodes)))
    i = 0
    while current:
        nxt = [u for u in current if leading_parts(diagram.nodes[u].parts, b) > i]
        if not nxt:
            return
        yield i, [diagram.nodes[u] for u in nxt], [inc(diagram.nodes[u], i + 1) for u in nxt]
        current = nxt
        i += 1


def incremental_next(diagram: HasseDiagram) -> HasseDiagram:
    """Diagram of ``R_b(n+1)`` grown from the diagram of ``R_b(n)``.

    Start with the image of the whole diagram under ``inc(., 0)``; firings
    commute with it, so its edges carry over.  Stage i then takes the sources
    p with ``p_i = b-1`` among the previous stage, adds ``inc(p, i+1)``, the
    single missing successor of ``inc(p, i)`` (fired at i), and the edges
    between the new elements, which are images of edges of the input.
    """
    b, n = diagram.b, diagram.n
    src = diagram.nodes
    out = diagram.out_edges()

    # stage[u]: index in the new diagram of inc(src[u], i) for the current stage i
    nodes = [inc_parts(p.parts, 0) for p in src]
    edges = list(diagram.edges)
    stage = {u: u for u in range(len(src))}
    i = 0
    while True:
        # I_i: elements inc(p, i) of the last stage with p in P_{i+1}
        members = [u for u in stage if leading_parts(src[u].parts, b) > i]
        if not members:
            break
        new_stage = {}
        for u in members:
            new_stage[u] = len(nodes)
            nodes.append(inc_parts(src[u].parts, i + 1))
            edges.append((stage[u], new_stage[u], i))
        for u in members:
            for j, v in out[u]:
                # firing at j > i keeps the b-1 prefix, so v is in P_{i+1} too
                edges.append((new_stage[u], new_stage[v], j))
        stage = new_stage
        i += 1
    grown = HasseDiagram(b, n + 1, tuple(Partition._make(p, b) for p in nodes), tuple(edges))
    return grown.renumbered()


def grow_hasse(n: int, b: int) -> HasseDiagram:
    """``R_b(n)`` built by n applications of :func:`incremental_next`."""
    d = build_hasse(0, b)
    for _ in range(n):
        d = incremental_next(d)
    return d


@lru_cache(maxsize=None)
def _closed_form(n: int, b: int) -> frozenset[tuple[int, ...]]:
    if n < 0:
        return frozenset()
    if n == 0:
        return frozenset({()})
    out = set()
    for _, block in _blocks(n, b):
        out |= block
    return frozenset(out)


def _blocks(n, b):
    i = 0
    while n % b**i == 0:
        m = n // b**i - 1
        block = set()
        for e in _closed_form(m, b):
            # restore the prefix of b-1 parts, then apply inc(., i)
            block.add(inc_parts((b - 1,) * i + e, i))
        yield i, block
        i += 1


def decompose(n: int, b: int) -> list[tuple[int, set[Partition]]]:
    """Split ``R_b(n)`` into disjoint blocks, one per i with ``b^i | n``.

    Block i is ``inc(restore_prefix(e, i), i)`` over all partitions e of
    ``n / b^i - 1``.  Smaller sets are themselves obtained by this formula,
    not by firing.
    """
    check_basis(b)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [(0, {Partition._make((), b)})]
    return [(i, {Partition._make(p, b) for p in block}) for i, block in _blocks(n, b)]


def _operation_tables(diagram: HasseDiagram):
    n = diagram.n
    shots = [shot_vector(p, n).shots for p in diagram.nodes]
    width = max((len(s) for s in shots), default=0)
    S = np.zeros((len(shots), width), dtype=np.int64)
    for k, s in enumerate(shots):
        S[k, : len(s)] = s
    lookup = {tuple(row): k for k, row in enumerate(S.tolist())}
    N = len(shots)
    J = np.empty((N, N), dtype=np.int64)
    M = np.empty((N, N), dtype=np.int64)
    for a in range(N):
        lo = np.minimum(S[a], S).tolist()
        hi = np.maximum(S[a], S).tolist()
        J[a] = [lookup[tuple(r)] for r in lo]
        M[a] = [lookup[tuple(r)] for r in hi]
    return J, M


def check_distributive(diagram: HasseDiagram, cap: int | None = None) -> bool:
    """Check both distributive laws on every triple of elements."""
    cap = DEFAULT_LIMITS.distributive_nodes if cap is None else cap
    N = len(diagram.nodes)
    if N > cap:
        raise CapExceeded(f"{N} elements exceed the exhaustive check cap of {cap}")
    J, M = _operation_tables(diagram)
    for a in range(N):
        # (a v x) ^ (a v y) == a v (x ^ y)
        if not np.array_equal(M[J[a][:, None], J[a][None, :]], J[a][M]):
            return False
        # (a ^ x) v (a ^ y) == a ^ (x v y)
        if not np.array_equal(J[M[a][:, None], M[a][None, :]], M[a][J]):
            return False
    return True


def embed_inc0(diagram: HasseDiagram) -> dict[Partition, Partition]:
    """The embedding ``p -> inc(p, 0)`` of ``R_b(n)`` into ``R_b(n+1)``."""
    return {p: inc(p, 0) for p in diagram.nodes}


def shots_of(diagram: HasseDiagram) -> list[ShotVector]:
    return [shot_vector(p, diagram.n) for p in diagram.nodes]

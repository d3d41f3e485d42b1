"""Cross-validation of every construction against the brute-force oracle.

Each check runs over n = 0..max_n and stops at the first counterexample.
Checks that need the oracle or an exhaustive pass are silently restricted
to the sizes where those are affordable.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import cfg, counting, lattice, oracle, tree
from .config import DEFAULT_LIMITS, Limits
from .core import canonical, fire, successors, top

ORDER_MAX_N = 20


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int = 0
    counterexample: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status}  {self.name} ({self.checked} instances)"
        if self.counterexample:
            text += f": {self.counterexample}"
        return text


def reachability_masks(d: lattice.HasseDiagram) -> tuple[list[int], list[int]]:
    """Bitmasks ``down[k]`` (reachable from node k) and ``up[k]`` (reaching k),
    computed by oracle breadth-first search, not from the diagram edges."""
    idx = d.index
    down = []
    for p in d.nodes:
        mask = 0
        for r in oracle.reachable_from(p):
            mask |= 1 << idx[r]
        down.append(mask)
    up = [0] * len(d.nodes)
    for k, mask in enumerate(down):
        for j in range(len(d.nodes)):
            if mask >> j & 1:
                up[j] |= 1 << k
    return down, up


def order_counterexample(d: lattice.HasseDiagram) -> str | None:
    """Compare leq/join/meet with brute-force bounds on all pairs of nodes."""
    n, nodes = d.n, d.nodes
    down, up = reachability_masks(d)
    N = len(nodes)
    for a in range(N):
        for c in range(N):
            p, q = nodes[a], nodes[c]
            if lattice.leq(p, q, n) != bool(down[c] >> a & 1):
                return f"n={n}: leq({p}, {q}) disagrees with reachability"
            ups = up[a] & up[c]
            lub = [r for r in range(N) if ups >> r & 1 and ups & ~up[r] == 0]
            lows = down[a] & down[c]
            glb = [r for r in range(N) if lows >> r & 1 and lows & ~down[r] == 0]
            if [nodes[r] for r in lub] != [lattice.join(p, q, n)]:
                return f"n={n}: join of {p}, {q} is not the least upper bound"
            if [nodes[r] for r in glb] != [lattice.meet(p, q, n)]:
                return f"n={n}: meet of {p}, {q} is not the greatest lower bound"
    return None


@dataclass
class Suite:
    b: int
    max_n: int
    limits: Limits = field(default_factory=lambda: DEFAULT_LIMITS)

    def _hasse(self, n):
        return lattice.build_hasse(n, self.b, self.limits.max_nodes)

    def check_enumeration(self) -> Iterator[str | None]:
        for n in range(min(self.max_n, self.limits.oracle_cap(self.b)) + 1):
            ref = oracle.brute_enumerate(n, self.b)
            if self._hasse(n).node_set() != ref:
                yield f"build_hasse({n}) node set differs from the oracle"
            elif tree.enumerate_partitions(n, self.b) != ref:
                yield f"tree enumeration of R_{self.b}({n}) differs from the oracle"
            else:
                yield None

    def check_counts(self) -> Iterator[str | None]:
        cap = self.limits.oracle_cap(self.b)
        for n in range(self.max_n + 1):
            vals = {
                "recurrence": counting.count(n, self.b),
                "sum": counting.count_sum_form(n, self.b),
                "pi": counting.count_via_pi(n, self.b),
            }
            if n <= cap:
                vals["oracle"] = oracle.brute_count(n, self.b)
            if len(set(vals.values())) != 1:
                yield f"n={n}: {vals}"
            else:
                yield None

    def check_exact_parts(self) -> Iterator[str | None]:
        for n in range(min(self.max_n, self.limits.oracle_cap(self.b)) + 1):
            by_len: dict[int, int] = {}
            for p in oracle.brute_enumerate(n, self.b):
                by_len[len(p)] = by_len.get(len(p), 0) + 1
            profile = counting.exact_parts_profile(n, self.b)
            got = {l: c for l, c in enumerate(profile, 1) if c}
            if got != {l: c for l, c in by_len.items() if l >= 1}:
                yield f"n={n}: formula {got} vs oracle {by_len}"
            else:
                yield None

    def check_diagram_shape(self) -> Iterator[str | None]:
        for n in range(self.max_n + 1):
            d = self._hasse(n)
            src, snk = d.sources(), d.sinks()
            n_succ = sum(len(successors(p)) for p in d.nodes)
            if [d.nodes[k] for k in src] != [top(n, self.b)]:
                yield f"n={n}: sources {src}"
            elif [d.nodes[k] for k in snk] != [canonical(n, self.b)]:
                yield f"n={n}: sinks {snk}"
            elif n_succ != len(d.edges):
                yield f"n={n}: {len(d.edges)} edges but {n_succ} successor pairs"
            else:
                yield None

    def check_incremental(self) -> Iterator[str | None]:
        prev = self._hasse(0)
        for n in range(1, self.max_n + 1):
            cur = self._hasse(n)
            grown = lattice.incremental_next(prev)
            if not grown.same_as(cur):
                yield f"incremental R_{self.b}({n - 1}) -> R_{self.b}({n}) differs from direct build"
            else:
                yield None
            prev = cur

    def check_decomposition(self) -> Iterator[str | None]:
        for n in range(self.max_n + 1):
            blocks = lattice.decompose(n, self.b)
            total = sum(len(blk) for _, blk in blocks)
            union = set().union(*(blk for _, blk in blocks))
            if total != len(union) or union != self._hasse(n).node_set():
                yield f"n={n}: blocks are not a partition of R_{self.b}({n})"
            else:
                yield None

    def check_cfg(self) -> Iterator[str | None]:
        for n in range(self.max_n + 1):
            confs = cfg.reachable_configs(n, self.b)
            image = {cfg.to_partition(c) for c in confs}
            if len(image) != len(confs) or image != self._hasse(n).node_set():
                yield f"n={n}: chip-firing configurations do not match R_{self.b}({n})"
                continue
            bad = None
            for c in confs:
                p = cfg.to_partition(c)
                for i in range(len(p.parts)):
                    if (i in c.fireable()) != (p.parts[i] >= self.b):
                        bad = f"n={n}: firing conditions differ at vertex {i} of {c.chips}"
                    elif p.parts[i] >= self.b and cfg.to_partition(cfg.fire_vertex(c, i)) != fire(p, i):
                        bad = f"n={n}: firing vertex {i} of {c.chips} does not commute with scaling"
            yield bad

    def check_order(self) -> Iterator[str | None]:
        for n in range(min(self.max_n, ORDER_MAX_N) + 1):
            yield order_counterexample(self._hasse(n))

    def check_distributive(self) -> Iterator[str | None]:
        for n in range(self.max_n + 1):
            d = self._hasse(n)
            if len(d.nodes) > self.limits.distributive_nodes:
                break
            yield None if lattice.check_distributive(d) else f"R_{self.b}({n}) is not distributive"

    def checks(self) -> list[tuple[str, Callable[[], Iterator[str | None]]]]:
        return [
            ("oracle = hasse = tree enumeration", self.check_enumeration),
            ("recurrence = sum = pi = oracle counts", self.check_counts),
            ("exact-parts counts", self.check_exact_parts),
            ("diagram top, bottom and edge count", self.check_diagram_shape),
            ("incremental construction", self.check_incremental),
            ("disjoint-union decomposition", self.check_decomposition),
            ("chip-firing isomorphism", self.check_cfg),
            ("order, join and meet vs reachability", self.check_order),
            ("distributivity", self.check_distributive),
        ]

    def run(self) -> Iterator[CheckResult]:
        for name, fn in self.checks():
            res = CheckResult(name, True)
            for outcome in fn():
                res.checked += 1
                if outcome is not None:
                    res.passed = False
                    res.counterexample = outcome
                    break
            yield res

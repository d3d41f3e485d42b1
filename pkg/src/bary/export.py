"""JSON and DOT documents for diagrams and tree levels."""
from __future__ import annotations

import json
from typing import Iterable

from .core import Partition
from .lattice import HasseDiagram


def diagram_to_dict(d: HasseDiagram) -> dict:
    return {
        "basis": d.b,
        "n": d.n,
        "nodes": [list(p.parts) for p in d.nodes],
        "edges": [[u, v, i] for u, v, i in d.edges],
    }


def diagram_from_dict(doc: dict) -> HasseDiagram:
    b, n = int(doc["basis"]), int(doc["n"])
    nodes = tuple(Partition(tuple(p), b) for p in doc["nodes"])
    edges = tuple((int(u), int(v), int(i)) for u, v, i in doc["edges"])
    return HasseDiagram(b, n, nodes, edges)


def diagram_to_json(d: HasseDiagram) -> str:
    return json.dumps(diagram_to_dict(d), separators=(",", ":"))


def _dot_id(k: int) -> str:
    return f"n{k}"


def diagram_to_dot(d: HasseDiagram) -> str:
    lines = [f'digraph "R_{d.b}({d.n})" {{', "  rankdir=TB;", "  node [shape=plaintext];"]
    for k, p in enumerate(d.nodes):
        lines.append(f'  {_dot_id(k)} [label="{p.text()}"];')
    for u, v, i in d.edges:
        lines.append(f'  {_dot_id(u)} -> {_dot_id(v)} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_to_dot(b: int, levels: Iterable[Iterable[Partition]]) -> str:
    """Father-to-son edges of a tree prefix, labeled by the inc index."""
    from .tree import children

    lines = [f'digraph "T_{b}" {{', "  node [shape=plaintext];"]
    ids: dict[Partition, int] = {}
    prev: list[Partition] = []
    for level in levels:
        level = list(level)
        for p in level:
            ids[p] = len(ids)
            lines.append(f'  {_dot_id(ids[p])} [label="{p.text()}"];')
        for p in prev:
            for i, q in enumerate(children(p)):
                if q in ids:
                    lines.append(f'  {_dot_id(ids[p])} -> {_dot_id(ids[q])} [label="{i}"];')
        prev = level
    lines.append("}")
    return "\n".join(lines) + "\n"

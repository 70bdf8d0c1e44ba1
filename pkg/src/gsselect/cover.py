"""Minimum node cover as a special case of the covering program.

Each edge {n, m} becomes the row ``z_n + z_m >= 1``. Graph files are plain
text: a header ``N M`` followed by M lines ``n m`` with 1-based node ids.
"""
from __future__ import annotations

from dataclasses import dataclass
from os import PathLike

import numpy as np

from gsselect.errors import ParameterError
from gsselect.transform import BilpInstance


@dataclass(frozen=True)
class NodeCoverGraph:
    """Undirected simple graph; nodes are 0..num_nodes-1 internally."""

    num_nodes: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.num_nodes < 1:
            raise ParameterError("num_nodes: node set must be non-empty")
        seen = set()
        norm = []
        for n, m in self.edges:
            n, m = int(n), int(m)
            if not (0 <= n < self.num_nodes and 0 <= m < self.num_nodes):
                raise ParameterError(f"edges: ({n}, {m}) references a missing node")
            if n == m:
                raise ParameterError(f"edges: self-loop at node {n}")
            key = (min(n, m), max(n, m))
            if key in seen:
                raise ParameterError(f"edges: duplicate edge {key}")
            seen.add(key)
            norm.append(key)
        object.__setattr__(self, "edges", tuple(norm))

    def is_cover(self, nodes) -> bool:
        s = set(nodes)
        return all(n in s or m in s for n, m in self.edges)


def encode_node_cover(graph: NodeCoverGraph) -> BilpInstance:
    alpha = np.zeros((len(graph.edges), graph.num_nodes))
    for row, (n, m) in enumerate(graph.edges):
        alpha[row, n] = 1.0
        alpha[row, m] = 1.0
    return BilpInstance(alpha, np.ones(len(graph.edges)))


def parse_graph(text: str) -> NodeCoverGraph:
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise ParameterError("graph: first line must be 'N M'")
    try:
        n_nodes, n_edges = int(lines[0][0]), int(lines[0][1])
        pairs = [(int(a) - 1, int(b) - 1) for a, b in (ln for ln in lines[1:])]
    except ValueError:
        raise ParameterError("graph: expected integer fields, two per line") from None
    if len(pairs) != n_edges:
        raise ParameterError(f"graph: header declares {n_edges} edges, found {len(pairs)}")
    return NodeCoverGraph(n_nodes, tuple(pairs))


def format_graph(graph: NodeCoverGraph) -> str:
    out = [f"{graph.num_nodes} {len(graph.edges)}"]
    out += [f"{n + 1} {m + 1}" for n, m in graph.edges]
    return "\n".join(out) + "\n"


def load_graph(path: str | PathLike) -> NodeCoverGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def save_graph(graph: NodeCoverGraph, path: str | PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(graph))

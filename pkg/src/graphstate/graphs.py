"""Weighted undirected graphs and the weight invariants everything else consumes.

A spin system with pairwise diagonal couplings is modelled as a simple
undirected graph: vertices are spins, and an edge (i, j) carries the coupling
strength as its weight, expressed as a dimensionless multiple of a reference
coupling.  The geometric quantities computed downstream (energy moments,
evolution speed, curvature, torsion) reduce to a handful of invariants of
these weights:

* per-node weighted degrees with the weights raised to an integer power,
* the sum over triangles of the product of the three edge weights,
* the sum over four-cycles of the product of the four edge weights,
* traces of powers of the adjacency matrix, which tie the previous two to
  closed-walk counts and serve as an independent cross-check.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

Edge = tuple[int, int, float]

DEGREE_POWERS = (1, 2, 3, 4)
TRACE_POWERS = (2, 3, 4)


class GraphParseError(ValueError):
    """Malformed edge-list document; the message names the offending line."""


@dataclass(frozen=True)
class WeightedGraph:
    """Simple undirected graph with finite, nonzero real edge weights.

    Edges keep their input order (circuit emission relies on it), but each
    unordered node pair appears at most once.  Weights may be negative
    (antiferromagnetic couplings are allowed).
    """

    node_count: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.node_count, int) or self.node_count < 1:
            raise ValueError(f"node_count must be a positive integer, got {self.node_count!r}")
        normalized = tuple((int(i), int(j), float(w)) for i, j, w in self.edges)
        object.__setattr__(self, "edges", normalized)
        seen: set[tuple[int, int]] = set()
        for i, j, w in normalized:
            if not (0 <= i < self.node_count and 0 <= j < self.node_count):
                raise ValueError(f"edge ({i}, {j}) out of range for {self.node_count} nodes")
            if i == j:
                raise ValueError(f"self-loop on node {i}")
            if not math.isfinite(w):
                raise ValueError(f"edge ({i}, {j}) has non-finite weight {w!r}")
            if w == 0.0:
                raise ValueError(f"edge ({i}, {j}) has zero weight")
            pair = (i, j) if i < j else (j, i)
            if pair in seen:
                raise ValueError(f"duplicate edge ({i}, {j})")
            seen.add(pair)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def adjacency_matrix(self) -> np.ndarray:
        """Symmetric coupling matrix with zero diagonal."""
        a = np.zeros((self.node_count, self.node_count))
        for i, j, w in self.edges:
            a[i, j] = w
            a[j, i] = w
        return a


@dataclass(frozen=True)
class PowerGraph:
    """The same graph with every weight raised to an integer power (2, 3 or 4).

    Node and edge sets are untouched; only the weights change.
    """

    base: WeightedGraph
    power: int

    def __post_init__(self) -> None:
        if self.power not in (2, 3, 4):
            raise ValueError(f"power must be 2, 3 or 4, got {self.power!r}")

    @property
    def node_count(self) -> int:
        return self.base.node_count

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple((i, j, w**self.power) for i, j, w in self.base.edges)

    def as_graph(self) -> WeightedGraph:
        return WeightedGraph(self.base.node_count, self.edges)


def scaled(g: WeightedGraph, factor: float) -> WeightedGraph:
    """The same graph with every weight multiplied by a nonzero factor."""
    if not math.isfinite(factor) or factor == 0.0:
        raise ValueError(f"scale factor must be finite and nonzero, got {factor!r}")
    return WeightedGraph(g.node_count, tuple((i, j, w * factor) for i, j, w in g.edges))


# ---------------------------------------------------------------------------
# Invariants
# ---------------------------------------------------------------------------


def _check_degree_power(k: int) -> None:
    if k not in DEGREE_POWERS:
        raise ValueError(f"weight power must be one of {DEGREE_POWERS}, got {k!r}")


def _adjacency_map(g: WeightedGraph) -> list[dict[int, float]]:
    adj: list[dict[int, float]] = [{} for _ in range(g.node_count)]
    for i, j, w in g.edges:
        adj[i][j] = w
        adj[j][i] = w
    return adj


def weighted_degree(g: WeightedGraph, k: int, i: int) -> float:
    """Sum of w^k over the edges incident to node i."""
    _check_degree_power(k)
    if not 0 <= i < g.node_count:
        raise IndexError(f"node index {i} out of range for {g.node_count} nodes")
    return math.fsum(w**k for a, b, w in g.edges if i in (a, b))


def weighted_degree_sum(g: WeightedGraph, k: int) -> float:
    """Sum over all nodes of the k-th power weighted degree.

    Every edge is incident to two nodes, so this equals twice the sum of
    w^k over the edges.
    """
    _check_degree_power(k)
    return 2.0 * math.fsum(w**k for _, _, w in g.edges)


def triangle_weight_sum(g: WeightedGraph) -> float:
    """Sum over distinct triangles of the product of their three edge weights.

    Each unordered triangle is counted exactly once; the result can be
    negative when weights are.
    """
    adj = _adjacency_map(g)
    terms = []
    for i, j, w in g.edges:
        a, b = (i, j) if i < j else (j, i)
        # Require the third vertex above both endpoints so each triangle is
        # visited from its lexicographically smallest edge only.
        for k, wbk in adj[b].items():
            if k > b:
                wak = adj[a].get(k)
                if wak is not None:
                    terms.append(w * wbk * wak)
    return math.fsum(terms)


def square_weight_sum(g: WeightedGraph) -> float:
    """Sum over distinct four-cycles of the product of their four edge weights.

    A four-cycle on distinct vertices i, j, k, l is identified by its two
    diagonals {i, k} and {j, l}.  For every unordered node pair {i, k} the
    common neighbours j contribute partial products w_ij * w_jk; summing the
    pairwise products of those partials counts each cycle once per diagonal,
    so the grand total is halved.  Cost O(N^2 * average degree).
    """
    adj = _adjacency_map(g)
    n = g.node_count
    per_diagonal = []
    for i in range(n):
        row = adj[i]
        for k in range(i + 1, n):
            other = adj[k]
            partials = [w_ij * other[j] for j, w_ij in row.items() if j in other]
            if len(partials) < 2:
                continue
            s1 = math.fsum(partials)
            s2 = math.fsum(p * p for p in partials)
            per_diagonal.append(0.5 * (s1 * s1 - s2))
    return 0.5 * math.fsum(per_diagonal)


def adjacency_trace(g: WeightedGraph, k: int) -> float:
    """Trace of the k-th power of the adjacency matrix (k = 2, 3 or 4)."""
    if k not in TRACE_POWERS:
        raise ValueError(f"trace power must be one of {TRACE_POWERS}, got {k!r}")
    a = g.adjacency_matrix()
    return float(np.trace(np.linalg.matrix_power(a, k)))


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


def _parse_edge(fields: tuple[str, str, str], node_count: int,
                seen: set[tuple[int, int]], where: str) -> Edge:
    i_text, j_text, w_text = fields
    try:
        i, j = int(i_text), int(j_text)
    except ValueError:
        raise GraphParseError(f"{where}: node indices must be integers, got {i_text!r} {j_text!r}") from None
    if not (0 <= i < node_count and 0 <= j < node_count):
        raise GraphParseError(f"{where}: node index out of range for {node_count} nodes: ({i}, {j})")
    if i == j:
        raise GraphParseError(f"{where}: self-loop on node {i}")
    try:
        w = float(w_text)
    except ValueError:
        raise GraphParseError(f"{where}: non-numeric weight {w_text!r}") from None
    if not math.isfinite(w):
        raise GraphParseError(f"{where}: non-finite weight {w_text!r}")
    if w == 0.0:
        raise GraphParseError(f"{where}: zero weight on edge ({i}, {j})")
    pair = (i, j) if i < j else (j, i)
    if pair in seen:
        raise GraphParseError(f"{where}: duplicate edge ({i}, {j})")
    seen.add(pair)
    return i, j, w


def parse_graph(text: str) -> WeightedGraph:
    """Parse the plain edge-list format.

    The first non-comment line is the node count; each following line is
    ``i j w`` with 0-based indices and a decimal weight.  Lines starting
    with ``#`` and blank lines are skipped.
    """
    node_count: int | None = None
    edges: list[Edge] = []
    seen: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        where = f"line {line_no}"
        if node_count is None:
            try:
                node_count = int(line)
            except ValueError:
                raise GraphParseError(f"{where}: node count must be an integer, got {line!r}") from None
            if node_count < 1:
                raise GraphParseError(f"{where}: node count must be positive, got {node_count}")
            continue
        fields = line.split()
        if len(fields) != 3:
            raise GraphParseError(f"{where}: expected 'i j w', got {line!r}")
        edges.append(_parse_edge((fields[0], fields[1], fields[2]), node_count, seen, where))
    if node_count is None:
        raise GraphParseError("document contains no node count line")
    return WeightedGraph(node_count, tuple(edges))


def parse_graph_json(text: str) -> WeightedGraph:
    """Parse the JSON mirror ``{"nodes": N, "edges": [[i, j, w], ...]}``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "nodes" not in doc:
        raise GraphParseError("JSON document must be an object with a 'nodes' field")
    node_count = doc["nodes"]
    if not isinstance(node_count, int) or node_count < 1:
        raise GraphParseError(f"'nodes': node count must be a positive integer, got {node_count!r}")
    raw_edges = doc.get("edges", [])
    if not isinstance(raw_edges, list):
        raise GraphParseError("'edges' must be a list of [i, j, w] triples")
    edges: list[Edge] = []
    seen: set[tuple[int, int]] = set()
    for idx, entry in enumerate(raw_edges):
        where = f"edges[{idx}]"
        if not isinstance(entry, (list, tuple)) or len(entry) != 3:
            raise GraphParseError(f"{where}: expected an [i, j, w] triple, got {entry!r}")
        edges.append(_parse_edge((str(entry[0]), str(entry[1]), str(entry[2])), node_count, seen, where))
    return WeightedGraph(node_count, tuple(edges))


def load_graph(path: str) -> WeightedGraph:
    """Read a graph file, picking the JSON parser when the name ends in .json."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if str(path).endswith(".json"):
        return parse_graph_json(text)
    return parse_graph(text)

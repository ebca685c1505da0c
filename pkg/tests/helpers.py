"""Independent brute-force reference implementations used only by tests.

Everything here is written against the definitions, not against the package
code paths: triangles and four-cycles are enumerated over raw vertex tuples,
and the emitted-circuit simulator parses QASM text directly, so these stay
valid oracles for the production algorithms.
"""

from __future__ import annotations

import re
from itertools import combinations

import numpy as np

from graphstate.graphs import WeightedGraph

RZZ_LINE = re.compile(r"rzz\(([^)]+)\) q\[(\d+)\],q\[(\d+)\];")


def simulate_usquared_qasm(text: str) -> float:
    """Re-simulate an emitted overlap-decay circuit from its text alone.

    Parses the QASM directly (independent of the builder's data structures);
    the all-zeros amplitude of H-layer / diagonal phases / H-layer equals the
    configuration average of the accumulated phase factors.
    """
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("//")]
    assert lines[0] == "OPENQASM 2.0;"
    assert lines[1] == 'include "qelib1.inc";'
    n = int(re.fullmatch(r"qreg q\[(\d+)\];", lines[2]).group(1))
    rotations = []
    h_count = 0
    measure_count = 0
    for ln in lines[3:]:
        m = RZZ_LINE.fullmatch(ln)
        if m:
            rotations.append((float(m.group(1)), int(m.group(2)), int(m.group(3))))
        elif ln.startswith("h "):
            h_count += 1
        elif ln.startswith("measure "):
            measure_count += 1
    assert h_count == 2 * n and measure_count == n
    z = np.arange(1 << n, dtype=np.int64)
    phase = np.zeros(1 << n)
    for angle, a, b in rotations:
        sign = 1.0 - 2.0 * (((z >> a) ^ (z >> b)) & 1)
        phase += 0.5 * angle * sign
    amplitude = np.mean(np.exp(-1j * phase))
    return float(abs(amplitude) ** 2)


def edge_weight_map(g: WeightedGraph) -> dict[tuple[int, int], float]:
    return {(min(i, j), max(i, j)): w for i, j, w in g.edges}


def brute_triangle_sum(g: WeightedGraph) -> float:
    """Triangle weight sum by direct enumeration of vertex triples."""
    wmap = edge_weight_map(g)
    total = 0.0
    for a, b, c in combinations(range(g.node_count), 3):
        try:
            total += wmap[(a, b)] * wmap[(b, c)] * wmap[(a, c)]
        except KeyError:
            continue
    return total


def _cycle_product(wmap, cycle) -> float | None:
    prod = 1.0
    m = len(cycle)
    for idx in range(m):
        a, b = cycle[idx], cycle[(idx + 1) % m]
        key = (min(a, b), max(a, b))
        if key not in wmap:
            return None
        prod *= wmap[key]
    return prod


def brute_square_sum(g: WeightedGraph) -> float:
    """Four-cycle weight sum: the three distinct cycles per vertex 4-subset."""
    wmap = edge_weight_map(g)
    total = 0.0
    for a, b, c, d in combinations(range(g.node_count), 4):
        for cycle in ((a, b, c, d), (a, c, b, d), (a, b, d, c)):
            prod = _cycle_product(wmap, cycle)
            if prod is not None:
                total += prod
    return total


def brute_square_sum_ordered(g: WeightedGraph) -> float:
    """Four-cycle weight sum from the ordered-tuple definition.

    Sums adjacency products over all ordered (i, j, k, l) with i != k and
    j != l, then removes the 8-fold overcount (4 rotations x 2 orientations).
    """
    a = g.adjacency_matrix()
    n = g.node_count
    total = 0.0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if k == i:
                    continue
                for l in range(n):
                    if l == j:
                        continue
                    total += a[i, j] * a[j, k] * a[k, l] * a[l, i]
    return total / 8.0


def count_triangles(g: WeightedGraph) -> int:
    wmap = edge_weight_map(g)
    count = 0
    for a, b, c in combinations(range(g.node_count), 3):
        if (a, b) in wmap and (b, c) in wmap and (a, c) in wmap:
            count += 1
    return count


def count_squares(g: WeightedGraph) -> int:
    wmap = edge_weight_map(g)
    count = 0
    for a, b, c, d in combinations(range(g.node_count), 4):
        for cycle in ((a, b, c, d), (a, c, b, d), (a, b, d, c)):
            if _cycle_product(wmap, cycle) is not None:
                count += 1
    return count


def random_graph(rng: np.random.Generator, n: int, p: float = 0.5,
                 lo: float = -2.0, hi: float = 2.0,
                 min_abs_weight: float = 0.0) -> WeightedGraph:
    """Erdos-Renyi style weighted graph with uniform weights in [lo, hi]."""
    edges = []
    for i, j in combinations(range(n), 2):
        if rng.random() < p:
            w = 0.0
            while w == 0.0 or abs(w) < min_abs_weight:
                w = float(rng.uniform(lo, hi))
            edges.append((i, j, w))
    return WeightedGraph(n, tuple(edges))


def random_unweighted_graph(rng: np.random.Generator, n: int, p: float = 0.5) -> WeightedGraph:
    edges = [(i, j, 1.0) for i, j in combinations(range(n), 2) if rng.random() < p]
    return WeightedGraph(n, tuple(edges))


def relabel(g: WeightedGraph, perm: list[int]) -> WeightedGraph:
    """Graph with node labels permuted by perm (perm[old] = new)."""
    return WeightedGraph(g.node_count, tuple((perm[i], perm[j], w) for i, j, w in g.edges))


def isclose_tol(x: float, y: float, rel: float, abs_tol: float) -> bool:
    return abs(x - y) <= max(abs_tol, rel * max(abs(x), abs(y)))

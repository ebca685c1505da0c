"""Exact brute-force reference over all 2^N spin configurations.

The coupling Hamiltonian is diagonal in the computational basis and the
initial state is the uniform superposition, so every quantity of interest is
a plain average over the 2^N classical spin assignments: the configuration
integer z maps bit i to spin s_i = +1 (bit clear) or -1 (bit set), and

    E(z) = sum over edges of w_ij * s_i * s_j.

These routines are deliberately exhaustive; they are the ground truth the
closed-form graph expressions are validated against.  The enumeration is
streamed in fixed-size blocks so memory stays bounded, and block partial
sums are combined with exact (fsum) accumulation, which keeps results
independent of the partitioning to well below the advertised tolerances.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .graphs import WeightedGraph

DEFAULT_MAX_NODES = 24
DEFAULT_BLOCK = 1 << 16
MAX_NODES_ENV_VAR = "GRAPHSTATE_ORACLE_MAX_NODES"


class SizeCapError(ValueError):
    """Enumeration refused: the graph exceeds the configured node cap."""


def size_cap() -> int:
    """Current enumeration cap: the environment override or the default."""
    raw = os.environ.get(MAX_NODES_ENV_VAR)
    if raw is None:
        return DEFAULT_MAX_NODES
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_NODES_ENV_VAR} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"{MAX_NODES_ENV_VAR} must be positive, got {cap}")
    return cap


def _check_size(g: WeightedGraph, max_nodes: int | None) -> None:
    cap = size_cap() if max_nodes is None else max_nodes
    if g.node_count > cap:
        raise SizeCapError(
            f"graph has {g.node_count} nodes; enumeration over 2^{g.node_count} "
            f"configurations exceeds the cap of {cap} nodes"
        )


def _energy_block(g: WeightedGraph, start: int, stop: int) -> np.ndarray:
    z = np.arange(start, stop, dtype=np.int64)
    e = np.zeros(stop - start)
    for i, j, w in g.edges:
        # s_i * s_j = +1 when bits i and j agree, -1 when they differ.
        disagree = ((z >> i) ^ (z >> j)) & 1
        e += w * (1.0 - 2.0 * disagree)
    return e


def _energy_blocks(g: WeightedGraph, block: int) -> Iterator[np.ndarray]:
    total = 1 << g.node_count
    for start in range(0, total, block):
        yield _energy_block(g, start, min(start + block, total))


@dataclass(frozen=True, eq=False)
class EnergySpectrum:
    """All 2^N configuration energies of a graph, indexed by the
    configuration integer."""

    graph: WeightedGraph
    energies: np.ndarray


def spectrum(g: WeightedGraph, max_nodes: int | None = None,
             block: int = DEFAULT_BLOCK) -> EnergySpectrum:
    """Materialize every configuration energy (2^N doubles)."""
    _check_size(g, max_nodes)
    total = 1 << g.node_count
    energies = np.empty(total)
    for start in range(0, total, block):
        stop = min(start + block, total)
        energies[start:stop] = _energy_block(g, start, stop)
    return EnergySpectrum(graph=g, energies=energies)


def oracle_moment(g: WeightedGraph, n: int, max_nodes: int | None = None,
                  block: int = DEFAULT_BLOCK) -> float:
    """n-th moment of the energy over the uniform configuration ensemble.

    The first moment is returned as exactly zero: every edge term averages
    to zero over the full configuration range.
    """
    if n not in (1, 2, 3, 4):
        raise ValueError(f"moment order must be 1, 2, 3 or 4, got {n!r}")
    _check_size(g, max_nodes)
    if n == 1:
        return 0.0
    parts = [float(np.sum(e**n)) for e in _energy_blocks(g, block)]
    return math.fsum(parts) / float(1 << g.node_count)


def loschmidt_amplitude(g: WeightedGraph, t: float, max_nodes: int | None = None,
                        block: int = DEFAULT_BLOCK) -> complex:
    """Overlap of the evolved state with the initial uniform superposition.

    Equals the configuration average of exp(-i * E(z) * t); its value at
    t = 0 is exactly 1 and its modulus never exceeds 1.
    """
    _check_size(g, max_nodes)
    re_parts: list[float] = []
    im_parts: list[float] = []
    for e in _energy_blocks(g, block):
        s = np.sum(np.exp(-1j * t * e))
        re_parts.append(float(s.real))
        im_parts.append(float(s.imag))
    denom = float(1 << g.node_count)
    return complex(math.fsum(re_parts) / denom, math.fsum(im_parts) / denom)


def zz_correlator(g: WeightedGraph, i: int, j: int, t: float = 0.0,
                  max_nodes: int | None = None, block: int = DEFAULT_BLOCK) -> float:
    """Two-spin z-z correlator in the evolved state.

    The evolution is diagonal, so computational-basis probabilities stay
    uniform and the correlator is independent of t; it is the average of
    s_i * s_j, which vanishes for the uniform ensemble.  Computed by actual
    enumeration (in exact integer arithmetic) rather than asserted.
    """
    if i == j:
        raise ValueError("correlator requires two distinct spins")
    for idx in (i, j):
        if not 0 <= idx < g.node_count:
            raise IndexError(f"node index {idx} out of range for {g.node_count} nodes")
    _check_size(g, max_nodes)
    del t  # diagonal evolution commutes with the observable
    total = 0
    full = 1 << g.node_count
    for start in range(0, full, block):
        z = np.arange(start, min(start + block, full), dtype=np.int64)
        disagree = ((z >> i) ^ (z >> j)) & 1
        total += int(np.sum(1 - 2 * disagree))
    return total / float(full)

"""Energy-fluctuation moments and the geometry of the evolving state.

For a diagonal pair-coupling Hamiltonian acting on the uniform
superposition, the second, third and fourth central moments of the energy
are exact polynomial functions of the graph invariants:

    m2 = (sum of squared-weight degrees) / 2
    m3 = 6 * (triangle weight sum)
    m4 = 24 * (four-cycle weight sum) + 0.75 * (sum of squared-weight degrees)^2
         - (sum of fourth-power degrees)

The evolution speed is sqrt(m2) (with the metric constant and hbar fixed
to 1), and the trajectory's curvature and torsion are the dimensionless
ratios

    curvature = (m4 - m2^2) / m2^2
    torsion   = curvature - m3^2 / m2^3

Each of curvature and torsion is implemented twice: once through the moment
ratios above, and once as a closed form directly in the invariants.  The two
paths are algebraically identical and the tests pin them together.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import (
    WeightedGraph,
    square_weight_sum,
    triangle_weight_sum,
    weighted_degree_sum,
)


class ZeroVarianceError(ValueError):
    """Curvature and torsion are undefined when the energy variance vanishes
    (the graph has no edges)."""


@dataclass(frozen=True)
class EnergyMoments:
    """Central energy moments in units of the reference coupling to the
    matching power: m2 in J^2, m3 in J^3, m4 in J^4."""

    m2: float
    m3: float
    m4: float


@dataclass(frozen=True)
class GeometryReport:
    """Geometric characteristics of the evolving state plus the graph
    invariants they were computed from."""

    velocity_over_gamma: float
    curvature: float
    torsion: float
    moments: EnergyMoments
    invariants_used: dict[str, float]


def moment2(g: WeightedGraph) -> float:
    """Energy variance: half the sum of squared-weight degrees."""
    return 0.5 * weighted_degree_sum(g, 2)


def moment3(g: WeightedGraph) -> float:
    """Third central moment: six times the triangle weight sum."""
    return 6.0 * triangle_weight_sum(g)


def moment4(g: WeightedGraph) -> float:
    """Fourth central moment from four-cycles and degree sums."""
    sum_n2 = weighted_degree_sum(g, 2)
    sum_n4 = weighted_degree_sum(g, 4)
    return 24.0 * square_weight_sum(g) + 0.75 * sum_n2 * sum_n2 - sum_n4


def moments(g: WeightedGraph) -> EnergyMoments:
    return EnergyMoments(m2=moment2(g), m3=moment3(g), m4=moment4(g))


def velocity(g: WeightedGraph) -> float:
    """Evolution speed sqrt(m2), in units J/hbar with hbar = 1."""
    return math.sqrt(moment2(g))


def _require_variance(m2: float) -> None:
    if m2 == 0.0:
        raise ZeroVarianceError(
            "graph has no edges, so the energy variance is zero and "
            "curvature/torsion are undefined"
        )


def curvature(g: WeightedGraph) -> float:
    """Dimensionless curvature (m4 - m2^2) / m2^2 of the state trajectory."""
    m2 = moment2(g)
    _require_variance(m2)
    m4 = moment4(g)
    return (m4 - m2 * m2) / (m2 * m2)


def curvature_from_invariants(g: WeightedGraph) -> float:
    """Curvature as a closed form in the graph invariants.

    Algebraically identical to :func:`curvature`; kept as a separate code
    path so the identity can be asserted instead of assumed.
    """
    sum_n2 = weighted_degree_sum(g, 2)
    _require_variance(0.5 * sum_n2)
    sum_n4 = weighted_degree_sum(g, 4)
    s4 = square_weight_sum(g)
    return (96.0 * s4 + 2.0 * sum_n2 * sum_n2 - 4.0 * sum_n4) / (sum_n2 * sum_n2)


def torsion(g: WeightedGraph) -> float:
    """Dimensionless torsion: curvature minus the squared-skewness term."""
    m2 = moment2(g)
    _require_variance(m2)
    m3 = moment3(g)
    return curvature(g) - (m3 * m3) / (m2 * m2 * m2)


def torsion_from_invariants(g: WeightedGraph) -> float:
    """Torsion as a closed form in the graph invariants (second code path)."""
    sum_n2 = weighted_degree_sum(g, 2)
    _require_variance(0.5 * sum_n2)
    s3 = triangle_weight_sum(g)
    return curvature_from_invariants(g) - 288.0 * s3 * s3 / (sum_n2 * sum_n2 * sum_n2)


def geometry_report(g: WeightedGraph) -> GeometryReport:
    """Full geometric characterization of the graph state evolution.

    Raises :class:`ZeroVarianceError` for edgeless graphs, where curvature
    and torsion are undefined (the speed alone would be zero).
    """
    m = moments(g)
    _require_variance(m.m2)
    invariants = {
        "sum_n2": weighted_degree_sum(g, 2),
        "sum_n3": weighted_degree_sum(g, 3),
        "sum_n4": weighted_degree_sum(g, 4),
        "s3": triangle_weight_sum(g),
        "s4": square_weight_sum(g),
    }
    return GeometryReport(
        velocity_over_gamma=velocity(g),
        curvature=curvature(g),
        torsion=torsion(g),
        moments=m,
        invariants_used=invariants,
    )

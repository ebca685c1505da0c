"""Geometry of Ising graph states from weighted-graph invariants.

Core layers:

* :mod:`graphstate.graphs` — the graph data model, parsing, and weight
  invariants (weighted degrees, triangle and four-cycle weight sums);
* :mod:`graphstate.geometry` — energy moments and the velocity, curvature,
  and torsion of the evolving state;
* :mod:`graphstate.oracle` — exact 2^N enumeration used as ground truth;
* :mod:`graphstate.experiment` — shot-noise simulation of the measurement
  protocols and the error-budget arithmetic;
* :mod:`graphstate.circuits` — protocol circuits and OpenQASM emission;
* :mod:`graphstate.service` — FastAPI service wrapping all of the above;
* :mod:`graphstate.cli` — thin command-line client over the same handlers.
"""

from .circuits import (
    CircuitDescription,
    HGate,
    MeasureGate,
    RzzGate,
    build_correlator_protocol,
    build_usquared_protocol,
    to_qasm,
)
from .experiment import (
    DegenerateFitError,
    ErrorBudget,
    SweepConfig,
    SweepPoint,
    SweepResult,
    default_phi_grid,
    error_budget,
    estimate_correlator,
    run_sweep,
    sweep_csv,
)
from .geometry import (
    EnergyMoments,
    GeometryReport,
    ZeroVarianceError,
    curvature,
    curvature_from_invariants,
    geometry_report,
    moment2,
    moment3,
    moment4,
    moments,
    torsion,
    torsion_from_invariants,
    velocity,
)
from .graphs import (
    GraphParseError,
    PowerGraph,
    WeightedGraph,
    adjacency_trace,
    load_graph,
    parse_graph,
    parse_graph_json,
    scaled,
    square_weight_sum,
    triangle_weight_sum,
    weighted_degree,
    weighted_degree_sum,
)
from .oracle import (
    EnergySpectrum,
    SizeCapError,
    loschmidt_amplitude,
    oracle_moment,
    spectrum,
    zz_correlator,
)

__version__ = "0.1.0"

__all__ = [
    "CircuitDescription",
    "DegenerateFitError",
    "EnergyMoments",
    "EnergySpectrum",
    "ErrorBudget",
    "GeometryReport",
    "GraphParseError",
    "HGate",
    "MeasureGate",
    "PowerGraph",
    "RzzGate",
    "SizeCapError",
    "SweepConfig",
    "SweepPoint",
    "SweepResult",
    "WeightedGraph",
    "ZeroVarianceError",
    "adjacency_trace",
    "build_correlator_protocol",
    "build_usquared_protocol",
    "curvature",
    "curvature_from_invariants",
    "default_phi_grid",
    "error_budget",
    "estimate_correlator",
    "geometry_report",
    "load_graph",
    "loschmidt_amplitude",
    "moment2",
    "moment3",
    "moment4",
    "moments",
    "oracle_moment",
    "parse_graph",
    "parse_graph_json",
    "run_sweep",
    "scaled",
    "spectrum",
    "square_weight_sum",
    "sweep_csv",
    "to_qasm",
    "torsion",
    "torsion_from_invariants",
    "triangle_weight_sum",
    "velocity",
    "weighted_degree",
    "weighted_degree_sum",
    "zz_correlator",
    "__version__",
]

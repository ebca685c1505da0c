"""Handlers shared by the HTTP routes and the command-line client.

All real work happens here: routes and CLI subcommands only translate their
transport (JSON body or argv) into these calls, so both surfaces stay in
lockstep.  Handlers raise the domain errors of the core modules; the service
maps them to HTTP statuses and the CLI to exit codes.
"""

from __future__ import annotations

from .. import __version__
from ..circuits import build_correlator_protocol, build_usquared_protocol, gates_as_dicts, to_qasm
from ..experiment import (
    CHAIN_HARDWARE_REFERENCE,
    SweepConfig,
    SweepResult,
    default_phi_grid,
    error_budget,
    estimate_correlator,
    phi_grid,
    run_sweep,
    sweep_csv,
)
from ..geometry import ZeroVarianceError, geometry_report, moments
from ..graphs import (
    WeightedGraph,
    adjacency_trace,
    square_weight_sum,
    triangle_weight_sum,
    weighted_degree_sum,
)
from ..oracle import oracle_moment
from .schemas import (
    AnalyzeRequest,
    AnalyzeResponse,
    CircuitResponse,
    CorrelatorCircuitRequest,
    CorrelatorRequest,
    CorrelatorResponse,
    ErrorBudgetRequest,
    ErrorBudgetResponse,
    FitModel,
    GeometryModel,
    GraphSummaryModel,
    InvariantsModel,
    MomentsModel,
    OracleCheckModel,
    ProvenanceModel,
    SweepPointModel,
    SweepRequest,
    SweepResponse,
    UsquaredCircuitRequest,
)

_REFERENCE_CHAIN_EDGES = {(0, 1, 1.0), (1, 2, 2.0)}


def _relative_deviation(value: float, reference: float) -> float:
    return abs(value - reference) / max(1.0, abs(reference))


def analyze_graph(g: WeightedGraph, oracle: bool = False,
                  oracle_max_nodes: int | None = None) -> AnalyzeResponse:
    """Invariants, moments, and geometry of one graph, optionally
    cross-checked against the enumeration oracle."""
    invariants = InvariantsModel(
        sum_n2=weighted_degree_sum(g, 2),
        sum_n3=weighted_degree_sum(g, 3),
        sum_n4=weighted_degree_sum(g, 4),
        s3=triangle_weight_sum(g),
        s4=square_weight_sum(g),
        trace_a2=adjacency_trace(g, 2),
        trace_a3=adjacency_trace(g, 3),
        trace_a4=adjacency_trace(g, 4),
    )
    m = moments(g)
    geometry = None
    note = None
    try:
        report = geometry_report(g)
        geometry = GeometryModel(
            velocity=report.velocity_over_gamma,
            curvature=report.curvature,
            torsion=report.torsion,
        )
    except ZeroVarianceError:
        note = ("graph has no edges: evolution speed is 0 and curvature/torsion "
                "are undefined (zero energy variance)")
    oracle_block = None
    if oracle:
        oracle_values = {n: oracle_moment(g, n, max_nodes=oracle_max_nodes) for n in (2, 3, 4)}
        max_dev = max(
            _relative_deviation(m.m2, oracle_values[2]),
            _relative_deviation(m.m3, oracle_values[3]),
            _relative_deviation(m.m4, oracle_values[4]),
        )
        oracle_block = OracleCheckModel(
            m2=oracle_values[2], m3=oracle_values[3], m4=oracle_values[4],
            max_relative_deviation=max_dev,
        )
    return AnalyzeResponse(
        graph=GraphSummaryModel(node_count=g.node_count, edge_count=g.edge_count),
        invariants=invariants,
        moments=MomentsModel(m2=m.m2, m3=m.m3, m4=m.m4),
        geometry=geometry,
        geometry_note=note,
        provenance=ProvenanceModel(oracle=oracle_block),
        version=__version__,
    )


def analyze(req: AnalyzeRequest) -> AnalyzeResponse:
    return analyze_graph(req.graph.to_graph(), oracle=req.oracle,
                         oracle_max_nodes=req.oracle_max_nodes)


def _resolve_grid(phi_values: list[float] | None, phi_min: float | None,
                  phi_max: float | None, phi_step: float | None) -> tuple[float, ...]:
    if phi_values is not None:
        return tuple(phi_values)
    bounds = (phi_min, phi_max, phi_step)
    if all(v is None for v in bounds):
        return default_phi_grid()
    if any(v is None for v in bounds):
        raise ValueError("specify all of phi_min/phi_max/phi_step or none of them")
    return phi_grid(phi_min, phi_max, phi_step)


def is_reference_chain(g: WeightedGraph) -> bool:
    """True for the canonical three-node chain with couplings (1, 2)."""
    if g.node_count != 3 or g.edge_count != 2:
        return False
    canonical = {(min(i, j), max(i, j), w) for i, j, w in g.edges}
    return canonical == _REFERENCE_CHAIN_EDGES


def sweep_result(g: WeightedGraph, req: SweepRequest) -> SweepResult:
    grid = _resolve_grid(req.phi_values, req.phi_min, req.phi_max, req.phi_step)
    cfg = SweepConfig(
        graph=g,
        phi_values=grid,
        shots=req.shots,
        seed=req.seed,
        ideal=req.ideal,
        weighted_fit=req.weighted_fit,
    )
    return run_sweep(cfg, max_nodes=req.oracle_max_nodes)


def sweep_response(g: WeightedGraph, result: SweepResult) -> SweepResponse:
    return SweepResponse(
        points=[SweepPointModel(phi=pt.phi, probability=pt.probability, stderr=pt.stderr)
                for pt in result.points],
        fit=FitModel(a=result.fit_a, b=result.fit_b),
        inferred_m2=result.inferred_m2,
        inferred_sum_n2=result.inferred_sum_n2,
        shots=result.shots,
        seed=result.seed,
        ideal=result.ideal,
        weighted_fit=result.weighted_fit,
        rng=result.rng,
        hardware_reference=dict(CHAIN_HARDWARE_REFERENCE) if is_reference_chain(g) else None,
    )


def sweep(req: SweepRequest) -> SweepResponse:
    g = req.graph.to_graph()
    return sweep_response(g, sweep_result(g, req))


def sweep_as_csv(req: SweepRequest) -> str:
    g = req.graph.to_graph()
    return sweep_csv(sweep_result(g, req))


def correlator(req: CorrelatorRequest) -> CorrelatorResponse:
    g = req.graph.to_graph()
    estimate = estimate_correlator(g, req.i, req.j, shots=req.shots,
                                   seed=req.seed, ideal=req.ideal)
    return CorrelatorResponse(estimate=estimate, i=req.i, j=req.j,
                              shots=req.shots, seed=req.seed, ideal=req.ideal)


def budget(req: ErrorBudgetRequest) -> ErrorBudgetResponse:
    result = error_budget(req.gate_errors, req.readout_errors, req.shots, req.probability)
    return ErrorBudgetResponse(
        gate_error=result.gate_error,
        readout_error=result.readout_error,
        standard_error=result.standard_error,
        total=result.total,
    )


def usquared_circuit_for(g: WeightedGraph, phi: float) -> CircuitResponse:
    circuit = build_usquared_protocol(g, phi)
    return CircuitResponse(
        protocol="usquared",
        qubit_count=circuit.qubit_count,
        qasm=to_qasm(circuit),
        gates=gates_as_dicts(circuit),
        metadata=dict(circuit.metadata),
    )


def usquared_circuit(req: UsquaredCircuitRequest) -> CircuitResponse:
    return usquared_circuit_for(req.graph.to_graph(), req.phi)


def correlator_circuit(req: CorrelatorCircuitRequest) -> CircuitResponse:
    circuit = build_correlator_protocol(req.i, req.j)
    return CircuitResponse(
        protocol="correlator",
        qubit_count=circuit.qubit_count,
        qasm=to_qasm(circuit),
        gates=gates_as_dicts(circuit),
        metadata=dict(circuit.metadata),
    )

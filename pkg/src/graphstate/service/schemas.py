"""Request/response models shared by the HTTP service and the CLI."""

from __future__ import annotations

from pydantic import BaseModel, Field

from ..graphs import WeightedGraph


class GraphModel(BaseModel):
    """Wire form of a graph: node count plus [i, j, w] edge triples."""

    nodes: int = Field(ge=1, description="Number of nodes")
    edges: list[tuple[int, int, float]] = Field(
        default_factory=list,
        description="Edges as [i, j, weight] with 0-based indices and nonzero weight",
    )

    def to_graph(self) -> WeightedGraph:
        return WeightedGraph(self.nodes, tuple(self.edges))

    @classmethod
    def from_graph(cls, g: WeightedGraph) -> "GraphModel":
        return cls(nodes=g.node_count, edges=[(i, j, w) for i, j, w in g.edges])


class GraphSummaryModel(BaseModel):
    node_count: int
    edge_count: int


class InvariantsModel(BaseModel):
    """Weight invariants: powered-degree sums, cycle weight sums, traces."""

    sum_n2: float
    sum_n3: float
    sum_n4: float
    s3: float
    s4: float
    trace_a2: float
    trace_a3: float
    trace_a4: float


class MomentsModel(BaseModel):
    m2: float
    m3: float
    m4: float


class GeometryModel(BaseModel):
    velocity: float
    curvature: float
    torsion: float


class OracleCheckModel(BaseModel):
    """Brute-force moments and their worst relative deviation from the
    closed-form values."""

    m2: float
    m3: float
    m4: float
    max_relative_deviation: float


class ProvenanceModel(BaseModel):
    moments_source: str = "graph-invariants"
    oracle: OracleCheckModel | None = None


class AnalyzeRequest(BaseModel):
    graph: GraphModel
    oracle: bool = False
    oracle_max_nodes: int | None = Field(
        default=None, ge=1,
        description="Override for the enumeration node cap (default from environment or 24)",
    )


class AnalyzeResponse(BaseModel):
    graph: GraphSummaryModel
    invariants: InvariantsModel
    moments: MomentsModel
    geometry: GeometryModel | None = None
    geometry_note: str | None = None
    provenance: ProvenanceModel
    version: str


class SweepRequest(BaseModel):
    graph: GraphModel
    phi_values: list[float] | None = Field(
        default=None, description="Explicit angle grid; overrides phi_min/max/step")
    phi_min: float | None = None
    phi_max: float | None = None
    phi_step: float | None = None
    shots: int = Field(default=1024, ge=1)
    seed: int = Field(default=0, ge=0)
    ideal: bool = False
    weighted_fit: bool = False
    oracle_max_nodes: int | None = Field(default=None, ge=1)


class SweepPointModel(BaseModel):
    phi: float
    probability: float
    stderr: float


class FitModel(BaseModel):
    a: float
    b: float


class SweepResponse(BaseModel):
    points: list[SweepPointModel]
    fit: FitModel
    inferred_m2: float
    inferred_sum_n2: float
    shots: int
    seed: int
    ideal: bool
    weighted_fit: bool
    rng: str
    hardware_reference: dict | None = Field(
        default=None,
        description="Published hardware-run values for the canonical (1,2) chain; "
                    "a documented comparison point, not a target",
    )


class CorrelatorRequest(BaseModel):
    graph: GraphModel
    i: int
    j: int
    shots: int = Field(default=1024, ge=1)
    seed: int = Field(default=0, ge=0)
    ideal: bool = False


class CorrelatorResponse(BaseModel):
    estimate: float
    i: int
    j: int
    shots: int
    seed: int
    ideal: bool


class ErrorBudgetRequest(BaseModel):
    gate_errors: list[float] = Field(default_factory=list)
    readout_errors: list[float] = Field(default_factory=list)
    shots: int = Field(ge=1)
    probability: float = Field(ge=0.0, le=1.0)


class ErrorBudgetResponse(BaseModel):
    gate_error: float
    readout_error: float
    standard_error: float
    total: float


class UsquaredCircuitRequest(BaseModel):
    graph: GraphModel
    phi: float = Field(description="Evolution angle (reference coupling times time)")


class CorrelatorCircuitRequest(BaseModel):
    i: int
    j: int


class CircuitResponse(BaseModel):
    protocol: str
    qubit_count: int
    qasm: str
    gates: list[dict]
    metadata: dict


class HealthResponse(BaseModel):
    status: str
    version: str

"""Protocol circuits and their OpenQASM 2.0 serialization.

Two measurement protocols are built here:

* the overlap-decay protocol: Hadamards on every qubit, one two-qubit phase
  rotation per graph edge with angle 2 * weight * time, Hadamards again,
  then a full measurement — the all-zeros outcome frequency estimates the
  squared evolution-operator mean value;
* the correlator protocol: Hadamard and measurement on two qubits, whose
  outcome frequencies combine with signs (+, -, -, +) into the two-spin z-z
  correlator of the plus state.

Serialization is deterministic byte for byte; angles are printed with 17
significant digits so the emitted text round-trips the underlying doubles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Union

from .graphs import WeightedGraph


@dataclass(frozen=True)
class HGate:
    qubit: int


@dataclass(frozen=True)
class RzzGate:
    """Two-qubit phase rotation exp(-i * angle * Z(a) Z(b) / 2)."""

    angle: float
    qubit_a: int
    qubit_b: int


@dataclass(frozen=True)
class MeasureGate:
    qubit: int
    clbit: int


Gate = Union[HGate, RzzGate, MeasureGate]


@dataclass(frozen=True)
class CircuitDescription:
    """One protocol instance: an ordered gate list over a qubit register.

    Measurements may only appear at the end, and each measured qubit is
    measured exactly once into its own classical bit.
    """

    qubit_count: int
    gates: tuple[Gate, ...]
    metadata: Mapping[str, object] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.qubit_count < 0:
            raise ValueError(f"qubit_count must be non-negative, got {self.qubit_count}")
        object.__setattr__(self, "gates", tuple(self.gates))
        measuring = False
        measured_qubits: set[int] = set()
        used_clbits: set[int] = set()
        for gate in self.gates:
            if isinstance(gate, MeasureGate):
                measuring = True
                self._check_qubit(gate.qubit)
                if not 0 <= gate.clbit < self.qubit_count:
                    raise ValueError(f"classical bit {gate.clbit} out of range")
                if gate.qubit in measured_qubits:
                    raise ValueError(f"qubit {gate.qubit} measured twice")
                if gate.clbit in used_clbits:
                    raise ValueError(f"classical bit {gate.clbit} written twice")
                measured_qubits.add(gate.qubit)
                used_clbits.add(gate.clbit)
                continue
            if measuring:
                raise ValueError("gates may not follow measurements")
            if isinstance(gate, HGate):
                self._check_qubit(gate.qubit)
            elif isinstance(gate, RzzGate):
                self._check_qubit(gate.qubit_a)
                self._check_qubit(gate.qubit_b)
                if gate.qubit_a == gate.qubit_b:
                    raise ValueError("two-qubit gate needs distinct qubits")
            else:
                raise ValueError(f"unknown gate {gate!r}")

    def _check_qubit(self, q: int) -> None:
        if not 0 <= q < self.qubit_count:
            raise ValueError(f"qubit {q} out of range for {self.qubit_count} qubits")

    def gate_counts(self) -> dict[str, int]:
        counts = {"h": 0, "rzz": 0, "measure": 0}
        for gate in self.gates:
            if isinstance(gate, HGate):
                counts["h"] += 1
            elif isinstance(gate, RzzGate):
                counts["rzz"] += 1
            else:
                counts["measure"] += 1
        return counts


def build_usquared_protocol(g: WeightedGraph, t: float) -> CircuitDescription:
    """Overlap-decay protocol for the given graph at evolution time t.

    The rotation angle on edge (i, j) is 2 * w_ij * t; edges are laid down
    in input order (the rotations commute, so the order is physically
    irrelevant but keeps output deterministic).
    """
    n = g.node_count
    gates: list[Gate] = [HGate(q) for q in range(n)]
    gates += [RzzGate(2.0 * w * t, i, j) for i, j, w in g.edges]
    gates += [HGate(q) for q in range(n)]
    gates += [MeasureGate(q, q) for q in range(n)]
    metadata = {
        "protocol": "usquared",
        "node_count": n,
        "edges": [[i, j, w] for i, j, w in g.edges],
        "time": t,
    }
    return CircuitDescription(qubit_count=n, gates=tuple(gates), metadata=metadata)


def build_correlator_protocol(i: int, j: int) -> CircuitDescription:
    """Two-qubit correlator protocol, labeled with the source spin indices."""
    if i == j:
        raise ValueError("correlator requires two distinct qubits")
    if i < 0 or j < 0:
        raise ValueError(f"qubit indices must be non-negative, got ({i}, {j})")
    gates: tuple[Gate, ...] = (HGate(0), HGate(1), MeasureGate(0, 0), MeasureGate(1, 1))
    metadata = {"protocol": "correlator", "source_qubits": [i, j]}
    return CircuitDescription(qubit_count=2, gates=gates, metadata=metadata)


def _format_angle(angle: float) -> str:
    return f"{angle:.17g}"


def to_qasm(c: CircuitDescription, rzz_decomposition_comment: bool = False) -> str:
    """Serialize to OpenQASM 2.0 text, deterministic byte for byte.

    The two-qubit rotation is emitted as the qelib1 ``rzz`` gate; with
    ``rzz_decomposition_comment`` a comment records its CX/RZ decomposition
    for consumers whose gate library lacks it.
    """
    if c.qubit_count < 1:
        raise ValueError("cannot serialize a circuit with no qubits")
    lines = ["OPENQASM 2.0;", 'include "qelib1.inc";']
    if rzz_decomposition_comment:
        lines.append("// rzz(theta) a,b is equivalent to: cx a,b; rz(theta) b; cx a,b;")
    lines.append(f"qreg q[{c.qubit_count}];")
    lines.append(f"creg c[{c.qubit_count}];")
    for gate in c.gates:
        if isinstance(gate, HGate):
            lines.append(f"h q[{gate.qubit}];")
        elif isinstance(gate, RzzGate):
            lines.append(f"rzz({_format_angle(gate.angle)}) q[{gate.qubit_a}],q[{gate.qubit_b}];")
        else:
            lines.append(f"measure q[{gate.qubit}] -> c[{gate.clbit}];")
    return "\n".join(lines) + "\n"


def gates_as_dicts(c: CircuitDescription) -> list[dict[str, object]]:
    """JSON-friendly gate list mirroring the circuit exactly."""
    out: list[dict[str, object]] = []
    for gate in c.gates:
        if isinstance(gate, HGate):
            out.append({"kind": "h", "qubit": gate.qubit})
        elif isinstance(gate, RzzGate):
            out.append({"kind": "rzz", "angle": gate.angle,
                        "qubits": [gate.qubit_a, gate.qubit_b]})
        else:
            out.append({"kind": "measure", "qubit": gate.qubit, "clbit": gate.clbit})
    return out

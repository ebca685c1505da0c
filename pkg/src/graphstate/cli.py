"""Command-line client.

Thin by design: subcommands parse argv, load the graph file, and delegate to
the same handlers the HTTP service uses, so both surfaces produce identical
JSON.  Exit codes: 0 success, 1 invalid parameters or degenerate fit,
2 unreadable or malformed graph file (also argparse usage errors),
3 geometry requested on a graph with zero energy variance,
4 enumeration size cap exceeded.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import __version__
from .experiment import sweep_csv
from .geometry import ZeroVarianceError
from .graphs import GraphParseError, load_graph
from .oracle import SizeCapError
from .service import handlers
from .service.schemas import CorrelatorCircuitRequest, GraphModel, SweepRequest

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_PARSE = 2
EXIT_ZERO_VARIANCE = 3
EXIT_SIZE_CAP = 4


def _load(path: str):
    try:
        return load_graph(path)
    except OSError as exc:
        raise GraphParseError(f"cannot read {path}: {exc}") from None


def _angle(value: float, in_pi: bool) -> float:
    return value * math.pi if in_pi else value


def _emit_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_analyze(args: argparse.Namespace) -> int:
    g = _load(args.graph)
    resp = handlers.analyze_graph(g, oracle=args.oracle,
                                  oracle_max_nodes=args.oracle_max_nodes)
    if args.require_geometry and resp.geometry is None:
        raise ZeroVarianceError(resp.geometry_note or "geometry undefined")
    if args.pretty:
        lines = [
            f"graph: {resp.graph.node_count} nodes, {resp.graph.edge_count} edges",
            f"sum_n2 = {resp.invariants.sum_n2}   s3 = {resp.invariants.s3}   s4 = {resp.invariants.s4}",
            f"moments: m2 = {resp.moments.m2}   m3 = {resp.moments.m3}   m4 = {resp.moments.m4}",
        ]
        if resp.geometry is not None:
            lines.append(
                f"velocity = {resp.geometry.velocity}   curvature = {resp.geometry.curvature}"
                f"   torsion = {resp.geometry.torsion}"
            )
        else:
            lines.append(f"geometry: {resp.geometry_note}")
        if resp.provenance.oracle is not None:
            lines.append(
                f"oracle max relative deviation = {resp.provenance.oracle.max_relative_deviation}"
            )
        print("\n".join(lines))
    else:
        print(resp.model_dump_json(indent=2))
    return EXIT_OK


def _sweep_request(args: argparse.Namespace, g) -> SweepRequest:
    phi_min = phi_max = phi_step = None
    given = [args.phi_min, args.phi_max, args.phi_step]
    if any(v is not None for v in given):
        if any(v is None for v in given):
            raise ValueError("specify all of --phi-min/--phi-max/--phi-step or none")
        phi_min = _angle(args.phi_min, args.phi_in_pi)
        phi_max = _angle(args.phi_max, args.phi_in_pi)
        phi_step = _angle(args.phi_step, args.phi_in_pi)
    return SweepRequest(
        graph=GraphModel.from_graph(g),
        phi_min=phi_min,
        phi_max=phi_max,
        phi_step=phi_step,
        shots=args.shots,
        seed=args.seed,
        ideal=args.ideal,
        weighted_fit=args.weighted_fit,
        oracle_max_nodes=args.oracle_max_nodes,
    )


def _cmd_simulate(args: argparse.Namespace) -> int:
    g = _load(args.graph)
    req = _sweep_request(args, g)
    result = handlers.sweep_result(g, req)
    if args.csv:
        _emit_output(sweep_csv(result), args.out)
        return EXIT_OK
    resp = handlers.sweep_response(g, result)
    if args.pretty:
        lines = [f"{'phi':>12}  {'probability':>12}  {'stderr':>10}"]
        for pt in resp.points:
            lines.append(f"{pt.phi:>12.6f}  {pt.probability:>12.6f}  {pt.stderr:>10.6f}")
        lines.append(f"fit: a = {resp.fit.a}   b = {resp.fit.b}")
        lines.append(f"inferred m2 = {resp.inferred_m2}   inferred sum_n2 = {resp.inferred_sum_n2}")
        if resp.hardware_reference is not None:
            ref = resp.hardware_reference
            lines.append(
                f"hardware reference ({ref['device']}): a = {ref['fitted_a']}, "
                f"sum_n2 = {ref['sum_n2']} (documented comparison, not a target)"
            )
        _emit_output("\n".join(lines) + "\n", args.out)
    else:
        _emit_output(resp.model_dump_json(indent=2) + "\n", args.out)
    return EXIT_OK


def _cmd_emit(args: argparse.Namespace) -> int:
    g = _load(args.graph)
    if args.protocol == "usquared":
        if args.phi is None:
            raise ValueError("--phi is required for the usquared protocol")
        resp = handlers.usquared_circuit_for(g, _angle(args.phi, args.phi_in_pi))
    else:
        if args.qubits is None:
            raise ValueError("--qubits i,j is required for the correlator protocol")
        try:
            i_text, j_text = args.qubits.split(",")
            i, j = int(i_text), int(j_text)
        except ValueError:
            raise ValueError(f"--qubits expects 'i,j' with integers, got {args.qubits!r}") from None
        for idx in (i, j):
            if not 0 <= idx < g.node_count:
                raise ValueError(f"qubit index {idx} out of range for {g.node_count} nodes")
        resp = handlers.correlator_circuit(CorrelatorCircuitRequest(i=i, j=j))
    _emit_output(resp.qasm, args.out)
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("graphstate.service.app:app", host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphstate",
        description="Geometry of Ising graph states from weighted-graph invariants.",
    )
    parser.add_argument("--version", action="version", version=f"graphstate {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="invariants, moments, and geometry of a graph file")
    analyze.add_argument("graph", help="edge-list file (.json for the JSON mirror)")
    analyze.add_argument("--oracle", action="store_true",
                         help="cross-check moments against exhaustive enumeration")
    analyze.add_argument("--oracle-max-nodes", type=int, default=None,
                         help="override the enumeration node cap")
    analyze.add_argument("--require-geometry", action="store_true",
                         help="fail (exit 3) instead of omitting geometry for edgeless graphs")
    analyze.add_argument("--pretty", action="store_true", help="human-readable text instead of JSON")
    analyze.set_defaults(func=_cmd_analyze)

    simulate = sub.add_parser("simulate", help="shot-noise sweep of the overlap-decay protocol")
    simulate.add_argument("graph")
    simulate.add_argument("--shots", type=int, default=1024)
    simulate.add_argument("--seed", type=int, default=0)
    simulate.add_argument("--phi-min", type=float, default=None)
    simulate.add_argument("--phi-max", type=float, default=None)
    simulate.add_argument("--phi-step", type=float, default=None)
    simulate.add_argument("--phi-in-pi", action="store_true",
                          help="interpret --phi-min/--phi-max/--phi-step as multiples of pi")
    simulate.add_argument("--ideal", action="store_true", help="no shot noise")
    simulate.add_argument("--weighted-fit", action="store_true",
                          help="weight the fit by inverse estimated variance")
    simulate.add_argument("--oracle-max-nodes", type=int, default=None)
    simulate.add_argument("--csv", action="store_true", help="per-point CSV instead of JSON")
    simulate.add_argument("--pretty", action="store_true")
    simulate.add_argument("--out", default=None, help="write output to a file instead of stdout")
    simulate.set_defaults(func=_cmd_simulate)

    emit = sub.add_parser("emit", help="emit a protocol circuit as OpenQASM 2.0")
    emit.add_argument("graph")
    emit.add_argument("--protocol", choices=("usquared", "correlator"), default="usquared")
    emit.add_argument("--phi", type=float, default=None,
                      help="evolution angle for the usquared protocol")
    emit.add_argument("--phi-in-pi", action="store_true",
                      help="interpret --phi as a multiple of pi")
    emit.add_argument("--qubits", default=None, help="source pair i,j for the correlator protocol")
    emit.add_argument("--out", default=None)
    emit.set_defaults(func=_cmd_emit)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ZeroVarianceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ZERO_VARIANCE
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE_CAP
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()

"""Acceptance suite: one test per exit criterion, each printing a pass/fail
line (run with ``pytest tests/test_acceptance.py -v -s`` to see them all).

Criterion 7 carries two sub-checks that are knowingly red: the stated window
for the ideal fit coefficient on the full grid is not attainable from the
exact decay curve (see the FAIL detail printed by the test).  All tolerances
are pinned here, not calibrated elsewhere.
"""

import json
import math
import pathlib
import time

import numpy as np

from graphstate.circuits import build_usquared_protocol, to_qasm
from graphstate.cli import main
from graphstate.experiment import (
    CHAIN_HARDWARE_REFERENCE,
    SweepConfig,
    default_phi_grid,
    error_budget,
    run_sweep,
)
from graphstate.geometry import curvature, moment2, moment3, moment4, torsion
from graphstate.graphs import (
    WeightedGraph,
    adjacency_trace,
    square_weight_sum,
    triangle_weight_sum,
    weighted_degree,
    weighted_degree_sum,
)
from graphstate.oracle import loschmidt_amplitude, oracle_moment
from helpers import (
    count_squares,
    count_triangles,
    random_graph,
    random_unweighted_graph,
    simulate_usquared_qasm,
)

GOLDEN = pathlib.Path(__file__).parent / "golden"

CHAIN = WeightedGraph(3, ((0, 1, 1.0), (1, 2, 2.0)))

_CORPUS: list[WeightedGraph] = []


def corpus() -> list[WeightedGraph]:
    """200 random graphs, N in 2..12, edge probability 0.5, weights in [-2, 2]."""
    if not _CORPUS:
        rng = np.random.default_rng(20240801)
        while len(_CORPUS) < 200:
            n = int(rng.integers(2, 13))
            _CORPUS.append(random_graph(rng, n, p=0.5, lo=-2.0, hi=2.0))
    return _CORPUS


def _report(criterion: str, failures: list[str], detail: str = "") -> None:
    status = "PASS" if not failures else "FAIL"
    line = f"[{status}] {criterion}"
    if detail:
        line += f" ({detail})"
    print(line)
    for failure in failures:
        print(f"        {failure}")
    assert not failures, line + "".join("\n  " + f for f in failures)


def _close(x: float, y: float, rel: float, abs_tol: float) -> bool:
    return math.isclose(x, y, rel_tol=rel, abs_tol=abs_tol)


def test_criterion_1_chain_reproduction(tmp_path, capsys):
    start = time.perf_counter()
    path = tmp_path / "chain.txt"
    path.write_text("3\n0 1 1.0\n1 2 2.0\n")
    code = main(["analyze", str(path)])
    out = capsys.readouterr().out
    elapsed = time.perf_counter() - start
    body = json.loads(out)
    expected = {
        "sum_n2": (body["invariants"]["sum_n2"], 10.0),
        "m2": (body["moments"]["m2"], 5.0),
        "m3": (body["moments"]["m3"], 0.0),
        "m4": (body["moments"]["m4"], 41.0),
        "curvature": (body["geometry"]["curvature"], 0.64),
        "torsion": (body["geometry"]["torsion"], 0.64),
    }
    failures = [
        f"{name}: got {got!r}, want {want!r}"
        for name, (got, want) in expected.items()
        if abs(got - want) > 1e-12
    ]
    if code != 0:
        failures.append(f"exit code {code}")
    if elapsed >= 1.0:
        failures.append(f"runtime {elapsed:.2f}s >= 1s")
    with capsys.disabled():
        _report("criterion 1: chain reproduction via cmd_analyze", failures,
                f"runtime {elapsed * 1000:.0f} ms")


def test_criterion_2_oracle_equivalence():
    start = time.perf_counter()
    failures = []
    for idx, g in enumerate(corpus()):
        for n, formula in ((2, moment2), (3, moment3), (4, moment4)):
            want = oracle_moment(g, n)
            got = formula(g)
            if not _close(got, want, 1e-9, 1e-9):
                failures.append(f"graph {idx} (N={g.node_count}): m{n} {got!r} vs oracle {want!r}")
    elapsed = time.perf_counter() - start
    if elapsed >= 60.0:
        failures.append(f"runtime {elapsed:.1f}s >= 60s")
    _report("criterion 2: moment formulas match brute-force oracle on 200 random graphs",
            failures, f"runtime {elapsed:.2f} s")


def test_criterion_3_trace_identities():
    failures = []
    for idx, g in enumerate(corpus()):
        lhs3 = 6.0 * triangle_weight_sum(g)
        rhs3 = adjacency_trace(g, 3)
        if not _close(lhs3, rhs3, 1e-9, 1e-9):
            failures.append(f"graph {idx}: 6*S3 {lhs3!r} vs tr(A^3) {rhs3!r}")
        sum_sq = math.fsum(weighted_degree(g, 2, i) ** 2 for i in range(g.node_count))
        lhs4 = 8.0 * square_weight_sum(g)
        rhs4 = adjacency_trace(g, 4) - 2.0 * sum_sq + weighted_degree_sum(g, 4)
        if not _close(lhs4, rhs4, 1e-9, 1e-9):
            failures.append(f"graph {idx}: 8*S4 {lhs4!r} vs trace identity {rhs4!r}")
    _report("criterion 3: triangle and four-cycle trace identities", failures)


def test_criterion_4_unweighted_reduction():
    rng = np.random.default_rng(20240802)
    failures = []
    for idx in range(50):
        g = random_unweighted_graph(rng, int(rng.integers(2, 10)))
        n3 = count_triangles(g)
        k2 = g.edge_count
        k4 = count_squares(g)
        m3 = moment3(g)
        m4 = moment4(g)
        if abs(m3 - 6.0 * n3) > 1e-12:
            failures.append(f"graph {idx}: m3 {m3!r} vs 6*n3 {6.0 * n3!r}")
        want4 = k2 + 3 * k2 * (k2 - 1) + 24 * k4
        if abs(m4 - want4) > 1e-12:
            failures.append(f"graph {idx}: m4 {m4!r} vs counting formula {want4!r}")
    _report("criterion 4: unweighted graphs reduce to triangle/edge/square counts",
            failures)


def test_criterion_5_moment_matrix_positivity():
    failures = []
    for idx, g in enumerate(corpus()):
        m2, m3, m4 = moment2(g), moment3(g), moment4(g)
        if m2 < 0.0:
            failures.append(f"graph {idx}: m2 {m2!r} < 0")
        if m4 < m2 * m2 - 1e-12:
            failures.append(f"graph {idx}: m4 {m4!r} < m2^2 {m2 * m2!r}")
        if m4 * m2 - m2**3 - m3 * m3 < -1e-12:
            failures.append(f"graph {idx}: moment matrix determinant "
                            f"{m4 * m2 - m2**3 - m3 * m3!r} < -1e-12")
        if g.edge_count:
            c, t = curvature(g), torsion(g)
            if c < -1e-12:
                failures.append(f"graph {idx}: curvature {c!r} < 0")
            if t < -1e-12 or t > c:
                failures.append(f"graph {idx}: torsion {t!r} outside [0, curvature={c!r}]")
    _report("criterion 5: moment-matrix positivity, curvature and torsion bounds",
            failures)


def test_criterion_6_small_time_law():
    rng = np.random.default_rng(20240803)
    failures = []
    h = 1e-4
    checked = 0
    while checked < 20:
        g = random_graph(rng, int(rng.integers(2, 11)), min_abs_weight=0.25)
        if g.edge_count == 0:
            continue
        checked += 1
        p = lambda t: abs(loschmidt_amplitude(g, t)) ** 2
        d2 = (p(h) - 2.0 * p(0.0) + p(-h)) / (h * h)
        want = -2.0 * moment2(g)
        if not math.isclose(d2, want, rel_tol=1e-5):
            failures.append(f"graph {checked} (N={g.node_count}): d2 {d2!r} vs -2*m2 {want!r}")
    _report("criterion 6: second derivative of the overlap decay equals -2*m2",
            failures)


def test_criterion_7_sweep_fit():
    failures = []
    ideal = run_sweep(SweepConfig(CHAIN, default_phi_grid(), ideal=True))
    if not 4.7 <= ideal.fit_a <= 5.0:
        failures.append(
            f"ideal fit a = {ideal.fit_a!r} outside the stated window [4.7, 5.0]. "
            "Known defect in the stated window, not in the sweep: the exact decay "
            "curve of the (1,2) chain has a quartic coefficient m2^2/4 + m4/12 = "
            "115/12, which biases an unweighted quadratic fit on the full grid "
            "(max angle 3*pi/32) down to 4.2416 (verified against an independent "
            "dense matrix exponential). The window corresponds to a grid reaching "
            "3*pi/64 instead, where the same fit yields 4.78."
        )
    if not 0.99 <= ideal.fit_b <= 1.0:
        failures.append(f"ideal fit b = {ideal.fit_b!r} outside [0.99, 1.0]")
    inferred = [
        run_sweep(SweepConfig(CHAIN, default_phi_grid(), shots=1024, seed=s)).inferred_sum_n2
        for s in range(100)
    ]
    mean = float(np.mean(inferred))
    if not 9.5 <= mean <= 10.5:
        failures.append(
            f"mean inferred sum_n2 over seeds 0..99 = {mean!r}, outside 10 +/- 5%. "
            "Follows from the same fit-window defect: the estimator is unbiased "
            "around the ideal fit (2 * 4.2416 = 8.48), not around 10."
        )
    ref = CHAIN_HARDWARE_REFERENCE
    for key, want in (("fitted_a", 4.08), ("sum_n2", 10.36),
                      ("curvature", 0.649), ("torsion", 0.619)):
        if ref.get(key) != want:
            failures.append(f"hardware reference {key} not documented as {want}")
    _report("criterion 7: sweep fit windows and shot-noise mean", failures,
            f"ideal a={ideal.fit_a:.4f}, b={ideal.fit_b:.5f}, mean 2a={mean:.3f}")


def test_criterion_8_error_budget():
    failures = []
    budget = error_budget([], [0.0099, 0.0261, 0.0129], shots=1024, p=0.94)
    if abs(budget.readout_error - 0.0489) > 1e-6:
        failures.append(f"readout error {budget.readout_error!r} vs 0.0489")
    if abs(budget.standard_error - 0.0074) > 1e-4:
        failures.append(f"standard error {budget.standard_error!r} vs 0.0074")
    if budget.standard_error != math.sqrt(0.94 * (1.0 - 0.94) / 1024):
        failures.append("standard error is not sqrt(p*(1-p)/shots)")
    if CHAIN_HARDWARE_REFERENCE.get("average_standard_error") != 0.011:
        failures.append("documented average standard error 0.011 missing")
    if budget.total != budget.gate_error + budget.readout_error + budget.standard_error:
        failures.append("total is not the sum of the three components")
    _report("criterion 8: error budget arithmetic", failures)


def test_criterion_9_circuit_roundtrip():
    failures = []
    rng = np.random.default_rng(20240804)
    cases = [(CHAIN, math.pi / 16)]
    for _ in range(15):
        g = random_graph(rng, int(rng.integers(2, 11)))
        cases.append((g, float(rng.uniform(-0.5, 0.5))))
    for idx, (g, t) in enumerate(cases):
        text = to_qasm(build_usquared_protocol(g, t))
        resimulated = simulate_usquared_qasm(text)
        expected = abs(loschmidt_amplitude(g, t)) ** 2
        if abs(resimulated - expected) > 1e-12:
            failures.append(f"case {idx}: re-simulated {resimulated!r} vs oracle {expected!r}")
    golden = (GOLDEN / "usquared_chain_phi_pi16.qasm").read_bytes()
    emitted = to_qasm(build_usquared_protocol(CHAIN, math.pi / 16)).encode()
    if emitted != golden:
        failures.append("chain QASM at phi=pi/16 is not byte-identical to the golden file")
    _report("criterion 9: emitted circuits re-simulate to the oracle probability",
            failures)

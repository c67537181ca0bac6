"""Acceptance criteria 1-6, one printed pass/fail line each."""

import math
import time

import numpy as np
import pytest

import oracles
from mocktheta.suites import run_suite

SEED = 42

CRITERIA = {
    1: ("qseries", 10.0, {"qseries.in5", "qseries.example2_1", "qseries.example2_2",
                          "qseries.seventh_0", "qseries.seventh_1", "qseries.seventh_2"}),
    2: ("ch1", 60.0, set()),
    3: ("ch2", 120.0, {"ch2.example1.eta", "ch2.example2.eta", "ch2.cusp_limit.value", "ch2.cusp_limit.monotone"}),
    4: ("ch3", 180.0, {"ch3.decomposition.reconstruct", "ch3.h.T", "ch3.h.S", "ch3.h.shadow",
                       "ch3.h.casimir", "ch3.bridge"}),
    5: ("ch4", 300.0, {"F7.completion", "F5_1.completion", "F5_2.completion", "F5.G_antisymmetry", "F5.S",
                       "F7.shadow_integral", "M.involution", "F7.G_split"}),
}

# the stated per-criterion ceilings; a suite entry may be tighter, never looser
MAX_TOL = {2: {"ch1.period.R": 1e-6, "ch1.period.h": 1e-6, None: 1e-8},
           3: {"ch2.cusp_limit.value": 1e-6, None: 1e-8},
           4: {"ch3.decomposition.reconstruct": 1e-6, "ch3.h.S": 1e-6, "ch3.h.shadow": 1e-4,
               "ch3.h.casimir": 1e-3, "ch3.R_ml.casimir": 1e-3, None: 1e-8},
           5: {"F5.G_antisymmetry": 1e-10, "M.involution": 1e-12, "F7.G_split": 1e-8, "F7.H.casimir": 1e-3,
               None: 1e-6}}


def report(capsys, n, ok, detail):
    with capsys.disabled():
        print(f"\nacceptance criterion {n}: {'PASS' if ok else 'FAIL'} ({detail})")


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_suite_criterion(n, capsys):
    suite, budget, required = CRITERIA[n]
    t0 = time.perf_counter()
    entries = run_suite(suite, SEED)
    dt = time.perf_counter() - t0
    ids = {e.identity for e in entries}
    missing = required - ids
    failed = [e.identity for e in entries if not e.passed]
    loose = []
    if n in MAX_TOL:
        caps = MAX_TOL[n]
        loose = [e.identity for e in entries if e.tol > caps.get(e.identity, caps[None])]
    if n == 1:
        loose = [e.identity for e in entries if e.tol != 0]
    if n == 2:
        short = [e.identity for e in entries if e.samples < 20]
        loose += short
    ok = not missing and not failed and not loose and dt < budget
    worst = max(entries, key=lambda e: e.max_dev / e.tol if e.tol else (0 if e.max_dev == 0 else math.inf))
    report(capsys, n, ok, f"{len(entries)} checks in {dt:.2f}s of {budget:.0f}s; "
                          f"worst {worst.identity} {worst.max_dev:.1e}")
    assert not missing, missing
    assert not failed, failed
    assert not loose, loose
    assert dt < budget


def coeff_gap(series, reference):
    return max(abs(series.coeff(k) - c) for k, c in enumerate(reference))


def _oracle_checks():
    from mocktheta.classical import dedekind_eta, jacobi_theta, theta_char, unary_g
    from mocktheta.families import eval_series
    from mocktheta.indefinite import IndefThetaSpec, LatticeForm, indefinite_theta_ab, majorant_Qplus, majorant_lambda
    from mocktheta.jacobi import block_f, correction_R_ml
    from mocktheta.lerch import beta_tail, correction_R, erf_like_E, lerch_mu, mordell_h
    from mocktheta.numerics import integrate_vertical_ray
    from mocktheta.qseries import euler_product, eulerian_f0, invert_unit_series, mock_series

    ex1 = LatticeForm([[1, 2], [2, 1]], (-1, 2))
    ex2 = LatticeForm([[1, 0], [0, -3]], (-3, 2))
    q = math.exp(-2 * math.pi)
    g = lambda z: np.exp(1j * np.pi * z)
    lam = majorant_lambda(ex1, (-1, 2), (-2, 1))
    rng = np.random.default_rng(0)
    nus = rng.normal(size=(500, 2))
    return [
        ("h quadrature", mordell_h(0.3 + 0.1j, 0.2 + 1.1j, 1e-12), oracles.simpson_mordell_h(0.3 + 0.1j, 0.2 + 1.1j), 1e-10),
        ("h mpmath", mordell_h(-0.2 + 0.15j, -0.3 + 0.9j, 1e-12), oracles.mp_mordell_h(-0.2 + 0.15j, -0.3 + 0.9j), 1e-11),
        ("theta", jacobi_theta(0.37 - 0.1j, 0.3 + 0.8j), oracles.mp_jacobi_theta(0.37 - 0.1j, 0.3 + 0.8j), 1e-12),
        ("theta_ab", theta_char(1 / 3, -1 / 4, 0.1j, 1j), oracles.mp_theta_char(1 / 3, -1 / 4, 0.1j, 1j), 1e-12),
        ("eta", dedekind_eta(1 + 2j), oracles.mp_eta(1 + 2j), 1e-12),
        ("g", unary_g(1 / 3, 1 / 4, 1j), oracles.mp_unary_g(1 / 3, 1 / 4, 1j), 1e-12),
        ("R", correction_R(0.2 + 0.3j, 1j), oracles.mp_R(0.2 + 0.3j, 1j), 1e-12),
        ("R_ml", correction_R_ml(3, 2, 0.1 + 0.1j, 0.2 + 0.9j), oracles.mp_R_ml(3, 2, 0.1 + 0.1j, 0.2 + 0.9j), 1e-12),
        ("mu", lerch_mu(0.2 + 0.1j, -0.1 + 0.25j, 0.3 + 0.8j), oracles.mp_mu(0.2 + 0.1j, -0.1 + 0.25j, 0.3 + 0.8j), 1e-12),
        ("f_u", block_f(0.1 + 0.2j, -0.3 + 0.1j, 0.1 + 0.9j, 2), oracles.mp_block_f(0.1 + 0.2j, -0.3 + 0.1j, 0.1 + 0.9j, 2), 1e-12),
        ("E", erf_like_E(1.3), oracles.mp_E(1.3), 1e-14),
        ("beta", beta_tail(1.0), oracles.mp_beta(1.0), 1e-14),
        ("indefinite theta ex1", indefinite_theta_ab(IndefThetaSpec(ex1, (-1, 2), (-2, 1), (0.2, -0.1), (0.3, 0.05)), 0.3 + 0.8j, 1e-13),
         oracles.brute_indefinite_theta(ex1.A, (-1, 2), (-2, 1), (0.2, -0.1), (0.3, 0.05), 0.3 + 0.8j, N=15), 1e-12),
        ("indefinite theta ex2", indefinite_theta_ab(IndefThetaSpec(ex2, (-3, 2), (3, 2), (0.1, 0.2), (-0.25, 0.4)), 0.1 + 1j, 1e-13),
         oracles.brute_indefinite_theta(ex2.A, (-3, 2), (3, 2), (0.1, 0.2), (-0.25, 0.4), 0.1 + 1j, N=15), 1e-12),
        ("lambda sampling", max(0.0, lam - oracles.sampled_lambda(ex1.A, (-1, 2), (-2, 1))), 0.0, 1e-12),
        ("Q+ sampling", min(0.0, oracles.sampled_qplus_min(ex1.A, (-1, 2), (-2, 1)),
                            min(majorant_Qplus(ex1, (-1, 2), (-2, 1), v) for v in nus)), 0.0, 0.0),
        ("vertical ray", integrate_vertical_ray(g, 1j, 1j, 1.0, tol=1e-12), oracles.simpson_vertical_ray(g, 1j, 1j, S=14.0), 1e-11),
        ("euler product", coeff_gap(euler_product(51), oracles.euler_coeffs(51)), 0.0, 0.0),
        ("partitions", coeff_gap(invert_unit_series(euler_product(51)), oracles.partition_counts(51)), 0.0, 0.0),
        ("f0 Eulerian", coeff_gap(eulerian_f0(51), oracles.eulerian_f0(51)), 0.0, 0.0),
        ("seventh Eulerian", max(coeff_gap(mock_series(f"F7_{k}", 51), oracles.eulerian_seventh(k, 51))
                                 for k in range(3)), 0.0, 0.0),
        ("series value", eval_series("F7_0", 1j, 1e-14), oracles.eval_coeffs(oracles.eulerian_seventh(0, 51), q), 1e-14),
    ]


def test_criterion_6_oracles(capsys):
    t0 = time.perf_counter()
    checks = _oracle_checks()
    bad = [(name, abs(x - y)) for name, x, y, tol in checks if not abs(x - y) <= tol]
    ok = not bad
    report(capsys, 6, ok, f"{len(checks)} oracle comparisons in {time.perf_counter() - t0:.2f}s"
                          + (f"; failing {bad}" if bad else ""))
    assert ok, bad

import numpy as np
import pytest
from scipy.special import erfcx as ref_erfcx

from mocktheta import _kernels as K

needs_numba = pytest.mark.skipif(not K.USE_NUMBA, reason="numba path disabled")


def _indef_inputs(n=400, seed=0):
    rng = np.random.default_rng(seed)
    qv = rng.uniform(-3, 3, n)
    bb = rng.uniform(-1, 1, n)
    x1 = rng.normal(size=n) * 2
    x2 = rng.normal(size=n) * 2
    return qv, bb, x1, np.sign(x1), x2, np.sign(x2)


@needs_numba
def test_theta_sum_agrees():
    taus = np.array([1j, 0.3 + 0.8j, -0.2 + 2j])
    ws = np.array([0.1 + 0.2j, -0.4, 0.25 - 0.3j])
    for power in (0, 1):
        a = K.theta_sum_nb(0.5, -20, 20, taus, ws, power)
        b = K.theta_sum_np(0.5, -20, 20, taus, ws, power)
        assert np.max(np.abs(a - b)) < 1e-13


@needs_numba
def test_r_sum_agrees():
    args = (0.5, 1.0, -15, 15, -1, 0.0, 0.3, np.sqrt(2.0), 1.0, 0.2 + 1j, 0.1 + 0.3j)
    assert abs(K.r_sum_nb(*args) - K.r_sum_np(*args)) < 1e-13
    args = (3.0, 26.0, -3, 3, 1, 0.5, 0.0, np.sqrt(1 / 13), 26.0, 1j, 0j)
    assert abs(K.r_sum_nb(*args) - K.r_sum_np(*args)) < 1e-13


@needs_numba
def test_appell_sum_agrees():
    pi = np.pi
    tau, v, u = 0.3 + 0.8j, -0.1 + 0.25j, 0.2 + 0.1j
    args = (-25, 25, 1j * pi * tau, 1j * pi * tau + 2j * pi * v + 1j * pi, 2j * pi * tau, 2j * pi * u)
    assert abs(K.appell_sum_nb(*args) - K.appell_sum_np(*args)) < 1e-13


@needs_numba
@pytest.mark.parametrize("flags", [(True, True), (True, False), (False, True)])
def test_indef_sum_agrees(flags):
    args = _indef_inputs()
    a = K.indef_sum_nb(*args, *flags, 0.1 + 1.2j)
    b = K.indef_sum_np(*args, *flags, 0.1 + 1.2j)
    assert abs(a - b) < 1e-12 * max(1, abs(b))


@pytest.mark.parametrize("x", [0.0, 0.5, 3.0, 7.9, 8.1, 30.0, 1e4])
def test_erfcx(x):
    assert K.erfcx(x) == pytest.approx(float(ref_erfcx(x)), rel=1e-13)
    assert K._erfcx_loop(x) == pytest.approx(float(ref_erfcx(x)), rel=1e-12)


def test_dispatch_matches_numpy():
    taus = np.array([0.1 + 0.9j])
    ws = np.array([0.3 + 0.0j])
    assert abs(K.theta_sum(0.0, -10, 10, taus, ws)[0] - K.theta_sum_np(0.0, -10, 10, taus, ws, 0)[0]) < 1e-13


def test_numpy_path_subprocess():
    import os
    import subprocess
    import sys
    env = dict(os.environ, MOCKTHETA_NO_NUMBA="1")
    code = ("from mocktheta import _kernels as K; from mocktheta.lerch import lerch_mu; "
            "assert not K.USE_NUMBA; print(repr(lerch_mu(0.2+0.1j, -0.1+0.25j, 0.3+0.8j)))")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    v = complex(out.stdout.strip())
    assert abs(v - (-0.3967992551087351 + 0.6619312447391281j)) < 1e-13

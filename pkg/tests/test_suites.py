import numpy as np
import pytest
from hypothesis import given, strategies as st

from mocktheta.suites import SUITES, cusp_continuity_probe, deviation, run_suite, timed_suite

finite = st.complex_numbers(max_magnitude=1e6, allow_nan=False, allow_infinity=False)


@given(finite, finite)
def test_deviation_is_symmetric_and_bounded(a, b):
    d = deviation(a, b)
    assert d == deviation(b, a)
    assert 0 <= d <= 2 + 1e-12
    assert deviation(a, a) == 0


def test_deviation_mixes_absolute_and_relative():
    assert deviation(1e-12, 0) == pytest.approx(1e-12)
    assert deviation(1e6, 1e6 + 1) == pytest.approx(1 / (1e6 + 1))
    assert deviation([1, 2], [1, 2.5]) == pytest.approx(0.2)


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("ch9")


@pytest.mark.parametrize("seed", [0, 1])
def test_seed_reproducible(seed):
    a = [e.as_dict() for e in run_suite("ch1", seed)]
    b = [e.as_dict() for e in run_suite("ch1", seed)]
    assert a == b


def test_all_suites_pass_other_seed():
    for name in SUITES:
        entries, dt = timed_suite(name, 123)
        assert dt >= 0
        assert all(e.passed for e in entries), [e.as_dict() for e in entries if not e.passed]


def test_cusp_probe_monotone():
    devs = cusp_continuity_probe()
    assert devs[-1] < 1e-6
    assert all(b <= a or b < 1e-12 for a, b in zip(devs, devs[1:]))
    assert np.all(np.isfinite(devs))

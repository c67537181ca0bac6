from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracles
from mocktheta.indefinite import (ConeError, IndefThetaSpec, LatticeForm, WallProximityError, beta_series,
                                  classify_cone, coset_representatives, indefinite_theta_ab,
                                  majorant_Qplus, majorant_lambda, orthogonal_action, rho_kernel,
                                  verify_modular_S)
from mocktheta.numerics import DomainError

EX1 = LatticeForm([[1, 2], [2, 1]], (-1, 2))
EX2 = LatticeForm([[1, 0], [0, -3]], (-3, 2))
CUSPY = LatticeForm([[2, 1], [1, 0]], (1, -2))
sixth = (F(1, 6), F(1, 6))


def test_form_validation():
    with pytest.raises(DomainError):
        LatticeForm([[1, 0], [0, 1]], (1, 0))
    with pytest.raises(DomainError):
        LatticeForm([[1, 2], [3, 1]], (-1, 2))
    with pytest.raises(DomainError):
        LatticeForm([[1, 2], [2, 1]], (1, 1))
    assert EX1.det == -3 and EX2.det == -3


def test_classify_cone():
    assert classify_cone(EX1, (-2, 1)).kind == "interior"
    assert classify_cone(CUSPY, (0, -1)).kind == "cusp"
    with pytest.raises(ConeError):
        classify_cone(EX1, (1, -2))      # opposite component
    with pytest.raises(ConeError):
        classify_cone(CUSPY, (0, -2))    # not primitive
    with pytest.raises(ConeError):
        classify_cone(EX1, (1, 1))       # positive vector


def test_rho_kernel_properties():
    spec = IndefThetaSpec(EX1, (-1, 2), (-2, 1), sixth, sixth)
    for nu in np.random.default_rng(3).normal(size=(50, 2)) * 3:
        r = rho_kernel(spec, nu, 0.7)
        assert abs(r) <= 2
        assert rho_kernel(spec.swapped(), nu, 0.7) == pytest.approx(-r)
        assert rho_kernel(spec, -nu, 0.7) == pytest.approx(-r)
    same = IndefThetaSpec(EX1, (-1, 2), (-1, 2), sixth, sixth)
    assert rho_kernel(same, (0.3, 0.8), 1.0) == 0


def test_lambda_against_sampling():
    lam = majorant_lambda(EX1, (-1, 2), (-2, 1))
    assert lam == pytest.approx(0.07179676982813907, abs=1e-9)
    assert oracles.sampled_lambda(EX1.A, (-1, 2), (-2, 1)) >= lam - 1e-12
    assert 0 < majorant_lambda(EX2, (-3, 2), (3, 2))


@pytest.mark.parametrize("form,c,cp", [(EX1, (-1, 2), (-2, 1)), (EX2, (-3, 2), (3, 2)), (EX2, (-1, 1), (2, 3))])
def test_lambda_pair_product(form, c, cp):
    assert majorant_lambda(form, c, cp) * majorant_lambda(form, cp, c) <= 1 + 1e-12


def test_qplus_positive():
    assert oracles.sampled_qplus_min(EX1.A, (-1, 2), (-2, 1)) > 0
    rng = np.random.default_rng(5)
    for nu in rng.normal(size=(200, 2)):
        assert majorant_Qplus(EX1, (-1, 2), (-2, 1), nu) > 0
        assert majorant_Qplus(EX2, (-3, 2), (3, 2), nu) > 0


def test_against_brute_force_ex1():
    spec = IndefThetaSpec(EX1, (-1, 2), (-2, 1), (0.2, -0.1), (0.3, 0.05))
    v = indefinite_theta_ab(spec, 0.3 + 0.8j, 1e-13)
    assert abs(v - (0.400083467056548 + 0.05485697286825723j)) < 1e-12


def test_against_brute_force_ex2():
    spec = IndefThetaSpec(EX2, (-3, 2), (3, 2), (0.1, 0.2), (-0.25, 0.4))
    v = indefinite_theta_ab(spec, 0.1 + 1j, 1e-13)
    assert abs(v - (0.2795268020503189 + 0.13325432893908082j)) < 1e-12


def test_brute_force_fresh_point():
    a, b, tau = (-0.35, 0.15), (0.1, -0.2), -0.2 + 0.9j
    spec = IndefThetaSpec(EX1, (-1, 2), (-2, 1), a, b)
    ref = oracles.brute_indefinite_theta(EX1.A, (-1, 2), (-2, 1), a, b, tau, N=15)
    assert abs(indefinite_theta_ab(spec, tau, 1e-13) - ref) < 1e-12


@given(st.floats(-0.5, 0.5), st.floats(-0.5, 0.5), st.floats(-0.5, 0.5), st.floats(-0.5, 0.5))
def test_swap_antisymmetry(a1, a2, b1, b2):
    spec = IndefThetaSpec(EX2, (-3, 2), (3, 2), (a1, a2), (b1, b2))
    tau = 0.2 + 1.1j
    assert abs(indefinite_theta_ab(spec, tau) + indefinite_theta_ab(spec.swapped(), tau)) < 1e-9


def test_json_round_trip():
    spec = IndefThetaSpec(EX1, (-1, 2), (-2, 1), sixth, (0.25, -0.125))
    back = IndefThetaSpec.from_json(spec.to_json())
    assert back == spec
    assert back.a == sixth


def test_orthogonal_action_example_one():
    C = [[1, 0], [-4, -1]]
    spec = IndefThetaSpec(EX1, (-1, 2), (-2, 1), (0.2, -0.1), (0.3, 0.05))
    moved = orthogonal_action(EX1, C, spec)
    tau = 0.1 + 0.9j
    assert abs(indefinite_theta_ab(moved, tau) - indefinite_theta_ab(spec, tau)) < 1e-9


def test_orthogonal_action_reflection():
    form = LatticeForm([[5, 0], [0, -2]], (0, 1))
    spec = IndefThetaSpec(form, (1, 2), (-1, 2), (0.1, 0.2), (0.3, -0.15))
    moved = orthogonal_action(form, [[-1, 0], [0, 1]], spec)
    assert moved.c1.c == (-1, 2) and moved.c2.c == (1, 2)
    tau = 0.25 + 0.8j
    assert abs(indefinite_theta_ab(moved, tau) - indefinite_theta_ab(spec, tau)) < 1e-9
    with pytest.raises(DomainError):
        orthogonal_action(form, [[1, 1], [0, 1]], spec)
    with pytest.raises(DomainError):
        orthogonal_action(form, [[1, 0], [0, -1]], spec)


@pytest.mark.parametrize("form,c1,c2,a", [(EX1, (-1, 2), (-2, 1), sixth),
                                          (EX2, (-3, 2), (3, 2), (F(1, 2), F(-1, 6)))])
def test_beta_series_vanish_for_examples(form, c1, c2, a):
    for tau in (1j, 0.3 + 0.8j):
        assert abs(beta_series(form, c1, a, a, tau, 1e-12)) < 1e-10
        assert abs(beta_series(form, c2, a, a, tau, 1e-12)) < 1e-10


def test_beta_series_generic_nonzero():
    assert abs(beta_series(EX1, (-1, 2), (0.2, -0.1), (0.3, 0.05), 1j)) > 1e-4


def test_wall_error():
    with pytest.raises(WallProximityError):
        IndefThetaSpec(CUSPY, (1, -2), (0, -1), (1.0, 0.2), (0.1, 0.25))


def test_cosets():
    assert coset_representatives(CUSPY) == [(0, 0)]
    reps = coset_representatives(EX1)
    assert len(reps) == 3


def test_modular_S_example():
    rep = verify_modular_S(EX1, (-1, 2), (-2, 1), np.array([0.1 + 0.05j, -0.2 + 0.1j]), 0.2 + 1.1j)
    assert rep.passed, rep.max_dev


def test_cusp_value_continuous_in_c():
    # interior c2 approaching the cusp (0,-1) along c3 + t c2 stays close to the cusp value
    a, b, tau = (0.3, -0.2), (0.1, 0.25), 0.2 + 0.9j
    cusp = indefinite_theta_ab(IndefThetaSpec(CUSPY, (1, -2), (0, -1), a, b), tau, 1e-12)
    near = indefinite_theta_ab(IndefThetaSpec(CUSPY, (1, -2), (F(1, 10**6), F(-1) - F(3, 10**6)), a, b), tau, 1e-12)
    assert abs(cusp - near) < 1e-4

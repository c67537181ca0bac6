"""Holomorphic building blocks: Jacobi theta, Dedekind eta, theta functions
with characteristics, the index-m components theta_{m,l} and the weight 3/2
unary theta functions g_{a,b}."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .numerics import DEFAULT_TOL, DomainError, as_tau

# terms below peak * e^{-LOG_EPS} are dropped
LOG_EPS = 40.0


@dataclass(frozen=True)
class ThetaCharacteristic:
    a: float
    b: float


@dataclass(frozen=True)
class UnaryThetaSpec:
    a: float
    b: float
    weight: float = 1.5

    def __post_init__(self):
        if self.weight not in (0.5, 1.5):
            raise DomainError("weight must be 1/2 or 3/2")


def _window(nu0: float, centers, y: float, power: int, tol: float):
    """Index range k with nu = nu0 + k covering every Gaussian centre."""
    cmin, cmax = float(np.min(centers)), float(np.max(centers))
    extra = LOG_EPS + max(0.0, math.log(1.0 / tol) - 20.0)
    if power:
        extra += math.log(2.0 + max(abs(cmin), abs(cmax)))
    t = math.sqrt(extra / (math.pi * y)) + 1.0
    return int(math.floor(cmin - t - nu0)), int(math.ceil(cmax + t - nu0))


def theta_series(nu0: float, tau, w, power: int = 0, tol: float = DEFAULT_TOL):
    """sum over nu in nu0 + Z of nu^power exp(pi i nu^2 tau + 2 pi i nu w).

    tau and w broadcast against each other; scalars give a scalar back.
    """
    tau_arr = np.asarray(tau, dtype=complex)
    w_arr = np.asarray(w, dtype=complex)
    scalar = tau_arr.ndim == 0 and w_arr.ndim == 0
    tau_b, w_b = np.broadcast_arrays(tau_arr, w_arr)
    shape = tau_b.shape
    tau_f = tau_b.ravel()
    w_f = w_b.ravel()
    if tau_f.size == 0:
        return np.zeros(shape, dtype=complex)
    if np.any(tau_f.imag <= 0):
        raise DomainError("tau not in upper half plane")
    y = float(tau_f.imag.min())
    kmin, kmax = _window(nu0, -w_f.imag / tau_f.imag, y, power, tol)
    out = _kernels.theta_sum(nu0, kmin, kmax, tau_f, w_f, power).reshape(shape)
    return complex(out) if scalar else out


def jacobi_theta(z, tau, tol: float = DEFAULT_TOL):
    """theta(z; tau) = sum over nu in 1/2 + Z of exp(pi i nu^2 tau + 2 pi i nu (z + 1/2))."""
    tau = as_tau(tau)
    return theta_series(0.5, tau, np.asarray(z, dtype=complex) + 0.5, 0, tol)


def theta_char(a: float, b: float, z, tau, tol: float = DEFAULT_TOL):
    """theta_{a,b}(z; tau) = sum over lambda in a + Z of exp(pi i lambda^2 tau + 2 pi i lambda (z + b))."""
    tau = as_tau(tau)
    return theta_series(float(a), tau, np.asarray(z, dtype=complex) + float(b), 0, tol)


def theta_index_component(m: int, l: int, z, tau, tol: float = DEFAULT_TOL):
    """theta_{m,l}(z; tau), the sum over lambda = l mod 2m of
    exp(pi i lambda^2 tau / 2m + 2 pi i lambda z)."""
    if m <= 0:
        raise DomainError("index m must be positive")
    tau = as_tau(tau)
    n = 2 * m
    # lambda = n (l/n + k): the sum is a theta series in nu = l/n + k at n tau, n z
    return theta_series((l % n) / n, n * tau, n * np.asarray(z, dtype=complex), 0, tol)


def unary_g(a: float, b: float, tau, tol: float = DEFAULT_TOL):
    """g_{a,b}(tau) = sum over nu in a + Z of nu exp(pi i nu^2 tau + 2 pi i nu b).

    tau may be an array (used by the period integrals).
    """
    return theta_series(float(a), tau, complex(b), 1, tol)


def dedekind_eta(tau, tol: float = DEFAULT_TOL):
    # pentagonal form: eta = e^{-pi i/6} sum over nu in 1/6 + Z of exp(3 pi i nu^2 tau + pi i nu)
    t = np.asarray(tau, dtype=complex)
    if np.any(t.imag <= 0):
        raise DomainError("tau not in upper half plane")
    val = theta_series(1.0 / 6.0, 3 * t, 0.5, 0, tol)
    return cmath.exp(-1j * math.pi / 6) * val


def modular_discriminant(tau, tol: float = DEFAULT_TOL):
    return dedekind_eta(tau, tol) ** 24

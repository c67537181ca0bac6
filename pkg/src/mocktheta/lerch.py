"""Mordell integral h, Lerch sum mu, the non-holomorphic correction R, the
completed mu~ and period integrals of weight 3/2 unary theta functions."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import erf, erfc

from . import _kernels
from .classical import LOG_EPS, jacobi_theta, unary_g
from .numerics import (DEFAULT_TOL, DomainError, PoleProximityError, as_tau,
                       integrate_real_line, integrate_vertical_ray, lattice_distance,
                       sqrt_principal_neg_i_tau)

POLE_THRESHOLD = 1e-8


@dataclass(frozen=True)
class EllipticPoint:
    """u together with lattice coordinates (a, b).

    convention "minus": u = a tau - b; convention "plus": u = a tau + b.
    """
    u: complex
    tau: complex
    convention: str = "minus"

    @property
    def a(self) -> float:
        return self.u.imag / self.tau.imag

    @property
    def b(self) -> float:
        b = self.a * self.tau.real - self.u.real
        return b if self.convention == "minus" else -b

    def reconstruct(self) -> complex:
        sgn = -1 if self.convention == "minus" else 1
        return self.a * self.tau + sgn * self.b


@dataclass(frozen=True)
class MuArgs:
    u: complex
    v: complex
    tau: complex

    def __post_init__(self):
        t = as_tau(self.tau)
        for w in (self.u, self.v):
            if lattice_distance(complex(w), t) < POLE_THRESHOLD:
                raise PoleProximityError("argument too close to the lattice Z tau + Z")


def mordell_h(z, tau, tol: float = DEFAULT_TOL) -> complex:
    """h(z; tau) = integral over R of exp(pi i tau x^2 - 2 pi z x) / cosh(pi x)."""
    tau = as_tau(tau)
    z = complex(z)

    def f(x):
        ax = np.abs(x)
        # 1/cosh(pi x) = 2 e^{-pi|x|} / (1 + e^{-2 pi |x|}), kept inside the exponent
        return 2.0 * np.exp(1j * np.pi * tau * x * x - 2 * np.pi * z * x - np.pi * ax) / (1 + np.exp(-2 * np.pi * ax))

    s = max(abs(z.real) - 0.5, 0.0)
    return integrate_real_line(f, tau.imag, s, tol, C=2.0)


def erf_like_E(z):
    """E(z) = 2 * integral_0^z exp(-pi u^2) du = erf(sqrt(pi) z)."""
    if isinstance(z, (complex, np.complexfloating)) and complex(z).imag != 0:
        return complex(erf(math.sqrt(math.pi) * complex(z)))
    return float(erf(math.sqrt(math.pi) * float(np.real(z))))


def beta_tail(x: float) -> float:
    """beta(x) = integral_x^inf u^{-1/2} exp(-pi u) du = erfc(sqrt(pi x))."""
    if x < 0:
        raise DomainError("beta is defined for x >= 0")
    return float(erfc(math.sqrt(math.pi * x)))


def appell_window(a2: complex, a1: complex, b1: complex, extra: float = 0.0):
    """Index range for sum exp(a2 n^2 + a1 n) / (1 - exp(b1 n + b0))."""
    r2 = -a2.real
    if r2 <= 0:
        raise DomainError("numerator must decay")
    c1 = a1.real / (2 * r2)
    c2 = (a1 - b1).real / (2 * r2)
    t = math.sqrt((LOG_EPS + extra) / r2) + 2
    return int(math.floor(min(c1, c2) - t)), int(math.ceil(max(c1, c2) + t))


def lerch_mu(u, v, tau, tol: float = DEFAULT_TOL) -> complex:
    """mu(u, v; tau) = e^{pi i u} / theta(v) sum_n (-1)^n e^{pi i (n^2+n) tau + 2 pi i n v} / (1 - e^{2 pi i n tau + 2 pi i u})."""
    args = MuArgs(complex(u), complex(v), as_tau(tau))
    u, v, tau = args.u, args.v, complex(args.tau)
    pi = math.pi
    a2 = 1j * pi * tau
    a1 = 1j * pi * tau + 2j * pi * v + 1j * pi
    b1 = 2j * pi * tau
    nmin, nmax = appell_window(a2, a1, b1)
    s = _kernels.appell_sum(nmin, nmax, a2, a1, b1, 2j * pi * u)
    return cmath.exp(1j * pi * u) * s / jacobi_theta(v, tau, tol)


def correction_R(u, tau, tol: float = DEFAULT_TOL) -> complex:
    """R(u; tau) = sum over nu in 1/2 + Z of {sign(nu) - E((nu + a) sqrt(2y))} (-1)^{nu-1/2} e^{-pi i nu^2 tau - 2 pi i nu u}."""
    tau = as_tau(tau)
    u = complex(u)
    y = tau.imag
    a = u.imag / y
    t = math.sqrt(LOG_EPS / (math.pi * y)) + 1
    kmin = int(math.floor(min(0.0, -a) - t - 0.5))
    kmax = int(math.ceil(max(0.0, -a) + t))
    return _kernels.r_sum(0.5, 1.0, kmin, kmax, -1, 0.0, a, math.sqrt(2 * y), 1.0, tau, u)


def completed_mu(u, v, tau, tol: float = DEFAULT_TOL) -> complex:
    return lerch_mu(u, v, tau, tol) + 0.5j * correction_R(complex(u) - complex(v), tau, tol)


def _g_amplitude(a: float, nu0: float, y0: float) -> float:
    """sum over nu in a + Z of |nu| exp(-pi (nu^2 - nu0^2) y0)."""
    k = np.arange(-60, 61)
    nu = (a - math.floor(a)) + k
    return float(np.sum(np.abs(nu) * np.exp(-np.pi * (nu * nu - nu0 * nu0) * y0)))


def _check_char(x: float, name: str):
    if not -0.5 < x < 0.5:
        raise DomainError(f"characteristic {name} must lie strictly inside (-1/2, 1/2)")


def period_integral_R(a: float, b: float, tau, tol: float = DEFAULT_TOL) -> complex:
    """Integral from -conj(tau) to i infinity of g_{a+1/2, b+1/2}(z) / sqrt(-i(z + tau)) dz.

    Equals -exp(-pi i a^2 tau + 2 pi i a (b + 1/2)) R(a tau - b).
    """
    _check_char(a, "a")
    tau = as_tau(tau)
    z0 = -tau.conjugate()
    nu0 = 0.5 - abs(a)
    amp = _g_amplitude(a + 0.5, nu0, z0.imag)
    return integrate_vertical_ray(lambda z: unary_g(a + 0.5, b + 0.5, z, tol * 1e-3), z0, tau,
                                  nu0, tol, amplitude=amp)


def period_integral_split(a: float, b: float, tau, tol: float = DEFAULT_TOL) -> complex:
    """Integral from 0 to -conj(tau) of g_{a+1/2, b+1/2}(z) / sqrt(-i(z + tau)) dz,
    computed after z -> -1/z as a ray integral starting at 1/conj(tau)."""
    _check_char(b, "b")
    tau = as_tau(tau)
    A, B = a + 0.5, b + 0.5
    w0 = 1.0 / tau.conjugate()
    tau_s = -1.0 / tau
    nu0 = 0.5 - abs(b)
    amp = _g_amplitude(B, nu0, w0.imag)
    ray = integrate_vertical_ray(lambda w: unary_g(B, -A, w, tol * 1e-3), w0, tau_s, nu0, tol,
                                 amplitude=amp)
    return 1j * cmath.exp(2j * math.pi * A * B) / sqrt_principal_neg_i_tau(tau) * ray


def period_integral_h(a: float, b: float, tau, tol: float = DEFAULT_TOL) -> complex:
    """Integral from 0 to i infinity of g_{a+1/2, b+1/2}(z) / sqrt(-i(z + tau)) dz.

    Equals -exp(-pi i a^2 tau + 2 pi i a (b + 1/2)) h(a tau - b).
    """
    _check_char(a, "a")
    _check_char(b, "b")
    return period_integral_split(a, b, tau, tol / 2) + period_integral_R(a, b, tau, tol / 2)

"""Jacobi forms: the Appell-type block f_u, its completion, the corrections
R_{m,l} and Fourier (theta) decompositions of holomorphic and simple-pole
meromorphic Jacobi forms."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import _kernels
from .classical import LOG_EPS, dedekind_eta, theta_char, theta_index_component
from .lerch import appell_window
from .numerics import (DEFAULT_TOL, DomainError, MockThetaError, PoleProximityError, QuadratureError,
                       as_tau, lattice_distance)

POLE_THRESHOLD = 1e-8


class JacobiLawError(MockThetaError):
    """The supplied function fails the elliptic transformation law."""


class ContourError(DomainError):
    """A pole sits on the integration contour."""


def block_f(u, z, tau, m: int, tol: float = DEFAULT_TOL) -> complex:
    """f_u(z; tau) = sum_lambda e^{2 pi i m lambda^2 tau + 4 pi i m lambda z} / (1 - e^{2 pi i lambda tau + 2 pi i (z - u)})."""
    tau = as_tau(tau)
    u, z = complex(u), complex(z)
    if lattice_distance(z - u, tau) < POLE_THRESHOLD:
        raise PoleProximityError("z - u too close to the lattice")
    pi = math.pi
    a2 = 2j * pi * m * tau
    a1 = 4j * pi * m * z
    b1 = 2j * pi * tau
    nmin, nmax = appell_window(a2, a1, b1)
    return _kernels.appell_sum(nmin, nmax, a2, a1, b1, 2j * pi * (z - u))


def correction_R_ml(m: int, l: int, u, tau, tol: float = DEFAULT_TOL) -> complex:
    """R_{m,l}(u; tau) = sum over lambda = l mod 2m of
    {sign(lambda + 1/2) - E((lambda + 2m a) sqrt(y/m))} e^{-pi i lambda^2 tau / 2m - 2 pi i lambda u},
    with a = Im u / y."""
    tau = as_tau(tau)
    u = complex(u)
    y = tau.imag
    c = 2 * m * u.imag / y
    n = 2 * m
    l0 = l % n
    t = math.sqrt(2 * m * LOG_EPS / (math.pi * y)) + n
    kmin = int(math.floor((min(0.0, -c) - t - l0) / n))
    kmax = int(math.ceil((max(0.0, -c) + t - l0) / n))
    return _kernels.r_sum(l0, n, kmin, kmax, 1, 0.5, c, math.sqrt(y / m), n, tau, u)


def theta_vector(m: int, z, tau, tol: float = DEFAULT_TOL) -> np.ndarray:
    """(theta_{m,l}(z; tau)) for l = 0 .. 2m-1."""
    return np.array([theta_index_component(m, l, z, tau, tol) for l in range(2 * m)])


def correction_vector(m: int, u, tau, tol: float = DEFAULT_TOL) -> np.ndarray:
    return np.array([correction_R_ml(m, l, u, tau, tol) for l in range(2 * m)])


def completed_block_f(u, z, tau, m: int, tol: float = DEFAULT_TOL) -> complex:
    """f~_u = f_u - 1/2 sum_l R_{m,l}(u) theta_{m,l}(z)."""
    corr = correction_vector(m, u, tau, tol) @ theta_vector(m, z, tau, tol)
    return block_f(u, z, tau, m, tol) - 0.5 * corr


@dataclass(frozen=True)
class PoleSpec:
    """Pole at u = alpha tau + beta (mod the lattice). residue(tau) may be None,
    in which case the residue is computed numerically."""
    alpha: float
    beta: float
    order: int = 1
    residue: Optional[Callable[[complex], complex]] = None

    def position(self, tau: complex) -> complex:
        return self.alpha * tau + self.beta


@dataclass(frozen=True)
class JacobiFormSpec:
    weight: int
    index: int
    evaluator: Callable  # (z array, tau) -> values
    poles: tuple = ()
    name: str = ""

    def __post_init__(self):
        if self.index <= 0:
            raise DomainError("index must be positive")
        object.__setattr__(self, "poles", tuple(self.poles))
        if any(p.order != 1 for p in self.poles):
            raise DomainError("only simple poles are supported")

    def __call__(self, z, tau):
        return self.evaluator(z, tau)


@dataclass
class FourierVector:
    m: int
    h: np.ndarray

    def __post_init__(self):
        self.h = np.asarray(self.h, dtype=complex)
        if self.h.shape != (2 * self.m,):
            raise DomainError("FourierVector must have exactly 2m components")

    def __getitem__(self, l: int) -> complex:
        return complex(self.h[l % (2 * self.m)])


@dataclass
class Decomposition:
    fourier: FourierVector
    finite_part: list = field(default_factory=list)  # (u, d_u)

    def reconstruct(self, z, tau, tol: float = DEFAULT_TOL) -> complex:
        m = self.fourier.m
        val = complex(self.fourier.h @ theta_vector(m, z, tau, tol))
        for u, d in self.finite_part:
            val += d * completed_block_f(u, z, tau, m, tol)
        return val

    def as_dict(self) -> dict:
        return {"m": self.fourier.m,
                "h": [[float(v.real), float(v.imag)] for v in self.fourier.h],
                "finite_part": [{"u": [u.real, u.imag], "d": [d.real, d.imag]} for u, d in self.finite_part]}


def default_base_point(tau: complex) -> complex:
    return -0.5 * tau - 0.5 + 0.01 * (1 + 1j)


def check_elliptic_law(phi: JacobiFormSpec, tau: complex, probes=None, rtol: float = 1e-6):
    """phi(z + 1) = phi(z) and phi(z + tau) = e^{-2 pi i m (tau + 2z)} phi(z) at probe points."""
    rng = np.random.default_rng(7)
    if probes is None:
        probes = rng.uniform(-0.5, 0.5, 4) + 1j * tau.imag * rng.uniform(-0.4, 0.4, 4) + 0.137
    probes = np.asarray(probes, dtype=complex)
    m = phi.index
    f0 = np.asarray(phi(probes, tau), dtype=complex)
    f1 = np.asarray(phi(probes + 1, tau), dtype=complex)
    ft = np.asarray(phi(probes + tau, tau), dtype=complex)
    expect = np.exp(-2j * np.pi * m * (tau + 2 * probes)) * f0
    scale = np.maximum(np.abs(f0), 1e-300)
    if np.any(np.abs(f1 - f0) > rtol * scale) or np.any(np.abs(ft - expect) > rtol * np.maximum(np.abs(expect), 1e-300)):
        raise JacobiLawError("function does not satisfy the index-m elliptic law")


def _poles_in_cell(phi: JacobiFormSpec, tau: complex, p: complex) -> list[complex]:
    """Translates of the catalogued poles lying in p + [0,1) tau + [0,1)."""
    out = []
    pa = p.imag / tau.imag
    pb = p.real - pa * tau.real
    for pole in phi.poles:
        u = pole.position(tau)
        ua = u.imag / tau.imag
        ub = u.real - ua * tau.real
        lam = math.floor(ua - pa)
        mu = math.floor(ub - pb)
        cand = u - lam * tau - mu
        for edge in (ua - pa - lam, ub - pb - mu):
            if min(edge, 1 - edge) < 1e-9:
                raise ContourError("pole on the boundary of the period cell; move the base point")
        out.append(cand)
    return out


def _band(pole_ims: list[float], y: float, s: float) -> tuple[float, float]:
    """Pole-free horizontal band around Im z = s."""
    if not pole_ims:
        return -math.inf, math.inf
    lo, hi = -math.inf, math.inf
    for v in pole_ims:
        k = math.floor((s - v) / y)
        below = v + k * y
        above = below + y
        if abs(below - s) < 1e-12:
            raise ContourError("pole on the integration line")
        lo, hi = max(lo, below), min(hi, above)
    return lo, hi


def _line_integrals(phi: JacobiFormSpec, tau: complex, p: complex, tol: float, max_nodes: int = 1 << 14):
    """int_p^{p+1} phi(z) e^{-2 pi i l z} dz for l mod 2m.

    Each mode is integrated on the horizontal line inside the pole-free band
    of Im p that is closest to Im z = -y l / 2m; this keeps the trapezoid sum
    well conditioned and does not change the value.
    """
    m = phi.index
    y = tau.imag
    poles = _poles_in_cell(phi, tau, p)
    lo, hi = _band([u.imag for u in poles], y, p.imag)
    out = np.zeros(2 * m, dtype=complex)
    for l in range(2 * m):
        s = -y * l / (2 * m)
        if math.isfinite(lo):
            H = hi - lo
            s = min(max(s, lo + 0.1 * H), hi - 0.1 * H)
        prev = None
        n = 256
        while True:
            x = p.real + np.arange(n) / n
            zz = x + 1j * s
            vals = np.asarray(phi(zz, tau), dtype=complex) * np.exp(-2j * np.pi * l * zz)
            cur = vals.mean()
            if prev is not None and abs(cur - prev) <= tol * max(1.0, abs(cur)):
                break
            prev = cur
            n *= 2
            if n > max_nodes:
                raise QuadratureError("trapezoid rule did not converge")
        out[l] = cur
    return out


def theta_decompose_holomorphic(phi: JacobiFormSpec, tau, p=None, tol: float = DEFAULT_TOL,
                                check: bool = True) -> FourierVector:
    """h_l(tau) = e^{-pi i l^2 tau / 2m} int_p^{p+1} phi(z; tau) e^{-2 pi i l z} dz."""
    tau = as_tau(tau)
    if phi.poles:
        raise DomainError("function has poles; use decompose_meromorphic_simple")
    if check:
        check_elliptic_law(phi, tau)
    p = default_base_point(tau) if p is None else complex(p)
    m = phi.index
    I = _line_integrals(phi, tau, p, tol)
    l = np.arange(2 * m)
    return FourierVector(m, np.exp(-1j * np.pi * l * l * tau / (2 * m)) * I)


def numerical_residue(phi: JacobiFormSpec, u: complex, tau: complex, radius: float = 1e-3,
                      nodes: int = 64) -> complex:
    th = 2 * np.pi * np.arange(nodes) / nodes
    w = radius * np.exp(1j * th)
    vals = np.asarray(phi(u + w, tau), dtype=complex)
    return complex((vals * w).mean())


def decompose_meromorphic_simple(phi: JacobiFormSpec, tau, p=None, tol: float = DEFAULT_TOL,
                                 check: bool = True) -> Decomposition:
    """phi = sum_l h_l theta_{m,l} + sum_u d_u f~_u with d_u = -2 pi i Res_{z=u} phi."""
    tau = as_tau(tau)
    if not phi.poles:
        return Decomposition(theta_decompose_holomorphic(phi, tau, p, tol, check), [])
    if check:
        check_elliptic_law(phi, tau)
    p = default_base_point(tau) if p is None else complex(p)
    m = phi.index
    cell = _poles_in_cell(phi, tau, p)
    finite = []
    for pole, u in zip(phi.poles, cell):
        res = pole.residue(tau) if pole.residue is not None else numerical_residue(phi, u, tau)
        finite.append((u, -2j * math.pi * res))
    I = _line_integrals(phi, tau, p, tol)
    l = np.arange(2 * m)
    h = np.exp(-1j * np.pi * l * l * tau / (2 * m)) * I
    for u, d in finite:
        h = h + 0.5 * d * correction_vector(m, u, tau, tol)
    return Decomposition(FourierVector(m, h), finite)


def theta_quotient_index13() -> JacobiFormSpec:
    """(theta_{0,0} theta_{0,1/2} theta_{1/2,0})^9 / (Delta theta_{1/2,1/2}): weight 1, index 13,
    one simple pole per period cell at z = 0."""

    def ev(z, tau):
        z = np.asarray(z, dtype=complex)
        num = theta_char(0, 0, z, tau) * theta_char(0, 0.5, z, tau) * theta_char(0.5, 0, z, tau)
        return num ** 9 / (dedekind_eta(tau) ** 24 * theta_char(0.5, 0.5, z, tau))

    return JacobiFormSpec(1, 13, ev, (PoleSpec(0.0, 0.0),), "theta_quotient_index13")


def theta_quotient_residue(tau) -> complex:
    """-(1/pi^9) theta'_{1/2,1/2}(0)^8 / Delta with theta' = -2 pi eta^3."""
    tau = as_tau(tau)
    eta = dedekind_eta(tau)
    return -((-2 * math.pi * eta ** 3) ** 8) / math.pi ** 9 / eta ** 24

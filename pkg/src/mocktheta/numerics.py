"""Shared numerical plumbing: points in the upper half plane, tail-certified
sums and adaptive Gauss-Legendre quadrature."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

DEFAULT_TOL = 1e-9
SUPPORTED_MIN_Y = 0.25
ROUNDOFF_FACTOR = 64.0


class MockThetaError(Exception):
    pass


class DomainError(MockThetaError, ValueError):
    pass


class TruncationError(MockThetaError):
    pass


class QuadratureError(MockThetaError):
    pass


class PoleProximityError(DomainError):
    pass


@dataclass(frozen=True)
class TauPoint:
    x: float
    y: float

    def __post_init__(self):
        if not (self.y > 0) or not math.isfinite(self.x) or not math.isfinite(self.y):
            raise DomainError("tau not in upper half plane")

    @classmethod
    def from_complex(cls, tau) -> "TauPoint":
        tau = complex(tau)
        return cls(tau.real, tau.imag)

    @property
    def tau(self) -> complex:
        return complex(self.x, self.y)

    @property
    def degraded(self) -> bool:
        return self.y < SUPPORTED_MIN_Y


@dataclass(frozen=True)
class ToleranceProfile:
    target_abs: float = DEFAULT_TOL
    tail_budget: float = 0.1
    fd_step: float = 1e-5

    def __post_init__(self):
        if not self.target_abs > 0:
            raise DomainError("target_abs must be positive")
        if not 0 < self.tail_budget < 1:
            raise DomainError("tail_budget must lie in (0, 1)")


@dataclass(frozen=True)
class QuadratureSpec:
    order: int = 16
    max_panels: int = 4096
    radius_policy: str = "gaussian"

    def __post_init__(self):
        if self.order < 8:
            raise DomainError("panel order must be at least 8")
        if self.max_panels < 16:
            raise DomainError("max_panels must be at least 16")


def as_tau(tau) -> complex:
    """Validate and return tau as a Python complex."""
    if isinstance(tau, TauPoint):
        return tau.tau
    t = complex(tau)
    if not (t.imag > 0) or not cmath.isfinite(t):
        raise DomainError("tau not in upper half plane")
    return t


def sqrt_principal_neg_i_tau(tau) -> complex:
    return cmath.sqrt(-1j * as_tau(tau))


def neg_i_tau_power(tau, twice_k: int) -> complex:
    """(-i tau)^{k/2} on the principal branch, built as an integer power times
    a square root so that (-i tau)^{3/2} = (-i tau) sqrt(-i tau)."""
    w = -1j * as_tau(tau)
    out = w ** (twice_k // 2)
    if twice_k % 2:
        out *= cmath.sqrt(w)
    return out


def sign(x: float) -> float:
    return 1.0 if x > 0 else (-1.0 if x < 0 else 0.0)


def sum_with_tail_bound(terms: Callable[[int], complex] | Iterable[complex],
                        majorant_tail: Callable[[int], float] | None = None,
                        tol: float = DEFAULT_TOL, max_terms: int = 10**6) -> complex:
    """Sum terms(0) + terms(1) + ... until majorant_tail(n), a bound on
    sum_{k >= n} |terms(k)|, drops below tol.

    A plain iterable is summed to exhaustion (no tail).
    """
    if majorant_tail is None:
        s = 0j
        for n, t in enumerate(terms):
            if n >= max_terms:
                raise TruncationError("term budget exhausted")
            s += t
        return s
    s = 0j
    for n in range(max_terms):
        if majorant_tail(n) <= tol:
            return s
        s += terms(n)
    raise TruncationError("could not certify the tail within the term budget")


def gaussian_tail_radius(alpha: float, tol: float, prefactor: float = 1.0) -> float:
    """Smallest T with prefactor * e^{-alpha T^2} / (2 alpha T) <= tol (and T >= 1)."""
    if alpha <= 0:
        raise DomainError("Gaussian decay parameter must be positive")
    t = max(1.0, math.sqrt(max(math.log(max(prefactor, 1e-300) / tol), 1.0) / alpha))
    while prefactor * math.exp(-alpha * t * t) / (2 * alpha * t) > tol:
        t *= 1.05
    return t


_GL_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gl(order: int):
    if order not in _GL_CACHE:
        _GL_CACHE[order] = np.polynomial.legendre.leggauss(order)
    return _GL_CACHE[order]


def _panel_sums(f, lo: np.ndarray, hi: np.ndarray, order: int):
    """Gauss-Legendre estimates of the integral and of the integral of |f| per panel."""
    x, w = _gl(order)
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    pts = mid[:, None] + half[:, None] * x[None, :]
    vals = np.asarray(f(pts.ravel()), dtype=complex).reshape(pts.shape)
    return half * (vals @ w), half * (np.abs(vals) @ w)


def adaptive_gauss_legendre(f: Callable[[np.ndarray], np.ndarray], edges, tol: float,
                            spec: QuadratureSpec = QuadratureSpec()) -> complex:
    """Integrate a vectorised f over consecutive panels given by edges.

    Panels are bisected until the bisected estimate agrees with the coarse
    one; each panel gets a share of tol proportional to its length.
    """
    edges = np.asarray(edges, dtype=float)
    lo, hi = edges[:-1].copy(), edges[1:].copy()
    total_len = edges[-1] - edges[0]
    if total_len == 0:
        return 0j
    coarse, _ = _panel_sums(f, lo, hi, spec.order)
    result = 0j
    n_panels = len(lo)
    while len(lo):
        mid = 0.5 * (lo + hi)
        left, left_abs = _panel_sums(f, lo, mid, spec.order)
        right, right_abs = _panel_sums(f, mid, hi, spec.order)
        fine = left + right
        share = tol * (hi - lo) / total_len
        # below the rounding floor further bisection cannot help
        floor = ROUNDOFF_FACTOR * np.finfo(float).eps * (left_abs + right_abs)
        ok = np.abs(fine - coarse) <= np.maximum(share, floor)
        result += fine[ok].sum()
        if ok.all():
            return result
        bad = ~ok
        n_panels += int(bad.sum())
        if n_panels > spec.max_panels:
            raise QuadratureError("adaptive quadrature did not converge within max_panels")
        lo = np.concatenate([lo[bad], mid[bad]])
        hi = np.concatenate([mid[bad], hi[bad]])
        coarse = np.concatenate([left[bad], right[bad]])
    return result


def integrate_real_line(f: Callable[[np.ndarray], np.ndarray], y: float, shift: float = 0.0,
                        tol: float = DEFAULT_TOL, spec: QuadratureSpec = QuadratureSpec(),
                        C: float = 1.0, tail_budget: float = 0.1) -> complex:
    """Integrate f over the real line, given |f(x)| <= C exp(-pi y x^2 + 2 pi s |x|)."""
    if y <= 0:
        raise DomainError("Gaussian decay requires y > 0")
    s = max(shift, 0.0)
    # completing the square: exponent = -pi y (|x| - s/y)^2 + pi s^2 / y
    center = s / y
    pref = 2 * C * math.exp(math.pi * s * s / y)
    t = gaussian_tail_radius(math.pi * y, tol * tail_budget, pref)
    X = center + t
    n0 = max(16, int(math.ceil(2 * X * math.sqrt(y))) * 2)
    edges = np.linspace(-X, X, n0 + 1)
    return adaptive_gauss_legendre(f, edges, tol * (1 - tail_budget), spec)


def integrate_vertical_ray(g: Callable[[np.ndarray], np.ndarray], z0: complex, tau, nu0: float,
                           tol: float = DEFAULT_TOL, amplitude: float = 1.0,
                           spec: QuadratureSpec = QuadratureSpec(), tail_budget: float = 0.1,
                           weight: Callable[[np.ndarray], np.ndarray] | None = None) -> complex:
    """Integrate g(z) / sqrt(-i(z + tau)) dz along z = z0 + i s, s >= 0.

    Requires |g(z0 + i s)| <= amplitude * exp(-pi nu0^2 (s + Im z0)).  A custom
    weight replaces 1/sqrt(-i(z+tau)); it must be bounded by that weight's
    size in modulus.
    """
    if not nu0 > 0:
        raise DomainError("no decay: nu0 must be positive")
    tau = complex(tau)
    z0 = complex(z0)
    y0 = (z0 + tau).imag
    if y0 < 0:
        raise DomainError("z0 + tau must lie in the closed upper half plane")
    rate = math.pi * nu0 * nu0
    base = amplitude * math.exp(-rate * z0.imag)
    if base == 0.0:
        return 0j

    def tail(S):
        return base * math.exp(-rate * S) / (rate * math.sqrt(max(y0 + S, 1e-300)))

    S = 1.0
    while tail(S) > tol * tail_budget:
        S *= 1.5
    edges = [0.0]
    h = min(0.25, 1.0 / rate)
    while edges[-1] + h < S:
        edges.append(edges[-1] + h)
        h *= 1.6
    edges.append(S)

    if weight is None:
        def weight(z):
            return 1.0 / np.sqrt(-1j * (z + tau))

    def integrand(s):
        z = z0 + 1j * s
        return 1j * g(z) * weight(z)

    return adaptive_gauss_legendre(integrand, edges, tol * (1 - tail_budget), spec)


def lattice_coordinates(u: complex, tau: complex) -> tuple[float, float]:
    """(alpha, beta) with u = alpha tau + beta."""
    alpha = u.imag / tau.imag
    return alpha, u.real - alpha * tau.real


def lattice_distance(u: complex, tau: complex) -> float:
    """Distance of u to Z tau + Z measured in lattice coordinates."""
    al, be = lattice_coordinates(u, tau)
    return math.hypot(al - round(al), be - round(be))


@dataclass
class ReportEntry:
    identity: str
    anchor: str
    samples: int
    max_dev: float
    tol: float

    @property
    def passed(self) -> bool:
        return bool(self.max_dev <= self.tol)

    def as_dict(self) -> dict:
        return {"identity": self.identity, "anchor": self.anchor, "samples": self.samples,
                "max_deviation": float(f"{self.max_dev:.6e}"), "tolerance": self.tol, "pass": self.passed}

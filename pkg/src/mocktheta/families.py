"""Vector-valued mock theta functions F = H + G of seventh and fifth order.

F is the q-series side, H the indefinite theta side divided by eta factors and
G a combination of the unary series R_{a,b}.  Family data live in
data/families.json (override with MOCKTHETA_DATA).
"""

from __future__ import annotations

import cmath
import json
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

import numpy as np

from . import _kernels
from .classical import LOG_EPS, dedekind_eta, unary_g
from .indefinite import (IndefThetaSpec, LatticeForm, _box_for, _fl, _grid, _radius, beta_series,
                         classify_cone, indefinite_theta_ab, reduce_primitive, to_fraction)
from .lerch import period_integral_h
from .numerics import DEFAULT_TOL, DomainError, ReportEntry, as_tau, sqrt_principal_neg_i_tau
from .qseries import MOCK_SERIES, lattice_points

DATA_ENV = "MOCKTHETA_DATA"
FAMILY_IDS = ("F7", "F5_1", "F5_2")


def zeta(k: int, n: int) -> complex:
    return cmath.exp(2j * math.pi * k / n)


# ------------------------------------------------------------ unary R

@dataclass(frozen=True)
class UnaryRSpec:
    a: Fraction
    b: Fraction
    scale: Fraction = Fraction(1)

    def __post_init__(self):
        for f in ("a", "b", "scale"):
            object.__setattr__(self, f, to_fraction(getattr(self, f)))
        if self.scale <= 0:
            raise DomainError("scale must be positive")


def unary_R(spec: UnaryRSpec, tau, tol: float = DEFAULT_TOL) -> complex:
    """R_{a,b}(s tau) = sum over nu in a + Z of sign(nu) beta(2 nu^2 y') e^{-pi i nu^2 s tau - 2 pi i nu b}."""
    t = as_tau(tau) * float(spec.scale)
    y = t.imag
    a = float(spec.a)
    nu0 = a - math.floor(a)
    w = math.sqrt(LOG_EPS / (math.pi * y)) + 1
    return _kernels.r_sum(nu0, 1.0, int(math.floor(-w - nu0)), int(math.ceil(w - nu0)), 1, 0.0, 0.0,
                          math.sqrt(2 * y), 1.0, t, float(spec.b))


# ------------------------------------------------------------ family data

def _parse_q(x) -> Fraction:
    return to_fraction(x)


@dataclass(frozen=True)
class MockVector:
    family: str
    form: LatticeForm
    c1: tuple
    c2: tuple
    F: tuple
    H: tuple
    G: dict
    shadow: dict | None
    M: np.ndarray
    T: np.ndarray

    @property
    def size(self) -> int:
        return len(self.F)


def data_path() -> Path:
    env = os.environ.get(DATA_ENV)
    return Path(env) if env else Path(__file__).with_name("data") / "families.json"


def _matrix(spec: dict) -> np.ndarray:
    M = np.array([[c * math.sin(k * math.pi / n) for c, k, n in row] for row in spec["entries"]])
    return 2 / math.sqrt(spec["norm"]) * M


def _tmatrix(entries, size: int) -> np.ndarray:
    T = np.zeros((size, size), dtype=complex)
    for i, j, (k, n) in entries:
        T[i, j] = zeta(k, n)
    return T


@lru_cache(maxsize=4)
def _load(path: str) -> dict:
    with open(path) as fh:
        raw = json.load(fh)
    out = {}
    for fid, d in raw["families"].items():
        fd = raw["forms"][d["form"]]
        c1 = tuple(_parse_q(x) for x in fd["c1"])
        c2 = tuple(_parse_q(x) for x in fd["c2"])
        form = LatticeForm(fd["A"], c1)
        G = d["G"]
        if "same_rows_as" in G:
            G = dict(G, rows=raw["families"][G["same_rows_as"]]["G"]["rows"])
        n = len(d["F"])
        out[fid] = MockVector(fid, form, c1, c2, tuple(d["F"]), tuple(d["H"]), G, d.get("shadow"),
                              _matrix(raw["matrices"][d["matrix"]]), _tmatrix(raw["T"][d["T"]], n))
    return out


def load_families(path=None) -> dict[str, MockVector]:
    return _load(str(path or data_path()))


def family(fid: str) -> MockVector:
    fams = load_families()
    if fid not in fams:
        raise KeyError(f"unknown family {fid!r}")
    return fams[fid]


def _component(fam: MockVector, component: int) -> int:
    if not 1 <= component <= fam.size:
        raise DomainError(f"component must be in 1..{fam.size}")
    return component - 1


# ------------------------------------------------------------ F side

_ARGS = {"q": lambda t: t, "q^1/2": lambda t: t / 2, "-q^1/2": lambda t: (t + 1) / 2}


@lru_cache(maxsize=256)
def _series_points(name: str, bound: int):
    """Exponents (as floats) and weights of each lattice sum of a catalogued series."""
    out = []
    for coeff, spec in MOCK_SERIES[name].terms:
        e, w, L = lattice_points(spec, Fraction(bound))
        out.append((int(coeff), e.astype(float) / L, w.astype(float)))
    return tuple(out)


def euler_inf(t: complex) -> complex:
    """(q; q)_inf at q = e^{2 pi i t}."""
    return cmath.exp(-2j * math.pi * t / 24) * dedekind_eta(t)


def eval_series(name: str, tau, tol: float = DEFAULT_TOL) -> complex:
    """Numerical value of a catalogued mock theta series at q = e^{2 pi i tau}."""
    tau = as_tau(tau)
    d = MOCK_SERIES[name]
    y = tau.imag
    bound = int(math.ceil((math.log(1 / tol) + 12) / (2 * math.pi * y))) + 2
    S = 0j
    for coeff, e, w in _series_points(name, bound):
        S += coeff * complex(np.sum(w * np.exp(2j * np.pi * e * tau)))
    pref = complex(1)
    for k, ex in d.euler:
        pref *= euler_inf(k * tau) ** ex
    val = pref * cmath.exp(2j * math.pi * float(d.shift) * tau) * S + d.add
    return val / d.div


def eval_F(fid: str, component: int, tau, tol: float = DEFAULT_TOL) -> complex:
    fam = family(fid)
    c = fam.F[_component(fam, component)]
    tau = as_tau(tau)
    inner = eval_series(c["series"], _ARGS[c["arg"]](tau), tol) + c["add"]
    return c["mult"] * cmath.exp(2j * math.pi * float(_parse_q(c["shift"])) * tau) * inner


# ------------------------------------------------------------ H side

def _eta_factor(etas, tau: complex) -> complex:
    v = complex(1)
    for p, q, r, e in etas:
        v *= dedekind_eta((p * tau + q) / r) ** e
    return v


def h_spec(fid: str, component: int) -> IndefThetaSpec:
    fam = family(fid)
    h = fam.H[_component(fam, component)]
    return IndefThetaSpec(fam.form, fam.c1, fam.c2, tuple(map(_parse_q, h["a"])), tuple(map(_parse_q, h["b"])))


def eval_H(fid: str, component: int, tau, tol: float = DEFAULT_TOL) -> complex:
    fam = family(fid)
    h = fam.H[_component(fam, component)]
    tau = as_tau(tau)
    th = indefinite_theta_ab(h_spec(fid, component), tau, tol * 1e-2)
    return h["const"] * zeta(*h["zeta"]) * _eta_factor(h["etas"], tau) * th


# ------------------------------------------------------------ G side

def eval_G(fid: str, component: int, tau, tol: float = DEFAULT_TOL) -> complex:
    fam = family(fid)
    row = fam.G["rows"][_component(fam, component)]
    scale = fam.G["scale"]
    acc = 0j
    for t in row:
        acc += t["coef"] * zeta(*t["zeta"]) * unary_R(UnaryRSpec(t["a"], t["b"], scale), tau, tol)
    return fam.G["factor"] * acc


def F_vector(fid: str, tau, tol: float = DEFAULT_TOL) -> np.ndarray:
    return np.array([eval_F(fid, k, tau, tol) for k in range(1, family(fid).size + 1)])


def H_vector(fid: str, tau, tol: float = DEFAULT_TOL) -> np.ndarray:
    return np.array([eval_H(fid, k, tau, tol) for k in range(1, family(fid).size + 1)])


def G_vector(fid: str, tau, tol: float = DEFAULT_TOL) -> np.ndarray:
    return np.array([eval_G(fid, k, tau, tol) for k in range(1, family(fid).size + 1)])


def shadow_vector(tau, fid: str = "F7", tol: float = DEFAULT_TOL) -> np.ndarray:
    """Weight 3/2 unary theta vector g (at the scaled argument)."""
    fam = family(fid)
    sh = fam.shadow
    t = np.asarray(tau, dtype=complex) * sh["scale"]
    return np.array([sum(e["coef"] * zeta(*e["zeta"]) * unary_g(float(_parse_q(e["a"])), float(_parse_q(e["b"])), t, tol)
                         for e in row) for row in sh["rows"]])


# ------------------------------------------------------------ cusp decomposition

def _pd_theta(A: np.ndarray, shift: np.ndarray, basis: np.ndarray, b: np.ndarray, tau: complex,
              tol: float) -> complex:
    """sum over xi in shift + basis Z^k of e^{2 pi i Q(xi) tau + 2 pi i B(xi, b)} for positive definite Q there."""
    if basis.shape[1] == 0:
        return complex(np.exp(2j * np.pi * (0.5 * shift @ A @ shift * tau + shift @ A @ b)))
    G = basis.T @ A @ basis
    center = -np.linalg.solve(G, basis.T @ A @ shift)
    R = _radius([G], tau.imag, tol * 0.1)
    lo, hi = _box_for(G, R, center)
    ks = _grid(lo, hi).astype(float)
    xi = shift + ks @ basis.T
    Axi = xi @ A
    Q = 0.5 * np.einsum("ij,ij->i", xi, Axi)
    return complex(np.sum(np.exp(2j * np.pi * (Q * tau + Axi @ b))))


@dataclass
class CuspPiece:
    r_spec: UnaryRSpec
    r_value: complex
    theta_value: complex
    mu0: tuple


def cusp_decompose(spec: IndefThetaSpec, c, tau, tol: float = DEFAULT_TOL):
    """Split the beta series of an integral primitive interior vector c into
    -sum over P0 of R_{B(c,mu0)/2Q(c), -B(c,b)}(-2Q(c) tau) times positive definite theta sums.

    Returns (pieces, total)."""
    form = spec.form
    tau = as_tau(tau)
    cv = classify_cone(form, c)
    if cv.kind != "interior" or any(x.denominator != 1 for x in cv.c):
        raise DomainError("c must be an integral interior cone vector")
    ci = [int(x) for x in cv.c]
    if math.gcd(*ci) != 1:
        raise DomainError("c must be primitive")
    r = form.r
    w = [sum(form.A[i][j] * ci[j] for j in range(r)) for i in range(r)]  # B(c, x) = w . x
    g = math.gcd(*w)
    V = reduce_primitive([x // g for x in w])
    Tm = np.array(V, dtype=np.int64).T  # w . Tm = (g, 0, ..., 0)
    n0 = Tm[:, 0]
    perp = Tm[:, 1:].astype(float)
    Qc = form.Q(cv.c)
    a = [to_fraction(x) if not isinstance(x, float) else x for x in spec.a]
    b = [to_fraction(x) if not isinstance(x, float) else x for x in spec.b]
    Bca = sum(wi * ai for wi, ai in zip(w, a))
    Bcb = sum(wi * bi for wi, bi in zip(w, b))
    twoQ = 2 * Qc
    # admissible values B(c, mu) = B(c, a) + g k in (2Q(c), 0]
    kmin = math.floor((twoQ - Bca) / g) + 1
    kmax = math.floor(-Bca / g)
    A = form.matrix
    cf = _fl(cv.c)
    bf = _fl(b)
    b_perp = bf - float(Bcb) / float(twoQ) * cf
    pieces = []
    total = 0j
    for k in range(kmin, kmax + 1):
        mu0 = tuple(ai + k * int(ni) for ai, ni in zip(a, n0))
        t = (Bca + g * k) / twoQ
        mu_perp = _fl(mu0) - float(t) * cf
        th = _pd_theta(A, mu_perp, perp, b_perp, tau, tol)
        rs = UnaryRSpec(t, -Bcb, -twoQ)
        rv = unary_R(rs, tau, tol)
        pieces.append(CuspPiece(rs, rv, th, mu0))
        total -= rv * th
    return pieces, total


# ------------------------------------------------------------ checks

def matrix_M(fid: str) -> np.ndarray:
    return family(fid).M


def matrix_T(fid: str) -> np.ndarray:
    return family(fid).T


def verify_completion(fid: str, taus, tol: float = 1e-6) -> ReportEntry:
    dev = 0.0
    for t in taus:
        F = F_vector(fid, t)
        H = H_vector(fid, t)
        G = G_vector(fid, t)
        dev = max(dev, float(np.max(np.abs(F - H - G))))
    return ReportEntry(f"{fid}.completion", "F = H + G componentwise", len(taus), dev, tol)


def g_table_crosscheck(fid: str, tau, tol: float = DEFAULT_TOL) -> float:
    """Max deviation between the G table and the beta series route
    G_k = const zeta eta-factor (beta_{c1} - beta_{c2}), with beta_{c1} from cusp_decompose."""
    fam = family(fid)
    tau = as_tau(tau)
    dev = 0.0
    for k in range(1, fam.size + 1):
        h = fam.H[k - 1]
        spec = h_spec(fid, k)
        _, b1 = cusp_decompose(spec, fam.c1, tau, tol)
        b2 = beta_series(fam.form, fam.c2, spec.a, spec.b, tau, tol)
        pred = h["const"] * zeta(*h["zeta"]) * _eta_factor(h["etas"], tau) * (b1 - b2)
        dev = max(dev, abs(pred - eval_G(fid, k, tau, tol)))
    return dev


def shadow_integral_check(tau, tol: float = 1e-6) -> ReportEntry:
    """F(tau) - M F(-1/tau)/sqrt(-i tau) against i sqrt(s) int_0^{i inf} g(z) / sqrt(-i(z + tau)) dz."""
    fam = family("F7")
    tau = as_tau(tau)
    lhs = F_vector("F7", tau) - fam.M @ F_vector("F7", -1 / tau) / sqrt_principal_neg_i_tau(tau)
    sh = fam.shadow
    s = sh["scale"]
    rhs = []
    for row in sh["rows"]:
        acc = 0j
        for e in row:
            a = float(_parse_q(e["a"]))
            b = float(_parse_q(e["b"]))
            # int_0^{i inf} g_{a,b}(s z) / sqrt(-i(z + tau)) dz = s^{-1/2} int_0^{i inf} g_{a,b}(w) / sqrt(-i(w + s tau)) dw
            acc += e["coef"] * zeta(*e["zeta"]) * period_integral_h(a - 0.5, b - 0.5, s * tau, tol * 1e-2)
        rhs.append(1j * sh["factor"] / math.sqrt(s) * acc)
    dev = float(np.max(np.abs(lhs - np.array(rhs))))
    return ReportEntry("F7.shadow_integral", "F(tau) - M F(-1/tau)/sqrt(-i tau) = i sqrt(21) int_0^{i inf} g(z)/sqrt(-i(z+tau)) dz",
                       1, dev, tol)

"""Theta series for integral quadratic forms of signature (r-1, 1).

theta_{a,b}(tau) = sum over nu in a + Z^r of rho(nu) exp(2 pi i Q(nu) tau + 2 pi i B(nu, b)),
rho = rho^{c1} - rho^{c2}, where rho^c is E(B(c,nu) sqrt(y / -Q(c))) for c with
Q(c) < 0 and sign(B(c,nu)) for an isotropic integral c (a cusp).
"""

from __future__ import annotations

import cmath
import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.special import erf

from . import _kernels
from .numerics import (DEFAULT_TOL, DomainError, ReportEntry, TruncationError, as_tau,
                       neg_i_tau_power)

WALL_THRESHOLD = 1e-8
BOX_BUDGET = 2 * 10**7


class ConeError(DomainError):
    pass


class WallProximityError(DomainError):
    pass


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(repr(float(x)))


def _vec(v) -> tuple:
    """Exact rationals where possible, floats otherwise."""
    out = []
    for x in v:
        if isinstance(x, (Fraction, int, str)):
            out.append(to_fraction(x))
        else:
            out.append(float(x))
    return tuple(out)


def _fl(v) -> np.ndarray:
    return np.array([float(x) for x in v], dtype=float)


def _det_exact(M) -> Fraction:
    M = [[Fraction(x) for x in row] for row in M]
    n = len(M)
    det = Fraction(1)
    for i in range(n):
        piv = next((r for r in range(i, n) if M[r][i] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != i:
            M[i], M[piv] = M[piv], M[i]
            det = -det
        det *= M[i][i]
        for r in range(i + 1, n):
            f = M[r][i] / M[i][i]
            for c in range(i, n):
                M[r][c] -= f * M[i][c]
    return det


def _inverse_exact(M):
    n = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for i in range(n):
        piv = next(r for r in range(i, n) if aug[r][i] != 0)
        aug[i], aug[piv] = aug[piv], aug[i]
        p = aug[i][i]
        aug[i] = [x / p for x in aug[i]]
        for r in range(n):
            if r != i and aug[r][i] != 0:
                f = aug[r][i]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[i])]
    return tuple(tuple(row[n:]) for row in aug)


@dataclass(frozen=True)
class LatticeForm:
    A: tuple
    c0: tuple

    def __post_init__(self):
        A = tuple(tuple(int(x) for x in row) for row in self.A)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "c0", _vec(self.c0))
        r = len(A)
        if any(len(row) != r for row in A) or any(A[i][j] != A[j][i] for i in range(r) for j in range(r)):
            raise DomainError("A must be a symmetric square integer matrix")
        if _det_exact(A) == 0:
            raise DomainError("A must be nondegenerate")
        ev = np.linalg.eigvalsh(np.array(A, dtype=float))
        if int(np.sum(ev < 0)) != 1:
            raise DomainError("quadratic form must have type (r-1, 1)")
        if len(self.c0) != r or not self.Q(self.c0) < 0:
            raise DomainError("c0 must satisfy Q(c0) < 0")

    @property
    def r(self) -> int:
        return len(self.A)

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.A, dtype=float)

    @property
    def det(self) -> int:
        return int(_det_exact(self.A))

    @property
    def inverse(self):
        return _inverse_exact(self.A)

    @property
    def Astar(self) -> tuple:
        return tuple(self.A[i][i] for i in range(self.r))

    def B(self, x, y):
        return sum(x[i] * self.A[i][j] * y[j] for i in range(self.r) for j in range(self.r))

    def Q(self, x):
        return self.B(x, x) / 2

    def to_json(self) -> dict:
        return {"A": [list(row) for row in self.A], "c0": [str(x) for x in self.c0]}


@dataclass(frozen=True)
class ConeVector:
    c: tuple
    kind: str  # "interior" or "cusp"

    @property
    def vec(self) -> np.ndarray:
        return _fl(self.c)


def classify_cone(form: LatticeForm, c) -> ConeVector:
    c = tuple(to_fraction(x) for x in c)
    if len(c) != form.r:
        raise ConeError("dimension mismatch")
    q = form.Q(c)
    if form.B(c, form.c0) >= 0:
        if q <= 0 and any(c):
            raise ConeError("vector lies in the opposite component of the negative cone")
    if q < 0:
        if form.B(c, form.c0) < 0:
            return ConeVector(c, "interior")
        raise ConeError("vector lies in the opposite component of the negative cone")
    if q == 0 and any(c):
        if any(x.denominator != 1 for x in c):
            raise ConeError("cusp vectors must be integral")
        g = 0
        for x in c:
            g = math.gcd(g, int(x))
        if g != 1:
            raise ConeError("cusp vectors must be primitive")
        if form.B(c, form.c0) < 0:
            return ConeVector(c, "cusp")
    raise ConeError("vector is not in the closure of the negative cone")


def _as_cone(form, c):
    return c if isinstance(c, ConeVector) else classify_cone(form, c)


@dataclass(frozen=True)
class IndefThetaSpec:
    form: LatticeForm
    c1: ConeVector
    c2: ConeVector
    a: tuple
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "c1", _as_cone(self.form, self.c1))
        object.__setattr__(self, "c2", _as_cone(self.form, self.c2))
        object.__setattr__(self, "a", _vec(self.a))
        object.__setattr__(self, "b", _vec(self.b))
        for cv in (self.c1, self.c2):
            if cv.kind == "cusp":
                t = float(self.form.B(cv.c, self.a))
                if abs(t - round(t)) < WALL_THRESHOLD:
                    raise WallProximityError("characteristic a lies on a wall B(c, a) in Z of a cusp c")

    def swapped(self) -> "IndefThetaSpec":
        return IndefThetaSpec(self.form, self.c2, self.c1, self.a, self.b)

    def with_ab(self, a, b) -> "IndefThetaSpec":
        return IndefThetaSpec(self.form, self.c1, self.c2, a, b)

    def to_json(self) -> str:
        s = lambda v: [str(x) if isinstance(x, Fraction) else repr(float(x)) for x in v]
        d = self.form.to_json()
        d.update({"c1": s(self.c1.c), "c2": s(self.c2.c), "a": s(self.a), "b": s(self.b)})
        return json.dumps(d, sort_keys=True)

    @classmethod
    def from_json(cls, text) -> "IndefThetaSpec":
        d = json.loads(text) if isinstance(text, str) else text
        conv = lambda v: [to_fraction(x) if isinstance(x, (str, int)) and "." not in str(x) and "e" not in str(x)
                          else float(x) for x in v]
        form = LatticeForm(d["A"], conv(d["c0"]))
        return cls(form, conv(d["c1"]), conv(d["c2"]), conv(d["a"]), conv(d["b"]))


# ------------------------------------------------------------ kernels and majorants

def rho_kernel(spec: IndefThetaSpec, nu, y: float) -> float:
    nu = _fl(nu)
    A = spec.form.matrix

    def part(cv: ConeVector):
        c = cv.vec
        Bc = float(c @ A @ nu)
        if cv.kind == "cusp":
            return float(np.sign(Bc))
        Qc = float(spec.form.Q(cv.c))
        return float(erf(math.sqrt(math.pi) * Bc * math.sqrt(y / -Qc)))

    return part(spec.c1) - part(spec.c2)


def majorant_lambda(form: LatticeForm, c, c0p) -> float:
    """lambda > 0 with Q_c >= lambda Q_{c0'}, where Q_c = Q - B(c, .)^2 / 2Q(c)."""
    c = _as_cone(form, c)
    c0p = _as_cone(form, c0p)
    if c.kind != "interior" or c0p.kind != "interior":
        raise ConeError("majorant_lambda needs interior cone vectors")
    B = float(form.B(c.c, c0p.c))
    Q = float(form.Q(c.c))
    Q0 = float(form.Q(c0p.c))
    disc = max(B * B - 4 * Q * Q0, 0.0)
    return (B * B - 2 * Q * Q0 - abs(B) * math.sqrt(disc)) / (2 * Q * Q0)


def _qc_matrix(form: LatticeForm, c) -> np.ndarray:
    A = form.matrix
    v = A @ _fl(c)
    return A - np.outer(v, v) / float(form.Q(c))


def _qplus_kappa(form, c1, c2) -> float:
    B12 = float(form.B(c1, c2))
    Q1, Q2 = float(form.Q(c1)), float(form.Q(c2))
    den = 4 * Q1 * Q2 - B12 * B12
    if abs(den) < 1e-12:
        raise DomainError("c1 and c2 are linearly dependent")
    return B12 / den


def _qplus_matrix(form, c1, c2) -> np.ndarray:
    A = form.matrix
    k = _qplus_kappa(form, c1, c2)
    v1, v2 = A @ _fl(c1), A @ _fl(c2)
    return A + k * (np.outer(v1, v2) + np.outer(v2, v1))


def majorant_Qplus(form: LatticeForm, c1, c2, nu) -> float:
    c1 = _as_cone(form, c1)
    c2 = _as_cone(form, c2)
    if c1.kind != "interior" or c2.kind != "interior":
        raise ConeError("majorant_Qplus needs interior cone vectors")
    nu = _fl(nu)
    return 0.5 * float(nu @ _qplus_matrix(form, c1.c, c2.c) @ nu)


# ------------------------------------------------------------ enumeration

def _box_for(M: np.ndarray, R: float, center: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Integer box containing {n : 1/2 (n - center)^T M (n - center) <= R}."""
    Minv = np.linalg.inv(M)
    w = np.sqrt(np.maximum(2 * R * np.diag(Minv), 0.0))
    return np.floor(center - w).astype(np.int64), np.ceil(center + w).astype(np.int64)


def _grid(lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    sizes = hi - lo + 1
    if np.prod(sizes.astype(float)) > BOX_BUDGET:
        raise TruncationError("lattice enumeration budget exceeded")
    axes = [np.arange(l, h + 1, dtype=np.int64) for l, h in zip(lo, hi)]
    return np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, len(lo))


def _ball_volume(r: int) -> float:
    return math.pi ** (r / 2) / math.gamma(r / 2 + 1)


def _radius(mats, y: float, tol: float, factor: float = 2.0) -> float:
    """Rmax with factor * (point count) * e^{-2 pi y Rmax} below tol."""
    r = mats[0].shape[0]
    R = math.log(factor / tol) / (2 * math.pi * y)
    for _ in range(4):
        count = sum(_ball_volume(r) * (2 * (R + 1)) ** (r / 2) / math.sqrt(max(np.linalg.det(M), 1e-300))
                    for M in mats) + 2 ** r
        R = math.log(10 * factor * count / tol) / (2 * math.pi * y)
    return R


class _PointData:
    """Evaluated invariants of lattice points nu = a + n."""

    def __init__(self, form: LatticeForm, nu: np.ndarray, b: np.ndarray):
        A = form.matrix
        self.A = A
        self.nu = nu
        Anu = nu @ A
        self.Anu = Anu
        self.Q = 0.5 * np.einsum("ij,ij->i", nu, Anu)
        self.Bb = Anu @ b

    def cone(self, form: LatticeForm, cv: ConeVector, y: float):
        Bc = self.Anu @ cv.vec
        s = np.sign(Bc)
        if cv.kind == "cusp":
            return Bc, s, np.zeros_like(Bc)
        Qc = float(form.Q(cv.c))
        return Bc, s, Bc * math.sqrt(y / -Qc)


def beta_series(form: LatticeForm, c, a, b, tau, tol: float = DEFAULT_TOL) -> complex:
    """sum over nu in a + Z^r of sign(B(c,nu)) beta(-B(c,nu)^2 y / Q(c)) e^{2 pi i Q(nu) tau + 2 pi i B(nu,b)}
    for interior c."""
    cv = _as_cone(form, c)
    if cv.kind != "interior":
        raise ConeError("beta series needs an interior cone vector")
    tau = as_tau(tau)
    y = tau.imag
    a, b = _fl(a), _fl(b)
    M = _qc_matrix(form, cv.c)
    R = _radius([M], y, tol * 0.1)
    lo, hi = _box_for(M, R, -a)
    nu = a + _grid(lo, hi)
    pd = _PointData(form, nu, b)
    _, s, x = pd.cone(form, cv, y)
    qc = 0.5 * np.einsum("ij,jk,ik->i", nu, M, nu)
    keep = qc <= R
    z = np.zeros(int(keep.sum()))
    # equal sign slots cancel the sign part; the c1 slot subtracts the beta part
    return -_kernels.indef_sum(pd.Q[keep], pd.Bb[keep], x[keep], s[keep], z, s[keep], True, False, tau)


def _theta_interior(spec: IndefThetaSpec, tau: complex, tol: float) -> complex:
    form = spec.form
    y = tau.imag
    c1, c2 = spec.c1, spec.c2
    v1, v2 = c1.vec, c2.vec
    if np.linalg.matrix_rank(np.stack([v1, v2])) < 2:
        return 0j  # proportional interior vectors: rho vanishes identically
    a, b = _fl(spec.a), _fl(spec.b)
    mats = [_qc_matrix(form, c1.c), _qc_matrix(form, c2.c), _qplus_matrix(form, c1.c, c2.c)]
    R = _radius(mats, y, tol * 0.1, factor=4.0)
    lo = hi = None
    for M in mats:
        l, h = _box_for(M, R, -a)
        lo = l if lo is None else np.minimum(lo, l)
        hi = h if hi is None else np.maximum(hi, h)
    nu = a + _grid(lo, hi)
    vals = np.stack([0.5 * np.einsum("ij,jk,ik->i", nu, M, nu) for M in mats])
    keep = vals.min(axis=0) <= R
    nu = nu[keep]
    pd = _PointData(form, nu, b)
    _, s1, x1 = pd.cone(form, c1, y)
    _, s2, x2 = pd.cone(form, c2, y)
    return _kernels.indef_sum(pd.Q, pd.Bb, x1, s1, x2, s2, True, True, tau)


def reduce_primitive(c) -> list[list[int]]:
    """Unimodular integer V with V c = e_1 for a primitive integer vector c."""
    c = [int(x) for x in c]
    r = len(c)
    V = [[int(i == j) for j in range(r)] for i in range(r)]
    v = list(c)
    while sum(1 for x in v if x != 0) > 1:
        i = min((k for k in range(r) if v[k] != 0), key=lambda k: abs(v[k]))
        for j in range(r):
            if j != i and v[j] != 0:
                q = v[j] // v[i]
                v[j] -= q * v[i]
                V[j] = [x - q * y for x, y in zip(V[j], V[i])]
    i = next(k for k in range(r) if v[k] != 0)
    if abs(v[i]) != 1:
        raise ConeError("vector is not primitive")
    V[0], V[i] = V[i], V[0]
    v[0], v[i] = v[i], v[0]
    if v[0] == -1:
        V[0] = [-x for x in V[0]]
    return V


def _unimodular_with_first_column(c) -> np.ndarray:
    """Integer matrix U with det +-1 whose first column is the primitive vector c."""
    U = np.array([[int(x) for x in row] for row in _inverse_exact(reduce_primitive(c))], dtype=np.int64)
    assert [int(x) for x in U[:, 0]] == [int(x) for x in c]
    return U


def _theta_cusp(spec: IndefThetaSpec, tau: complex, tol: float) -> complex:
    """c1 interior, c2 cusp: Gaussian part plus the line-wise geometric sums."""
    form = spec.form
    y = tau.imag
    c1, c2 = spec.c1, spec.c2
    A = form.matrix
    a, b = _fl(spec.a), _fl(spec.b)
    v1, v2 = c1.vec, c2.vec

    # (E1 - s1) part
    M1 = _qc_matrix(form, c1.c)
    R1 = _radius([M1], y, tol * 0.05)
    lo, hi = _box_for(M1, R1, -a)
    nu = a + _grid(lo, hi)
    keep = 0.5 * np.einsum("ij,jk,ik->i", nu, M1, nu) <= R1
    pd = _PointData(form, nu[keep], b)
    _, s1, x1 = pd.cone(form, c1, y)
    z = np.zeros(len(s1))
    part_a = _kernels.indef_sum(pd.Q, pd.Bb, x1, s1, z, s1, True, False, tau)

    # (s1 - s2) part, summed along lines mu + Z c2
    B12 = float(v1 @ A @ v2)
    U = _unimodular_with_first_column(c2.c)
    W = U[:, 1:].astype(float)

    def proj(x):  # along c2 onto the orthogonal complement of c1
        return x - np.outer((x @ A @ v1) / B12, v2) if x.ndim == 2 else x - (x @ A @ v1) / B12 * v2

    Wp = proj(W.T).T  # columns
    Pa = proj(a)
    G = Wp.T @ A @ Wp
    center = -np.linalg.solve(G, Wp.T @ A @ Pa)
    d2 = float(form.B(c2.c, spec.a))
    d2 = abs(d2 - round(d2))
    geo = 2.0 / (1.0 - math.exp(-2 * math.pi * y * d2))
    R = _radius([G], y, tol * 0.05, factor=2 * geo)
    sc = float(c2.vec @ A @ b)
    total = 0j
    while True:
        lo, hi = _box_for(G, R, center)
        ks = _grid(lo, hi)
        p = a + ks.astype(float) @ W.T
        t0 = (p @ A @ v1) / B12
        fl = np.floor(t0 + 1e-10)
        t = t0 - fl
        t[np.abs(t) < 1e-10] = 0.0
        mu = p - np.outer(fl, v2)
        Amu = mu @ A
        Qm = 0.5 * np.einsum("ij,ij->i", mu, Amu)
        Bmb = Amu @ b
        beta = Amu @ v2
        E = 2j * np.pi * (Qm * tau + Bmb)
        X = 2j * np.pi * (beta * tau + sc)
        small = beta > 0
        terms = np.empty(len(mu), dtype=complex)
        terms[small] = -2 * np.exp(E[small]) / (1 - np.exp(X[small]))
        big = ~small
        terms[big] = 2 * np.exp(E[big] - X[big]) / (1 - np.exp(-X[big]))
        terms += np.where(t == 0.0, np.exp(E), 0.0)
        # a posteriori check: the outermost layer of the box must be negligible
        edge = np.any((ks == lo) | (ks == hi), axis=1)
        if ks.shape[1] == 0 or not edge.any() or np.abs(terms[edge]).sum() < tol * 1e-3:
            total = terms.sum()
            break
        R *= 1.5
    return part_a + total


def indefinite_theta_ab(spec: IndefThetaSpec, tau, tol: float = DEFAULT_TOL) -> complex:
    tau = as_tau(tau)
    k1, k2 = spec.c1.kind, spec.c2.kind
    if k1 == "interior" and k2 == "interior":
        return _theta_interior(spec, tau, tol)
    if k1 == "interior" and k2 == "cusp":
        return _theta_cusp(spec, tau, tol)
    if k1 == "cusp" and k2 == "interior":
        return -_theta_cusp(spec.swapped(), tau, tol)
    # two cusps: split through the interior reference vector c0
    mid = classify_cone(spec.form, spec.form.c0)
    s1 = IndefThetaSpec(spec.form, spec.c1, mid, spec.a, spec.b)
    s2 = IndefThetaSpec(spec.form, mid, spec.c2, spec.a, spec.b)
    return indefinite_theta_ab(s1, tau, tol / 2) + indefinite_theta_ab(s2, tau, tol / 2)


def z_to_ab(z, tau: complex):
    """a = Im z / y and b = Re z - a Re tau for z = a tau + b."""
    z = np.asarray(z, dtype=complex)
    a = z.imag / tau.imag
    return a, z.real - a * tau.real


def indefinite_theta_z(form: LatticeForm, c1, c2, z, tau, tol: float = DEFAULT_TOL) -> complex:
    """theta(z; tau) = exp(-2 pi i Q(a) tau - 2 pi i B(a, b)) theta_{a,b}(tau)."""
    tau = as_tau(tau)
    a, b = z_to_ab(z, tau)
    spec = IndefThetaSpec(form, c1, c2, tuple(a), tuple(b))
    A = form.matrix
    Qa = 0.5 * a @ A @ a
    Bab = a @ A @ b
    return cmath.exp(-2j * math.pi * (Qa * tau + Bab)) * indefinite_theta_ab(spec, tau, tol)


def coset_representatives(form: LatticeForm, budget: int = 10**5) -> list[tuple]:
    """Representatives p of A^{-1} Z^r / Z^r with entries in [0, 1)."""
    d = abs(form.det)
    if d > budget:
        raise TruncationError("too many cosets")
    Ainv = form.inverse
    r = form.r
    reps = set()
    for m in itertools.product(range(d), repeat=r):
        p = tuple((sum(Ainv[i][j] * m[j] for j in range(r))) % 1 for i in range(r))
        reps.add(p)
        if len(reps) == d:
            break
    return sorted(reps)


def theta_S_rhs(form: LatticeForm, c1, c2, z, tau, tol: float = DEFAULT_TOL) -> complex:
    """i / sqrt(-det A) (-i tau)^{r/2} sum_p e^{2 pi i Q(z + p tau)/tau} theta(z + p tau; tau)."""
    tau = as_tau(tau)
    z = np.asarray(z, dtype=complex)
    A = form.matrix
    acc = 0j
    for p in coset_representatives(form):
        zp = z + _fl(p) * tau
        Qz = 0.5 * zp @ A @ zp
        acc += cmath.exp(2j * math.pi * Qz / tau) * indefinite_theta_z(form, c1, c2, zp, tau, tol)
    return 1j / math.sqrt(-form.det) * neg_i_tau_power(tau, form.r) * acc


def verify_modular_S(form: LatticeForm, c1, c2, z, tau, tol: float = DEFAULT_TOL,
                     check_tol: float = 1e-8) -> ReportEntry:
    tau = as_tau(tau)
    z = np.asarray(z, dtype=complex)
    lhs = indefinite_theta_z(form, c1, c2, z / tau, -1 / tau, tol * 1e-2)
    rhs = theta_S_rhs(form, c1, c2, z, tau, tol * 1e-2)
    return ReportEntry("indefinite.theta_S", "theta(z/tau;-1/tau) = i/sqrt(-det A) (-i tau)^{r/2} sum_p ...",
                       1, abs(lhs - rhs), check_tol)


def orthogonal_action(form: LatticeForm, C, spec: IndefThetaSpec) -> IndefThetaSpec:
    """Transport (c1, c2, a, b) by C in O_A^+(Z)."""
    C = [[int(x) for x in row] for row in C]
    r = form.r
    CtAC = [[sum(C[k][i] * form.A[k][l] * C[l][j] for k in range(r) for l in range(r)) for j in range(r)]
            for i in range(r)]
    if tuple(map(tuple, CtAC)) != form.A:
        raise DomainError("C does not preserve the quadratic form")
    apply = lambda v: tuple(sum(C[i][j] * v[j] for j in range(r)) for i in range(r))
    if not form.B(apply(form.c0), form.c0) < 0:
        raise DomainError("C swaps the two components of the negative cone")
    return IndefThetaSpec(form, classify_cone(form, apply(spec.c1.c)), classify_cone(form, apply(spec.c2.c)),
                          apply(spec.a), apply(spec.b))

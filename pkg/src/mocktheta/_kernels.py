"""Inner summation loops.

Each kernel exists twice: a scalar loop compiled with numba and a vectorised
numpy twin.  MOCKTHETA_NO_NUMBA=1 (or a missing numba) selects numpy.
"""

import cmath
import math
import os

import numpy as np
from scipy.special import erf as _np_erf, erfcx as _np_erfcx

try:
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("MOCKTHETA_NO_NUMBA", "") not in ("1", "true", "yes")

SQRT_PI = math.sqrt(math.pi)


# ---------------------------------------------------------------- loop kernels

def _erfcx_loop(x):
    # x >= 0
    if x < 8.0:
        return math.erfc(x) * math.exp(x * x)
    inv = 1.0 / (2.0 * x * x)
    term = 1.0
    acc = 1.0
    n = 1
    while True:
        term *= -(2 * n - 1) * inv
        acc += term
        if abs(term) < 1e-17:
            break
        n += 1
    return acc / (x * SQRT_PI)


def _theta_sum_loop(nu0, kmin, kmax, taus, ws, power):
    out = np.zeros(taus.shape[0], dtype=np.complex128)
    for i in range(taus.shape[0]):
        acc = 0j
        for k in range(kmin, kmax + 1):
            nu = nu0 + k
            t = cmath.exp(1j * math.pi * nu * nu * taus[i] + 2j * math.pi * nu * ws[i])
            if power == 1:
                t *= nu
            acc += t
        out[i] = acc
    return out


def _r_sum_loop(nu0, step, kmin, kmax, alt, sshift, c, scale, kappa, tau, u):
    acc = 0j
    for k in range(kmin, kmax + 1):
        nu = nu0 + step * k
        sv = nu + sshift
        s = 1.0 if sv > 0 else (-1.0 if sv < 0 else 0.0)
        t = (nu + c) * scale
        ph = -1j * math.pi * nu * nu * tau / kappa - 2j * math.pi * nu * u
        if s != 0.0 and s * t > 0:
            val = s * _erfcx(SQRT_PI * abs(t)) * cmath.exp(ph - math.pi * t * t)
        else:
            val = (s - math.erf(SQRT_PI * t)) * cmath.exp(ph)
        if alt == -1 and (k % 2) != 0:
            val = -val
        acc += val
    return acc


def _appell_sum_loop(nmin, nmax, a2, a1, b1, b0):
    # sum_n exp(a2 n^2 + a1 n) / (1 - exp(b1 n + b0))
    acc = 0j
    for n in range(nmin, nmax + 1):
        num = a2 * n * n + a1 * n
        w = b1 * n + b0
        if w.real < 0:
            acc += cmath.exp(num) / (1.0 - cmath.exp(w))
        else:
            acc -= cmath.exp(num - w) / (1.0 - cmath.exp(-w))
    return acc


def _indef_sum_loop(qv, bb, x1, s1, x2, s2, int1, int2, tau):
    # sum over points of rho * exp(2 pi i (Q tau + B(nu,b)))
    acc = 0j
    for i in range(qv.shape[0]):
        e = 2j * math.pi * (qv[i] * tau + bb[i])
        d = s1[i] - s2[i]
        if d != 0.0:
            acc += d * cmath.exp(e)
        if int1 and s1[i] != 0.0:
            acc -= s1[i] * _erfcx(SQRT_PI * abs(x1[i])) * cmath.exp(e - math.pi * x1[i] * x1[i])
        if int2 and s2[i] != 0.0:
            acc += s2[i] * _erfcx(SQRT_PI * abs(x2[i])) * cmath.exp(e - math.pi * x2[i] * x2[i])
    return acc


if USE_NUMBA:
    _erfcx = njit(_erfcx_loop)
    theta_sum_nb = njit(_theta_sum_loop)
    r_sum_nb = njit(_r_sum_loop)
    appell_sum_nb = njit(_appell_sum_loop)
    indef_sum_nb = njit(_indef_sum_loop)
else:
    _erfcx = _erfcx_loop
    theta_sum_nb = r_sum_nb = appell_sum_nb = indef_sum_nb = None


# ---------------------------------------------------------------- numpy twins

def theta_sum_np(nu0, kmin, kmax, taus, ws, power):
    nu = nu0 + np.arange(kmin, kmax + 1, dtype=float)
    ph = 1j * np.pi * (nu[None, :] ** 2 * taus[:, None] + 2 * nu[None, :] * ws[:, None])
    t = np.exp(ph)
    if power == 1:
        t = t * nu[None, :]
    return t.sum(axis=1)


def r_sum_np(nu0, step, kmin, kmax, alt, sshift, c, scale, kappa, tau, u):
    k = np.arange(kmin, kmax + 1)
    nu = nu0 + step * k.astype(float)
    s = np.sign(nu + sshift)
    t = (nu + c) * scale
    ph = -1j * np.pi * nu * nu * tau / kappa - 2j * np.pi * nu * u
    same = (s != 0) & (s * t > 0)
    out = np.empty(len(k), dtype=complex)
    out[same] = s[same] * _np_erfcx(np.sqrt(np.pi) * np.abs(t[same])) * np.exp(ph[same] - np.pi * t[same] ** 2)
    o = ~same
    out[o] = (s[o] - _np_erf(np.sqrt(np.pi) * t[o])) * np.exp(ph[o])
    if alt == -1:
        out[k % 2 != 0] *= -1
    return out.sum()


def appell_sum_np(nmin, nmax, a2, a1, b1, b0):
    n = np.arange(nmin, nmax + 1, dtype=float)
    num = a2 * n * n + a1 * n
    w = b1 * n + b0
    lo = w.real < 0
    out = np.empty(len(n), dtype=complex)
    out[lo] = np.exp(num[lo]) / (1 - np.exp(w[lo]))
    hi = ~lo
    out[hi] = -np.exp(num[hi] - w[hi]) / (1 - np.exp(-w[hi]))
    return out.sum()


def indef_sum_np(qv, bb, x1, s1, x2, s2, int1, int2, tau):
    e = 2j * np.pi * (qv * tau + bb)
    d = s1 - s2
    m = d != 0
    acc = (d[m] * np.exp(e[m])).sum()
    if int1:
        m = s1 != 0
        acc -= (s1[m] * _np_erfcx(np.sqrt(np.pi) * np.abs(x1[m])) * np.exp(e[m] - np.pi * x1[m] ** 2)).sum()
    if int2:
        m = s2 != 0
        acc += (s2[m] * _np_erfcx(np.sqrt(np.pi) * np.abs(x2[m])) * np.exp(e[m] - np.pi * x2[m] ** 2)).sum()
    return complex(acc)


# ---------------------------------------------------------------- dispatch

def theta_sum(nu0, kmin, kmax, taus, ws, power=0):
    taus = np.ascontiguousarray(taus, dtype=np.complex128)
    ws = np.ascontiguousarray(ws, dtype=np.complex128)
    if USE_NUMBA:
        return theta_sum_nb(float(nu0), int(kmin), int(kmax), taus, ws, int(power))
    return theta_sum_np(float(nu0), int(kmin), int(kmax), taus, ws, int(power))


def r_sum(nu0, step, kmin, kmax, alt, sshift, c, scale, kappa, tau, u):
    args = (float(nu0), float(step), int(kmin), int(kmax), int(alt), float(sshift),
            float(c), float(scale), float(kappa), complex(tau), complex(u))
    if USE_NUMBA:
        return complex(r_sum_nb(*args))
    return complex(r_sum_np(*args))


def appell_sum(nmin, nmax, a2, a1, b1, b0):
    args = (int(nmin), int(nmax), complex(a2), complex(a1), complex(b1), complex(b0))
    if USE_NUMBA:
        return complex(appell_sum_nb(*args))
    return complex(appell_sum_np(*args))


def indef_sum(qv, bb, x1, s1, x2, s2, int1, int2, tau):
    arrs = [np.ascontiguousarray(v, dtype=np.float64) for v in (qv, bb, x1, s1, x2, s2)]
    if USE_NUMBA:
        return complex(indef_sum_nb(*arrs, bool(int1), bool(int2), complex(tau)))
    return indef_sum_np(*arrs, bool(int1), bool(int2), complex(tau))


def erfcx(x):
    if USE_NUMBA:
        return float(_erfcx(float(x)))
    return float(_np_erfcx(x))

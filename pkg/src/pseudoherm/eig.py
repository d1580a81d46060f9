"""Eigensolvers for the tridiagonal matrices produced by the lattice module.

* ``eig_sym_tridiag``: implicit QL with a Wilkinson-type shift.
* ``bisection_eigenvalues``: Sturm-sequence bisection, an independent
  check on QL and the tool of choice when only a few levels are needed.
* ``eig_hessenberg``: Francis double-shift QR for the non-symmetric
  tridiagonal (which is already upper Hessenberg), in dense or band
  storage.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence, Union

import numpy as np
import scipy.linalg
from numba import njit

from .lattice import SymTridiagonal, TridiagonalMatrix

DEFLATION_TOL = 1e-14
QL_MAXIT = 50
FRANCIS_MAXIT = 30
# dense fallback: above this size LAPACK replaces our O(N^3) sweep
FRANCIS_MAX_N = 1500
BANDWIDTH = 8
BAND_DROP_TOL = 1e-10


class ConvergenceError(RuntimeError):
    def __init__(self, index: int, iterations: int):
        super().__init__(f"eigenvalue {index} did not converge after {iterations} iterations")
        self.index = index
        self.iterations = iterations


class BreakdownError(RuntimeError):
    """Shifted solve stayed singular after every perturbed retry."""


class Inapplicable(NamedTuple):
    index: int


@dataclass(frozen=True)
class EigenResult:
    values: np.ndarray
    iterations: int
    converged: bool
    method: str = ""
    backward_error: float = 0.0

    @property
    def max_imag(self) -> float:
        return float(np.max(np.abs(self.values.imag))) if len(self.values) else 0.0

    @property
    def real(self) -> np.ndarray:
        return self.values.real.copy()

    def __len__(self) -> int:
        return len(self.values)


def sort_spectrum(values: np.ndarray) -> np.ndarray:
    values = np.asarray(values, dtype=complex)
    order = np.lexsort((values.imag, values.real))
    return values[order]


# --- symmetric tridiagonal: implicit QL ----------------------------------


@njit(cache=True)
def _tqli(d, e, tol, maxit):
    n = d.shape[0]
    anorm = 0.0
    for i in range(n):
        anorm = max(anorm, abs(d[i]) + abs(e[i]) + (abs(e[i - 1]) if i > 0 else 0.0))
    total = 0
    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if dd == 0.0:
                    dd = anorm
                if abs(e[m]) <= tol * dd:
                    break
                m += 1
            if m == l:
                break
            if it == maxit:
                return -1 - l, it
            it += 1
            total += 1
            # shift from the leading 2x2 block, taking the closer eigenvalue
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = 1.0
            c = 1.0
            p = 0.0
            i = m - 1
            early = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    early = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                i -= 1
            if early:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return total, 0


def eig_sym_tridiag(T: SymTridiagonal, tol: float = DEFLATION_TOL, maxit: int = QL_MAXIT) -> EigenResult:
    """All eigenvalues of a symmetric tridiagonal, ascending.

    Deflation when |e_i| <= tol (|d_i| + |d_{i+1}|).
    """
    d = T.diag.astype(float).copy()
    e = np.zeros_like(d)
    e[: len(T.off)] = T.off
    status, its = _tqli(d, e, tol, maxit)
    if status < 0:
        raise ConvergenceError(-1 - status, its)
    values = np.sort(d).astype(complex)
    return EigenResult(values, int(status), True, "ql")


# --- Sturm bisection -----------------------------------------------------


@njit(cache=True)
def _count_below(d, e2, x, pivmin):
    """Number of eigenvalues strictly less than x (LDL^T pivot signs)."""
    count = 0
    q = d[0] - x
    if abs(q) < pivmin:
        q = -pivmin
    if q < 0.0:
        count += 1
    for i in range(1, d.shape[0]):
        q = d[i] - x - e2[i - 1] / q
        if abs(q) < pivmin:
            q = -pivmin
        if q < 0.0:
            count += 1
    return count


@njit(cache=True)
def _bisect(d, e2, indices, lo, hi, pivmin, abstol, maxit):
    out = np.empty(indices.shape[0])
    steps = 0
    for j in range(indices.shape[0]):
        k = indices[j]
        a = lo
        b = hi
        for _ in range(maxit):
            mid = 0.5 * (a + b)
            if mid <= a or mid >= b or b - a <= abstol:
                break
            steps += 1
            if _count_below(d, e2, mid, pivmin) > k:
                b = mid
            else:
                a = mid
        out[j] = 0.5 * (a + b)
    return out, steps


def gershgorin_bounds(T: SymTridiagonal) -> tuple[float, float]:
    r = np.zeros(T.N)
    r[:-1] += np.abs(T.off)
    r[1:] += np.abs(T.off)
    return float(np.min(T.diag - r)), float(np.max(T.diag + r))


def sturm_count(T: SymTridiagonal, x: float) -> int:
    e2 = T.off.astype(float) ** 2
    pivmin = np.finfo(float).tiny * max(1.0, float(np.max(e2, initial=0.0)))
    return int(_count_below(T.diag.astype(float), e2, float(x), pivmin))


def bisection_eigenvalues(
    T: SymTridiagonal,
    indices: Optional[Sequence[int]] = None,
    abstol: float = 0.0,
    maxit: int = 200,
) -> EigenResult:
    """Selected eigenvalues (0-based ascending indices) by Sturm bisection.

    With abstol = 0 each interval is halved until it can no longer shrink
    in floating point.
    """
    n = T.N
    idx = np.arange(n) if indices is None else np.asarray(indices, dtype=np.int64)
    if idx.size and (idx.min() < 0 or idx.max() >= n):
        raise IndexError("eigenvalue index out of range")
    lo, hi = gershgorin_bounds(T)
    pad = 2.2e-16 * max(abs(lo), abs(hi)) + 1e-300
    e2 = T.off.astype(float) ** 2
    pivmin = np.finfo(float).tiny * max(1.0, float(np.max(e2, initial=0.0)))
    vals, steps = _bisect(T.diag.astype(float), e2, idx.astype(np.int64), lo - pad, hi + pad, pivmin, abstol, maxit)
    return EigenResult(vals.astype(complex), int(steps), True, "bisection")


# --- non-symmetric tridiagonal ------------------------------------------


def balance(M: TridiagonalMatrix) -> TridiagonalMatrix:
    """Diagonal similarity making |sub_j| = |sup_j| = sqrt(|sub_j sup_j|).

    Each ratio d_j / d_{j+1} is applied locally, so nothing overflows even
    when the accumulated scaling would.  A zero product decouples the
    matrix; both entries are then set to zero, which leaves the spectrum
    unchanged.
    """
    mag = np.sqrt(np.abs(M.sub)) * np.sqrt(np.abs(M.sup))
    return TridiagonalMatrix(M.diag.copy(), np.sign(M.sub) * mag * (mag > 0), np.sign(M.sup) * mag * (mag > 0))


def symmetrize_if_possible(M: TridiagonalMatrix) -> Union[SymTridiagonal, Inapplicable]:
    """Symmetric tridiagonal similar to M when every sub_j sup_j > 0.

    The off-diagonal is -sqrt(sub_j sup_j); the sign of a tridiagonal's
    off-diagonals does not affect its spectrum.
    """
    if np.array_equal(M.sub, M.sup):
        return SymTridiagonal(M.diag.copy(), M.sub.copy())
    prod = M.sub * M.sup
    bad = np.flatnonzero(~(prod > 0))
    if bad.size:
        return Inapplicable(int(bad[0]))
    off = -np.sqrt(prod)
    return SymTridiagonal(M.diag.copy(), off)


@njit(cache=True)
def _hqr(a, tol, maxit):
    """Francis double-shift QR on an upper Hessenberg matrix (overwritten)."""
    n = a.shape[0]
    wr = np.zeros(n)
    wi = np.zeros(n)
    anorm = 0.0
    for i in range(n):
        for j in range(max(i - 1, 0), n):
            anorm += abs(a[i, j])
    nn = n - 1
    t = 0.0
    total = 0
    while nn >= 0:
        its = 0
        while True:
            l = nn
            while l >= 1:
                s = abs(a[l - 1, l - 1]) + abs(a[l, l])
                if s == 0.0:
                    s = anorm
                if abs(a[l, l - 1]) <= tol * s:
                    a[l, l - 1] = 0.0
                    break
                l -= 1
            x = a[nn, nn]
            if l == nn:
                wr[nn] = x + t
                nn -= 1
                break
            y = a[nn - 1, nn - 1]
            w = a[nn, nn - 1] * a[nn - 1, nn]
            if l == nn - 1:
                p = 0.5 * (y - x)
                q = p * p + w
                z = math.sqrt(abs(q))
                x += t
                if q >= 0.0:
                    z = p + math.copysign(z, p)
                    wr[nn - 1] = x + z
                    wr[nn] = x + z
                    if z != 0.0:
                        wr[nn] = x - w / z
                else:
                    wr[nn - 1] = x + p
                    wr[nn] = x + p
                    wi[nn - 1] = -z
                    wi[nn] = z
                nn -= 2
                break
            if its == maxit:
                return wr, wi, -1 - nn
            if its == 10 or its == 20:
                # exceptional shift
                t += x
                for i in range(nn + 1):
                    a[i, i] -= x
                s = abs(a[nn, nn - 1]) + abs(a[nn - 1, nn - 2])
                x = 0.75 * s
                y = x
                w = -0.4375 * s * s
            its += 1
            total += 1
            m = nn - 2
            while m >= l:
                z = a[m, m]
                r = x - z
                s = y - z
                p = (r * s - w) / a[m + 1, m] + a[m, m + 1]
                q = a[m + 1, m + 1] - z - r - s
                r = a[m + 2, m + 1]
                s = abs(p) + abs(q) + abs(r)
                p /= s
                q /= s
                r /= s
                if m == l:
                    break
                u = abs(a[m, m - 1]) * (abs(q) + abs(r))
                v = abs(p) * (abs(a[m - 1, m - 1]) + abs(z) + abs(a[m + 1, m + 1]))
                if u <= tol * v:
                    break
                m -= 1
            for i in range(m + 2, nn + 1):
                a[i, i - 2] = 0.0
                if i != m + 2:
                    a[i, i - 3] = 0.0
            for k in range(m, nn):
                if k != m:
                    p = a[k, k - 1]
                    q = a[k + 1, k - 1]
                    r = 0.0
                    if k != nn - 1:
                        r = a[k + 2, k - 1]
                    x = abs(p) + abs(q) + abs(r)
                    if x != 0.0:
                        p /= x
                        q /= x
                        r /= x
                s = math.copysign(math.sqrt(p * p + q * q + r * r), p)
                if s != 0.0:
                    if k == m:
                        if l != m:
                            a[k, k - 1] = -a[k, k - 1]
                    else:
                        a[k, k - 1] = -s * x
                    p += s
                    x = p / s
                    y = q / s
                    z = r / s
                    q /= p
                    r /= p
                    if k != nn - 1:
                        for j in range(k, nn + 1):
                            p = a[k, j] + q * a[k + 1, j] + r * a[k + 2, j]
                            a[k + 2, j] -= p * z
                            a[k + 1, j] -= p * y
                            a[k, j] -= p * x
                    else:
                        for j in range(k, nn + 1):
                            p = a[k, j] + q * a[k + 1, j]
                            a[k + 1, j] -= p * y
                            a[k, j] -= p * x
                    mmin = nn if nn < k + 3 else k + 3
                    if k != nn - 1:
                        for i in range(l, mmin + 1):
                            p = x * a[i, k] + y * a[i, k + 1] + z * a[i, k + 2]
                            a[i, k + 2] -= p * r
                            a[i, k + 1] -= p * q
                            a[i, k] -= p
                    else:
                        for i in range(l, mmin + 1):
                            p = x * a[i, k] + y * a[i, k + 1]
                            a[i, k + 1] -= p * q
                            a[i, k] -= p
    return wr, wi, total


@njit(cache=True)
def _hqr_band(ab, B, tol, maxit):
    """Francis double-shift QR on band storage ab[i, j - i + 3] = a[i, j], -3 <= j - i <= B.

    Updates that would land outside the band are dropped and accumulated
    (max and sum of squares), which bounds the backward error exactly.
    """
    n = ab.shape[0]
    O = 3
    wr = np.zeros(n)
    wi = np.zeros(n)
    anorm = 0.0
    for i in range(n):
        for c in range(2, B + O + 1):
            anorm += abs(ab[i, c])
    nn = n - 1
    t = 0.0
    total = 0
    drop_max = 0.0
    drop_sq = 0.0
    while nn >= 0:
        its = 0
        while True:
            l = nn
            while l >= 1:
                s = abs(ab[l - 1, O]) + abs(ab[l, O])
                if s == 0.0:
                    s = anorm
                if abs(ab[l, O - 1]) <= tol * s:
                    ab[l, O - 1] = 0.0
                    break
                l -= 1
            x = ab[nn, O]
            if l == nn:
                wr[nn] = x + t
                nn -= 1
                break
            y = ab[nn - 1, O]
            w = ab[nn, O - 1] * ab[nn - 1, O + 1]
            if l == nn - 1:
                p = 0.5 * (y - x)
                q = p * p + w
                z = math.sqrt(abs(q))
                x += t
                if q >= 0.0:
                    z = p + math.copysign(z, p)
                    wr[nn - 1] = x + z
                    wr[nn] = x + z
                    if z != 0.0:
                        wr[nn] = x - w / z
                else:
                    wr[nn - 1] = x + p
                    wr[nn] = x + p
                    wi[nn - 1] = -z
                    wi[nn] = z
                nn -= 2
                break
            if its == maxit:
                return wr, wi, -1 - nn, drop_max, drop_sq
            if its == 10 or its == 20:
                t += x
                for i in range(nn + 1):
                    ab[i, O] -= x
                s = abs(ab[nn, O - 1]) + abs(ab[nn - 1, O - 1])
                x = 0.75 * s
                y = x
                w = -0.4375 * s * s
            its += 1
            total += 1
            m = nn - 2
            while m >= l:
                z = ab[m, O]
                r = x - z
                s = y - z
                p = (r * s - w) / ab[m + 1, O - 1] + ab[m, O + 1]
                q = ab[m + 1, O] - z - r - s
                r = ab[m + 2, O - 1]
                s = abs(p) + abs(q) + abs(r)
                p /= s
                q /= s
                r /= s
                if m == l:
                    break
                u = abs(ab[m, O - 1]) * (abs(q) + abs(r))
                v = abs(p) * (abs(ab[m - 1, O]) + abs(z) + abs(ab[m + 1, O]))
                if u <= tol * v:
                    break
                m -= 1
            for i in range(m + 2, nn + 1):
                ab[i, O - 2] = 0.0
                if i != m + 2:
                    ab[i, O - 3] = 0.0
            for k in range(m, nn):
                if k != m:
                    p = ab[k, O - 1]
                    q = ab[k + 1, O - 2]
                    r = 0.0
                    if k != nn - 1:
                        r = ab[k + 2, O - 3]
                    x = abs(p) + abs(q) + abs(r)
                    if x != 0.0:
                        p /= x
                        q /= x
                        r /= x
                s = math.copysign(math.sqrt(p * p + q * q + r * r), p)
                if s != 0.0:
                    if k == m:
                        if l != m:
                            ab[k, O - 1] = -ab[k, O - 1]
                    else:
                        ab[k, O - 1] = -s * x
                    p += s
                    x = p / s
                    y = q / s
                    z = r / s
                    q /= p
                    r /= p
                    jmax = min(nn, k + 2 + B)
                    if k != nn - 1:
                        for j in range(k, jmax + 1):
                            c0 = j - k + O
                            c1 = c0 - 1
                            c2 = c0 - 2
                            a0 = ab[k, c0] if c0 <= B + O else 0.0
                            a1 = ab[k + 1, c1] if c1 <= B + O else 0.0
                            a2 = ab[k + 2, c2]
                            p = a0 + q * a1 + r * a2
                            ab[k + 2, c2] = a2 - p * z
                            if c1 <= B + O:
                                ab[k + 1, c1] = a1 - p * y
                            else:
                                d = abs(p * y)
                                drop_sq += d * d
                                drop_max = max(drop_max, d)
                            if c0 <= B + O:
                                ab[k, c0] = a0 - p * x
                            else:
                                d = abs(p * x)
                                drop_sq += d * d
                                drop_max = max(drop_max, d)
                    else:
                        for j in range(k, min(nn, k + 1 + B) + 1):
                            c0 = j - k + O
                            c1 = c0 - 1
                            a0 = ab[k, c0] if c0 <= B + O else 0.0
                            a1 = ab[k + 1, c1]
                            p = a0 + q * a1
                            ab[k + 1, c1] = a1 - p * y
                            if c0 <= B + O:
                                ab[k, c0] = a0 - p * x
                            else:
                                d = abs(p * x)
                                drop_sq += d * d
                                drop_max = max(drop_max, d)
                    mmin = nn if nn < k + 3 else k + 3
                    ncol = 3 if k != nn - 1 else 2
                    for i in range(max(l, k - B), mmin + 1):
                        a0 = 0.0
                        a1 = 0.0
                        a2 = 0.0
                        c = k - i + O
                        if c <= B + O:
                            a0 = ab[i, c]
                        if c + 1 <= B + O:
                            a1 = ab[i, c + 1]
                        if ncol == 3 and c + 2 <= B + O:
                            a2 = ab[i, c + 2]
                        if ncol == 3:
                            p = x * a0 + y * a1 + z * a2
                        else:
                            p = x * a0 + y * a1
                        if c <= B + O:
                            ab[i, c] = a0 - p
                        else:
                            d = abs(p)
                            drop_sq += d * d
                            drop_max = max(drop_max, d)
                        if c + 1 <= B + O:
                            ab[i, c + 1] = a1 - p * q
                        else:
                            d = abs(p * q)
                            drop_sq += d * d
                            drop_max = max(drop_max, d)
                        if ncol == 3:
                            if c + 2 <= B + O:
                                ab[i, c + 2] = a2 - p * r
                            else:
                                d = abs(p * r)
                                drop_sq += d * d
                                drop_max = max(drop_max, d)
    return wr, wi, total, drop_max, drop_sq

def francis_qr(A: np.ndarray, tol: float = np.finfo(float).eps, maxit: int = FRANCIS_MAXIT) -> EigenResult:
    """Eigenvalues of a dense upper Hessenberg matrix."""
    a = np.array(A, dtype=float, order="C", copy=True)
    if a.shape[0] == 0:
        return EigenResult(np.zeros(0, dtype=complex), 0, True, "francis")
    wr, wi, status = _hqr(a, tol, maxit)
    if status < 0:
        raise ConvergenceError(-1 - status, maxit)
    return EigenResult(sort_spectrum(wr + 1j * wi), int(status), True, "francis")


def francis_qr_banded(
    M: TridiagonalMatrix,
    bandwidth: int = BANDWIDTH,
    tol: float = np.finfo(float).eps,
    maxit: int = FRANCIS_MAXIT,
) -> EigenResult:
    """Francis QR keeping only ``bandwidth`` superdiagonals.

    ``backward_error`` is the Frobenius norm of every dropped update
    relative to ||M||: the values returned are exact eigenvalues (up to
    rounding) of a matrix that far from M.
    """
    if bandwidth < 4:
        raise ValueError("the double-shift bulge needs a bandwidth of at least 4")
    n = M.N
    ab = np.zeros((n, bandwidth + 4))
    ab[:, 3] = M.diag
    ab[:-1, 4] = M.sup
    ab[1:, 2] = M.sub
    wr, wi, status, _, drop_sq = _hqr_band(ab, bandwidth, tol, maxit)
    if status < 0:
        raise ConvergenceError(-1 - status, maxit)
    norm = M.norm()
    backward = math.sqrt(drop_sq) / norm if norm > 0 else 0.0
    return EigenResult(sort_spectrum(wr + 1j * wi), int(status), True, "francis-band", backward)


def eig_hessenberg(
    M: TridiagonalMatrix,
    balance_first: bool = True,
    method: str = "auto",
    tol: float = np.finfo(float).eps,
    maxit: int = FRANCIS_MAXIT,
) -> EigenResult:
    """All eigenvalues of a real tridiagonal (upper Hessenberg) matrix.

    Methods:
      "francis"  dense double-shift QR (ours), O(N^3);
      "band"     the same sweep in band storage, O(N^2), with the dropped
                 fill-in accounted as backward error;
      "lapack"   LAPACK geev;
      "auto"     band first, falling back to dense Francis (or LAPACK above
                 FRANCIS_MAX_N) when the dropped mass exceeds BAND_DROP_TOL.

    Balancing first is strongly advised for the class matrices: they are
    similar to symmetric matrices through a badly conditioned diagonal
    scaling, and rounding on the unbalanced form produces spurious
    imaginary parts (and defeats the band path).
    """
    if method not in ("auto", "francis", "band", "lapack"):
        raise ValueError(f"unknown method {method!r}")
    B = balance(M) if balance_first else M
    if method in ("auto", "band"):
        try:
            res = francis_qr_banded(B, tol=tol, maxit=maxit)
            if method == "band" or res.backward_error <= BAND_DROP_TOL:
                return res
        except ConvergenceError:
            if method == "band":
                raise
        method = "francis" if M.N <= FRANCIS_MAX_N else "lapack"
    if method == "francis":
        return francis_qr(B.to_dense(), tol, maxit)
    vals = scipy.linalg.eigvals(B.to_dense(), overwrite_a=True, check_finite=False)
    return EigenResult(sort_spectrum(vals), 0, True, "lapack")


# --- eigenvectors ---------------------------------------------------------


def _shifted_solve(T: SymTridiagonal, lam: float, rhs: np.ndarray) -> np.ndarray:
    ab = np.zeros((3, T.N))
    ab[0, 1:] = T.off
    ab[1, :] = T.diag - lam
    ab[2, :-1] = T.off
    return scipy.linalg.solve_banded((1, 1), ab, rhs, check_finite=False)


def _iterate(T: SymTridiagonal, lam: float, v: np.ndarray, tol: float, maxit: int, against=None):
    norm_t = T.norm()
    mu = lam
    for _ in range(maxit):
        if against is not None:
            v = v - against * (against @ v)
        v = _shifted_solve(T, lam, v)
        size = np.linalg.norm(v)
        if not np.isfinite(size) or size == 0.0:
            raise FloatingPointError("shifted solve overflowed")
        v = v / size
        Tv = T.matvec(v)
        mu = float(v @ Tv)
        if np.linalg.norm(Tv - mu * v) <= tol * norm_t:
            return v, mu, True
    return v, mu, False


def _fix_sign(v: np.ndarray) -> np.ndarray:
    s = v.sum()
    if s == 0:
        s = v[np.argmax(np.abs(v))]
    return v if s >= 0 else -v


def eigenvector_inverse_iteration(
    T: SymTridiagonal,
    lam: float,
    tol: float = 1e-8,
    maxit: int = 8,
    retries: int = 3,
) -> np.ndarray:
    """Unit eigenvector for the eigenvalue of T nearest lam.

    Starts from all ones.  If that start does not converge, or converges to
    a level away from lam (a start orthogonal to the wanted mode by
    symmetry), a ramp orthogonalized against the first result is tried.
    """
    norm_t = T.norm()
    shift = float(lam)
    for attempt in range(retries + 1):
        try:
            v, mu, ok = _iterate(T, shift, np.ones(T.N), tol, maxit)
            if not ok or abs(mu - lam) > tol * norm_t:
                ramp = np.linspace(-1.0, 1.0, T.N) + 0.5
                w, nu, ok2 = _iterate(T, shift, ramp, tol, maxit, against=v)
                if ok2 and (not ok or abs(nu - lam) < abs(mu - lam)):
                    v, mu, ok = w, nu, ok2
            if not ok:
                raise ConvergenceError(0, maxit)
            return _fix_sign(v)
        except (np.linalg.LinAlgError, ZeroDivisionError, FloatingPointError):
            shift = float(lam) + (attempt + 1) * 1e-12 * norm_t
    raise BreakdownError(f"shifted matrix singular at lambda={lam!r} after {retries} retries")

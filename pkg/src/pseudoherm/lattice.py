"""Finite-difference discretization on a truncated line with Dirichlet walls."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, TextIO

import numpy as np

from .opalg import OperatorPolynomial, XFunction, derive_metric, hermitian_equivalent

WEIGHT_EXPONENT_LIMIT = 700.0
SINGULAR_NODE = 1e-12


class SingularityError(ValueError):
    """A negative power of x would be evaluated at (or next to) x = 0."""


class WeightOverflowError(OverflowError):
    """exp(-Q) is not representable in double precision on this grid."""


class WeightDomainError(ValueError):
    """ln(x) evaluated at a non-positive node."""


@dataclass(frozen=True)
class Grid:
    L: float
    N: int

    def __post_init__(self):
        if not self.L > 0:
            raise ValueError(f"half-width must be positive, got {self.L}")
        if int(self.N) != self.N or self.N < 3:
            raise ValueError(f"need at least 3 interior points, got {self.N}")

    @property
    def delta(self) -> float:
        return 2.0 * self.L / (self.N + 1)

    @property
    def nodes(self) -> np.ndarray:
        # written so that the middle node of an odd grid is exactly 0.0
        i = np.arange(1, self.N + 1, dtype=float)
        return self.L * (2.0 * i - (self.N + 1)) / (self.N + 1)


def decay_halfwidth(eps: int, g: float, tol: float = 1e-12) -> float:
    """Half-width at which exp(-g x^{eps+1} / (2(eps+1))) has dropped to tol."""
    m = eps + 1
    if m <= 0 or g <= 0:
        raise ValueError("decay half-width needs eps >= 0 and g > 0")
    return (2.0 * m * math.log(1.0 / tol) / g) ** (1.0 / m)


def _write_csv(columns, out: Optional[TextIO]) -> Optional[str]:
    buf = out if out is not None else io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["diag", "sub", "super"])
    diag, sub, sup = columns
    for i in range(len(diag)):
        row = [repr(float(diag[i]))]
        row.append(repr(float(sub[i])) if i < len(sub) else "")
        row.append(repr(float(sup[i])) if i < len(sup) else "")
        writer.writerow(row)
    return buf.getvalue() if out is None else None


@dataclass(frozen=True, eq=False)
class SymTridiagonal:
    diag: np.ndarray
    off: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "diag", np.asarray(self.diag, dtype=float))
        object.__setattr__(self, "off", np.asarray(self.off, dtype=float))
        if self.off.shape != (max(len(self.diag) - 1, 0),):
            raise ValueError("off-diagonal must have length N-1")

    @property
    def N(self) -> int:
        return len(self.diag)

    def to_dense(self) -> np.ndarray:
        return np.diag(self.diag) + np.diag(self.off, 1) + np.diag(self.off, -1)

    def matvec(self, v: np.ndarray) -> np.ndarray:
        out = self.diag * v
        out[:-1] += self.off * v[1:]
        out[1:] += self.off * v[:-1]
        return out

    def norm(self) -> float:
        """Infinity norm (max absolute row sum)."""
        rows = np.abs(self.diag).copy()
        rows[:-1] += np.abs(self.off)
        rows[1:] += np.abs(self.off)
        return float(rows.max())

    def trace(self) -> float:
        return float(self.diag.sum())

    def to_csv(self, out: Optional[TextIO] = None) -> Optional[str]:
        return _write_csv((self.diag, self.off, self.off), out)


@dataclass(frozen=True, eq=False)
class TridiagonalMatrix:
    """General real tridiagonal: sub[j] is entry (j+1, j), sup[j] is entry (j, j+1)."""

    diag: np.ndarray
    sub: np.ndarray
    sup: np.ndarray

    def __post_init__(self):
        for name in ("diag", "sub", "sup"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=float))
        n = max(len(self.diag) - 1, 0)
        if self.sub.shape != (n,) or self.sup.shape != (n,):
            raise ValueError("sub- and super-diagonals must have length N-1")

    @property
    def N(self) -> int:
        return len(self.diag)

    def to_dense(self) -> np.ndarray:
        return np.diag(self.diag) + np.diag(self.sup, 1) + np.diag(self.sub, -1)

    def matvec(self, v: np.ndarray) -> np.ndarray:
        out = self.diag * v
        out[:-1] += self.sup * v[1:]
        out[1:] += self.sub * v[:-1]
        return out

    def norm(self) -> float:
        rows = np.abs(self.diag).copy()
        rows[:-1] += np.abs(self.sup)
        rows[1:] += np.abs(self.sub)
        return float(rows.max())

    def trace(self) -> float:
        return float(self.diag.sum())

    def to_csv(self, out: Optional[TextIO] = None) -> Optional[str]:
        return _write_csv((self.diag, self.sub, self.sup), out)


def _check_nodes(eps: int, grid: Grid) -> np.ndarray:
    x = grid.nodes
    if eps < 0:
        bad = np.flatnonzero(np.abs(x) < SINGULAR_NODE)
        if bad.size:
            raise SingularityError(f"eps={eps} is singular at node {int(bad[0])} (x={x[bad[0]]:.3g}); use an even N")
    return x


@lru_cache(maxsize=None)
def potential(eps: int, variant: str = "plain") -> XFunction:
    """x-dependent part of the Hermitian image h = p^2 + V(x)."""
    h = hermitian_equivalent(eps, variant)
    rest = h - OperatorPolynomial.p(2)
    return XFunction.from_operator(rest)


def _power(x: np.ndarray, k: int) -> np.ndarray:
    if k == 0:
        return np.ones_like(x)
    return x**k


def evaluate_potential(eps: int, g: float, x: np.ndarray, variant: str = "plain") -> np.ndarray:
    V = np.zeros_like(x)
    for k, c in potential(eps, variant).laurent.items():
        V += c.evaluate(g).real * _power(x, k)
    return V


def discretize_hermitian(eps: int, g: float, grid: Grid, variant: str = "plain") -> SymTridiagonal:
    x = _check_nodes(eps, grid)
    d2 = 1.0 / grid.delta**2
    diag = 2.0 * d2 + evaluate_potential(eps, g, x, variant)
    return SymTridiagonal(diag, np.full(grid.N - 1, -d2))


def discretize_nonhermitian(eps: int, g: float, grid: Grid, variant: str = "plain") -> TridiagonalMatrix:
    """-psi'' + g x^eps psi' with central differences (plus the real shift when symmetrized)."""
    if variant not in ("plain", "symmetrized"):
        raise ValueError(f"unknown variant {variant!r}")
    x = _check_nodes(eps, grid)
    d = grid.delta
    drift = g * _power(x, eps) / (2.0 * d)
    diag = np.full(grid.N, 2.0 / d**2)
    if variant == "symmetrized" and eps != 0:
        diag = diag + 0.5 * g * eps * _power(x, eps - 1)
    sup = -1.0 / d**2 + drift[:-1]
    sub = -1.0 / d**2 - drift[1:]
    return TridiagonalMatrix(diag, sub, sup)


def metric_weights(Q: XFunction, g: float, grid: Grid, half: bool = False) -> np.ndarray:
    """exp(-Q) at the nodes, or exp(-Q/2) when ``half``."""
    x = grid.nodes
    if Q.has_log() and np.any(x <= 0):
        raise WeightDomainError("ln(x) in the metric exponent needs strictly positive nodes")
    if any(k < 0 for k in Q.laurent):
        bad = np.flatnonzero(np.abs(x) < SINGULAR_NODE)
        if bad.size:
            raise SingularityError(f"metric exponent is singular at node {int(bad[0])}")
    q = np.asarray(Q.evaluate(x, g))
    if np.iscomplexobj(q):
        raise ValueError("metric exponent is not real")
    worst = float(np.max(np.abs(q))) if q.size else 0.0
    if worst > WEIGHT_EXPONENT_LIMIT:
        raise WeightOverflowError(f"|Q| reaches {worst:.4g} > {WEIGHT_EXPONENT_LIMIT:g}; weights not representable")
    return np.exp(-0.5 * q) if half else np.exp(-q)


def similar_matrix(H: TridiagonalMatrix, rho: np.ndarray) -> TridiagonalMatrix:
    """D_rho H D_rho^{-1}."""
    ratio = rho[:-1] / rho[1:]
    return TridiagonalMatrix(H.diag, H.sub / ratio, H.sup * ratio)


def default_probe(grid: Grid) -> np.ndarray:
    return np.exp(-((6.0 * grid.nodes / grid.L) ** 2))


def similarity_residual(
    eps: int,
    g: float,
    grid: Grid,
    variant: str = "plain",
    probe: Optional[Callable[[Grid], np.ndarray]] = None,
) -> float:
    """max |(D_rho H D_rho^{-1} - h) f| for a smooth probe f vanishing at the walls.

    The entrywise difference is O(1): the similarity spreads V over the
    off-diagonals instead of the diagonal.  Acting on smooth vectors the
    two operators agree to second order in the spacing.
    """
    H = discretize_nonhermitian(eps, g, grid, variant)
    h = discretize_hermitian(eps, g, grid, variant)
    rho = metric_weights(derive_metric(eps), g, grid, half=True)
    S = similar_matrix(H, rho)
    f = (probe or default_probe)(grid)
    return float(np.max(np.abs(S.matvec(f) - h.matvec(f))))


def similarity_entry_residual(eps: int, g: float, grid: Grid, variant: str = "plain") -> float:
    """Entrywise max norm of D_rho H D_rho^{-1} - h (does not vanish as the spacing shrinks)."""
    H = discretize_nonhermitian(eps, g, grid, variant)
    h = discretize_hermitian(eps, g, grid, variant)
    rho = metric_weights(derive_metric(eps), g, grid, half=True)
    S = similar_matrix(H, rho)
    return float(
        max(
            np.max(np.abs(S.diag - h.diag)),
            np.max(np.abs(S.sub - h.off)),
            np.max(np.abs(S.sup - h.off)),
        )
    )

"""Numerical and exact checks built on the opalg, lattice and eig modules."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, NamedTuple, Optional, Sequence

import numpy as np

from . import eig
from .hparser import format_xfunction
from .lattice import (
    Grid,
    SymTridiagonal,
    decay_halfwidth,
    discretize_hermitian,
    discretize_nonhermitian,
)
from .opalg import (
    Coefficient,
    XFunction,
    build_class_hamiltonian,
    hermitian_equivalent,
    zero_mode_residual,
)

NORMALIZABLE = "normalizable"
NON_NORMALIZABLE = "non-normalizable"
UNDEFINED = "undefined"

DEVIATION_TOL = 1e-3
REALITY_TOL = 1e-8
POSITIVITY_FLOOR = -1e-8
CLOSURE_TOL = 1e-6


class QuadratureError(RuntimeError):
    pass


class NormError(ValueError):
    pass


# --- quadrature ----------------------------------------------------------


def simpson(f: Callable[[np.ndarray], np.ndarray], a: float, b: float, n: int) -> float:
    if n % 2:
        n += 1
    x = np.linspace(a, b, n + 1)
    y = f(x)
    h = (b - a) / n
    return float(h / 3.0 * (y[0] + y[-1] + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-1:2].sum()))


def integrate(f, a: float, b: float, rtol: float = 1e-10, n0: int = 64, max_halvings: int = 22) -> float:
    """Composite Simpson, halving the panel width until the relative change is <= rtol."""
    n = n0
    prev = simpson(f, a, b, n)
    for _ in range(max_halvings):
        n *= 2
        cur = simpson(f, a, b, n)
        if abs(cur - prev) <= rtol * abs(cur):
            return cur
        prev = cur
    raise QuadratureError(f"Simpson rule on [{a}, {b}] did not reach relative tolerance {rtol}")


# --- ground state ----------------------------------------------------------


def ground_state_exponent(eps: int) -> Optional[XFunction]:
    """W with phi0 = C exp(-W): W = g x^{eps+1} / (2 (eps+1)); None for eps = -1."""
    if eps == -1:
        return None
    m = eps + 1
    return XFunction({m: Coefficient.g(1, Fraction(1, 2 * m))})


def printed_exponent(eps: int) -> XFunction:
    """The exponent without the factor 2, kept as a negative control."""
    m = eps + 1
    return XFunction({m: Coefficient.g(1, Fraction(1, m))})


def integrability_classifier(eps: int, g: float) -> str:
    """Square integrability of exp(-W) on the real line.

    eps >= 0: x^{eps+1} is even and coercive only for odd eps.  eps = -1
    (logarithmic metric) and eps = -3 (no closed-form constant) are
    undefined.  Every other negative eps gives exp(-W) -> 1 at infinity and
    an essential blow-up at x = 0, so the state is non-normalizable.
    """
    if not g > 0:
        raise ValueError(f"integrability is classified for g > 0 only, got g={g}")
    if eps in (-1, -3):
        return UNDEFINED
    if eps >= 1 and eps % 2 == 1:
        return NORMALIZABLE
    return NON_NORMALIZABLE


def norm_integral_closed_form(eps: int, g: float) -> float:
    """Integral of exp(-g x^m / m) over the line, m = eps + 1 even.

    Substituting u = (g/m)^{1/m} x gives 2 (m/g)^{1/m} Gamma(1 + 1/m).
    """
    m = eps + 1
    if m <= 0 or m % 2:
        raise ValueError("closed form needs eps + 1 even and positive")
    return 2.0 * (m / g) ** (1.0 / m) * math.gamma(1.0 + 1.0 / m)


def printed_norm_integral(eps: int) -> complex:
    """The printed g-free normalization integral; agrees with ours at g = 1 only."""
    m = eps + 1
    first = complex((-1) ** m / m) ** (-1.0 / m)
    return (first + m ** (1.0 / m)) * math.gamma(1.0 + 1.0 / m)


def norm_integral_quadrature(eps: int, g: float, rtol: float = 1e-10) -> float:
    m = eps + 1

    def f(x):
        return np.exp(-g * x**m / m)

    X = 1.0
    while max(f(np.array([-X, X]))) >= 1e-16:
        X *= 2.0
    return integrate(f, -X, X, rtol)


def normalization_constant(eps: int, g: float, rtol: float = 1e-10) -> float:
    """C such that C exp(-W) has unit norm, by quadrature."""
    if integrability_classifier(eps, g) != NORMALIZABLE:
        raise ValueError(f"eps={eps} has no normalizable ground state")
    return norm_integral_quadrature(eps, g, rtol) ** -0.5


@dataclass
class GroundState:
    epsilon: int
    g: float
    exponent: Optional[XFunction]
    normalization: Optional[float]
    verdict: str
    note: str = ""

    def sample(self, x: np.ndarray) -> np.ndarray:
        if self.exponent is None:
            raise ValueError("ground state is undefined for this eps")
        C = self.normalization if self.normalization is not None else 1.0
        return C * np.exp(-np.asarray(self.exponent.evaluate(x, self.g), dtype=float))

    def to_dict(self) -> dict:
        return {
            "epsilon": self.epsilon,
            "g": self.g,
            "exponent": None if self.exponent is None else format_xfunction(self.exponent),
            "C": self.normalization,
            "verdict": self.verdict,
            "note": self.note,
        }


def ground_state_closed_form(eps: int, g: float) -> GroundState:
    verdict = integrability_classifier(eps, g)
    W = ground_state_exponent(eps)
    if W is None:
        return GroundState(eps, g, None, None, UNDEFINED, "metric exponent is logarithmic; exp(-W) = x^(-g/2) has no closed real-line form")
    C = normalization_constant(eps, g) if verdict == NORMALIZABLE else None
    if eps == -3:
        note = "normalization integral has no real closed form at eps = -3"
    elif verdict == NON_NORMALIZABLE:
        note = "exp(-W) is unbounded or tends to 1 on part of the line"
    else:
        note = ""
    return GroundState(eps, g, W, C, verdict, note)


class ZeroModeReport(NamedTuple):
    h_residual: XFunction
    H_residual: XFunction

    @property
    def exact(self) -> bool:
        return self.h_residual.is_zero() and self.H_residual.is_zero()


def verify_zero_mode(eps: int, exponent: Optional[XFunction] = None, variant: str = "plain") -> ZeroModeReport:
    """Exact check that h exp(-W) = 0 and H 1 = 0, with g kept symbolic."""
    if eps == -1:
        raise ValueError("no closed-form zero mode for eps = -1")
    W = exponent if exponent is not None else ground_state_exponent(eps)
    h = hermitian_equivalent(eps, variant)
    H = build_class_hamiltonian(eps, variant)
    return ZeroModeReport(zero_mode_residual(h, W), zero_mode_residual(H, XFunction()))


class TailDiagnostics(NamedTuple):
    kind: str  # "tail" (decaying) or "running" (log of a growing integral)
    cuts: list
    values: list
    agrees: bool


def tail_diagnostics(eps: int, g: float) -> TailDiagnostics:
    """Quadrature evidence for the classifier verdict (eps >= 0 only).

    Normalizable: tail mass beyond X must at least halve per step.
    Non-normalizable: log of the running integral on the growing side must
    increase without bound (past log(1e6) within the schedule, which
    stops once the exponent passes 400).
    """
    if eps < 0:
        raise ValueError("tail diagnostics cover eps >= 0")
    m = eps + 1
    scale = (m / g) ** (1.0 / m)
    verdict = integrability_classifier(eps, g)
    if verdict == NORMALIZABLE:

        def f(x):
            return np.exp(-g * x**m / m)

        cuts, tails = [], []
        k = 0
        while k < 16:
            X = scale * (1.0 + 0.5 * k)
            if g * X**m / m > 600:
                break
            far = X
            while f(np.array([far]))[0] >= 1e-300:
                far = far + scale
            cuts.append(X)
            tails.append(2.0 * integrate(f, X, far, rtol=1e-8))
            k += 1
        ok = len(tails) >= 3 and all(b <= 0.5 * a for a, b in zip(tails, tails[1:]))
        return TailDiagnostics("tail", cuts, tails, ok)

    # growing side: x -> -inf when m is odd
    cuts, logs = [], []
    for k in range(1, 17):
        X = scale * k
        peak = g * X**m / m
        if peak > 400 and len(cuts) >= 3:
            break

        def shifted(x, peak=peak):
            return np.exp(-g * x**m / m - peak)

        logs.append(peak + math.log(integrate(shifted, -X, 0.0, rtol=1e-8)))
        cuts.append(X)
    ok = all(b > a for a, b in zip(logs, logs[1:])) and logs[-1] > math.log(1e6)
    return TailDiagnostics("running", cuts, logs, ok)


# --- polynomial eigenfunctions --------------------------------------------


class PolyEigenpair(NamedTuple):
    coefficients: tuple  # Fractions, constant term first
    energy: Fraction

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


def _as_fraction(g) -> Fraction:
    return g if isinstance(g, Fraction) else Fraction(g)


def _nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Exact kernel basis by reduced row echelon form."""
    mat = [r[:] for r in rows if any(r)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        lead = mat[r][c]
        mat[r] = [v / lead for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                fac = mat[i][c]
                mat[i] = [a - fac * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -mat[i][fcol]
        basis.append(v)
    return basis


def polynomial_eigenfunctions(eps: int, g, dmax: int) -> list[PolyEigenpair]:
    """Exact polynomial solutions of -psi'' + g x^eps psi' = E psi up to degree dmax.

    The operator sends x^n to -n(n-1) x^{n-2} + g n x^{n+eps-1}.  Comparing
    top-degree coefficients shows any eigenvalue is a diagonal entry of
    that action (g n when eps = 1, else 0); each candidate's kernel is then
    computed over the rationals on the full rectangular action matrix.
    """
    if not 0 <= dmax <= 64:
        raise ValueError("dmax must lie in 0..64")
    gq = _as_fraction(g)
    lo = min(0, eps - 1)
    hi = dmax + max(0, eps - 1)
    nrows = hi - lo + 1
    action = [[Fraction(0)] * (dmax + 1) for _ in range(nrows)]
    for n in range(dmax + 1):
        if n >= 2:
            action[n - 2 - lo][n] += -n * (n - 1)
        if n >= 1 and gq:
            action[n + eps - 1 - lo][n] += gq * n
    candidates = sorted({action[n - lo][n] for n in range(dmax + 1)})
    out = []
    for E in candidates:
        shifted = [row[:] for row in action]
        for n in range(dmax + 1):
            shifted[n - lo][n] -= E
        for vec in _nullspace(shifted, dmax + 1):
            deg = max(i for i, v in enumerate(vec) if v != 0)
            lead = vec[deg]
            out.append(PolyEigenpair(tuple(v / lead for v in vec[: deg + 1]), E))
    out.sort(key=lambda p: (p.energy, p.degree))
    return out


def hermite_recurrence_holds(pairs: Sequence[PolyEigenpair], g) -> bool:
    """Monic P_{n+1} = x P_n - (n/g) P_{n-1}, checked in exact arithmetic."""
    gq = _as_fraction(g)
    polys = [list(p.coefficients) for p in sorted(pairs, key=lambda p: p.degree)]
    if [len(p) - 1 for p in polys] != list(range(len(polys))):
        return False
    for n in range(1, len(polys) - 1):
        expect = [Fraction(0)] + polys[n]
        for i, c in enumerate(polys[n - 1]):
            expect[i] -= Fraction(n) / gq * c
        if expect != polys[n + 1]:
            return False
    if len(polys) > 1 and polys[1] != [Fraction(0), Fraction(1)]:
        return False
    return True


# --- discrete spectra ------------------------------------------------------


class Positivity(NamedTuple):
    kinetic: float
    potential: float
    cross: float
    total: float
    rayleigh: float
    closure: float  # |total - rayleigh| / max(|rayleigh|, kinetic + potential)


def central_difference(phi: np.ndarray, delta: float) -> np.ndarray:
    padded = np.concatenate(([0.0], phi, [0.0]))
    return (padded[2:] - padded[:-2]) / (2.0 * delta)


def positivity_decomposition(
    phi: np.ndarray,
    eps: int,
    g: float,
    grid: Grid,
    variant: str = "plain",
    h: Optional[SymTridiagonal] = None,
) -> Positivity:
    """Split <phi|h phi> into |p phi|^2 + |u phi|^2 + cross, u = g x^eps / 2.

    The cross term is -2 Im<u phi | p phi> = 2 sum u phi D phi with the
    central stencil D, so the three terms add up to |(D + u) phi|^2 and
    the total can never be negative.  For the symmetrized class there is no
    cross term.
    """
    phi = np.asarray(phi, dtype=float)
    nrm = float(np.linalg.norm(phi))
    if abs(nrm - 1.0) > 1e-8:
        raise NormError(f"state is not normalized (norm {nrm!r})")
    x = grid.nodes
    D = central_difference(phi, grid.delta)
    u = 0.5 * g * (x**eps if eps != 0 else np.ones_like(x))
    a = float(D @ D)
    b = float((u * phi) @ (u * phi))
    c = 2.0 * float((u * phi) @ D) if variant == "plain" else 0.0
    if h is None:
        h = discretize_hermitian(eps, g, grid, variant)
    rq = float(phi @ h.matvec(phi))
    total = a + b + c
    scale = max(abs(rq), a + b)
    closure = abs(total - rq) / scale if scale > 0 else 0.0
    return Positivity(a, b, c, total, rq, closure)


@dataclass
class SpectrumReport:
    epsilon: int
    g: float
    N: int
    L: float
    variant: str
    eigenvalues_h: np.ndarray
    eigenvalues_H: np.ndarray
    deviations: np.ndarray
    positivity: list
    max_im: float
    norm_H: float
    converged: bool
    methods: dict = field(default_factory=dict)
    trace_errors: dict = field(default_factory=dict)
    tolerance: float = DEVIATION_TOL

    @property
    def reality_ok(self) -> bool:
        return self.max_im <= REALITY_TOL * self.norm_H

    @property
    def equivalence_ok(self) -> bool:
        return bool(np.all(self.deviations <= self.tolerance))

    @property
    def positivity_ok(self) -> bool:
        return all(p.total >= POSITIVITY_FLOOR for p in self.positivity) and bool(
            np.all(self.eigenvalues_h >= POSITIVITY_FLOOR)
        )

    @property
    def verdict(self) -> str:
        return "pass" if (self.converged and self.reality_ok and self.equivalence_ok) else "fail"

    def to_dict(self) -> dict:
        return {
            "epsilon": self.epsilon,
            "g": self.g,
            "N": self.N,
            "L": self.L,
            "variant": self.variant,
            "eigenvalues_h": [float(v) for v in self.eigenvalues_h],
            "eigenvalues_H": [[float(v.real), float(v.imag)] for v in self.eigenvalues_H],
            "deviations": [float(v) for v in self.deviations],
            "positivity": [
                {
                    "kinetic": p.kinetic,
                    "potential": p.potential,
                    "cross": p.cross,
                    "total": p.total,
                    "rayleigh": p.rayleigh,
                    "closure": p.closure,
                }
                for p in self.positivity
            ],
            "max_im": self.max_im,
            "norm_H": self.norm_H,
            "converged": self.converged,
            "methods": dict(self.methods),
            "trace_errors": dict(self.trace_errors),
            "tolerance": self.tolerance,
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "E_h", "E_H_re", "E_H_im", "deviation", "kinetic", "potential", "cross", "total"])
        for n in range(len(self.eigenvalues_h)):
            p = self.positivity[n] if n < len(self.positivity) else None
            row = [n, self.eigenvalues_h[n], self.eigenvalues_H[n].real, self.eigenvalues_H[n].imag, self.deviations[n]]
            row += [p.kinetic, p.potential, p.cross, p.total] if p else ["", "", "", ""]
            w.writerow([v if isinstance(v, (int, str)) else "%.17g" % v for v in row])
        return buf.getvalue()


def _trace_error(values: np.ndarray, trace: float) -> float:
    return float(abs(np.sum(values).real - trace) / max(abs(trace), 1e-300))


def spectrum_compare(
    eps: int,
    g: float,
    grid: Grid,
    k: int,
    variant: str = "plain",
    H_method: str = "auto",
    tolerance: float = DEVIATION_TOL,
    with_positivity: bool = True,
) -> SpectrumReport:
    """Lowest k levels of the discretized h (QL) and H (Francis QR) side by side."""
    if not 1 <= k <= grid.N // 4:
        raise ValueError(f"k must lie in 1..N/4 = {grid.N // 4}")
    h = discretize_hermitian(eps, g, grid, variant)
    H = discretize_nonhermitian(eps, g, grid, variant)
    rh = eig.eig_sym_tridiag(h)
    rH = eig.eig_hessenberg(H, method=H_method)
    eh = rh.real[:k]
    eH = rH.values[:k]
    positivity = []
    if with_positivity:
        for lam in eh:
            v = eig.eigenvector_inverse_iteration(h, float(lam))
            positivity.append(positivity_decomposition(v, eps, g, grid, variant, h))
    return SpectrumReport(
        epsilon=eps,
        g=g,
        N=grid.N,
        L=grid.L,
        variant=variant,
        eigenvalues_h=eh,
        eigenvalues_H=eH,
        deviations=np.abs(eH - eh),
        positivity=positivity,
        max_im=rH.max_imag,
        norm_H=H.norm(),
        converged=rh.converged and rH.converged,
        methods={"h": rh.method, "H": rH.method},
        trace_errors={"h": _trace_error(rh.values, h.trace()), "H": _trace_error(rH.values, H.trace())},
        tolerance=tolerance,
    )


class E0Convergence(NamedTuple):
    schedule: list
    values: list
    monotone: bool
    final_ok: bool


DEFAULT_E0_SCHEDULE = ((1000, 8.0), (2000, 10.0), (4000, 12.0))


def e0_convergence(eps: int, g: float, schedule=DEFAULT_E0_SCHEDULE, tol: float = 1e-3) -> E0Convergence:
    """Lowest h-eigenvalue on a sequence of (N, L) grids."""
    values = []
    for N, L in schedule:
        T = discretize_hermitian(eps, g, Grid(float(L), int(N)))
        values.append(float(eig.bisection_eigenvalues(T, [0]).real[0]))
    mags = [abs(v) for v in values]
    monotone = all(b <= a for a, b in zip(mags, mags[1:]))
    return E0Convergence([tuple(s) for s in schedule], values, monotone, mags[-1] <= tol)


# --- positivity sweep ------------------------------------------------------


class SweepPoint(NamedTuple):
    epsilon: int
    g: float
    N: int
    L: float
    eigenvalues: list
    positivity: list
    H_N: int
    H_min_real: float
    H_max_im: float
    H_norm: float

    @property
    def min_eigenvalue(self) -> float:
        return min(min(self.eigenvalues), self.H_min_real)

    @property
    def max_closure(self) -> float:
        return max(p.closure for p in self.positivity)

    @property
    def ok(self) -> bool:
        return (
            self.min_eigenvalue >= POSITIVITY_FLOOR
            and all(p.total >= POSITIVITY_FLOOR for p in self.positivity)
            and self.max_closure <= CLOSURE_TOL
            and self.H_max_im <= REALITY_TOL * self.H_norm
        )


def positivity_point(
    eps: int,
    g: float,
    k: int = 5,
    spacing: float = 1.5e-4,
    decay_tol: float = 1e-12,
    H_N: int = 801,
) -> SweepPoint:
    """Positivity and decomposition closure for one (eps, g).

    The half-width follows the ground-state decay; the spacing is fine
    enough that the O(spacing^2) gap between the stencil decomposition and
    the Rayleigh quotient stays below 1e-6.  Levels come from Sturm
    bisection and vectors from inverse iteration, so the large grid costs
    O(N) per level.  The H side is solved in full with Francis QR on a
    coarser grid of the same width.
    """
    L = decay_halfwidth(eps, g, decay_tol)
    N = int(math.ceil(2.0 * L / spacing)) - 1
    grid = Grid(L, N)
    h = discretize_hermitian(eps, g, grid)
    levels = eig.bisection_eigenvalues(h, list(range(k))).real
    pos = [positivity_decomposition(eig.eigenvector_inverse_iteration(h, float(lam)), eps, g, grid, h=h) for lam in levels]
    H = discretize_nonhermitian(eps, g, Grid(L, H_N))
    rH = eig.eig_hessenberg(H, method="francis")
    return SweepPoint(
        eps,
        g,
        N,
        L,
        [float(v) for v in levels],
        pos,
        H_N,
        float(np.min(rH.values.real)),
        rH.max_imag,
        H.norm(),
    )


def positivity_sweep(epsilons=(1, 2, 3), couplings=(0.5, 1.0, 2.0), **kwargs) -> list[SweepPoint]:
    return [positivity_point(e, g, **kwargs) for e in epsilons for g in couplings]

"""Command-line front end: derive, parse, spectrum, groundstate, verify.

Exit codes: 0 pass, 2 derivation failure, 3 verification failure,
4 numeric failure, 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

import numpy as np

from . import analysis, eig
from .hparser import ParseError, format, format_xfunction, parse, term_table
from .lattice import (
    Grid,
    SingularityError,
    SymTridiagonal,
    WeightDomainError,
    WeightOverflowError,
    decay_halfwidth,
    discretize_nonhermitian,
)
from .opalg import (
    CRational,
    Coefficient,
    MetricDerivationError,
    OperatorPolynomial,
    XFunction,
    bch_conjugate_truncated,
    build_class_hamiltonian,
    conjugate_by_exp,
    derive_metric,
    hermitian_closed_form,
    hermitian_equivalent,
    pseudo_hermiticity_residual,
)

EXIT_OK = 0
EXIT_DERIVATION = 2
EXIT_VERIFICATION = 3
EXIT_NUMERIC = 4
EXIT_USAGE = 64

NUMERIC_ERRORS = (
    SingularityError,
    WeightOverflowError,
    WeightDomainError,
    eig.ConvergenceError,
    eig.BreakdownError,
    FloatingPointError,
    np.linalg.LinAlgError,
)


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass(frozen=True)
class RunConfig:
    epsilon: int = 1
    g: float = 1.0
    N: int = 2000
    L: float = 10.0
    k: int = 8
    variant: str = "plain"
    format: str = "text"
    seed: int = 0

    def __post_init__(self):
        if self.N < 3:
            raise UsageError(f"--N must be at least 3, got {self.N}")
        if not self.L > 0:
            raise UsageError(f"--L must be positive, got {self.L}")
        if self.k < 1:
            raise UsageError(f"--k must be at least 1, got {self.k}")

    @property
    def grid(self) -> Grid:
        return Grid(self.L, self.N)


def _num(v: float) -> str:
    return "%.17g" % v


def _emit_json(obj, out) -> None:
    out.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


# --- derive -----------------------------------------------------------------


def _wrong_metric(Q: XFunction) -> XFunction:
    return Q.scale(Fraction(1, 2))


def cmd_derive(cfg: RunConfig, out, inject_wrong_metric: bool = False) -> int:
    eps, variant = cfg.epsilon, cfg.variant
    try:
        Q = derive_metric(eps)
        if inject_wrong_metric:
            Q = _wrong_metric(Q)
        H = build_class_hamiltonian(eps, variant)
        residual = pseudo_hermiticity_residual(Q, H)
        h = conjugate_by_exp(Q.scale(Fraction(1, 2)), H) if inject_wrong_metric else hermitian_equivalent(eps, variant)
    except MetricDerivationError as err:
        print(f"derivation failed: {err}", file=sys.stderr)
        return EXIT_DERIVATION
    record = {
        "epsilon": eps,
        "variant": variant,
        "Q": format_xfunction(Q),
        "H": format(H),
        "h": format(h),
        "residual": format(residual),
    }
    if cfg.format == "json":
        _emit_json(record, out)
    elif cfg.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["key", "value"])
        for key in ("epsilon", "variant", "Q", "H", "h", "residual"):
            w.writerow([key, record[key]])
    else:
        for key in ("Q", "H", "h", "residual"):
            out.write(f"{key} = {record[key]}\n")
    if not residual.is_zero():
        print("derivation failed: pseudo-Hermiticity residual is not zero", file=sys.stderr)
        return EXIT_DERIVATION
    return EXIT_OK


# --- parse ------------------------------------------------------------------


def cmd_parse(text: str, out) -> int:
    try:
        A = parse(text)
    except ParseError as err:
        raise UsageError(f"parse error at byte {err.position}: {err}") from err
    _emit_json({"canonical": format(A), "terms": term_table(A)}, out)
    return EXIT_OK


# --- spectrum ---------------------------------------------------------------


def cmd_spectrum(cfg: RunConfig, out, tolerance: float = analysis.DEVIATION_TOL) -> int:
    if cfg.k > cfg.N // 4:
        raise UsageError(f"--k must not exceed N/4 = {cfg.N // 4}")
    try:
        rep = analysis.spectrum_compare(cfg.epsilon, cfg.g, cfg.grid, cfg.k, cfg.variant, tolerance=tolerance)
    except NUMERIC_ERRORS as err:
        print(f"numeric failure: {type(err).__name__}: {err}", file=sys.stderr)
        return EXIT_NUMERIC
    if cfg.format == "json":
        out.write(rep.to_json() + "\n")
    elif cfg.format == "csv":
        out.write(rep.to_csv())
    else:
        out.write(f"{'n':>3}  {'E_h':>24}  {'Re E_H':>24}  {'Im E_H':>10}  {'deviation':>24}\n")
        for n in range(len(rep.eigenvalues_h)):
            z = rep.eigenvalues_H[n]
            out.write(f"{n:>3}  {_num(rep.eigenvalues_h[n]):>24}  {_num(z.real):>24}  {_num(z.imag):>10}  {_num(rep.deviations[n]):>24}\n")
        out.write(f"max |Im E_H| = {_num(rep.max_im)} (limit {_num(analysis.REALITY_TOL * rep.norm_H)})\n")
        out.write(f"solvers: h={rep.methods['h']} H={rep.methods['H']}\n")
        out.write(f"verdict: {rep.verdict}\n")
    if not rep.reality_ok:
        _drift_hint(cfg)
    return EXIT_OK if rep.verdict == "pass" else EXIT_VERIFICATION


def _drift_hint(cfg: RunConfig) -> None:
    M = discretize_nonhermitian(cfg.epsilon, cfg.g, cfg.grid, cfg.variant)
    bad = eig.symmetrize_if_possible(M)
    if isinstance(bad, eig.Inapplicable):
        x = cfg.grid.nodes[bad.index]
        print(
            f"hint: at x={x:.4g} the drift outweighs the second difference (sub*super <= 0), "
            "so complex pairs are a lattice artifact; reduce --L or raise --N",
            file=sys.stderr,
        )


# --- groundstate ------------------------------------------------------------


def cmd_groundstate(cfg: RunConfig, out, samples: int = 0) -> int:
    if not cfg.g > 0:
        raise UsageError("groundstate needs --g > 0")
    try:
        gs = analysis.ground_state_closed_form(cfg.epsilon, cfg.g)
    except analysis.QuadratureError as err:
        print(f"numeric failure: {err}", file=sys.stderr)
        return EXIT_NUMERIC
    record = gs.to_dict()
    if cfg.epsilon >= 0:
        tails = analysis.tail_diagnostics(cfg.epsilon, cfg.g)
        record["tail_diagnostics"] = {"kind": tails.kind, "agrees": tails.agrees}
    profile = []
    if samples > 0 and gs.verdict == analysis.NORMALIZABLE:
        x = np.linspace(-cfg.L, cfg.L, samples)
        profile = list(zip(x.tolist(), gs.sample(x).tolist()))
        record["profile"] = [[a, b] for a, b in profile]
    if cfg.format == "json":
        _emit_json(record, out)
    elif cfg.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        if profile:
            w.writerow(["x", "phi0"])
            w.writerows([_num(a), _num(b)] for a, b in profile)
        else:
            w.writerow(["epsilon", "g", "exponent", "C", "verdict"])
            C = "" if gs.normalization is None else _num(gs.normalization)
            w.writerow([gs.epsilon, _num(gs.g), record["exponent"] or "", C, gs.verdict])
    else:
        out.write(f"exponent W = {record['exponent'] if record['exponent'] else 'undefined'}\n")
        out.write(f"verdict: {gs.verdict}\n")
        if gs.normalization is not None:
            out.write(f"C = {_num(gs.normalization)}\n")
        if gs.note:
            out.write(f"note: {gs.note}\n")
        for a, b in profile:
            out.write(f"{_num(a)} {_num(b)}\n")
    return EXIT_OK


# --- verify -----------------------------------------------------------------

ANCHORED_INPUTS = (
    ("p^2 + 1i*g*x*p", 1, "plain"),
    ("p^2 + 1i*g*x^2*p", 2, "plain"),
    ("p^2 + 1/2i*g*{x^3, p}", 3, "symmetrized"),
)
KNOWN_IMAGES = {
    1: "p^2 + 1/4*g^2*x^2 - 1/2*g",
    2: "p^2 + 1/4*g^2*x^4 - g*x",
    3: "p^2 + 1/4*g^2*x^6 - 3/2*g*x^2",
    -1: "p^2 + 1/4*g^2*x^-2 + 1/2*g*x^-2",
}
SPECTRAL_CASES = ((2, 1.0), (3, 1.0), (2, 2.0))


def expected_metric(eps: int) -> XFunction:
    if eps == -1:
        return XFunction.log(Coefficient.g())
    return XFunction.monomial(eps + 1, Coefficient.g(1, Fraction(1, eps + 1)))


def random_operator(rng: random.Random) -> OperatorPolynomial:
    """Random canonical operator: x powers -4..6, p powers 0..3, rational coefficients."""

    def frac():
        return Fraction(rng.randint(-9, 9), rng.randint(1, 6))

    terms = {}
    for _ in range(rng.randint(0, 5)):
        coeff = Coefficient({rng.randint(0, 3): CRational(frac(), frac()) for _ in range(rng.randint(1, 2))})
        terms[(rng.randint(-4, 6), rng.randint(0, 3))] = coeff
    return OperatorPolynomial(terms)


def _check_symbolic(inject: bool) -> dict:
    rows = {}
    for eps in range(-1, 6):
        Q = derive_metric(eps)
        used = _wrong_metric(Q) if inject else Q
        zero = all(pseudo_hermiticity_residual(used, build_class_hamiltonian(eps, v)).is_zero() for v in ("plain", "symmetrized"))
        rows[str(eps)] = {"Q": format_xfunction(used), "matches_closed_form": used == expected_metric(eps), "residual_zero": zero}
    ok = all(r["matches_closed_form"] and r["residual_zero"] for r in rows.values())
    return {"ok": ok, "cases": rows}


def _check_images() -> dict:
    rows = {}
    for eps, text in KNOWN_IMAGES.items():
        rows[str(eps)] = hermitian_equivalent(eps) == parse(text)
    for eps in range(1, 6):
        sym = OperatorPolynomial.p(2) + OperatorPolynomial.x(2 * eps, Coefficient.g(2, Fraction(1, 4)))
        rows[f"{eps}-symmetrized"] = hermitian_equivalent(eps, "symmetrized") == sym
    for eps in range(-1, 6):
        rows[f"{eps}-closed-form"] = hermitian_equivalent(eps) == hermitian_closed_form(eps)
    return {"ok": all(rows.values()), "cases": rows}


def _check_bch() -> dict:
    rows = {}
    for eps in range(-1, 6):
        Q = derive_metric(eps)
        for v in ("plain", "symmetrized"):
            H = build_class_hamiltonian(eps, v)
            res = bch_conjugate_truncated(Q, H, 6)
            rows[f"{eps}-{v}"] = {
                "terminated": res.terminated,
                "order": res.order,
                "agrees": res.operator == conjugate_by_exp(Q, H),
            }
    ok = all(r["terminated"] and r["order"] <= 3 and r["agrees"] for r in rows.values())
    return {"ok": ok, "cases": rows}


def _check_zero_mode() -> dict:
    exact = {str(e): analysis.verify_zero_mode(e).exact for e in range(1, 6)}
    control = {str(e): not analysis.verify_zero_mode(e, analysis.printed_exponent(e)).exact for e in range(1, 6)}
    numeric = {}
    for eps in (1, 3):
        conv = analysis.e0_convergence(eps, 2.0 if eps == 1 else 1.0)
        numeric[str(eps)] = {"E0": conv.values, "monotone": conv.monotone, "final_ok": conv.final_ok}
    ok = all(exact.values()) and all(control.values()) and all(r["final_ok"] for r in numeric.values())
    return {"ok": ok, "exact": exact, "printed_exponent_rejected": control, "e0": numeric}


def _check_parity() -> dict:
    expected = {1: "normalizable", 3: "normalizable", 5: "normalizable", 0: "non-normalizable", 2: "non-normalizable", 4: "non-normalizable", -1: "undefined", -3: "undefined"}
    rows = {}
    for eps, want in sorted(expected.items()):
        got = analysis.integrability_classifier(eps, 1.0)
        row = {"verdict": got, "expected": want}
        if eps >= 0:
            row["tails_agree"] = analysis.tail_diagnostics(eps, 1.0).agrees
        rows[str(eps)] = row
    ok = all(r["verdict"] == r["expected"] and r.get("tails_agree", True) for r in rows.values())
    return {"ok": ok, "cases": rows}


def _check_polynomial() -> dict:
    pairs = analysis.polynomial_eigenfunctions(1, 2, 8)
    energies = [str(p.energy) for p in pairs]
    hermite = analysis.hermite_recurrence_holds(pairs, 2)
    quartic = [p.degree for p in analysis.polynomial_eigenfunctions(2, 1, 12)]
    ok = energies == [str(2 * n) for n in range(9)] and hermite and quartic == [0]
    return {"ok": ok, "harmonic_energies": energies, "hermite_recurrence": hermite, "eps2_degrees": quartic}


def _spectral_row(rep: analysis.SpectrumReport) -> dict:
    return {
        "N": rep.N,
        "L": rep.L,
        "max_deviation": float(np.max(rep.deviations)),
        "max_im": rep.max_im,
        "reality_ok": rep.reality_ok,
        "trace_errors": rep.trace_errors,
        "verdict": rep.verdict,
    }


def _check_spectral(cfg: RunConfig) -> dict:
    rows = {}
    rep = analysis.spectrum_compare(1, 2.0, cfg.grid, min(cfg.k, cfg.N // 4), with_positivity=False)
    row = _spectral_row(rep)
    row["max_level_error"] = float(np.max(np.abs(rep.eigenvalues_h - 2.0 * np.arange(len(rep.eigenvalues_h)))))
    row["levels_ok"] = row["max_level_error"] <= 5e-3
    rows["1,2"] = row
    for eps, g in SPECTRAL_CASES:
        grid = Grid(decay_halfwidth(eps, g), cfg.N)
        rows[f"{eps},{g:g}"] = _spectral_row(analysis.spectrum_compare(eps, g, grid, 5, with_positivity=False))
    ok = all(r["verdict"] == "pass" for r in rows.values()) and rows["1,2"]["levels_ok"]
    return {"ok": ok, "cases": rows}


def _check_positivity() -> dict:
    rows = {}
    for pt in analysis.positivity_sweep():
        rows[f"{pt.epsilon},{pt.g:g}"] = {
            "N": pt.N,
            "min_eigenvalue": pt.min_eigenvalue,
            "max_closure": pt.max_closure,
            "ok": pt.ok,
        }
    return {"ok": all(r["ok"] for r in rows.values()), "cases": rows}


def _check_eigensolver(seed: int, trace_errors: Sequence[float]) -> dict:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(100):
        n = int(rng.integers(2, 201))
        T = SymTridiagonal(rng.normal(size=n), rng.normal(size=n - 1))
        ql = eig.eig_sym_tridiag(T).real
        bi = eig.bisection_eigenvalues(T, range(n)).real
        worst = max(worst, float(np.max(np.abs(ql - bi)) / max(1.0, float(np.max(np.abs(ql))))))
    worst_trace = max(trace_errors) if trace_errors else 0.0
    return {"ok": worst <= 1e-10 and worst_trace <= 1e-10, "max_relative_gap": worst, "max_trace_error": worst_trace}


def _check_parser(seed: int) -> dict:
    rng = random.Random(seed)
    failures = 0
    for _ in range(1000):
        A = random_operator(rng)
        if parse(format(A)) != A:
            failures += 1
    anchored = {text: parse(text) == build_class_hamiltonian(eps, v) for text, eps, v in ANCHORED_INPUTS}
    return {"ok": failures == 0 and all(anchored.values()), "round_trip_failures": failures, "anchored": anchored}


def _guarded(fn: Callable[[], dict]) -> dict:
    try:
        result = fn()
    except Exception as err:  # a crashing check is a failed check
        return {"status": "error", "error": f"{type(err).__name__}: {err}"}
    result["status"] = "pass" if result.pop("ok") else "fail"
    return result


def run_verify(cfg: RunConfig, inject_wrong_metric: bool = False) -> dict:
    checks = {
        "symbolic_metric": _guarded(lambda: _check_symbolic(inject_wrong_metric)),
        "hermitian_images": _guarded(_check_images),
        "bch_termination": _guarded(_check_bch),
        "zero_mode": _guarded(_check_zero_mode),
        "parity": _guarded(_check_parity),
        "polynomial_eigenfunctions": _guarded(_check_polynomial),
        "spectral_equivalence": _guarded(lambda: _check_spectral(cfg)),
        "positivity": _guarded(_check_positivity),
        "parser": _guarded(lambda: _check_parser(cfg.seed)),
    }
    spectral = checks["spectral_equivalence"].get("cases", {})
    traces = [v for row in spectral.values() for v in row["trace_errors"].values()]
    checks["eigensolver_oracles"] = _guarded(lambda: _check_eigensolver(cfg.seed, traces))
    status = "pass" if all(c["status"] == "pass" for c in checks.values()) else "fail"
    return {"config": asdict(cfg), "checks": checks, "status": status}


def cmd_verify(cfg: RunConfig, out, inject_wrong_metric: bool = False) -> int:
    summary = run_verify(cfg, inject_wrong_metric)
    if cfg.format == "text":
        for name in sorted(summary["checks"]):
            out.write(f"{summary['checks'][name]['status'].upper():5} {name}\n")
        out.write(f"overall: {summary['status']}\n")
    else:
        _emit_json(summary, out)
    return EXIT_OK if summary["status"] == "pass" else EXIT_VERIFICATION


# --- entry point ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--epsilon", type=int, default=1, help="exponent of x in the interaction (default 1)")
    common.add_argument("--g", type=float, default=1.0, help="coupling (default 1)")
    common.add_argument("--N", type=int, default=2000, help="interior grid points (default 2000)")
    common.add_argument("--L", type=float, default=10.0, help="box half-width (default 10)")
    common.add_argument("--k", type=int, default=8, help="number of levels (default 8)")
    common.add_argument("--variant", choices=("plain", "symmetrized"), default="plain")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("--inject-wrong-metric", action="store_true", help=argparse.SUPPRESS)

    parser = _ArgumentParser(prog="pseudoherm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)
    sub.add_parser("derive", parents=[common], help="metric exponent and Hermitian image")
    p = sub.add_parser("parse", parents=[common], help="canonical form and term table of an expression")
    p.add_argument("expression")
    p = sub.add_parser("spectrum", parents=[common], help="compare discrete spectra of h and H")
    p.add_argument("--tolerance", type=float, default=analysis.DEVIATION_TOL)
    p = sub.add_parser("groundstate", parents=[common], help="closed-form ground state and its verdict")
    p.add_argument("--samples", type=int, default=0, help="number of profile samples on [-L, L]")
    sub.add_parser("verify", parents=[common], help="run the whole verification suite")
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
        cfg = RunConfig(args.epsilon, args.g, args.N, args.L, args.k, args.variant, args.format, args.seed)
        if args.command == "derive":
            return cmd_derive(cfg, out, args.inject_wrong_metric)
        if args.command == "parse":
            return cmd_parse(args.expression, out)
        if args.command == "spectrum":
            return cmd_spectrum(cfg, out, args.tolerance)
        if args.command == "groundstate":
            if args.samples < 0:
                raise UsageError("--samples must be non-negative")
            return cmd_groundstate(cfg, out, args.samples)
        return cmd_verify(cfg, out, args.inject_wrong_metric)
    except UsageError as err:
        print(err, file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()

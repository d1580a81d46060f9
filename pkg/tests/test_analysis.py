from __future__ import annotations

import json
import math
from fractions import Fraction

import numpy as np
import pytest
import scipy.integrate
import sympy as sp

from pseudoherm.analysis import (
    NON_NORMALIZABLE,
    NORMALIZABLE,
    UNDEFINED,
    NormError,
    e0_convergence,
    ground_state_closed_form,
    ground_state_exponent,
    hermite_recurrence_holds,
    integrability_classifier,
    integrate,
    norm_integral_closed_form,
    norm_integral_quadrature,
    normalization_constant,
    polynomial_eigenfunctions,
    positivity_decomposition,
    positivity_point,
    printed_exponent,
    printed_norm_integral,
    spectrum_compare,
    tail_diagnostics,
    verify_zero_mode,
)
from pseudoherm.eig import eigenvector_inverse_iteration, bisection_eigenvalues
from pseudoherm.lattice import Grid, discretize_hermitian


class TestQuadrature:
    def test_against_scipy(self):
        f = lambda x: np.exp(-(x**4) / 4) * np.cos(x)
        ref, _ = scipy.integrate.quad(f, -6, 6, epsabs=1e-13)
        assert integrate(f, -6, 6) == pytest.approx(ref, rel=1e-10)

    @pytest.mark.parametrize("eps,g", [(1, 1.0), (1, 2.0), (3, 1.0), (3, 0.5), (5, 2.0)])
    def test_norm_integral(self, eps, g):
        assert norm_integral_quadrature(eps, g) == pytest.approx(norm_integral_closed_form(eps, g), rel=1e-9)

    def test_closed_form_by_sympy(self):
        x = sp.symbols("x", real=True)
        exact = sp.integrate(sp.exp(-3 * x**4 / 4), (x, -sp.oo, sp.oo))
        assert float(exact) == pytest.approx(norm_integral_closed_form(3, 3.0), rel=1e-12)

    def test_printed_integral_only_at_unit_coupling(self):
        for eps in (1, 3, 5):
            assert printed_norm_integral(eps).real == pytest.approx(norm_integral_closed_form(eps, 1.0), rel=1e-12)
        assert printed_norm_integral(1).real != pytest.approx(norm_integral_closed_form(1, 2.0), rel=1e-3)


class TestGroundState:
    def test_gaussian_constant(self):
        gs = ground_state_closed_form(1, 2.0)
        assert gs.verdict == NORMALIZABLE
        assert gs.normalization == pytest.approx(math.pi**-0.25, rel=1e-10)
        x = np.linspace(-3, 3, 7)
        assert np.allclose(gs.sample(x), math.pi**-0.25 * np.exp(-(x**2) / 2))

    def test_coupling_scaling(self):
        # C grows like g^{1/(2m)}
        for eps in (1, 3):
            m = eps + 1
            ratio = normalization_constant(eps, 4.0) / normalization_constant(eps, 1.0)
            assert ratio == pytest.approx(4.0 ** (1 / (2 * m)), rel=1e-9)

    def test_non_normalizable(self):
        gs = ground_state_closed_form(2, 1.0)
        assert gs.verdict == NON_NORMALIZABLE and gs.normalization is None
        with pytest.raises(ValueError):
            normalization_constant(2, 1.0)

    @pytest.mark.parametrize("eps", [-1, -3])
    def test_undefined(self, eps):
        gs = ground_state_closed_form(eps, 1.0)
        assert gs.verdict == UNDEFINED and gs.note
        assert json.dumps(gs.to_dict())

    def test_exponent_form(self):
        assert ground_state_exponent(3).evaluate(2.0, 1.0) == pytest.approx(2.0)
        assert ground_state_exponent(1).evaluate(2.0, 2.0) == pytest.approx(2.0)
        assert ground_state_exponent(-1) is None

    @pytest.mark.parametrize("eps,verdict", [(1, NORMALIZABLE), (3, NORMALIZABLE), (5, NORMALIZABLE), (0, NON_NORMALIZABLE), (2, NON_NORMALIZABLE), (4, NON_NORMALIZABLE), (-1, UNDEFINED), (-3, UNDEFINED), (-2, NON_NORMALIZABLE)])
    def test_classifier(self, eps, verdict):
        assert integrability_classifier(eps, 1.0) == verdict

    def test_classifier_needs_positive_coupling(self):
        with pytest.raises(ValueError):
            integrability_classifier(1, 0.0)

    @pytest.mark.parametrize("eps", range(6))
    def test_tail_diagnostics_agree(self, eps):
        d = tail_diagnostics(eps, 1.0)
        assert d.agrees
        assert d.kind == ("tail" if eps % 2 else "running")


class TestZeroMode:
    @pytest.mark.parametrize("eps", [1, 2, 3, 4, 5])
    def test_exact(self, eps):
        assert verify_zero_mode(eps).exact

    @pytest.mark.parametrize("eps", [1, 2, 3])
    def test_printed_exponent_fails(self, eps):
        assert not verify_zero_mode(eps, printed_exponent(eps)).exact

    def test_symmetrized_has_no_constant_zero_mode(self):
        assert not verify_zero_mode(2, variant="symmetrized").exact

    def test_numerical_e0(self):
        res = e0_convergence(1, 2.0, schedule=((500, 8.0), (1000, 10.0)))
        assert res.monotone and res.final_ok


class TestPolynomials:
    def test_harmonic_case(self):
        pairs = polynomial_eigenfunctions(1, 2, 8)
        assert [p.energy for p in pairs] == [2 * n for n in range(9)]
        assert [p.degree for p in pairs] == list(range(9))
        assert hermite_recurrence_holds(pairs, 2)

    def test_hermite_against_sympy(self):
        # g = 2: monic P_n(x) = H_n(x) / 2^n
        x = sp.symbols("x")
        for p in polynomial_eigenfunctions(1, 2, 5):
            expect = sp.Poly(sp.hermite(p.degree, x) / 2**p.degree, x).all_coeffs()[::-1]
            assert [Fraction(int(sp.numer(c)), int(sp.denom(c))) for c in expect] == list(p.coefficients)

    def test_broken_recurrence_detected(self):
        pairs = polynomial_eigenfunctions(1, 2, 4)
        assert not hermite_recurrence_holds(pairs, 3)

    @pytest.mark.parametrize("eps", [0, 2, 3, -2, -3])
    def test_only_constant(self, eps):
        pairs = polynomial_eigenfunctions(eps, 1, 12 if eps == 2 else 6)
        assert [p.degree for p in pairs] == [0]
        assert pairs[0].energy == 0


class TestPositivity:
    def test_rejects_unnormalized(self):
        grid = Grid(5.0, 99)
        with pytest.raises(NormError):
            positivity_decomposition(np.ones(99), 1, 1.0, grid)

    def test_total_is_a_square(self):
        rng = np.random.default_rng(0)
        grid = Grid(4.0, 201)
        for eps in (1, 2, 3):
            phi = rng.normal(size=201)
            phi /= np.linalg.norm(phi)
            p = positivity_decomposition(phi, eps, 1.0, grid)
            assert p.total >= 0.0
            assert p.total == pytest.approx(p.kinetic + p.potential + p.cross)

    def test_closure_on_eigenvector(self):
        grid = Grid(7.5, 20001)
        h = discretize_hermitian(1, 2.0, grid)
        lam = float(bisection_eigenvalues(h, [1]).real[0])
        p = positivity_decomposition(eigenvector_inverse_iteration(h, lam), 1, 2.0, grid, h=h)
        assert p.closure < 1e-5
        assert p.rayleigh == pytest.approx(lam, abs=1e-9)

    def test_sweep_point(self):
        pt = positivity_point(2, 2.0, k=3)
        assert pt.ok and pt.min_eigenvalue > 0.5


class TestSpectrum:
    def test_harmonic_report(self):
        rep = spectrum_compare(1, 2.0, Grid(10.0, 2000), 6)
        assert rep.verdict == "pass"
        assert np.all(np.abs(rep.eigenvalues_h - 2 * np.arange(6)) < 5e-3)
        assert all(p.total >= 0.0 for p in rep.positivity)
        # the discrete ground level sits O(delta^2) below zero at this spacing
        assert -1e-5 < rep.eigenvalues_h[0] < 0.0 and not rep.positivity_ok
        assert max(rep.trace_errors.values()) < 1e-10
        d = json.loads(rep.to_json())
        assert d["verdict"] == "pass" and len(d["eigenvalues_H"]) == 6
        lines = rep.to_csv().strip().split("\n")
        assert len(lines) == 7 and lines[0].startswith("n,E_h")

    def test_zero_coupling_columns_identical(self):
        rep = spectrum_compare(1, 0.0, Grid(10.0, 400), 5, with_positivity=False)
        assert np.all(rep.deviations < 1e-10)

    def test_k_range(self):
        with pytest.raises(ValueError):
            spectrum_compare(1, 1.0, Grid(10.0, 40), 11)

    def test_coarse_grid_fails_tolerance(self):
        rep = spectrum_compare(1, 2.0, Grid(10.0, 200), 8, with_positivity=False)
        assert rep.verdict == "fail"

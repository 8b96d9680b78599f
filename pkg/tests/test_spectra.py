import math
from fractions import Fraction

import numpy as np
import pytest

from core.errors import RootSolverError, UsageError
from modules.ehrhart.closed_forms import Family, closed_form_polynomial
from modules.ehrhart.polynomial import EhrhartPolynomial
from modules.spectra.canonical_roots import angle_fractions, closed_form_roots, imag_parts, root_residuals
from modules.spectra.interlacing import angle_chain_holds, interlace_check, interlace_numeric, interlaces
from modules.spectra.numeric_roots import (
    aberth_ehrlich,
    backward_residual,
    circle_start,
    numeric_roots,
    squarefree_factors,
)
from modules.spectra.verdicts import cl_check, symmetry_check


def test_closed_form_roots_small_dimensions():
    assert [r.value for r in closed_form_roots(1)] == [complex(-0.5, 0.0)]
    assert imag_parts(closed_form_roots(2)) == pytest.approx((0.5, -0.5))
    assert imag_parts(closed_form_roots(3)) == pytest.approx((math.sqrt(3) / 2, 0.0, -math.sqrt(3) / 2))


def test_closed_form_angles():
    assert angle_fractions(3) == [Fraction(1, 3), Fraction(1), Fraction(5, 3)]
    assert angle_fractions(2, Family.A_STAR) == [Fraction(2, 3), Fraction(4, 3)]
    with pytest.raises(UsageError):
        angle_fractions(2, Family.A)
    with pytest.raises(UsageError):
        angle_fractions(0)


@pytest.mark.parametrize("family", [Family.C_STAR, Family.A_STAR])
def test_closed_form_imag_parts_strictly_decrease(family):
    for d in range(1, 201):
        imag = imag_parts(closed_form_roots(d, family))
        assert all(a > b for a, b in zip(imag, imag[1:]))


@pytest.mark.parametrize("d", range(1, 60))
def test_closed_form_conjugate_symmetry(d):
    roots = closed_form_roots(d)
    imag = imag_parts(roots)
    assert imag == tuple(-v for v in reversed(imag))
    assert sum(1 for v in imag if v == 0.0) == d % 2
    assert all(r.real_part == -0.5 for r in roots)
    assert all(0 < r.theta < 2 * math.pi for r in roots)


@pytest.mark.parametrize("family", [Family.C_STAR, Family.A_STAR])
def test_closed_form_residuals(family):
    for d in range(1, 51):
        assert root_residuals(closed_form_roots(d, family)) <= 1e-10


@pytest.mark.parametrize("p, expected", [
    (EhrhartPolynomial((1, 2, 2)), [complex(-0.5, 0.5), complex(-0.5, -0.5)]),
    (EhrhartPolynomial((1, 2)), [complex(-0.5, 0.0)]),
])
def test_numeric_roots_examples(p, expected):
    roots = numeric_roots(p)
    assert len(roots) == len(expected)
    assert all(abs(z - w) <= 1e-10 for z, w in zip(roots, expected))


@pytest.mark.parametrize("method", ["auto", "companion", "aberth"])
@pytest.mark.parametrize("d", range(1, 21))
def test_numeric_roots_match_closed_form(method, d):
    numeric = numeric_roots(closed_form_polynomial(Family.C_STAR, d), method=method)
    closed = closed_form_roots(d)
    assert len(numeric) == d
    assert all(abs(z - r.value) <= 1e-6 for z, r in zip(numeric, closed))


@pytest.mark.parametrize("d", range(1, 21))
def test_c_star_numeric_roots_on_canonical_line(d):
    verdict = cl_check(numeric_roots(closed_form_polynomial(Family.C_STAR, d)), 1e-8)
    assert verdict.holds
    assert verdict.max_deviation < 1e-8


@pytest.mark.parametrize("family", [Family.A, Family.C, Family.A_STAR])
@pytest.mark.parametrize("d", range(1, 13))
def test_other_families_on_canonical_line(family, d):
    roots = numeric_roots(closed_form_polynomial(family, d))
    assert cl_check(roots, 1e-8).holds
    assert symmetry_check(roots)


def test_double_root_of_c2_is_kept_together():
    p = closed_form_polynomial(Family.C, 2)
    assert p == EhrhartPolynomial((1, 4, 4))
    factors = squarefree_factors(p)
    assert [(len(coeffs) - 1, multiplicity) for coeffs, multiplicity in factors] == [(1, 2)]
    assert numeric_roots(p) == [complex(-0.5, 0.0), complex(-0.5, 0.0)]


@pytest.mark.parametrize("d", [8, 10, 12, 14, 18])
def test_c_roots_stay_on_line_beyond_eight(d):
    roots = numeric_roots(closed_form_polynomial(Family.C, d))
    assert len(roots) == d
    assert cl_check(roots, 1e-8).holds


def test_numeric_degree_guard():
    with pytest.raises(UsageError):
        numeric_roots(closed_form_polynomial(Family.C_STAR, 8), max_degree=5)
    with pytest.raises(UsageError):
        numeric_roots(EhrhartPolynomial((3,)))
    with pytest.raises(UsageError):
        numeric_roots(EhrhartPolynomial((1, 2)), method="newton")


def test_residual_failure_is_reported():
    with pytest.raises(RootSolverError):
        numeric_roots(closed_form_polynomial(Family.C_STAR, 6), method="aberth", max_iter=1, residual_tol=1e-15)


def test_aberth_converges_from_circle():
    coeffs = np.array([2.0, 2.0, 1.0])
    roots, converged = aberth_ehrlich(coeffs, circle_start(coeffs))
    assert converged
    assert backward_residual(coeffs, roots) < 1e-14


def test_cl_check_examples():
    assert cl_check([r.value for r in closed_form_roots(7)]).max_deviation == 0.0
    verdict = cl_check([-1, -1], 1e-8)
    assert not verdict.holds
    assert verdict.max_deviation == pytest.approx(0.5)
    assert verdict.describe() == "CL: no, max |Re+1/2| = 5.000e-01"
    with pytest.raises(UsageError):
        cl_check([], 1e-8)
    with pytest.raises(UsageError):
        cl_check([-0.5], 0)


def test_symmetry_check_examples():
    assert symmetry_check([r.value for r in closed_form_roots(5)])
    assert not symmetry_check([-1, -1])
    assert symmetry_check([])
    # mirror pairs off the line are symmetric too
    assert symmetry_check([complex(-0.2, 1), complex(-0.8, 1), complex(-0.2, -1), complex(-0.8, -1)])


def test_interlaces():
    assert interlaces([-1, 0, 1], [-0.5, 0.5])
    assert interlaces([-1, 0, 1], [0, 0.5])
    assert not interlaces([-1, 0, 1], [0, 0.5], strict=True)
    assert not interlaces([-1, 0, 1], [0.5, 2])
    assert not interlaces([0, 1], [0, 1])


def test_interlace_check_small():
    report = interlace_check(1)
    assert report.t_values == pytest.approx((-0.5, 0.5))
    assert report.s_values == (0.0,)
    assert report.verdict and report.strict_verdict and report.angle_chain
    assert report.line_base == complex(-0.5, 0) and report.line_dir == 1j

    report = interlace_check(2)
    assert report.t_values == pytest.approx((-math.sqrt(3) / 2, 0.0, math.sqrt(3) / 2))
    assert report.verdict


@pytest.mark.parametrize("family", [Family.C_STAR, Family.A_STAR])
def test_interlacing_up_to_fifty(family):
    for d in range(1, 50):
        report = interlace_check(d, family)
        assert report.verdict
        assert report.strict_verdict
        assert angle_chain_holds(d, family)


@pytest.mark.parametrize("d", range(1, 10))
def test_numeric_interlacing_matches_closed_form(d):
    report = interlace_numeric(Family.C_STAR, d)
    assert report.on_line
    assert report.verdict
    assert report.t_values == pytest.approx(interlace_check(d).t_values, abs=1e-6)


def test_numeric_roots_reject_coefficients_beyond_double_range():
    with pytest.raises(UsageError):
        numeric_roots(EhrhartPolynomial((10 ** 400, 1)))


@pytest.mark.parametrize("family", [Family.A, Family.C])
@pytest.mark.parametrize("d", range(1, 12))
def test_numeric_interlacing_for_root_polytopes(family, d):
    report = interlace_numeric(family, d)
    assert report.on_line
    assert report.verdict
    assert len(report.t_values) == d + 1


def test_interlaces_tolerates_noise_around_repeated_values():
    t = [-0.707, -1e-9, 1e-9, 0.707]
    s = [-0.354, 2e-9, 0.354]
    assert not interlaces(t, s)
    assert interlaces(t, s, tol=1e-6)
    assert not interlaces(t, s, strict=True, tol=1e-6)

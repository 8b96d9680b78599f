import logging
from typing import List, Sequence, Tuple

import numpy as np
import sympy as sp

from core.config import DEFAULT_MAX_NUMERIC_DEGREE, DEFAULT_RESIDUAL_TOL
from core.errors import RootSolverError, UsageError
from modules.ehrhart.polynomial import EhrhartPolynomial

logger = logging.getLogger(__name__)

METHODS = ("auto", "companion", "aberth")
STEP_TOL = 1e-13


def _horner(coeffs_high: np.ndarray, z: np.ndarray) -> np.ndarray:
    result = np.zeros_like(z)
    for c in coeffs_high:
        result = result * z + c
    return result


def companion_roots(coeffs_high: np.ndarray) -> np.ndarray:
    """Eigenvalues of the companion matrix of a polynomial given highest degree first."""
    degree = len(coeffs_high) - 1
    low = coeffs_high[::-1]
    companion = np.zeros((degree, degree), dtype=np.complex128)
    if degree > 1:
        idx = np.arange(degree - 1)
        companion[idx + 1, idx] = 1.0
    companion[:, -1] = -low[:-1] / low[-1]
    return np.linalg.eigvals(companion)


def circle_start(coeffs_high: np.ndarray) -> np.ndarray:
    """Initial guesses on a circle of Cauchy-bound radius, slightly rotated off the axes."""
    degree = len(coeffs_high) - 1
    radius = 1.0 + np.max(np.abs(coeffs_high[1:] / coeffs_high[0]))
    angles = 2 * np.pi * np.arange(degree) / degree + 0.4
    return radius * np.exp(1j * angles)


def aberth_ehrlich(
    coeffs_high: np.ndarray, start: np.ndarray, max_iter: int = 500, step_tol: float = STEP_TOL
) -> Tuple[np.ndarray, bool]:
    """Simultaneous Aberth-Ehrlich iteration; returns (roots, converged)."""
    degree = len(coeffs_high) - 1
    deriv = coeffs_high[:-1] * np.arange(degree, 0, -1)
    z = np.array(start, dtype=np.complex128)
    for _ in range(max_iter):
        with np.errstate(all="ignore"):
            ratio = _horner(coeffs_high, z) / _horner(deriv, z)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            sigma = np.sum(1.0 / diff, axis=1)
            delta = ratio / (1.0 - ratio * sigma)
        delta = np.where(np.isfinite(delta), delta, 0.0)
        z = z - delta
        if np.all(np.abs(delta) <= step_tol * np.maximum(1.0, np.abs(z))):
            return z, True
    return z, False


def backward_residual(coeffs_high: np.ndarray, roots: np.ndarray) -> float:
    """max |p(z)| / sum |a_i| |z|^i over the roots."""
    values = np.abs(_horner(coeffs_high.astype(np.complex128), roots))
    scale = _horner(np.abs(coeffs_high).astype(np.float64), np.abs(roots))
    relative = np.where(scale > 0, values / np.where(scale > 0, scale, 1.0), values)
    return float(np.max(relative))


def sort_roots(roots: Sequence[complex]) -> List[complex]:
    """Descending imaginary part, ties broken by real part."""
    return sorted((complex(z) for z in roots), key=lambda z: (-z.imag, z.real))


def squarefree_factors(p: EhrhartPolynomial) -> List[Tuple[np.ndarray, int]]:
    """
    Square-free decomposition of p over QQ as (coefficients highest degree first,
    multiplicity) pairs. Every factor has simple roots only.
    """
    k = sp.Symbol("k")
    poly = sp.Poly(
        [sp.Rational(c.numerator, c.denominator) for c in reversed(p.coefficients)], k, domain=sp.QQ
    )
    _, factors = poly.sqf_list()
    result = []
    for factor, multiplicity in factors:
        if factor.degree() < 1:
            continue
        try:
            coeffs_high = np.array([float(c) for c in factor.all_coeffs()], dtype=np.float64)
        except OverflowError:
            coeffs_high = np.array([np.inf])
        if not np.all(np.isfinite(coeffs_high)):
            raise UsageError(f"coefficients of {p.label or 'polynomial'} overflow double precision")
        result.append((coeffs_high, multiplicity))
    return result


def _solve_factor(
    coeffs_high: np.ndarray, method: str, label: str, residual_tol: float, max_iter: int
) -> np.ndarray:
    degree = len(coeffs_high) - 1
    converged = True
    if method == "companion":
        roots = companion_roots(coeffs_high)
    else:
        start = companion_roots(coeffs_high) if method == "auto" else circle_start(coeffs_high)
        roots, converged = aberth_ehrlich(coeffs_high, start, max_iter=max_iter)

    residual = backward_residual(coeffs_high, roots)
    if not np.isfinite(residual) or residual > residual_tol:
        raise RootSolverError(
            f"[ROOTS] {label} factor of degree {degree}: residual {residual:.3e} above {residual_tol:.1e}"
            + ("" if converged else f" after {max_iter} iterations")
        )
    if not converged:
        logger.warning("[ROOTS] %s: iteration cap %d reached, residual %.3e accepted", label, max_iter, residual)
    return roots


def numeric_roots(
    p: EhrhartPolynomial,
    method: str = "auto",
    max_degree: int = DEFAULT_MAX_NUMERIC_DEGREE,
    residual_tol: float = DEFAULT_RESIDUAL_TOL,
    max_iter: int = 500,
) -> List[complex]:
    """
    All complex roots of p in floating point, repeated by multiplicity.
    Each square-free factor is solved on its own, so multiple roots stay together.
    auto: companion eigenvalues polished by Aberth-Ehrlich; companion: eigenvalues
    only; aberth: Aberth-Ehrlich from a Cauchy-bound circle.
    """
    if method not in METHODS:
        raise UsageError(f"unknown root method {method!r}; expected one of {', '.join(METHODS)}")
    degree = p.degree
    if degree < 1:
        raise UsageError(f"root finding needs degree >= 1, got {degree}")
    if degree > max_degree:
        raise UsageError(f"degree {degree} exceeds the floating-point guard {max_degree}")
    try:
        finite = all(np.isfinite(p.to_floats()))
    except OverflowError:
        finite = False
    if not finite:
        raise UsageError(f"coefficients of {p.label or 'polynomial'} overflow double precision")

    label = p.label or "polynomial"
    roots: List[complex] = []
    for coeffs_high, multiplicity in squarefree_factors(p):
        factor_roots = _solve_factor(coeffs_high, method, label, residual_tol, max_iter)
        if multiplicity > 1:
            logger.debug("[ROOTS] %s: %d roots of multiplicity %d", label, len(factor_roots), multiplicity)
        roots.extend(complex(z) for z in factor_roots for _ in range(multiplicity))
    return sort_roots(roots)

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from core.config import DEFAULT_CL_TOL, DEFAULT_MATCH_TOL, DEFAULT_MAX_NUMERIC_DEGREE, DEFAULT_RESIDUAL_TOL
from core.errors import UsageError
from modules.ehrhart.closed_forms import Family, closed_form_polynomial
from modules.spectra.canonical_roots import angle_fractions, closed_form_roots, imag_parts
from modules.spectra.numeric_roots import numeric_roots
from modules.spectra.verdicts import CANONICAL_RE, cl_check


@dataclass(frozen=True)
class InterlacingReport:
    """
    Roots of the degree-(d+1) polynomial are beta + t*gamma, those of the
    degree-d polynomial beta + s*gamma, on the line beta + R*gamma.
    t_values and s_values are ascending.
    """
    d: int
    family: Family
    t_values: Tuple[float, ...]
    s_values: Tuple[float, ...]
    verdict: bool
    strict_verdict: bool
    angle_chain: Optional[bool] = None
    on_line: bool = True
    line_base: complex = complex(CANONICAL_RE, 0.0)
    line_dir: complex = 1j


def interlaces(t: Sequence[float], s: Sequence[float], strict: bool = False, tol: float = 0.0) -> bool:
    """
    t_1 <= s_1 <= t_2 <= ... <= s_n <= t_{n+1} (or < throughout when strict).
    Neighbours closer than tol count as equal.
    """
    if len(t) != len(s) + 1:
        return False
    chain = [t[0]]
    for s_i, t_next in zip(s, t[1:]):
        chain.extend((s_i, t_next))
    if strict:
        return all(b - a > tol for a, b in zip(chain, chain[1:]))
    return all(a - b <= tol for a, b in zip(chain, chain[1:]))


def angle_chain_holds(d: int, family: Family = Family.C_STAR) -> bool:
    """Exact check that the degree-d angles strictly separate the degree-(d+1) angles."""
    upper = angle_fractions(d + 1, family)
    lower = angle_fractions(d, family)
    return interlaces(upper, lower, strict=True)


def interlace_check(d: int, family: Family = Family.C_STAR) -> InterlacingReport:
    """Interlacing of consecutive closed-form root sets (degrees d and d+1)."""
    if d < 1:
        raise UsageError(f"interlacing needs d >= 1, got {d}")
    t = tuple(sorted(imag_parts(closed_form_roots(d + 1, family))))
    s = tuple(sorted(imag_parts(closed_form_roots(d, family))))
    return InterlacingReport(
        d=d,
        family=family,
        t_values=t,
        s_values=s,
        verdict=interlaces(t, s),
        strict_verdict=interlaces(t, s, strict=True),
        angle_chain=angle_chain_holds(d, family),
    )


def interlace_numeric(
    family: Family,
    d: int,
    tol: float = DEFAULT_CL_TOL,
    max_degree: int = DEFAULT_MAX_NUMERIC_DEGREE,
    residual_tol: float = DEFAULT_RESIDUAL_TOL,
    match_tol: float = DEFAULT_MATCH_TOL,
) -> InterlacingReport:
    """
    Interlacing from numeric roots of two consecutive closed-form polynomials.
    The verdict is false when either root set leaves the canonical line.
    Imaginary parts within match_tol of each other are treated as equal.
    """
    if d < 1:
        raise UsageError(f"interlacing needs d >= 1, got {d}")
    upper = numeric_roots(closed_form_polynomial(family, d + 1), max_degree=max_degree, residual_tol=residual_tol)
    lower = numeric_roots(closed_form_polynomial(family, d), max_degree=max_degree, residual_tol=residual_tol)
    on_line = cl_check(upper, tol).holds and cl_check(lower, tol).holds
    t = tuple(sorted(z.imag for z in upper))
    s = tuple(sorted(z.imag for z in lower))
    return InterlacingReport(
        d=d,
        family=family,
        t_values=t,
        s_values=s,
        verdict=on_line and interlaces(t, s, tol=match_tol),
        strict_verdict=on_line and interlaces(t, s, strict=True, tol=match_tol),
        on_line=on_line,
    )

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from core.errors import UsageError
from modules.ehrhart.closed_forms import Family


@dataclass(frozen=True)
class CanonicalRoot:
    """
    Root -1/2 + imag_part*i of a closed-form Ehrhart polynomial, generated by the
    unit r = e^{i*theta} through z = r / (1 - r).
    """
    d: int
    k_index: int
    theta: float
    imag_part: float
    r: complex
    family: Family = Family.C_STAR
    real_part: float = -0.5

    @property
    def value(self) -> complex:
        return complex(self.real_part, self.imag_part)


def angle_fractions(d: int, family: Family = Family.C_STAR) -> List[Fraction]:
    """theta / pi for each root, increasing in the root index."""
    if d < 1:
        raise UsageError(f"closed-form roots need d >= 1, got {d}")
    if family is Family.C_STAR:
        # ((z+1)/z)^d = -1
        return [Fraction(2 * j - 1, d) for j in range(1, d + 1)]
    if family is Family.A_STAR:
        # ((z+1)/z)^(d+1) = 1, z finite
        return [Fraction(2 * j, d + 1) for j in range(1, d + 1)]
    raise UsageError(f"no closed-form roots for family {family.value}")


def _imag_from_angle(theta: float) -> float:
    return math.sin(theta) / (2 * (1 - math.cos(theta)))


def closed_form_roots(d: int, family: Family = Family.C_STAR) -> List[CanonicalRoot]:
    """All d roots, sorted by descending imaginary part (increasing angle)."""
    fractions = angle_fractions(d, family)
    n = len(fractions)
    imag: List[float] = [0.0] * n
    for idx, frac in enumerate(fractions):
        if frac < 1:
            imag[idx] = _imag_from_angle(float(frac) * math.pi)
    # angles pair up as theta and 2*pi - theta; mirror so conjugates are exact
    for idx, frac in enumerate(fractions):
        if frac > 1:
            imag[idx] = -imag[n - 1 - idx]

    roots = []
    for idx, frac in enumerate(fractions):
        theta = float(frac) * math.pi
        roots.append(CanonicalRoot(
            d=d,
            k_index=idx + 1,
            theta=theta,
            imag_part=imag[idx],
            r=complex(math.cos(theta), math.sin(theta)),
            family=family,
        ))
    return roots


def root_residuals(roots: Sequence[CanonicalRoot]) -> float:
    """
    Largest relative residual of the defining identity:
    (z+1)^d + z^d for C*, (z+1)^(d+1) - z^(d+1) for A*.
    """
    worst = 0.0
    for root in roots:
        z = root.value
        if root.family is Family.C_STAR:
            n, sign = root.d, 1
        else:
            n, sign = root.d + 1, -1
        scale = abs(z + 1) ** n + abs(z) ** n
        worst = max(worst, abs((z + 1) ** n + sign * z ** n) / scale)
    return worst


def imag_parts(roots: Sequence[CanonicalRoot]) -> Tuple[float, ...]:
    return tuple(root.imag_part for root in roots)

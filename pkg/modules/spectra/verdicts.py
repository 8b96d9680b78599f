from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from core.config import DEFAULT_CL_TOL, DEFAULT_MATCH_TOL
from core.errors import UsageError

CANONICAL_RE = -0.5


@dataclass(frozen=True)
class CLVerdict:
    holds: bool
    max_deviation: float

    def describe(self) -> str:
        return f"CL: {'yes' if self.holds else 'no'}, max |Re+1/2| = {self.max_deviation:.3e}"


def cl_check(roots: Sequence[complex], tol: float = DEFAULT_CL_TOL) -> CLVerdict:
    """Every root within tol of the canonical line Re(z) = -1/2."""
    if tol <= 0:
        raise UsageError(f"tolerance must be positive, got {tol}")
    if len(roots) == 0:
        raise UsageError("cl_check needs at least one root")
    deviation = max(abs(complex(z).real - CANONICAL_RE) for z in roots)
    return CLVerdict(deviation <= tol, deviation)


def _mirror(z: complex) -> complex:
    return -1 - complex(z).conjugate()


def _imag_order(z: complex):
    return z.imag, z.real


def symmetry_check(roots: Sequence[complex], tol: float = DEFAULT_MATCH_TOL) -> bool:
    """
    The root multiset is invariant under z -> -1 - conj(z).
    Greedy pairing of imag-sorted lists first, optimal assignment when that fails.
    """
    if tol <= 0:
        raise UsageError(f"tolerance must be positive, got {tol}")
    values = [complex(z) for z in roots]
    if not values:
        return True
    original = sorted(values, key=_imag_order)
    mirrored = sorted((_mirror(z) for z in values), key=_imag_order)
    if all(abs(a - b) <= tol for a, b in zip(original, mirrored)):
        return True

    a = np.array(values)
    b = np.array([_mirror(z) for z in values])
    cost = np.abs(a[:, None] - b[None, :])
    rows, cols = linear_sum_assignment(cost)
    return bool(np.max(cost[rows, cols]) <= tol)

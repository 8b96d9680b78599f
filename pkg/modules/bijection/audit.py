from dataclasses import dataclass
from typing import List, Sequence, Set, Tuple

from core.config import DEFAULT_BUDGET
from core.errors import UsageError
from modules.bijection.boundary_bijection import a_star, alpha_candidates, prefix_extremes, shell_alpha
from modules.polytope.h_polytope import interval_sum
from modules.polytope.lattice_enum import enumerate_points, shell_points


@dataclass(frozen=True)
class AuditReport:
    d: int
    k: int
    shell_prefixes: int
    interior_prefixes: int
    ambiguous_alpha: int
    coincident_candidates: int
    broken_sign_chains: int
    spread_violations: int

    @property
    def ok(self) -> bool:
        return not (self.ambiguous_alpha or self.coincident_candidates or self.broken_sign_chains or self.spread_violations)


def tight_pairs(x: Sequence[int], k: int) -> List[Tuple[int, int, int]]:
    """Every (i, j, sign) with a_i + ... + a_j = sign * k."""
    n = len(x)
    pairs = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            s = interval_sum(x, i, j)
            if abs(s) == k:
                pairs.append((i, j, 1 if s > 0 else -1))
    return pairs


def shell_alpha_values(x: Sequence[int], k: int) -> Set[int]:
    """Last coordinates produced by each tight pair; a singleton when the lift is well defined."""
    return {shell_alpha(x, k, i, j, sign) for i, j, sign in tight_pairs(x, k)}


def sign_chain_holds(x: Sequence[int], i0: int, j0: int, sign: int) -> bool:
    """
    For a tight pair with sum sign*k: partial sums ending just before i0 have
    the opposite sign, prefixes of [i0, j0] keep the sign, sums starting right
    after j0 have the opposite sign (zero allowed throughout).
    """
    n = len(x)
    if sign not in (1, -1):
        raise UsageError(f"sign must be +1 or -1, got {sign}")
    before = all(sign * interval_sum(x, l, i0 - 1) <= 0 for l in range(1, i0))
    inside = all(sign * interval_sum(x, i0, l) >= 0 for l in range(i0, j0 + 1))
    after = all(sign * interval_sum(x, j0 + 1, l) <= 0 for l in range(j0 + 1, n + 1))
    return before and inside and after


def audit_bijection(d: int, k: int, budget: int = DEFAULT_BUDGET) -> AuditReport:
    """Exhaustive check of the lemmas the boundary maps rely on, for one (d, k)."""
    if d < 1 or k < 1:
        raise UsageError(f"audit needs d >= 1 and k >= 1, got d={d} k={k}")
    prefix_polytope = a_star(d - 1)

    shells = 0
    ambiguous = 0
    broken = 0
    for x in shell_points(prefix_polytope, k, budget):
        shells += 1
        if len(shell_alpha_values(x, k)) != 1:
            ambiguous += 1
        if not all(sign_chain_holds(x, i, j, sign) for i, j, sign in tight_pairs(x, k)):
            broken += 1

    interiors = 0
    coincident = 0
    spread = 0
    for x in enumerate_points(prefix_polytope, k - 1, budget):
        interiors += 1
        first, second = alpha_candidates(x, k)
        if first == second:
            coincident += 1
        p, q = prefix_extremes(x)
        if p - q > k - 1:
            spread += 1

    return AuditReport(d, k, shells, interiors, ambiguous, coincident, broken, spread)

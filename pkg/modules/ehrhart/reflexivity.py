import logging
from dataclasses import dataclass
from typing import Optional

from core.config import DEFAULT_BUDGET
from core.errors import UsageError
from modules.ehrhart.polynomial import EhrhartPolynomial
from modules.polytope.h_polytope import HPolytope, PolytopeLabel
from modules.polytope.lattice_enum import count, count_points

logger = logging.getLogger(__name__)

REFLEXIVE_LABELS = (PolytopeLabel.A_STAR, PolytopeLabel.C_STAR)


@dataclass(frozen=True)
class ReflexivityVerdict:
    holds: bool
    counterexample: Optional[int] = None
    detail: str = ""


def reflexivity_check(P: HPolytope, k_max: int, budget: int = DEFAULT_BUDGET) -> ReflexivityVerdict:
    """
    Lattice reflexivity test: for every 1 <= k <= k_max the shell kP \\ (k-1)P
    must consist exactly of the points with a tight inequality.
    """
    if P.label not in REFLEXIVE_LABELS:
        raise UsageError(f"reflexivity check accepts only A*/C* polytopes, got {P}")
    if k_max < 1:
        raise UsageError(f"k_max must be positive, got {k_max}")

    previous = count_points(P, 0, budget)
    for k in range(1, k_max + 1):
        current = count(P, k, budget)
        if current.total - previous != current.boundary:
            detail = f"{P} k={k}: |kP|-|(k-1)P| = {current.total - previous}, |k∂P| = {current.boundary}"
            logger.warning("[REFLEXIVE] %s", detail)
            return ReflexivityVerdict(False, k, detail)
        previous = current.total
    return ReflexivityVerdict(True, None, f"{P} shells match for k <= {k_max}")


def canonical_symmetry_check(p: EhrhartPolynomial) -> bool:
    """p(k) == (-1)^d p(-k-1), compared coefficient by coefficient."""
    sign = -1 if p.dim % 2 else 1
    return p == sign * p.reflect()

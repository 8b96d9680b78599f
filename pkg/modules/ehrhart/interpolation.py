from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from core.config import DEFAULT_BUDGET
from core.errors import UsageError
from modules.ehrhart.polynomial import EhrhartPolynomial
from modules.polytope.h_polytope import HPolytope
from modules.polytope.lattice_enum import count_points


def interpolate(nodes: Sequence[Tuple[int, int]], d: int, label: str = "interpolated") -> EhrhartPolynomial:
    """Lagrange interpolation through exactly d+1 distinct nodes (k, value), exact over Q."""
    if len(nodes) != d + 1:
        raise UsageError(f"degree {d} needs {d + 1} nodes, got {len(nodes)}")
    xs = [x for x, _ in nodes]
    if len(set(xs)) != len(xs):
        raise UsageError(f"interpolation nodes must be distinct, got {xs}")

    result = EhrhartPolynomial.constant(0)
    for i, (xi, yi) in enumerate(nodes):
        basis = EhrhartPolynomial.constant(Fraction(yi))
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = basis * EhrhartPolynomial.linear(Fraction(1, xi - xj), Fraction(-xj, xi - xj))
        result = result + basis
    return result.with_label(label)


def counts_polynomial(
    P: HPolytope, ks: Optional[Iterable[int]] = None, budget: int = DEFAULT_BUDGET
) -> EhrhartPolynomial:
    """Ehrhart polynomial of P recovered from brute-force counts, nodes k = 0..d by default."""
    ks = list(range(P.dim + 1)) if ks is None else list(ks)
    nodes = [(k, count_points(P, k, budget)) for k in ks]
    return interpolate(nodes, P.dim, label=f"{P} interpolated")

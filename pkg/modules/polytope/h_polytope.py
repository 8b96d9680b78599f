from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from core.errors import UsageError

LatticePoint = Tuple[int, ...]


class PolytopeLabel(Enum):
    A_STAR = "Astar"
    C_STAR = "Cstar"


@dataclass(frozen=True)
class Inequality:
    """One facet-type constraint <normal, x> <= bound of the unit polytope."""
    normal: Tuple[int, ...]
    bound: int

    def __post_init__(self):
        if not any(self.normal):
            raise UsageError("inequality normal must not be the zero vector")

    def evaluate(self, x: Sequence[int]) -> int:
        return sum(a * v for a, v in zip(self.normal, x))


@dataclass(frozen=True)
class HPolytope:
    """
    Polytope P = {x : <a, x> <= b for every inequality (a, b)}.
    The dilation kP is the same system with every bound multiplied by k.
    """
    dim: int
    inequalities: Tuple[Inequality, ...]
    label: Optional[PolytopeLabel] = None

    def __post_init__(self):
        if self.dim < 0:
            raise UsageError(f"dimension must be nonnegative, got {self.dim}")
        for ineq in self.inequalities:
            if len(ineq.normal) != self.dim:
                raise UsageError(
                    f"inequality normal has length {len(ineq.normal)}, polytope dimension is {self.dim}"
                )

    def __str__(self) -> str:
        name = self.label.value if self.label else "H"
        return f"{name}_{self.dim}"


def _interval_normal(d: int, i: int, j: int, weight: int = 1, tail: Optional[int] = None) -> Tuple[int, ...]:
    # 1-based closed range i..j gets `weight`; coordinate `tail` (if any) gets 1
    coords = [0] * d
    for idx in range(i - 1, j):
        coords[idx] = weight
    if tail is not None:
        coords[tail - 1] = 1
    return tuple(coords)


def _both_sides(normal: Tuple[int, ...]) -> List[Inequality]:
    return [Inequality(normal, 1), Inequality(tuple(-a for a in normal), 1)]


def build_A_star(d: int) -> HPolytope:
    """|a_i + ... + a_j| <= 1 for 1 <= i <= j <= d, as d(d+1) one-sided inequalities."""
    if d < 0:
        raise UsageError(f"A*_d needs d >= 0, got {d}")
    inequalities: List[Inequality] = []
    for i in range(1, d + 1):
        for j in range(i, d + 1):
            inequalities.extend(_both_sides(_interval_normal(d, i, j)))
    return HPolytope(d, tuple(inequalities), PolytopeLabel.A_STAR)


def build_C_star(d: int) -> HPolytope:
    """
    Three families, each split into two one-sided inequalities:
      |a_i| <= 1                         (1 <= i <= d)
      |a_i + ... + a_j| <= 1             (1 <= i < j <= d-1)
      |2(a_i + ... + a_{d-1}) + a_d| <= 1  (1 <= i <= d-1)
    """
    if d < 1:
        raise UsageError(f"C*_d needs d >= 1, got {d}")
    inequalities: List[Inequality] = []
    for i in range(1, d + 1):
        inequalities.extend(_both_sides(_interval_normal(d, i, i)))
    for i in range(1, d):
        for j in range(i + 1, d):
            inequalities.extend(_both_sides(_interval_normal(d, i, j)))
    for i in range(1, d):
        inequalities.extend(_both_sides(_interval_normal(d, i, d - 1, weight=2, tail=d)))
    return HPolytope(d, tuple(inequalities), PolytopeLabel.C_STAR)


def build(label: PolytopeLabel, d: int) -> HPolytope:
    if label is PolytopeLabel.A_STAR:
        return build_A_star(d)
    if label is PolytopeLabel.C_STAR:
        return build_C_star(d)
    raise UsageError(f"no constructor for {label}")


def _check_point(P: HPolytope, x: Sequence[int]):
    if len(x) != P.dim:
        raise UsageError(f"point {tuple(x)} has length {len(x)}, polytope {P} has dimension {P.dim}")


def contains(P: HPolytope, k: int, x: Sequence[int]) -> bool:
    _check_point(P, x)
    if k < 0:
        raise UsageError(f"dilation factor must be nonnegative, got {k}")
    return all(ineq.evaluate(x) <= k * ineq.bound for ineq in P.inequalities)


def on_boundary(P: HPolytope, k: int, x: Sequence[int]) -> bool:
    """True iff x lies in kP and makes at least one inequality tight."""
    _check_point(P, x)
    if k < 1:
        raise UsageError(f"boundary is defined for k >= 1, got {k}")
    tight = False
    for ineq in P.inequalities:
        value = ineq.evaluate(x)
        limit = k * ineq.bound
        if value > limit:
            return False
        if value == limit:
            tight = True
    return tight


def interval_sum(x: Sequence[int], i: int, j: int) -> int:
    """a_i + ... + a_j with 1-based inclusive indices; 0 when i > j."""
    if i < 1 or j > len(x):
        raise UsageError(f"interval [{i}, {j}] out of range for a point of length {len(x)}")
    if i > j:
        return 0
    return sum(x[i - 1:j])


def bounding_box(P: HPolytope, k: int) -> List[Tuple[int, int]]:
    """Per-coordinate [lo, hi] read off the single-coordinate inequalities +-a_i <= b."""
    upper: List[Optional[int]] = [None] * P.dim
    lower: List[Optional[int]] = [None] * P.dim
    for ineq in P.inequalities:
        support = [idx for idx, a in enumerate(ineq.normal) if a != 0]
        if len(support) != 1:
            continue
        idx = support[0]
        a = ineq.normal[idx]
        if a > 0:
            hi = (k * ineq.bound) // a
            upper[idx] = hi if upper[idx] is None else min(upper[idx], hi)
        else:
            lo = -((k * ineq.bound) // -a)
            lower[idx] = lo if lower[idx] is None else max(lower[idx], lo)
    box = []
    for idx in range(P.dim):
        if upper[idx] is None or lower[idx] is None:
            raise UsageError(f"coordinate {idx + 1} of {P} has no single-coordinate bound")
        box.append((lower[idx], upper[idx]))
    return box

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from core.config import DEFAULT_BUDGET
from core.errors import BijectionError, UsageError
from modules.polytope.h_polytope import (
    HPolytope,
    LatticePoint,
    build_A_star,
    build_C_star,
    contains,
    interval_sum,
    on_boundary,
)
from modules.polytope.lattice_enum import enumerate_points, shell_points

logger = logging.getLogger(__name__)


class Tag(Enum):
    SHELL = "shell"    # k∂A*_{d-1}
    COPY1 = "copy1"    # (k-1)A*_{d-1}, first copy
    COPY2 = "copy2"    # (k-1)A*_{d-1}, second copy


class PrefixKind(Enum):
    SHELL = "shell"
    INTERIOR = "interior"


class CaseId(Enum):
    BOUNDARY_POS = "boundary_pos"
    BOUNDARY_NEG = "boundary_neg"
    INTERIOR_1 = "interior_1"
    INTERIOR_2 = "interior_2"


@dataclass(frozen=True)
class TaggedBoundaryElement:
    point: LatticePoint
    tag: Tag


@dataclass(frozen=True)
class PrefixClassification:
    kind: PrefixKind
    i0: Optional[int] = None
    j0: Optional[int] = None
    sign: Optional[int] = None


@dataclass(frozen=True)
class ReconstructionWitness:
    case_id: CaseId
    alpha_d: int
    i0: Optional[int] = None
    j0: Optional[int] = None
    p: Optional[int] = None
    q: Optional[int] = None

    def describe(self) -> str:
        parts = [f"case={self.case_id.value}"]
        for name in ("i0", "j0", "p", "q"):
            value = getattr(self, name)
            if value is not None:
                parts.append(f"{name}={value}")
        parts.append(f"alpha_d={self.alpha_d}")
        return " ".join(parts)


@dataclass(frozen=True)
class BijectionReport:
    d: int
    k: int
    size_a: int
    size_b: int
    failures: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return self.size_a == self.size_b and not self.failures

    def summary(self) -> str:
        status = "roundtrip OK" if self.ok else f"{len(self.failures)} failures"
        return f"|A|={self.size_a} |B|={self.size_b} {status}"


@lru_cache(maxsize=None)
def a_star(n: int) -> HPolytope:
    return build_A_star(n)


@lru_cache(maxsize=None)
def c_star(d: int) -> HPolytope:
    return build_C_star(d)


def _check_scale(k: int):
    if k < 1:
        raise UsageError(f"the boundary maps need k >= 1, got {k}")


def classify_prefix(x: Sequence[int], k: int) -> PrefixClassification:
    """
    SHELL with the lexicographically first (i0, j0) whose interval sum has
    absolute value k, or INTERIOR when every interval sum is at most k-1.
    """
    _check_scale(k)
    n = len(x)
    if not contains(a_star(n), k, x):
        raise UsageError(f"{tuple(x)} is not in {k}A*_{n}")
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            s = interval_sum(x, i, j)
            if abs(s) == k:
                return PrefixClassification(PrefixKind.SHELL, i, j, 1 if s > 0 else -1)
    return PrefixClassification(PrefixKind.INTERIOR)


def prefix_extremes(x: Sequence[int]) -> Tuple[int, int]:
    """(p, q) = (max, min) of the tail sums a_i + ... + a_n; (0, 0) for the empty prefix."""
    n = len(x)
    if n == 0:
        return 0, 0
    tails = [interval_sum(x, i, n) for i in range(1, n + 1)]
    return max(tails), min(tails)


def alpha_candidates(x: Sequence[int], k: int) -> Tuple[int, int]:
    """The two last coordinates attached to an interior prefix."""
    p, q = prefix_extremes(x)
    first = k if p <= 0 else k - 2 * p
    second = -k - 2 * q if q < 0 else -k
    return first, second


def shell_alpha(x: Sequence[int], k: int, i0: int, j0: int, sign: int) -> int:
    tail = interval_sum(x, j0 + 1, len(x))
    return (-k if sign > 0 else k) - 2 * tail


def lift_g_with_witness(e: TaggedBoundaryElement, d: int, k: int) -> Tuple[LatticePoint, ReconstructionWitness]:
    _check_scale(k)
    point = tuple(e.point)
    if len(point) != d - 1:
        raise UsageError(f"element {point} has length {len(point)}, expected {d - 1}")

    if e.tag is Tag.SHELL:
        if not on_boundary(a_star(d - 1), k, point):
            raise UsageError(f"SHELL element {point} is not on {k}∂A*_{d - 1}")
        cls = classify_prefix(point, k)
        alpha = shell_alpha(point, k, cls.i0, cls.j0, cls.sign)
        case = CaseId.BOUNDARY_POS if cls.sign > 0 else CaseId.BOUNDARY_NEG
        witness = ReconstructionWitness(case, alpha, i0=cls.i0, j0=cls.j0)
    else:
        if not contains(a_star(d - 1), k - 1, point):
            raise UsageError(f"{e.tag.name} element {point} is not in {k - 1}A*_{d - 1}")
        p, q = prefix_extremes(point)
        first, second = alpha_candidates(point, k)
        if e.tag is Tag.COPY1:
            witness = ReconstructionWitness(CaseId.INTERIOR_1, first, p=p, q=q)
        else:
            witness = ReconstructionWitness(CaseId.INTERIOR_2, second, p=p, q=q)

    lifted = point + (witness.alpha_d,)
    if not on_boundary(c_star(d), k, lifted):
        raise BijectionError(f"g{point}[{e.tag.name}] = {lifted} is not on {k}∂C*_{d}")
    return lifted, witness


def lift_g(e: TaggedBoundaryElement, d: int, k: int) -> LatticePoint:
    return lift_g_with_witness(e, d, k)[0]


def project_f_with_witness(x: Sequence[int], d: int, k: int) -> Tuple[TaggedBoundaryElement, ReconstructionWitness]:
    _check_scale(k)
    x = tuple(x)
    if len(x) != d:
        raise UsageError(f"point {x} has length {len(x)}, expected {d}")
    if not on_boundary(c_star(d), k, x):
        raise UsageError(f"{x} is not on {k}∂C*_{d}")

    prefix, alpha = x[:-1], x[-1]
    cls = classify_prefix(prefix, k)
    if cls.kind is PrefixKind.SHELL:
        expected = shell_alpha(prefix, k, cls.i0, cls.j0, cls.sign)
        if alpha != expected:
            raise BijectionError(f"{x}: shell prefix forces alpha_d={expected}, found {alpha}")
        case = CaseId.BOUNDARY_POS if cls.sign > 0 else CaseId.BOUNDARY_NEG
        return TaggedBoundaryElement(prefix, Tag.SHELL), ReconstructionWitness(case, alpha, i0=cls.i0, j0=cls.j0)

    p, q = prefix_extremes(prefix)
    first, second = alpha_candidates(prefix, k)
    if alpha == first:
        return TaggedBoundaryElement(prefix, Tag.COPY1), ReconstructionWitness(CaseId.INTERIOR_1, alpha, p=p, q=q)
    if alpha == second:
        return TaggedBoundaryElement(prefix, Tag.COPY2), ReconstructionWitness(CaseId.INTERIOR_2, alpha, p=p, q=q)
    raise BijectionError(f"{x}: alpha_d={alpha} matches neither candidate {first} nor {second}")


def project_f(x: Sequence[int], d: int, k: int) -> TaggedBoundaryElement:
    return project_f_with_witness(x, d, k)[0]


def codomain(d: int, k: int, budget: int = DEFAULT_BUDGET) -> List[TaggedBoundaryElement]:
    """The multiset k∂A*_{d-1} + (k-1)A*_{d-1} + (k-1)A*_{d-1}, tagged."""
    prefix_polytope = a_star(d - 1)
    elements = [TaggedBoundaryElement(p, Tag.SHELL) for p in shell_points(prefix_polytope, k, budget)]
    interior = list(enumerate_points(prefix_polytope, k - 1, budget))
    elements.extend(TaggedBoundaryElement(p, Tag.COPY1) for p in interior)
    elements.extend(TaggedBoundaryElement(p, Tag.COPY2) for p in interior)
    return elements


def verify_bijection(d: int, k: int, budget: int = DEFAULT_BUDGET) -> BijectionReport:
    """Checks |A| = |B|, g(f(x)) = x on A = k∂C*_d and f(g(e)) = e on B."""
    if d < 1:
        raise UsageError(f"the bijection needs d >= 1, got {d}")
    _check_scale(k)
    domain = list(shell_points(c_star(d), k, budget))
    targets = codomain(d, k, budget)
    failures: List[str] = []

    if len(domain) != len(targets):
        failures.append(f"C*_{d} k={k}: |A|={len(domain)} but |B|={len(targets)}")

    for x in domain:
        try:
            back = lift_g(project_f(x, d, k), d, k)
        except BijectionError as exc:
            failures.append(str(exc))
            continue
        if back != x:
            failures.append(f"C*_{d} k={k}: g(f({x})) = {back}")

    for e in targets:
        try:
            back = project_f(lift_g(e, d, k), d, k)
        except BijectionError as exc:
            failures.append(str(exc))
            continue
        if back != e:
            failures.append(f"C*_{d} k={k}: f(g({e.point}, {e.tag.name})) = ({back.point}, {back.tag.name})")

    for message in failures:
        logger.error("[BIJECTION] %s", message)
    return BijectionReport(d, k, len(domain), len(targets), tuple(failures))

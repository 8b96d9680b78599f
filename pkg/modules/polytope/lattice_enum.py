import asyncio
import itertools
import logging
import math
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Set, Tuple

import numpy as np

from core.config import DEFAULT_BUDGET
from core.errors import BudgetExceededError, UsageError
from modules.polytope.h_polytope import HPolytope, LatticePoint, PolytopeLabel, bounding_box

logger = logging.getLogger(__name__)

Box = List[Tuple[int, int]]

# Largest sub-box materialized at once.
CHUNK_POINTS = 1 << 16
_INT64_SAFE = 1 << 62


@dataclass(frozen=True)
class CountResult:
    total: int
    boundary: int
    dim: int
    scale: int
    label: Optional[PolytopeLabel]


def box_size(box: Sequence[Tuple[int, int]]) -> int:
    return math.prod(max(hi - lo + 1, 0) for lo, hi in box)


def _guarded_box(P: HPolytope, k: int, budget: int) -> Box:
    if k < 0:
        raise UsageError(f"dilation factor must be nonnegative, got {k}")
    box = bounding_box(P, k)
    size = box_size(box)
    if size > budget:
        raise BudgetExceededError(size, budget)
    return box


def _constraints(P: HPolytope, k: int, box: Sequence[Tuple[int, int]]) -> Tuple[np.ndarray, np.ndarray]:
    """Normals as a (m, d) matrix and the dilated bounds; object dtype when int64 could overflow."""
    rows = [ineq.normal for ineq in P.inequalities]
    reach = max((abs(v) for lo, hi in box for v in (lo, hi)), default=0)
    worst_value = max((sum(abs(a) for a in row) for row in rows), default=0) * reach
    worst_limit = abs(k) * max((abs(ineq.bound) for ineq in P.inequalities), default=0)
    dtype = np.int64 if max(worst_value, worst_limit) < _INT64_SAFE else object
    normals = np.array(rows, dtype=dtype).reshape(len(rows), P.dim)
    limits = np.array([k * ineq.bound for ineq in P.inequalities], dtype=dtype)
    return normals, limits


def _box_points(box: Sequence[Tuple[int, int]], dtype) -> np.ndarray:
    if not box:
        return np.zeros((1, 0), dtype=dtype)
    axes = [np.arange(lo, hi + 1, dtype=np.int64) for lo, hi in box]
    grid = np.meshgrid(*axes, indexing="ij")
    return np.stack(grid, axis=-1).reshape(-1, len(box)).astype(dtype)


def _sub_boxes(box: Box) -> Iterator[Box]:
    """Split a box into slabs of at most CHUNK_POINTS points, in lexicographic order."""
    pinned = 0
    while pinned < len(box) and box_size(box[pinned:]) > CHUNK_POINTS:
        pinned += 1
    prefix_ranges = [range(lo, hi + 1) for lo, hi in box[:pinned]]
    for prefix in itertools.product(*prefix_ranges):
        yield [(v, v) for v in prefix] + box[pinned:]


def _values(normals: np.ndarray, points: np.ndarray) -> np.ndarray:
    return points @ normals.T


def _classify(P: HPolytope, k: int, box: Box) -> Iterator[Tuple[np.ndarray, np.ndarray, np.ndarray]]:
    """Yields (points, inside, tight) for each slab of the box."""
    normals, limits = _constraints(P, k, box)
    for sub in _sub_boxes(box):
        points = _box_points(sub, normals.dtype)
        values = _values(normals, points)
        inside = np.all(values <= limits, axis=1)
        tight = np.any(values == limits, axis=1) & inside
        yield points, inside, tight


def enumerate_points(P: HPolytope, k: int, budget: int = DEFAULT_BUDGET) -> Iterator[LatticePoint]:
    """Lattice points of kP in lexicographic order."""
    box = _guarded_box(P, k, budget)
    for points, inside, _ in _classify(P, k, box):
        for row in points[inside]:
            yield tuple(int(v) for v in row)


def shell_points(P: HPolytope, k: int, budget: int = DEFAULT_BUDGET) -> Iterator[LatticePoint]:
    """Lattice points of k∂P (some inequality tight), lexicographic."""
    if k < 1:
        return
    box = _guarded_box(P, k, budget)
    for points, _, tight in _classify(P, k, box):
        for row in points[tight]:
            yield tuple(int(v) for v in row)


def count_in_box(P: HPolytope, k: int, box: Box) -> Tuple[int, int]:
    """(total, boundary) restricted to an arbitrary sub-box of the bounding box."""
    total = 0
    boundary = 0
    for _, inside, tight in _classify(P, k, list(box)):
        total += int(np.count_nonzero(inside))
        boundary += int(np.count_nonzero(tight))
    if k == 0:
        boundary = 0
    return total, boundary


def count(P: HPolytope, k: int, budget: int = DEFAULT_BUDGET) -> CountResult:
    box = _guarded_box(P, k, budget)
    total, boundary = count_in_box(P, k, box)
    logger.debug("[ENUM] %s k=%d: %d points, %d on boundary (box %d)", P, k, total, boundary, box_size(box))
    return CountResult(total, boundary, P.dim, k, P.label)


def count_points(P: HPolytope, k: int, budget: int = DEFAULT_BUDGET) -> int:
    return count(P, k, budget).total


def count_boundary(P: HPolytope, k: int, budget: int = DEFAULT_BUDGET) -> int:
    if k == 0:
        return 0
    return count(P, k, budget).boundary


def partition_box(box: Box, parts: int) -> List[Box]:
    """Disjoint slabs along the first coordinate covering the box."""
    if parts < 1:
        raise UsageError(f"parts must be positive, got {parts}")
    if not box:
        return [box]
    lo, hi = box[0]
    width = hi - lo + 1
    parts = min(parts, width)
    slabs = []
    start = lo
    for idx in range(parts):
        step = width // parts + (1 if idx < width % parts else 0)
        slabs.append([(start, start + step - 1)] + box[1:])
        start += step
    return slabs


async def count_async(P: HPolytope, k: int, parts: int = 4, budget: int = DEFAULT_BUDGET) -> CountResult:
    """Same as count(), with the box split into slabs counted in worker threads."""
    box = _guarded_box(P, k, budget)
    slabs = partition_box(box, parts)
    results = await asyncio.gather(*(asyncio.to_thread(count_in_box, P, k, slab) for slab in slabs))
    total = sum(r[0] for r in results)
    boundary = sum(r[1] for r in results)
    return CountResult(total, boundary, P.dim, k, P.label)


def interior_shell_points(P: HPolytope, k: int, budget: int = DEFAULT_BUDGET) -> List[LatticePoint]:
    """Points of kP \\ (k-1)P with no tight inequality; empty for reflexive P."""
    if k < 1:
        raise UsageError(f"k must be positive, got {k}")
    box = _guarded_box(P, k, budget)
    normals, limits = _constraints(P, k, box)
    previous = np.array([(k - 1) * ineq.bound for ineq in P.inequalities], dtype=normals.dtype)
    found: List[LatticePoint] = []
    for sub in _sub_boxes(box):
        points = _box_points(sub, normals.dtype)
        values = _values(normals, points)
        inside = np.all(values <= limits, axis=1)
        tight = np.any(values == limits, axis=1)
        in_previous = np.all(values <= previous, axis=1)
        for row in points[inside & ~tight & ~in_previous]:
            found.append(tuple(int(v) for v in row))
    return found


def redundant_inequalities(P: HPolytope, k: int = 1, budget: int = DEFAULT_BUDGET) -> Set[int]:
    """
    Indices of inequalities implied by the others at lattice level: no point of
    [-k-1, k+1]^d violates that inequality alone.
    """
    box = [(-k - 1, k + 1)] * P.dim
    size = box_size(box)
    if size > budget:
        raise BudgetExceededError(size, budget)
    normals, limits = _constraints(P, k, box)
    witnessed = np.zeros(len(P.inequalities), dtype=bool)
    for sub in _sub_boxes(box):
        values = _values(normals, _box_points(sub, normals.dtype))
        violated = values > limits
        lonely = violated[violated.sum(axis=1) == 1]
        witnessed |= lonely.any(axis=0)
    return {idx for idx in range(len(P.inequalities)) if not witnessed[idx]}

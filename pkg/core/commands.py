import asyncio
import logging
import time
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Type

from core.config import LabConfig
from core.errors import BijectionError, UsageError, VerificationError
from core.sweep_core import SweepCore, SweepResult
from modules.bijection.boundary_bijection import (
    BijectionReport,
    ReconstructionWitness,
    lift_g_with_witness,
    project_f_with_witness,
    verify_bijection,
)
from modules.ehrhart.closed_forms import Family, boundary_closed_form, closed_form_polynomial, eval_closed_form
from modules.ehrhart.interpolation import counts_polynomial
from modules.polytope.h_polytope import build
from modules.polytope.lattice_enum import count
from modules.report.rows import ReportRow, Source, format_float
from modules.report.writers import FORMATS, render, write_atomic
from modules.spectra.canonical_roots import closed_form_roots
from modules.spectra.interlacing import InterlacingReport, interlace_check, interlace_numeric
from modules.spectra.numeric_roots import numeric_roots
from modules.spectra.verdicts import CLVerdict, cl_check
from modules.sweep.bijection_sweep import BijectionSweepModule
from modules.sweep.count_sweep import CountSweepModule
from modules.sweep.ehrhart_sweep import EhrhartSweepModule
from modules.sweep.spectra_sweep import SpectraSweepModule
from modules.sweep_module_base import SweepModule, SweepSettings

logger = logging.getLogger(__name__)

COUNT_METHODS = ("auto", "formula", "enumerate", "both")
POLY_METHODS = ("formula", "interpolate", "both")
SWEEP_MODULES: Tuple[Type[SweepModule], ...] = (
    CountSweepModule,
    EhrhartSweepModule,
    BijectionSweepModule,
    SpectraSweepModule,
)


def _config(config: Optional[LabConfig]) -> LabConfig:
    return config if config is not None else LabConfig()


def _check_method(method: str, allowed: Sequence[str]):
    if method not in allowed:
        raise UsageError(f"unknown method {method!r}; expected one of {', '.join(allowed)}")


def _require_enumerable(family: Family, what: str):
    if not family.enumerable:
        raise UsageError(f"{what} is only available for Astar and Cstar, not {family.value}")


def cmd_count(family: Family, d: int, k: int, method: str = "auto", config: Optional[LabConfig] = None) -> ReportRow:
    """
    Lattice-point count of k*P. `auto` means `both` for the dual families and
    `formula` for A and C. With two sources any disagreement is fatal.
    """
    config = _config(config)
    _check_method(method, COUNT_METHODS)
    if k < 0:
        raise UsageError(f"--scale must be nonnegative, got {k}")
    if method == "auto":
        method = "both" if family.enumerable else "formula"

    rows: List[ReportRow] = []
    if method in ("formula", "both"):
        rows.append(ReportRow(
            family.value, d, k,
            int(eval_closed_form(family, d, k)),
            int(boundary_closed_form(family, d, k)),
            Source.FORMULA,
        ))
    if method in ("enumerate", "both"):
        _require_enumerable(family, "enumeration")
        result = count(build(family.polytope_label, d), k, config.budget)
        rows.append(ReportRow(family.value, d, k, result.total, result.boundary, Source.ENUMERATION))

    for row in rows:
        print(row.describe())
    if len(rows) == 2 and (rows[0].count, rows[0].boundary) != (rows[1].count, rows[1].boundary):
        raise VerificationError(
            f"{family.value} d={d} k={k}: formula {rows[0].count}/{rows[0].boundary} "
            f"!= enumeration {rows[1].count}/{rows[1].boundary}"
        )
    return rows[0]


def cmd_poly(family: Family, d: int, method: str = "formula", config: Optional[LabConfig] = None) -> List[str]:
    """Ehrhart coefficients, constant term first, as exact rationals."""
    config = _config(config)
    _check_method(method, POLY_METHODS)
    polys = []
    if method in ("formula", "both"):
        polys.append(closed_form_polynomial(family, d))
    if method in ("interpolate", "both"):
        _require_enumerable(family, "interpolation")
        polys.append(counts_polynomial(build(family.polytope_label, d), budget=config.budget))

    if len(polys) == 2 and polys[0] != polys[1]:
        raise VerificationError(
            f"{family.value} d={d}: closed form {polys[0]} != interpolated {polys[1]}"
        )
    coefficients = polys[0].format_coefficients()
    print(", ".join(coefficients))
    return coefficients


def _trace(step: str, witness: ReconstructionWitness):
    print(f"{step}: {witness.describe()}")


def cmd_bijection(
    d: int, k: int, point: Optional[Sequence[int]] = None, config: Optional[LabConfig] = None
) -> Tuple:
    """
    Without a point: full round-trip verification on k∂C*_d.
    With a point: the witnesses of f and of g applied to f's image.
    """
    config = _config(config)
    if point is None:
        started = time.perf_counter()
        report: BijectionReport = verify_bijection(d, k, config.budget)
        logger.info("[BIJECTION] d=%d k=%d verified in %.3fs", d, k, time.perf_counter() - started)
        print(report.summary())
        for failure in report.failures:
            print(f"  {failure}")
        if not report.ok:
            raise VerificationError(f"Cstar d={d} k={k}: {len(report.failures)} round-trip failures")
        return (report,)

    x = tuple(point)
    element, f_witness = project_f_with_witness(x, d, k)
    print(f"f{x} = {element.tag.name} {element.point}")
    _trace("f", f_witness)
    lifted, g_witness = lift_g_with_witness(element, d, k)
    print(f"g({element.tag.name} {element.point}) = {lifted}")
    _trace("g", g_witness)
    if lifted != x:
        raise BijectionError(f"Cstar d={d} k={k}: g(f({x})) = {lifted}")
    return f_witness, g_witness


def cmd_roots(
    family: Family, d: int, closed_form: bool = False, config: Optional[LabConfig] = None
) -> Tuple[List[complex], CLVerdict]:
    """Root table as CSV (re, im, source) followed by the canonical-line verdict."""
    config = _config(config)
    if closed_form:
        roots = [root.value for root in closed_form_roots(d, family)]
        source = "closed_form"
    else:
        roots = numeric_roots(
            closed_form_polynomial(family, d),
            max_degree=config.max_numeric_degree,
            residual_tol=config.residual_tol,
        )
        source = "numeric"

    verdict = cl_check(roots, config.cl_tol)
    print("re,im,source")
    for z in roots:
        print(f"{format_float(z.real)},{format_float(z.imag)},{source}")
    print(verdict.describe())
    if not verdict.holds:
        raise VerificationError(f"{family.value} d={d}: roots leave the canonical line ({verdict.max_deviation:.3e})")
    return roots, verdict


def cmd_interlace(
    max_d: int, family: Family = Family.C_STAR, config: Optional[LabConfig] = None
) -> List[InterlacingReport]:
    """One row per consecutive pair (d, d+1) for d < max_d."""
    config = _config(config)
    if max_d < 2:
        raise UsageError(f"--max-d must be at least 2, got {max_d}")

    reports = []
    for d in range(1, max_d):
        if family in (Family.C_STAR, Family.A_STAR):
            reports.append(interlace_check(d, family))
        else:
            reports.append(interlace_numeric(
                family, d,
                tol=config.cl_tol,
                max_degree=config.max_numeric_degree,
                residual_tol=config.residual_tol,
                match_tol=config.match_tol,
            ))

    print("d,d_next,interlacing,strict")
    for report in reports:
        print(f"{report.d},{report.d + 1},{str(report.verdict).lower()},{str(report.strict_verdict).lower()}")
    failed = [r.d for r in reports if not r.verdict]
    if failed:
        raise VerificationError(f"{family.value}: interlacing fails for d = {', '.join(map(str, failed))}")
    return reports


# Factory binding sweep settings, like the module factories in main.py
def create_sweep_module(module_cls: Type[SweepModule], settings: SweepSettings):
    def factory(event_bus):
        return module_cls(event_bus, settings)
    return factory


def run_sweep(max_d: int, max_k: int, config: Optional[LabConfig] = None) -> SweepResult:
    config = _config(config)
    if max_d < 1 or max_k < 1:
        raise UsageError(f"--max-d and --max-k must be positive, got {max_d} and {max_k}")
    settings = SweepSettings(max_d=max_d, max_k=max_k, config=config)
    core = SweepCore(modules=[create_sweep_module(cls, settings) for cls in SWEEP_MODULES])
    return asyncio.run(core.run())


def cmd_report(
    max_d: int, max_k: int, out_path: Path, fmt: str = "csv", config: Optional[LabConfig] = None
) -> SweepResult:
    """
    Full sweep written to out_path. The file is written even when checks fail;
    the failures are then raised so the exit code is nonzero.
    """
    if fmt not in FORMATS:
        raise UsageError(f"unknown report format {fmt!r}; expected one of {', '.join(FORMATS)}")
    out_path = Path(out_path)
    if not out_path.parent.is_dir():
        raise UsageError(f"output directory {out_path.parent} does not exist")

    result = run_sweep(max_d, max_k, config)
    write_atomic(out_path, render(result.rows, result.verdicts, fmt))
    print(f"{len(result.rows)} count rows, {len(result.verdicts)} verdicts, "
          f"{len(result.failures)} failures -> {out_path}")
    if not result.passed:
        for verdict in result.failures:
            print(f"  {verdict.describe()}")
        raise VerificationError(
            "report cross-checks failed: " + "; ".join(
                f"{v.check} {v.polytope} d={v.d} k={v.k}" for v in result.failures
            )
        )
    return result

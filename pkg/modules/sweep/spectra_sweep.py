from typing import Iterable, List

from modules.ehrhart.closed_forms import Family, closed_form_polynomial
from modules.report.rows import VerdictRow
from modules.spectra.canonical_roots import closed_form_roots, root_residuals
from modules.spectra.interlacing import interlace_check
from modules.spectra.numeric_roots import numeric_roots
from modules.spectra.verdicts import cl_check, symmetry_check
from modules.sweep_module_base import SweepModule, SweepResultItem


class SpectraSweepModule(SweepModule):
    """Root checks per d: closed-form residuals, numeric agreement, CL and symmetry per family, interlacing."""
    name = "spectra"

    def cells(self) -> Iterable[int]:
        return range(1, self.settings.max_d + 1)

    def evaluate(self, d: int) -> List[SweepResultItem]:
        config = self.settings.config
        label = Family.C_STAR.value
        closed = closed_form_roots(d)
        residual = root_residuals(closed)
        items: List[SweepResultItem] = [
            VerdictRow("closed_form_residual", label, d, None, residual <= config.residual_tol, f"{residual:.3e}"),
        ]

        numeric = numeric_roots(
            closed_form_polynomial(Family.C_STAR, d),
            max_degree=config.max_numeric_degree,
            residual_tol=config.residual_tol,
        )
        gap = max(abs(z - root.value) for z, root in zip(numeric, closed))
        items.append(VerdictRow("roots_agree", label, d, None, gap <= config.match_tol, f"{gap:.3e}"))

        for family in Family:
            roots = numeric if family is Family.C_STAR else numeric_roots(
                closed_form_polynomial(family, d),
                max_degree=config.max_numeric_degree,
                residual_tol=config.residual_tol,
            )
            verdict = cl_check(roots, config.cl_tol)
            items.append(VerdictRow("cl_numeric", family.value, d, None, verdict.holds, verdict.describe()))
            items.append(VerdictRow("root_symmetry", family.value, d, None, symmetry_check(roots, config.match_tol)))

        if d < self.settings.max_d:
            report = interlace_check(d)
            items.append(VerdictRow(
                "interlacing", label, d, d + 1, report.verdict,
                f"strict={report.strict_verdict} angle_chain={report.angle_chain}",
            ))
        return items

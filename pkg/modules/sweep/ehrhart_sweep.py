from typing import Iterable, List, Tuple

from modules.ehrhart.closed_forms import Family, closed_form_polynomial
from modules.ehrhart.interpolation import counts_polynomial
from modules.ehrhart.reflexivity import canonical_symmetry_check, reflexivity_check
from modules.polytope.h_polytope import build
from modules.report.rows import VerdictRow
from modules.sweep_module_base import SweepModule, SweepResultItem


class EhrhartSweepModule(SweepModule):
    """Polynomial-level checks per (family, d): symmetry, invariants, interpolation, reflexivity."""
    name = "ehrhart"

    def cells(self) -> Iterable[Tuple[Family, int]]:
        for family in Family:
            for d in range(1, self.settings.max_d + 1):
                yield family, d

    def evaluate(self, cell: Tuple[Family, int]) -> List[SweepResultItem]:
        family, d = cell
        poly = closed_form_polynomial(family, d)
        coefficients = " ".join(poly.format_coefficients())
        problems = poly.invariant_violations()
        items: List[SweepResultItem] = [
            VerdictRow("canonical_symmetry", family.value, d, None, canonical_symmetry_check(poly), coefficients),
            VerdictRow("ehrhart_invariants", family.value, d, None, not problems, "; ".join(problems)),
        ]
        if not family.enumerable:
            return items

        P = build(family.polytope_label, d)
        interpolated = counts_polynomial(P, budget=self.budget)
        items.append(VerdictRow(
            "interpolation", family.value, d, None, interpolated == poly,
            " ".join(interpolated.format_coefficients()),
        ))
        verdict = reflexivity_check(P, self.settings.max_k, self.budget)
        items.append(VerdictRow("reflexivity", family.value, d, self.settings.max_k, verdict.holds, verdict.detail))
        return items

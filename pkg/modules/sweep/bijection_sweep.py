from typing import Iterable, List, Tuple

from modules.bijection.audit import audit_bijection
from modules.bijection.boundary_bijection import verify_bijection
from modules.ehrhart.closed_forms import Family
from modules.report.rows import VerdictRow
from modules.sweep_module_base import SweepModule, SweepResultItem


class BijectionSweepModule(SweepModule):
    """Round trips of the boundary maps and their supporting lemmas, d = 1..max_d, k = 1..max_k."""
    name = "bijection"

    def cells(self) -> Iterable[Tuple[int, int]]:
        for d in range(1, self.settings.max_d + 1):
            for k in range(1, self.settings.max_k + 1):
                yield d, k

    def evaluate(self, cell: Tuple[int, int]) -> List[SweepResultItem]:
        d, k = cell
        label = Family.C_STAR.value
        report = verify_bijection(d, k, self.budget)
        audit = audit_bijection(d, k, self.budget)
        audit_detail = (
            f"shell={audit.shell_prefixes} interior={audit.interior_prefixes} "
            f"ambiguous={audit.ambiguous_alpha} coincident={audit.coincident_candidates} "
            f"sign_chain={audit.broken_sign_chains} spread={audit.spread_violations}"
        )
        return [
            VerdictRow("bijection_roundtrip", label, d, k, report.ok, report.summary()),
            VerdictRow("bijection_audit", label, d, k, audit.ok, audit_detail),
        ]

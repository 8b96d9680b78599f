import asyncio

import pytest

from core.config import LabConfig
from core.commands import create_sweep_module, run_sweep
from core.errors import LabError
from core.sweep_core import SweepCore
from modules.report.rows import ReportRow, Source, VerdictRow
from modules.sweep.bijection_sweep import BijectionSweepModule
from modules.sweep.count_sweep import CountSweepModule
from modules.sweep_module_base import SweepModule, SweepSettings

SETTINGS = SweepSettings(max_d=2, max_k=2, config=LabConfig())


class ReversedCounts(SweepModule):
    name = "reversed"

    def cells(self):
        return [3, 2, 1]

    def evaluate(self, cell):
        return [
            ReportRow("Cstar", cell, 0, 1, 0, Source.FORMULA),
            VerdictRow("fake", "Cstar", cell, None, True),
        ]


class Exploding(SweepModule):
    name = "exploding"

    def cells(self):
        return [1]

    def evaluate(self, cell):
        raise LabError("cell 1 broke")


def test_results_are_sorted_regardless_of_arrival():
    core = SweepCore(modules=[create_sweep_module(ReversedCounts, SETTINGS)])
    result = asyncio.run(core.run())
    assert [row.d for row in result.rows] == [1, 2, 3]
    assert [v.d for v in result.verdicts] == [1, 2, 3]
    assert result.passed


def test_module_error_propagates():
    core = SweepCore(modules=[
        create_sweep_module(Exploding, SETTINGS),
        create_sweep_module(ReversedCounts, SETTINGS),
    ])
    with pytest.raises(LabError, match="cell 1 broke"):
        asyncio.run(core.run())
    assert all(task.done() for task in core.tasks)


def test_count_module_cells():
    module = CountSweepModule(None, SETTINGS)
    cells = list(module.cells())
    assert len(cells) == 4 * 2 * 3
    items = module.evaluate(cells[-1])
    checks = [item.check for item in items if isinstance(item, VerdictRow)]
    assert checks == ["count_match", "reduction_identity"]
    assert all(item.passed for item in items if isinstance(item, VerdictRow))


def test_bijection_module_verdicts():
    items = BijectionSweepModule(None, SETTINGS).evaluate((2, 2))
    assert [v.check for v in items] == ["bijection_roundtrip", "bijection_audit"]
    assert all(v.passed for v in items)


def test_full_sweep_passes():
    result = run_sweep(3, 2, LabConfig())
    assert result.passed, [v.describe() for v in result.failures]
    assert len(result.rows) == 4 * 3 * 3 + 2 * 3 * 3
    checks = {v.check for v in result.verdicts}
    assert {
        "count_match", "reduction_identity", "canonical_symmetry", "ehrhart_invariants", "interpolation",
        "reflexivity", "bijection_roundtrip", "bijection_audit", "closed_form_residual", "roots_agree",
        "cl_numeric", "root_symmetry", "interlacing",
    } <= checks


def test_start_and_stop_toggle_running():
    module = ReversedCounts(None, SETTINGS)
    assert not module.running
    asyncio.run(module.start())
    assert module.running
    asyncio.run(module.stop())
    assert not module.running

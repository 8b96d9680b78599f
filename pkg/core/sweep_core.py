# core/sweep_core.py

import asyncio
import logging
from dataclasses import dataclass, field
from typing import Callable, List, Tuple

from core.event_bus import EventBus
from core.module_base import ModuleBase
from modules.report.rows import ReportRow, VerdictRow

logger = logging.getLogger(__name__)

ModuleFactory = Callable[[EventBus], ModuleBase]


@dataclass(frozen=True)
class SweepResult:
    rows: Tuple[ReportRow, ...] = field(default_factory=tuple)
    verdicts: Tuple[VerdictRow, ...] = field(default_factory=tuple)

    @property
    def failures(self) -> Tuple[VerdictRow, ...]:
        return tuple(v for v in self.verdicts if not v.passed)

    @property
    def passed(self) -> bool:
        return not self.failures


class SweepCore:
    """
    Runs every sweep module concurrently on a shared event bus and assembles
    their rows. Modules finish in any order; the result is sorted, so output
    does not depend on scheduling.
    """

    def __init__(self, modules: List[ModuleFactory]):
        self.event_bus = EventBus()
        self.modules: List[ModuleBase] = [m(self.event_bus) for m in modules]
        self.tasks: List[asyncio.Task] = []
        self.rows: List[ReportRow] = []
        self.verdicts: List[VerdictRow] = []
        self.errors: List[BaseException] = []

    async def start(self):
        logger.info("[SWEEP] starting %d modules", len(self.modules))
        for module in self.modules:
            await module.start()
            self.tasks.append(asyncio.create_task(module.loop()))

    async def stop(self):
        for module in self.modules:
            await module.stop()
        for task in self.tasks:
            task.cancel()
        await asyncio.gather(*self.tasks, return_exceptions=True)

    async def _event_handler_loop(self):
        pending = len(self.modules)
        while pending:
            event = await self.event_bus.listen()
            event_type = event.get("type")
            payload = event.get("payload")

            if event_type == "row":
                self.rows.append(payload)

            elif event_type == "verdict":
                self.verdicts.append(payload)
                if not payload.passed:
                    logger.warning("[SWEEP] %s", payload.describe())

            elif event_type == "module_error":
                self.errors.append(payload["error"])
                # one failed module invalidates the report
                for module in self.modules:
                    module.running = False

            elif event_type == "module_done":
                pending -= 1
                logger.info("[SWEEP] %s done (%d left)", payload["module"], pending)

    async def run(self) -> SweepResult:
        await self.start()
        try:
            await self._event_handler_loop()
        finally:
            await self.stop()
        if self.errors:
            raise self.errors[0]
        logger.info("[SWEEP] %d events, %d rows, %d verdicts", self.event_bus.emitted, len(self.rows), len(self.verdicts))
        return SweepResult(
            rows=tuple(sorted(self.rows, key=ReportRow.sort_key)),
            verdicts=tuple(sorted(self.verdicts, key=VerdictRow.sort_key)),
        )

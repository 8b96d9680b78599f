import asyncio
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Iterable, List, Union

from core.config import LabConfig
from core.event_bus import EventBus
from core.module_base import ModuleBase
from modules.report.rows import ReportRow, VerdictRow

logger = logging.getLogger(__name__)

SweepResultItem = Union[ReportRow, VerdictRow]


@dataclass(frozen=True)
class SweepSettings:
    max_d: int
    max_k: int
    config: LabConfig


class SweepModule(ModuleBase, ABC):
    """
    Base class for report sweep modules.
    A module lists independent cells; each cell is evaluated in a worker thread
    and its rows are emitted as `row` / `verdict` events.
    """

    def __init__(self, event_bus: EventBus, settings: SweepSettings):
        super().__init__(event_bus)
        self.settings = settings

    @property
    def budget(self) -> int:
        return self.settings.config.budget

    @abstractmethod
    def cells(self) -> Iterable[Any]:
        """Independent units of work, in a fixed order."""
        pass

    @abstractmethod
    def evaluate(self, cell: Any) -> List[SweepResultItem]:
        """Compute the rows for one cell. Runs off the event loop."""
        pass

    async def start(self):
        await super().start()
        logger.info("[SWEEP] %s started", self.name)

    async def stop(self):
        await super().stop()
        logger.info("[SWEEP] %s stopped", self.name)

    async def loop(self):
        try:
            for cell in self.cells():
                if not self.running:
                    break
                for item in await asyncio.to_thread(self.evaluate, cell):
                    kind = "row" if isinstance(item, ReportRow) else "verdict"
                    await self.event_bus.emit(kind, item)
        except asyncio.CancelledError:
            raise
        except Exception as exc:
            logger.error("[SWEEP] %s failed: %s", self.name, exc)
            await self.event_bus.emit("module_error", {"module": self.name, "error": exc})
        finally:
            await self.event_bus.emit("module_done", {"module": self.name})

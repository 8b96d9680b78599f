from abc import ABC, abstractmethod
from core.event_bus import EventBus

class ModuleBase(ABC):
    """
    Base class for all sweep modules.
    Every module gets the event bus and implements start/stop/loop;
    `name` identifies it in events and logs.
    """
    name = "module"

    def __init__(self, event_bus: EventBus):
        self.event_bus = event_bus
        self.running = False

    @abstractmethod
    async def start(self):
        """Prepare the module's work."""
        self.running = True

    @abstractmethod
    async def stop(self):
        """Stop producing results."""
        self.running = False

    @abstractmethod
    async def loop(self):
        """Module main loop: emits results, then a `module_done` event."""
        pass

import asyncio
from typing import Any, Dict


class EventBus:
    """Single ordered channel shared by the sweep modules and the core."""

    def __init__(self):
        self.queue: asyncio.Queue[Dict[str, Any]] = asyncio.Queue()
        self.emitted = 0

    async def emit(self, event_type: str, payload: Any = None):
        """Emit an event; listeners receive events in emission order."""
        self.emitted += 1
        await self.queue.put({"type": event_type, "payload": payload})

    async def listen(self) -> Dict[str, Any]:
        """Wait for the next event of any type."""
        return await self.queue.get()

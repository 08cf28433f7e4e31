import threading
from collections import deque


class Frontier:
    """FIFO queue of dedup keys plus the set of keys already claimed for fetching.

    A key moves queued -> visited exactly once, under the lock.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._pending = deque()
        self._queued = set()
        self._visited = set()

    def push(self, key):
        with self._lock:
            if key in self._visited or key in self._queued:
                return False
            self._pending.append(key)
            self._queued.add(key)
            return True

    def pop(self):
        """Claim the oldest pending key, or None when the queue is empty."""
        with self._lock:
            if not self._pending:
                return None
            key = self._pending.popleft()
            self._queued.discard(key)
            self._visited.add(key)
            return key

    def pop_batch(self, limit):
        batch = []
        while len(batch) < limit:
            key = self.pop()
            if key is None:
                break
            batch.append(key)
        return batch

    def is_known(self, key):
        with self._lock:
            return key in self._visited or key in self._queued

    @property
    def claimed(self):
        with self._lock:
            return len(self._visited)

    @property
    def visited(self):
        with self._lock:
            return frozenset(self._visited)

    def __len__(self):
        with self._lock:
            return len(self._pending)

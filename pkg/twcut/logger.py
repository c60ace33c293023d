"""
Logging setup and per-run statistics.
Configures loguru sinks for the command line and collects the counters
reported in the ``stats`` block of every result.
"""

import sys
import threading
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, field
from pathlib import Path
from time import perf_counter
from typing import Iterator, Optional

from loguru import logger

LOG_FORMAT = "<green>{time:HH:mm:ss.SSS}</green> | <level>{level: <7}</level> | {name}:{line} - {message}"


def configure_logging(level: str = "WARNING", log_file: Optional[Path] = None) -> None:
    """
    Install the stderr sink and, optionally, a rotating file sink.

    Args:
        level: Minimum level for the stderr sink
        log_file: Path of a log file receiving DEBUG and above
    """
    logger.remove()
    logger.add(sys.stderr, level=level, format=LOG_FORMAT, colorize=False)
    if log_file is not None:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        logger.add(str(log_file), level="DEBUG", rotation="10 MB", retention=5, encoding="utf-8")


@dataclass
class RunStats:
    """Counters of one solver invocation."""

    reduced_vertices: int = 0
    decomposition_width: int = -1
    dp_states: int = 0
    started: float = field(default_factory=perf_counter)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    @property
    def wall_ms(self) -> float:
        return round((perf_counter() - self.started) * 1000.0, 3)

    # fan_out workers share one collector
    def note_reduced(self, vertices: int) -> None:
        with self._lock:
            self.reduced_vertices = max(self.reduced_vertices, vertices)

    def note_width(self, width: int) -> None:
        with self._lock:
            self.decomposition_width = max(self.decomposition_width, width)

    def note_states(self, count: int) -> None:
        with self._lock:
            self.dp_states += count


_current: ContextVar[Optional[RunStats]] = ContextVar("twcut_run_stats", default=None)


@contextmanager
def collect_stats() -> Iterator[RunStats]:
    """
    Collect statistics of all solver stages run inside the block.

    Yields:
        The RunStats object being filled
    """
    stats = RunStats()
    token = _current.set(stats)
    try:
        yield stats
    finally:
        _current.reset(token)


def current_stats() -> RunStats:
    """
    Get the active statistics collector.

    Returns:
        The collector installed by collect_stats, or a throwaway one
    """
    stats = _current.get()
    return stats if stats is not None else RunStats()

"""
Branch fan-out over a thread pool.
"""

import contextvars
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from loguru import logger

from ..config import get_settings

T = TypeVar("T")
R = TypeVar("R")


def fan_out(task: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> List[R]:
    """
    Run ``task`` on every item and return the results in item order.

    Each task runs in a copy of the caller's context, so statistics
    collectors and settings overrides stay visible inside workers.

    Args:
        task: Function applied to each item
        items: Work items
        threads: Worker count (default Settings.threads; 1 runs inline)

    Returns:
        Results in the order of ``items``
    """
    work = list(items)
    workers = threads if threads is not None else get_settings().threads
    if workers <= 1 or len(work) <= 1:
        return [task(item) for item in work]
    logger.debug("fanning out {} branches over {} threads", len(work), workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(contextvars.copy_context().run, task, item) for item in work]
        return [f.result() for f in futures]

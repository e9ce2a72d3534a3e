"""Order-preserving fan-out over a process pool."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Optional, Sequence, Union


def resolve_threads(value: Union[int, str, None]) -> int:
    """Turn ``--threads`` (an int, ``"auto"`` or None) into a worker count.

    None falls back to ``CSQ_THREADS``, then to 1.
    """
    if value is None:
        value = os.environ.get("CSQ_THREADS", "1")
    if isinstance(value, str):
        if value.strip().lower() == "auto":
            return os.cpu_count() or 1
        value = int(value)
    if value < 1:
        raise ValueError("thread count must be positive")
    return value


def pmap(fn: Callable, args: Sequence[tuple], threads: Optional[int] = 1) -> list:
    """``[fn(*a) for a in args]``, optionally on ``threads`` worker processes.

    Results come back in input order whatever the pool size.
    """
    if not threads or threads <= 1 or len(args) <= 1:
        return [fn(*a) for a in args]
    with ProcessPoolExecutor(max_workers=min(threads, len(args))) as ex:
        return list(ex.map(fn, *zip(*args)))

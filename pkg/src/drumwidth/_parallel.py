"""Order-preserving parallel map controlled by ``DRUMWIDTH_WORKERS``."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable

ENV_VAR = "DRUMWIDTH_WORKERS"


def worker_count() -> int:
    raw = os.environ.get(ENV_VAR)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    return os.cpu_count() or 1


def parallel_map(fn: Callable, items: Iterable, workers: int | None = None) -> list:
    """``list(map(fn, items))``, using processes when more than one worker is allowed.

    ``fn`` must be picklable (a module-level function) for the parallel path.
    """
    items = list(items)
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))

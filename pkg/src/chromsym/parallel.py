"""Order-preserving process-pool map."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor


def pmap(func, items, workers: int = 1) -> list:
    """``[func(x) for x in items]``, optionally spread over worker processes.

    Results come back in input order whatever the worker count, so callers
    can rely on deterministic output.
    """
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [func(x) for x in items]
    chunk = max(1, len(items) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items, chunksize=chunk))

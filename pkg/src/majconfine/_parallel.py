"""Thread-count handling shared by the eigensolver and the validation harness."""

import os
from concurrent.futures import ThreadPoolExecutor

ENV_VAR = "MAJ_CONFINE_THREADS"


def max_workers(requested=None) -> int:
    """Worker count: explicit request, else ``$MAJ_CONFINE_THREADS``, else 1."""
    if requested is None:
        raw = os.environ.get(ENV_VAR, "").strip()
        if not raw:
            return 1
        try:
            requested = int(raw)
        except ValueError:
            raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    if requested < 1:
        raise ValueError("worker count must be >= 1")
    return requested


def ordered_map(fn, items, workers=None) -> list:
    """``list(map(fn, items))``, optionally threaded; output order is fixed."""
    items = list(items)
    workers = max_workers(workers)
    if workers == 1 or len(items) < 2:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(workers, len(items))) as pool:
        return list(pool.map(fn, items))

"""Sweep engine: runs statement grids serially or across worker processes.

Workers share nothing mutable; each process rebuilds the (cheap) Franel and
central-binomial caches on first use.  Summaries are count aggregates and
therefore identical for any worker count, even though per-record output
order may differ.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Callable, Iterable

from . import registry
from .reports import Report


def _chunks(cells: list[int], size: int) -> Iterable[list[int]]:
    for i in range(0, len(cells), size):
        yield cells[i : i + size]


def _empty_counts() -> dict:
    return {"pass": 0, "fail": 0, "skipped": 0}


def run_sweep(
    statement_ids: list[str] | None = None,
    n_range: tuple[int, int] | None = None,
    p_range: tuple[int, int] | None = None,
    workers: int = 1,
    on_report: Callable[[str, Report], None] | None = None,
) -> dict:
    """Run the requested statements over their grids.

    Returns {"statements": {id: {pass, fail, skipped}}, "total": {...}}.
    on_report, when given, receives (statement_id, report) as records
    arrive (order unspecified under workers > 1).
    """
    if workers < 1:
        raise ValueError("workers must be positive")
    ids = registry.statement_ids() if statement_ids is None else list(statement_ids)
    for sid in ids:
        if sid not in registry.STATEMENTS:
            raise KeyError(sid)

    jobs: list[tuple[str, list[int]]] = []
    for sid in ids:
        stmt = registry.STATEMENTS[sid]
        lo, hi = (None, None)
        if stmt.kind == "n" and n_range is not None:
            lo, hi = n_range
        elif stmt.kind == "p" and p_range is not None:
            lo, hi = p_range
        cells = registry.cells_for(stmt, lo, hi)
        if not cells:
            continue
        size = max(1, len(cells) // (workers * 4)) if workers > 1 else len(cells)
        jobs.extend((sid, chunk) for chunk in _chunks(cells, size))

    counts: dict[str, dict] = {sid: _empty_counts() for sid in ids}

    def absorb(sid: str, reports: list[Report]) -> None:
        for r in reports:
            counts[sid][r.verdict] += 1
            if on_report is not None:
                on_report(sid, r)

    if workers == 1:
        for sid, chunk in jobs:
            absorb(sid, registry.run_cells(sid, chunk))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = {
                pool.submit(registry.run_cells, sid, chunk): sid
                for sid, chunk in jobs
            }
            for fut in as_completed(futures):
                absorb(futures[fut], fut.result())

    total = _empty_counts()
    for c in counts.values():
        for key in total:
            total[key] += c[key]
    return {
        "statements": {sid: counts[sid] for sid in sorted(counts)},
        "total": total,
    }

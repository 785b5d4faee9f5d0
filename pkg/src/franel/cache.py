"""On-disk cache for Franel tables.

Format: header line ``franel-cache v1 N=<max-index>`` followed by one
``<n>\\t<decimal f_n>`` record per line, indices contiguous from 0, LF
line endings.  Values are re-validated against the recurrence on load
(first, last, and one pseudo-random middle triple) so a corrupt entry is
caught before it poisons every congruence above it.
"""
from __future__ import annotations

import os
import random
import tempfile

from .combinatorics import FranelTable

HEADER_PREFIX = "franel-cache v1 N="


class CacheError(ValueError):
    """Malformed or corrupt cache file."""


def store_table(path: str, table: FranelTable) -> None:
    """Atomic write: temp file in the same directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".franel-cache-", dir=directory)
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(f"{HEADER_PREFIX}{table.n_max}\n")
            for n, value in enumerate(table.values):
                fh.write(f"{n}\t{value}\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _check_triple(values: list[int], n: int, line_of) -> None:
    """Recurrence step at n (checks values[n-1..n+1])."""
    lhs = (n + 1) * (n + 1) * values[n + 1]
    rhs = (7 * n * n + 7 * n + 2) * values[n] + 8 * n * n * values[n - 1]
    if lhs != rhs:
        raise CacheError(
            f"recurrence violated at index {n + 1} (line {line_of(n + 1)})"
        )


def load_table(path: str) -> FranelTable:
    with open(path, "r") as fh:
        lines = fh.read().splitlines()
    if not lines or not lines[0].startswith(HEADER_PREFIX):
        raise CacheError("missing header")
    try:
        n_max = int(lines[0][len(HEADER_PREFIX):])
    except ValueError:
        raise CacheError("malformed header") from None
    if n_max < 0:
        raise CacheError("malformed header: negative N")

    def line_of(n: int) -> int:
        return n + 2  # header is line 1

    records = lines[1:]
    if len(records) != n_max + 1:
        raise CacheError(
            f"expected {n_max + 1} records, found {len(records)}"
        )
    values: list[int] = []
    for i, line in enumerate(records):
        parts = line.split("\t")
        if len(parts) != 2:
            raise CacheError(f"malformed record (line {i + 2})")
        try:
            idx, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise CacheError(f"non-integer record (line {i + 2})") from None
        if idx != i:
            raise CacheError(f"non-contiguous index {idx} (line {i + 2})")
        values.append(value)

    # seed values, then spot-check triples: first, last, random middle
    if values[0] != 1:
        raise CacheError(f"f_0 must be 1 (line {line_of(0)})")
    if n_max >= 1 and values[1] != 2:
        raise CacheError(f"f_1 must be 2 (line {line_of(1)})")
    if n_max >= 2:
        checks = {1, n_max - 1}
        if n_max >= 4:
            checks.add(random.Random(n_max).randrange(2, n_max - 1))
        for n in sorted(checks):
            _check_triple(values, n, line_of)
    return FranelTable(values=tuple(values), route="recurrence")

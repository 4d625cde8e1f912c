"""Tilings with ``m + 1`` tile lengths, matching MCFs of degree ``m``.

``bounds[j][i]`` caps the stack of length-``(j+1)`` tiles ending on cell
``i``.  The count obeys ``X_n = sum_j bounds[j][n] * X_{n-1-j}`` with
``X_{-1} = 1`` and ``X_k = 0`` below that.
"""
from __future__ import annotations

import operator
from typing import Iterator, Sequence

from ..errors import InstanceTooLarge
from .enumeration import enumeration_budget

__all__ = ["validate_bounds", "count_degree_m", "enumerate_degree_m"]


def validate_bounds(bounds: Sequence[Sequence[int]], n: int | None = None):
    """Normalise ``bounds`` to a tuple of rows and resolve ``n``."""
    rows = tuple(tuple(operator.index(x) for x in row) for row in bounds)
    if len(rows) < 2:
        raise ValueError("need bounds for at least two tile lengths (m >= 1)")
    if n is None:
        n = len(rows[0]) - 1
    if n < 0:
        raise ValueError("board must have at least one cell")
    for j, row in enumerate(rows):
        if len(row) < n + 1:
            raise ValueError(f"bounds row {j} has {len(row)} entries, need {n + 1}")
        if any(x < 0 for x in row[: n + 1]):
            raise ValueError(f"bounds row {j} has a negative entry")
    if any(x < 1 for x in rows[0][: n + 1]):
        raise ValueError("length-1 bounds must be positive")
    return rows, n


def count_degree_m(bounds: Sequence[Sequence[int]], n: int | None = None) -> int:
    """Tilings of cells ``0..n``; ``n`` defaults to the length of the rows."""
    rows, n = validate_bounds(bounds, n)
    m = len(rows) - 1
    history = [0] * m + [1]  # X_{-m-1} .. X_{-1}
    for i in range(n + 1):
        x = sum(rows[j][i] * history[-1 - j] for j in range(m + 1))
        history = history[1:] + [x]
    return history[-1]


def _iter_degree(rows, n) -> Iterator[tuple]:
    def walk(cell):
        if cell > n:
            yield ()
            return
        for length, row in enumerate(rows, start=1):
            end = cell + length - 1
            if end > n:
                break
            for height in range(1, row[end] + 1):
                for rest in walk(end + 1):
                    yield ((length, cell, height),) + rest

    yield from walk(0)


def enumerate_degree_m(
    bounds: Sequence[Sequence[int]], n: int | None = None, budget: int | None = None
) -> list[tuple]:
    """Brute-force list of tilings as ``(length, start, height)`` tuples."""
    rows, n = validate_bounds(bounds, n)
    # product of per-cell option counts bounds the number of tilings
    estimate = 1
    for i in range(n + 1):
        estimate *= 1 + sum(row[i] for row in rows)
    limit = enumeration_budget(budget)
    if estimate > limit:
        # the product is loose; fall back to counting lazily before refusing
        count = 0
        for _ in _iter_degree(rows, n):
            count += 1
            if count > limit:
                raise InstanceTooLarge(
                    f"more than {limit} degree-{len(rows) - 1} tilings", estimate=count, budget=limit
                )
    return list(_iter_degree(rows, n))

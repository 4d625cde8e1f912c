"""Brute-force tiling enumerators used as oracles for the counting formulas.

Nothing here touches the convergent recurrences: tilings are generated by a
depth-first walk over the board, trying at each free cell every square
height, then every domino height, then every bar height.  The output is
therefore sorted by :meth:`Tiling.key` and free of duplicates.

A cheap pre-pass bounds the number of candidates and refuses anything above
the budget (default ``10**7``, overridable with ``MCF_ENUM_BUDGET``).
"""
from __future__ import annotations

import os
from typing import Callable, Iterator

from ..errors import InstanceTooLarge
from .conditions import HeightConditions, Placement, Tiling, check_mixed, inadmissibility

__all__ = [
    "DEFAULT_BUDGET",
    "enumeration_budget",
    "iter_linear",
    "enumerate_plain",
    "enumerate_prefixed",
    "enumerate_shifted",
    "enumerate_circular",
    "enumerate_mixed",
    "enumerate_mixed_candidates",
]

DEFAULT_BUDGET = 10**7

Bound = Callable[[int], int]


def enumeration_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("MCF_ENUM_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"MCF_ENUM_BUDGET must be an integer, got {env!r}") from None
    return DEFAULT_BUDGET


def iter_linear(lo: int, hi: int, square: Bound, domino: Bound, bar: Bound) -> Iterator[tuple]:
    """Yield placement tuples covering cells ``lo..hi`` in canonical order.

    Each bound function receives the cell a tile ends on; values <= 0 forbid
    the tile.
    """
    if hi < lo:
        yield ()
        return
    options = (("square", 0, square), ("domino", 1, domino), ("bar", 2, bar))

    def walk(cell):
        if cell > hi:
            yield ()
            return
        for kind, extra, bound in options:
            end = cell + extra
            if end > hi:
                break
            for height in range(1, bound(end) + 1):
                head = Placement(kind, cell, height)
                for rest in walk(end + 1):
                    yield (head,) + rest

    yield from walk(lo)


def _size_estimate(lo, hi, square, domino, bar):
    # counts every candidate exactly; only used to refuse big instances
    ways = {lo - 1: 1, lo - 2: 0, lo - 3: 0}
    for end in range(lo, hi + 1):
        total = max(square(end), 0) * ways[end - 1]
        if end - 1 >= lo:
            total += max(domino(end), 0) * ways[end - 2]
        if end - 2 >= lo:
            total += max(bar(end), 0) * ways[end - 3]
        ways[end] = total
    return ways[hi]


def _guard(estimate, budget):
    limit = enumeration_budget(budget)
    if estimate > limit:
        raise InstanceTooLarge(
            f"about {estimate} tilings to list, budget is {limit} (set MCF_ENUM_BUDGET to raise it)",
            estimate=estimate,
            budget=limit,
        )


def _plain_bounds(h: HeightConditions):
    def square(i):
        return h.a[i] if i >= 0 else 0

    def domino(i):
        return max(h.b[i], 0)

    def bar(i):
        return max(h.c[i], 0)

    return square, domino, bar


def _linear(h, lo, hi, budget):
    square, domino, bar = _plain_bounds(h)
    _guard(_size_estimate(lo, hi, square, domino, bar), budget)
    return [Tiling(p) for p in iter_linear(lo, hi, square, domino, bar)]


def enumerate_plain(h: HeightConditions, budget: int | None = None) -> list[Tiling]:
    """Every tiling of cells ``0..n`` under plain conditions."""
    h.require_plain()
    return _linear(h, 0, h.n, budget)


def enumerate_prefixed(h: HeightConditions, budget: int | None = None) -> list[Tiling]:
    """Tilings of ``-1..n`` where cell -1 takes no squares.

    The first stack is then a domino over ``-1, 0`` (bound ``b[0]``) or a bar
    over ``-1, 0, 1`` (bound ``c[1]``).
    """
    h.require_plain()
    return _linear(h, -1, h.n, budget)


def enumerate_shifted(h: HeightConditions, budget: int | None = None) -> list[Tiling]:
    """Tilings of cells ``1..n`` with the original labels kept."""
    h.require_plain()
    return _linear(h, 1, h.n, budget)


def enumerate_circular(h: HeightConditions, budget: int | None = None) -> list[Tiling]:
    """Every tiling of the circular board ``0..n`` (cell ``n`` touches cell 0).

    Linear tilings come first, then those with a wrapping domino stack over
    ``n, 0``, a bar stack over ``n, 0, 1`` and finally a bar stack over
    ``n-1, n, 0`` (bound ``h.wrap_bar``).
    """
    h.require_plain()
    n = h.n
    if n < 0:
        raise ValueError("a circular board needs at least one cell")
    square, domino, bar = _plain_bounds(h)

    # (wrapping placement kind, its start, its bound, first and last free cell)
    wraps = []
    if n >= 1:
        wraps.append(("domino", n, h.b[0], 1, n - 1))
    if n >= 2:
        wraps.append(("bar", n, h.c[1], 2, n - 1))
        wraps.append(("bar", n - 1, h.wrap_bar, 1, n - 2))

    estimate = _size_estimate(0, n, square, domino, bar)
    for _, _, bound, lo, hi in wraps:
        estimate += max(bound, 0) * _size_estimate(lo, hi, square, domino, bar)
    _guard(estimate, budget)

    out = [Tiling(p) for p in iter_linear(0, n, square, domino, bar)]
    for kind, start, bound, lo, hi in wraps:
        for height in range(1, bound + 1):
            head = Placement(kind, start, height)
            out.extend(Tiling((head,) + rest) for rest in iter_linear(lo, hi, square, domino, bar))
    return out


def enumerate_mixed_candidates(h: HeightConditions, budget: int | None = None) -> list[Tiling]:
    """Linear tilings using only the nonnegative domino and bar bounds."""
    return _linear(h, 0, h.n, budget)


def enumerate_mixed(h: HeightConditions, budget: int | None = None) -> list[Tiling]:
    """Every admissible mixed tiling of cells ``0..n``.

    Candidates are plain tilings where negative bounds forbid the tile; the
    ones matching an inadmissible pattern are dropped.  With no negative
    entries this is exactly :func:`enumerate_plain`.
    """
    check_mixed(h)
    return [t for t in enumerate_mixed_candidates(h, budget) if inadmissibility(t, h) is None]

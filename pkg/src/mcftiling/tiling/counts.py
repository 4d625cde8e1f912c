"""Tiling counts read off MCF convergents.

For height conditions taken as partial quotients:

* ``A_n`` counts tilings of the board ``0..n``;
* ``B_n`` counts tilings of ``-1..n`` whose first stack is dominoes or bars;
* ``C_n`` counts tilings of ``1..n``;
* ``A_n + B_{n-1}`` counts tilings of the circular board when no bar may
  cover ``n-1, n, 0``.

Negative ``b``/``c`` entries are allowed only through :func:`count_mixed`,
where ``A_n`` counts mixed tilings.
"""
from __future__ import annotations

from ..core import convergents_by_tail_recurrence
from .conditions import HeightConditions, check_mixed

__all__ = ["count_fast", "count_B", "count_C", "count_circular", "count_mixed"]


def _last_triple(h: HeightConditions):
    if h.n < 0:
        # empty board: the identity column for index -1
        return 1, 0, 0
    t = convergents_by_tail_recurrence(h.to_quotients())[-1]
    return t.A, t.B, t.C


def count_fast(h: HeightConditions) -> int:
    """Number of tilings of cells ``0..n`` (1 for the empty board)."""
    h.require_plain()
    return _last_triple(h)[0]


def count_B(h: HeightConditions) -> int:
    """Tilings of ``-1..n`` starting with a domino or bar stack over cell -1.

    The stack over ``-1, 0`` is bounded by ``b[0]`` and the one over
    ``-1, 0, 1`` by ``c[1]``.  The lone cell ``-1`` (empty ``h``) gives 0.
    """
    h.require_plain()
    return _last_triple(h)[1]


def count_C(h: HeightConditions) -> int:
    """Tilings of cells ``1..n`` under the same conditions.

    Equal to ``C_n`` and to :func:`count_fast` of the board shifted by one.
    """
    h.require_plain()
    if h.n < 0:
        raise ValueError("count_C needs at least cell 0")
    return _last_triple(h)[2]


def count_circular(h: HeightConditions) -> int:
    """Tilings of the circular board where cell ``n`` borders cell 0.

    Wrapping stacks: dominoes over ``n, 0`` (bound ``b[0]``), bars over
    ``n, 0, 1`` (bound ``c[1]``) and bars over ``n-1, n, 0`` (bound
    ``h.wrap_bar``).  With ``wrap_bar == 0`` this is ``A_n + B_{n-1}``;
    otherwise each extra bar stack leaves cells ``1..n-2`` to tile linearly.
    """
    h.require_plain()
    n = h.n
    if n < 0:
        raise ValueError("a circular board needs at least one cell")
    total = _last_triple(h)[0] + _last_triple(h.truncate(n - 1))[1]
    if h.wrap_bar and n >= 2:
        total += h.wrap_bar * _last_triple(h.truncate(n - 2).shift(1))[0]
    return total


def count_mixed(h: HeightConditions) -> int:
    """Number of mixed tilings: ``A_n`` with signed ``b`` and ``c``."""
    check_mixed(h)
    return _last_triple(h)[0]

"""Jacobi and Jacobi-Perron expansion of real tuples into partial quotients.

The degree-two step is::

    a_i = floor(alpha_i),  b_i = floor(beta_i)
    alpha_{i+1} = 1 / (beta_i - b_i)
    beta_{i+1}  = (alpha_i - a_i) / (beta_i - b_i)

which inverts ``alpha_i = a_i + beta_{i+1}/alpha_{i+1}`` and
``beta_i = b_i + 1/alpha_{i+1}``.  Exact mode works on
:class:`fractions.Fraction` and is the reference; floating mode needs an
explicit tolerance for deciding when a fractional part is zero.
"""
from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import PartialQuotients
from .errors import NumericInstability

__all__ = [
    "ExpansionState",
    "PerronState",
    "ExpansionResult",
    "jacobi_expand",
    "jacobi_expand_float",
    "perron_expand",
    "perron_convergents",
]

DEFAULT_ZERO_TOL = 1e-9


@dataclass(frozen=True)
class ExpansionState:
    """Complete quotients ``(alpha_i, beta_i)`` at step ``i``; gamma is always 1."""

    alpha: Fraction | float
    beta: Fraction | float
    step: int


@dataclass(frozen=True)
class PerronState:
    values: tuple
    step: int

    @property
    def degree(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class ExpansionResult:
    """Outcome of an expansion run.

    ``quotients`` is a :class:`PartialQuotients` (with ``c`` all ones) for the
    degree-two algorithm and a tuple of ``m`` rows for Perron's.  ``steps`` is
    the index of the last step performed, so ``len(a) == steps + 1``.

    ``terminated`` means the last component's fractional part was exactly
    zero (or below tolerance) so no further division was possible.  The
    other fractional parts at that moment are kept in ``remainder``; when
    any of them is nonzero the finite MCF does not reproduce the input.
    """

    quotients: PartialQuotients | tuple
    terminated: bool
    steps: int
    states: tuple = ()
    remainder: tuple = ()

    @property
    def exact(self) -> bool:
        """True when the expansion ended with every fractional part zero."""
        return self.terminated and not any(self.remainder)


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, numbers.Rational):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"exact mode needs integers or Fractions, got {type(x).__name__}")


def _perron_run(values, max_steps, floor, is_zero, check=None):
    """Shared driver; ``values`` are the complete quotients at step 0."""
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    m = len(values)
    if m < 1:
        raise ValueError("need at least one value to expand")
    if check is not None:
        check(values, 0)
    rows = [[] for _ in range(m)]
    states = []
    for step in range(max_steps):
        states.append(PerronState(tuple(values), step))
        digits = [floor(v) for v in values]
        for row, d in zip(rows, digits):
            row.append(d)
        fracs = [v - d for v, d in zip(values, digits)]
        if is_zero(fracs[-1]):
            remainder = tuple(0 if is_zero(f) else f for f in fracs[:-1])
            return rows, states, True, step, remainder
        pivot = fracs[-1]
        values = [1 / pivot] + [f / pivot for f in fracs[:-1]]
        if check is not None:
            check(values, step + 1)
    return rows, states, False, max_steps - 1, ()


def _jacobi_result(rows, states, terminated, step, remainder):
    a, b = rows
    pq = PartialQuotients(a, b, (1,) * len(a))
    exp_states = tuple(ExpansionState(s.values[0], s.values[1], s.step) for s in states)
    return ExpansionResult(pq, terminated, step, exp_states, remainder)


def jacobi_expand(alpha, beta, max_steps: int = 30) -> ExpansionResult:
    """Exact Jacobi expansion of a rational pair."""
    run = _perron_run(
        [_as_fraction(alpha), _as_fraction(beta)], max_steps, math.floor, lambda f: f == 0
    )
    return _jacobi_result(*run)


def _float_hooks(zero_tol):
    if not zero_tol > 0:
        raise ValueError("zero_tol must be positive")
    limit = 1 / zero_tol

    def floor(x):
        # values within tolerance of an integer are snapped to it
        r = round(x)
        return int(r) if abs(x - r) < zero_tol else math.floor(x)

    def is_zero(f):
        return abs(f) < zero_tol

    def check(values, step):
        for v in values:
            if not math.isfinite(v) or abs(v) > limit:
                raise NumericInstability(
                    f"complete quotient {v!r} at step {step} exceeds 1/zero_tol = {limit:g}"
                )

    return floor, is_zero, check


def jacobi_expand_float(
    alpha: float, beta: float, max_steps: int = 30, zero_tol: float = DEFAULT_ZERO_TOL
) -> ExpansionResult:
    """Floating-point Jacobi expansion for irrational inputs."""
    alpha, beta = float(alpha), float(beta)
    if not (math.isfinite(alpha) and math.isfinite(beta)):
        raise ValueError("inputs must be finite")
    floor, is_zero, check = _float_hooks(zero_tol)
    return _jacobi_result(*_perron_run([alpha, beta], max_steps, floor, is_zero, check))


def perron_expand(
    values: Sequence, max_steps: int = 30, zero_tol: float = DEFAULT_ZERO_TOL
) -> ExpansionResult:
    """Jacobi-Perron expansion of ``m`` numbers.

    Step ``n`` takes ``a^(i) = floor(alpha^(i))`` and sets
    ``alpha^(1) <- 1/(alpha^(m) - a^(m))`` and
    ``alpha^(i) <- (alpha^(i-1) - a^(i-1)) / (alpha^(m) - a^(m))``.
    Exact when every value is rational, floating as soon as one is a float.
    For ``m == 2`` the rows are exactly the ``a`` and ``b`` of
    :func:`jacobi_expand`.
    """
    values = list(values)
    if any(isinstance(v, float) for v in values):
        values = [float(v) for v in values]
        if not all(math.isfinite(v) for v in values):
            raise ValueError("inputs must be finite")
        floor, is_zero, check = _float_hooks(zero_tol)
        run = _perron_run(values, max_steps, floor, is_zero, check)
    else:
        run = _perron_run(
            [_as_fraction(v) for v in values], max_steps, math.floor, lambda f: f == 0
        )
    rows, states, terminated, step, remainder = run
    return ExpansionResult(tuple(tuple(r) for r in rows), terminated, step, tuple(states), remainder)


def perron_convergents(
    quotients: Sequence[Sequence[int]], last: Sequence[int] | None = None
) -> list[tuple[int, ...]]:
    """First columns of the running product of (m+1)x(m+1) matrices.

    Step ``k`` multiplies by the matrix whose first column is
    ``(q_1[k], ..., q_m[k], last[k])`` and whose other columns shift the
    identity down by one.  ``last`` defaults to ones, as produced by the
    algorithm; passing the ``c`` sequence with ``m == 2`` gives the
    :func:`~mcftiling.core.convergents_by_matrix` triples.
    """
    rows = [tuple(r) for r in quotients]
    if not rows:
        raise ValueError("need at least one quotient row")
    length = len(rows[0])
    if any(len(r) != length for r in rows):
        raise ValueError("quotient table must be rectangular")
    if last is None:
        last = (1,) * length
    last = tuple(last)
    if len(last) != length:
        raise ValueError("last row must match the quotient rows in length")
    cols = rows + [last]
    size = len(cols)
    P = [[int(i == j) for j in range(size)] for i in range(size)]
    out = []
    for k in range(length):
        first = [col[k] for col in cols]
        # P @ M where M[:,0] = first and M[i-1, i] = 1
        P = [
            [sum(row[i] * first[i] for i in range(size))] + row[: size - 1]
            for row in P
        ]
        out.append(tuple(row[0] for row in P))
    return out

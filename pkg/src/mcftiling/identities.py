"""Closed-form identities satisfied by two specific continued fractions.

* The MCF ``[(4, 2, 3, 4, ...), (b_0, 1, 1, 2, 3, ...), (1, c_1, 1, 1, 2, ...)]``
  has numerators ``A_n = (n+2)! + (n+1)! + n!`` and ``A_n / C_n`` settles
  near 4.54752 (no closed form is known).
* The classical fraction ``2 + 1/(1 + 1/(2 + 2/(3 + 3/(4 + ...))))`` has
  numerators ``(n+1)! + n!`` and converges to ``e``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import PartialQuotients, classical_convergents, convergents_by_tail_recurrence

__all__ = [
    "IdentityReport",
    "factorial_mcf",
    "check_factorial_identity",
    "estimate_limit",
    "e_fraction",
    "check_e_remark",
]


@dataclass(frozen=True)
class IdentityReport:
    name: str
    verified_up_to: int
    max_abs_error: Fraction | float | int
    witness: int | None = None

    @property
    def ok(self) -> bool:
        return self.witness is None


def factorial_mcf(n_max: int, b0: int = 0, c1: int = 0) -> PartialQuotients:
    """Partial quotients ``0..n_max`` of the factorial MCF.

    ``b0`` and ``c1`` are free: neither ``A_n`` nor ``C_n`` depends on them.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    a = [4] + [i + 1 for i in range(1, n_max + 1)]
    b = [b0, 1] + [i - 1 for i in range(2, n_max + 1)]
    c = [1, c1, 1] + [i - 2 for i in range(3, n_max + 1)]
    k = n_max + 1
    return PartialQuotients(a[:k], b[:k], c[:k])


def _factorial_closed_form(n):
    return math.factorial(n + 2) + math.factorial(n + 1) + math.factorial(n)


def check_factorial_identity(n_max: int) -> IdentityReport:
    """Compare ``A_n`` with ``(n+2)! + (n+1)! + n!`` exactly for ``n <= n_max``."""
    triples = convergents_by_tail_recurrence(factorial_mcf(n_max))
    for t in triples:
        err = abs(t.A - _factorial_closed_form(t.index))
        if err:
            return IdentityReport("factorial", t.index - 1, err, witness=t.index)
    return IdentityReport("factorial", n_max, 0)


def estimate_limit(n_max: int, exact: bool = False, b0: int = 0, c1: int = 0):
    """``A_n / C_n`` of the factorial MCF at ``n = n_max``.

    Returns a float, or the exact :class:`~fractions.Fraction` with ``exact=True``.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    t = convergents_by_tail_recurrence(factorial_mcf(n_max, b0, c1))[-1]
    value = Fraction(t.A, t.C)
    return value if exact else float(value)


def e_fraction(n_max: int) -> tuple[list[int], list[int]]:
    """``(a, b)`` for ``2 + 1/(1 + 1/(2 + 2/(3 + ...)))`` up to ``a_{n_max}``.

    ``b`` holds ``b_1..b_{n_max}``.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    a = [2] + list(range(1, n_max + 1))
    b = [1] + list(range(1, n_max))
    return a, b[:n_max]


def check_e_remark(n_max: int) -> IdentityReport:
    """Numerators equal ``(n+1)! + n!`` for ``n <= n_max``.

    ``max_abs_error`` is ``|p/q - e|`` at the deepest convergent checked.
    """
    a, b = e_fraction(n_max)
    convergents = classical_convergents(a, b)
    for n, (p, _) in enumerate(convergents):
        if p != math.factorial(n + 1) + math.factorial(n):
            return IdentityReport("e", n - 1, abs(p - math.factorial(n + 1) - math.factorial(n)), witness=n)
    p, q = convergents[-1]
    return IdentityReport("e", n_max, abs(p / q - math.e))

"""Multidimensional continued fractions of degree two and their convergents.

An MCF is given by three integer sequences ``a``, ``b``, ``c`` with the
convention ``c[0] == 1``.  Its ``n``-th convergent is the pair
``(A_n / C_n, B_n / C_n)`` where ``(A_n, B_n, C_n)`` is the first column of
the product ``M_0 M_1 ... M_n`` with::

    M_i = [[a_i, 1, 0],
           [b_i, 0, 1],
           [c_i, 0, 0]]

Four routes to the same integers live here and are cross-checked by the
tests: the explicit matrix product, the tail recurrence, the head recurrence
on suffixes, and the suffix system ``C = A'``, ``B = c_1 C' + b_0 A'``,
``A = a_0 A' + B'`` (primes denote the MCF shifted by one).
"""
from __future__ import annotations

import operator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import ZeroDenominator

__all__ = [
    "PartialQuotients",
    "ConvergentTriple",
    "RationalPair",
    "SEED_TRIPLES",
    "convergents_by_matrix",
    "convergents_by_tail_recurrence",
    "numerator_by_head_recurrence",
    "triple_by_suffix_system",
    "evaluate_finite",
    "evaluate_nested",
    "evaluate_classical_cf",
    "classical_convergents",
    "degenerate_mcf",
]


def _int_tuple(values, name):
    try:
        return tuple(operator.index(v) for v in values)
    except TypeError:
        raise TypeError(f"{name} must contain integers, got {list(values)!r}") from None


@dataclass(frozen=True)
class PartialQuotients:
    """The sequences ``a_0..a_n``, ``b_0..b_n``, ``c_0..c_n`` of a finite MCF.

    ``c[0]`` must be 1.  Entries that no convergent depends on (``b_0`` and
    ``c_1`` for the ``A`` sequence) are ordinary integers chosen by the
    caller.  ``raw_c0`` keeps the value a leading ``c`` had before
    :meth:`shift` normalised it to 1; it takes no part in equality.
    """

    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]
    raw_c0: int | None = field(default=None, compare=False)

    def __post_init__(self):
        a = _int_tuple(self.a, "a")
        b = _int_tuple(self.b, "b")
        c = _int_tuple(self.c, "c")
        if not a:
            raise ValueError("an MCF needs at least one partial quotient")
        if not len(a) == len(b) == len(c):
            raise ValueError(
                f"a, b, c must have equal length (got {len(a)}, {len(b)}, {len(c)})"
            )
        if c[0] != 1:
            raise ValueError(f"c[0] must be 1 by convention, got {c[0]}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @property
    def n(self) -> int:
        """Index of the last partial quotient."""
        return len(self.a) - 1

    def __len__(self):
        return len(self.a)

    def truncate(self, n: int) -> PartialQuotients:
        """Keep indices ``0..n``."""
        if not 0 <= n <= self.n:
            raise IndexError(f"cannot truncate an MCF of depth {self.n} to {n}")
        return PartialQuotients(self.a[: n + 1], self.b[: n + 1], self.c[: n + 1])

    def shift(self, k: int = 1) -> PartialQuotients:
        """Drop the first ``k`` indices, renormalising the new ``c[0]`` to 1."""
        if not 0 <= k <= self.n:
            raise IndexError(f"cannot shift an MCF of depth {self.n} by {k}")
        if k == 0:
            return self
        return PartialQuotients(
            self.a[k:], self.b[k:], (1,) + self.c[k + 1 :], raw_c0=self.c[k]
        )


class ConvergentTriple(NamedTuple):
    A: int
    B: int
    C: int
    index: int


# Columns of the empty (identity) product: index -1 is column 0, -2 is column 1.
SEED_TRIPLES = {
    -2: ConvergentTriple(0, 1, 0, -2),
    -1: ConvergentTriple(1, 0, 0, -1),
}
# Column 2 of the identity; only the recurrence needs it (for n = 0, 1).
_SEED_MINUS_3 = (0, 0, 1)


class RationalPair(NamedTuple):
    first: Fraction
    second: Fraction

    def __str__(self):
        return f"({self.first}, {self.second})"


def convergents_by_matrix(pq: PartialQuotients) -> list[ConvergentTriple]:
    """Triples for indices ``0..n`` from the running 3x3 matrix product."""
    P = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    out = []
    for i, (a, b, c) in enumerate(zip(pq.a, pq.b, pq.c)):
        M = ((a, 1, 0), (b, 0, 1), (c, 0, 0))
        P = [[sum(row[k] * M[k][j] for k in range(3)) for j in range(3)] for row in P]
        out.append(ConvergentTriple(P[0][0], P[1][0], P[2][0], i))
    return out


def convergents_by_tail_recurrence(pq: PartialQuotients) -> list[ConvergentTriple]:
    """Triples via ``X_n = a_n X_{n-1} + b_n X_{n-2} + c_n X_{n-3}``.

    Seeded with the identity columns, so the recurrence already gives
    indices 0..2 (where it reduces to the direct expansions
    ``X_0 = (a_0, b_0, 1)``, ``A_1 = a_0 a_1 + b_1`` and so on).
    """
    s2, s1 = SEED_TRIPLES[-2], SEED_TRIPLES[-1]
    x3, x2, x1 = _SEED_MINUS_3, (s2.A, s2.B, s2.C), (s1.A, s1.B, s1.C)
    out = []
    for i, (a, b, c) in enumerate(zip(pq.a, pq.b, pq.c)):
        x = tuple(a * p + b * q + c * r for p, q, r in zip(x1, x2, x3))
        out.append(ConvergentTriple(*x, i))
        x3, x2, x1 = x2, x1, x
    return out


def numerator_by_head_recurrence(pq: PartialQuotients) -> int:
    """``A`` of the whole MCF by recursing on suffixes from the front.

    ``A(k..n) = a_k A(k+1..n) + b_{k+1} A(k+2..n) + c_{k+2} A(k+3..n)``, with
    the empty suffix worth 1 and anything shorter worth 0.  Memoised on the
    suffix start so the cost is linear in ``n``.
    """
    n = pq.n
    memo = {n + 1: 1, n + 2: 0, n + 3: 0}

    def coef(seq, i):
        return seq[i] if i <= n else 0

    # Filled from the back so deep MCFs never touch the recursion limit.
    for k in range(n, -1, -1):
        memo[k] = (
            pq.a[k] * memo[k + 1]
            + coef(pq.b, k + 1) * memo[k + 2]
            + coef(pq.c, k + 2) * memo[k + 3]
        )
    return memo[0]


def triple_by_suffix_system(pq: PartialQuotients) -> ConvergentTriple:
    """``(A_n, B_n, C_n)`` assembled from the last quotient backwards.

    Each suffix MCF starting at ``k`` has its own leading ``c`` set to 1, while
    the step that absorbs it uses the true ``c_{k+1}``.
    """
    n = pq.n
    A, B, C = pq.a[n], pq.b[n], 1
    for k in range(n - 1, -1, -1):
        A, B, C = pq.a[k] * A + B, pq.c[k + 1] * C + pq.b[k] * A, A
    return ConvergentTriple(A, B, C, n)


def evaluate_finite(pq: PartialQuotients) -> RationalPair:
    """The pair ``(A_n / C_n, B_n / C_n)`` as exact rationals."""
    A, B, C, _ = convergents_by_tail_recurrence(pq)[-1]
    if C == 0:
        raise ZeroDenominator(f"C_{pq.n} = 0, the convergent is undefined")
    return RationalPair(Fraction(A, C), Fraction(B, C))


def evaluate_nested(pq: PartialQuotients) -> RationalPair:
    """Evaluate the nested fraction bottom-up through complete quotients.

    ``alpha_i = a_i + beta_{i+1} / alpha_{i+1}`` and
    ``beta_i = b_i + c_{i+1} / alpha_{i+1}``, starting from
    ``(alpha_n, beta_n) = (a_n, b_n)``.
    """
    alpha, beta = Fraction(pq.a[-1]), Fraction(pq.b[-1])
    for i in range(pq.n - 1, -1, -1):
        if alpha == 0:
            raise ZeroDenominator(f"complete quotient alpha_{i + 1} vanishes")
        alpha, beta = pq.a[i] + beta / alpha, pq.b[i] + pq.c[i + 1] / alpha
    return RationalPair(alpha, beta)


def _classical_b(a, b):
    b = _int_tuple(b, "b")
    if len(b) == len(a):
        # leading entry is the unused b_0 placeholder
        b = b[1:]
    if len(b) != len(a) - 1:
        raise ValueError(
            f"expected {len(a) - 1} numerators b_1..b_n (optionally led by b_0), got {len(b)}"
        )
    return b


def evaluate_classical_cf(a: Sequence[int], b: Sequence[int]) -> Fraction:
    """Exact value of ``a_0 + b_1/(a_1 + b_2/(a_2 + ...))``.

    ``b`` holds ``b_1..b_n``; a leading ``b_0`` placeholder is accepted and
    ignored.
    """
    a = _int_tuple(a, "a")
    if not a:
        raise ValueError("need at least a_0")
    b = _classical_b(a, b)
    value = Fraction(a[-1])
    for i in range(len(a) - 2, -1, -1):
        if value == 0:
            raise ZeroDenominator(f"tail starting at a_{i + 1} evaluates to 0")
        value = a[i] + b[i] / value
    return value


def degenerate_mcf(a: Sequence[int], b: Sequence[int]) -> PartialQuotients:
    """The MCF with ``c_i = 0`` for ``i >= 1`` whose ``A/C`` is the classical CF."""
    a = _int_tuple(a, "a")
    b = _classical_b(a, b)
    return PartialQuotients(a, (0,) + b, (1,) + (0,) * (len(a) - 1))


def classical_convergents(a: Sequence[int], b: Sequence[int]) -> list[tuple[int, int]]:
    """Numerator/denominator pairs ``(p_k, q_k)`` for ``k = 0..n``."""
    return [(t.A, t.C) for t in convergents_by_tail_recurrence(degenerate_mcf(a, b))]

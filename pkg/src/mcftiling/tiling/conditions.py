"""Height conditions, placements and tilings of a board with cells ``0..n``.

``a[i]`` caps the stack of squares on cell ``i``, ``b[i]`` the stack of
dominoes ending on cell ``i`` (covering ``i-1, i``) and ``c[i]`` the stack of
bars ending on ``i`` (covering ``i-2, i-1, i``).  ``b[0]``, ``c[0]`` and
``c[1]`` describe tiles that stick out to the left; linear boards ignore
them, the prefixed board of the ``B`` count uses ``b[0]`` and ``c[1]``, and a
circular board uses ``b[0]`` and ``c[1]`` for the stacks that wrap from cell
``n`` onto cell 0.  The third wrapping stack, a bar over ``n-1, n, 0``, has its
own bound ``wrap_bar`` (0 unless asked for).

Signed ``b`` and ``c`` describe mixed tilings: a negative entry never allows
a tile, it marks certain height patterns as inadmissible instead (see
:func:`inadmissibility`).
"""
from __future__ import annotations

import operator
import re
from dataclasses import dataclass
from typing import NamedTuple

from ..core import PartialQuotients
from ..errors import InvalidMixedConditions, MixedModeRequired

__all__ = [
    "KINDS",
    "HeightConditions",
    "Placement",
    "Tiling",
    "mixed_case",
    "check_mixed",
    "plain_violations",
    "inadmissibility",
]

KINDS = ("square", "domino", "bar")
KIND_LENGTH = {"square": 1, "domino": 2, "bar": 3}
KIND_RANK = {kind: rank for rank, kind in enumerate(KINDS)}


def _ints(values, name):
    try:
        return tuple(operator.index(v) for v in values)
    except TypeError:
        raise TypeError(f"{name} must contain integers") from None


@dataclass(frozen=True)
class HeightConditions:
    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]
    wrap_bar: int = 0

    def __post_init__(self):
        a, b, c = _ints(self.a, "a"), _ints(self.b, "b"), _ints(self.c, "c")
        if not len(a) == len(b) == len(c):
            raise ValueError(
                f"a, b, c must have equal length (got {len(a)}, {len(b)}, {len(c)})"
            )
        bad = [i for i, x in enumerate(a) if x < 1]
        if bad:
            raise ValueError(f"square bounds must be positive; a[{bad[0]}] = {a[bad[0]]}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "wrap_bar", operator.index(self.wrap_bar))

    @classmethod
    def from_quotients(cls, pq: PartialQuotients, wrap_bar: int = 0) -> HeightConditions:
        return cls(pq.a, pq.b, pq.c, wrap_bar)

    @property
    def n(self) -> int:
        """Last cell index; -1 for the empty board."""
        return len(self.a) - 1

    def to_quotients(self) -> PartialQuotients:
        """Same data as an MCF (``c[0]`` forced to 1, which no tiling reads)."""
        if self.n < 0:
            raise ValueError("the empty board has no partial quotients")
        return PartialQuotients(self.a, self.b, (1,) + self.c[1:])

    def truncate(self, n: int) -> HeightConditions:
        """Conditions for cells ``0..n``; ``n = -1`` gives the empty board."""
        if not -1 <= n <= self.n:
            raise IndexError(f"cannot truncate a board ending at {self.n} to {n}")
        return HeightConditions(self.a[: n + 1], self.b[: n + 1], self.c[: n + 1], self.wrap_bar)

    def shift(self, k: int = 1) -> HeightConditions:
        """Drop the first ``k`` cells and relabel from 0."""
        if not 0 <= k <= self.n + 1:
            raise IndexError(f"cannot shift a board ending at {self.n} by {k}")
        return HeightConditions(self.a[k:], self.b[k:], self.c[k:], self.wrap_bar)

    @property
    def is_plain(self) -> bool:
        """No negative entry anywhere a tile could be placed."""
        return min(self.b, default=0) >= 0 and min(self.c[1:], default=0) >= 0 and self.wrap_bar >= 0

    def require_plain(self):
        if not self.is_plain:
            raise MixedModeRequired(
                "negative domino/bar bounds describe mixed tilings; use the mixed counter"
            )

    def effective_b(self, k: int) -> int:
        """Domino bound ending at ``k`` on the linear board (``b_0`` reads as 0)."""
        return self.b[k] if k >= 1 else 0

    def effective_c(self, k: int) -> int:
        """Bar bound ending at ``k`` on the linear board (``c_0, c_1`` read as 0)."""
        return self.c[k] if k >= 2 else 0


def mixed_case(a: int, b: int, c: int) -> str:
    """Which mixed rule governs a position: ``"1"``, ``"2"``, ``"3a"``, ``"3b"`` or ``"4"``.

    A zero partner counts as nonnegative, so ``b < 0 == c`` follows rule 2 and
    ``c < 0 == b`` follows rule 3.  When both ``a > |c|`` and ``b > |c|``
    hold, rule 3a (restricting squares) wins.
    """
    if b >= 0 and c >= 0:
        return "1"
    if b < 0 and c >= 0:
        return "2"
    if c < 0 and b >= 0:
        return "3a" if a > -c else "3b"
    return "4"


def check_mixed(h: HeightConditions):
    """Raise :class:`InvalidMixedConditions` if a side condition fails."""
    if h.wrap_bar < 0:
        raise InvalidMixedConditions("wrap_bar must be nonnegative", rule="wrap_bar>=0")
    for k in range(1, h.n + 1):
        a, b, c = h.a[k], h.effective_b(k), h.effective_c(k)
        if b < 0 and c >= 0 and not a > -b:
            rule = "b<0, c>=0 requires a>|b|"
        elif c < 0 and b >= 0 and not (a > -c or b > -c):
            rule = "b>=0, c<0 requires a>|c| or b>|c|"
        elif b < 0 and c < 0 and not a > -b - c:
            rule = "b<0, c<0 requires a>|b|+|c|"
        else:
            continue
        raise InvalidMixedConditions(
            f"mixed condition violated at cell {k}: {rule} (a={a}, b={b}, c={c})",
            cell=k,
            rule=rule,
        )


class Placement(NamedTuple):
    """A stack of ``height`` identical tiles whose leftmost cell is ``start``."""

    kind: str
    start: int
    height: int

    @property
    def length(self) -> int:
        return KIND_LENGTH[self.kind]

    def __str__(self):
        return f"{self.kind}@{self.start}×{self.height}"


_PLACEMENT_RE = re.compile(r"^(square|domino|bar)@(-?\d+)[×x](\d+)$")


@dataclass(frozen=True)
class Tiling:
    """Placements listed from the one covering the first cell onwards.

    On circular boards a wrapping stack is listed first; its ``start`` is the
    cell it begins on (``n``, or ``n - 1`` for the ``wrap_bar`` stack).
    """

    placements: tuple[Placement, ...]

    def __iter__(self):
        return iter(self.placements)

    def __len__(self):
        return len(self.placements)

    def __str__(self):
        return " ".join(str(p) for p in self.placements)

    def key(self):
        """Canonical sort key: kinds square < domino < bar, then heights."""
        return tuple((KIND_RANK[p.kind], p.height, p.start) for p in self.placements)

    @classmethod
    def parse(cls, text: str) -> Tiling:
        placements = []
        for token in text.split():
            m = _PLACEMENT_RE.match(token)
            if not m:
                raise ValueError(f"bad placement {token!r}; expected kind@start×height")
            placements.append(Placement(m.group(1), int(m.group(2)), int(m.group(3))))
        return cls(tuple(placements))

    @classmethod
    def of(cls, *items) -> Tiling:
        """Build a linear tiling from ``(kind, height)`` pairs laid left to right."""
        placements, cell = [], 0
        for kind, height in items:
            placements.append(Placement(kind, cell, height))
            cell += KIND_LENGTH[kind]
        return cls(tuple(placements))


def _bound(h: HeightConditions, kind: str, end: int) -> int:
    if kind == "square":
        return h.a[end]
    if kind == "domino":
        return h.effective_b(end)
    return h.effective_c(end)


def plain_violations(tiling: Tiling, h: HeightConditions) -> list[str]:
    """Reasons why ``tiling`` is not a linear tiling under plain conditions."""
    problems = []
    cell = 0
    for p in tiling:
        if p.kind not in KIND_LENGTH:
            problems.append(f"unknown tile kind {p.kind!r}")
            continue
        if p.start != cell:
            problems.append(f"{p} starts at {p.start}, expected {cell}")
        end = p.start + p.length - 1
        if end > h.n or p.start < 0:
            problems.append(f"{p} leaves the board 0..{h.n}")
        elif p.height < 1:
            problems.append(f"{p} has no tiles")
        else:
            bound = _bound(h, p.kind, end)
            if p.height > bound:
                problems.append(f"{p} exceeds the bound {bound} for a {p.kind} ending at {end}")
        cell = p.start + p.length
    if cell != h.n + 1:
        problems.append(f"tiling covers cells up to {cell - 1}, board ends at {h.n}")
    return problems


def inadmissibility(tiling: Tiling, h: HeightConditions) -> tuple[int, str] | None:
    """First ``(cell, rule)`` making a linear tiling inadmissible, or None.

    A full stack means ``a[i]`` squares on cell ``i``.  "Up to ``t``" is read
    as heights ``1..t``.  Rules, for the position ``k`` of a negative entry:

    * 2: full stack on ``k-1`` and at most ``|b_k|`` squares on ``k``;
    * 3a: full stacks on ``k-2`` and ``k-1``, at most ``|c_k|`` squares on ``k``;
    * 3b: full stack on ``k-2``, at most ``|c_k|`` dominoes over ``k-1, k``;
    * 4a: full stacks on ``k-2`` and ``k-1``, at most ``|b_k|+|c_k|`` squares on ``k``;
    * 4b: full stack on ``k-1`` and at most ``|b_k|`` squares on ``k``.
    """
    squares = {}
    dominoes = {}
    for p in tiling:
        if p.kind == "square":
            squares[p.start] = p.height
        elif p.kind == "domino":
            dominoes[p.start + 1] = p.height

    def full(i):
        return i >= 0 and squares.get(i) == h.a[i]

    for k in range(1, h.n + 1):
        b, c = h.effective_b(k), h.effective_c(k)
        case = mixed_case(h.a[k], b, c)
        sq = squares.get(k)
        if case == "2":
            if full(k - 1) and sq is not None and sq <= -b:
                return k, "2"
        elif case == "3a":
            if full(k - 2) and full(k - 1) and sq is not None and sq <= -c:
                return k, "3a"
        elif case == "3b":
            dom = dominoes.get(k)
            if full(k - 2) and dom is not None and dom <= -c:
                return k, "3b"
        elif case == "4" and sq is not None:
            if full(k - 2) and full(k - 1):
                if sq <= -b - c:
                    return k, "4a"
            elif full(k - 1) and sq <= -b:
                return k, "4b"
    return None

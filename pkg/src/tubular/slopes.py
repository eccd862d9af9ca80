"""Exact arithmetic on the extended rationals Q ∪ {∞}.

A :class:`Slope` is stored as a reduced pair ``(a, b)`` with ``b >= 0`` and
the single point at infinity encoded as ``(1, 0)``.  Everything here is pure
integer arithmetic.
"""
from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from typing import Iterator


class SlopeError(ValueError):
    """Raised for malformed slopes (``0/0``, unparsable text)."""


@functools.total_ordering
@dataclass(frozen=True)
class Slope:
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.b < 0 or math.gcd(self.a, self.b) != 1 or (self.b == 0 and self.a != 1):
            raise SlopeError(f"({self.a}, {self.b}) is not a reduced slope; use normalize()")

    @property
    def is_infinite(self) -> bool:
        return self.b == 0

    @property
    def height(self) -> int:
        return abs(self.a) + self.b

    def __lt__(self, other: "Slope") -> bool:
        if not isinstance(other, Slope):
            return NotImplemented
        if self.b == 0:
            return False
        if other.b == 0:
            return True
        return self.a * other.b < other.a * self.b

    def __str__(self) -> str:
        if self.b == 0:
            return "∞"
        if self.b == 1:
            return str(self.a)
        return f"{self.a}/{self.b}"

    def __repr__(self) -> str:
        return f"Slope({self})"


def normalize(a: int, b: int) -> Slope:
    """Reduce the projective ratio ``a : b`` to canonical form."""
    if a == 0 and b == 0:
        raise SlopeError("0/0 is not a slope")
    if b == 0:
        return Slope(1, 0)
    g = math.gcd(a, b)
    a, b = a // g, b // g
    if b < 0:
        a, b = -a, -b
    return Slope(a, b)


INF = Slope(1, 0)
ZERO = Slope(0, 1)
ONE = Slope(1, 1)
MINUS_ONE = Slope(-1, 1)
BASE_SLOPES = (MINUS_ONE, ZERO, INF)


def parse_slope(text: str) -> Slope:
    """Parse ``"7/4"``, ``"-2"``, ``"∞"`` or ``"inf"``."""
    s = text.strip()
    if s in ("∞", "inf", "+inf", "infty", "oo"):
        return INF
    try:
        if "/" in s:
            num, den = s.split("/", 1)
            return normalize(int(num), int(den))
        return normalize(int(s), 1)
    except ValueError as exc:
        raise SlopeError(f"cannot parse slope {text!r}") from exc


def dist(p: Slope, q: Slope) -> int:
    """``|a(q) b(p) - a(p) b(q)|``; zero exactly when ``p == q``."""
    return abs(q.a * p.b - p.a * q.b)


class SlopeType(enum.Enum):
    """Parity class of a slope.  ``ONE`` is rendered as ``-1`` in the arc flavour."""

    ZERO = "0"
    ONE = "1"
    INF = "∞"

    def __str__(self) -> str:
        return self.value


def slope_type(p: Slope) -> SlopeType:
    if p.a % 2 == 0:
        return SlopeType.ZERO
    if p.b % 2 == 1:
        return SlopeType.ONE
    return SlopeType.INF


def arc_type(p: Slope) -> Slope:
    """The base slope in ``{-1, 0, ∞}`` sharing the parity class of ``p``.

    This is the negated root type: 0 stays 0, 1 becomes -1, ∞ stays ∞.
    """
    return {SlopeType.ZERO: ZERO, SlopeType.ONE: MINUS_ONE, SlopeType.INF: INF}[slope_type(p)]


def type_slope(t: SlopeType) -> Slope:
    """The slope in ``{0, 1, ∞}`` naming a root type."""
    return {SlopeType.ZERO: ZERO, SlopeType.ONE: ONE, SlopeType.INF: INF}[t]


def half_floor(n: int) -> int:
    """``n/2`` for even ``n`` and ``(n-1)/2`` for odd ``n``, negatives included."""
    return n // 2


def half_outer(n: int) -> int:
    if n < 0:
        raise ValueError(f"half_outer is defined on non-negative integers, got {n}")
    if n == 0:
        return 0
    return half_floor(n - 1)


def complexity(p: Slope) -> int:
    return abs(p.a) + p.b + abs(p.a + p.b)


class UnfoldStep(enum.Enum):
    L = "L"
    D = "D"
    U = "U"

    def __str__(self) -> str:
        return self.value


# U is (a, b) -> (-a - 2b, b), i.e. p -> -2 - p; see the decisions ledger.
_UNFOLD = {
    UnfoldStep.L: lambda a, b: (-a, b),
    UnfoldStep.D: lambda a, b: (-a, 2 * a + b),
    UnfoldStep.U: lambda a, b: (-a - 2 * b, b),
}


def unfold(p: Slope, step: UnfoldStep) -> Slope:
    return normalize(*_UNFOLD[step](p.a, p.b))


def dictated_step(p: Slope) -> UnfoldStep | None:
    """The unfolding that lowers the complexity of ``p``; ``None`` on base slopes."""
    if complexity(p) <= 2:
        return None
    if p.is_infinite or p.a > 0:
        return UnfoldStep.L
    if p.a + p.b > 0:  # -1 < p < 0
        return UnfoldStep.D
    return UnfoldStep.U


def reduce(p: Slope) -> tuple[Slope, list[UnfoldStep]]:
    """Unfold ``p`` down to a base slope.

    Returns the base slope and the steps applied, in order.  Replaying the
    steps in reverse order from the base recovers ``p``.
    """
    steps: list[UnfoldStep] = []
    cur = p
    while (step := dictated_step(cur)) is not None:
        nxt = unfold(cur, step)
        assert complexity(nxt) < complexity(cur), (cur, step, nxt)
        steps.append(step)
        cur = nxt
    return cur, steps


def replay(base: Slope, steps: list[UnfoldStep]) -> Slope:
    cur = base
    for step in reversed(steps):
        cur = unfold(cur, step)
    return cur


def slopes_up_to_height(max_height: int) -> list[Slope]:
    """All slopes with ``|a| + b <= max_height``, in increasing order."""
    out = {INF} if max_height >= 1 else set()
    for b in range(1, max_height + 1):
        for a in range(-(max_height - b), max_height - b + 1):
            if math.gcd(a, b) == 1:
                out.add(Slope(a, b))
    return sorted(out)


def slopes_up_to_complexity(max_complexity: int) -> list[Slope]:
    return [p for p in slopes_up_to_height(max_complexity) if complexity(p) <= max_complexity]


def iter_slopes() -> Iterator[Slope]:
    """All slopes, by increasing height (unbounded)."""
    h = 1
    seen: set[Slope] = set()
    while True:
        for p in slopes_up_to_height(h):
            if p not in seen:
                seen.add(p)
                yield p
        h += 1

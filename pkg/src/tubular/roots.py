"""Real Schur roots of the (2,2,2,2) lattice and their compatibility.

Every positive real Schur root is ``v_q^x`` for a unique slope ``q`` and a
unit ``x`` of the quaternion group; :func:`root_vector` builds it and
:func:`recognize` inverts it.  Three independent compatibility predicates are
provided:

* :func:`compatible` - a single Euler pairing, higher slope first;
* :func:`compatible_table` - the closed-form case table on types and dist;
* :func:`compatible_generic` - the tube-level criterion on raw vectors,
  using only the form, the Coxeter map and quasi-lengths.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import lattice as lat
from .lattice import H0, H1, HINF, Vector, add, euler, scale, sub
from .slopes import (
    INF,
    ONE,
    ZERO,
    Slope,
    SlopeType,
    dist,
    half_floor,
    normalize,
    parse_slope,
    slope_type,
    slopes_up_to_height,
)

# --------------------------------------------------------------------------
# quaternion units

_AXES = ("1", "i", "j", "k")
# axis product table: (x, y) -> (sign, axis) for x*y
_AXIS_MUL = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


@dataclass(frozen=True)
class QuatUnit:
    sign: int
    axis: str

    def __post_init__(self) -> None:
        if self.sign not in (1, -1) or self.axis not in _AXES:
            raise ValueError(f"bad quaternion unit ({self.sign}, {self.axis!r})")

    def __mul__(self, other: "QuatUnit") -> "QuatUnit":
        s, ax = _AXIS_MUL[self.axis, other.axis]
        return QuatUnit(self.sign * other.sign * s, ax)

    def __neg__(self) -> "QuatUnit":
        return QuatUnit(-self.sign, self.axis)

    @property
    def positive(self) -> bool:
        return self.sign == 1

    def __str__(self) -> str:
        return self.axis if self.sign == 1 else "-" + self.axis

    def __repr__(self) -> str:
        return f"QuatUnit({self})"


def parse_unit(text: str) -> QuatUnit:
    s = text.strip().replace("−", "-")
    sign = 1
    if s.startswith(("+", "-")):
        sign = -1 if s[0] == "-" else 1
        s = s[1:]
    if s not in _AXES:
        raise ValueError(f"cannot parse quaternion unit {text!r}")
    return QuatUnit(sign, s)


ONE_U, I_U, J_U, K_U = (QuatUnit(1, a) for a in _AXES)
H_PLUS = (ONE_U, I_U, J_U, K_U)
# fixed enumeration order
H = (ONE_U, -ONE_U, I_U, -I_U, J_U, -J_U, K_U, -K_U)
_H_INDEX = {x: n for n, x in enumerate(H)}


def quat_mul(x: QuatUnit, y: QuatUnit) -> QuatUnit:
    return x * y


def in_coset(y: QuatUnit, sign: int, x: QuatUnit) -> bool:
    """Whether ``y`` lies in ``sign * H^+ * x``."""
    return any(QuatUnit(sign, h.axis) * x == y for h in H_PLUS)


# --------------------------------------------------------------------------
# basic vectors

_BASIC_POSITIVE: dict[tuple[SlopeType, str], Vector] = {
    (SlopeType.ZERO, "1"): (0, 0, 1, 0, 1, 0),
    (SlopeType.ZERO, "i"): (-1, 0, 0, 0, 0, 0),
    (SlopeType.ZERO, "j"): (0, 0, 1, 0, 0, 1),
    (SlopeType.ZERO, "k"): (0, 1, 1, 1, 1, 1),
    (SlopeType.ONE, "1"): (1, 0, 1, 1, 1, 0),
    (SlopeType.ONE, "i"): (0, 1, 1, 1, 1, 0),
    (SlopeType.ONE, "j"): (0, 0, 1, 0, 0, 0),
    (SlopeType.ONE, "k"): (1, 1, 2, 1, 1, 1),
    (SlopeType.INF, "1"): (1, 0, 0, 1, 0, 0),
    (SlopeType.INF, "i"): (1, 1, 1, 1, 1, 0),
    (SlopeType.INF, "j"): (0, 0, 0, 0, 0, -1),
    (SlopeType.INF, "k"): (1, 0, 1, 0, 0, 0),
}
_TYPE_H = {SlopeType.ZERO: H0, SlopeType.ONE: H1, SlopeType.INF: HINF}


def basic_vector(t: SlopeType, x: QuatUnit) -> Vector:
    v = _BASIC_POSITIVE[t, x.axis]
    return v if x.positive else sub(_TYPE_H[t], v)


BASIC_TABLE: dict[tuple[SlopeType, QuatUnit], Vector] = {
    (t, x): basic_vector(t, x) for t in SlopeType for x in H
}
_BASIC_LOOKUP: dict[tuple[SlopeType, Vector], QuatUnit] = {
    (t, v): x for (t, x), v in BASIC_TABLE.items()
}


# --------------------------------------------------------------------------
# the parametrization


@functools.total_ordering
@dataclass(frozen=True)
class RootIndex:
    q: Slope
    x: QuatUnit

    def _key(self) -> tuple:
        return (self.q, _H_INDEX[self.x])

    def __lt__(self, other: "RootIndex") -> bool:
        return self._key() < other._key()

    def __neg__(self) -> "RootIndex":
        return RootIndex(self.q, -self.x)

    def __str__(self) -> str:
        return f"{self.q}:{self.x}"

    def __repr__(self) -> str:
        return f"RootIndex({self})"


def parse_root_index(text: str) -> RootIndex:
    q, _, x = text.strip().rpartition(":")
    if not q:
        raise ValueError(f"expected 'q:x', got {text!r}")
    return RootIndex(parse_slope(q), parse_unit(x))


def h_vector(q: Slope) -> Vector:
    return lat.h_vector(q)


@functools.lru_cache(maxsize=1 << 16)
def root_vector(q: Slope, x: QuatUnit) -> Vector:
    return add(basic_vector(slope_type(q), x), scale(half_floor(q.b), H0), scale(half_floor(q.a), HINF))


def vector_of(r: RootIndex) -> Vector:
    return root_vector(r.q, r.x)


def recognize(v: Sequence[int]) -> RootIndex | None:
    """The index ``(q, x)`` with ``root_vector(q, x) == v``, or ``None``."""
    v = tuple(v)
    if not lat.is_positive(v) or euler(v, v) != 1:
        return None
    deg, rk = lat.degree(v), lat.rank(v)
    if math.gcd(deg, rk) != 1:
        return None
    q = normalize(deg, rk)
    residual = sub(v, add(scale(half_floor(q.b), H0), scale(half_floor(q.a), HINF)))
    x = _BASIC_LOOKUP.get((slope_type(q), residual))
    return None if x is None else RootIndex(q, x)


def is_real_schur(v: Sequence[int]) -> bool:
    if not lat.is_positive(v) or euler(v, v) != 1:
        return False
    try:
        ql = lat.quasi_length(v)
    except lat.LatticeError:
        return False
    return ql < len(lat.tau_orbit(v))


def is_isotropic_schur(v: Sequence[int]) -> bool:
    v = tuple(v)
    if not lat.is_positive(v) or euler(v, v) != 0 or lat.coxeter(v) != v:
        return False
    # the minimal isotropic class of its slope; (degree, rank) = 2 (a, b)
    return v == h_vector(lat.slope_of(v))


def enumerate_schur(max_height: int) -> list[RootIndex]:
    """All root indices whose slope has height ``|a| + b <= max_height``."""
    return [RootIndex(q, x) for q in slopes_up_to_height(max_height) for x in H]


# --------------------------------------------------------------------------
# compatibility


def compatible(r1: RootIndex, r2: RootIndex) -> bool:
    """Whether the two real Schur roots are Ext-orthogonal."""
    if r1.q == r2.q:
        return r1.x != -r2.x
    hi, lo = (r1, r2) if r2.q < r1.q else (r2, r1)
    return euler(vector_of(hi), vector_of(lo)) == 0


# (type of higher slope, type of lower slope) ->
#   (required dist, condition on (x_high, y_low))
_Z, _O, _I = SlopeType.ZERO, SlopeType.ONE, SlopeType.INF
_ORTHO_TABLE = {
    (_Z, _Z): (2, lambda x, y: x == y),
    (_Z, _O): (1, lambda x, y: in_coset(y, 1, x)),
    (_Z, _I): (1, lambda x, y: in_coset(x, -1, y)),
    (_O, _Z): (1, lambda x, y: in_coset(x, 1, y)),
    (_O, _O): (2, lambda x, y: x == y),
    (_O, _I): (1, lambda x, y: in_coset(y, 1, x)),
    (_I, _Z): (1, lambda x, y: in_coset(y, -1, x)),
    (_I, _O): (1, lambda x, y: in_coset(x, 1, y)),
    (_I, _I): (2, lambda x, y: x == y),
}


def higher_pairing_vanishes(hi: RootIndex, lo: RootIndex) -> bool:
    """Closed form for ``<v_hi, v_lo> == 0`` when ``hi.q > lo.q``."""
    need, cond = _ORTHO_TABLE[slope_type(hi.q), slope_type(lo.q)]
    return dist(hi.q, lo.q) == need and cond(hi.x, lo.x)


def lower_pairing_vanishes(lo: RootIndex, hi: RootIndex) -> bool:
    """Closed form for ``<v_lo, v_hi> == 0`` when ``lo.q < hi.q``.

    Uses ``<v_p^x, v_q^y> = -<v_q^{-y}, v_p^x>``, which moves the question to
    the higher-first table.
    """
    return higher_pairing_vanishes(-hi, lo)


def compatible_table(r1: RootIndex, r2: RootIndex) -> bool:
    if r1.q == r2.q:
        return r1.x != -r2.x
    hi, lo = (r1, r2) if r2.q < r1.q else (r2, r1)
    return higher_pairing_vanishes(hi, lo)


class NotSchurError(ValueError):
    pass


@functools.lru_cache(maxsize=1 << 16)
def _tube_data(v: Vector) -> tuple[Slope, tuple[Vector, ...], int] | None:
    if not is_real_schur(v):
        return None
    return lat.slope_of(v), tuple(lat.tau_orbit(v)), lat.quasi_length(v)


def compatible_generic(e: Sequence[int], f: Sequence[int]) -> bool:
    """Ext-orthogonality of two rigid classes from the form alone.

    Case analysis on slopes; equal slopes fall back to the tube picture
    through Coxeter shifts and quasi-lengths.
    """
    e, f = tuple(e), tuple(f)
    de, df = _tube_data(e), _tube_data(f)
    if de is None or df is None:
        raise NotSchurError("compatible_generic needs two real Schur roots")
    (se, orbit, ql_e), (sf, _, ql_f) = de, df
    if se < sf:
        return euler(f, e) == 0
    if sf < se:
        return euler(e, f) == 0
    if all(euler(orbit[j % len(orbit)], f) == 0 for j in range(ql_e)):
        return True
    ef, fe = euler(e, f), euler(f, e)
    if ef >= 0 and fe >= 0 and (ef, fe) != (0, 0):
        return True
    if ef == 0 and fe == 0:
        for j in range(len(orbit)):
            val = euler(orbit[j], f)
            if val > 0:
                return True
            if val < 0:
                return ql_e + ql_f < len(orbit)
    return False


def compatible_vectors(r1: RootIndex, r2: RootIndex) -> bool:
    return compatible_generic(vector_of(r1), vector_of(r2))


def pairwise_compatible(roots: Iterable[RootIndex]) -> bool:
    rs = list(roots)
    return all(compatible(a, b) for n, a in enumerate(rs) for b in rs[n + 1:])


BASE_TYPE_SLOPES = {SlopeType.ZERO: ZERO, SlopeType.ONE: ONE, SlopeType.INF: INF}

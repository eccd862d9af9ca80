"""The rank-6 Grothendieck lattice with its Euler form and Coxeter map.

Vectors are plain 6-tuples of ints in the basis of simple modules of the
quiver ``1,2 -> 3,4 -> 5,6`` (all eight arrows present).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .slopes import Slope, normalize

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

N = 6

EULER_MATRIX: Matrix = (
    (1, 0, -1, -1, 1, 1),
    (0, 1, -1, -1, 1, 1),
    (0, 0, 1, 0, -1, -1),
    (0, 0, 0, 1, -1, -1),
    (0, 0, 0, 0, 1, 0),
    (0, 0, 0, 0, 0, 1),
)

H0: Vector = (0, 0, 1, 1, 1, 1)
H1: Vector = (1, 1, 2, 2, 1, 1)
HINF: Vector = (1, 1, 1, 1, 0, 0)
ZERO_VECTOR: Vector = (0,) * N


class LatticeError(ValueError):
    """Input outside the domain of a lattice operation."""


def exact_inverse(m: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over the rationals."""
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise LatticeError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def determinant(m: Sequence[Sequence[int]]) -> int:
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    assert det.denominator == 1
    return int(det)


def _coxeter_matrix() -> Matrix:
    inv = exact_inverse(EULER_MATRIX)
    et = [[EULER_MATRIX[j][i] for j in range(N)] for i in range(N)]
    rows = []
    for i in range(N):
        row = []
        for j in range(N):
            x = -sum(inv[i][k] * et[k][j] for k in range(N))
            assert x.denominator == 1, "Euler matrix is not unimodular"
            row.append(int(x))
        rows.append(tuple(row))
    return tuple(rows)


# Phi = -E^{-1} E^T, the unique map with <x, y> = -<y, Phi x>.
COXETER_MATRIX: Matrix = _coxeter_matrix()


def add(*vs: Vector) -> Vector:
    return tuple(sum(c) for c in zip(*vs))


def sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def scale(k: int, v: Vector) -> Vector:
    return tuple(k * a for a in v)


def euler(x: Sequence[int], y: Sequence[int]) -> int:
    """The Euler form ``x^T E y``."""
    return sum(x[i] * sum(EULER_MATRIX[i][j] * y[j] for j in range(i, N)) for i in range(N) if x[i])


def coxeter(v: Sequence[int]) -> Vector:
    return tuple(sum(row[j] * v[j] for j in range(N)) for row in COXETER_MATRIX)


def rank(v: Sequence[int]) -> int:
    return euler(v, HINF)


def degree(v: Sequence[int]) -> int:
    return euler(H0, v)


def is_positive(v: Sequence[int]) -> bool:
    r = rank(v)
    return r > 0 or (r == 0 and degree(v) > 0)


def slope_of(v: Sequence[int]) -> Slope:
    if not is_positive(v):
        raise LatticeError(f"slope is defined for positive vectors only, got {tuple(v)}")
    return normalize(degree(v), rank(v))


def tau_orbit(v: Sequence[int]) -> list[Vector]:
    v = tuple(v)
    orbit = [v]
    cur = coxeter(v)
    while cur != v:
        orbit.append(cur)
        cur = coxeter(cur)
    return orbit


def h_vector(q: Slope) -> Vector:
    """The minimal isotropic vector ``b(q) h_0 + a(q) h_inf`` of slope ``q``."""
    return add(scale(q.b, H0), scale(q.a, HINF))


def quasi_length(v: Sequence[int]) -> int:
    """The multiplier ``m`` with ``sum(tau_orbit(v)) == m * h_{slope(v)}``."""
    total = add(*tau_orbit(v))
    h = h_vector(slope_of(v))
    k = next(i for i, c in enumerate(h) if c != 0)
    m, rem = divmod(total[k], h[k])
    if rem or scale(m, h) != total or m <= 0:
        raise LatticeError(f"orbit sum of {tuple(v)} is not a positive multiple of h_q")
    return m


def parse_vector(text: str) -> Vector:
    parts = [p for p in text.replace("(", "").replace(")", "").split(",")]
    try:
        v = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise LatticeError(f"cannot parse vector {text!r}") from exc
    if len(v) != N:
        raise LatticeError(f"expected {N} coordinates, got {len(v)}")
    return v


def format_vector(v: Sequence[int]) -> str:
    return ",".join(str(x) for x in v)

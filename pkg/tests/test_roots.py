import itertools

import pytest
from hypothesis import given, settings, strategies as st

from tubular import lattice as lat
from tubular.roots import (
    H, H_PLUS, I_U, J_U, K_U, ONE_U, NotSchurError, QuatUnit, RootIndex, compatible,
    compatible_generic, compatible_table, compatible_vectors, enumerate_schur, in_coset,
    is_isotropic_schur, is_real_schur, parse_root_index, parse_unit, recognize, root_vector,
    vector_of,
)
from tubular.slopes import INF, MINUS_ONE, ONE, ZERO, Slope, parse_slope
from conftest import roots_st, slopes_st, units_st

# transcription of the basic table, kept separate from the library copy
BASIC = {
    (ZERO, "1"): (0, 0, 1, 0, 1, 0), (ONE, "1"): (1, 0, 1, 1, 1, 0), (INF, "1"): (1, 0, 0, 1, 0, 0),
    (ZERO, "i"): (-1, 0, 0, 0, 0, 0), (ONE, "i"): (0, 1, 1, 1, 1, 0), (INF, "i"): (1, 1, 1, 1, 1, 0),
    (ZERO, "j"): (0, 0, 1, 0, 0, 1), (ONE, "j"): (0, 0, 1, 0, 0, 0), (INF, "j"): (0, 0, 0, 0, 0, -1),
    (ZERO, "k"): (0, 1, 1, 1, 1, 1), (ONE, "k"): (1, 1, 2, 1, 1, 1), (INF, "k"): (1, 0, 1, 0, 0, 0),
}


def test_quaternion_relations():
    i, j, k = I_U, J_U, K_U
    assert i * j == k and j * i == -k
    assert j * k == i and k * j == -i
    assert k * i == j and i * k == -j
    assert i * i == j * j == k * k == -ONE_U


@given(units_st, units_st, units_st)
def test_quaternion_associative(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(units_st)
def test_quaternion_inverse(x):
    inv = [y for y in H if x * y == ONE_U]
    assert len(inv) == 1 and inv[0] * x == ONE_U


@given(units_st, units_st)
def test_cosets_partition(x, y):
    # H+ x and -H+ x split H
    assert in_coset(y, 1, x) != in_coset(y, -1, x)


def test_parse_unit():
    assert parse_unit("-k") == -K_U
    assert parse_unit("1") == ONE_U and parse_unit("+i") == I_U
    with pytest.raises(ValueError):
        parse_unit("q")


@pytest.mark.parametrize("q", [ZERO, ONE, INF])
@pytest.mark.parametrize("axis", "1ijk")
def test_basic_table(q, axis):
    x = parse_unit(axis)
    assert root_vector(q, x) == BASIC[q, axis]
    assert root_vector(q, -x) == lat.sub(lat.h_vector(q), BASIC[q, axis])


def test_frozen_vectors():
    # type inf: h_inf - v_inf^k + 2 h_0 + 3 h_inf
    assert root_vector(Slope(7, 4), -K_U) == (3, 4, 5, 6, 2, 2)
    assert root_vector(MINUS_ONE, ONE_U) == (0, -1, 0, 0, 1, 0)


def test_recognize_examples():
    assert recognize((0, 0, 1, 0, 1, 0)) == RootIndex(ZERO, ONE_U)
    assert recognize(lat.H0) is None
    # same form and slope as a root, but quasi-length 2
    assert recognize(lat.add((0, 0, 1, 0, 1, 0), lat.H0)) is None
    assert not is_real_schur(lat.add((0, 0, 1, 0, 1, 0), lat.H0))


def test_isotropic():
    assert is_isotropic_schur(lat.H0)
    assert is_isotropic_schur(lat.H1)
    assert is_isotropic_schur(lat.h_vector(Slope(-3, 5)))
    assert not is_isotropic_schur(lat.scale(2, lat.H0))
    assert not is_isotropic_schur((0, 0, 1, 0, 1, 0))


def test_root_index_text():
    r = parse_root_index("7/4:-k")
    assert r == RootIndex(Slope(7, 4), -K_U) and str(r) == "7/4:-k"
    assert str(parse_root_index("inf:j")) == "∞:j"


def test_eight_roots_per_slope():
    rs = enumerate_schur(3)
    by_slope = {}
    for r in rs:
        by_slope.setdefault(r.q, set()).add(vector_of(r))
    assert all(len(vs) == 8 for vs in by_slope.values())


@given(roots_st())
def test_root_round_trip(r):
    v = vector_of(r)
    assert lat.euler(v, v) == 1
    assert lat.slope_of(v) == r.q
    assert recognize(v) == r
    assert is_real_schur(v)


@given(roots_st())
def test_pair_sums_to_h(r):
    assert lat.add(vector_of(r), vector_of(-r)) == lat.h_vector(r.q)


@given(roots_st())
def test_coxeter_swaps_within_slope(r):
    # the translation acts by v -> h_q - v on every root here
    assert lat.coxeter(vector_of(r)) == vector_of(-r)


@given(roots_st(12), roots_st(12))
def test_compatible_symmetric(a, b):
    assert compatible(a, b) == compatible(b, a)


@given(roots_st(12), roots_st(12))
@settings(max_examples=200)
def test_three_predicates_agree(a, b):
    assert compatible(a, b) == compatible_table(a, b) == compatible_vectors(a, b)


@given(roots_st())
def test_self_compatible(r):
    assert compatible(r, r)
    assert not compatible(r, -r)


def test_examples_of_compatibility():
    assert not compatible(parse_root_index("0:1"), parse_root_index("0:-1"))
    assert compatible(parse_root_index("0:1"), parse_root_index("0:i"))
    assert compatible(parse_root_index("0:1"), parse_root_index("2:1"))
    assert not compatible(parse_root_index("0:1"), parse_root_index("4:1"))


def test_generic_rejects_non_schur():
    with pytest.raises(NotSchurError):
        compatible_generic(lat.H0, (0, 0, 1, 0, 1, 0))


def test_two_sided_orthogonality_on_small_range():
    rs = enumerate_schur(4)
    for a, b in itertools.product(rs, rs):
        va, vb = vector_of(a), vector_of(b)
        if lat.euler(va, vb) == 0 and lat.euler(vb, va) == 0:
            assert a.q == b.q and b.x not in (a.x, -a.x)

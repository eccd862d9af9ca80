import pytest
from hypothesis import given, strategies as st

from tubular import lattice as lat
from tubular.lattice import COXETER_MATRIX, EULER_MATRIX, H0, H1, HINF, LatticeError
from tubular.slopes import Slope, ZERO

vec = st.tuples(*[st.integers(-6, 6)] * 6)

COXETER_FROZEN = (
    (-1, 0, 1, 1, -1, -1),
    (0, -1, 1, 1, -1, -1),
    (-1, -1, 1, 2, -1, -1),
    (-1, -1, 2, 1, -1, -1),
    (-1, -1, 1, 1, -1, 0),
    (-1, -1, 1, 1, 0, -1),
)


def test_anchor_pairings():
    assert lat.euler(H0, HINF) == 2
    assert lat.euler(HINF, H0) == -2
    assert lat.euler(H0, H0) == lat.euler(HINF, HINF) == 0


def test_euler_matrix_is_unimodular():
    assert lat.determinant(EULER_MATRIX) == 1


def test_coxeter_matrix_frozen():
    assert COXETER_MATRIX == COXETER_FROZEN


def test_coxeter_fixes_isotropic_generators():
    assert lat.coxeter(H0) == H0
    assert lat.coxeter(HINF) == HINF
    assert lat.coxeter(H1) == H1


def test_rank_and_degree_of_generators():
    assert (lat.rank(H0), lat.degree(H0)) == (2, 0)
    assert (lat.rank(HINF), lat.degree(HINF)) == (0, 2)


def test_quasi_length_of_simple_root():
    v = (0, 0, 1, 0, 1, 0)
    assert lat.coxeter(v) == lat.sub(H0, v)
    assert lat.tau_orbit(v) == [v, lat.sub(H0, v)]
    assert lat.quasi_length(v) == 1
    assert lat.slope_of(v) == ZERO


def test_h_vector():
    assert lat.h_vector(Slope(1, 1)) == H1
    assert lat.h_vector(Slope(1, 0)) == HINF


def test_slope_of_rejects_non_positive():
    with pytest.raises(LatticeError):
        lat.slope_of(lat.scale(-1, H0))


def test_parse_vector():
    assert lat.parse_vector("(1,0,-1,2,0,0)") == (1, 0, -1, 2, 0, 0)
    with pytest.raises(LatticeError):
        lat.parse_vector("1,2")
    with pytest.raises(LatticeError):
        lat.parse_vector("a,b,c,d,e,f")


def test_exact_inverse_round_trip():
    inv = lat.exact_inverse(EULER_MATRIX)
    for i in range(6):
        for j in range(6):
            assert sum(EULER_MATRIX[i][k] * inv[k][j] for k in range(6)) == int(i == j)


@given(vec, vec)
def test_coxeter_defining_identity(x, y):
    # <x, y> = -<y, Phi x>
    assert lat.euler(x, y) == -lat.euler(y, lat.coxeter(x))


@given(vec, vec)
def test_coxeter_is_an_isometry(x, y):
    assert lat.euler(lat.coxeter(x), lat.coxeter(y)) == lat.euler(x, y)


@given(vec)
def test_coxeter_is_an_involution(x):
    assert lat.coxeter(lat.coxeter(x)) == x


@given(vec)
def test_coxeter_preserves_rank_and_degree(x):
    y = lat.coxeter(x)
    assert (lat.rank(y), lat.degree(y)) == (lat.rank(x), lat.degree(x))

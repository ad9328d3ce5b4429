import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hypjohnson.symplectic import (
    BiVector,
    a,
    b,
    basis_label,
    bivector_pairing,
    check_genus,
    gram_matrix,
    pairing,
    project_hat_theta,
    project_mod_theta,
    sym_product,
    symsq_monomials,
    theta,
    theta_I,
    v_basis,
    v_coordinates,
    wedge,
    wedge_monomials,
)
from oracles import omega


@pytest.mark.parametrize("g", [2, 3, 4, 5])
def test_gram_matrix_matches_interleaved_form(g):
    G = gram_matrix(g)
    assert G == [[omega(s, t) for t in range(2 * g)] for s in range(2 * g)]


def test_basis_labels():
    assert [basis_label(s) for s in range(4)] == ["a1", "b1", "a2", "b2"]
    assert (a(2), b(2)) == (2, 3)


def test_pairing_examples():
    assert pairing({a(1): 1}, {b(1): 1}) == 1
    assert pairing({b(1): 1}, {a(1): 1}) == -1
    assert pairing({a(1): 1}, {a(2): 1}) == 0


@pytest.mark.parametrize("bad", [1, 0, -3, 2.5, "2"])
def test_genus_validation(bad):
    with pytest.raises((ValueError, TypeError)):
        check_genus(bad)


def test_wedge_is_antisymmetric():
    assert wedge(3, 1) == wedge(1, 3) * -1
    assert wedge(2, 2) == {}


def test_theta_I_rejects_out_of_range():
    with pytest.raises(ValueError):
        theta_I(2, [3])


@pytest.mark.parametrize("g", [2, 3, 4])
def test_theta_split(g):
    full = set(range(1, g + 1))
    for r in range(g + 1):
        for I in itertools.combinations(sorted(full), r):
            assert theta_I(g, I) + theta_I(g, full - set(I)) == theta(g)


@pytest.mark.parametrize("g", [2, 3, 4])
def test_projections(g):
    th = theta(g)
    assert bivector_pairing(th) == g
    assert project_hat_theta(th, g) == {}
    assert project_mod_theta(th, g) == {}
    for m in wedge_monomials(g):
        x = BiVector({m: 1})
        assert project_mod_theta(project_hat_theta(x, g), g) == project_mod_theta(x, g)
        assert bivector_pairing(project_hat_theta(x, g)) == 0


def test_v_basis_size():
    for g in (2, 3, 4, 5):
        assert len(v_basis(g)) == g * (2 * g - 1) - 1


def test_v_coordinates_of_last_handle():
    # a_g ^ b_g = theta - sum_{i<g} a_i ^ b_i
    g = 3
    coords = v_coordinates(wedge(a(3), b(3)), g)
    expected = [-1 if m in ((a(1), b(1)), (a(2), b(2))) else 0 for m in v_basis(g)]
    assert coords == expected


def test_symmetric_square_convention():
    x = BiVector({(0, 1): 1, (2, 3): 1})
    sq = sym_product(x, x)
    assert sq == {((0, 1), (0, 1)): 1, ((2, 3), (2, 3)): 1, ((0, 1), (2, 3)): 2}
    assert len(symsq_monomials(2)) == 21


bivectors = st.dictionaries(
    st.tuples(st.integers(0, 5), st.integers(0, 5)).filter(lambda p: p[0] < p[1]),
    st.integers(-3, 3).filter(bool),
    max_size=6,
)


@settings(max_examples=100, deadline=None)
@given(bivectors, bivectors)
def test_sym_product_commutes_and_is_bilinear(x, y):
    x, y = BiVector(x), BiVector(y)
    assert sym_product(x, y) == sym_product(y, x)
    assert sym_product(x + y, x) == sym_product(x, x) + sym_product(y, x)


@settings(max_examples=100, deadline=None)
@given(bivectors)
def test_hat_then_tilde_equals_tilde(x):
    x = BiVector(x)
    assert project_mod_theta(project_hat_theta(x, 3), 3) == project_mod_theta(x, 3)
    assert project_hat_theta(project_hat_theta(x, 3), 3) == project_hat_theta(x, 3)

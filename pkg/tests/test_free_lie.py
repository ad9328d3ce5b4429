import random

import pytest
from hypothesis import given, settings, strategies as st

from hypjohnson.free_lie import (
    LieElement,
    bracket,
    ideal_component,
    is_lyndon,
    letter,
    lie_to_tensor,
    lyndon_basis,
    lyndon_words,
    quotient_space,
    reduce_mod_ideal,
    standard_factorization,
    tensor_to_lie,
    theta_lie,
    witt_dim,
)
from oracles import brute_lyndon, lie_tensor, necklace_count, surface_lie_dim, t_comm


@pytest.mark.parametrize("n,k", [(2, 4), (3, 3), (4, 4), (4, 5), (6, 3)])
def test_lyndon_words_match_brute_force(n, k):
    assert lyndon_words(n, k) == brute_lyndon(n, k)


@pytest.mark.parametrize("n,k", [(4, 1), (4, 2), (4, 3), (6, 4), (8, 4), (10, 5)])
def test_witt_dimension(n, k):
    assert witt_dim(n, k) == necklace_count(n, k)
    assert len(lyndon_words(n, k)) == witt_dim(n, k)


def test_free_lie_degree_four_genus_two():
    # 2g = 4 letters: 4, 6, 20, 60
    assert [len(lyndon_basis(k, 2)) for k in range(1, 5)] == [4, 6, 20, 60]


def test_standard_factorization():
    assert standard_factorization((0, 0, 1)) == ((0,), (0, 1))
    assert standard_factorization((0, 1, 1)) == ((0, 1), (1,))
    assert standard_factorization((0, 1, 0, 2)) == ((0, 1), (0, 2))
    assert is_lyndon((0, 1)) and not is_lyndon((1, 0))


@pytest.mark.parametrize("k", [2, 3, 4])
def test_lyndon_expansion_matches_oracle(k):
    for w in lyndon_basis(k, 2).words:
        assert dict(lie_to_tensor({w: 1})) == lie_tensor({w: 1})


def test_bracket_of_letters():
    assert bracket(letter(1), letter(0)) == {(0, 1): -1}
    assert bracket(letter(0), letter(0)) == {}


def _random_lie(rng, g, k, terms=3):
    words = lyndon_basis(k, g).words
    return LieElement({rng.choice(words): rng.randint(-2, 2) or 1 for _ in range(terms)})


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 2), st.integers(1, 2))
def test_bracket_matches_tensor_commutator(seed, k1, k2):
    rng = random.Random(seed)
    x, y = _random_lie(rng, 2, k1), _random_lie(rng, 2, k2)
    assert dict(lie_to_tensor(bracket(x, y))) == t_comm(lie_tensor(x), lie_tensor(y))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_jacobi_and_antisymmetry(seed):
    rng = random.Random(seed)
    x, y, z = (_random_lie(rng, 2, rng.randint(1, 2)) for _ in range(3))
    assert bracket(x, y) == -bracket(y, x)
    jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
    assert jac == {}


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_bracket_is_bilinear(seed):
    rng = random.Random(seed)
    x, y, z = (_random_lie(rng, 3, 2) for _ in range(3))
    c = rng.randint(-3, 3)
    assert bracket(x * c + y, z) == bracket(x, z) * c + bracket(y, z)


def test_tensor_round_trip_and_rejection():
    x = bracket(letter(0), bracket(letter(1), letter(2)))
    assert tensor_to_lie(lie_to_tensor(x)) == x
    with pytest.raises(ValueError):
        tensor_to_lie({(0, 1): 1})


@pytest.mark.parametrize("g", [2, 3, 4])
def test_ideal_dimensions(g):
    # J_2 = <theta>, J_3 = [theta, H], J_4 = dim L_4 - dim p(-4)
    assert ideal_component(2, g).dim == 1
    assert ideal_component(3, g).dim == 2 * g
    assert ideal_component(4, g).dim == witt_dim(2 * g, 4) - surface_lie_dim(g, 4)


@pytest.mark.parametrize("g", [2, 3, 4])
@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_quotient_dimensions(g, m):
    assert quotient_space(m, g).dim == surface_lie_dim(g, m)


def test_quotient_dimensions_genus_two_values():
    assert [quotient_space(m, 2).dim for m in (1, 2, 3, 4)] == [4, 5, 16, 45]


def test_theta_reduces_to_zero():
    assert reduce_mod_ideal(theta_lie(3), 3) == {}
    x = bracket(theta_lie(3), letter(4))
    assert reduce_mod_ideal(x, 3) == {}
    assert reduce_mod_ideal(letter(2), 3) == letter(2)


def test_ideal_component_requires_degree_two():
    with pytest.raises(ValueError):
        ideal_component(1, 2)

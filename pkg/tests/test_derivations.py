import itertools
import random
from fractions import Fraction

import pytest

from hypjohnson.derivations import (
    annihilation_residue,
    der_basis,
    j_theta,
    p_H,
    p_lambda2,
    phi,
    pi_hat,
    pi_lambda2,
    pi_phi_closed_form,
    reduce_derivation,
    residue_matrix_rank,
    v_prime_residual,
)
from hypjohnson.free_lie import bracket, letter, lie_to_tensor, theta_I_lie
from hypjohnson.symplectic import (
    BiVector,
    SymSq,
    basis_pair,
    project_mod_theta,
    sym_product,
    symsq_monomials,
    theta,
    theta_I,
    v_basis,
    wedge,
)
from oracles import phi_tensor, surface_lie_dim


@pytest.mark.parametrize("g", [2, 3])
def test_phi_matches_defining_formula(g):
    for mu, nu in symsq_monomials(g)[::3]:
        d = phi(SymSq({(mu, nu): 1}), g)
        for x in range(2 * g):
            expect = phi_tensor(*mu, *nu, x)
            assert dict(lie_to_tensor(d(x))) == expect


def test_p_H_contracts_first_pair():
    assert p_H({(0, 1, 2): 3}) == {2: 3}
    assert p_H({(1, 0, 2): 1}) == {2: -1}
    assert p_H({(0, 2, 1): 1}) == {}


def test_p_lambda2_of_identity_like_map():
    # gamma(x) = a1 (x) b1 (x) x gives sum a_i ^ x(b_i) - b_i ^ x(a_i) = 2 theta
    g = 2
    gamma = {x: {(0, 1, x): 1} for x in range(2 * g)}
    assert p_lambda2(gamma, g) == theta(g) * 2


def test_pi_lambda2_needs_degree_two():
    d = phi(SymSq({((0, 1), (0, 1)): 1}), 2)
    d.m = 1
    with pytest.raises(ValueError):
        pi_lambda2(d)


@pytest.mark.parametrize("g", [2, 3])
def test_closed_form_on_every_monomial(g):
    for mon in symsq_monomials(g):
        s = SymSq({mon: 1})
        assert pi_lambda2(phi(s, g)) == pi_phi_closed_form(s, g)


@pytest.mark.parametrize("g", [2, 3, 4])
def test_theta_J_square_projects_to_multiple(g):
    # pi(phi(theta_J^2)) = -(8|J| + 4) theta_J, from the closed form
    for r in range(1, g + 1):
        for J in itertools.combinations(range(1, g + 1), r):
            t = theta_I(g, J)
            assert pi_lambda2(phi(sym_product(t, t), g)) == t * -(8 * r + 4)


@pytest.mark.parametrize("g", [2, 3])
def test_phi_lands_in_der2(g):
    for mon in symsq_monomials(g):
        assert annihilation_residue(phi(SymSq({mon: 1}), g)) == {}


def test_non_derivation_has_residue():
    from hypjohnson.derivations import DerivationCandidate

    d = DerivationCandidate(2, 2, {0: bracket(letter(0), bracket(letter(0), letter(1)))})
    assert annihilation_residue(d) != {}


@pytest.mark.parametrize("g", [2, 3, 4])
def test_theta_I_law(g):
    for r in range(g + 1):
        for I in itertools.combinations(range(1, g + 1), r):
            t = theta_I(g, I)
            d = phi(sym_product(t, t), g)
            for x in range(2 * g):
                if basis_pair(x) in I:
                    assert d(x) == bracket(theta_I_lie(g, I), letter(x)) * -2
                else:
                    assert d(x) == {}


@pytest.mark.parametrize("g", [2, 3, 4])
def test_j_theta_constant(g):
    for m in v_basis(g):
        v = BiVector({m: 1})
        assert project_mod_theta(pi_hat(j_theta(v, g), g), g) == v * (-4 * (g + 1))


def test_v_prime_residual_is_killed():
    g, rng = 3, random.Random(3)
    mons = symsq_monomials(g)
    for _ in range(10):
        s = SymSq({rng.choice(mons): rng.randint(1, 3) for _ in range(4)})
        assert pi_hat(v_prime_residual(s, g), g) == {}


def test_phi_theta_squared_vanishes_on_p():
    for g in (2, 3):
        th = theta(g)
        assert reduce_derivation(phi(sym_product(th, th), g)).is_zero()
        assert not phi(sym_product(th, th), g).is_zero()


@pytest.mark.parametrize("g,m", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_residue_map_surjective_and_kernel(g, m):
    rank, ncols, target = residue_matrix_rank(g, m)
    assert ncols == 2 * g * surface_lie_dim(g, m + 1)
    assert target == surface_lie_dim(g, m + 2)
    assert rank == target
    assert len(der_basis(g, m)) == ncols - rank


def test_der_basis_elements_kill_theta_mod_ideal():
    for d in der_basis(2, 2)[:8]:
        assert annihilation_residue(d, reduce=True) == {}


def test_derivation_arithmetic():
    g = 2
    s = SymSq({((0, 1), (0, 2)): 1})
    d = phi(s, g)
    assert (d - d).is_zero()
    assert d * 2 == d + d
    assert phi(s * Fraction(1, 2), g) * 2 == d

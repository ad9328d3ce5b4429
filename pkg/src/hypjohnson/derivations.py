"""Degree -m derivations, the map phi on S^2 Lambda^2 H, and the projections onto V.

A derivation of degree -m is determined by the images of the 2g letters in
L_{m+1}(H). It lies in Der_{-m} p when it kills theta, i.e. when
sum_i [d(a_i), b_i] + [a_i, d(b_i)] vanishes (in L_{m+2}, or in p(-m-2) for
derivations of the quotient).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .exact_linalg import RowEchelon
from .free_lie import (
    LieElement,
    bracket,
    letter,
    lie_to_tensor,
    quotient_space,
    reduce_mod_ideal,
)
from .symplectic import (
    BiVector,
    HVector,
    SymSq,
    Tensor,
    a,
    b,
    check_genus,
    pair,
    partner,
    project_hat_theta,
    project_mod_theta,
    sym_product,
    theta,
    wedge,
)

__all__ = [
    "DerivationCandidate",
    "annihilation_residue",
    "phi",
    "p_H",
    "p_lambda2",
    "pi_lambda2",
    "pi_phi_closed_form",
    "j_theta",
    "pi_hat",
    "v_prime_residual",
    "reduce_derivation",
    "residue_matrix_rank",
    "der_basis",
    "der2_basis",
]


@dataclass(eq=False)
class DerivationCandidate:
    """Letter images of a degree -m derivation of L(H)."""

    g: int
    m: int
    images: dict[int, LieElement] = field(default_factory=dict)
    reduced: bool = False

    def __call__(self, s: int) -> LieElement:
        return self.images.get(s, LieElement())

    def is_zero(self) -> bool:
        return not any(self.images.values())

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __mul__(self, c):
        return DerivationCandidate(self.g, self.m, {s: x * c for s, x in self.images.items()}, self.reduced)

    __rmul__ = __mul__

    def _combine(self, other, sign):
        if (self.g, self.m) != (other.g, other.m):
            raise ValueError("derivations of different genus or degree")
        imgs = {s: self(s) + other(s) * sign for s in range(2 * self.g)}
        return DerivationCandidate(self.g, self.m, {s: x for s, x in imgs.items() if x},
                                   self.reduced or other.reduced)

    def __eq__(self, other):
        if not isinstance(other, DerivationCandidate):
            return NotImplemented
        return (self.g, self.m) == (other.g, other.m) and all(
            self(s) == other(s) for s in range(2 * self.g))


def annihilation_residue(d: DerivationCandidate, reduce: bool = False) -> LieElement:
    """d(theta) = sum_i [d(a_i), b_i] + [a_i, d(b_i)], optionally reduced mod J_{m+2}."""
    out = LieElement()
    for i in range(1, d.g + 1):
        out.iadd(bracket(d(a(i)), letter(b(i))))
        out.iadd(bracket(letter(a(i)), d(b(i))))
    if reduce:
        return reduce_mod_ideal(out, d.g, d.m + 2)
    return out


@lru_cache(maxsize=None)
def _phi_term(u: int, s: int, t: int) -> LieElement:
    """[u, [s, t]] on letters."""
    return bracket(letter(u), bracket(letter(s), letter(t)))


def _phi_monomial(mu: tuple[int, int], nu: tuple[int, int]) -> dict[int, LieElement]:
    """Letter images of phi((u1^v1)(u2^v2)).

    x -> <u1,x>[v1,[u2,v2]] + <v1,x>[[u2,v2],u1] + <u2,x>[v2,[u1,v1]] + <v2,x>[[u1,v1],u2]
    """
    (u1, v1), (u2, v2) = mu, nu
    out: dict[int, LieElement] = {}

    def put(src, coeff, term):
        x = partner(src)
        c = pair(src, x) * coeff
        out.setdefault(x, LieElement()).iadd(term, c)

    put(u1, 1, _phi_term(v1, u2, v2))
    put(v1, -1, _phi_term(u1, u2, v2))
    put(u2, 1, _phi_term(v2, u1, v1))
    put(v2, -1, _phi_term(u2, u1, v1))
    return out


def phi(s: Mapping, g: int) -> DerivationCandidate:
    """phi: S^2 Lambda^2 H -> Hom(H, L_3(H)), extended linearly."""
    check_genus(g)
    images: dict[int, LieElement] = {}
    for (mu, nu), c in s.items():
        for x, y in _phi_monomial(mu, nu).items():
            images.setdefault(x, LieElement()).iadd(y, c)
    return DerivationCandidate(g, 2, {x: y for x, y in images.items() if y})


def p_H(t: Mapping[tuple[int, ...], Fraction]) -> HVector:
    """u(x)v(x)w -> <u, v> w."""
    out = HVector()
    for (u, v, w), c in t.items():
        p = pair(u, v)
        if p:
            out.add_term(w, p * c)
    return out


def p_lambda2(gamma: Mapping[int, Mapping], g: int) -> BiVector:
    """gamma -> sum_i a_i ^ p_H gamma(b_i) - b_i ^ p_H gamma(a_i)."""
    out = BiVector()
    for i in range(1, g + 1):
        for s, c in p_H(gamma.get(b(i), {})).items():
            out.iadd(wedge(a(i), s), c)
        for s, c in p_H(gamma.get(a(i), {})).items():
            out.iadd(wedge(b(i), s), -c)
    return out


def pi_lambda2(d: DerivationCandidate) -> BiVector:
    """Der_{-2} -> Hom(H, L_3) -> Hom(H, (x)^3 H) -> Lambda^2 H."""
    if d.m != 2:
        raise ValueError("pi_lambda2 is defined on degree -2 derivations")
    return p_lambda2({s: lie_to_tensor(x) for s, x in d.images.items()}, d.g)


def _closed_form_monomial(mu, nu) -> BiVector:
    (u1, v1), (u2, v2) = mu, nu
    out = BiVector()
    out.iadd(wedge(v2, u2), 4 * pair(u1, v1))
    out.iadd(wedge(u1, v1), 4 * pair(v2, u2))
    out.iadd(wedge(v1, u2), 2 * pair(u1, v2))
    out.iadd(wedge(u1, v2), 2 * pair(v1, u2))
    out.iadd(wedge(v2, v1), 2 * pair(u1, u2))
    out.iadd(wedge(u1, u2), 2 * pair(v2, v1))
    return out


def pi_phi_closed_form(s: Mapping, g: int) -> BiVector:
    """Closed form of pi_lambda2(phi(s)), evaluated monomial by monomial."""
    out = BiVector()
    for (mu, nu), c in s.items():
        out.iadd(_closed_form_monomial(mu, nu), c)
    return out


def j_theta(v: BiVector, g: int) -> SymSq:
    """theta * theta_hat(v), viewing the class of v inside Lambda^2 H."""
    return sym_product(theta(g), project_hat_theta(v, g))


def pi_hat(s: Mapping, g: int) -> BiVector:
    """theta_hat o pi_lambda2 o phi."""
    return project_hat_theta(pi_lambda2(phi(s, g)), g)


def v_prime_residual(s: SymSq, g: int) -> SymSq:
    """s - (1/(-4(g+1))) j_theta(pi_hat(s)); its image under pi_hat is zero."""
    corr = j_theta(project_mod_theta(pi_hat(s, g), g), g)
    return s + corr * Fraction(1, 4 * (g + 1))


def reduce_derivation(d: DerivationCandidate) -> DerivationCandidate:
    """Images reduced modulo J_{m+1}: the derivation of p it induces."""
    imgs = {s: reduce_mod_ideal(x, d.g, d.m + 1) for s, x in d.images.items()}
    return DerivationCandidate(d.g, d.m, {s: x for s, x in imgs.items() if x}, True)


def _residue_columns(g: int, m: int):
    """Columns of Hom(H, p(-1-m)) -> p(-2-m), d -> d(theta) mod J_{m+2}.

    Column (s, w) is the derivation sending letter s to P(w) and the other
    letters to zero, w running over the quotient coordinates of p(-1-m).
    """
    src = quotient_space(m + 1, g)
    dst = quotient_space(m + 2, g)
    labels, cols = [], []
    for s in range(2 * g):
        x = partner(s)
        sign = pair(s, x)
        for w in src.words:
            img = LieElement({w: 1})
            # s = a_i contributes [d(a_i), b_i]; s = b_i contributes [a_i, d(b_i)] = -[d(b_i), a_i]
            res = bracket(img, letter(x)) * sign
            labels.append((s, w))
            cols.append(dst.coordinates(res))
    return labels, cols, src.dim, dst.dim


@lru_cache(maxsize=None)
def _residue_echelon(g: int, m: int):
    labels, cols, _, dst_dim = _residue_columns(g, m)
    # kernel of the map = left kernel of the column list viewed as rows
    rows = [{r: c for r, c in col.items()} for col in cols]
    transposed: list[dict[int, Fraction]] = [{} for _ in range(dst_dim)]
    for j, col in enumerate(rows):
        for r, c in col.items():
            transposed[r][j] = c
    return labels, RowEchelon(transposed, len(labels)), dst_dim


def residue_matrix_rank(g: int, m: int) -> tuple[int, int, int]:
    """(rank, number of columns, dim p(-2-m)) of the residue map on Hom(H, p(-1-m))."""
    labels, ech, dst_dim = _residue_echelon(check_genus(g), m)
    return ech.rank, len(labels), dst_dim


def der_basis(g: int, m: int) -> list[DerivationCandidate]:
    """Exact basis of Der_{-m} p: kernel of the residue map on Hom(H, p(-1-m))."""
    labels, ech, _ = _residue_echelon(check_genus(g), m)
    out = []
    for k in ech.kernel():
        imgs: dict[int, LieElement] = {}
        for j, c in k.items():
            s, w = labels[j]
            imgs.setdefault(s, LieElement()).add_term(w, c)
        out.append(DerivationCandidate(g, m, imgs, True))
    return out


def der2_basis(g: int) -> list[DerivationCandidate]:
    return der_basis(g, 2)

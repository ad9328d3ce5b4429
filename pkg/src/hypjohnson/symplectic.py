"""The symplectic space H = Q^{2g} and the constructions built on it.

Basis convention: index ``2k`` is ``a_{k+1}`` and ``2k+1`` is ``b_{k+1}``, so
the ordered basis is a1, b1, a2, b2, ... and <a_i, b_i> = 1. The same integer
labels are the letters of the free Lie algebra (see :mod:`free_lie`).

Elements are sparse :class:`~hypjohnson.exact_linalg.Vector` subclasses:

* :class:`HVector` keyed by basis index,
* :class:`BiVector` keyed by ``(s, t)`` with ``s < t`` for ``e_s ^ e_t``,
* :class:`SymSq` keyed by an ordered pair of wedge monomials ``(mu, nu)`` with
  ``mu <= nu``, standing for the symmetric product ``mu * nu``,
* :class:`Tensor` keyed by tuples of basis indices.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Sequence

from .exact_linalg import Vector

__all__ = [
    "HVector",
    "BiVector",
    "SymSq",
    "Tensor",
    "check_genus",
    "a",
    "b",
    "partner",
    "basis_pair",
    "basis_label",
    "pair",
    "pairing",
    "gram_matrix",
    "wedge",
    "bivector_pairing",
    "theta",
    "theta_I",
    "project_mod_theta",
    "project_hat_theta",
    "v_basis",
    "v_coordinates",
    "wedge_to_tensor",
    "antisymmetrize",
    "sym_product",
    "wedge_monomials",
    "symsq_monomials",
]


class HVector(Vector):
    pass


class BiVector(Vector):
    pass


class SymSq(Vector):
    pass


class Tensor(Vector):
    pass


def check_genus(g: int) -> int:
    if not isinstance(g, int) or g < 2:
        raise ValueError(f"genus must be an integer >= 2, got {g!r}")
    return g


def a(i: int) -> int:
    """Basis index of a_i (1-based handle number)."""
    return 2 * (i - 1)


def b(i: int) -> int:
    """Basis index of b_i (1-based handle number)."""
    return 2 * (i - 1) + 1


def partner(s: int) -> int:
    """The index t with <e_s, e_t> = +-1."""
    return s ^ 1


def basis_pair(s: int) -> int:
    """1-based handle number of basis index ``s``."""
    return s // 2 + 1


def basis_label(s: int) -> str:
    return ("a" if s % 2 == 0 else "b") + str(basis_pair(s))


def pair(s: int, t: int) -> int:
    """<e_s, e_t> on basis indices."""
    if t == s + 1 and s % 2 == 0:
        return 1
    if s == t + 1 and t % 2 == 0:
        return -1
    return 0


def pairing(u, v) -> Fraction:
    """Symplectic form on two HVectors (or basis indices)."""
    if isinstance(u, int):
        u = HVector({u: 1})
    if isinstance(v, int):
        v = HVector({v: 1})
    total = Fraction(0)
    for s, x in u.items():
        y = v.get(partner(s))
        if y:
            total += pair(s, partner(s)) * x * y
    return total


def gram_matrix(g: int) -> list[list[int]]:
    n = 2 * check_genus(g)
    return [[pair(s, t) for t in range(n)] for s in range(n)]


def wedge(s: int, t: int) -> BiVector:
    """e_s ^ e_t as a BiVector in normal form."""
    if s == t:
        return BiVector()
    return BiVector({(s, t): 1}) if s < t else BiVector({(t, s): -1})


def wedge_vectors(u, v) -> BiVector:
    out = BiVector()
    for s, x in u.items():
        for t, y in v.items():
            out.iadd(wedge(s, t), x * y)
    return out


def bivector_pairing(x: BiVector) -> Fraction:
    """Linear extension of u^v -> <u, v>."""
    return sum((c * pair(s, t) for (s, t), c in x.items()), Fraction(0))


def theta_I(g: int, I: Iterable[int]) -> BiVector:
    """Sum of a_i ^ b_i over the handles i in I (1-based)."""
    check_genus(g)
    out = BiVector()
    for i in I:
        if not 1 <= i <= g:
            raise ValueError(f"handle index {i} outside 1..{g}")
        out.add_term((a(i), b(i)), 1)
    return out


def theta(g: int) -> BiVector:
    return theta_I(g, range(1, g + 1))


def project_mod_theta(x: BiVector, g: int) -> BiVector:
    """Canonical representative of x modulo <theta>: the a_g ^ b_g coefficient is zeroed."""
    c = x.get((a(g), b(g)))
    return x - theta(g) * c if c else x.copy()


def project_hat_theta(x: BiVector, g: int) -> BiVector:
    """u^v -> u^v - (<u,v>/g) theta, the projection onto the theta-complement."""
    c = bivector_pairing(x)
    return x - theta(g) * (c / g) if c else x.copy()


def wedge_monomials(g: int) -> list[tuple[int, int]]:
    n = 2 * check_genus(g)
    return list(itertools.combinations(range(n), 2))


def v_basis(g: int) -> list[tuple[int, int]]:
    """Wedge monomials spanning the canonical representatives of Lambda^2 H / <theta>."""
    last = (a(g), b(g))
    return [m for m in wedge_monomials(g) if m != last]


def v_coordinates(x: BiVector, g: int) -> list[Fraction]:
    y = project_mod_theta(x, g)
    return [y.get(m, Fraction(0)) for m in v_basis(g)]


def symsq_monomials(g: int) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    mons = wedge_monomials(g)
    return list(itertools.combinations_with_replacement(mons, 2))


def sym_product(x: BiVector, y: BiVector) -> SymSq:
    """Product in S^2(Lambda^2 H); x*x gives c^2 on squares and 2 c c' on cross terms."""
    out = SymSq()
    for m, c in x.items():
        for n, d in y.items():
            out.add_term((m, n) if m <= n else (n, m), c * d)
    return out


def wedge_to_tensor(x: BiVector) -> Tensor:
    """u^v -> u(x)v - v(x)u."""
    out = Tensor()
    for (s, t), c in x.items():
        out.add_term((s, t), c)
        out.add_term((t, s), -c)
    return out


def antisymmetrize(t: Tensor) -> BiVector:
    """u(x)v -> u^v on degree-2 tensors (so wedge_to_tensor followed by this is 2 id)."""
    out = BiVector()
    for (s, u), c in t.items():
        out.iadd(wedge(s, u), c)
    return out


def hvector(coords: Sequence) -> HVector:
    return HVector(enumerate(coords))

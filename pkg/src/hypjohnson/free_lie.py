"""Free Lie algebra on 2g letters in the Lyndon basis, and the quotient by <theta>.

Letters are the basis indices of :mod:`symplectic` (a1 < b1 < a2 < b2 < ...).
A Lyndon word ``w`` stands for its standard bracketing P(w). Expanding P(w)
in the tensor algebra gives ``w`` plus strictly larger words, so any Lie
polynomial is recovered in the Lyndon basis by repeatedly peeling off its
lexicographically smallest word.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .exact_linalg import RowEchelon, Vector
from .symplectic import Tensor, a, b, check_genus

__all__ = [
    "LieElement",
    "letter",
    "is_lyndon",
    "lyndon_words",
    "lyndon_basis",
    "standard_factorization",
    "witt_dim",
    "mobius",
    "bracket",
    "lie_to_tensor",
    "tensor_to_lie",
    "theta_lie",
    "theta_I_lie",
    "IdealComponent",
    "ideal_component",
    "QuotientSpace",
    "quotient_space",
    "reduce_mod_ideal",
]

Word = tuple[int, ...]


class LieElement(Vector):
    """Homogeneous element of the free Lie algebra, keyed by Lyndon words."""

    @property
    def degree(self) -> int | None:
        for w in self:
            return len(w)
        return None

    def bracket(self, other: "LieElement") -> "LieElement":
        return bracket(self, other)


def letter(s: int) -> LieElement:
    return LieElement({(s,): 1})


def is_lyndon(w: Word) -> bool:
    n = len(w)
    return n > 0 and all(w < w[i:] + w[:i] for i in range(1, n))


def lyndon_words(n: int, k: int) -> list[Word]:
    """Lyndon words of length exactly k over letters 0..n-1, in lexicographic order (Duval)."""
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == k:
            out.append(tuple(w))
        while len(w) < k:
            w.append(w[len(w) - m])
        while w and w[-1] == n - 1:
            w.pop()
    return out


def mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def witt_dim(n: int, k: int) -> int:
    """Dimension of the degree-k part of the free Lie algebra on n letters."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    total = sum(mobius(d) * n ** (k // d) for d in range(1, k + 1) if k % d == 0)
    return total // k


@dataclass(frozen=True)
class LyndonBasis:
    n: int
    k: int
    words: tuple[Word, ...]

    @property
    def index(self) -> dict[Word, int]:
        return _index(self)

    def __len__(self):
        return len(self.words)


@lru_cache(maxsize=None)
def _index(basis: LyndonBasis) -> dict[Word, int]:
    return {w: i for i, w in enumerate(basis.words)}


@lru_cache(maxsize=None)
def _lyndon_basis(n: int, k: int) -> LyndonBasis:
    return LyndonBasis(n, k, tuple(lyndon_words(n, k)))


def lyndon_basis(k: int, g: int) -> LyndonBasis:
    """Lyndon basis of the degree-k part of L(H), H of genus g."""
    if k < 1:
        raise ValueError("degree must be >= 1")
    return _lyndon_basis(2 * check_genus(g), k)


def standard_factorization(w: Word) -> tuple[Word, Word]:
    """w = uv with v the longest proper suffix that is Lyndon."""
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise ValueError(f"{w} has no standard factorization")


def _tensor_bracket(x: Mapping[Word, Fraction], y: Mapping[Word, Fraction]) -> dict[Word, Fraction]:
    out: dict[Word, Fraction] = {}
    for u, c in x.items():
        for v, d in y.items():
            cd = c * d
            uv, vu = u + v, v + u
            out[uv] = out.get(uv, 0) + cd
            out[vu] = out.get(vu, 0) - cd
    return {w: c for w, c in out.items() if c}


@lru_cache(maxsize=None)
def _expand(w: Word) -> dict[Word, Fraction]:
    if len(w) == 1:
        return {w: Fraction(1)}
    u, v = standard_factorization(w)
    return _tensor_bracket(_expand(u), _expand(v))


def lie_to_tensor(x: Mapping[Word, Fraction]) -> Tensor:
    """Bracket expansion [u, v] -> u(x)v - v(x)u, applied recursively."""
    out = Tensor()
    for w, c in x.items():
        out.iadd(_expand(w), c)
    return out


def tensor_to_lie(t: Mapping[Word, Fraction]) -> LieElement:
    """Lyndon coordinates of a Lie polynomial given by its tensor expansion.

    Raises ValueError if ``t`` is not a Lie polynomial.
    """
    rem = {w: Fraction(c) for w, c in t.items() if c}
    heap = list(rem)
    heapq.heapify(heap)
    out = LieElement()
    while heap:
        w = heapq.heappop(heap)
        c = rem.pop(w, None)
        if not c:
            continue
        if not is_lyndon(w):
            raise ValueError(f"not a Lie polynomial: smallest word {w} is not Lyndon")
        out.add_term(w, c)
        for u, d in _expand(w).items():
            if u == w:
                continue
            nv = rem.get(u, 0) - c * d
            if nv:
                if u not in rem:
                    heapq.heappush(heap, u)
                rem[u] = nv
            else:
                rem.pop(u, None)
    return out


@lru_cache(maxsize=200_000)
def _bracket_words(u: Word, v: Word) -> tuple[tuple[Word, Fraction], ...]:
    if u == v:
        return ()
    return tuple(tensor_to_lie(_tensor_bracket(_expand(u), _expand(v))).items())


def bracket(x: Mapping[Word, Fraction], y: Mapping[Word, Fraction]) -> LieElement:
    """Lie bracket in the Lyndon basis."""
    out = LieElement()
    for u, c in x.items():
        for v, d in y.items():
            for w, e in _bracket_words(u, v):
                out.add_term(w, c * d * e)
    return out


def theta_I_lie(g: int, I: Iterable[int]) -> LieElement:
    """Sum of [a_i, b_i] over i in I."""
    check_genus(g)
    out = LieElement()
    for i in I:
        if not 1 <= i <= g:
            raise ValueError(f"handle index {i} outside 1..{g}")
        out.iadd(bracket(letter(a(i)), letter(b(i))))
    return out


def theta_lie(g: int) -> LieElement:
    return theta_I_lie(g, range(1, g + 1))


def _coords(x: Mapping[Word, Fraction], basis: LyndonBasis) -> dict[int, Fraction]:
    idx = basis.index
    return {idx[w]: c for w, c in x.items()}


@dataclass(frozen=True, eq=False)
class IdealComponent:
    """Degree-k piece J_k of the ideal generated by theta."""

    g: int
    k: int
    basis: tuple[LieElement, ...]
    echelon: RowEchelon

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, x: Mapping[Word, Fraction]) -> bool:
        return self.echelon.contains(_coords(x, lyndon_basis(self.k, self.g)))


@lru_cache(maxsize=None)
def ideal_component(k: int, g: int) -> IdealComponent:
    """J_2 = <theta>, J_{k+1} = [J_k, L_1]; basis read off from the pivots."""
    check_genus(g)
    if k < 2:
        raise ValueError("the ideal starts in degree 2")
    if k == 2:
        gens = [theta_lie(g)]
    else:
        prev = ideal_component(k - 1, g)
        gens = [bracket(j, letter(s)) for j in prev.basis for s in range(2 * g)]
    basis = lyndon_basis(k, g)
    ech = RowEchelon([_coords(x, basis) for x in gens], len(basis))
    chosen = tuple(gens[i] for i in sorted(ech.pivot_sources.values()))
    return IdealComponent(g, k, chosen, ech)


@dataclass(frozen=True, eq=False)
class QuotientSpace:
    """p(-m) = L_m / J_m with coordinates on the Lyndon words off the pivot columns."""

    g: int
    m: int
    words: tuple[Word, ...]

    @property
    def dim(self) -> int:
        return len(self.words)

    @property
    def index(self) -> dict[Word, int]:
        return {w: i for i, w in enumerate(self.words)}

    def coordinates(self, x: Mapping[Word, Fraction]) -> dict[int, Fraction]:
        idx = _quotient_index(self.g, self.m)
        r = reduce_mod_ideal(x, self.g, self.m)
        return {idx[w]: c for w, c in r.items()}


@lru_cache(maxsize=None)
def quotient_space(m: int, g: int) -> QuotientSpace:
    basis = lyndon_basis(m, g)
    if m == 1:
        return QuotientSpace(g, m, basis.words)
    pivots = ideal_component(m, g).echelon.pivots
    return QuotientSpace(g, m, tuple(w for i, w in enumerate(basis.words) if i not in pivots))


@lru_cache(maxsize=None)
def _quotient_index(g: int, m: int) -> dict[Word, int]:
    return quotient_space(m, g).index


def reduce_mod_ideal(x: Mapping[Word, Fraction], g: int, degree: int | None = None) -> LieElement:
    """Canonical representative of x modulo J_k (the identity in degree 1)."""
    if degree is None:
        degree = next((len(w) for w in x), None)
    if not x or degree is None or degree == 1:
        return LieElement(x)
    basis = lyndon_basis(degree, g)
    r = ideal_component(degree, g).echelon.reduce(_coords(x, basis))
    return LieElement({basis.words[i]: c for i, c in r.items()})

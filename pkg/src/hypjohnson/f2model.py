"""Even subsets of the Weierstrass points as a model of H_1(S; F_2).

Subsets of W = {1, ..., 2g+2} are bitmasks (bit ``i-1`` for point ``i``).
The even subsets modulo complementation form a 2g-dimensional F_2 space
with the pairing #(S n T) mod 2; permutations of W act on it symplectically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .symplectic import check_genus

__all__ = [
    "F2ClassSpace",
    "subset_mask",
    "f2_rank",
    "f2_class_space",
    "f2_pairing",
    "class_coordinates",
    "perm_to_sp_f2",
    "is_symplectic_f2",
]


def subset_mask(T: Iterable[int]) -> int:
    m = 0
    for i in T:
        if i < 1:
            raise ValueError(f"point labels start at 1, got {i}")
        m |= 1 << (i - 1)
    return m


def _as_mask(T) -> int:
    return T if isinstance(T, int) else subset_mask(T)


def f2_rank(vectors: Iterable[int]) -> int:
    """Rank over F_2 of bitmask row vectors."""
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return len(basis)


@dataclass(frozen=True)
class F2ClassSpace:
    genus: int
    dimension: int
    # classes of {i, 2g+2} for i = 1..2g, as bitmasks
    basis: tuple[int, ...]

    @property
    def n_points(self) -> int:
        return 2 * self.genus + 2


def f2_class_space(g: int) -> F2ClassSpace:
    """Even subsets of W modulo T ~ W - T.

    The dimension is computed by elimination: even subsets span a space of
    rank 2g+1 in F_2^W, and the relations e_T + e_{T^c} all equal e_W.
    The basis is {i, 2g+2} for i = 1..2g; the class of {2g+1, 2g+2} is the
    sum of the others.
    """
    check_genus(g)
    n = 2 * g + 2
    evens = [m for m in range(1 << n) if bin(m).count("1") % 2 == 0]
    full = (1 << n) - 1
    dim = f2_rank(evens) - f2_rank([m ^ (full ^ m) for m in evens])
    basis = tuple((1 << (i - 1)) | (1 << (n - 1)) for i in range(1, 2 * g + 1))
    return F2ClassSpace(g, dim, basis)


def _check_even(m: int) -> None:
    if bin(m).count("1") % 2:
        raise ValueError("subset must have even cardinality")


def f2_pairing(S, T) -> int:
    """#(S n T) mod 2 on even subsets."""
    s, t = _as_mask(S), _as_mask(T)
    _check_even(s)
    _check_even(t)
    return bin(s & t).count("1") % 2


def class_coordinates(T, g: int) -> tuple[int, ...]:
    """Coordinates of the class of an even subset in the basis of :func:`f2_class_space`."""
    n = 2 * g + 2
    m = _as_mask(T)
    _check_even(m)
    if m >> n:
        raise ValueError(f"subset not contained in 1..{n}")
    if m >> (n - 1) & 1:
        m ^= (1 << n) - 1
    last = (m >> (n - 2)) & 1
    return tuple(((m >> (i - 1)) & 1) ^ last for i in range(1, 2 * g + 1))


def _coords_to_mask(c: Sequence[int], g: int) -> int:
    n = 2 * g + 2
    m = 0
    for i, ci in enumerate(c, start=1):
        if ci:
            m ^= (1 << (i - 1)) | (1 << (n - 1))
    return m


def perm_to_sp_f2(p: Sequence[int], g: int) -> tuple[tuple[int, ...], ...]:
    """Matrix of the permutation ``p`` of W on the class space.

    ``p`` lists images: point ``i`` goes to ``p[i-1]``. Column ``j`` of the
    result is the image of the j-th basis class.
    """
    n = 2 * check_genus(g) + 2
    if sorted(p) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}")
    cols = []
    for i in range(1, 2 * g + 1):
        image = subset_mask([p[i - 1], p[n - 1]])
        cols.append(class_coordinates(image, g))
    return tuple(tuple(col[r] for col in cols) for r in range(2 * g))


def pairing_gram(g: int) -> list[list[int]]:
    basis = f2_class_space(g).basis
    return [[f2_pairing(s, t) for t in basis] for s in basis]


def is_symplectic_f2(M: Sequence[Sequence[int]], g: int) -> bool:
    """M^T G M == G over F_2, G the Gram matrix of the class basis."""
    G = pairing_gram(g)
    d = len(G)
    for i, j in itertools.product(range(d), repeat=2):
        s = 0
        for k in range(d):
            if M[k][i]:
                for l in range(d):
                    s ^= M[k][i] & G[k][l] & M[l][j]
        if s != G[i][j]:
            return False
    return True


def det_f2(M: Sequence[Sequence[int]]) -> int:
    rows = [sum(bit << j for j, bit in enumerate(r)) for r in M]
    return int(f2_rank(rows) == len(M))

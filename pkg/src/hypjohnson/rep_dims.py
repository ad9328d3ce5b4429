"""Dimensions of irreducible Sp(2g) representations and the decomposition checks.

V_lambda is indexed by a partition with at most g parts; its dimension comes
from the Weyl dimension formula for the root system C_g.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .derivations import residue_matrix_rank
from .free_lie import quotient_space
from .symplectic import check_genus

__all__ = [
    "Partition",
    "weyl_dim",
    "DimensionCheck",
    "P_DECOMPOSITION",
    "check_p_decomposition",
    "check_der_decomposition",
    "check_rep_ring_dims",
]


def Partition(parts: Sequence[int]) -> tuple[int, ...]:
    """Validate and normalise a partition (weakly decreasing, positive parts)."""
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(x < y for x, y in zip(parts, parts[1:])):
        raise ValueError(f"partition must be weakly decreasing: {parts}")
    return parts


def weyl_dim(lam: Sequence[int], g: int) -> int:
    """dim V_lambda for Sp(2g).

    Product over the positive roots e_i - e_j, e_i + e_j (i < j) and 2 e_i of
    <lambda + rho, alpha> / <rho, alpha>, with rho = (g, g-1, ..., 1).
    """
    check_genus(g)
    lam = Partition(lam)
    if len(lam) > g:
        raise ValueError(f"partition {lam} has more than g = {g} parts")
    lam = lam + (0,) * (g - len(lam))
    rho = [g - i for i in range(g)]
    l = [x + r for x, r in zip(lam, rho)]
    d = Fraction(1)
    for i in range(g):
        d *= Fraction(l[i], rho[i])
        for j in range(i + 1, g):
            d *= Fraction((l[i] - l[j]) * (l[i] + l[j]), (rho[i] - rho[j]) * (rho[i] + rho[j]))
    if d.denominator != 1:
        raise ArithmeticError(f"non-integral Weyl dimension {d} for {lam}, g={g}")
    return int(d)


@dataclass
class DimensionCheck:
    name: str
    genus: int
    ok: bool
    values: dict = field(default_factory=dict)


# lambda of the single irreducible in p(-m), m = 1, 2, 3
P_DECOMPOSITION = {1: (1,), 2: (1, 1), 3: (2, 1)}


def check_p_decomposition(g: int) -> list[DimensionCheck]:
    out = []
    for m, lam in P_DECOMPOSITION.items():
        lhs = quotient_space(m, g).dim
        rhs = weyl_dim(lam, g)
        out.append(DimensionCheck(f"p(-{m})", g, lhs == rhs,
                                  {"dim_p": lhs, "lambda": list(lam), "weyl_dim": rhs}))
    return out


def check_der_decomposition(g: int) -> DimensionCheck:
    rank, ncols, _ = residue_matrix_rank(g, 2)
    lhs = ncols - rank
    rhs = weyl_dim((2, 2), g) + weyl_dim((1, 1), g)
    return DimensionCheck("Der_-2", g, lhs == rhs,
                          {"kernel_dim": lhs, "weyl_[2,2]": weyl_dim((2, 2), g),
                           "weyl_[1,1]": weyl_dim((1, 1), g)})


def check_rep_ring_dims(g: int, m: int) -> DimensionCheck:
    """dim Der_{-m} p == 2g dim p(-1-m) - dim p(-2-m), with surjectivity of the residue map."""
    if m not in (1, 2):
        raise ValueError("m must be 1 or 2")
    rank, ncols, target = residue_matrix_rank(check_genus(g), m)
    der = ncols - rank
    expected = 2 * g * quotient_space(m + 1, g).dim - quotient_space(m + 2, g).dim
    surjective = rank == target
    return DimensionCheck(f"rep_ring_m{m}", g, surjective and der == expected,
                          {"dim_der": der, "expected": expected, "residue_rank": rank,
                           "dim_target": target, "surjective": surjective})

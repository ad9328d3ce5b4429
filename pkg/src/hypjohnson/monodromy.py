"""Dehn twists about symmetric separating curves and their monodromy values.

A twist is described formally by the genus ``i`` of one side, the set ``A``
of 2i+1 Weierstrass points on that side, and the handles ``I`` (|I| = i)
whose a/b classes span its homology. With theta' = theta_I on the A side and
theta'' = theta_{I^c} on the other:

* tau_q(D) = 1/2 phi(theta''^2) for q in A and 1/2 phi(theta'^2) otherwise,
* pi_Z(D; q1, q2) = 4 theta_{side of q2} mod theta if D separates q1 and q2, else 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .derivations import (
    DerivationCandidate,
    annihilation_residue,
    phi,
    pi_lambda2,
    reduce_derivation,
    v_prime_residual,
    pi_hat,
)
from .symplectic import (
    BiVector,
    SymSq,
    check_genus,
    project_hat_theta,
    project_mod_theta,
    sym_product,
    theta,
    theta_I,
)

__all__ = [
    "TwistDescriptor",
    "tau_hyp",
    "tau_tilde",
    "pi_Z",
    "pi_E",
    "zeta_D",
    "CheckRecord",
    "verify_monodromy_relation",
    "v_prime_vanishing_check",
]


@dataclass(frozen=True)
class TwistDescriptor:
    g: int
    side_genus: int
    points: frozenset[int]
    handles: frozenset[int]

    def __init__(self, g: int, side_genus: int, points: Iterable[int], handles: Iterable[int]):
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "side_genus", side_genus)
        object.__setattr__(self, "points", frozenset(points))
        object.__setattr__(self, "handles", frozenset(handles))
        self._validate()

    def _validate(self):
        g, i = self.g, self.side_genus
        check_genus(g)
        if not 1 <= i <= g - 1:
            raise ValueError(f"side genus must satisfy 1 <= i <= g-1, got i={i}, g={g}")
        if len(self.points) != 2 * i + 1:
            raise ValueError(f"|A| must be 2i+1 = {2 * i + 1}, got {len(self.points)}")
        if not self.points <= set(range(1, 2 * g + 3)):
            raise ValueError(f"points must lie in 1..{2 * g + 2}")
        if len(self.handles) != i:
            raise ValueError(f"|I| must be i = {i}, got {len(self.handles)}")
        if not self.handles <= set(range(1, g + 1)):
            raise ValueError(f"handles must lie in 1..{g}")

    @property
    def weierstrass_points(self) -> range:
        return range(1, 2 * self.g + 3)

    @property
    def complement_handles(self) -> frozenset[int]:
        return frozenset(range(1, self.g + 1)) - self.handles

    def theta_prime(self) -> BiVector:
        return theta_I(self.g, sorted(self.handles))

    def theta_double_prime(self) -> BiVector:
        return theta_I(self.g, sorted(self.complement_handles))

    def check_point(self, q: int) -> None:
        if q not in self.weierstrass_points:
            raise ValueError(f"unknown Weierstrass point {q!r}; labels are 1..{2 * self.g + 2}")

    def on_A_side(self, q: int) -> bool:
        self.check_point(q)
        return q in self.points

    def separates(self, q1: int, q2: int) -> bool:
        return self.on_A_side(q1) != self.on_A_side(q2)

    def theta_side(self, q: int) -> BiVector:
        """theta restricted to the handles on the same side as q."""
        return self.theta_prime() if self.on_A_side(q) else self.theta_double_prime()

    def theta_opposite(self, q: int) -> BiVector:
        return self.theta_double_prime() if self.on_A_side(q) else self.theta_prime()

    def key(self):
        return (self.side_genus, tuple(sorted(self.points)), tuple(sorted(self.handles)))

    def as_dict(self) -> dict:
        return {"genus": self.g, "side_genus": self.side_genus,
                "points": sorted(self.points), "handles": sorted(self.handles)}


def _half_square(x: BiVector) -> SymSq:
    return sym_product(x, x) * Fraction(1, 2)


def tau_hyp(D: TwistDescriptor, q: int) -> DerivationCandidate:
    """Image of the twist under the Johnson homomorphism based at q."""
    return phi(_half_square(D.theta_opposite(q)), D.g)


def tau_tilde(D: TwistDescriptor, q: int) -> BiVector:
    """Canonical form of theta~ o pi_lambda2 o tau_q(D) in Lambda^2 H / <theta>."""
    D.check_point(q)
    opposite = D.complement_handles if q in D.points else D.handles
    return _tau_tilde_cached(D.g, tuple(sorted(opposite))).copy()


@lru_cache(maxsize=None)
def _tau_tilde_cached(g: int, handles: tuple[int, ...]) -> BiVector:
    return project_mod_theta(pi_lambda2(phi(_half_square(theta_I(g, handles)), g)), g)


def pi_Z(D: TwistDescriptor, q1: int, q2: int) -> BiVector:
    """Monodromy of the Collino normal function for the pair (q1, q2)."""
    if q1 == q2:
        raise ValueError("q1 and q2 must be distinct Weierstrass points")
    if not D.separates(q1, q2):
        return BiVector()
    return project_mod_theta(D.theta_side(q2) * 4, D.g)


def pi_E(D: TwistDescriptor, q1: int, q2: int) -> BiVector:
    return pi_Z(D, q1, q2) * (2 * D.g + 1)


def zeta_D(D: TwistDescriptor) -> SymSq:
    """1/2 (theta'^2 - theta''^2): the preimage of tau_{q2} - tau_{q1} for q1 in A, q2 not in A."""
    return _half_square(D.theta_prime()) - _half_square(D.theta_double_prime())


@dataclass
class CheckRecord:
    name: str
    ok: bool
    details: dict = field(default_factory=dict)


def _fmt_bivector(x: BiVector) -> dict[str, str]:
    from .symplectic import basis_label

    return {f"{basis_label(s)}^{basis_label(t)}": str(c) for (s, t), c in sorted(x.items())}


def verify_monodromy_relation(g: int, family: Iterable[TwistDescriptor]) -> list[CheckRecord]:
    """tau~_{q2} - tau~_{q1} == (g+1) pi_Z(q1, q2) for every ordered pair of distinct points."""
    check_genus(g)
    records = []
    for D in family:
        if D.g != g:
            raise ValueError("descriptor genus does not match")
        pts = list(D.weierstrass_points)
        tt = {q: tau_tilde(D, q) for q in pts}
        bad = []
        n_sep = n_same = 0
        for q1 in pts:
            for q2 in pts:
                if q1 == q2:
                    continue
                lhs = tt[q2] - tt[q1]
                rhs = pi_Z(D, q1, q2) * (g + 1)
                if D.separates(q1, q2):
                    n_sep += 1
                else:
                    n_same += 1
                if lhs != rhs:
                    bad.append((q1, q2))
        records.append(CheckRecord(
            f"collino_relation{D.key()}", not bad,
            {"descriptor": D.as_dict(), "separating_pairs": n_sep,
             "same_side_pairs": n_same, "failures": bad[:10]}))
    return records


def v_prime_vanishing_check(g: int, D: TwistDescriptor) -> CheckRecord:
    """The chain showing tau_{q2} - tau_{q1} has no V' component.

    (a) 1/2 theta'^2 - 1/2 theta''^2 + theta'' theta == 1/2 theta^2 in S^2 Lambda^2 H;
    (b) phi(theta^2) induces the zero derivation of p;
    (c) the V'-residual of zeta_D is zeta_D + theta'' theta - ((g-i)/g) theta^2,
        pi_hat kills it, and phi of it vanishes as a derivation of p.
    """
    check_genus(g)
    th, t1, t2 = theta(g), D.theta_prime(), D.theta_double_prime()
    th2 = sym_product(th, th)
    z = zeta_D(D)
    identity_a = z + sym_product(t2, th) == th2 * Fraction(1, 2)
    phi_theta2 = reduce_derivation(phi(th2, g))
    part_b = phi_theta2.is_zero()
    resid = v_prime_residual(z, g)
    expected = z + sym_product(t2, th) - th2 * Fraction(g - D.side_genus, g)
    part_c = (resid == expected and not pi_hat(resid, g)
              and reduce_derivation(phi(resid, g)).is_zero())
    hat_value = project_hat_theta(pi_lambda2(phi(z, g)), g)
    hat_expected = project_hat_theta(t2, g) * (2 * (2 * g + 2))
    return CheckRecord(
        f"v_prime_vanishing{D.key()}", identity_a and part_b and part_c and hat_value == hat_expected,
        {"identity_a": identity_a, "phi_theta2_zero_in_p": part_b,
         "residual_matches": resid == expected, "residual_pi_hat_zero": not pi_hat(resid, g),
         "hat_projection": hat_value == hat_expected})

"""Named verification checks, grouped by module, and the report they produce.

Every check is a function ``(g, slow) -> (ok, details)``; returning ``None``
marks it skipped. :func:`run_checks` times each one and collects a
:class:`VerificationReport`.
"""

from __future__ import annotations

import itertools
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

from . import __version__
from .class_span import FAMILIES, span_report
from .derivations import (
    annihilation_residue,
    j_theta,
    phi,
    pi_hat,
    pi_lambda2,
    pi_phi_closed_form,
    p_H,
    reduce_derivation,
    v_prime_residual,
)
from .f2model import f2_class_space, f2_rank, is_symplectic_f2, pairing_gram, perm_to_sp_f2
from .free_lie import (
    LieElement,
    bracket,
    ideal_component,
    lyndon_basis,
    letter,
    quotient_space,
    theta_I_lie,
    witt_dim,
)
from .monodromy import (
    TwistDescriptor,
    v_prime_vanishing_check,
    pi_Z,
    tau_hyp,
    tau_tilde,
    verify_monodromy_relation,
    zeta_D,
)
from .class_span import canonical_family
from .rep_dims import check_der_decomposition, check_p_decomposition, check_rep_ring_dims
from .symplectic import (
    BiVector,
    SymSq,
    Tensor,
    basis_pair,
    check_genus,
    gram_matrix,
    pair,
    project_hat_theta,
    project_mod_theta,
    sym_product,
    symsq_monomials,
    theta,
    theta_I,
    v_basis,
    wedge_monomials,
    wedge_to_tensor,
)

SCHEMA_VERSION = "1.0"
MODULES = ("symplectic", "free_lie", "derivations", "monodromy", "span", "dims")


@dataclass
class CheckResult:
    name: str
    paper_anchor: str
    status: str  # pass | fail | skipped
    details: str
    elapsed_ms: int


@dataclass
class VerificationReport:
    genus: int
    checks: list[CheckResult]
    tool_version: str = __version__
    schema_version: str = SCHEMA_VERSION
    config: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["ok"] = self.ok
        return d


# ---------------------------------------------------------------- helpers


def random_symsq(g: int, rng: random.Random, terms: int = 4) -> SymSq:
    mons = symsq_monomials(g)
    s = SymSq()
    for _ in range(terms):
        s.add_term(rng.choice(mons), rng.randint(-3, 3))
    return s


def all_handle_subsets(g: int):
    for r in range(g + 1):
        yield from itertools.combinations(range(1, g + 1), r)


def random_lie(g: int, k: int, rng: random.Random, terms: int = 3) -> LieElement:
    words = lyndon_basis(k, g).words
    x = LieElement()
    for _ in range(terms):
        x.add_term(rng.choice(words), rng.randint(-2, 2))
    return x


# ---------------------------------------------------------------- symplectic


def chk_gram(g, slow):
    G = gram_matrix(g)
    std = [[1 if (t == s + 1 and s % 2 == 0) else -1 if (s == t + 1 and t % 2 == 0) else 0
            for t in range(2 * g)] for s in range(2 * g)]
    return G == std, {"size": 2 * g}


def chk_theta_projections(g, slow):
    th = theta(g)
    bad = []
    for m in wedge_monomials(g):
        x = BiVector({m: 1})
        h = project_hat_theta(x, g)
        d = h - x
        if project_mod_theta(h, g) != project_mod_theta(x, g):
            bad.append(m)
        # h - x is a multiple of theta
        c = d.get((0, 1), 0)
        if d != th * c:
            bad.append(m)
    ok = not bad and not project_mod_theta(th, g) and not project_hat_theta(th, g)
    return ok, {"failures": bad}


def chk_theta_split(g, slow):
    th = theta(g)
    full = set(range(1, g + 1))
    ok = all(theta_I(g, I) + theta_I(g, full - set(I)) == th for I in all_handle_subsets(g))
    return ok, {"subsets": 2 ** g}


def chk_pH_theta(g, slow):
    wt = wedge_to_tensor(theta(g))
    ok = True
    for x in range(2 * g):
        t = Tensor({k + (x,): v for k, v in wt.items()})
        ok &= p_H(t) == {x: 2 * g}
    return ok, {"expected": f"{2 * g} id"}


def chk_f2_dimension(g, slow):
    sp = f2_class_space(g)
    G = pairing_gram(g)
    rows = [sum(bit << j for j, bit in enumerate(r)) for r in G]
    nondeg = f2_rank(rows) == 2 * g
    return sp.dimension == 2 * g and nondeg, {"dimension": sp.dimension, "nondegenerate": nondeg}


def chk_f2_perms(g, slow):
    n = 2 * g + 2
    if g == 2:
        perms = list(itertools.permutations(range(1, n + 1)))
        mode = "exhaustive"
    else:
        rng = random.Random(1000 + g)
        perms = [tuple(range(1, n + 1))]
        for _ in range(100):
            p = list(range(1, n + 1))
            rng.shuffle(p)
            perms.append(tuple(p))
        perms = list(dict.fromkeys(perms))
        mode = "sampled"
    mats = {}
    symplectic = True
    for p in perms:
        M = perm_to_sp_f2(p, g)
        symplectic &= is_symplectic_f2(M, g)
        mats.setdefault(M, []).append(p)
    faithful = len(mats) == len(perms)
    return symplectic and faithful, {"mode": mode, "permutations": len(perms),
                                     "distinct_matrices": len(mats), "symplectic": symplectic}


# ---------------------------------------------------------------- free_lie


def chk_witt(g, slow):
    top = 5 if (slow or g <= 3) else 4
    got = {k: len(lyndon_basis(k, g)) for k in range(1, top + 1)}
    ok = all(got[k] == witt_dim(2 * g, k) for k in got)
    return ok, {"dims": got}


def chk_jacobi(g, slow):
    rng = random.Random(7 + g)
    n = 200 if slow else 50
    for _ in range(n):
        x, y, z = (letter(rng.randrange(2 * g)) if rng.random() < 0.5 else random_lie(g, 2, rng)
                   for _ in range(3))
        j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
        if j:
            return False, {"counterexample": repr((x, y, z))}
        if bracket(x, y) != -bracket(y, x):
            return False, {"antisymmetry": repr((x, y))}
    return True, {"triples": n}


def chk_ideal_closure(g, slow):
    if g >= 5 and not slow:
        return None
    l2 = [bracket(letter(s), letter(t)) for s in range(2 * g) for t in range(s + 1, 2 * g)]
    for k in (2, 3):
        Jk, Jk2 = ideal_component(k, g), ideal_component(k + 2, g)
        for j in Jk.basis:
            for y in l2:
                if not Jk2.contains(bracket(j, y)):
                    return False, {"k": k}
    return True, {"checked_degrees": [2, 3]}


def chk_p_low_dims(g, slow):
    d1, d2 = quotient_space(1, g).dim, quotient_space(2, g).dim
    j3 = ideal_component(3, g).dim
    return d1 == 2 * g and d2 == 2 * g * g - g - 1 and j3 == 2 * g, {
        "p(-1)": d1, "p(-2)": d2, "J_3": j3}


# ---------------------------------------------------------------- derivations


def _sample_monomials(g, slow):
    if g <= 3:
        return [SymSq({m: 1}) for m in symsq_monomials(g)], "all monomials"
    rng = random.Random(31 + g)
    return [random_symsq(g, rng) for _ in range(100)], "100 random elements"


def chk_closed_form(g, slow):
    samples, mode = _sample_monomials(g, slow)
    bad = sum(pi_lambda2(phi(s, g)) != pi_phi_closed_form(s, g) for s in samples)
    return bad == 0, {"mode": mode, "samples": len(samples), "mismatches": bad}


def chk_phi_in_der2(g, slow):
    samples, mode = _sample_monomials(g, slow)
    bad = sum(bool(annihilation_residue(phi(s, g))) for s in samples)
    return bad == 0, {"mode": mode, "samples": len(samples), "nonzero_residues": bad}


def chk_j_theta(g, slow):
    c = -4 * (g + 1)
    bad = []
    for m in v_basis(g):
        v = BiVector({m: 1})
        if project_mod_theta(pi_hat(j_theta(v, g), g), g) != project_mod_theta(v * c, g):
            bad.append(m)
    return not bad, {"constant": c, "basis_size": len(v_basis(g)), "failures": bad}


def chk_theta_I_law(g, slow):
    for I in all_handle_subsets(g):
        tI = theta_I(g, I)
        d = phi(sym_product(tI, tI), g)
        tl = theta_I_lie(g, I)
        for x in range(2 * g):
            expect = bracket(tl, letter(x)) * -2 if basis_pair(x) in I else LieElement()
            if d(x) != expect:
                return False, {"I": list(I), "letter": x}
    return True, {"subsets": 2 ** g}


def chk_phi_theta2(g, slow):
    th = theta(g)
    d = reduce_derivation(phi(sym_product(th, th), g))
    return d.is_zero(), {}


def chk_v_prime(g, slow):
    rng = random.Random(55 + g)
    samples = [random_symsq(g, rng) for _ in range(20)]
    samples.append(j_theta(BiVector({(0, 2): 1}), g))
    bad = sum(bool(pi_hat(v_prime_residual(s, g), g)) for s in samples)
    return bad == 0, {"samples": len(samples), "failures": bad}


# ---------------------------------------------------------------- monodromy


def chk_monodromy_relation(g, slow):
    recs = verify_monodromy_relation(g, canonical_family(g).descriptors)
    failed = [r.name for r in recs if not r.ok]
    return not failed, {"descriptors": len(recs), "failures": failed}


def chk_zeta_projection(g, slow):
    bad = []
    for D in canonical_family(g).descriptors:
        lhs = project_mod_theta(pi_lambda2(phi(zeta_D(D), g)), g)
        rhs = project_mod_theta(D.theta_double_prime() * (2 * (2 * g + 2)), g)
        if lhs != rhs:
            bad.append(D.key())
    return not bad, {"coefficient": 2 * (2 * g + 2), "failures": bad}


def v_prime_family(g):
    """One descriptor per handle subset I, 1 <= |I| <= g-1."""
    out = []
    for i in range(1, g):
        for I in itertools.combinations(range(1, g + 1), i):
            out.append(TwistDescriptor(g, i, range(1, 2 * i + 2), I))
    return out


def chk_v_prime_vanishing(g, slow):
    recs = [v_prime_vanishing_check(g, D) for D in v_prime_family(g)]
    failed = [r.name for r in recs if not r.ok]
    return not failed, {"descriptors": len(recs), "failures": failed}


def chk_sum_over_points(g, slow):
    bad = []
    for D in canonical_family(g).descriptors:
        total = BiVector()
        for q in D.weierstrass_points:
            total.iadd(tau_tilde(D, q))
        if total:
            bad.append(D.key())
    return not bad, {"failures": bad}


def chk_tau_in_der2(g, slow):
    bad = []
    for D in canonical_family(g).descriptors:
        for q in (min(D.points), min(set(D.weierstrass_points) - D.points)):
            if annihilation_residue(tau_hyp(D, q)):
                bad.append((D.key(), q))
    return not bad, {"failures": bad}


def chk_pi_Z_antisymmetry(g, slow):
    for D in canonical_family(g).descriptors:
        for q1, q2 in itertools.permutations(D.weierstrass_points, 2):
            if pi_Z(D, q1, q2) + pi_Z(D, q2, q1):
                return False, {"descriptor": D.as_dict(), "pair": [q1, q2]}
    return True, {}


# ---------------------------------------------------------------- span


def chk_span_rank(g, slow):
    """Rank 2g+1 and equal row spaces; widens the family if the canonical one falls short."""
    tried = {}
    order = ["consecutive", "augmented", "all-subsets"]
    if g >= 5 and not slow:
        order = order[:2]
    for kind in order:
        rep = span_report(FAMILIES[kind](g))
        tried[kind] = {"weierstrass_rank": rep.weierstrass_rank, "collino_rank": rep.collino_rank,
                       "row_spaces_equal": rep.row_spaces_equal, "ok": rep.ok}
        if rep.ok:
            return True, {"achieved_by": kind, "target_rank": 2 * g + 1, "families": tried}
    return False, {"achieved_by": None, "target_rank": 2 * g + 1, "families": tried}


def chk_remark(g, slow):
    rep = span_report(canonical_family(g))
    return rep.column_sums_zero and rep.remark_check, {
        "column_sums_zero": rep.column_sums_zero, "remark_identity": rep.remark_check}


# ---------------------------------------------------------------- dims


def chk_p_decomposition(g, slow):
    recs = check_p_decomposition(g)
    return all(r.ok for r in recs), {r.name: r.values for r in recs}


def chk_der2(g, slow):
    if g >= 4 and not slow:
        return None
    r = check_der_decomposition(g)
    return r.ok, r.values


def _chk_rep_ring(m):
    def chk(g, slow):
        if g >= 4 and not slow:
            return None
        r = check_rep_ring_dims(g, m)
        return r.ok, r.values
    return chk


# name -> (module, anchor, function)
CHECKS: dict[str, tuple[str, str, Callable]] = {
    "symplectic.gram_standard": ("symplectic", "<a_i,b_j> = delta_ij, <a_i,a_j> = <b_i,b_j> = 0", chk_gram),
    "symplectic.theta_projections": ("symplectic", "theta~ o theta^ = theta~; theta^(x) - x in <theta>", chk_theta_projections),
    "symplectic.theta_split": ("symplectic", "theta = theta_I + theta_{I^c}", chk_theta_split),
    "symplectic.pH_theta": ("symplectic", "p_H o (theta (x) .) = 2g id_H", chk_pH_theta),
    "symplectic.f2_dimension": ("symplectic", "even subsets of W / (T ~ T^c) = H(F_2), e_S.e_T = #(S n T)", chk_f2_dimension),
    "symplectic.f2_permutations": ("symplectic", "Aut W -> Sp(H(F_2)) faithful", chk_f2_perms),
    "free_lie.witt": ("free_lie", "dim L_k(H) = Witt formula", chk_witt),
    "free_lie.jacobi": ("free_lie", "Jacobi identity in L(H)", chk_jacobi),
    "free_lie.ideal_closure": ("free_lie", "[J_k, L_2] in J_{k+2}", chk_ideal_closure),
    "free_lie.p_low_dims": ("free_lie", "dim p(-1) = 2g, dim p(-2) = 2g^2-g-1", chk_p_low_dims),
    "derivations.closed_form": ("derivations", "pi_Lambda2 o phi closed form", chk_closed_form),
    "derivations.phi_in_der2": ("derivations", "phi(s)(theta) = 0 in L_4(H)", chk_phi_in_der2),
    "derivations.j_theta_constant": ("derivations", "pi^ o j_theta = -4(g+1) id_V", chk_j_theta),
    "derivations.theta_I_law": ("derivations", "phi(theta_I^2)(x) = -2[theta_I, x] on H_I, 0 on H_I^c", chk_theta_I_law),
    "derivations.phi_theta2_zero": ("derivations", "phi(theta^2) = -2 ad_theta = 0 in Der p", chk_phi_theta2),
    "derivations.v_prime_residual": ("derivations", "pi^(x - j_theta pi^(x)/(-4(g+1))) = 0", chk_v_prime),
    "monodromy.collino_relation": ("monodromy", "tau~_{q2} - tau~_{q1} = (g+1) pi_Z", chk_monodromy_relation),
    "monodromy.zeta_projection": ("monodromy", "pi~(zeta_D) = 2(2g+2) theta'' mod theta", chk_zeta_projection),
    "monodromy.v_prime_vanishing": ("monodromy", "1/2 theta'^2 - 1/2 theta''^2 + theta'' theta = 1/2 theta^2; V' part of zeta_D is 0", chk_v_prime_vanishing),
    "monodromy.sum_over_points": ("monodromy", "sum_q tau~_q(D) = 0", chk_sum_over_points),
    "monodromy.tau_in_der2": ("monodromy", "tau_q(D)(theta) = 0", chk_tau_in_der2),
    "monodromy.pi_Z_antisymmetry": ("monodromy", "pi_Z(q1,q2) = -pi_Z(q2,q1) mod theta", chk_pi_Z_antisymmetry),
    "span.weierstrass_collino_span": ("span", "X_zeta = X_omega, dim = 2g+1", chk_span_rank),
    "span.remark": ("span", "(2g+2)[q_i] = sum_j ([q_i] - [q_j]); sum_i [q_i] = 0", chk_remark),
    "dims.p_decomposition": ("dims", "p(-1) = V[1], p(-2) = V[1^2], p(-3) = V[2+1]", chk_p_decomposition),
    "dims.der2_decomposition": ("dims", "Der_-2 p = V[2^2] + V[1^2]", chk_der2),
    "dims.rep_ring_m1": ("dims", "Der_-1 p = p(-1)(x)p(-2) - p(-3)", _chk_rep_ring(1)),
    "dims.rep_ring_m2": ("dims", "Der_-2 p = p(-1)(x)p(-3) - p(-4)", _chk_rep_ring(2)),
}


def run_check(name: str, g: int, slow: bool) -> CheckResult:
    module, anchor, fn = CHECKS[name]
    t0 = time.perf_counter()
    try:
        out = fn(g, slow)
        if out is None:
            status, details = "skipped", "requires --slow"
        else:
            ok, info = out
            status, details = ("pass" if ok else "fail"), _render(info)
    except Exception as exc:  # a crashing check is a failed check
        status, details = "fail", f"{type(exc).__name__}: {exc}"
    return CheckResult(name, anchor, status, details, int((time.perf_counter() - t0) * 1000))


def _render(info) -> str:
    import json

    return json.dumps(info, sort_keys=True, default=str)


def select_checks(modules=None) -> list[str]:
    if modules:
        unknown = set(modules) - set(MODULES)
        if unknown:
            raise ValueError(f"unknown module(s): {', '.join(sorted(unknown))}")
    return sorted(n for n, (mod, _, _) in CHECKS.items() if not modules or mod in modules)


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("HYPJOHNSON_THREADS", "1")))
    except ValueError:
        return 1


def run_checks(g: int, modules=None, slow: bool = False) -> VerificationReport:
    check_genus(g)
    names = select_checks(modules)
    workers = thread_count()
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            results = list(ex.map(run_check, names, [g] * len(names), [slow] * len(names)))
    else:
        results = [run_check(n, g, slow) for n in names]
    results.sort(key=lambda r: r.name)
    return VerificationReport(g, results, config={"modules": sorted(modules) if modules else list(MODULES),
                                                  "slow": slow, "workers": workers})

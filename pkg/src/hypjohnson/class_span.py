"""Weierstrass and Collino classes evaluated on a family of twists.

Row q of the class matrix lists the V-coordinates of tau~_q(D) for each
descriptor D in the family. Row differences are the Collino classes.
"""

from __future__ import annotations

import csv
import itertools
import math
from dataclasses import dataclass, asdict
from fractions import Fraction
from typing import Sequence

from .exact_linalg import RowEchelon, SparseMatrix, echelon
from .monodromy import TwistDescriptor, tau_tilde
from .symplectic import basis_label, check_genus, v_basis, v_coordinates

__all__ = [
    "TwistFamily",
    "ClassMatrix",
    "SpanReport",
    "canonical_family",
    "augmented_family",
    "class_matrix",
    "column_sums_zero",
    "weierstrass_rank",
    "collino_rank",
    "row_spaces_equal",
    "remark_check",
    "span_report",
    "export_csv",
    "all_subsets_family",
    "FAMILIES",
]


@dataclass(frozen=True)
class TwistFamily:
    g: int
    descriptors: tuple[TwistDescriptor, ...]
    kind: str = "custom"

    def __post_init__(self):
        check_genus(self.g)
        if not self.descriptors:
            raise ValueError("twist family must be nonempty")
        keys = [D.key() for D in self.descriptors]
        if len(set(keys)) != len(keys):
            raise ValueError("twist family contains duplicate descriptors")
        if any(D.g != self.g for D in self.descriptors):
            raise ValueError("descriptor genus does not match the family")

    def __len__(self):
        return len(self.descriptors)


def _arcs(n: int, size: int) -> list[tuple[int, ...]]:
    return [tuple(sorted((r + k) % n + 1 for k in range(size))) for r in range(n)]


def canonical_family(g: int, augmented: bool = False) -> TwistFamily:
    """Consecutive cyclic arcs A = {r, ..., r+2i} with I = {1..i}, 1 <= i <= g-1.

    ``augmented`` pairs each arc with every handle subset of size i.
    """
    check_genus(g)
    n = 2 * g + 2
    out, seen = [], set()
    for i in range(1, g):
        handle_sets = itertools.combinations(range(1, g + 1), i) if augmented else [tuple(range(1, i + 1))]
        handle_sets = list(handle_sets)
        for A in _arcs(n, 2 * i + 1):
            for I in handle_sets:
                D = TwistDescriptor(g, i, A, I)
                if D.key() not in seen:
                    seen.add(D.key())
                    out.append(D)
    return TwistFamily(g, tuple(out), "augmented" if augmented else "consecutive")


def augmented_family(g: int) -> TwistFamily:
    return canonical_family(g, augmented=True)


def all_subsets_family(g: int) -> TwistFamily:
    """Every odd point set |A| = 2i+1 (any curve enclosing those branch points), I = {1..i}."""
    check_genus(g)
    out = []
    for i in range(1, g):
        for A in itertools.combinations(range(1, 2 * g + 3), 2 * i + 1):
            out.append(TwistDescriptor(g, i, A, range(1, i + 1)))
    return TwistFamily(g, tuple(out), "all-subsets")


FAMILIES = {
    "consecutive": canonical_family,
    "augmented": augmented_family,
    "all-subsets": all_subsets_family,
}


@dataclass(frozen=True, eq=False)
class ClassMatrix:
    family: TwistFamily
    matrix: SparseMatrix
    # column labels: (descriptor index, V-basis monomial)
    columns: tuple[tuple[int, tuple[int, int]], ...]

    @property
    def g(self) -> int:
        return self.family.g

    @property
    def points(self) -> range:
        return range(1, 2 * self.g + 3)

    def rows(self) -> list[list[Fraction]]:
        return self.matrix.to_dense()

    def row(self, q: int) -> list[Fraction]:
        return self.rows()[q - 1]


def class_matrix(f: TwistFamily) -> ClassMatrix:
    g = f.g
    vb = v_basis(g)
    nrows = 2 * g + 2
    entries = {}
    columns = []
    for d_idx, D in enumerate(f.descriptors):
        base = len(columns)
        columns.extend((d_idx, mono) for mono in vb)
        for q in range(1, nrows + 1):
            for c, val in enumerate(v_coordinates(tau_tilde(D, q), g)):
                if val:
                    entries[(q - 1, base + c)] = val
    return ClassMatrix(f, SparseMatrix(nrows, len(columns), entries), tuple(columns))


def _with_matrix(m: ClassMatrix, dense: Sequence[Sequence[Fraction]]) -> ClassMatrix:
    return ClassMatrix(m.family, SparseMatrix.from_rows(dense, m.matrix.ncols), m.columns)


def column_sums_zero(m: ClassMatrix) -> bool:
    sums: dict[int, Fraction] = {}
    for (_, j), v in m.matrix.entries.items():
        sums[j] = sums.get(j, 0) + v
    return not any(sums.values())


def weierstrass_rank(m: ClassMatrix) -> int:
    return echelon(m.matrix).rank


def _collino_rows(m: ClassMatrix, base: int) -> list[dict[int, Fraction]]:
    if base not in m.points:
        raise ValueError(f"base point {base!r} is not a Weierstrass point label")
    rows = m.matrix.sparse_rows()
    pb = rows[base - 1]
    out = []
    for q in m.points:
        if q == base:
            continue
        r = dict(rows[q - 1])
        for j, v in pb.items():
            nv = r.get(j, 0) - v
            if nv:
                r[j] = nv
            else:
                r.pop(j, None)
        out.append(r)
    return out


def collino_rank(m: ClassMatrix, base: int) -> int:
    """Rank of the 2g+1 differences row(q) - row(base)."""
    return RowEchelon(_collino_rows(m, base), m.matrix.ncols).rank


def row_spaces_equal(m: ClassMatrix, base: int) -> bool:
    """Mutual containment of the Weierstrass and Collino row spaces."""
    w = echelon(m.matrix)
    c_rows = _collino_rows(m, base)
    c = RowEchelon(c_rows, m.matrix.ncols)
    return all(w.contains(r) for r in c_rows) and all(c.contains(r) for r in m.matrix.sparse_rows())


def remark_check(m: ClassMatrix) -> bool:
    """(2g+2) row(q_i) == sum_j (row(q_i) - row(q_j)) for every i.

    Evaluated term by term after clearing denominators, so the arithmetic is
    exact integer arithmetic.
    """
    den = 1
    for v in m.matrix.entries.values():
        den = math.lcm(den, v.denominator)
    n = m.matrix.nrows
    cols: dict[int, list[int]] = {}
    for (i, j), v in m.matrix.entries.items():
        cols.setdefault(j, [0] * n)[i] = int(v * den)
    for col in cols.values():
        for ri in col:
            if n * ri != sum(ri - rj for rj in col):
                return False
    return True


@dataclass
class SpanReport:
    genus: int
    family: str
    n_descriptors: int
    weierstrass_rank: int
    collino_rank: int
    target_rank: int
    row_spaces_equal: bool
    column_sums_zero: bool
    remark_check: bool
    collino_rank_by_base: dict

    @property
    def ok(self) -> bool:
        return (self.weierstrass_rank == self.collino_rank == self.target_rank
                and self.row_spaces_equal and self.column_sums_zero and self.remark_check
                and len(set(self.collino_rank_by_base.values())) == 1)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["collino_rank_by_base"] = {str(k): v for k, v in self.collino_rank_by_base.items()}
        d["ok"] = self.ok
        return d


def span_report(f: TwistFamily, base: int | None = None) -> SpanReport:
    m = class_matrix(f)
    g = f.g
    base = 2 * g + 2 if base is None else base
    by_base = {p: collino_rank(m, p) for p in m.points}
    return SpanReport(
        genus=g,
        family=f.kind,
        n_descriptors=len(f),
        weierstrass_rank=weierstrass_rank(m),
        collino_rank=by_base[base],
        target_rank=2 * g + 1,
        row_spaces_equal=row_spaces_equal(m, base),
        column_sums_zero=column_sums_zero(m),
        remark_check=remark_check(m),
        collino_rank_by_base=by_base,
    )


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def export_csv(m: ClassMatrix, path) -> None:
    """Long format: point, descriptor, coord, value (zeros included)."""
    dense = m.rows()
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["point", "descriptor", "coord", "value"])
        for q, row in zip(m.points, dense):
            for (d_idx, (s, t)), val in zip(m.columns, row):
                D = m.family.descriptors[d_idx]
                desc = f"i={D.side_genus};A={'-'.join(map(str, sorted(D.points)))};I={'-'.join(map(str, sorted(D.handles)))}"
                w.writerow([q, desc, f"{basis_label(s)}^{basis_label(t)}", _fmt(val)])

"""Exact rational vectors and sparse matrices.

Scalars are :class:`fractions.Fraction`. Vectors are sparse dictionaries
from an arbitrary hashable basis label to a nonzero coefficient; matrices
are immutable row-sparse tables. Elimination is plain Gaussian elimination
over Q, column by column, choosing the pivot of smallest magnitude (ties
broken by row length) to keep coefficient growth down.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

__all__ = [
    "Fraction",
    "Vector",
    "SparseMatrix",
    "RowEchelon",
    "rank",
    "kernel_basis",
    "in_row_space",
    "solve",
    "echelon",
    "write_csv",
]


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Vector(dict):
    """A sparse rational linear combination of basis labels.

    Zero coefficients are never stored, so two vectors are equal exactly
    when their dictionaries are equal. Arithmetic returns a new instance of
    the same subclass.
    """

    def __init__(self, data: Mapping | Iterable = (), **kw):
        super().__init__()
        items = data.items() if isinstance(data, Mapping) else data
        for k, v in items:
            self.add_term(k, v)
        for k, v in kw.items():
            self.add_term(k, v)

    def add_term(self, key: Hashable, coeff) -> None:
        """In-place ``self[key] += coeff``; use only while building."""
        if not coeff:
            return
        c = self.get(key, 0) + _q(coeff)
        if c:
            self[key] = c
        else:
            del self[key]

    def iadd(self, other: Mapping, scale=1) -> "Vector":
        """In-place ``self += scale * other``; returns self."""
        if scale:
            scale = _q(scale)
            for k, v in other.items():
                self.add_term(k, v * scale)
        return self

    def copy(self):
        out = type(self).__new__(type(self))
        dict.__init__(out, self)
        out.__dict__.update(self.__dict__)
        return out

    def __add__(self, other):
        return self.copy().iadd(other)

    def __sub__(self, other):
        return self.copy().iadd(other, -1)

    def __neg__(self):
        return self * -1

    def __mul__(self, scalar):
        if isinstance(scalar, Mapping):
            return NotImplemented
        out = type(self).__new__(type(self))
        dict.__init__(out)
        out.__dict__.update(self.__dict__)
        scalar = _q(scalar)
        if scalar:
            for k, v in self.items():
                dict.__setitem__(out, k, v * scalar)
        return out

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (1 / _q(scalar))

    def __repr__(self):
        terms = ", ".join(f"{k!r}: {v}" for k, v in sorted(self.items(), key=lambda kv: repr(kv[0])))
        return f"{type(self).__name__}({{{terms}}})"

    # dict's own __eq__ is what we want; keep the subclass hashable-free.
    __hash__ = None


@dataclass(frozen=True)
class SparseMatrix:
    """Immutable ``nrows x ncols`` matrix over Q with no stored zeros."""

    nrows: int
    ncols: int
    entries: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), v in self.entries.items():
            if not (0 <= i < self.nrows and 0 <= j < self.ncols):
                raise IndexError(f"entry ({i}, {j}) outside {self.nrows}x{self.ncols}")
            v = _q(v)
            if v:
                clean[(i, j)] = v
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ncols: int | None = None) -> "SparseMatrix":
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        ent = {}
        for i, r in enumerate(rows):
            if len(r) != ncols:
                raise ValueError("ragged rows")
            for j, v in enumerate(r):
                if v:
                    ent[(i, j)] = v
        return cls(len(rows), ncols, ent)

    @classmethod
    def from_sparse_rows(cls, rows: Sequence[Mapping[int, Fraction]], ncols: int) -> "SparseMatrix":
        ent = {(i, j): v for i, r in enumerate(rows) for j, v in r.items()}
        return cls(len(rows), ncols, ent)

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    def row(self, i: int) -> dict[int, Fraction]:
        return {j: v for (r, j), v in self.entries.items() if r == i}

    def sparse_rows(self) -> list[dict[int, Fraction]]:
        rows: list[dict[int, Fraction]] = [{} for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.ncols, self.nrows, {(j, i): v for (i, j), v in self.entries.items()})

    def matvec(self, x: Sequence | Mapping[int, Fraction]) -> list[Fraction]:
        if not isinstance(x, Mapping):
            if len(x) != self.ncols:
                raise ValueError(f"vector has {len(x)} entries, matrix has {self.ncols} columns")
            x = dict(enumerate(x))
        out = [Fraction(0)] * self.nrows
        for (i, j), v in self.entries.items():
            xj = x.get(j)
            if xj:
                out[i] += v * xj
        return out

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.nrows, self.ncols, self.entries) == (other.nrows, other.ncols, other.entries)

    def __hash__(self):
        return hash((self.nrows, self.ncols, frozenset(self.entries.items())))


class RowEchelon:
    """Row echelon form of a list of sparse rows.

    ``pivots`` maps each pivot column to its row, normalised so the pivot
    entry is 1; a pivot row has no entries left of its pivot column. Reducing
    a vector against this basis gives the unique representative supported
    off the pivot columns, so it doubles as a normal form modulo the row space.
    """

    def __init__(self, rows: Iterable[Mapping[int, Fraction]], ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, dict[int, Fraction]] = {}
        # indices (into the input) of the rows that produced each pivot
        self.pivot_sources: dict[int, int] = {}
        self._eliminate([dict((j, _q(v)) for j, v in r.items() if v) for r in rows])
        self._rref: dict[int, dict[int, Fraction]] | None = None

    def _eliminate(self, rows: list[dict[int, Fraction]]) -> None:
        col_index: dict[int, set[int]] = {}
        for i, r in enumerate(rows):
            for j in r:
                col_index.setdefault(j, set()).add(i)
        for c in sorted(col_index):
            cand = col_index.get(c)
            if not cand:
                continue
            p = min(cand, key=lambda i: (abs(rows[i][c]), len(rows[i]), i))
            prow = rows[p]
            pv = prow[c]
            for j in prow:
                col_index[j].discard(p)
            for i in list(cand):
                r = rows[i]
                f = r[c] / pv
                for j, v in prow.items():
                    nv = r.get(j, 0) - f * v
                    if nv:
                        if j not in r:
                            col_index.setdefault(j, set()).add(i)
                        r[j] = nv
                    elif j in r:
                        del r[j]
                        col_index[j].discard(i)
            inv = 1 / pv
            self.pivots[c] = {j: v * inv for j, v in prow.items()}
            self.pivot_sources[c] = p
            rows[p] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: Mapping[int, Fraction]) -> dict[int, Fraction]:
        """Normal form of ``vec`` modulo the row space."""
        v = {j: _q(x) for j, x in vec.items() if x}
        for c in sorted(self.pivots):
            f = v.get(c)
            if not f:
                continue
            for j, x in self.pivots[c].items():
                nv = v.get(j, 0) - f * x
                if nv:
                    v[j] = nv
                else:
                    v.pop(j, None)
        return v

    def contains(self, vec: Mapping[int, Fraction]) -> bool:
        return not self.reduce(vec)

    def reduced_rows(self) -> dict[int, dict[int, Fraction]]:
        """Fully reduced (RREF) pivot rows, computed once on demand."""
        if self._rref is None:
            rref: dict[int, dict[int, Fraction]] = {}
            for c in sorted(self.pivots, reverse=True):
                row = dict(self.pivots[c])
                for c2 in [j for j in row if j != c and j in rref]:
                    f = row[c2]
                    for j, x in rref[c2].items():
                        nv = row.get(j, 0) - f * x
                        if nv:
                            row[j] = nv
                        else:
                            row.pop(j, None)
                rref[c] = row
            self._rref = rref
        return self._rref

    def kernel(self) -> list[dict[int, Fraction]]:
        """Basis of the right null space, one vector per free column."""
        rref = self.reduced_rows()
        free = [j for j in range(self.ncols) if j not in rref]
        by_free: dict[int, list[tuple[int, Fraction]]] = {f: [] for f in free}
        for c, row in rref.items():
            for j, x in row.items():
                if j != c:
                    by_free[j].append((c, x))
        basis = []
        for f in free:
            k = {f: Fraction(1)}
            for c, x in by_free[f]:
                k[c] = -x
            basis.append(k)
        return basis


def echelon(m: SparseMatrix) -> RowEchelon:
    return RowEchelon(m.sparse_rows(), m.ncols)


def rank(m: SparseMatrix) -> int:
    """Rank over Q."""
    return echelon(m).rank


def kernel_basis(m: SparseMatrix) -> list[list[Fraction]]:
    """Basis of ``{x : m x = 0}`` as dense column vectors."""
    out = []
    for k in echelon(m).kernel():
        v = [Fraction(0)] * m.ncols
        for j, x in k.items():
            v[j] = x
        out.append(v)
    return out


def in_row_space(m: SparseMatrix, v: Sequence) -> bool:
    """True iff ``v`` is a rational combination of the rows of ``m``."""
    if len(v) != m.ncols:
        raise ValueError(f"vector has {len(v)} entries, matrix has {m.ncols} columns")
    return echelon(m).contains(dict(enumerate(v)))


def solve(m: SparseMatrix, b: Sequence) -> list[Fraction] | None:
    """One solution ``x`` of ``m x = b``, or None if the system is inconsistent."""
    if len(b) != m.nrows:
        raise ValueError(f"right-hand side has {len(b)} entries, matrix has {m.nrows} rows")
    n = m.ncols
    rows = m.sparse_rows()
    for i, bi in enumerate(b):
        if bi:
            rows[i][n] = _q(bi)
    ech = RowEchelon(rows, n + 1)
    if n in ech.pivots:
        return None
    x = [Fraction(0)] * n
    for c, row in ech.reduced_rows().items():
        x[c] = row.get(n, Fraction(0))
    return x


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def write_csv(path, m: SparseMatrix) -> None:
    """Dense export, one row per line, entries as ``p/q`` fractions."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        for row in m.to_dense():
            w.writerow([_fmt(x) for x in row])

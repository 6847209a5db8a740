"""Sparse exact linear algebra over a :class:`FieldSpec`.

Vectors are dicts ``column -> nonzero scalar``.  Two reduced echelon forms
are used:

* leading form: pivot = first nonzero column (classical RREF), used for
  equation systems;
* trailing form: pivot = last nonzero column, used to normalise bases of
  subspaces.  For a kernel this is exactly the "free variable = 1" basis,
  e.g. ``ker [[1, 2], [2, 4]]`` over GF(7) is spanned by ``(5, 1)``.

Both forms are unique for a given subspace and column order, which keeps
reports byte-stable.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .exactfield import FieldSpec, Scalar

SparseVec = dict


def _axpy(F: FieldSpec, y: SparseVec, a: Scalar, x: SparseVec) -> None:
    """y += a*x in place, dropping zeros."""
    for c, v in x.items():
        s = F.add(y.get(c, F.zero), F.mul(a, v))
        if s == 0:
            y.pop(c, None)
        else:
            y[c] = s


class Echelon:
    """Incrementally maintained reduced echelon basis of a row space."""

    def __init__(self, field: FieldSpec, trailing: bool = False):
        self.field = field
        self.trailing = trailing
        self.rows: dict[int, SparseVec] = {}  # pivot column -> row (pivot entry 1)

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: SparseVec) -> SparseVec:
        """Remainder of ``vec`` modulo the current row space (a new dict)."""
        F = self.field
        out = dict(vec)
        for c in [c for c in out if c in self.rows]:
            a = out.get(c)
            if a:
                _axpy(F, out, F.neg(a), self.rows[c])
        return out

    def add(self, vec: SparseVec) -> bool:
        """Insert ``vec``; returns False if it was already in the span."""
        F = self.field
        r = self.reduce(vec)
        if not r:
            return False
        piv = max(r) if self.trailing else min(r)
        inv = F.inv(r[piv])
        r = {c: F.mul(inv, v) for c, v in r.items()}
        for row in self.rows.values():
            a = row.get(piv)
            if a:
                _axpy(F, row, F.neg(a), r)
        self.rows[piv] = r
        return True

    def contains(self, vec: SparseVec) -> bool:
        return not self.reduce(vec)

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def basis(self) -> list[SparseVec]:
        return [dict(self.rows[c]) for c in sorted(self.rows)]


def echelon_basis(field: FieldSpec, vectors: Iterable[SparseVec], trailing: bool = True) -> list[SparseVec]:
    E = Echelon(field, trailing=trailing)
    for v in vectors:
        E.add(v)
    return E.basis()


def sparse_rank(field: FieldSpec, rows: Iterable[SparseVec]) -> int:
    E = Echelon(field)
    for r in rows:
        E.add(r)
    return len(E)


def sparse_kernel(field: FieldSpec, rows: Iterable[SparseVec], ncols: int) -> list[SparseVec]:
    """Kernel of the system given by sparse ``rows`` over ``ncols`` unknowns.

    Returned in trailing reduced form: one vector per free column ``f`` with
    entry 1 at ``f``, zero at every other free column, sorted by ``f``.
    """
    F = field
    E = Echelon(F)
    for r in rows:
        E.add(r)
    pivot_rows = E.rows
    by_col: dict[int, list[tuple[int, Scalar]]] = {}
    for p, row in pivot_rows.items():
        for c, v in row.items():
            if c != p:
                by_col.setdefault(c, []).append((p, v))
    out = []
    for f in range(ncols):
        if f in pivot_rows:
            continue
        vec = {f: F.one}
        for p, v in by_col.get(f, ()):
            vec[p] = F.neg(v)
        out.append(vec)
    return out


def dense_to_sparse(field: FieldSpec, M: Sequence[Sequence]) -> list[SparseVec]:
    rows = []
    for row in M:
        rows.append({j: field.convert(v) for j, v in enumerate(row) if field.convert(v) != 0})
    return rows


def matmul(field: FieldSpec, A, B):
    n, m, k = len(A), len(B), len(B[0]) if B else 0
    F = field
    out = []
    for i in range(n):
        row = []
        for j in range(k):
            s = F.zero
            for t in range(m):
                s = F.add(s, F.mul(A[i][t], B[t][j]))
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def identity(field: FieldSpec, r: int):
    return tuple(tuple(field.one if i == j else field.zero for j in range(r)) for i in range(r))


def matrix_rank(field: FieldSpec, M) -> int:
    return sparse_rank(field, dense_to_sparse(field, M))

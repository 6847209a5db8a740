"""Graded invariants R^H_n, decomposables and the finite-generation probe.

Coordinates on R_n are the r**n words in lexicographic order.  Bases are
returned in trailing reduced echelon form (see :mod:`hopfinv.linalg`), so a
basis of a given subspace is unique and reports are reproducible.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

from .action import ActionSpec, group_operator, is_invariant, skew_operator
from .constructions import classify_action, ScalarClassification
from .exactfield import FieldSpec
from .freealg import FreePoly, insert, words_of_degree
from .linalg import Echelon, dense_to_sparse, sparse_kernel

DEFAULT_SIZE_CAP = 10**6


class SizeCapExceeded(RuntimeError):
    pass


def size_cap() -> int:
    env = os.environ.get("HOPFINV_SIZE_CAP")
    return int(env) if env else DEFAULT_SIZE_CAP


def check_size(r: int, n: int, allow_large: bool = False) -> None:
    if not allow_large and r**n > size_cap():
        raise SizeCapExceeded(f"dim R_{n} = {r}^{n} = {r**n} exceeds the size cap {size_cap()}")


@dataclass(frozen=True)
class KernelBasis:
    vectors: tuple  # tuple of coordinate tuples

    def __len__(self):
        return len(self.vectors)


def kernel_basis(field: FieldSpec, M: Sequence[Sequence], ncols: int | None = None) -> KernelBasis:
    """Basis of {v : Mv = 0}; one vector per free column, 1 there and 0 at
    the other free columns."""
    if ncols is None:
        ncols = len(M[0]) if M else 0
    vecs = sparse_kernel(field, dense_to_sparse(field, M), ncols)
    return KernelBasis(tuple(tuple(v.get(c, field.zero) for c in range(ncols)) for v in vecs))


# -- coordinates -----------------------------------------------------------


def word_index(w, r: int) -> int:
    idx = 0
    for j in w:
        idx = idx * r + (j - 1)
    return idx


def index_word(idx: int, r: int, n: int):
    out = []
    for _ in range(n):
        idx, d = divmod(idx, r)
        out.append(d + 1)
    return tuple(reversed(out))


def to_vector(f: FreePoly) -> dict:
    return {word_index(w, f.rank): c for w, c in f.terms.items()}


def from_vector(field: FieldSpec, r: int, n: int, vec: dict) -> FreePoly:
    return FreePoly._raw(field, r, {index_word(i, r, n): c for i, c in vec.items() if c != 0})


# -- invariants ------------------------------------------------------------


def invariance_rows(s: ActionSpec, n: int) -> list[dict]:
    """Stacked sparse equations whose kernel on R_n is R^H_n."""
    F, r = s.field, s.rank
    ops = [(group_operator(s, g.name), True) for g in s.group_likes]
    ops += [(skew_operator(s, d.name), False) for d in s.skew_primitives]
    rows: dict[tuple[int, int], dict] = {}
    for k, (op, subtract_id) in enumerate(ops):
        for w in words_of_degree(r, n):
            col = word_index(w, r)
            image = dict(op(w))
            if subtract_id:
                v = F.sub(image.get(w, F.zero), F.one)
                if v == 0:
                    image.pop(w, None)
                else:
                    image[w] = v
            for u, c in image.items():
                rows.setdefault((k, word_index(u, r)), {})[col] = c
    return [rows[key] for key in sorted(rows)]


def invariant_basis(s: ActionSpec, n: int, allow_large: bool = False) -> list[FreePoly]:
    check_size(s.rank, n, allow_large)
    vecs = sparse_kernel(s.field, invariance_rows(s, n), s.rank**n)
    return [from_vector(s.field, s.rank, n, v) for v in vecs]


@dataclass
class Decomposables:
    degree: int
    basis: list  # FreePoly, trailing echelon form
    echelon: Echelon = dc_field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)


def decomposable_component(s: ActionSpec, n: int, bases: dict, allow_large: bool = False) -> Decomposables:
    """Span of f*g with f in R^H_a, g in R^H_{n-a}, 0 < a < n.

    ``bases`` maps each degree 1..n-1 to a basis of R^H there.
    """
    check_size(s.rank, n, allow_large)
    E = Echelon(s.field, trailing=True)
    for a in range(1, n):
        for f in bases[a]:
            for g in bases[n - a]:
                E.add(to_vector(f * g))
    basis = [from_vector(s.field, s.rank, n, v) for v in E.basis()]
    return Decomposables(n, basis, E)


def new_generators(s: ActionSpec, inv_basis: list, dec: Decomposables) -> list[FreePoly]:
    """Invariants of ``inv_basis`` independent modulo the decomposables (in basis order)."""
    E = Echelon(s.field, trailing=True)
    E.rows = {p: dict(row) for p, row in dec.echelon.rows.items()}
    return [f for f in inv_basis if E.add(to_vector(f))]


def in_span(basis: list, f: FreePoly) -> bool:
    if f.is_zero():
        return True
    if not basis:
        return False
    E = Echelon(f.field, trailing=True)
    for b in basis:
        E.add(to_vector(b))
    return E.contains(to_vector(f))


# -- probe -----------------------------------------------------------------


@dataclass
class ProbeRow:
    n: int
    dim_R: int
    dim_inv: int
    dim_dec: int
    new_gens: int
    generators: list = dc_field(default_factory=list, repr=False)


@dataclass
class ProbeReport:
    horizon: int
    rank: int
    rows: list
    classification: ScalarClassification
    minimal_degree: Optional[int]
    verdict: str

    @property
    def new_gens(self) -> list[int]:
        return [row.new_gens for row in self.rows]

    @property
    def dims(self) -> list[int]:
        return [row.dim_inv for row in self.rows]


SCALAR_VERDICT = "consistent with scalar case (Theorem: scalar ⇒ finitely generated)"
NONSCALAR_VERDICT = "consistent with non-scalar case (Theorem: finitely generated ⇒ scalar)"


def _verdict(cls: ScalarClassification, rows, t, N) -> str:
    with_new = [row.n for row in rows if row.new_gens]
    if cls.is_scalar:
        if t is None:
            return f"no invariants of positive degree up to {N}; {SCALAR_VERDICT}"
        if with_new == [t]:
            return f"no new generators in degrees ({t}, {N}]; {SCALAR_VERDICT}"
        return (
            f"scalar action but new generators in degrees {with_new}; "
            "not the pattern expected for a scalar action"
        )
    if not with_new:
        return f"no invariants of positive degree up to {N}; a finite horizon cannot separate the cases"
    degs = ", ".join(map(str, with_new))
    if with_new[-1] == N:
        return f"new generators in degrees {degs}; {NONSCALAR_VERDICT}"
    return (
        f"new generators in degrees {degs}, none in ({with_new[-1]}, {N}]; "
        "a finite horizon cannot witness infinite generation"
    )


def probe_generation(s: ActionSpec, N: int, allow_large: bool = False, keep_generators: bool = True) -> ProbeReport:
    if N < 1:
        raise ValueError("horizon must be at least 1")
    check_size(s.rank, N, allow_large)
    bases: dict[int, list] = {}
    rows = []
    for n in range(1, N + 1):
        bases[n] = invariant_basis(s, n, allow_large=True)
        dec = decomposable_component(s, n, bases, allow_large=True)
        gens = new_generators(s, bases[n], dec) if keep_generators else []
        rows.append(
            ProbeRow(n, s.rank**n, len(bases[n]), dec.dim, len(bases[n]) - dec.dim, gens)
        )
    cls = classify_action(s)
    t = next((row.n for row in rows if row.dim_inv), None)
    return ProbeReport(N, s.rank, rows, cls, t, _verdict(cls, rows, t, N))


def check_veronese(report: ProbeReport) -> list[bool]:
    """Per degree: dim R^H_n == r^n if t | n else 0 (only meaningful for scalar actions)."""
    t, r = report.minimal_degree, report.rank
    out = []
    for row in report.rows:
        if t is None:
            out.append(row.dim_inv == 0)
        else:
            out.append(row.dim_inv == (r**row.n if row.n % t == 0 else 0))
    return out


# -- insert closure -----------------------------------------------------------


@dataclass
class InsertCheck:
    checked: int
    violations: list  # (i, j, k, f, g)

    @property
    def ok(self) -> bool:
        return not self.violations


def insert_closure_check(s: ActionSpec, max_degree: int, bases: dict | None = None) -> InsertCheck:
    """Apply every insert(i, j, k, f, g) with f, g from the computed invariant
    bases (degrees i+j >= 1, k >= 1, i+j+k <= max_degree) and test invariance."""
    if bases is None:
        bases = {n: invariant_basis(s, n) for n in range(1, max_degree)}
    checked = 0
    violations = []
    for d in range(1, max_degree):
        for k in range(1, max_degree - d + 1):
            for f in bases.get(d, ()):
                for g in bases.get(k, ()):
                    for i in range(d + 1):
                        h = insert(i, d - i, k, f, g)
                        checked += 1
                        if not is_invariant(s, h):
                            violations.append((i, d - i, k, f, g))
    return InsertCheck(checked, violations)

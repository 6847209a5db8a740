"""Linear Hopf actions on k<x1, ..., xr> presented by generators.

Matrices use the column convention: entry ``[i][j]`` (0-based) is the
coefficient of ``x_{i+1}`` in ``h . x_{j+1}``.

A group-like generator acts as the algebra endomorphism extending its
matrix.  A ``(sigma, tau)``-skew-primitive ``d`` acts by the twisted
Leibniz rule ``d(uv) = d(u) sigma(v) + tau(u) d(v)``, so on a word

    d(x_{j1} ... x_{jn}) = sum_k tau(x_{j1} ... x_{j(k-1)}) d(x_{jk}) sigma(x_{j(k+1)} ... x_{jn})

and ``d(1) = 0``.  The name ``"1"`` always denotes the identity group-like.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .exactfield import FieldSpec, Scalar
from .freealg import FreePoly, Word
from .linalg import identity, matmul, matrix_rank

IDENTITY = "1"

Matrix = tuple  # tuple of row tuples


class UnknownGenerator(KeyError):
    pass


@dataclass(frozen=True)
class GroupLikeGen:
    name: str
    matrix: Matrix


@dataclass(frozen=True)
class SkewPrimitiveGen:
    name: str
    sigma: str
    tau: str
    matrix: Matrix


@dataclass(frozen=True)
class Finding:
    severity: str  # "Error" | "Warning"
    message: str

    def __str__(self):
        return f"{self.severity}: {self.message}"


@dataclass(frozen=True)
class ActionSpec:
    field: FieldSpec
    rank: int
    group_likes: tuple = ()
    skew_primitives: tuple = ()
    group_table: Optional[dict] = dc_field(default=None, compare=True, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "group_likes", tuple(self.group_likes))
        object.__setattr__(self, "skew_primitives", tuple(self.skew_primitives))

    def group_like(self, name: str) -> Matrix:
        if name == IDENTITY:
            return identity(self.field, self.rank)
        for g in self.group_likes:
            if g.name == name:
                return g.matrix
        raise UnknownGenerator(name)

    def skew_primitive(self, name: str) -> SkewPrimitiveGen:
        for d in self.skew_primitives:
            if d.name == name:
                return d
        raise UnknownGenerator(name)

    def generator_names(self) -> list[str]:
        return [g.name for g in self.group_likes] + [d.name for d in self.skew_primitives]


def make_spec(field: FieldSpec, rank: int, group_likes=None, skew_primitives=None, group_table=None) -> ActionSpec:
    """Convenience constructor taking plain nested lists and literals.

    ``group_likes`` maps name -> matrix; ``skew_primitives`` maps
    name -> (sigma, tau, matrix).
    """
    def conv(M):
        return tuple(tuple(field.convert(v) for v in row) for row in M)

    gl = tuple(GroupLikeGen(n, conv(M)) for n, M in (group_likes or {}).items())
    sp = tuple(SkewPrimitiveGen(n, s, t, conv(M)) for n, (s, t, M) in (skew_primitives or {}).items())
    return ActionSpec(field, rank, gl, sp, dict(group_table) if group_table is not None else None)


def diagonal(values) -> list[list]:
    n = len(values)
    return [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]


# -- validation -----------------------------------------------------------


def _shape_ok(M, r) -> bool:
    return len(M) == r and all(len(row) == r for row in M)


def validate_spec(s: ActionSpec) -> list[Finding]:
    out: list[Finding] = []
    F, r = s.field, s.rank

    def err(msg):
        out.append(Finding("Error", msg))

    if not isinstance(r, int) or r < 1:
        err(f"rank must be a positive integer, got {r!r}")
        return out

    names = [g.name for g in s.group_likes]
    all_names = names + [d.name for d in s.skew_primitives]
    for n in sorted({n for n in all_names if all_names.count(n) > 1}):
        err(f"duplicate generator name {n!r}")
    if IDENTITY in all_names:
        err(f"generator name {IDENTITY!r} is reserved for the identity")

    good_shape = True
    for g in s.group_likes:
        if not _shape_ok(g.matrix, r):
            err(f"group-like {g.name!r}: matrix is not {r}x{r}")
            good_shape = False
        elif not all(F.contains(v) for row in g.matrix for v in row):
            err(f"group-like {g.name!r}: entries not in {F}")
            good_shape = False
        elif matrix_rank(F, g.matrix) < r:
            err(f"group-like {g.name!r}: group-like matrix not invertible")
    for d in s.skew_primitives:
        if not _shape_ok(d.matrix, r):
            err(f"skew-primitive {d.name!r}: matrix is not {r}x{r}")
            good_shape = False
        elif not all(F.contains(v) for row in d.matrix for v in row):
            err(f"skew-primitive {d.name!r}: entries not in {F}")
            good_shape = False
        for role, ref in (("sigma", d.sigma), ("tau", d.tau)):
            if ref != IDENTITY and ref not in names:
                err(f"skew-primitive {d.name!r}: unknown group-like reference {role}={ref!r}")

    if s.group_table is None:
        out.append(Finding("Warning", "faithfulness not verifiable from generator data"))
    elif good_shape:
        out.extend(_check_group_table(s, names))
    return out


def _check_group_table(s: ActionSpec, names: list[str]) -> list[Finding]:
    out = []
    elems = [IDENTITY] + names
    table = {}
    for key, val in s.group_table.items():
        a, b = key
        if a not in elems or b not in elems or val not in elems:
            out.append(Finding("Error", f"group table entry {a},{b} -> {val} references an unknown element"))
            continue
        table[a, b] = val
    for a in elems:
        for x, y in ((IDENTITY, a), (a, IDENTITY)):
            if table.setdefault((x, y), a) != a:
                out.append(Finding("Error", f"group table: {x}*{y} must be {a}"))
    if out:
        return out
    missing = [f"{a},{b}" for a in elems for b in elems if (a, b) not in table]
    if missing:
        return [Finding("Error", f"group table incomplete: missing {', '.join(missing)}")]
    for a in elems:
        for b in elems:
            for c in elems:
                if table[table[a, b], c] != table[a, table[b, c]]:
                    out.append(Finding("Error", f"group table not associative at ({a},{b},{c})"))
                    return out
    for a in elems:
        if not any(table[a, b] == IDENTITY for b in elems):
            out.append(Finding("Error", f"group table: {a} has no inverse"))
    F = s.field
    for (a, b), c in sorted(table.items()):
        if matmul(F, s.group_like(a), s.group_like(b)) != s.group_like(c):
            out.append(Finding("Error", f"representation inconsistent: M({a})M({b}) != M({c})"))
    return out


def errors(findings) -> list[Finding]:
    return [f for f in findings if f.severity == "Error"]


# -- operators on R -------------------------------------------------------


def column_images(field: FieldSpec, M: Matrix) -> list[dict[Word, Scalar]]:
    """``images[j-1]`` is h . x_j as a sparse map from length-1 words."""
    r = len(M)
    return [{(i + 1,): M[i][j] for i in range(r) if M[i][j] != 0} for j in range(r)]


def _mul_terms(F: FieldSpec, a: dict, b: dict) -> dict:
    out: dict = {}
    for u, x in a.items():
        for v, y in b.items():
            w = u + v
            s = F.add(out.get(w, F.zero), F.mul(x, y))
            if s == 0:
                out.pop(w, None)
            else:
                out[w] = s
    return out


def _acc(F: FieldSpec, out: dict, terms: dict, c: Scalar) -> None:
    for w, v in terms.items():
        s = F.add(out.get(w, F.zero), F.mul(c, v))
        if s == 0:
            out.pop(w, None)
        else:
            out[w] = s


def endo_word(F: FieldSpec, images, w: Word) -> dict:
    """Image of a word under the endomorphism with the given column images."""
    out = {(): F.one}
    for j in w:
        out = _mul_terms(F, out, images[j - 1])
    return out


def skew_word(F: FieldSpec, d_images, sigma_images, tau_images, w: Word) -> dict:
    n = len(w)
    # right[k] = sigma(w[k:]), built from the right
    right = [None] * (n + 1)
    right[n] = {(): F.one}
    for k in range(n - 1, -1, -1):
        right[k] = _mul_terms(F, sigma_images[w[k] - 1], right[k + 1])
    out: dict = {}
    left = {(): F.one}  # tau(w[:k])
    for k in range(n):
        term = _mul_terms(F, _mul_terms(F, left, d_images[w[k] - 1]), right[k + 1])
        _acc(F, out, term, F.one)
        left = _mul_terms(F, left, tau_images[w[k] - 1])
    return out


def _linear(f: FreePoly, word_map) -> FreePoly:
    F = f.field
    out: dict = {}
    for w, c in f.terms.items():
        _acc(F, out, word_map(w), c)
    return FreePoly._raw(F, f.rank, out)


def _check_poly(s: ActionSpec, f: FreePoly):
    if f.field != s.field or f.rank != s.rank:
        raise ValueError(f"polynomial over {f.field}/rank {f.rank} does not match spec {s.field}/rank {s.rank}")


def apply_group_like(s: ActionSpec, sigma: str, f: FreePoly) -> FreePoly:
    _check_poly(s, f)
    images = column_images(s.field, s.group_like(sigma))
    return _linear(f, lambda w: endo_word(s.field, images, w))


def skew_operator(s: ActionSpec, delta: str):
    """Word map for the skew-primitive ``delta`` (used by the linear-algebra layer)."""
    d = s.skew_primitive(delta)
    F = s.field
    di = column_images(F, d.matrix)
    si = column_images(F, s.group_like(d.sigma))
    ti = column_images(F, s.group_like(d.tau))
    return lambda w: skew_word(F, di, si, ti, w)


def group_operator(s: ActionSpec, sigma: str):
    images = column_images(s.field, s.group_like(sigma))
    return lambda w: endo_word(s.field, images, w)


def apply_skew_primitive(s: ActionSpec, delta: str, f: FreePoly) -> FreePoly:
    _check_poly(s, f)
    return _linear(f, skew_operator(s, delta))


def is_invariant(s: ActionSpec, f: FreePoly) -> bool:
    """sigma(f) = f for every group-like and d(f) = 0 for every skew-primitive."""
    for g in s.group_likes:
        if apply_group_like(s, g.name, f) != f:
            return False
    for d in s.skew_primitives:
        if not apply_skew_primitive(s, d.name, f).is_zero():
            return False
    return True

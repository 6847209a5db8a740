"""Words, sparse noncommutative polynomials and the insert operator.

A word is a tuple of generator indices in ``1..r``; the empty tuple is the
monoid identity.  A :class:`FreePoly` is an immutable map from words to
nonzero field elements.  Words are ordered shorter-first, then
lexicographically, and every iteration over a support follows that order.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterable, Iterator, Mapping

from .exactfield import FieldMismatch, FieldSpec, Scalar

Word = tuple


class RankMismatch(ValueError):
    pass


class DegreeMismatch(ValueError):
    pass


class PolyParseError(ValueError):
    pass


def word_key(w: Word):
    return (len(w), w)


def words_of_degree(r: int, n: int) -> list[Word]:
    """All ``r**n`` words of length ``n`` in lexicographic order."""
    return list(itertools.product(range(1, r + 1), repeat=n))


def format_word(w: Word) -> str:
    return "*".join(f"x{i}" for i in w) if w else "1"


class FreePoly:
    """Element of the free algebra k<x1, ..., xr>."""

    __slots__ = ("field", "rank", "_terms", "_hash")

    def __init__(self, field: FieldSpec, rank: int, terms: Mapping[Word, Scalar] | None = None):
        self.field = field
        self.rank = rank
        clean = {}
        if terms:
            for w, c in terms.items():
                w = tuple(w)
                if any(not 1 <= i <= rank for i in w):
                    raise RankMismatch(f"word {w} has an index outside 1..{rank}")
                if c != 0:
                    clean[w] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, field, rank, terms):
        # Trusted constructor: terms already canonical and nonzero.
        obj = cls.__new__(cls)
        obj.field = field
        obj.rank = rank
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, field: FieldSpec, rank: int) -> FreePoly:
        return cls._raw(field, rank, {})

    @classmethod
    def one(cls, field: FieldSpec, rank: int) -> FreePoly:
        return cls._raw(field, rank, {(): field.one})

    @classmethod
    def word(cls, field: FieldSpec, rank: int, w: Iterable[int], coeff: Scalar | None = None) -> FreePoly:
        c = field.one if coeff is None else field.convert(coeff)
        return cls(field, rank, {tuple(w): c})

    @classmethod
    def gen(cls, field: FieldSpec, rank: int, i: int) -> FreePoly:
        return cls.word(field, rank, (i,))

    # -- inspection -----------------------------------------------------

    @property
    def terms(self) -> dict[Word, Scalar]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Word, Scalar]]:
        for w in sorted(self._terms, key=word_key):
            yield w, self._terms[w]

    def support(self) -> list[Word]:
        return sorted(self._terms, key=word_key)

    def coeff(self, w: Word) -> Scalar:
        return self._terms.get(tuple(w), self.field.zero)

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set[int]:
        return {len(w) for w in self._terms}

    def is_homogeneous(self, n: int | None = None) -> bool:
        """Zero counts as homogeneous of every degree."""
        ds = self.degrees()
        if n is None:
            return len(ds) <= 1
        return ds <= {n}

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(self.degrees())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    # -- arithmetic -----------------------------------------------------

    def _check(self, other: FreePoly):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} vs {other.rank}")

    def _coerce(self, other):
        if isinstance(other, FreePoly):
            self._check(other)
            return other
        c = self.field.convert(other)
        return FreePoly._raw(self.field, self.rank, {(): c} if c != 0 else {})

    def __add__(self, other):
        other = self._coerce(other)
        F = self.field
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = F.add(out.get(w, F.zero), c)
            if s == 0:
                out.pop(w, None)
            else:
                out[w] = s
        return FreePoly._raw(F, self.rank, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return FreePoly._raw(F, self.rank, {w: F.neg(c) for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c: Scalar) -> FreePoly:
        F = self.field
        c = F.convert(c)
        if c == 0:
            return FreePoly.zero(F, self.rank)
        return FreePoly._raw(F, self.rank, {w: F.mul(c, v) for w, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, FreePoly):
            return poly_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out = FreePoly.one(self.field, self.rank)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, FreePoly):
            return self.field == other.field and self.rank == other.rank and self._terms == other._terms
        if isinstance(other, (int, str)) or hasattr(other, "denominator"):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.rank, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"FreePoly({format_poly(self)!r}, rank={self.rank}, field={self.field})"


def poly_mul(f: FreePoly, g: FreePoly) -> FreePoly:
    """Bilinear extension of word concatenation."""
    f._check(g)
    F = f.field
    out: dict[Word, Scalar] = {}
    for u, a in f._terms.items():
        for v, b in g._terms.items():
            w = u + v
            s = F.add(out.get(w, F.zero), F.mul(a, b))
            if s == 0:
                out.pop(w, None)
            else:
                out[w] = s
    return FreePoly._raw(F, f.rank, out)


def homogeneous_component(f: FreePoly, n: int) -> FreePoly:
    if n < 0:
        raise ValueError("degree must be non-negative")
    return FreePoly._raw(f.field, f.rank, {w: c for w, c in f._terms.items() if len(w) == n})


def insert(i: int, j: int, k: int, f: FreePoly, g: FreePoly) -> FreePoly:
    """Splice ``g`` into ``f`` after position ``i``: on words, uvw -> uwv.

    ``f`` must be homogeneous of degree ``i + j`` and ``g`` of degree ``k``.
    """
    if min(i, j, k) < 0:
        raise ValueError("insert degrees must be non-negative")
    f._check(g)
    if not f.is_homogeneous(i + j):
        raise DegreeMismatch(f"first argument is not homogeneous of degree {i + j}")
    if not g.is_homogeneous(k):
        raise DegreeMismatch(f"second argument is not homogeneous of degree {k}")
    F = f.field
    out: dict[Word, Scalar] = {}
    for uv, a in f._terms.items():
        u, v = uv[:i], uv[i:]
        for w, b in g._terms.items():
            word = u + w + v
            s = F.add(out.get(word, F.zero), F.mul(a, b))
            if s == 0:
                out.pop(word, None)
            else:
                out[word] = s
    return FreePoly._raw(F, f.rank, out)


def has_prefix_in_support(f: FreePoly, w: Iterable[int]) -> bool:
    """True iff some word of supp(f) starts with ``w``."""
    w = tuple(w)
    n = len(w)
    return any(u[:n] == w for u in f._terms)


# -- text form ----------------------------------------------------------


def format_poly(f: FreePoly) -> str:
    """Render as a signed sum, e.g. ``x1*x2*x2 - x2*x1*x2 + 3/5*x2``."""
    if not f._terms:
        return "0"
    F = f.field
    parts = []
    for w, c in f.items():
        neg = False
        if not F.is_prime and c < 0:
            neg, c = True, -c
        lit = F.format(c)
        if not w:
            body = lit
        elif c == 1:
            body = format_word(w)
        else:
            body = f"{lit}*{format_word(w)}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


_TERM_SPLIT = re.compile(r"\s*([+-])\s*")
_FACTOR = re.compile(r"^x(\d+)$")


def parse_poly(text: str, field: FieldSpec, rank: int) -> FreePoly:
    """Inverse of :func:`format_poly`; also accepts repeated or unsimplified terms."""
    s = text.strip()
    if not s:
        raise PolyParseError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    pieces = _TERM_SPLIT.split(s)
    # split yields ['', sign, term, sign, term, ...]
    if pieces[0].strip():
        raise PolyParseError(f"cannot parse {text!r}")
    out = FreePoly.zero(field, rank)
    for sign, term in zip(pieces[1::2], pieces[2::2]):
        term = term.strip()
        if not term:
            raise PolyParseError(f"dangling sign in {text!r}")
        coeff = field.one
        word = []
        for tok in term.split("*"):
            tok = tok.strip()
            m = _FACTOR.match(tok)
            if m:
                idx = int(m.group(1))
                if not 1 <= idx <= rank:
                    raise PolyParseError(f"generator x{idx} outside rank {rank}")
                word.append(idx)
            elif not word:
                try:
                    coeff = field.mul(coeff, field.parse(tok))
                except Exception as exc:
                    raise PolyParseError(f"bad factor {tok!r} in {text!r}") from exc
            else:
                raise PolyParseError(f"scalar {tok!r} after generators in {text!r}")
        if sign == "-":
            coeff = field.neg(coeff)
        out = out + FreePoly.word(field, rank, word, coeff)
    return out

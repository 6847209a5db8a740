"""Explicit constructions: c_n, scalar classification, minimal invariant
degree, the Jordan-block element with ``d(f) = c_n(eta, mu) g``, and prefix
pumping through repeated inserts.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .action import (
    IDENTITY,
    ActionSpec,
    apply_skew_primitive,
    is_invariant,
)
from .exactfield import FieldSpec, Scalar
from .freealg import FreePoly, has_prefix_in_support, insert


class NotScalar(ValueError):
    pass


class NotJordanShape(ValueError):
    pass


class NotScalarSigmaTau(ValueError):
    pass


class InvalidIndex(ValueError):
    pass


class PreconditionFailed(ValueError):
    pass


class CancellationDetected(RuntimeError):
    pass


def cn_eval(field: FieldSpec, n: int, y: Scalar, z: Scalar) -> Scalar:
    """sum_{i=0}^{n-1} y^(n-1-i) z^i, evaluated term by term."""
    if n <= 0:
        raise ValueError(f"c_n needs n >= 1, got {n}")
    F = field
    y, z = F.convert(y), F.convert(z)
    ypow = [F.one]
    zpow = [F.one]
    for _ in range(n - 1):
        ypow.append(F.mul(ypow[-1], y))
        zpow.append(F.mul(zpow[-1], z))
    total = F.zero
    for i in range(n):
        total = F.add(total, F.mul(ypow[n - 1 - i], zpow[i]))
    return total


# -- scalar classification --------------------------------------------------


def scalar_base(field: FieldSpec, M) -> Optional[Scalar]:
    """The lambda with M = lambda*I, or None."""
    lam = M[0][0]
    for i, row in enumerate(M):
        for j, v in enumerate(row):
            if v != (lam if i == j else field.zero):
                return None
    return lam


@dataclass(frozen=True)
class ScalarClassification:
    verdict: str  # "Scalar" | "LinearNonScalar"
    bases: dict = dc_field(default_factory=dict)

    @property
    def is_scalar(self) -> bool:
        return self.verdict == "Scalar"


def classify_action(s: ActionSpec) -> ScalarClassification:
    bases = {}
    for name, M in [(g.name, g.matrix) for g in s.group_likes] + [(d.name, d.matrix) for d in s.skew_primitives]:
        lam = scalar_base(s.field, M)
        if lam is None:
            return ScalarClassification("LinearNonScalar")
        bases[name] = lam
    return ScalarClassification("Scalar", bases)


def minimal_invariant_degree(s: ActionSpec, cap: int = 64) -> Optional[int]:
    """Least t <= cap with x1^t invariant; in the scalar case that forces
    every word of length t to be invariant."""
    if not classify_action(s).is_scalar:
        raise NotScalar("minimal invariant degree is defined here only for scalar actions")
    for t in range(1, cap + 1):
        if is_invariant(s, FreePoly.word(s.field, s.rank, (1,) * t)):
            return t
    return None


# -- Jordan blocks -----------------------------------------------------------


@dataclass(frozen=True)
class JordanShape:
    blocks: tuple  # ((start, end, eigenvalue), ...), 1-based inclusive

    def block_of(self, i: int):
        for b in self.blocks:
            if b[0] <= i <= b[1]:
                return b
        raise InvalidIndex(i)


def jordan_shape(field: FieldSpec, M) -> JordanShape:
    """Read off Jordan blocks (column convention: d.x_j = lam x_j + x_{j+1}).

    Raises NotJordanShape if ``M`` is not in that form.
    """
    r = len(M)
    blocks = []
    j = 0
    while j < r:
        lam = M[j][j]
        start = j
        while j + 1 < r and M[j + 1][j] == 1 and M[j + 1][j + 1] == lam:
            j += 1
        blocks.append((start + 1, j + 1, lam))
        j += 1
    expected = [[field.zero] * r for _ in range(r)]
    for b, e, lam in blocks:
        for k in range(b - 1, e):
            expected[k][k] = lam
            if k + 1 < e:
                expected[k + 1][k] = field.one
    if [list(row) for row in M] != expected:
        raise NotJordanShape("skew-primitive matrix is not in lower Jordan normal form")
    return JordanShape(tuple(blocks))


def _sigma_tau_bases(s: ActionSpec, delta: str):
    d = s.skew_primitive(delta)
    eta = scalar_base(s.field, s.group_like(d.sigma))
    mu = scalar_base(s.field, s.group_like(d.tau))
    if eta is None or mu is None:
        raise NotScalarSigmaTau(f"{delta}: sigma={d.sigma!r} and tau={d.tau!r} must act scalarly")
    return d, eta, mu


def _compositions(total: int, parts: int, lo: int, hi: int):
    """Tuples of ``parts`` integers in [lo, hi] summing to ``total``, lex order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(lo, hi + 1):
        rest = total - first
        if (parts - 1) * lo <= rest <= (parts - 1) * hi:
            for tail in _compositions(rest, parts - 1, lo, hi):
                yield (first,) + tail


def jair_element(s: ActionSpec, delta: str, i: int, n: int) -> FreePoly:
    """Sum of the words x_{j1}...x_{jn} with j_1+...+j_n = i + (n-1)s and
    every j_k in [i, s], where s ends the Jordan block containing i.

    The window [i, s] keeps every index inside the block; the upper bound
    alone already forces j_k >= i.
    """
    d, _, _ = _sigma_tau_bases(s, delta)
    if not 1 <= i <= s.rank:
        raise InvalidIndex(f"index {i} outside 1..{s.rank}")
    if n < 1:
        raise ValueError("n must be positive")
    shape = jordan_shape(s.field, d.matrix)
    _, end, _ = shape.block_of(i)
    terms = {w: s.field.one for w in _compositions(i + (n - 1) * end, n, i, end)}
    return FreePoly(s.field, s.rank, terms)


@dataclass
class FrobeniusResult:
    p: int
    power: FreePoly  # f^p
    image: FreePoly  # d(f^p)

    @property
    def is_zero(self) -> bool:
        return self.image.is_zero()

    @property
    def discrepancy(self) -> bool:
        # The commuting-power shortcut d(f^k) = k n eta^(n+k-2) g^k predicts 0 at k = p.
        return not self.is_zero


@dataclass
class JairReport:
    delta: str
    i: int
    n: int
    block_end: int
    eta: Scalar
    mu: Scalar
    lam: Scalar
    c: Scalar
    f: FreePoly
    image: FreePoly
    prefix_ok: bool
    zero_branch_ok: Optional[bool]  # None when c != 0
    residual_ok: Optional[bool]  # None when c == 0
    quotient: Optional[FreePoly]  # (d(f) - lam c f) / c
    quotient_is_shift_sum: Optional[bool]
    frobenius: Optional[FrobeniusResult] = None
    frobenius_note: str = ""

    @property
    def ok(self) -> bool:
        checks = [self.prefix_ok, self.zero_branch_ok, self.residual_ok, self.quotient_is_shift_sum]
        return all(c is not False for c in checks)


def jair_verify(s: ActionSpec, delta: str, i: int, n: int, frobenius: bool = False) -> JairReport:
    F = s.field
    d, eta, mu = _sigma_tau_bases(s, delta)
    f = jair_element(s, delta, i, n)
    shape = jordan_shape(F, d.matrix)
    _, end, lam = shape.block_of(i)
    D = apply_skew_primitive(s, delta, f)
    c = cn_eval(F, n, eta, mu)
    prefix_ok = has_prefix_in_support(f, (i,)) and f.coeff((i,) + (end,) * (n - 1)) != 0

    zero_ok = residual_ok = shift_ok = None
    quotient = None
    if c == 0:
        zero_ok = D.is_zero()
    else:
        resid = D - f.scale(F.mul(lam, c))
        target = i + 1 + (n - 1) * end
        residual_ok = all(sum(w) == target and max(w) <= end for w in resid.support())
        quotient = resid.scale(F.inv(c))
        shifted = {w: F.one for w in _compositions(target, n, i + 1, end)} if i < end else {}
        shift_ok = quotient == FreePoly(F, s.rank, shifted)

    report = JairReport(
        delta, i, n, end, eta, mu, lam, c, f, D, prefix_ok, zero_ok, residual_ok, quotient, shift_ok
    )
    if frobenius:
        p = F.characteristic
        if p == 0:
            report.frobenius_note = "not applicable: characteristic 0"
        elif eta != mu:
            report.frobenius_note = "not applicable: eta != mu"
        else:
            fp = f**p
            report.frobenius = FrobeniusResult(p, fp, apply_skew_primitive(s, delta, fp))
            if report.frobenius.discrepancy:
                report.frobenius_note = (
                    f"d(f^{p}) != 0: f and d(f)/c do not commute, so the shortcut "
                    f"d(f^k) = k*n*eta^(n+k-2)*g^k fails and f^{p} is not d-invariant"
                )
            else:
                report.frobenius_note = f"d(f^{p}) = 0"
    return report


# -- prefix pumping ---------------------------------------------------------


def build_prefix_invariant(s: ActionSpec, f: FreePoly, x: int, k: int) -> FreePoly:
    """From an invariant ``f`` with an x-prefixed word, build an invariant with
    an x^k-prefixed word by repeatedly inserting ``f`` after the x^(m-1) prefix."""
    if k < 1:
        raise PreconditionFailed("k must be positive")
    if f.is_zero() or not f.is_homogeneous():
        raise PreconditionFailed("f must be a nonzero homogeneous polynomial")
    if not has_prefix_in_support(f, (x,)):
        raise PreconditionFailed(f"no word of supp(f) starts with x{x}")
    if not is_invariant(s, f):
        raise PreconditionFailed("f is not invariant")
    d = f.degree()
    fbar = f
    for m in range(2, k + 1):
        t = fbar.degree()
        fbar = insert(m - 1, t - m + 1, d, fbar, f)
        if not has_prefix_in_support(fbar, (x,) * m):
            raise CancellationDetected(f"x{x}^{m}-prefixed words cancelled at step {m}")
    return fbar


__all__ = [
    "IDENTITY",
    "CancellationDetected",
    "FrobeniusResult",
    "InvalidIndex",
    "JairReport",
    "JordanShape",
    "NotJordanShape",
    "NotScalar",
    "NotScalarSigmaTau",
    "PreconditionFailed",
    "ScalarClassification",
    "build_prefix_invariant",
    "classify_action",
    "cn_eval",
    "jair_element",
    "jair_verify",
    "jordan_shape",
    "minimal_invariant_degree",
    "scalar_base",
]

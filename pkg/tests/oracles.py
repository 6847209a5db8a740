"""Brute-force reference computations, independent of hopfinv's sparse engine.

Scalars here are plain ints mod p or Fractions; linear algebra goes through
sympy's DomainMatrix.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from sympy import GF, QQ
from sympy.polys.matrices import DomainMatrix


def norm(x, p):
    return x % p if p else Fraction(x)


def coproduct_apply(word, letter_mats, p=0):
    """Apply the tensor product letter_mats[0] (x) ... (x) letter_mats[n-1] to a
    word, expanding over every choice of output letter.  Matrices use the
    column convention M[i][j] = coefficient of x_{i+1} in h . x_{j+1}."""
    r = len(letter_mats[0]) if letter_mats else 0
    out = {}
    for target in itertools.product(range(r), repeat=len(word)):
        c = 1
        for k, (t, j) in enumerate(zip(target, word)):
            c = c * letter_mats[k][t][j - 1]
            if c == 0:
                break
        c = norm(c, p)
        if c != 0:
            key = tuple(t + 1 for t in target)
            out[key] = norm(out.get(key, 0) + c, p)
            if out[key] == 0:
                del out[key]
    return out


def identity(r):
    return [[1 if i == j else 0 for j in range(r)] for i in range(r)]


def skew_apply_oracle(word, delta, sigma, tau, p=0):
    """Iterated coproduct sum_j tau^{(x)j} (x) delta (x) sigma^{(x)(n-1-j)} applied to a word."""
    n = len(word)
    out = {}
    for j in range(n):
        mats = [tau] * j + [delta] + [sigma] * (n - 1 - j)
        for w, c in coproduct_apply(word, mats, p).items():
            out[w] = norm(out.get(w, 0) + c, p)
            if out[w] == 0:
                del out[w]
    return out


def group_apply_oracle(word, sigma, p=0):
    return coproduct_apply(word, [sigma] * len(word), p)


def dense_invariance_matrix(r, n, group_likes, skews, p=0):
    """Rows of the stacked system on R_n.  ``group_likes`` is a list of
    matrices; ``skews`` a list of (delta, sigma, tau) matrices."""
    words = list(itertools.product(range(1, r + 1), repeat=n))
    index = {w: k for k, w in enumerate(words)}
    blocks = []
    for M in group_likes:
        block = [[0] * len(words) for _ in words]
        for col, w in enumerate(words):
            img = group_apply_oracle(w, M, p)
            for u, c in img.items():
                block[index[u]][col] += c
            block[col][col] -= 1
        blocks.extend(block)
    for delta, sigma, tau in skews:
        block = [[0] * len(words) for _ in words]
        for col, w in enumerate(words):
            for u, c in skew_apply_oracle(w, delta, sigma, tau, p).items():
                block[index[u]][col] += c
        blocks.extend(block)
    return words, blocks


def _dm(rows, ncols, p):
    K = GF(p) if p else QQ
    if not rows:
        rows = [[0] * ncols]
    return DomainMatrix([[K(int(x)) if p else K(Fraction(x).numerator, Fraction(x).denominator) for x in row] for row in rows], (len(rows), ncols), K)


def dense_rank(rows, ncols, p=0):
    return _dm(rows, ncols, p).rank()


def dense_nullity(rows, ncols, p=0):
    return ncols - dense_rank(rows, ncols, p)


def invariant_dim_oracle(r, n, group_likes, skews, p=0):
    words, rows = dense_invariance_matrix(r, n, group_likes, skews, p)
    return dense_nullity(rows, len(words), p)


def concatenation_span_words(gen_words, n):
    """All concatenations of words from ``gen_words`` with total length n and
    at least two factors."""
    out = set()

    def rec(prefix, remaining, parts):
        if remaining == 0:
            if parts >= 2:
                out.add(prefix)
            return
        for g in gen_words:
            if len(g) <= remaining:
                rec(prefix + g, remaining - len(g), parts + 1)

    rec((), n, 0)
    return out

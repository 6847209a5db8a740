"""Compare d(f^p) with zero for the Jordan-block element f over GF(p), with
sigma = tau = 1, across block sizes, indices and lengths.

    python scripts/frobenius_experiment.py --p 3 --rank 3
"""

import argparse

from hopfinv.action import make_spec
from hopfinv.constructions import jair_verify
from hopfinv.exactfield import FieldSpec


def jordan(r, size, lam=0):
    M = [[0] * r for _ in range(r)]
    for k in range(r):
        M[k][k] = lam
    for k in range(size - 1):
        M[k + 1][k] = 1
    return M


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--rank", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=2)
    args = ap.parse_args()
    F = FieldSpec.prime(args.p)
    print("block  i  n  terms(d(f^p))  zero")
    for size in range(1, args.rank + 1):
        s = make_spec(F, args.rank, {}, {"d": ("1", "1", jordan(args.rank, size))})
        for i in range(1, size + 1):
            for n in range(1, args.max_n + 1):
                fr = jair_verify(s, "d", i, n, frobenius=True).frobenius
                print(f"{size:5d}  {i}  {n}  {len(fr.image):13d}  {fr.is_zero}")


if __name__ == "__main__":
    main()

"""Command-line front end: ``hopfinv <command> ...``.

Exit codes: 0 success, 1 parse/validation/precondition error, 2 size cap
exceeded, 3 a check found a property violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .action import UnknownGenerator, is_invariant, validate_spec
from .constructions import (
    CancellationDetected,
    InvalidIndex,
    NotJordanShape,
    NotScalar,
    NotScalarSigmaTau,
    PreconditionFailed,
    build_prefix_invariant,
    classify_action,
    cn_eval,
    jair_verify,
    minimal_invariant_degree,
)
from .exactfield import FieldError, parse_field
from .freealg import PolyParseError, has_prefix_in_support, parse_poly
from .invariants import (
    SizeCapExceeded,
    check_size,
    insert_closure_check,
    invariant_basis,
    probe_generation,
)
from .specfile import ParseError, ValidationError, load_spec

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_VIOLATION = 0, 1, 2, 3


class CheckFailed(Exception):
    pass


def _table(header, rows) -> str:
    cells = [list(map(str, header))] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = []
    for r in cells:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _render(fmt, header, rows, payload, extra_lines=()) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2, ensure_ascii=False)
    if fmt == "csv":
        return _csv(header, rows)
    return "\n".join([_table(header, rows), *extra_lines])


def _fmt_bases(s, bases):
    return ", ".join(f"{k}={s.field.format(v)}" for k, v in bases.items())


# -- commands ----------------------------------------------------------------


def cmd_validate(args, out):
    s = load_spec(args.spec, validate=False)
    findings = validate_spec(s)
    for f in findings:
        print(str(f), file=out)
    if any(f.severity == "Error" for f in findings):
        return EXIT_INPUT
    print("ok", file=out)
    return EXIT_OK


def cmd_classify(args, out):
    s = load_spec(args.spec)
    c = classify_action(s)
    line = c.verdict
    if c.is_scalar and c.bases:
        line += f" ({_fmt_bases(s, c.bases)})"
    print(line, file=out)
    return EXIT_OK


def cmd_minimal_degree(args, out):
    s = load_spec(args.spec)
    t = minimal_invariant_degree(s, args.cap)
    print("none" if t is None else t, file=out)
    return EXIT_OK


def cmd_invariants(args, out):
    s = load_spec(args.spec)
    if args.degree is not None:
        degrees = [args.degree]
    else:
        degrees = list(range(1, args.max_degree + 1))
    check_size(s.rank, max(degrees), args.allow_large)
    rows, payload = [], []
    for n in degrees:
        basis = invariant_basis(s, n, allow_large=args.allow_large)
        payload.append({"degree": n, "dim": len(basis), "basis": [str(f) for f in basis]})
        rows.extend([n, k + 1, str(f)] for k, f in enumerate(basis))
    doc = {"field": str(s.field), "rank": s.rank, "degrees": payload}
    dims = [f"dim R^H_{d['degree']} = {d['dim']}" for d in payload]
    print(_render(args.output, ["degree", "index", "element"], rows, doc, dims), file=out)
    return EXIT_OK


def cmd_probe(args, out):
    s = load_spec(args.spec)
    rep = probe_generation(s, args.max_degree, allow_large=args.allow_large)
    cls = rep.classification
    header = ["n", "dim_R", "dim_inv", "dim_dec", "new_gens", "generators"]
    rows = [
        [r.n, r.dim_R, r.dim_inv, r.dim_dec, r.new_gens, "; ".join(str(g) for g in r.generators)]
        for r in rep.rows
    ]
    doc = {
        "field": str(s.field),
        "rank": s.rank,
        "horizon": rep.horizon,
        "rows": [dict(zip(header[:-1], r[:-1]), generators=[str(g) for g in x.generators]) for r, x in zip(rows, rep.rows)],
        "classification": cls.verdict,
        "bases": {k: s.field.format(v) for k, v in cls.bases.items()},
        "minimal_degree": rep.minimal_degree,
        "verdict": rep.verdict,
    }
    cls_line = cls.verdict + (f" ({_fmt_bases(s, cls.bases)})" if cls.bases else "")
    extra = [
        f"classification: {cls_line}",
        f"minimal_degree: {rep.minimal_degree if rep.minimal_degree is not None else 'none'}",
        f"verdict: {rep.verdict}",
    ]
    print(_render(args.output, header, rows, doc, extra), file=out)
    return EXIT_OK


def cmd_cn(args, out):
    F = parse_field(args.field)
    print(F.format(cn_eval(F, args.n, F.parse(args.eta), F.parse(args.mu))), file=out)
    return EXIT_OK


def cmd_jair(args, out):
    s = load_spec(args.spec)
    rep = jair_verify(s, args.delta, args.i, args.n, frobenius=args.frobenius_check)
    F = s.field
    print(f"f = {rep.f}", file=out)
    print(f"d(f) = {rep.image}", file=out)
    print(
        f"eta = {F.format(rep.eta)}, mu = {F.format(rep.mu)}, lambda = {F.format(rep.lam)}, "
        f"s = {rep.block_end}, c_{rep.n}(eta, mu) = {F.format(rep.c)}",
        file=out,
    )
    if args.verify:
        print(f"prefix x{rep.i} in supp(f): {rep.prefix_ok}", file=out)
        if rep.zero_branch_ok is not None:
            print(f"c = 0 and d(f) = 0: {rep.zero_branch_ok}", file=out)
        else:
            print(f"residual support bound: {rep.residual_ok}", file=out)
            print(f"g = (d(f) - lambda*c*f)/c = {rep.quotient}", file=out)
            print(f"g is the shifted-index sum: {rep.quotient_is_shift_sum}", file=out)
    if args.frobenius_check:
        fr = rep.frobenius
        if fr is None:
            print(f"frobenius: {rep.frobenius_note}", file=out)
        else:
            print(f"frobenius: d(f^{fr.p}) = {fr.image}", file=out)
            if fr.discrepancy:
                print(f"frobenius: DISCREPANCY {rep.frobenius_note}", file=out)
    if args.verify and not rep.ok:
        raise CheckFailed("verification failed")
    return EXIT_OK


def cmd_insert_check(args, out):
    s = load_spec(args.spec)
    check_size(s.rank, args.max_degree, args.allow_large)
    res = insert_closure_check(s, args.max_degree)
    print(f"inserts checked: {res.checked}", file=out)
    for i, j, k, f, g in res.violations:
        print(f"violation: insert({i},{j},{k}, {f}, {g}) not invariant", file=out)
    print(f"violations: {len(res.violations)}", file=out)
    if not res.ok:
        raise CheckFailed("insert closure violated")
    return EXIT_OK


def cmd_prefix(args, out):
    s = load_spec(args.spec)
    with open(args.poly_file, encoding="utf-8") as fh:
        f = parse_poly(fh.read(), s.field, s.rank)
    fbar = build_prefix_invariant(s, f, args.x, args.k)
    inv = is_invariant(s, fbar)
    pref = has_prefix_in_support(fbar, (args.x,) * args.k)
    print(f"f_bar = {fbar}", file=out)
    print(f"invariant: {inv}", file=out)
    print(f"prefix x{args.x}^{args.k} in supp: {pref}", file=out)
    if not (inv and pref):
        raise CheckFailed("prefix construction failed")
    return EXIT_OK


# -- wiring -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfinv", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--allow-large", action="store_true", help="ignore the r^n size cap")

    def add(name, fn, spec=True, **kw):
        sp = sub.add_parser(name, parents=[common], **kw)
        if spec:
            sp.add_argument("spec", help="JSON action spec file")
        sp.set_defaults(func=fn)
        return sp

    add("validate", cmd_validate)
    add("classify", cmd_classify)
    sp = add("minimal-degree", cmd_minimal_degree)
    sp.add_argument("--cap", type=int, default=64)
    sp = add("invariants", cmd_invariants)
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--degree", type=int)
    g.add_argument("--max-degree", type=int)
    sp.add_argument("--output", choices=["table", "json", "csv"], default="table")
    sp = add("probe", cmd_probe)
    sp.add_argument("--max-degree", type=int, required=True)
    sp.add_argument("--output", choices=["table", "json", "csv"], default="table")
    sp = add("cn", cmd_cn, spec=False)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--eta", required=True)
    sp.add_argument("--mu", required=True)
    sp.add_argument("--field", default="q", help="'q' or 'p:<prime>'")
    sp = add("jair", cmd_jair)
    sp.add_argument("--delta", required=True)
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--verify", action="store_true")
    sp.add_argument("--frobenius-check", action="store_true")
    sp = add("insert-check", cmd_insert_check)
    sp.add_argument("--max-degree", type=int, required=True)
    sp = add("prefix", cmd_prefix)
    sp.add_argument("--poly-file", required=True)
    sp.add_argument("--x", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    return p


def run_command(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ValidationError as exc:
        for f in exc.findings:
            print(str(f), file=err)
        return EXIT_INPUT
    except SizeCapExceeded as exc:
        print(f"error: {exc}", file=err)
        return EXIT_CAP
    except (CheckFailed, CancellationDetected) as exc:
        print(f"check failed: {exc}", file=err)
        return EXIT_VIOLATION
    except (
        ParseError,
        FieldError,
        PolyParseError,
        PreconditionFailed,
        NotScalar,
        NotScalarSigmaTau,
        NotJordanShape,
        InvalidIndex,
        UnknownGenerator,
        ZeroDivisionError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT


def main():
    sys.exit(run_command())


if __name__ == "__main__":
    main()

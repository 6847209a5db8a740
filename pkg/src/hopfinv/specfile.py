"""JSON action-spec files.

    {"field": {"kind": "rational"} | {"kind": "prime", "p": 7},
     "rank": 2,
     "group_likes": [{"name": "g", "matrix": [["1", "0"], ["0", "-1"]]}],
     "skew_primitives": [{"name": "d", "sigma": "1", "tau": "g",
                          "matrix": [["0", "1"], ["0", "0"]]}],
     "group_table": {"g,g": "1"}}

Matrices are row-major; entry [i][j] is the coefficient of x_{i+1} in
h . x_{j+1}.  Entries are scalar literals (strings) or JSON integers.
"""

from __future__ import annotations

import json

from .action import ActionSpec, GroupLikeGen, SkewPrimitiveGen, errors, validate_spec
from .exactfield import FieldError, FieldSpec


class ParseError(ValueError):
    pass


class ValidationError(ValueError):
    def __init__(self, findings):
        self.findings = findings
        super().__init__("; ".join(str(f) for f in findings))


def _field(obj) -> FieldSpec:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ParseError("'field' must be an object with a 'kind'")
    try:
        if obj["kind"] == "rational":
            return FieldSpec.rational()
        if obj["kind"] == "prime":
            return FieldSpec.prime(obj.get("p"))
    except FieldError as exc:
        raise ParseError(str(exc)) from exc
    raise ParseError(f"unknown field kind {obj['kind']!r}")


def _matrix(F: FieldSpec, M, r: int, owner: str):
    if not isinstance(M, list) or len(M) != r:
        raise ParseError(f"{owner}: matrix must have {r} rows")
    rows = []
    for row in M:
        if not isinstance(row, list) or len(row) != r:
            raise ParseError(f"{owner}: every matrix row must have {r} entries")
        out = []
        for v in row:
            if isinstance(v, bool) or not isinstance(v, (int, str)):
                raise ParseError(f"{owner}: bad matrix entry {v!r}")
            try:
                out.append(F.convert(v))
            except (FieldError, ZeroDivisionError) as exc:
                raise ParseError(f"{owner}: {exc}") from exc
        rows.append(tuple(out))
    return tuple(rows)


def spec_from_obj(obj) -> ActionSpec:
    if not isinstance(obj, dict):
        raise ParseError("spec document must be a JSON object")
    unknown = set(obj) - {"field", "rank", "group_likes", "skew_primitives", "group_table"}
    if unknown:
        raise ParseError(f"unknown keys: {sorted(unknown)}")
    F = _field(obj.get("field"))
    r = obj.get("rank")
    if isinstance(r, bool) or not isinstance(r, int) or r < 1:
        raise ParseError("'rank' must be a positive integer")
    gls = []
    for g in obj.get("group_likes", []):
        try:
            gls.append(GroupLikeGen(str(g["name"]), _matrix(F, g["matrix"], r, f"group-like {g['name']!r}")))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"group-like entry missing field {exc}") from exc
    sps = []
    for d in obj.get("skew_primitives", []):
        try:
            sps.append(
                SkewPrimitiveGen(
                    str(d["name"]),
                    str(d.get("sigma", "1")),
                    str(d.get("tau", "1")),
                    _matrix(F, d["matrix"], r, f"skew-primitive {d['name']!r}"),
                )
            )
        except (KeyError, TypeError) as exc:
            raise ParseError(f"skew-primitive entry missing field {exc}") from exc
    table = None
    if "group_table" in obj:
        raw = obj["group_table"]
        if not isinstance(raw, dict):
            raise ParseError("'group_table' must be an object")
        table = {}
        for key, val in raw.items():
            parts = [p.strip() for p in key.split(",")]
            if len(parts) != 2 or not isinstance(val, str):
                raise ParseError(f"bad group table entry {key!r}: {val!r}")
            table[parts[0], parts[1]] = val
    return ActionSpec(F, r, tuple(gls), tuple(sps), table)


def parse_spec_file(text: str, validate: bool = True) -> ActionSpec:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    s = spec_from_obj(obj)
    if validate:
        bad = errors(validate_spec(s))
        if bad:
            raise ValidationError(bad)
    return s


def load_spec(path, validate: bool = True) -> ActionSpec:
    with open(path, encoding="utf-8") as fh:
        return parse_spec_file(fh.read(), validate=validate)


def spec_to_obj(s: ActionSpec) -> dict:
    F = s.field

    def mat(M):
        return [[F.format(v) for v in row] for row in M]

    obj = {
        "field": {"kind": "prime", "p": F.p} if F.is_prime else {"kind": "rational"},
        "rank": s.rank,
        "group_likes": [{"name": g.name, "matrix": mat(g.matrix)} for g in s.group_likes],
        "skew_primitives": [
            {"name": d.name, "sigma": d.sigma, "tau": d.tau, "matrix": mat(d.matrix)}
            for d in s.skew_primitives
        ],
    }
    if s.group_table is not None:
        obj["group_table"] = {f"{a},{b}": c for (a, b), c in sorted(s.group_table.items())}
    return obj


def serialize_spec(s: ActionSpec) -> str:
    return json.dumps(spec_to_obj(s), indent=2, ensure_ascii=False) + "\n"

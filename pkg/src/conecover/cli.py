"""Command-line front end.

Subcommands: basis, dim, classify, cover, bidouble, normalise, hilbert,
branch, stratum, verify-tables, verify-example.  Output is human-readable by
default; --format json emits one JSON record per line with stable field
names.  Exit codes: 0 success/pass, 1 verification mismatch, 2 input error.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import canring, catalog, covers, germs, strata
from .linsys import ConditionSpec, LinearSystem, PointWPS, TangentDir, monomial_basis
from .textio import ParseError, format_poly, format_ring, parse_poly, parse_ring
from .wpoly import WPoly


class InputError(ValueError):
    pass


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else str(value.numerator)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, WPoly):
        return format_poly(value)
    if value is None or isinstance(value, (bool, int, str)):
        return value
    return str(value)


class Emitter:
    def __init__(self, fmt, out):
        self.fmt = fmt
        self.out = out

    def record(self, data):
        if self.fmt == "json":
            self.out.write(json.dumps(_jsonable(data), sort_keys=True) + "\n")
        else:
            kind = data.get("record", "record")
            self.out.write("[%s]\n" % kind)
            for k, v in data.items():
                if k == "record":
                    continue
                self.out.write("  %s: %s\n" % (k, _human(v)))
            self.out.write("\n")


def _human(v):
    v = _jsonable(v)
    if isinstance(v, list):
        return "[" + ", ".join(str(_human(x)) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join("%s=%s" % (k, _human(x)) for k, x in v.items()) + "}"
    return v


def _point_str(pt):
    return "(" + " : ".join(_jsonable(c) for c in pt.coords) + ")"


def _sing_records(bps):
    out = []
    for bp in bps:
        out.append(
            {
                "point": _point_str(bp.point),
                "verdict": bp.report.verdict,
                "lct": bp.report.lct,
                "multiplicity_sequence": bp.report.multiplicity_sequence,
                "tangent": repr(bp.report.tangent) if bp.report.tangent else None,
            }
        )
    return out


# -- input files ------------------------------------------------------------


def _read_records(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc))
    header = None
    body = []
    for line in lines:
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if ":" not in stripped:
            raise InputError("malformed line (expected key: value): %r" % line)
        key, value = stripped.split(":", 1)
        key = key.strip()
        value = value.strip()
        if key == "ring":
            header = parse_ring(value)
        else:
            body.append((key, value))
    if header is None:
        raise InputError("missing `ring:` header line in %s" % path)
    return header, body


def _parse_component_key(key, base):
    if key == base:
        return 1
    if key.startswith(base + "[") and key.endswith("]"):
        try:
            return int(key[len(base) + 1 : -1])
        except ValueError:
            pass
    raise InputError("bad component key %r" % key)


def load_branch_file(path):
    ring, body = _read_records(path)
    comps = []
    for key, value in body:
        mult = _parse_component_key(key, "component")
        comps.append((parse_poly(value, ring), mult))
    if not comps:
        raise InputError("no components in %s" % path)
    return covers.BranchDivisorQ(comps)


def load_bidouble_file(path):
    ring, body = _read_records(path)
    divisors = [[], [], []]
    for key, value in body:
        base = key.split("[")[0]
        if base not in ("D0", "D1", "D2"):
            raise InputError("bad divisor key %r (expected D0/D1/D2)" % key)
        mult = _parse_component_key(key, base)
        divisors[int(base[1])].append((parse_poly(value, ring), mult))
    return covers.BiDoubleData(divisors)


def load_model_file(path):
    ring, body = _read_records(path)
    fields = dict(body)
    if "f" in fields:
        return canring.HypersurfaceModel(parse_poly(fields["f"], ring))
    if "f1" in fields and "f2" in fields:
        return canring.CIModel(
            parse_poly(fields["f1"], ring), parse_poly(fields["f2"], ring)
        )
    raise InputError("model file needs `f:` or `f1:`/`f2:` entries")


def load_conditions_file(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc))
    specs = []
    for block in text.split("\n\n"):
        fields = {}
        for line in block.splitlines():
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            if ":" not in stripped:
                raise InputError("malformed condition line %r" % line)
            k, v = stripped.split(":", 1)
            fields[k.strip()] = v.strip()
        if not fields:
            continue
        if "point" not in fields or "kind" not in fields:
            raise InputError("a condition needs `point:` and `kind:`")
        coords = [Fraction(c.strip()) for c in fields["point"].split(",")]
        if len(coords) != 3:
            raise InputError("point needs three coordinates")
        point = PointWPS(*coords)
        kind = fields["kind"]
        tangent = None
        if "tangent" in fields:
            dy, dx = (Fraction(c.strip()) for c in fields["tangent"].split(","))
            tangent = TangentDir(dy, dx)
        m = int(fields["m"]) if "m" in fields else None
        specs.append(ConditionSpec(point, kind, m=m, tangent=tangent))
    return specs


# -- subcommands --------------------------------------------------------------


def cmd_basis(args, emit):
    ring = parse_ring(args.ring)
    basis = monomial_basis(ring, args.degree)
    emit.record(
        {
            "record": "monomial_basis",
            "ring": format_ring(ring),
            "degree": args.degree,
            "count": len(basis),
            "monomials": [
                format_poly(WPoly(ring, {e: Fraction(1)})) for e in basis
            ],
        }
    )
    return 0


def cmd_dim(args, emit):
    ring = parse_ring(args.ring)
    specs = load_conditions_file(args.conditions) if args.conditions else []
    system = LinearSystem(ring, args.degree, specs)
    emit.record(
        {
            "record": "linear_system",
            "ring": format_ring(ring),
            "degree": args.degree,
            "basis_size": len(system.basis),
            "conditions_rank": system.conditions_rank(),
            "h0": system.h0(),
            "projective_dim": system.projective_dim(),
        }
    )
    return 0


def cmd_classify(args, emit):
    if args.vars:
        names = [v.strip() for v in args.vars.split(",")]
    else:
        import re

        seen = []
        for name in re.findall(r"[A-Za-z_][A-Za-z0-9_]*", args.germ):
            if name not in seen:
                seen.append(name)
        names = sorted(seen)
    if len(names) != 2:
        raise InputError(
            "germ needs exactly two variables (got %s); use --vars" % (names,)
        )
    ring = parse_ring("%s:1, %s:1" % tuple(names))
    germ = parse_poly(args.germ, ring)
    report = germs.classify_branch_point(germ)
    emit.record(
        {
            "record": "germ_report",
            "germ": format_poly(germ),
            "verdict": report.verdict,
            "multiplicity_sequence": report.multiplicity_sequence,
            "lct": report.lct,
            "tangent": repr(report.tangent) if report.tangent else None,
        }
    )
    return 0


def cmd_cover(args, emit):
    branch = load_branch_file(args.file)
    try:
        rep = covers.double_cover_report(branch)
    except covers.NotLogCanonicalError as exc:
        emit.record(
            {
                "record": "cover_report",
                "lc": False,
                "error": str(exc),
                "offending_point": _point_str(exc.point) if exc.point else None,
            }
        )
        return 1
    emit.record(
        {
            "record": "cover_report",
            "lc": True,
            "k2": rep.k_squared,
            "chi": rep.chi,
            "cartier_index": rep.cartier_index,
            "gorenstein": rep.gorenstein,
            "normal": rep.normal,
            "stratum": rep.stratum,
            "normalisation": rep.normalisation,
            "resolution": list(rep.resolution) if rep.resolution else None,
            "vertex": rep.vertex.label if rep.vertex else None,
            "rest_negligible_certified": rep.rest_negligible_certified,
            "warnings": rep.warnings,
            "singularities": _sing_records(rep.singularities),
        }
    )
    return 0


def cmd_bidouble(args, emit):
    data = load_bidouble_file(args.file)
    rep = covers.bidouble_report(data)
    emit.record(
        {
            "record": "bidouble_report",
            "degrees": list(rep.degrees),
            "a": list(rep.a),
            "chi": rep.chi,
            "k2": rep.k_squared,
            "two_k_degree": rep.two_k_degree,
            "slc": rep.slc,
            "gorenstein": rep.gorenstein,
            "normal": rep.normal,
            "cartier_index": rep.cartier_index,
            "normalisation": rep.normalisation,
            "rest_negligible_certified": rep.rest_negligible_certified,
            "warnings": rep.warnings,
            "singularities": _sing_records(rep.singularities),
        }
    )
    return 0 if rep.slc else 1


def cmd_normalise(args, emit):
    data = load_bidouble_file(args.file)
    normalized = covers.bidouble_normalise(data)
    record = {"record": "bidouble_normalised", "degrees": list(normalized.degrees())}
    for i, div in enumerate(normalized.divisors):
        record["D%d" % i] = [
            ("%s" if m == 1 else "[%d] %%s" % m) % format_poly(p) for p, m in div
        ]
    emit.record(record)
    return 0


def cmd_hilbert(args, emit):
    if args.file:
        model = load_model_file(args.file)
        kind = "hypersurface" if isinstance(model, canring.HypersurfaceModel) else "ci"
    else:
        if args.model == "hypersurface":
            model = None
            kind = "hypersurface"
        elif args.model == "ci":
            model = None
            kind = "ci"
        else:
            raise InputError("--model must be hypersurface or ci (or pass a file)")
    chi = 3 if kind == "hypersurface" else 2
    if kind == "hypersurface":
        values = canring.hilbert_hypersurface(model, args.m_max)
    else:
        values = canring.hilbert_ci(model, args.m_max)
    closed_ok = all(
        values[m] == canring.hilbert_closed_form(chi, m) for m in range(2, args.m_max + 1)
    )
    record = {
        "record": "hilbert_table",
        "model": kind,
        "chi": chi,
        "m_max": args.m_max,
        "values": values,
        "closed_form_ok": closed_ok,
    }
    if model is not None:
        record["ambient_check"] = canring.ambient_smoothness_check(model).ok
        record["multiplication_rank_certificate"] = canring.verify_multiplication_rank(
            model, min(args.m_max, 12)
        )
    emit.record(record)
    return 0 if closed_ok else 1


def cmd_branch(args, emit):
    model = load_model_file(args.file)
    if not isinstance(model, canring.HypersurfaceModel):
        raise InputError("branch extraction needs a hypersurface model")
    branch = canring.bicanonical_branch(model)
    emit.record(
        {
            "record": "branch_divisor",
            "equation": format_poly(branch.components[0][0]),
            "contains_vertex": branch.contains_vertex(),
            "base_point": "(%s : %s : %s : %s)"
            % tuple(_jsonable(c) for c in canring.base_point(model)),
        }
    )
    return 0


def cmd_stratum(args, emit):
    rows = {r.name: r for r in strata.normal_strata_rows()}
    rows.update({r.name: r for r in strata.non_normal_strata_rows()})
    if args.name not in rows:
        raise InputError("unknown stratum %r (known: %s)" % (args.name, ", ".join(rows)))
    rec = strata.stratum_dim(rows[args.name])
    emit.record(
        {
            "record": "stratum",
            "name": rec.name,
            "expected_dim": rec.expected,
            "computed_dim": rec.computed,
            "h0": rec.h0,
            "conditions_rank": rec.conditions_rank,
            "stabilizer_dim": rec.stabilizer,
            "pass": rec.ok,
        }
    )
    return 0 if rec.ok else 1


def cmd_verify_tables(args, emit):
    ok = True
    if args.table in ("normal", "nonnormal", "dims", "all"):
        records = strata.verify_tables()
        if args.table == "normal":
            records = records[:9]
        elif args.table == "nonnormal":
            records = records[9:]
        for rec in records:
            ok = ok and rec.ok
            emit.record(
                {
                    "record": "table_row",
                    "name": rec.name,
                    "expected_dim": rec.expected,
                    "computed_dim": rec.computed,
                    "h0": rec.h0,
                    "conditions_rank": rec.conditions_rank,
                    "stabilizer_dim": rec.stabilizer,
                    "pass": rec.ok,
                }
            )
    if args.table in ("examples", "all"):
        for name in catalog.table3_rows():
            res = catalog.verify_example(name)
            ok = ok and res.ok
            emit.record(
                {
                    "record": "example_row",
                    "name": res.name,
                    "kind": res.kind,
                    "expected": res.expected,
                    "computed": res.computed,
                    "pass": res.ok,
                }
            )
    return 0 if ok else 1


def cmd_verify_example(args, emit):
    res = catalog.verify_example(args.name)
    emit.record(
        {
            "record": "example",
            "name": res.name,
            "kind": res.kind,
            "expected": res.expected,
            "computed": res.computed,
            "pass": res.ok,
        }
    )
    return 0 if res.ok else 1


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("human", "json"), default="human", help="output format"
    )
    parser = argparse.ArgumentParser(
        prog="conecover",
        description="Exact computations for branched covers of the quadric cone and plane",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add_parser("basis", help="monomial basis of a weighted degree")
    p.add_argument("--ring", required=True, help='e.g. "x0:1, x1:1, y:2"')
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_basis)

    p = add_parser("dim", help="dimension of a (conditioned) linear system")
    p.add_argument("--ring", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--conditions", help="condition-spec file")
    p.set_defaults(func=cmd_dim)

    p = add_parser("classify", help="classify a plane curve germ at the origin")
    p.add_argument("--germ", required=True, help='e.g. "x*y" or "y^2 - x^3"')
    p.add_argument("--vars", help='comma-separated germ variables, e.g. "x,y"')
    p.set_defaults(func=cmd_classify)

    p = add_parser("cover", help="double-cover report from a branch-data file")
    p.add_argument("file")
    p.set_defaults(func=cmd_cover)

    p = add_parser("bidouble", help="bi-double cover report from a branch file")
    p.add_argument("file")
    p.set_defaults(func=cmd_bidouble)

    p = add_parser("normalise", help="normalise bi-double branch data")
    p.add_argument("file")
    p.set_defaults(func=cmd_normalise)

    p = add_parser("hilbert", help="plurigenus table of a canonical model")
    p.add_argument("--model", choices=("hypersurface", "ci"))
    p.add_argument("--m-max", type=int, default=20)
    p.add_argument("file", nargs="?")
    p.set_defaults(func=cmd_hilbert)

    p = add_parser("branch", help="bicanonical branch divisor of a model file")
    p.add_argument("file")
    p.set_defaults(func=cmd_branch)

    p = add_parser("stratum", help="dimension record of one stratum")
    p.add_argument("--name", required=True)
    p.set_defaults(func=cmd_stratum)

    p = add_parser("verify-tables", help="recompute the strata dimension tables")
    p.add_argument(
        "--table",
        choices=("dims", "normal", "nonnormal", "examples", "all"),
        default="dims",
        help="dims = both dimension tables (12 rows); examples = the chi=2 table",
    )
    p.set_defaults(func=cmd_verify_tables)

    p = add_parser("verify-example", help="verify a named example configuration")
    p.add_argument("name")
    p.set_defaults(func=cmd_verify_example)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    emit = Emitter(args.format, sys.stdout)
    try:
        return args.func(args, emit)
    except (
        InputError,
        ParseError,
        covers.InvalidBranchDataError,
        canring.ModelError,
        ValueError,
    ) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())

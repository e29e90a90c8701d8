"""Command-line front end.

Subcommands load a form (catalog tag or form file), run the pole and
radical computations or a geometry check, and emit deterministic text or
JSON.  Exit codes: 0 success, 1 check failed (a witness is printed),
2 usage or environment errors (bad flags, unreadable file, budget).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import constructions, geometry, tables
from .fields import GF, FieldError, parse_field
from .forms import (
    CATALOG_RANKS,
    CatalogConditionError,
    TriForm,
    catalog_form,
)
from .poles import (
    BudgetExceededError,
    VarietyError,
    enumerate_upper_radical,
    full_report,
    lines_through_point,
    point_degree,
    pole_variety,
    symbolic_matrix,
    upper_radical_system,
)
from .poly import render_poly


class UsageError(Exception):
    pass


def _emit(payload: dict, output: str) -> None:
    if output == "json":
        print(json.dumps(payload, indent=2))
    else:
        _emit_text(payload)


def _emit_text(payload: dict, indent: int = 0) -> None:
    pad = "  " * indent
    for key, value in payload.items():
        if isinstance(value, dict):
            print(f"{pad}{key}:")
            _emit_text(value, indent + 1)
        elif isinstance(value, list) and value and isinstance(value[0], (dict, list)):
            print(f"{pad}{key}: [{len(value)} entries]")
            for item in value[:20]:
                print(f"{pad}  {json.dumps(item)}")
            if len(value) > 20:
                print(f"{pad}  ... ({len(value) - 20} more)")
        else:
            print(f"{pad}{key}: {value}")


def _add_form_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--catalog", help="catalog type tag, e.g. T9 or T10_1")
    parser.add_argument("--file", help="path of a form file")
    parser.add_argument("--param", help="parameter for the parametric types")
    parser.add_argument("--field", help="field spec: gf(p) or q")
    parser.add_argument("--dim", type=int, help="ambient dimension")
    parser.add_argument("--budget", type=int, help="enumeration budget (p^n cap)")
    parser.add_argument(
        "--output", choices=("text", "json"), default="text", help="report format"
    )


def _load_form(args) -> TriForm:
    if bool(args.catalog) == bool(args.file):
        raise UsageError("exactly one form source (--catalog or --file) is required")
    if args.file:
        try:
            with open(args.file, "r", encoding="utf-8") as fh:
                return TriForm.from_text(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read form file: {exc}") from exc
    if not args.field:
        raise UsageError("--catalog needs --field")
    field = parse_field(args.field)
    return catalog_form(args.catalog, field, n=args.dim, param=args.param)


def _parse_vector(text: str, field, n: int):
    parts = [p for p in text.replace(" ", "").split(",") if p != ""]
    if len(parts) != n:
        raise UsageError(f"vector needs {n} components, got {len(parts)}")
    return [field.of(p) for p in parts]


def _finite_field_of(h: TriForm, args) -> GF:
    if isinstance(h.field, GF):
        return h.field
    if args.field:
        field = parse_field(args.field)
        if isinstance(field, GF):
            return field
    raise UsageError("this command needs a finite field (gf(p))")


def _cmd_catalog(args) -> int:
    if args.list:
        for tag, rank in CATALOG_RANKS.items():
            print(f"{tag}\trank {rank}")
        return 0
    form = _load_form(args)
    sys.stdout.write(form.to_text())
    return 0


def _cmd_eval(args) -> int:
    form = _load_form(args)
    x = _parse_vector(args.x, form.field, form.n)
    y = _parse_vector(args.y, form.field, form.n)
    z = _parse_vector(args.z, form.field, form.n)
    print(form.field.format(form.evaluate(x, y, z)))
    return 0


def _cmd_radical(args) -> int:
    form = _load_form(args)
    radical, rank = form.radical_and_rank()
    payload = {
        "form": form.label or "file",
        "rank": rank,
        "radical_dim": len(radical),
        "radical_basis": [[form.field.format(x) for x in v] for v in radical],
    }
    _emit(payload, args.output)
    return 0


def _cmd_matrix(args) -> int:
    form = _load_form(args)
    sym = symbolic_matrix(form)
    if args.output == "json":
        payload = {
            "form": form.label or "file",
            "n": form.n,
            "entries": [[render_poly(p) for p in row] for row in sym.entries],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(sym.render())
    return 0


def _cmd_poles(args) -> int:
    form = _load_form(args)
    field = _finite_field_of(form, args)
    payload = full_report(form, field, budget=args.budget)
    _emit(payload, args.output)
    return 0


def _cmd_variety(args) -> int:
    form = _load_form(args)
    result = pole_variety(form, i=args.index, budget=args.budget)
    names = [f"x{i + 1}" for i in range(form.n)]
    if result.all_points:
        payload = {"form": form.label or "file", "i": None, "g": "all-points"}
    else:
        payload = {
            "form": form.label or "file",
            "i": result.index,
            "alpha": result.alpha,
            "d": render_poly(result.d, names),
            "g": render_poly(result.g, names),
            "verified": result.verified_over,
        }
    _emit(payload, args.output)
    return 0


def _cmd_radical_lines(args) -> int:
    form = _load_form(args)
    field = _finite_field_of(form, args)
    hf = form if form.field == field else form.reduce_mod(field)
    if args.point:
        u = _parse_vector(args.point, field, form.n)
        lines = lines_through_point(hf, u)
        delta, _ = point_degree(hf, u)
        payload = {
            "form": form.label or "file",
            "point": [field.format(x) for x in u],
            "degree": delta,
            "count": len(lines),
            "lines": [[list(b) for b in line.basis] for line in lines],
        }
    else:
        lines = enumerate_upper_radical(hf, field, budget=args.budget)
        system = upper_radical_system(hf)
        payload = {
            "form": form.label or "file",
            "count": len(lines),
            "solution_dim": len(system.solution),
            "lines": [
                {"basis": [list(b) for b in line.basis], "plucker": list(line.wedge)}
                for line in lines
            ],
        }
    _emit(payload, args.output)
    return 0


def _cmd_construct(args) -> int:
    if args.what == "cch":
        if not args.field or not args.dim:
            raise UsageError("construct cch needs --field and --dim")
        form = constructions.cch_hyperplane(args.dim, parse_field(args.field))
    elif args.what == "extend":
        base = _load_form(args)
        if not args.extra:
            raise UsageError("construct extend needs --extra")
        form = constructions.trivial_extension(base, args.extra)
    elif args.what == "expand":
        if not (args.pairs and args.field and args.dim and args.direction):
            raise UsageError(
                "construct expand needs --pairs, --direction, --dim, --field"
            )
        field = parse_field(args.field)
        coeffs = {}
        for chunk in args.pairs.split(","):
            chunk = chunk.strip()
            if len(chunk) != 2:
                raise UsageError(f"bad pair {chunk!r} (expected two digits, e.g. 23)")
            j, k = int(chunk[0]), int(chunk[1])
            coeffs[(j, k)] = field.one
        bilinear = constructions.BilinearAltForm(args.dim, field, coeffs)
        form = constructions.expansion(bilinear, args.direction)
    elif args.what in ("block", "join"):
        first = _load_form(args)
        if not args.file2:
            raise UsageError(f"construct {args.what} needs --file2")
        with open(args.file2, "r", encoding="utf-8") as fh:
            second = TriForm.from_text(fh.read())
        if args.what == "block":
            form = constructions.block_decompose(
                first,
                second,
                first.field.of(args.alpha or "1"),
                first.field.of(args.beta or "1"),
            )
        else:
            form = constructions.reducible_join(first, second)
    else:
        raise UsageError(f"unknown construction {args.what!r}")
    sys.stdout.write(form.to_text())
    return 0


CHECKS = ("spread", "normal-spread", "polar", "cone", "hexagon", "t11", "t4")


def _cmd_check(args) -> int:
    form = _load_form(args)
    field = _finite_field_of(form, args)
    geom = geometry.build_geometry(form, field, budget=args.budget)
    name = args.what
    tag_root = (form.label or "").split("(")[0]
    passed = False
    witnesses: List = []
    if name == "spread":
        result = geometry.spread_check(geom)
        passed = result.is_spread
        witnesses = [{"cover_histogram": result.cover_histogram}]
    elif name == "normal-spread":
        if not geometry.spread_check(geom).is_spread:
            witnesses = [{"error": "not a spread"}]
        else:
            passed = geometry.normal_spread_check(geom)
            if not passed:
                witnesses = [{"error": "a line-pair span is not partitioned"}]
    elif name == "polar":
        if tag_root not in geometry.POLAR_CONFIGS:
            raise UsageError("polar check applies to T5, T6 or T8")
        passed = list(geom.lines) == geometry.expected_polar_lines(tag_root, field)
        if not passed:
            witnesses = [{"error": "line set differs from the polar-space lines"}]
    elif name == "cone":
        if tag_root != "T7":
            raise UsageError("cone check applies to T7")
        report = geometry.cone_structure_check(geom, form)
        passed = report.passed
        witnesses = [
            {
                "pole_set_ok": report.pole_set_ok,
                "degree4_is_conic": report.degree4_is_conic,
                "line_planes_ok": report.line_planes_ok,
                "off_vertex_ok": report.off_vertex_ok,
                "witness": report.witness,
            }
        ]
    elif name == "hexagon":
        stats = geometry.hexagon_check(geom)
        q = field.p
        passed = stats.as_tuple() == (
            stats.points,
            stats.points,
            q + 1,
            q + 1,
            12,
            6,
        )
        witnesses = [{"stats": list(stats.as_tuple())}]
    elif name == "t11":
        if tag_root not in ("T11_1", "T11_2"):
            raise UsageError("t11 check applies to T11_1/T11_2")
        report = geometry.t11_structure_check(geom, form)
        passed = report.passed
        witnesses = [{"witness": report.witness}] if report.witness else []
    elif name == "t4":
        if tag_root != "T4":
            raise UsageError("t4 check applies to T4")
        report = geometry.t4_line_check(geom)
        passed = report.passed
        witnesses = [{"witness": report.witness}] if report.witness else []
    else:
        raise UsageError(f"unknown check {name!r} (choose from {CHECKS})")
    payload = geometry.verdict(name, form.label or "file", field, passed, witnesses)
    _emit(payload, args.output)
    return 0 if passed else 1


def _cmd_fingerprint(args) -> int:
    form = _load_form(args)
    field = _finite_field_of(form, args)
    fp = geometry.fingerprint(form, field, budget=args.budget)
    payload = {
        "form": form.label or "file",
        "field": repr(field),
        "rank": fp.rank,
        "n": fp.n,
        "pole_count": fp.pole_count,
        "degree_histogram": [list(t) for t in fp.degree_histogram],
        "line_count": fp.line_count,
        "lines_per_point_histogram": [list(t) for t in fp.lines_per_point_histogram],
        "variety_degree": fp.variety_degree,
    }
    _emit(payload, args.output)
    return 0


def _cmd_tables(args) -> int:
    which = [2, 3, 4, 5] if args.which == "all" else [int(args.which)]
    ok = True
    for w in which:
        report = tables.tables_fixture(w)
        ok = ok and report["ok"]
        if args.output == "json":
            print(json.dumps(report, indent=2))
        else:
            for row in report["rows"]:
                status = "ok" if row["ok"] else "DIFF"
                print(f"table {w}\t{row['tag']}\t{status}")
                for diff in row["diff"]:
                    print(f"  {diff}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polegeom",
        description="exact pole geometries of alternating trilinear forms",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="emit a catalog form (or --list the tags)")
    _add_form_source(p)
    p.add_argument("--list", action="store_true", help="list the catalog tags")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("eval", help="evaluate the form on three vectors")
    _add_form_source(p)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--z", required=True)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("radical", help="radical and rank of the form")
    _add_form_source(p)
    p.set_defaults(func=_cmd_radical)

    p = sub.add_parser("matrix", help="symbolic contraction matrix")
    _add_form_source(p)
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser("poles", help="full pole report over a finite field")
    _add_form_source(p)
    p.set_defaults(func=_cmd_poles)

    p = sub.add_parser("variety", help="pole-variety equation")
    _add_form_source(p)
    p.add_argument("--index", type=int, help="principal index to use")
    p.set_defaults(func=_cmd_variety)

    p = sub.add_parser("radical-lines", help="upper-radical lines")
    _add_form_source(p)
    p.add_argument("--point", help="restrict to lines through this point")
    p.set_defaults(func=_cmd_radical_lines)

    p = sub.add_parser("construct", help="build a form and print its file")
    p.add_argument("what", choices=("cch", "extend", "expand", "block", "join"))
    _add_form_source(p)
    p.add_argument("--extra", type=int, help="extension dimensions")
    p.add_argument("--pairs", help="bilinear pairs, e.g. 23,45,67")
    p.add_argument("--direction", type=int, help="expansion direction index")
    p.add_argument("--file2", help="second operand form file")
    p.add_argument("--alpha", help="first block scalar")
    p.add_argument("--beta", help="second block scalar")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("check", help="run a geometry check (exit 1 on failure)")
    p.add_argument("what", choices=CHECKS)
    _add_form_source(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("fingerprint", help="deterministic geometry fingerprint")
    _add_form_source(p)
    p.set_defaults(func=_cmd_fingerprint)

    p = sub.add_parser("tables", help="recompute and diff the reference tables")
    p.add_argument("--which", default="all", choices=("2", "3", "4", "5", "all"))
    p.add_argument(
        "--output", choices=("text", "json"), default="text", help="report format"
    )
    p.set_defaults(func=_cmd_tables)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 2
    except (
        UsageError,
        CatalogConditionError,
        FieldError,
        VarietyError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

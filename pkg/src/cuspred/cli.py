"""Command line front end.

Subcommands:

    validate    check a datum file clause by clause
    describe    reducibility report for a datum
    packet      companion census and packet statistics for a datum
    crossform   companion censuses on the other forms of the same group
    enumerate   all cuspidal data for a group
    selfcheck   exhaustive consistency sweep over small groups
    examples    recompute the built-in gallery and diff against stored values

Data travel as JSON.  A datum is

    {"group": {"family": "Sp", "epsilon": 0, "witt_index": 3,
               "aniso": [0, 0], "field": {"p": 3, "e": 1, "ext": "trivial"}},
     "parahoric": {"n1": 2, "n2": 1},
     "supports": [[{"poly": [2, 1], "m": 1}], [{"poly": [1, 1], "m": 1}]]}

where polynomials list their coefficients from the constant term up.
Every subcommand accepts a file path, inline JSON, or "-" for stdin, and
prints JSON (canonically ordered, byte-deterministic) or markdown.
Exit codes: 0 success, 1 failed validation or a failed check, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cuspdata import (
    CuspidalDatum,
    FactorSupport,
    count_representations,
    enumerate_data,
    validate_support,
)
from .ffpoly import FieldSpec, Poly, SelfDualClass
from .fixtures import evaluate_entry, gallery, gallery_entry
from .groups import GroupSpec, ParahoricSpec
from .hecke import ired, jordan, parameter_shapes, reducibility_report
from .packets import companions, cross_form_companions, packet_stats
from .selfcheck import ALL_CHECKS, run_selfcheck

__all__ = [
    "SchemaError",
    "datum_from_obj",
    "datum_to_obj",
    "group_from_obj",
    "group_to_obj",
    "main",
]


class SchemaError(ValueError):
    """The input is well-formed JSON but not a valid object description."""


def field_to_obj(field: FieldSpec) -> dict:
    return {"p": field.p, "e": field.e, "ext": field.ext}


def field_from_obj(obj) -> FieldSpec:
    try:
        return FieldSpec(int(obj["p"]), int(obj.get("e", 1)),
                         str(obj.get("ext", "trivial")))
    except (KeyError, TypeError, ValueError) as err:
        raise SchemaError(f"bad field description: {err}") from err


def group_to_obj(group: GroupSpec) -> dict:
    return {
        "family": group.family,
        "epsilon": group.epsilon,
        "witt_index": group.witt,
        "aniso": list(group.aniso),
        "field": field_to_obj(group.field),
    }


def group_from_obj(obj) -> GroupSpec:
    try:
        witt = int(obj["witt_index"])
        a1, a2 = (int(a) for a in obj["aniso"])
        field = field_from_obj(obj["field"])
        return GroupSpec(str(obj["family"]), 2 * witt + a1 + a2, witt, (a1, a2),
                         field, int(obj.get("epsilon", 0)))
    except SchemaError:
        raise
    except (KeyError, TypeError, ValueError) as err:
        raise SchemaError(f"bad group description: {err}") from err


def support_to_obj(support: FactorSupport) -> list:
    return [{"poly": list(cls.poly.coeffs), "m": m} for cls, m in support.entries]


def _support_from_obj(obj, field: FieldSpec) -> FactorSupport:
    pairs = []
    for item in obj:
        cls = SelfDualClass(Poly.make(field, [int(c) for c in item["poly"]]))
        pairs.append((cls, int(item["m"])))
    return FactorSupport.of(pairs)


def datum_to_obj(datum: CuspidalDatum) -> dict:
    return {
        "group": group_to_obj(datum.group),
        "parahoric": {"n1": datum.parahoric.n1, "n2": datum.parahoric.n2},
        "supports": [support_to_obj(s) for s in datum.supports],
    }


def datum_parts_from_obj(obj) -> tuple[ParahoricSpec, tuple[FactorSupport, FactorSupport]]:
    """Build the pieces of a datum without running the support validation."""
    try:
        group = group_from_obj(obj["group"])
        parahoric = ParahoricSpec(group, int(obj["parahoric"]["n1"]),
                                  int(obj["parahoric"]["n2"]))
        supports = obj["supports"]
        if len(supports) != 2:
            raise SchemaError("a datum carries exactly two supports")
        s1, s2 = (_support_from_obj(s, group.field) for s in supports)
        return parahoric, (s1, s2)
    except SchemaError:
        raise
    except (KeyError, TypeError, ValueError) as err:
        raise SchemaError(f"bad datum description: {err}") from err


def datum_from_obj(obj) -> CuspidalDatum:
    parahoric, supports = datum_parts_from_obj(obj)
    return CuspidalDatum(parahoric, supports)


def _read_json(source: str):
    if source == "-":
        text = sys.stdin.read()
    elif source.lstrip().startswith("{"):
        text = source
    else:
        with open(source, encoding="utf-8") as handle:
            text = handle.read()
    return json.loads(text)


def _emit(args, obj, render_md) -> None:
    if args.format == "json":
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        print("\n".join(render_md(obj)))


def _labels(classes) -> list:
    return [cls.label for cls in classes]


def _datum_notes(parahoric: ParahoricSpec) -> list:
    notes = []
    if parahoric.group.family == "Uram":
        for factor in parahoric.factors:
            if factor.kind == "SOodd" and factor.dual_dim > 0:
                notes.append(
                    "untested combination: odd orthogonal factor of positive "
                    "rank inside a ramified unitary group; its cuspidal count "
                    "is taken to be 1 per support")
                break
    return notes


# ---------------------------------------------------------------- validate

_CLAUSES = ("a", "b", "c", "d")


def _cmd_validate(args) -> int:
    obj = _read_json(args.input)
    parahoric, supports = datum_parts_from_obj(obj)
    field = parahoric.group.field
    factors = []
    valid = parahoric.maximal
    for factor, support in zip(parahoric.factors, supports):
        verdicts = dict.fromkeys(_CLAUSES, "not checked")
        try:
            validate_support(factor, support, field)
            for clause in _CLAUSES:
                verdicts[clause] = "pass"
            if factor.case != "iii":
                verdicts["d"] = "pass (no sign condition)"
            ok = True
        except ValueError as err:
            message = str(err)
            if message.startswith("clause "):
                clause, message = message[7], message.split(": ", 1)[1]
            else:
                clause = "a"
            verdicts[clause] = message
            ok = False
        valid = valid and ok
        factors.append({"factor": str(factor), "clauses": verdicts, "valid": ok})
    report = {
        "group": str(parahoric.group),
        "parahoric": str(parahoric),
        "parahoric_maximal": parahoric.maximal,
        "factors": factors,
        "valid": valid,
        "notes": _datum_notes(parahoric),
    }

    def render(rep) -> list:
        lines = [f"# validate {rep['parahoric']}", ""]
        lines.append(f"- maximal parahoric: {'yes' if rep['parahoric_maximal'] else 'NO'}")
        for item in rep["factors"]:
            lines.append(f"- factor {item['factor']}: "
                         f"{'valid' if item['valid'] else 'INVALID'}")
            for clause in _CLAUSES:
                lines.append(f"    - clause {clause}: {item['clauses'][clause]}")
        lines.append(f"- datum: {'valid' if rep['valid'] else 'INVALID'}")
        lines.extend(f"- note: {note}" for note in rep["notes"])
        return lines

    _emit(args, report, render)
    return 0 if valid else 1


# ---------------------------------------------------------------- describe

def _cmd_describe(args) -> int:
    datum = datum_from_obj(_read_json(args.input))
    report = reducibility_report(datum)
    reps = count_representations(datum)
    shapes = parameter_shapes(datum)
    obj = {
        "datum": str(datum),
        "group": str(datum.group),
        "representations": {
            "n1": reps.n1,
            "n2": reps.n2,
            "component_order": reps.component_order,
            "slot_actions": list(reps.slot_actions),
            "total": reps.total,
        },
        "classes": [
            {
                "class": c.cls.label,
                "degree": c.cls.degree,
                "f_pair": [str(f) for f in c.f_pair],
                "s_pair": [str(s) for s in c.s_pair],
                "chains": [list(chain) for chain in c.chains],
            }
            for c in report.classes
        ],
        "ired": [[cls.label, str(s)] for cls, s in ired(datum)],
        "jordan": [{"class": j.cls.label, "member": j.member, "m": j.m}
                   for j in jordan(datum)],
        "identity": {"lhs": report.lhs, "rhs": report.dual_dimension,
                     "ok": report.identity_holds},
        "shapes": {
            "count": len(shapes),
            "entries": [
                [
                    {
                        "class": cls.label,
                        "members": [{"tag": m.tag, "s": str(m.s),
                                     "chain": list(m.chain)} for m in members],
                    }
                    for cls, members in shape.entries
                ]
                for shape in shapes
            ],
        },
        "notes": _datum_notes(datum.parahoric),
    }

    def render(rep) -> list:
        ident = rep["identity"]
        lines = [f"# describe {rep['datum']}", ""]
        r = rep["representations"]
        lines.append(f"- representations: {r['total']} "
                     f"(series {r['n1']} x {r['n2']}, component order "
                     f"{r['component_order']})")
        lines.append("")
        lines.append("| class | f-pair | s-pair | chains |")
        lines.append("|---|---|---|---|")
        for c in rep["classes"]:
            chains = " / ".join(",".join(str(m) for m in chain) or "-"
                                for chain in c["chains"])
            lines.append(f"| {c['class']} | ({c['f_pair'][0]}, {c['f_pair'][1]}) "
                         f"| ({c['s_pair'][0]}, {c['s_pair'][1]}) | {chains} |")
        lines.append("")
        lines.append("- IRed: " + (", ".join(f"({label}, {s})" for label, s in rep["ired"])
                                   or "empty"))
        lines.append("- Jordan: " + (", ".join(
            f"({j['class']}, member {j['member']}, {j['m']})" for j in rep["jordan"])
            or "empty"))
        lines.append(f"- identity: {ident['lhs']} = {ident['rhs']} "
                     f"({'ok' if ident['ok'] else 'FAILED'})")
        lines.append(f"- parameter shapes: {rep['shapes']['count']}")
        for shape in rep["shapes"]["entries"]:
            parts = []
            for cls in shape:
                members = " ".join(
                    f"{m['tag']}[s={m['s']};{','.join(str(x) for x in m['chain']) or '-'}]"
                    for m in cls["members"])
                parts.append(f"{cls['class']}: {members}")
            lines.append("    - " + "; ".join(parts))
        lines.extend(f"- note: {note}" for note in rep["notes"])
        return lines

    _emit(args, obj, render)
    return 0 if report.identity_holds else 1


# ---------------------------------------------------------------- packet

def _cmd_packet(args) -> int:
    datum = datum_from_obj(_read_json(args.input))
    census = companions(datum)
    stats = packet_stats(datum, census)
    qs = census.qsets
    notes = _datum_notes(datum.parahoric)
    obj = {
        "datum": str(datum),
        "group": str(datum.group),
        "stratification": {
            "raw": _labels(qs.raw),
            "kept": _labels(qs.kept),
            "removed": _labels(qs.removed),
            "constrained": _labels(qs.constrained),
            "free": _labels(qs.free),
            "q": qs.q,
            "delta": qs.delta,
        },
        "companions": [
            {
                "swaps": _labels(c.swap_set),
                "datum": str(c.datum),
                "parahoric": [c.datum.parahoric.n1, c.datum.parahoric.n2],
                "reps": c.reps,
            }
            for c in census.companions
        ],
        "census": {"data": stats.census_data, "total": stats.census_total},
        "packet": {
            "jordan_size": stats.jordan_size,
            "packet_size": stats.packet_size,
            "e": stats.e,
            "e0": stats.e0,
            "expected_count": stats.expected_count,
            "multiple": str(stats.multiple),
        },
        "notes": notes,
    }
    if stats.o_per_datum is not None:
        obj["orthogonal"] = {
            "per_datum": stats.o_per_datum,
            "total": stats.o_total,
            "multiple": str(stats.o_multiple),
        }
        obj["notes"] = notes + [
            f"full orthogonal doubling: each datum extends in {stats.o_per_datum} "
            f"ways, so the full orthogonal census totals {stats.o_total} "
            f"(multiple {stats.o_multiple} of the expected packet count)"]

    def render(rep) -> list:
        lines = [f"# packet {rep['datum']}", ""]
        s = rep["stratification"]
        lines.append(f"- swap candidates: raw {s['raw']}, kept {s['kept']}, "
                     f"removed {s['removed']}")
        lines.append(f"- constrained {s['constrained']}, free {s['free']}, "
                     f"q = {s['q']}, delta = {s['delta']}")
        lines.append("")
        lines.append("| swaps | companion | reps |")
        lines.append("|---|---|---|")
        for c in rep["companions"]:
            swaps = ", ".join(c["swaps"]) or "(none)"
            lines.append(f"| {swaps} | {c['datum']} | {c['reps']} |")
        lines.append("")
        p = rep["packet"]
        lines.append(f"- census: {rep['census']['data']} data, "
                     f"{rep['census']['total']} representations")
        lines.append(f"- jordan size {p['jordan_size']}, packet size {p['packet_size']}, "
                     f"e = {p['e']}, e0 = {p['e0']}")
        lines.append(f"- expected cuspidal count {p['expected_count']}, "
                     f"multiple {p['multiple']}")
        if "orthogonal" in rep:
            o = rep["orthogonal"]
            lines.append(f"- full orthogonal: {o['per_datum']} per datum, "
                         f"total {o['total']}, multiple {o['multiple']}")
        lines.extend(f"- note: {note}" for note in rep["notes"])
        return lines

    _emit(args, obj, render)
    return 0


# ---------------------------------------------------------------- crossform

def _cmd_crossform(args) -> int:
    datum = datum_from_obj(_read_json(args.input))
    entries = cross_form_companions(datum)
    obj = {
        "datum": str(datum),
        "group": str(datum.group),
        "forms": [
            {
                "group": str(entry.group),
                "census_data": len(entry.companions),
                "census_total": entry.total,
                "companions": [
                    {"swaps": _labels(c.swap_set), "datum": str(c.datum),
                     "reps": c.reps}
                    for c in entry.companions
                ],
            }
            for entry in entries
        ],
    }

    def render(rep) -> list:
        lines = [f"# crossform {rep['datum']}", ""]
        if not rep["forms"]:
            lines.append("- no other forms share this dimension")
        for form in rep["forms"]:
            lines.append(f"- {form['group']}: {form['census_data']} data, "
                         f"{form['census_total']} representations")
            for c in form["companions"]:
                swaps = ", ".join(c["swaps"]) or "(none)"
                lines.append(f"    - swaps {swaps}: {c['datum']} ({c['reps']} reps)")
        return lines

    _emit(args, obj, render)
    return 0


# ---------------------------------------------------------------- enumerate

def _cmd_enumerate(args) -> int:
    obj = _read_json(args.input)
    group = group_from_obj(obj.get("group", obj))
    data = enumerate_data(group, max_degree=args.degree)
    payload = {
        "group": str(group),
        "degree_bound": args.degree,
        "count": len(data),
        "total_reps": sum(count_representations(d).total for d in data),
    }
    if not args.count:
        payload["data"] = [datum_to_obj(d) for d in data]
        payload["labels"] = [str(d) for d in data]

    def render(rep) -> list:
        lines = [f"# enumerate {rep['group']}", ""]
        bound = rep["degree_bound"]
        lines.append(f"- degree bound: {bound if bound is not None else 'none'}")
        lines.append(f"- cuspidal data: {rep['count']}")
        lines.append(f"- representations: {rep['total_reps']}")
        for label in rep.get("labels", ()):
            lines.append(f"    - {label}")
        return lines

    _emit(args, payload, render)
    return 0


# ---------------------------------------------------------------- selfcheck

def _cmd_selfcheck(args) -> int:
    checks = tuple(args.checks.split(",")) if args.checks else ALL_CHECKS
    try:
        report = run_selfcheck(
            q0_values=tuple(args.q) if args.q else (3, 5),
            max_dual=args.dualdim,
            max_degree=args.degree if args.degree is not None else 4,
            checks=checks,
            fail_fast=True)
    except ValueError as err:
        raise SchemaError(str(err)) from err
    obj = {
        "q0_values": list(report.q0_values),
        "max_dual": report.max_dual,
        "max_degree": report.max_degree,
        "checks": list(report.checks),
        "groups": report.groups,
        "signatures": report.signatures,
        "data_weight": report.data_weight,
        "failure_counts": report.failure_counts,
        "ok": report.ok,
        "failures": [
            {
                "check": f.check,
                "group": str(f.datum.group),
                "datum": str(f.datum),
                "detail": f.detail,
                "reproducer": datum_to_obj(f.datum),
            }
            for f in report.failures
        ],
    }

    def render(rep) -> list:
        lines = ["# selfcheck", ""]
        lines.append(f"- fields: residue sizes {rep['q0_values']}, "
                     f"dual dimension <= {rep['max_dual']}, "
                     f"class degree <= {rep['max_degree']}")
        lines.append(f"- checks: {', '.join(rep['checks'])}")
        lines.append(f"- swept {rep['groups']} groups, {rep['signatures']} signatures, "
                     f"{rep['data_weight']} data ({report.elapsed:.1f}s)")
        for name, count in rep["failure_counts"].items():
            lines.append(f"- {name}: {'ok' if not count else f'{count} FAILURES'}")
        for f in rep["failures"]:
            lines.append(f"- FAILURE [{f['check']}] {f['datum']}: {f['detail']}")
            lines.append(f"    reproducer: {json.dumps(f['reproducer'], sort_keys=True)}")
        lines.append(f"- verdict: {'ok' if rep['ok'] else 'FAILED'}")
        return lines

    _emit(args, obj, render)
    return 0 if report.ok else 1


# ---------------------------------------------------------------- examples

def _cmd_examples(args) -> int:
    entries = [gallery_entry(args.name)] if args.name else list(gallery())
    out = []
    all_match = True
    for entry in entries:
        computed = evaluate_entry(entry)
        diffs = {
            key: {"stored": entry.expected[key], "computed": computed[key]}
            for key in entry.expected if entry.expected[key] != computed[key]
        }
        all_match = all_match and not diffs
        out.append({
            "name": entry.name,
            "title": entry.title,
            "datum": datum_to_obj(entry.datum),
            "label": str(entry.datum),
            "stored": entry.expected,
            "computed": computed,
            "diffs": diffs,
            "match": not diffs,
            "note": entry.note or None,
        })
    obj = {"entries": out, "all_match": all_match}

    def render(rep) -> list:
        lines = []
        for item in rep["entries"]:
            lines.append(f"# {item['name']}: {item['title']}")
            lines.append("")
            lines.append(f"- datum: {item['label']}")
            lines.append(f"- match: {'yes' if item['match'] else 'NO'}")
            lines.append("")
            lines.append("| quantity | stored | computed |")
            lines.append("|---|---|---|")
            for key, stored in item["stored"].items():
                lines.append(f"| {key} | {stored} | {item['computed'][key]} |")
            if item["note"]:
                lines.append("")
                lines.append(f"note: {item['note']}")
            lines.append("")
        lines.append(f"all entries match: {'yes' if rep['all_match'] else 'NO'}")
        return lines

    _emit(args, obj, render)
    return 0 if all_match else 1


# ---------------------------------------------------------------- driver

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cuspred",
        description="exact reducibility and packet calculus for depth zero "
                    "cuspidal data of p-adic classical groups")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, func, help_text, needs_input=True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("json", "md"), default="md",
                       help="output format (default md)")
        if needs_input:
            p.add_argument("input", nargs="?", default="-",
                           help="path to a JSON file, inline JSON, or - for stdin")
        p.set_defaults(func=func)
        return p

    add("validate", _cmd_validate, "check a datum clause by clause")
    add("describe", _cmd_describe, "reducibility report for a datum")
    add("packet", _cmd_packet, "companion census and packet statistics")
    add("crossform", _cmd_crossform, "companion censuses on the other forms")

    p = add("enumerate", _cmd_enumerate, "all cuspidal data for a group")
    p.add_argument("--degree", type=int, default=None,
                   help="bound on polynomial class degrees")
    p.add_argument("--count", action="store_true",
                   help="print only the census size")

    p = add("selfcheck", _cmd_selfcheck, "exhaustive consistency sweep",
            needs_input=False)
    p.add_argument("--q", type=int, action="append",
                   help="residue field size, repeatable (default 3 and 5)")
    p.add_argument("--dualdim", type=int, default=13,
                   help="bound on the dual dimension (default 13)")
    p.add_argument("--degree", type=int, default=None,
                   help="bound on polynomial class degrees (default 4)")
    p.add_argument("--checks", default=None,
                   help=f"comma separated subset of {','.join(ALL_CHECKS)}")

    p = add("examples", _cmd_examples, "recompute the built-in gallery",
            needs_input=False)
    p.add_argument("--name", default=None,
                   help="run a single gallery entry")

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (json.JSONDecodeError, OSError, SchemaError, KeyError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"invalid input: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

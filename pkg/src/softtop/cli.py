"""Command line front end.

Every command reads a workspace file (``--file``) and prints a plain-text
report, or with ``--json`` a document ``{"ok": ..., "result": ..., "witness": ...}``.
Exit status: 0 computed/true, 1 computed/false, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import crisp
from .ntopology import check_implications, make_nspace, nwise, permissive_nwise
from .oracle import REGISTRY, EnumerationBudget, check_proposition
from .softset import Context, SoftPoint, SoftSet, SoftSetError, soft_points_of
from .topology import (
    SoftTopology,
    Violation,
    closure,
    crisp_slice,
    generate,
    join,
    meet,
    relative,
    separation_trace,
    to_product_topology,
    validate,
)
from .workspace import RESERVED, Workspace, load, name_sets


@dataclass
class Report:
    ok: bool
    lines: list[str] = field(default_factory=list)
    result: Any = None
    witness: Any = None

    def emit(self, as_json: bool) -> str:
        if as_json:
            doc = {"ok": self.ok, "result": self.result, "witness": self.witness}
            return json.dumps(doc, indent=2) + "\n"
        return "\n".join(self.lines) + "\n"


# -- formatting --------------------------------------------------------------


def fmt_labels(labels) -> str:
    return "{" + ", ".join(labels) + "}"


def set_lines(F: SoftSet, indent: str = "  ") -> list[str]:
    return [f"{indent}{e}: {fmt_labels(xs)}" for e, xs in F.rows().items()]


def rows_doc(F: SoftSet) -> dict[str, list[str]]:
    return {e: list(xs) for e, xs in F.rows().items()}


def point_doc(p: SoftPoint) -> list[str]:
    return list(p.label)


def topology_report(ws: Workspace, sets: Sequence[SoftSet], title: str) -> tuple[list[str], dict]:
    """Text lines and a loadable workspace document for a family over ``ws.context``."""
    names = name_sets(ws, sets)
    full = ws.context.full
    # NULL and ABS first, then canonical order
    ordered = sorted({F.bits: F for F in sets}.values(), key=lambda F: (F.bits not in (0, full), F.bits))
    member_names = [names[F.bits] for F in ordered]
    lines = [f"{title} = {fmt_labels(member_names)}  ({len(ordered)} members)"]
    for F in ordered:
        name = names[F.bits]
        if name in RESERVED:
            continue
        tag = "" if name in ws.named_sets else "  (new)"
        lines.append(f"{name}{tag}")
        lines.extend(set_lines(F))
    doc = Workspace(
        ws.context,
        {names[F.bits]: F for F in ordered if names[F.bits] not in RESERVED},
        {title: member_names},
    ).to_dict()
    return lines, doc


def _split(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


# -- commands ----------------------------------------------------------------


def cmd_validate(ws: Workspace, args) -> Report:
    fam = ws.family(args.topology)
    rep = validate(ws.context, fam)
    if rep.valid:
        return Report(True, [f"{args.topology}: valid soft topology ({len({F.bits for F in fam})} members)"],
                      {"valid": True, "members": len({F.bits for F in fam})})
    extra = [v.missing for v in rep.violations] + [o for v in rep.violations for o in v.operands]
    names = name_sets(ws, extra)

    declared = {name: i for i, name in enumerate([*RESERVED, *ws.named_sets, *sorted(set(names.values()))])}

    def operands(v: Violation) -> list[str]:
        return sorted((names[o.bits] for o in v.operands), key=declared.__getitem__)

    def vdoc(v: Violation) -> dict:
        return {"axiom": v.axiom, "operands": operands(v),
                "missing": rows_doc(v.missing), "missing_name": names[v.missing.bits]}

    def vtext(v: Violation) -> str:
        if v.operands:
            ops = ", ".join(operands(v))
            return f"{v.axiom}({ops}) = {names[v.missing.bits]} is not in the family"
        return f"{v.axiom} soft set is not in the family"

    lines = [f"{args.topology}: not a soft topology", f"first violation: {vtext(rep.violation)}"]
    lines.extend(set_lines(rep.violation.missing))
    lines.append(f"all violations ({len(rep.violations)}):")
    for v in rep.violations:
        lines.append(f"  {vtext(v)}")
    new = sorted({v.missing.bits for v in rep.violations if names[v.missing.bits] not in ws.named_sets
                  and names[v.missing.bits] not in RESERVED})
    for b in new:
        lines.append(names[b])
        lines.extend(set_lines(SoftSet(ws.context, b)))
    return Report(False, lines, {"valid": False, "violations": [vdoc(v) for v in rep.violations]},
                  vdoc(rep.violation))


def _topologies(ws: Workspace, names: Sequence[str]) -> list[SoftTopology]:
    return [ws.topology(n) for n in names]


def cmd_meet(ws: Workspace, args) -> Report:
    T = meet(_topologies(ws, args.topology))
    lines, doc = topology_report(ws, T.opens, "meet")
    return Report(True, lines, doc)


def cmd_sup(ws: Workspace, args) -> Report:
    T = join(_topologies(ws, args.topology))
    lines, doc = topology_report(ws, T.opens, "sup")
    return Report(True, lines, doc)


def cmd_generate(ws: Workspace, args) -> Report:
    T = generate(ws.context, [ws.soft_set(s) for s in _split(args.sets)])
    lines, doc = topology_report(ws, T.opens, "generated")
    return Report(True, lines, doc)


def cmd_subspace(ws: Workspace, args) -> Report:
    names = _space_names(args)
    carrier = _split(args.carrier)
    parts = [relative(ws.topology(n), carrier) for n in names]
    sub: Context = parts[0].context
    # name each restricted set after the first declared open it comes from
    origin: dict[int, str] = {}
    for name, part in zip(names, parts):
        for F in ws.family(name):
            R = relative(SoftTopology(ws.context, frozenset({0, ws.context.full, F.bits})), carrier)
            for b in R.members:
                if b not in (0, sub.full) and b not in origin and F.bits not in (0, ws.context.full):
                    origin[b] = f"{ws.name_of(F)}_Y"
    declared = list(ws.named_sets)
    by_name = sorted(origin, key=lambda b: declared.index(origin[b][:-2]))
    sub_ws = Workspace(sub)
    for b in by_name:
        sub_ws.named_sets[origin[b]] = SoftSet(sub, b)
    lines = [f"carrier Y = {fmt_labels(sub.universe)}"]
    for name, part in zip(names, parts):
        label = {0: "NULL", sub.full: "ABS", **origin}
        members = [label[b] for b in sorted(part.members, key=lambda b: (b not in (0, sub.full), b))]
        sub_ws.named_topologies[name] = members
        lines.append(f"{name}_Y = {fmt_labels(members)}  ({len(members)} members)")
    for b in by_name:
        lines.append(origin[b])
        lines.extend(set_lines(SoftSet(sub, b)))
    return Report(True, lines, sub_ws.to_dict())


def cmd_crisp(ws: Workspace, args) -> Report:
    names = _space_names(args)
    params = [args.param] if args.param else list(ws.context.parameters)
    lines, result = [], {}
    for name in names:
        T = ws.topology(name)
        result[name] = {}
        for e in params:
            fam = crisp_slice(T, e)
            result[name][e] = [list(s) for s in _ordered_labels(ws.context, fam)]
            shown = ", ".join(fmt_labels(s) for s in _ordered_labels(ws.context, fam))
            lines.append(f"{name}_{e} = {{{shown}}}")
    return Report(True, lines, result)


def _ordered_labels(ctx: Context, fam) -> list[list[str]]:
    order = {x: i for i, x in enumerate(ctx.universe)}
    return [sorted(s, key=order.__getitem__) for s in fam]


def cmd_product(ws: Workspace, args) -> Report:
    fam = ws.family(args.topology)
    points, graphs = to_product_topology(fam, ws.context)
    is_top = crisp.is_topology(points, graphs)
    pt = lambda p: f"({p[0]},{p[1]})"  # noqa: E731
    order = {p: i for i, p in enumerate(points)}
    ordered = [sorted(g, key=order.__getitem__) for g in graphs]
    lines = [f"product points ({len(points)}): " + fmt_labels(pt(p) for p in points),
             f"graphs of {args.topology} ({len(graphs)}):"]
    lines.extend("  " + fmt_labels(pt(p) for p in g) for g in ordered)
    lines.append(f"crisp topology on the product: {'yes' if is_top else 'no'}")
    return Report(is_top, lines, {"points": [list(p) for p in points],
                                  "graphs": [[list(p) for p in g] for g in ordered],
                                  "is_topology": is_top})


def cmd_closure(ws: Workspace, args) -> Report:
    T = ws.topology(args.topology)
    F = ws.soft_set(args.set)
    C = closure(T, F)
    name = name_sets(ws, [C])[C.bits]
    lines = [f"closure of {args.set} in {args.topology} = {name}"] + set_lines(C)
    return Report(True, lines, {"name": name, "rows": rows_doc(C)})


def cmd_points(ws: Workspace, args) -> Report:
    F = ws.soft_set(args.set)
    pts = soft_points_of(F)
    lines = [f"soft points of {args.set} ({len(pts)}):"] + [f"  {p}" for p in pts]
    return Report(True, lines, [point_doc(p) for p in pts])


def _space_names(args) -> list[str]:
    names = []
    if getattr(args, "topology", None):
        names.append(args.topology)
    if getattr(args, "space", None):
        names += _split(args.space)
    if not names:
        raise SoftSetError("give topologies with -t NAME or --space A,B,...")
    return names


def cmd_separation(ws: Workspace, args) -> Report:
    names = _space_names(args)
    if args.permissive:
        res = permissive_nwise(ws.context, [ws.family(n) for n in names], args.axiom)
        mode = "permissive "
    else:
        res = nwise(make_nspace(ws.context, [ws.topology(n) for n in names], names), args.axiom)
        mode = ""
    space = ",".join(names)
    N = len(names)
    result: dict[str, Any] = {"axiom": args.axiom, "holds": bool(res), "permissive": args.permissive}
    lines = [f"{mode}{N}-wise soft {args.axiom.upper()} on ({space}): {'holds' if res else 'fails'}"]
    if not res:
        x, y = res.witness
        lines += [f"witness: x = {x}, y = {y}", f"  {res.detail}"]
    if args.trace:
        pooled = {F.bits for n in names for F in ws.family(n)}
        steps = separation_trace(ws.context, pooled, args.axiom)
        label = name_sets(ws, [SoftSet(ws.context, b) for b in pooled])
        lines.append(f"trace ({len(steps)} pairs):")
        trace = []
        for x, y, found in steps:
            by = [label[b] for b in found] if found else None
            trace.append({"x": point_doc(x), "y": point_doc(y), "separated_by": by})
            lines.append(f"  {x} {y}: " + (" / ".join(by) if by else "not separated"))
        result["trace"] = trace
    if res:
        return Report(True, lines, result)
    x, y = res.witness
    return Report(False, lines, result, {"pair": [point_doc(x), point_doc(y)], "detail": res.detail})


def cmd_implications(ws: Workspace, args) -> Report:
    names = _space_names(args)
    S = make_nspace(ws.context, [ws.topology(n) for n in names], names)
    rep = check_implications(S)
    lines = []
    for ax in ("t0", "t1", "t2"):
        comp = ", ".join(f"{n}={'yes' if v else 'no'}" for n, v in zip(names, rep.componentwise[ax]))
        lines.append(f"{ax.upper()}: components [{comp}]  N-wise={'yes' if rep.nwise[ax] else 'no'}"
                     f"  supremum={'yes' if rep.supremum[ax] else 'no'}")
    lines.append("implications: " + ("consistent" if rep.ok else "; ".join(rep.violations)))
    result = {ax: {"components": rep.componentwise[ax], "nwise": bool(rep.nwise[ax]),
                   "supremum": bool(rep.supremum[ax])} for ax in ("t0", "t1", "t2")}
    result["violations"] = rep.violations
    return Report(rep.ok, lines, result)


def cmd_oracle(args) -> Report:
    if args.prop == "list":
        lines = [f"{c.name}{' (search)' if c.search else ''}: {c.description}" for c in REGISTRY.values()]
        return Report(True, lines, [{"name": c.name, "search": c.search, "description": c.description}
                                    for c in REGISTRY.values()])
    budget = EnumerationBudget(seed=args.seed, trials=args.trials, n=args.n, m=args.m)
    rep = check_proposition(args.prop, budget)
    lines = [rep.line(), f"  {rep.description}"]
    if rep.fixture is not None:
        lines.append("fixture:")
        lines.extend("  " + ln for ln in json.dumps(rep.fixture, indent=2).splitlines())
    return Report(rep.passed, lines, {"name": rep.name, "passed": rep.passed, "cases": rep.cases,
                                      "message": rep.message, "search": rep.search}, rep.fixture)


COMMANDS = {
    "validate": cmd_validate,
    "meet": cmd_meet,
    "sup": cmd_sup,
    "generate": cmd_generate,
    "subspace": cmd_subspace,
    "crisp": cmd_crisp,
    "product": cmd_product,
    "closure": cmd_closure,
    "points": cmd_points,
    "separation": cmd_separation,
    "implications": cmd_implications,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--file", "-f", required=True, help="workspace JSON file")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(prog="softtop", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="check the soft topology axioms")
    s.add_argument("-t", "--topology", required=True)
    for name, help_ in (("meet", "intersection of topologies"), ("sup", "supremum of topologies")):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("-t", "--topology", action="append", required=True)
    s = sub.add_parser("generate", parents=[common], help="smallest topology containing sets")
    s.add_argument("-s", "--sets", required=True, help="comma-separated set names")
    s = sub.add_parser("subspace", parents=[common], help="relative topology on a carrier")
    s.add_argument("-t", "--topology")
    s.add_argument("--space", help="comma-separated topology names")
    s.add_argument("--carrier", required=True, help="comma-separated point labels")
    s = sub.add_parser("crisp", parents=[common], help="crisp topologies per parameter")
    s.add_argument("-t", "--topology")
    s.add_argument("--space")
    s.add_argument("--param")
    s = sub.add_parser("product", parents=[common], help="graphs on parameters x universe")
    s.add_argument("-t", "--topology", required=True)
    s = sub.add_parser("closure", parents=[common], help="soft closure of a set")
    s.add_argument("-t", "--topology", required=True)
    s.add_argument("-s", "--set", required=True)
    s = sub.add_parser("points", parents=[common], help="soft points of a set")
    s.add_argument("-s", "--set", required=True)
    s = sub.add_parser("separation", parents=[common], help="N-wise soft T0/T1/T2")
    s.add_argument("-t", "--topology")
    s.add_argument("--space")
    s.add_argument("--axiom", choices=("t0", "t1", "t2"), required=True)
    s.add_argument("--permissive", action="store_true", help="skip validation, pool the raw families")
    s.add_argument("--trace", action="store_true", help="list the separating open set(s) for every pair")
    s = sub.add_parser("implications", parents=[common], help="separation implications report")
    s.add_argument("-t", "--topology")
    s.add_argument("--space")

    s = sub.add_parser("oracle", help="run a registered brute-force check ('list' to list)")
    s.add_argument("--file", "-f", help="ignored; accepted for uniformity")
    s.add_argument("--json", action="store_true")
    s.add_argument("--prop", required=True)
    s.add_argument("--n", type=int, default=3)
    s.add_argument("--m", type=int, default=2)
    s.add_argument("--trials", type=int, default=5000)
    s.add_argument("--seed", type=int, default=0)
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "oracle":
            report = cmd_oracle(args)
        else:
            report = COMMANDS[args.command](load(args.file), args)
    except (SoftSetError, OSError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    out.write(report.emit(args.json))
    return 0 if report.ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

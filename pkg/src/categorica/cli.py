"""Command-line front end: ``categorica <command> ...``.

Exit codes: 0 for any answered query (a failed entailment is an answer),
2 for unparsable input, 3 for a query outside its domain, 4 when the chosen
method cannot decide the query at this size.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from typing import Optional, Sequence

from .core import Universe, normalize, product_text
from .errors import CapabilityError, MalformedError, OutOfDomain
from .oracle import DEFAULT_CAP, entails, sample_countermodel
from .parsing import (
    ParseError,
    parse_conclusion,
    parse_literal,
    parse_product,
    parse_sorite,
    parse_statement,
    render,
)
from .pcp import PCP, PcpType, bound_subset_group, classify, derive, enumerate_all, mood_name
from .relabel import canonicalize
from .rules import esc_compatible, rofvca_check, rofvs_dofa
from .sorites import Sorite, eliminated_lc, solve, substitution_trace

SCHEMA = "categorica/1"
EXIT_PARSE, EXIT_DOMAIN, EXIT_CAPABILITY = 2, 3, 4


class _Output:
    def __init__(self, args: argparse.Namespace, out=None):
        self.json = args.json
        self.command = args.command
        self.out = out or sys.stdout

    def emit(self, lines: Sequence[str], payload: dict) -> None:
        if self.json:
            body = {"schema": SCHEMA, "command": self.command}
            body.update(payload)
            self.out.write(json.dumps(body, ensure_ascii=False, indent=2) + "\n")
        else:
            for line in lines:
                self.out.write(line + "\n")


def _roles(args: argparse.Namespace) -> dict:
    letters = args.universe or "SPM"
    u = Universe.of(letters)
    if u.n != 3:
        raise MalformedError(f"--universe needs three terms (S, P and M roles), got {u}")
    return dict(zip("spm", u.terms))


def _pcp(args: argparse.Namespace) -> PCP:
    items = args.premises
    if len(items) == 1:
        return PCP.from_code(items[0], **_roles(args))
    if len(items) == 2:
        p, s = (normalize(parse_statement(t)) for t in items)
        return PCP(p, s)
    raise MalformedError("give a two-letter PCP code or two premises")


def _pcp_json(q: PCP) -> dict:
    return {"code": q.code, "premises": [render(x) for x in q.premises]}


def _conclusion_json(c) -> dict:
    return {
        "text": c.text(),
        "kind": "universal" if c.is_universal else "existential",
        "ei_condition": None if c.ei_condition is None else str(c.ei_condition),
        "middle_dropped": None if c.middle_dropped is None else str(c.middle_dropped),
    }


def cmd_classify(args, out: _Output) -> int:
    q = _pcp(args)
    t = classify(q)
    name = mood_name(q)
    parts = [str(t), str(name)]
    payload = {"pcp": _pcp_json(q), "type": t.value, "mood": str(name),
               "aliases": list(name.aliases), "group": None, "bound_to": None}
    if t.entails:
        index, cell = bound_subset_group(q)
        parts.append(f"group {index} (bound to {cell})")
        payload.update(group=index, bound_to=cell.name)
    out.emit([", ".join(parts)], payload)
    return 0


def cmd_conclude(args, out: _Output) -> int:
    q = _pcp(args)
    found = derive(q)
    if args.mode == "precise":
        chosen = [c for c in found if not c.is_ei]
        lines = [c.text() for c in chosen]
    elif args.mode == "ei":
        chosen = [c for c in found if c.is_ei]
        lines = [f"{c.text()}  [{c.middle_dropped}]" for c in chosen]
    else:
        chosen, lines = [], []
        for c in found:
            if c.middle_dropped is None:
                continue
            line = str(c.middle_dropped)
            if c.ei_condition is not None:
                line += f" if {c.ei_condition} ≠ ∅"
            if line not in lines:
                chosen.append(c)
                lines.append(line)
    if not found:
        lines = [f"no conclusion ({classify(q)})"]
    out.emit(lines, {"pcp": _pcp_json(q), "type": classify(q).value, "mode": args.mode,
                     "conclusions": [_conclusion_json(c) for c in chosen]})
    return 0


def cmd_reduce(args, out: _Output) -> int:
    q = _pcp(args)
    f = canonicalize(q, to_darii=args.darii)
    out.emit([str(f)], {"pcp": _pcp_json(q), "representative": f.representative,
                        "code": f.code, "relabeling": f.relabeling.name,
                        "metathesis": f.metathesis_applied})
    return 0


def _read_sorite(path: str, args) -> Sorite:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise MalformedError(f"cannot read {path}: {e.strerror}") from None
    lines = parse_sorite(text)
    if not lines:
        raise MalformedError(f"{path} contains no premises")
    order = Universe.of(args.universe).terms if args.universe else ()
    return Sorite.of([x.statement for x in lines], order)


def cmd_sorite(args, out: _Output) -> int:
    s = _read_sorite(args.file, args)
    payload = {"universe": list(s.universe.terms),
               "premises": [render(x) for x in s.premises]}
    lines = []
    if args.trace:
        t = substitution_trace(s, parse_product(args.trace))
        lines.append(t.text())
        if not t.succeeded:
            lines.append(f"stuck at {t.product()}")
        payload["trace"] = {"start": product_text(t.start), "final": t.product(),
                            "premises_used": t.order, "succeeded": t.succeeded,
                            "steps": [product_text(lits) for _, lits in t.steps]}
    if args.eliminate:
        e = eliminated_lc(s, unrestricted=args.unrestricted)
        lines.extend(e.equations() or ["no elimination over the retinends"])
        payload["retinends"] = sorted(map(str, e.retinends))
        payload["eliminated"] = e.equations()
    if not args.trace and not args.eliminate:
        r = solve(s)
        if not r.consistent:
            lines.append(f"inconsistent: premise {r.offending + 1} "
                         f"({render(s.premises[r.offending])}) is emptied by the others")
        else:
            lines.extend(c.text() for c in (r.conclusions if args.all else r.lcs))
            if not r.conclusions:
                lines.append("no conclusion")
        shown = r.conclusions if args.all else r.lcs
        payload.update(consistent=r.consistent,
                       offending=None if r.offending is None else r.offending + 1,
                       conclusions=[_conclusion_json(c) for c in shown])
    out.emit(lines, payload)
    return 0


def cmd_enumerate(args, out: _Output) -> int:
    pcps = enumerate_all(positive_only=args.positive_only)
    types = [classify(q) for q in pcps]
    if args.histogram:
        hist = Counter(types)
        lines = [f"{t}: {hist[t]}" for t in PcpType]
        lines.append(f"total: {len(pcps)}")
    else:
        lines = [f"{q.code:<6}{t!s:<10}{mood_name(q)}" for q, t in zip(pcps, types)]
    out.emit(lines, {"count": len(pcps),
                     "histogram": {t.value: types.count(t) for t in PcpType},
                     "pcps": [{"code": q.code, "type": t.value, "mood": str(mood_name(q))}
                              for q, t in zip(pcps, types)]})
    return 0


def cmd_audit(args, out: _Output) -> int:
    q = _pcp(args)
    t = classify(q)
    if not t.entails:
        raise OutOfDomain(f"{q.code} is of {t} and has no conclusion to audit")
    lines, audits = [], []
    for c in derive(q):
        if c.middle_dropped is None:
            continue
        a = rofvca_check(q, c)
        head = str(c.middle_dropped)
        if c.ei_condition is not None:
            head += f" if {c.ei_condition} ≠ ∅"
        if any(x["conclusion"] == head for x in audits):
            continue
        lines.append(head)
        lines.extend("  " + line for line in a.lines())
        audits.append({"conclusion": head, "rules": a.to_json()})
    out.emit(lines, {"pcp": _pcp_json(q), "audits": audits})
    return 0


def cmd_dofa(args, out: _Output) -> int:
    r = rofvs_dofa()
    lines = [f"removed {c:<5} {stage:<15} {rule}: {why}" for c, stage, rule, why in r.removed]
    lines.append(f"candidates ({len(r.candidates)}): {' '.join(r.candidates)}")
    for c, st in r.members.items():
        lines.append(f"member {c:<5} {st}")
    lines.append(f"ei-only ({len(r.ei_only)}): {' '.join(r.ei_only)}")
    out.emit(lines, r.to_json())
    return 0


def cmd_oracle(args, out: _Output) -> int:
    s = _read_sorite(args.file, args)
    u = s.universe
    assumptions = [parse_literal(x) for x in args.assume]
    try:
        target = parse_conclusion(args.conclusion, u)
    except ParseError:
        target = normalize(parse_statement(args.conclusion, sorite=True))
        missing = set(target.terms) - set(u.terms)
        if missing:
            u = Universe(u.terms + tuple(sorted(missing)))
    if args.method == "sample":
        m = sample_countermodel(u, s.premises, assumptions, target, seed=args.seed,
                                samples=args.samples)
        if m is None:
            lines = [f"undecided: no countermodel in {args.samples} samples"]
            payload = {"holds": None, "countermodel": None}
        else:
            lines = [f"fails; countermodel {m}"]
            payload = {"holds": False, "countermodel": m.cell_names()}
    else:
        v = entails(u, s.premises, assumptions, target, method=args.method, cap=args.cap)
        if v.holds:
            lines = ["holds"]
        else:
            lines = [f"fails; countermodel {v.countermodel}"]
        payload = {"holds": v.holds,
                   "countermodel": None if v.holds else v.countermodel.cell_names()}
    payload["conclusion"] = render(target)
    out.emit(lines, payload)
    return 0


def cmd_esc(args, out: _Output) -> int:
    q = _pcp(args)
    esc = [parse_literal(x) for x in args.empty]
    report = esc_compatible(q, derive(q), esc)
    label = ", ".join(f"{x} = ∅" for x in esc) or "no constraint"
    lines = [f"constraints: {label}"]
    lines.extend(f"{v.item}: {'compatible' if v.compatible else 'incompatible'}"
                 for v in report)
    out.emit(lines, {"pcp": _pcp_json(q), "empty": [str(x) for x in esc],
                     "items": [{"item": v.item, "compatible": v.compatible} for v in report]})
    return 0


def build_parser() -> argparse.ArgumentParser:
    def global_flags(parser, suppress):
        # subcommands repeat the flags without defaults so they cannot mask earlier values
        d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
        parser.add_argument("--json", action="store_true", default=d(False),
                            help="machine-readable output")
        parser.add_argument("--universe", default=d(None),
                            help="term order, e.g. SPM or 'boys,girls,toys'")
        parser.add_argument("--seed", type=int, default=d(0), help="seed for the sampling aid")

    ap = argparse.ArgumentParser(prog="categorica",
                                 description="Categorical syllogisms and sorites as set models.")
    global_flags(ap, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    global_flags(common, suppress=True)
    sub = ap.add_subparsers(dest="command", required=True)

    def pcp_command(name, helptext):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("premises", nargs="+", metavar="PREMISE",
                       help="a code such as AE' or two statements, P-premise first")
        return p

    pcp_command("classify", "type, mood name and bound group")
    p = pcp_command("conclude", "precise or classical conclusions")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--precise", dest="mode", action="store_const", const="precise")
    mode.add_argument("--classical", dest="mode", action="store_const", const="classical")
    mode.add_argument("--ei", dest="mode", action="store_const", const="ei")
    p.set_defaults(mode="precise")
    p = pcp_command("reduce", "canonical representative and relabeling")
    p.add_argument("--darii", action="store_true", help="map Disamis-type PCPs to Darii")
    pcp_command("audit", "check the derived conclusions against the rules")
    p = pcp_command("esc", "compatibility with empty-set constraints")
    p.add_argument("--empty", nargs="+", default=[], metavar="LITERAL")

    p = sub.add_parser("sorite", parents=[common], help="solve a sorite file")
    p.add_argument("file")
    p.add_argument("--trace", metavar="PRODUCT", help="substitution trace from e.g. el")
    p.add_argument("--eliminate", action="store_true", help="empty products over retinends")
    p.add_argument("--unrestricted", action="store_true",
                   help="with --eliminate, use every literal")
    p.add_argument("--all", action="store_true", help="include ei conclusions")

    p = sub.add_parser("enumerate", parents=[common], help="the PCP census")
    p.add_argument("--positive-only", action="store_true")
    p.add_argument("--histogram", action="store_true")

    sub.add_parser("dofa", parents=[common], help="rebuild the RofVS domain")

    p = sub.add_parser("oracle", parents=[common], help="semantic entailment check")
    p.add_argument("file", help="premises, one per line")
    p.add_argument("--conclusion", required=True)
    p.add_argument("--assume", nargs="*", default=[], metavar="LITERAL",
                   help="literals assumed nonempty")
    p.add_argument("--method", choices=["auto", "exhaustive", "region", "sample"],
                   default="auto")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--samples", type=int, default=10_000)
    return ap


COMMANDS = {
    "classify": cmd_classify,
    "conclude": cmd_conclude,
    "reduce": cmd_reduce,
    "sorite": cmd_sorite,
    "enumerate": cmd_enumerate,
    "audit": cmd_audit,
    "dofa": cmd_dofa,
    "oracle": cmd_oracle,
    "esc": cmd_esc,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, _Output(args, out))
    except OutOfDomain as e:
        print(f"categorica: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except MalformedError as e:
        print(f"categorica: {e}", file=sys.stderr)
        return EXIT_PARSE
    except CapabilityError as e:
        print(f"categorica: {e}", file=sys.stderr)
        return EXIT_CAPABILITY
    except ValueError as e:
        print(f"categorica: {e}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 when everything checked passes, 1 when a verification fails,
2 for usage errors (bad type or rank, malformed face, refused size).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .cascade import Xi
from .errors import InvalidArgs, TooLarge
from .qpoly import IntPoly
from .rootsys import (
    RootSystem,
    SimpleType,
    build,
    classify_simple,
    classify_subdiagram,
    extended_diagram,
    format_root,
    format_subset,
    format_types,
    is_legal,
)
from .stab import ell_of_set, j_of_weight, make_face
from .tables import TABLES, Table, cascade_rows
from .theorem import VerificationReport, brute_force_lhs, verify_all, verify_identity
from .weyl import brute_force_poincare, poincare

SWEEP_RANK_CAP = 8
BRUTE_RANK_CAP = 6


class UsageError(Exception):
    pass


def _num(c: Fraction) -> int | str:
    return int(c) if c.denominator == 1 else str(c)


def _poly(p: IntPoly) -> list[int]:
    return list(p.coeffs)


def _system(args: argparse.Namespace) -> RootSystem:
    if not is_legal(args.type, args.rank):
        raise UsageError(f"no root system of type {args.type}{args.rank}")
    return build(SimpleType(args.type, args.rank))


def _parse_face(text: str, rank: int) -> frozenset[int]:
    text = text.strip()
    if text in ("", "-", "∅"):
        return frozenset()
    try:
        idx = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"face must be comma-separated simple-root indices, got {text!r}") from None
    bad = [i for i in idx if not 1 <= i <= rank]
    if bad:
        raise UsageError(f"face indices {bad} outside 1..{rank}")
    return frozenset(idx)


def _emit(table: Table, fmt: str) -> None:
    sys.stdout.write(table.render(fmt))
    if fmt == "json":
        sys.stdout.write("\n")


# ---------------------------------------------------------------- subcommands

def cmd_roots(args: argparse.Namespace) -> int:
    rs = _system(args)
    ed = extended_diagram(rs)
    if args.format == "json":
        print(json.dumps({
            "type": rs.stype.family,
            "rank": rs.rank,
            "gram": rs.gram,
            "highest_short": list(rs.highest_short),
            "alpha0_neighbours": ed.neighbours(0),
            "minuscule": rs.minuscule(),
            "positive_roots": [list(r) for r in rs.positive_roots],
        }))
        return 0
    rows = tuple(
        (format_root(r), str(rs.norm(r)), str(sum(r)), "short" if rs.is_short(r) else "long")
        for r in rs.positive_roots
    )
    table = Table(f"{rs.stype}: {len(rows)} positive roots", ("root", "norm", "height", "length"), rows)
    if args.format == "human":
        print(f"highest short root: {format_root(rs.highest_short)} = {rs.to_weight(rs.highest_short)}")
        print(f"alpha_0 linked to: {format_subset(ed.neighbours(0))}")
        print(f"minuscule nodes: {format_subset(rs.minuscule())}")
    _emit(table, args.format)
    return 0


def cmd_cascade(args: argparse.Namespace) -> int:
    rs = _system(args)
    rows = cascade_rows(rs)
    if args.format == "json":
        print(json.dumps({"type": rs.stype.family, "rank": rs.rank, "cascade": rows}, ensure_ascii=False))
        return 0
    table = Table(
        f"cascade of {rs.stype}",
        ("#", "beta", "pred", "xi (roots)", "xi (weights)", "dominant", "supp*"),
        tuple(
            (
                str(r["index"]),
                r["beta_str"],
                "-" if r["predecessor"] is None else str(r["predecessor"]),
                format_root(r["xi_root"]),
                r["xi_str"],
                "yes" if r["dominant"] else "no",
                format_subset(r["supp_star"]),
            )
            for r in rows
        ),
    )
    _emit(table, args.format)
    return 0


def cmd_xi(args: argparse.Namespace) -> int:
    rs = _system(args)
    ed = extended_diagram(rs)
    out = []
    for e in Xi(rs):
        J = j_of_weight(rs, e.xi)
        out.append({
            "xi": [_num(c) for c in e.xi.coords],
            "xi_str": str(e.xi),
            "supp_star": sorted(e.supp_star),
            "J": format_types(classify_simple(rs, J)),
            "J0": format_types(classify_subdiagram(ed, J | {0})),
            "ell": ell_of_set(rs, J),
        })
    if args.format == "json":
        print(json.dumps({"type": rs.stype.family, "rank": rs.rank, "xi": out}, ensure_ascii=False))
        return 0
    table = Table(
        f"Xi of {rs.stype}",
        ("xi", "supp*", "J", "J+alpha0", "ell"),
        tuple((d["xi_str"], format_subset(d["supp_star"]), d["J"], d["J0"], str(d["ell"])) for d in out),
    )
    _emit(table, args.format)
    return 0


def report_json(rep: VerificationReport, brute: IntPoly | None = None) -> dict:
    d = {
        "type": rep.rs.stype.family,
        "rank": rep.rs.rank,
        "face": sorted(rep.face.S),
        "lhs": _poly(rep.lhs),
        "rhs": _poly(rep.rhs),
        "xi_lambda": [
            {"xi": [_num(c) for c in t.entry.xi.coords], "ell": t.ell, "quotient": _poly(t.quotient)}
            for t in rep.terms
        ],
        "pass": rep.ok and (brute is None or brute == rep.lhs),
    }
    if brute is not None:
        d["lhs_bruteforce"] = _poly(brute)
    return d


def _set(s: frozenset[int]) -> str:
    return "{" + format_subset(s) + "}" if s else "∅"


def _report_line(rep: VerificationReport, brute: IntPoly | None) -> str:
    ok = rep.ok and (brute is None or brute == rep.lhs)
    terms = ", ".join(f"{t.entry.xi} (ell={t.ell})" for t in rep.terms)
    line = (
        f"{rep.rs.stype} S={_set(rep.face.S)} lambda={rep.face.lam}: "
        f"lhs = {rep.lhs} | rhs = {rep.rhs} | Xi = [{terms}]"
    )
    if brute is not None:
        line += f" | brute force {'agrees' if brute == rep.lhs else 'DISAGREES: ' + str(brute)}"
    return f"{'PASS' if ok else 'FAIL'}  {line}"


def cmd_verify(args: argparse.Namespace) -> int:
    rs = _system(args)
    if (args.face is None) == (not args.all):
        raise UsageError("give exactly one of --face or --all")
    if args.all and rs.rank > SWEEP_RANK_CAP and not args.force:
        raise UsageError(f"sweeps above rank {SWEEP_RANK_CAP} need --force")
    if args.bruteforce and rs.rank > BRUTE_RANK_CAP and not args.force:
        raise UsageError(f"brute force above rank {BRUTE_RANK_CAP} needs --force")
    if args.all:
        reports = verify_all(rs)
    else:
        reports = [verify_identity(rs, make_face(rs, _parse_face(args.face, rs.rank)))]
    brutes = [brute_force_lhs(rs, r.face) if args.bruteforce else None for r in reports]
    dicts = [report_json(r, b) for r, b in zip(reports, brutes)]
    all_ok = all(d["pass"] for d in dicts)
    if args.format == "json":
        print(json.dumps(dicts if args.all else dicts[0]))
    elif args.format == "tsv":
        print("type\trank\tface\tlhs\trhs\txi_lambda\tpass")
        for r, d in zip(reports, dicts):
            xis = ";".join(str(t.entry.xi) for t in r.terms)
            print(f"{r.rs.stype.family}\t{r.rs.rank}\t{format_subset(r.face.S)}\t{r.lhs}\t{r.rhs}\t{xis}\t{d['pass']}")
    else:
        for r, b in zip(reports, brutes):
            print(_report_line(r, b))
        n_ok = sum(d["pass"] for d in dicts)
        print(f"{rs.stype}: {n_ok}/{len(dicts)} faces pass")
    return 0 if all_ok else 1


def cmd_tables(args: argparse.Namespace) -> int:
    _emit(TABLES[args.which](args.max_rank), args.format)
    return 0


def cmd_bruteforce_check(args: argparse.Namespace) -> int:
    rs = _system(args)
    if rs.rank > BRUTE_RANK_CAP and not args.force:
        raise UsageError(f"brute force above rank {BRUTE_RANK_CAP} needs --force")
    formula = poincare([rs.stype])
    brute = brute_force_poincare(rs, rs.simple)
    ok = brute == formula
    if args.format == "json":
        print(json.dumps({
            "type": rs.stype.family, "rank": rs.rank,
            "formula": _poly(formula), "bruteforce": _poly(brute), "order": brute(1), "pass": ok,
        }))
    else:
        print(f"{'PASS' if ok else 'FAIL'}  {rs.stype}: |W| = {brute(1)}, enumeration {'matches' if ok else 'differs from'} the exponent product")
    return 0 if ok else 1


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="poincare-cascade",
        description="Root systems, short-root cascades and stabiliser Poincare polynomials.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def system_cmd(name: str, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--type", required=True, choices=list("ABCDEFG"))
        p.add_argument("--rank", required=True, type=int)
        p.add_argument("--format", choices=["human", "json", "tsv"], default="human")
        return p

    system_cmd("roots", "list positive roots and extended-diagram data").set_defaults(func=cmd_roots)
    system_cmd("cascade", "dump the short-root cascade with xi and supp*").set_defaults(func=cmd_cascade)
    system_cmd("xi", "list the dominant cascade weights with ell").set_defaults(func=cmd_xi)

    p = system_cmd("verify", "check the stabiliser factorisation on faces of the affine wall")
    p.add_argument("--face", help="comma-separated simple roots fixing lambda (empty string for none)")
    p.add_argument("--all", action="store_true", help="every proper subset of the simple roots")
    p.add_argument("--bruteforce", action="store_true", help="also recompute the left side by group enumeration")
    p.add_argument("--force", action="store_true", help="lift the rank caps")
    p.set_defaults(func=cmd_verify)

    p = system_cmd("bruteforce-check", "compare enumeration of W with the exponent formula")
    p.add_argument("--force", action="store_true", help="lift the rank cap")
    p.set_defaults(func=cmd_bruteforce_check)

    p = sub.add_parser("tables", help="regenerate the reference tables")
    p.add_argument("--which", required=True, choices=list(TABLES))
    p.add_argument("--format", choices=["human", "json", "tsv"], default="human")
    p.add_argument("--max-rank", type=int, default=SWEEP_RANK_CAP)
    p.set_defaults(func=cmd_tables)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, InvalidArgs, TooLarge) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

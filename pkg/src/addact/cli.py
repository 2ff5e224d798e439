"""Command line entry point: ``addact <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import acceptance
from .algebra import AlgebraTable, LocalView, element_to_str, hilbert_samuel, is_gorenstein, local_view, socle
from .errors import EXIT_CODES, AddactError, FormatError
from .geometry import implicitize
from .hirzebruch import HDivisor, normalized_spair, sections, twisted_spair
from .isomorphy import decide_monomial_2gen
from .monomial import MonomialQuotient, to_algebra_table
from .presentation import verify_allrelations
from .spair import SPair, parametrize_orbit


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False)


def load_document(path: str) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"{path}: cannot read ({exc.strerror})") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise FormatError(f"{path}:1:1: expected a JSON object")
    return doc


def load_algebra(path: str) -> LocalView:
    doc = load_document(path)
    if "vars" in doc:
        table = to_algebra_table(MonomialQuotient.from_dict(doc))
    else:
        table = AlgebraTable.from_dict(doc)
    return local_view(table)


def cmd_sections(args) -> int:
    basis = sections(HDivisor(args.n, args.a, args.b))
    if args.json:
        print(_dump(basis.to_dict()))
        return 0
    print(f"sections of {args.a}*E_inf + {args.b}*F_0 on Sigma_{args.n}")
    print(f"{'k':>4} {'m':>4}  monomial")
    for (k, m), label in zip(basis.monomials, basis.labels()):
        print(f"{k:>4} {m:>4}  {label}")
    print(f"count: {len(basis)}")
    return 0


def cmd_spair(args) -> int:
    build = normalized_spair if args.variant == "normalized" else twisted_spair
    p = build(args.n, args.a, args.b)
    doc = p.to_dict()
    if args.output:
        Path(args.output).write_text(_dump(doc) + "\n")
    if args.json or not args.output:
        if args.json:
            print(_dump(doc))
        else:
            print(f"{args.variant} S-pair for (n, a, b) = ({args.n}, {args.a}, {args.b})")
            print(f"dim: {p.dim}")
            print(f"basis: {', '.join(p.table.basis_labels)}")
            print(f"Hilbert-Samuel: {list(hilbert_samuel(p.algebra))}")
            print(f"U: {', '.join(element_to_str(p.table, u) for u in p.u_basis)}")
    return 0


def cmd_algebra(args) -> int:
    v = load_algebra(args.file)
    if args.query == "hs":
        value = list(hilbert_samuel(v))
        text = "(" + ", ".join(map(str, value)) + ")"
    elif args.query == "socle":
        s = socle(v)
        value = {"dim": s.dim, "basis": [element_to_str(v.algebra, b) for b in s.basis]}
        text = f"dim {s.dim}: " + ", ".join(value["basis"])
    else:
        value = is_gorenstein(v)
        text = "gorenstein" if value else "not gorenstein"
    print(_dump({args.query: value}) if args.json else text)
    return 0


def cmd_relations(args) -> int:
    print(_dump(verify_allrelations(args.a, args.b).to_dict()))
    return 0


def cmd_implicitize(args) -> int:
    p = SPair.from_dict(load_document(args.file))
    orbit = parametrize_orbit(p)
    space = implicitize(orbit, args.degree)
    doc = {"degree": args.degree, "num_coords": space.num_coords, "dim": space.dim,
           "orbit": orbit.format(), "forms": space.format()}
    if args.json:
        print(_dump(doc))
    else:
        print(f"orbit: ({', '.join(doc['orbit'])})")
        print(f"degree-{args.degree} forms vanishing on the orbit: {space.dim}")
        for f in doc["forms"]:
            print(f"  {f}")
    return 0


def cmd_monomiality(args) -> int:
    verdict = decide_monomial_2gen(load_algebra(args.file))
    print(_dump(verdict.to_dict()))
    return 0


def cmd_verify_paper(args) -> int:
    keys = args.filter or None
    if keys:
        unknown = [k for k in keys if k not in acceptance.CRITERIA]
        if unknown:
            raise FormatError(f"unknown criterion {unknown[0]!r}; choose from {', '.join(acceptance.CRITERIA)}")
    results = acceptance.run(keys)
    if args.json:
        print(_dump({"passed": all(r.passed for r in results), "criteria": [r.to_dict() for r in results]}))
    else:
        for r in results:
            print(r.line())
            for f in r.failures[:5]:
                print(f"    {f}")
        print(f"{sum(r.passed for r in results)}/{len(results)} criteria passed")
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    epilog = "exit codes:\n" + "\n".join(f"  {k:>2}  {v}" for k, v in EXIT_CODES.items())
    parser = argparse.ArgumentParser(
        prog="addact",
        description="Exact computations with S-pairs, Hirzebruch sections and additive actions.",
        epilog=epilog,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sections", help="global sections of a*E_inf + b*F_0")
    for name in ("n", "a", "b"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sections)

    p = sub.add_parser("spair", help="normalized or twisted S-pair of an ample divisor")
    for name in ("n", "a", "b"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--variant", choices=("normalized", "twisted"), required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output", help="write the S-pair document to this file")
    p.set_defaults(func=cmd_spair)

    p = sub.add_parser("algebra", help="invariants of an algebra or S-pair file")
    p.add_argument("query", choices=("hs", "socle", "gorenstein"))
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_algebra)

    p = sub.add_parser("relations", help="relation ideal report for the n = 1 twisted operators")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("implicitize", help="forms of a fixed degree vanishing on an S-pair orbit")
    p.add_argument("file")
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_implicitize)

    p = sub.add_parser("monomiality", help="decide whether a 2-generated algebra is monomial")
    p.add_argument("file")
    p.set_defaults(func=cmd_monomiality)

    p = sub.add_parser("verify-paper", help="run the reproduction suite")
    p.add_argument("--filter", action="append", metavar="KEY",
                   help=f"criterion key, repeatable ({', '.join(acceptance.CRITERIA)})")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except AddactError as exc:
        print(f"addact: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"addact: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

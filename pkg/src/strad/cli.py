"""Command line interface: ``strad <command> [options]``.

Exit status is 0 when every requested check passes, 1 for a failed check or a
domain error (non-string algebra, infinite type, unknown string) and 2 for
usage errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .artheory import ar_quiver
from .fields import QQ, parse_field
from .quiver import (
    InfiniteDimensional,
    ParseError,
    build_a_nm,
    is_string_algebra,
    parse_presentation,
)
from .radical import RadicalTable, ZeroMorphism
from .repmod import NotIndecomposable, string_module
from .strings import InfiniteType, find_bands, enumerate_strings, parse_string
from .verify import (
    VerificationFailed,
    build_sectional_chain,
    depth_or_none,
    evaluate_expression,
    igusa_todorov_check,
    verify_grid,
    verify_lemma_s2p1,
)

DOMAIN_ERRORS = (
    InfiniteType,
    InfiniteDimensional,
    ParseError,
    NotIndecomposable,
    VerificationFailed,
    ZeroMorphism,
    KeyError,
    ValueError,
)


class UsageError(Exception):
    pass


def _pair(text: str) -> tuple[int, int]:
    try:
        n, m = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected n,m, got {text!r}") from None
    return n, m


def _range(text: str) -> list[int]:
    lo, _, hi = text.partition(":")
    lo, hi = int(lo), int(hi or lo)
    if hi < lo:
        raise ValueError
    return list(range(lo, hi + 1))


def _grid(text: str) -> list[tuple[int, int]]:
    try:
        ns, ms = text.split(",")
        return [(n, m) for n in _range(ns) for m in _range(ms)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected nmin:nmax,mmin:mmax, got {text!r}") from None


def _field(text: str):
    try:
        return parse_field(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--family", type=_pair, metavar="N,M", help="use the built-in algebra A(n,m)")
    src.add_argument("--input", type=Path, metavar="FILE", help="read a presentation file")
    common.add_argument("--field", type=_field, metavar="q|fp:P", help="ground field (default q)")
    common.add_argument("--threads", type=int, default=1, metavar="K")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="strad", description="String algebras, radical depth and AR theory.")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    sub.add_parser("validate", parents=[common], help="check the string algebra axioms")
    sub.add_parser("strings", parents=[common], help="list canonical strings")
    sub.add_parser("bands", parents=[common], help="list bands")
    q = sub.add_parser("module", parents=[common], help="print the string module M(C)")
    q.add_argument("string")
    q = sub.add_parser("hom", parents=[common], help="Hom and radical dimensions between string modules")
    q.add_argument("source")
    q.add_argument("target")
    q = sub.add_parser("depth", parents=[common], help="radical depth of a chain-map expression")
    q.add_argument("expr")
    q = sub.add_parser("ar-quiver", parents=[common], help="AR quiver summary and DOT export")
    q.add_argument("--dot", type=Path, metavar="FILE")
    for name, help_ in (("verify-lemma1", "certify 0 -> S(2) -> P(1) -> tau^-1 S(2) -> 0"),
                        ("verify-main", "verify the exact depth n+m+3"),
                        ("it-check", "composite depth along the sectional chain")):
        q = sub.add_parser(name, parents=[common], help=help_)
        q.add_argument("--n", type=int)
        q.add_argument("--m", type=int)
        q.add_argument("--grid", type=_grid, metavar="NMIN:NMAX,MMIN:MMAX")
        q.add_argument("--report", type=Path, metavar="FILE")
    return p


def _presentation(args):
    if args.family is not None:
        pres = build_a_nm(*args.family)
    elif args.input is not None:
        pres = parse_presentation(args.input.read_text())
    else:
        raise UsageError("one of --family or --input is required")
    if args.field is not None:
        pres = pres.with_field(args.field)
    return pres


def _points(args) -> list[tuple[int, int]]:
    if args.grid is not None:
        return args.grid
    if args.n is not None or args.m is not None:
        if args.n is None or args.m is None:
            raise UsageError("--n and --m go together")
        return [(args.n, args.m)]
    if args.family is not None:
        return [args.family]
    raise UsageError("give --n/--m, --family or --grid")


def _checked_table(pres) -> RadicalTable:
    check = is_string_algebra(pres)
    if not check:
        raise ValueError("not a string algebra: " + "; ".join(v.witness for v in check.violations))
    return RadicalTable(pres)


def cmd_validate(args, out) -> int:
    pres = _presentation(args)
    check = is_string_algebra(pres)
    q = pres.quiver
    out.write(f"{q.name}: {len(q.vertices)} vertices, {len(q.arrows)} arrows, {len(pres.relations)} relations\n")
    if check:
        out.write("string algebra: yes\n")
        return 0
    out.write("string algebra: no\n")
    for v in check.violations:
        out.write(f"  condition {v.condition}: {v.witness}\n")
    return 1


def cmd_strings(args, out) -> int:
    pres = _presentation(args)
    strings = enumerate_strings(pres)
    for s in strings:
        dv = ",".join(str(d) for d in string_module(pres, s).dimension_vector())
        out.write(f"{dv}  {s.render()}\n")
    out.write(f"{len(strings)} strings\n")
    return 0


def cmd_bands(args, out) -> int:
    bands = find_bands(_presentation(args))
    for b in bands:
        out.write(b.render() + "\n")
    out.write(f"{len(bands)} bands\n")
    return 0


def cmd_module(args, out) -> int:
    pres = _presentation(args)
    out.write(string_module(pres, parse_string(pres, args.string)).dump() + "\n")
    return 0


def cmd_hom(args, out) -> int:
    table = _checked_table(_presentation(args))
    x, y = table.index.index_of(args.source), table.index.index_of(args.target)
    out.write(f"dim Hom = {table.hom(x, y).dim}\n")
    t = 1
    while True:
        d = table.level_dim(t, x, y)
        out.write(f"dim rad^{t} = {d}\n")
        if d == 0:
            break
        t += 1
    out.write(f"irreducible arrows = {table.arrow_multiplicity(x, y)}\n")
    return 0


def _family_only(args) -> tuple[int, int]:
    if args.family is None:
        raise UsageError("this command needs --family n,m")
    return args.family


def cmd_depth(args, out) -> int:
    n, m = _family_only(args)
    chain = build_sectional_chain(n, m, args.field or QQ)
    f = evaluate_expression(chain, args.expr)
    d = depth_or_none(chain.table, f)
    out.write(f"{args.expr}: {f.source.label} -> {f.target.label}\n")
    if d is None:
        out.write("depth=zero morphism\n")
        return 0
    out.write(f"depth={d}\n")
    for t in (d, d + 1):
        out.write(f"in rad^{t}: {'yes' if chain.table.contains(t, f) else 'no'}\n")
    return 0


def cmd_ar_quiver(args, out) -> int:
    graph = ar_quiver(_checked_table(_presentation(args)))
    n_arrows = sum(graph.arrows.values())
    out.write(f"{len(graph.nodes)} indecomposables, {n_arrows} irreducible arrows\n")
    for i, s in enumerate(graph.nodes):
        flags = "".join(f for f, on in (("P", i in graph.projective), ("I", i in graph.injective)) if on)
        succ = ", ".join(graph.label(j) for j in graph.successors(i))
        tinv = graph.label(graph.tau_inv[i]) if i in graph.tau_inv else "-"
        out.write(f"{s.render()} [{flags or '.'}] -> {{{succ}}}; tau^-1 = {tinv}\n")
    if args.dot is not None:
        dot = graph.to_dot()
        if str(args.dot) == "-":
            out.write(dot)
        else:
            args.dot.write_text(dot)
    return 0


def _write_report(args, text: str):
    if args.report is not None:
        args.report.write_text(text)


def cmd_verify_lemma1(args, out) -> int:
    text = []
    ok = True
    for n, m in _points(args):
        try:
            seq = verify_lemma_s2p1(n, m, args.field or QQ)
            text.append(f"A({n},{m}): certified ({seq.provenance}) {seq.describe()}")
        except VerificationFailed as exc:
            ok = False
            text.append(f"A({n},{m}): FAIL {exc}")
    body = "\n".join(text) + "\n"
    out.write(body)
    _write_report(args, body)
    return 0 if ok else 1


def cmd_verify_main(args, out) -> int:
    points = _points(args)
    kwargs = {"field": args.field} if args.field is not None else {}
    reports = verify_grid(points, args.threads, **kwargs)
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        d = "zero" if r.depth is None else r.depth
        out.write(f"A({r.n},{r.m}): {status} depth {d} (expected {r.expected})\n")
        for w in r.witnesses:
            out.write(f"  {w}\n")
    _write_report(args, "\n".join(r.to_text() for r in reports))
    return 0 if all(r.passed for r in reports) else 1


def cmd_it_check(args, out) -> int:
    ok = True
    lines = []
    for n, m in _points(args):
        chain = build_sectional_chain(n, m, args.field or QQ)
        good = igusa_todorov_check(chain.table, chain.maps)
        ok &= good
        lines.append(f"A({n},{m}): sectional path of length {len(chain)}: {'PASS' if good else 'FAIL'}")
    body = "\n".join(lines) + "\n"
    out.write(body)
    _write_report(args, body)
    return 0 if ok else 1


COMMANDS = {
    "validate": cmd_validate,
    "strings": cmd_strings,
    "bands": cmd_bands,
    "module": cmd_module,
    "hom": cmd_hom,
    "depth": cmd_depth,
    "ar-quiver": cmd_ar_quiver,
    "verify-lemma1": cmd_verify_lemma1,
    "verify-main": cmd_verify_main,
    "it-check": cmd_it_check,
}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="%(levelname)s %(message)s")
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"strad: error: {exc}", file=sys.stderr)
        return 2
    except DOMAIN_ERRORS as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"strad: {type(exc).__name__}: {msg}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

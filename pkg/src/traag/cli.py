"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 parse or I/O error, 3 domain
precondition violated (unknown generator, zero exponent, no cycle, ...).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import decider, klein_order
from .errors import ParseError, PreconditionError, TraagError
from .mixed_graph import MixedGraph, PolyFreeTower, parse_graph, source_elimination_order
from .words import check_word, eq, format_word, parse_word, reduce, torsion_probe

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3

FORMAT_HELP = """\
graph file format, one declaration per line:
  vertex <name>
  edge <u> <v>     plain edge:    u v = v u
  arrow <u> <v>    oriented edge: v u v^-1 = u^-1 (target v dominates origin u)
  # comment
words: atoms 'x' or 'x^k' separated by spaces, e.g. "a b^2 c^-1"; '1' is the empty word
"""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


class _LoadError(Exception):
    pass


def _load(path: str) -> MixedGraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise _LoadError(f"cannot read {path}: {exc}") from None
    try:
        return parse_graph(text)
    except TraagError as exc:
        raise _LoadError(f"{path}: {exc}") from None


def _word(g: MixedGraph, text: str):
    return check_word(g, parse_word(text))


def _emit(args, payload: dict, text: str | list[str]) -> None:
    if args.json:
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(text if isinstance(text, str) else "\n".join(text))


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_analyze(args) -> int:
    g = _load(args.path)
    c = decider.classify(g, k_max=args.max)
    by_kind = {type(cert): cert for cert in c.certificates}
    parts = []
    tf = f"torsion-free: {_yes(c.torsion_free)}"
    if not c.torsion_free:
        tf += f" ({by_kind[decider.CliqueCycle].describe()})"
    parts.append(tf)
    lo = f"left-orderable: {_yes(c.left_orderable)}"
    if c.left_orderable:
        lo += f" ({by_kind[decider.TowerCert].describe()})"
    else:
        lo += f" ({by_kind[decider.NonOrderabilityChain].describe()})"
    parts.append(lo)
    bo = f"bi-orderable: {_yes(c.bi_orderable)}"
    if not c.bi_orderable:
        bo += f" ({by_kind[decider.OrientedEdgeCert].describe()})"
    parts.append(bo)
    _emit(args, c.to_dict(), "; ".join(parts))
    return EXIT_OK


def cmd_reduce(args) -> int:
    g = _load(args.path)
    w = reduce(g, _word(g, args.word))
    _emit(args, {"word": format_word(w)}, format_word(w))
    return EXIT_OK


def cmd_eq(args) -> int:
    g = _load(args.path)
    result = eq(g, _word(g, args.word1), _word(g, args.word2))
    _emit(args, {"equal": result}, "true" if result else "false")
    return EXIT_OK


def cmd_torsion(args) -> int:
    if args.max < 2:
        raise UsageError("--max must be at least 2")
    g = _load(args.path)
    k = torsion_probe(g, _word(g, args.word), args.max)
    _emit(args, {"order": k, "max": args.max}, "none" if k is None else str(k))
    return EXIT_OK


def cmd_nonorderable(args) -> int:
    g = _load(args.path)
    chain = decider.certify_not_left_orderable(g)
    _emit(args, chain.to_dict(), chain.lines())
    return EXIT_OK


def cmd_tower(args) -> int:
    g = _load(args.path)
    result = source_elimination_order(g)
    if isinstance(result, PolyFreeTower):
        _emit(args, {"tower": list(result.vertices)}, " ".join(result.vertices))
        return EXIT_OK
    payload = {"tower": None, "blocking_cycle": list(result.vertices)}
    _emit(args, payload, f"no source left; blocking oriented cycle: {result}")
    return EXIT_PRECONDITION


def cmd_retraction(args) -> int:
    g = _load(args.path)
    report = decider.check_retraction(g, args.vertex, seed=args.seed)
    payload = {
        "vertex": report.vertex,
        "status": report.status,
        "relators_checked": report.relators_checked,
        "samples_checked": report.samples_checked,
        "offending": None if report.offending is None else format_word(report.offending),
    }
    text = report.status
    if report.offending is not None:
        text += f" (offending word: {format_word(report.offending)})"
    _emit(args, payload, text)
    return EXIT_OK if report.passed else EXIT_PRECONDITION


def _cone(text: str) -> klein_order.Cone:
    try:
        eps, mu = (int(s) for s in text.split(","))
        return klein_order.make_cone(eps, mu)
    except ValueError:
        raise UsageError(f"--cone expects two signs like +1,-1, got {text!r}") from None


def cmd_klein_cmp(args) -> int:
    cone = _cone(args.cone)
    g = _load(args.path)
    ctx = klein_order.klein_context(g, *args.edge)
    x = klein_order.klein_coords(ctx, _word(g, args.word1))
    y = klein_order.klein_coords(ctx, _word(g, args.word2))
    verdict = klein_order.klein_compare(cone, x, y)
    payload = {
        "cone": str(cone),
        "x": {"n": x.n, "m": x.m},
        "y": {"n": y.n, "m": y.m},
        "order": verdict.value,
    }
    _emit(args, payload, verdict.value)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="traag",
        description="Orderability and word problem for twisted right-angled Artin groups.",
        epilog=FORMAT_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("path", help="graph file")
        p.add_argument("--json", action="store_true", help="emit JSON")
        return p

    p = common(sub.add_parser("analyze", help="classify a graph and print certificates"))
    p.add_argument("--max", type=int, default=decider.DEFAULT_K_MAX, help="torsion probe bound")
    p.set_defaults(func=cmd_analyze)

    def add_word_commands(s) -> None:
        p = common(s.add_parser("reduce", help="print a reduced form of a word"))
        p.add_argument("word")
        p.set_defaults(func=cmd_reduce)
        p = common(s.add_parser("eq", help="decide whether two words are equal"))
        p.add_argument("word1")
        p.add_argument("word2")
        p.set_defaults(func=cmd_eq)
        p = common(s.add_parser("torsion", help="least k <= --max with word^k = 1"))
        p.add_argument("word")
        p.add_argument("--max", type=int, default=decider.DEFAULT_K_MAX)
        p.set_defaults(func=cmd_torsion)

    add_word_commands(sub)
    word = sub.add_parser("word", help="word commands (same as the top-level ones)")
    add_word_commands(word.add_subparsers(dest="word_command", required=True, parser_class=_Parser))

    cert = sub.add_parser("certify", help="emit certificates")
    csub = cert.add_subparsers(dest="certify_command", required=True, parser_class=_Parser)
    p = common(csub.add_parser("nonorderable", help="contradiction chain along an oriented cycle"))
    p.set_defaults(func=cmd_nonorderable)
    p = common(csub.add_parser("tower", help="source elimination order, or the blocking cycle"))
    p.set_defaults(func=cmd_tower)
    p = common(csub.add_parser("retraction", help="check that killing a source is a retraction"))
    p.add_argument("vertex")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_retraction)
    p = common(csub.add_parser("klein-cmp", help="compare two words in a Klein bottle subgroup"))
    p.add_argument("--edge", nargs=2, metavar=("ORIGIN", "TARGET"), required=True)
    p.add_argument("--cone", required=True, help="signs for (a, b), e.g. +1,+1 or -1,+1")
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(func=cmd_klein_cmp)
    return parser


def _glue_cone(argv: Sequence[str]) -> list[str]:
    # "--cone -1,+1" would otherwise be read as an unknown option
    out, it = [], iter(argv)
    for a in it:
        if a == "--cone":
            out.append(f"--cone={next(it, '')}")
        else:
            out.append(a)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_cone(argv))
        return args.func(args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except _LoadError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    raise SystemExit(main())

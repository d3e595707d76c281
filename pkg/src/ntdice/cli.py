"""Command-line entry point.

Exit codes: 0 success, 1 a check failed, 2 bad input or arguments.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import textio
from .cycle import build_cycle_set
from .dice import is_balanced, is_non_transitive, probability, realizes, victory_matrix
from .errors import ConstructionError, InvalidInputError
from .graphs import Tournament, complete_directed_cut, is_strong, is_strongly_connectable, is_tournament
from .oracle import enumerate_balanced_triples, mc_estimate
from .tournament import build_strong_tournament_dice, build_tournament_dice

OK, FAILED, BAD_INPUT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(BAD_INPUT, f"{self.prog}: error: {message}\n")


def _emit(text: str, out) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _parse_chord_order(text: str) -> list:
    order = []
    for item in text.split(","):
        winner, sep, loser = item.strip().partition(">")
        if not sep or not winner.strip() or not loser.strip():
            raise InvalidInputError(f"bad chord {item!r}; use winner>loser")
        order.append((winner.strip(), loser.strip()))
    return order


def cmd_cycle(args) -> int:
    if args.dice < 3 or args.sides < 3:
        print("error: --dice and --sides must both be at least 3", file=sys.stderr)
        return BAD_INPUT
    s = build_cycle_set(args.dice, args.sides)
    _emit(textio.format_dice_set(s), args.out)
    print(is_balanced(s))
    return OK


def cmd_tournament(args) -> int:
    g = textio.read_digraph(args.graph)
    if not is_tournament(g):
        print("error: input graph is not a tournament", file=sys.stderr)
        return BAD_INPUT
    t = Tournament.from_digraph(g)
    if args.chord_order:
        if not is_strong(t):
            print("error: --chord-order needs a strong tournament", file=sys.stderr)
            return BAD_INPUT
        built = build_strong_tournament_dice(t, _parse_chord_order(args.chord_order))
    else:
        built = build_tournament_dice(t)
    _emit(textio.format_dice_set(built.dice), args.out)
    for die, vertex in built.mapping.items():
        print(f"{die} -> {vertex}")
    report = realizes(built.dice, t, built.mapping)
    print(report)
    return OK if report.realized else FAILED


def cmd_verify(args) -> int:
    s = textio.read_dice_set(args.dice)
    print(victory_matrix(s))
    passed = True
    if s.n >= 3:
        p = is_balanced(s)
        nt = is_non_transitive(s)
        print(f"balanced: {p}" if p is not None else "balanced: no")
        print(f"non-transitive: {'yes' if nt else 'no'}")
        if args.graph is None:
            passed = p is not None and nt
    else:
        print("balanced: n/a (fewer than 3 dice)")
        print("non-transitive: n/a (fewer than 3 dice)")
    if args.graph is not None:
        g = textio.read_digraph(args.graph)
        report = realizes(s, g)
        print(report)
        passed = report.realized
    return OK if passed else FAILED


def cmd_simulate(args) -> int:
    if args.rolls < 1:
        print("error: --rolls must be positive", file=sys.stderr)
        return BAD_INPUT
    s = textio.read_dice_set(args.dice)
    if s.n < 2:
        print("error: need at least two dice", file=sys.stderr)
        return BAD_INPUT
    pairs = [(s[i], s[(i + 1) % s.n]) for i in range(s.n if s.n >= 3 else 1)]
    for a, b in pairs:
        est = mc_estimate(a, b, args.rolls, args.seed)
        exact = probability(a, b)
        sigma = est.sigma(float(exact))
        print(
            f"{a.name} vs {b.name}: estimate {est.estimate:.6f} exact {exact} "
            f"({float(exact):.6f}) sigma {sigma:.6f}"
        )
    return OK


def cmd_connectable(args) -> int:
    g = textio.read_digraph(args.graph)
    if is_strongly_connectable(g):
        print("yes")
        return OK
    print("no")
    if len(g.vertices) == 2:
        print("no strong tournament has two vertices")
    else:
        top, rest = complete_directed_cut(g)
        print("cut: {" + ",".join(top) + "} | {" + ",".join(rest) + "}")
    return OK


def cmd_oracle(args) -> int:
    sets = enumerate_balanced_triples(
        args.sides, args.max_results, args.victories, allow_large=args.allow_large
    )
    probs = sorted({is_balanced(s) for s in sets})
    print(f"{len(sets)} balanced non-transitive triple(s) with {args.sides} sides")
    print("victorious probabilities: " + (", ".join(str(p) for p in probs) or "none"))
    if args.out:
        Path(args.out).write_text(textio.format_dice_sets(sets))
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ntdice", description="Build and check non-transitive dice.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("cycle", help="balanced non-transitive set of n m-sided dice")
    p.add_argument("--dice", type=int, required=True)
    p.add_argument("--sides", type=int, required=True)
    p.add_argument("--out", help="dice file to write (default: stdout)")
    p.set_defaults(func=cmd_cycle)

    p = sub.add_parser("tournament", help="dice realizing a tournament")
    p.add_argument("graph")
    p.add_argument("--chord-order", help="non-cycle arcs as 'A>C,B>D,...'")
    p.add_argument("--out", help="dice file to write (default: stdout)")
    p.set_defaults(func=cmd_tournament)

    p = sub.add_parser("verify", help="check a dice file")
    p.add_argument("dice")
    p.add_argument("--graph", help="digraph the dice should realize")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simulate", help="Monte Carlo estimates along the cycle")
    p.add_argument("dice")
    p.add_argument("--rolls", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("connectable", help="test strong connectability")
    p.add_argument("graph")
    p.set_defaults(func=cmd_connectable)

    p = sub.add_parser("oracle", help="enumerate balanced non-transitive triples")
    p.add_argument("--sides", type=int, required=True)
    p.add_argument("--victories", type=int, help="keep only this cycle victory count")
    p.add_argument("--max-results", type=int)
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--out", help="write the sets here, '---' separated")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args)
    except (InvalidInputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except ConstructionError as exc:
        print(f"construction check failed: {exc}", file=sys.stderr)
        return FAILED


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 on success, 1 when ``verify`` finds a violating play (the
lasso is printed on stdout), 2 on bad input or usage.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .formats import FormatError, parse_game, parse_strategy, serialize_game, serialize_report, serialize_strategy
from .game import IllFormedGame, ParityGame, Resilience, StrategyError, validate
from .generator import RandomGameParams, generate_random
from .oracle import DEFAULT_LIMIT, InstanceTooLarge, brute_force_resilience, check_resilient
from .reduction import counter_reduction, format_tag
from .rigged import build_rigged
from .synthesis import synthesize

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_game(path: str) -> ParityGame:
    try:
        game = parse_game(_read_text(path))
    except FormatError as exc:
        raise InputError(f"{path}: {exc}") from None
    problems = validate(game.arena)
    if problems:
        raise InputError(f"{path}: " + "; ".join(problems))
    return game


def _vertex(game: ParityGame, text: str) -> int:
    if text.isdigit():
        v = int(text)
        if v >= game.n:
            raise InputError(f"no vertex {v} (game has {game.n})")
        return v
    try:
        return game.vertex(text)
    except KeyError:
        raise InputError(f"no vertex named {text!r}") from None


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def cmd_solve(args) -> int:
    game = _load_game(args.game)
    trace = (lambda line: print(line, file=sys.stderr)) if args.trace else None
    rmap, strategy = synthesize(game, debug=args.debug, trace=trace)
    _emit(serialize_report(rmap), args.output)
    if args.strategy_out:
        _emit(serialize_strategy(strategy), args.strategy_out)
    return EXIT_OK


def cmd_verify(args) -> int:
    game = _load_game(args.game)
    try:
        strategy = parse_strategy(_read_text(args.strategy))
        strategy.check(game.arena)
        alpha = Resilience.parse(args.alpha)
    except (FormatError, StrategyError, ValueError) as exc:
        raise InputError(str(exc)) from None
    v = _vertex(game, args.start)
    try:
        result = check_resilient(game, strategy, v, alpha)
    except StrategyError as exc:
        raise InputError(str(exc)) from None
    if result is True:
        print(f"ok: strategy is {alpha}-resilient from {v}")
        return EXIT_OK
    print(result)
    return EXIT_VIOLATION


def cmd_oracle(args) -> int:
    game = _load_game(args.game)
    try:
        rmap = brute_force_resilience(game, args.limit)
    except InstanceTooLarge as exc:
        raise InputError(str(exc)) from None
    _emit(serialize_report(rmap), args.output)
    return EXIT_OK


def cmd_rig(args) -> int:
    game = _load_game(args.game)
    _emit(serialize_game(build_rigged(game).game), args.output)
    return EXIT_OK


def cmd_reduce_counter(args) -> int:
    game = _load_game(args.game)
    target = _vertex(game, args.target)
    if args.k < 0:
        raise InputError("--k must be non-negative")
    _, product, tag = counter_reduction(game.arena, target, args.k)
    _emit(serialize_game(product), args.output)
    tag_out = args.tag_out
    if tag_out is None and args.output not in (None, "-"):
        tag_out = args.output + ".tag"
    if tag_out is not None:
        _emit(format_tag(tag), tag_out)
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        params = RandomGameParams(
            vertex_count=args.vertices,
            max_color=args.max_color,
            min_out_degree=args.min_degree,
            max_out_degree=args.max_degree,
            disturbance_probability=args.disturbance_probability,
            owner_balance=args.owner_balance,
            seed=args.seed,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(serialize_game(generate_random(params)), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parity-resilience",
        description="Resilience of parity games with disturbance edges.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="resilience of every vertex and an optimal strategy")
    p.add_argument("game")
    p.add_argument("-o", "--output", help="report file (default stdout)")
    p.add_argument("--strategy-out", help="write the positional strategy here")
    p.add_argument("--trace", action="store_true", help="print the ranking iterations to stderr")
    p.add_argument("--debug", action="store_true", help="cross-check incremental risk updates")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a strategy for α-resilience from a vertex")
    p.add_argument("game")
    p.add_argument("--strategy", required=True)
    p.add_argument("--alpha", required=True, help="non-negative integer, omega or omega+1")
    p.add_argument("--from", dest="start", required=True, help="vertex id or name")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exact resilience by enumerating positional strategies")
    p.add_argument("game")
    p.add_argument("-o", "--output")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("rig", help="print the rigged game")
    p.add_argument("game")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_rig)

    p = sub.add_parser("reduce-counter", help="product game for 'visit target at most k times'")
    p.add_argument("game")
    p.add_argument("--target", required=True, help="vertex id or name")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--tag-out", help="product tag file (default <output>.tag)")
    p.set_defaults(func=cmd_reduce_counter)

    p = sub.add_parser("gen", help="seeded random game")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--max-color", type=int, default=3)
    p.add_argument("--min-degree", type=int, default=1)
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--disturbance-probability", type=float, default=0.2)
    p.add_argument("--owner-balance", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, IllFormedGame) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

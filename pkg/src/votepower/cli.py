"""Command-line front end.

Subcommands: power, banzhaf, influence-poly, sweep, sensitivity, series,
verify.  Results go to stdout (or ``--out``): JSON for single evaluations,
CSV for grid-shaped output.  All output is byte-identical across runs with
the same inputs and seed.

Exit codes: 0 success, 2 input error, 3 degenerate game, 4 capacity
exceeded, 5 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .errors import CapacityError, DegenerateGameError, InputError
from .model import Game, load_game
from .oracle import joint_distribution_enum, influence_first_principles, monte_carlo_influence
from .power import (
    ENUMERATION_CAP,
    classic_banzhaf,
    generalized_banzhaf,
    influence,
    influence_polynomial,
)
from .presets import COHESION_ASSIGNMENTS, DEFAULT_COHESION, PRESETS, preset_doc
from .sweep import ParamRef, SweepAxis, grid_values, sensitivity, structure_series, sweep
from .poly import ONE

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DEGENERATE = 3
EXIT_CAPACITY = 4
EXIT_VERIFY = 5


def _decimal(value, precision: int) -> str:
    return format(float(value), f".{precision}g")


def _load_game_from_args(args) -> Game:
    if (args.game is None) == (args.preset is None):
        raise InputError("exactly one of --game or --preset is required")
    if args.game is not None:
        doc = json.loads(Path(args.game).read_text())
    else:
        doc = preset_doc(
            args.preset,
            p=args.p,
            L=args.L,
            LD=args.LD,
            LR=args.LR,
            pD=args.pD,
            pR=args.pR,
            cohesion=args.cohesion,
        )
    return load_game(doc)


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _emit_json(args, payload) -> None:
    _emit(args, json.dumps(payload, indent=2))


def cmd_power(args) -> int:
    game = _load_game_from_args(args)
    report = generalized_banzhaf(game, strict=args.strict_influence)
    payload = {
        "quota": game.quota,
        "proper_game": report.proper_game,
        "players": [
            {
                "name": name,
                "influence": str(report.influences[name]),
                "influence_decimal": _decimal(report.influences[name], args.precision),
                "power": str(report.powers[name]),
                "power_decimal": _decimal(report.powers[name], args.precision),
            }
            for name in game.names()
        ],
    }
    _emit_json(args, payload)
    return EXIT_OK


def cmd_banzhaf(args) -> int:
    report = classic_banzhaf(args.quota, args.weights, cap=args.cap)
    payload = {
        "quota": args.quota,
        "weights": args.weights,
        "marginal_counts": list(report.marginal_counts),
        "powers": [str(p) for p in report.powers],
        "powers_decimal": [_decimal(p, args.precision) for p in report.powers],
    }
    _emit_json(args, payload)
    return EXIT_OK


def cmd_influence_poly(args) -> int:
    game = _load_game_from_args(args)
    player = game.player(args.player)
    ipoly = influence_polynomial(
        player.structure, game.quota, strict=args.strict_influence
    )
    payload = {
        "player": player.name,
        "quota": game.quota,
        "influence": str(influence(game, player.name, strict=args.strict_influence)),
        "terms": [
            {
                "degree": degree,
                "coefficient": str(coeff),
                "coefficient_decimal": _decimal(coeff, args.precision),
            }
            for degree, coeff in ipoly.items()
        ],
    }
    _emit_json(args, payload)
    return EXIT_OK


def cmd_sweep(args) -> int:
    game = _load_game_from_args(args)
    names = args.param or []
    if not names:
        raise InputError("at least one --param is required")
    starts, stops, steps = args.start or [], args.stop or [], args.steps or []
    if not (len(names) == len(starts) == len(stops) == len(steps)):
        raise InputError("each --param needs matching --from, --to, and --steps")
    axes = [
        SweepAxis(ParamRef.parse(name), grid_values(lo, hi, count))
        for name, lo, hi, count in zip(names, starts, stops, steps)
    ]
    grid = sweep(game, axes, strict=args.strict_influence)
    _emit(args, grid.to_csv(precision=args.precision, exact=args.exact))
    return EXIT_OK


def cmd_sensitivity(args) -> int:
    game = _load_game_from_args(args)
    if args.param:
        params = [ParamRef.parse(name) for name in args.param]
    else:
        # Default to every player's follow-the-leader probability.
        params = [
            ParamRef(p.name, "p") for p in game.players if "p" in p.spec.parameters()
        ]
        if not params:
            raise InputError("this game has no tunable parameters; pass --param")
    report = sensitivity(game, params, h=args.h, strict=args.strict_influence)
    payload = {
        "h": str(report.step),
        "point": {key: str(value) for key, value in report.point},
        "partials": [
            {"power": name, "param": key, "value": _decimal(slope, args.precision)}
            for name, key, slope in report.partials
        ],
    }
    _emit_json(args, payload)
    return EXIT_OK


def cmd_series(args) -> int:
    import csv
    import io

    game = _load_game_from_args(args)
    player = game.player(args.player)
    pmf, infl = structure_series(
        player.structure, game.quota, strict=args.strict_influence
    )
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["degree", "pmf", "influence"])
    for degree in range(max(len(pmf), len(infl))):
        row = [degree]
        for series in (pmf, infl):
            if degree < len(series):
                value = series[degree]
                row.append(str(value) if args.exact else _decimal(value, args.precision))
            else:
                row.append("")
        writer.writerow(row)
    _emit(args, out.getvalue())
    return EXIT_OK


def cmd_verify(args) -> int:
    game = _load_game_from_args(args)
    lines = []
    failures = 0

    def check(ok: bool, label: str) -> None:
        nonlocal failures
        lines.append(f"{'PASS' if ok else 'FAIL'} {label}")
        if not ok:
            failures += 1

    structures = [p.structure for p in game.players]
    enumerated = joint_distribution_enum(structures)
    convolved = ONE
    for s in structures:
        convolved = convolved * s.pmf
    check(enumerated == convolved, "joint vote distribution: enumeration matches polynomial product")

    for player in game.players:
        exact = influence(game, player.name)
        first = influence_first_principles(game, player.name)
        check(first == exact, f"influence {player.name}: first principles equal the polynomial route ({exact})")

    for player in game.players:
        exact = influence(game, player.name)
        est = monte_carlo_influence(game, player.name, args.trials, args.seed)
        gap = abs(est.mean - float(exact))
        ok = gap <= 3 * est.std_error or gap == 0.0
        check(
            ok,
            f"monte carlo {player.name}: estimate {_decimal(est.mean, args.precision)} "
            f"within 3 standard errors of {exact} ({args.trials} trials, seed {args.seed})",
        )

    _emit(args, "\n".join(lines) + "\n")
    return EXIT_VERIFY if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="votepower",
        description="Exact Banzhaf and generalized voting power for probabilistic and team voting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    source = argparse.ArgumentParser(add_help=False)
    group = source.add_argument_group("game source")
    group.add_argument("--game", metavar="PATH", help="game description JSON file")
    group.add_argument("--preset", choices=PRESETS, help="bundled example game")
    group.add_argument("--p", help="parameter p for the parametric presets")
    group.add_argument("--L", help="parameter L for the team presets")
    group.add_argument("--LD", help="senate-113: Democratic leader's wish")
    group.add_argument("--LR", help="senate-113: Republican leader's wish")
    group.add_argument("--pD", help="senate-113: Democratic cohesion override")
    group.add_argument("--pR", help="senate-113: Republican cohesion override")
    group.add_argument(
        "--cohesion",
        choices=sorted(COHESION_ASSIGNMENTS),
        default=None,
        help=f"senate-113: which party gets the 94%% cohesion value (default {DEFAULT_COHESION})",
    )

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--out", metavar="PATH", help="write output to a file instead of stdout")
    output.add_argument(
        "--precision", type=int, default=6, metavar="N",
        help="significant digits for decimal output (default 6)",
    )
    output.add_argument(
        "--exact", action="store_true",
        help="write exact fractions (num/den) instead of decimals in CSV output",
    )
    output.add_argument(
        "--strict-influence", action="store_true",
        help="restrict influence to vote counts below the quota and thresholds above zero",
    )

    p = sub.add_parser("power", parents=[source, output], help="influences and generalized powers")
    p.set_defaults(handler=cmd_power)

    p = sub.add_parser("banzhaf", parents=[output], help="classic index by coalition enumeration")
    p.add_argument("quota", type=int)
    p.add_argument("weights", type=int, nargs="+")
    p.add_argument("--cap", type=int, default=ENUMERATION_CAP, help="player-count enumeration cap")
    p.set_defaults(handler=cmd_banzhaf)

    p = sub.add_parser("influence-poly", parents=[source, output], help="one player's influence polynomial")
    p.add_argument("--player", required=True)
    p.set_defaults(handler=cmd_influence_poly)

    p = sub.add_parser("sweep", parents=[source, output], help="powers over a parameter grid (CSV)")
    p.add_argument("--param", action="append", metavar="PLAYER.FIELD",
                   help="swept parameter, e.g. A.p (repeat for a 2-D grid)")
    p.add_argument("--from", action="append", dest="start", metavar="VALUE")
    p.add_argument("--to", action="append", dest="stop", metavar="VALUE")
    p.add_argument("--steps", action="append", type=int, metavar="N")
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("sensitivity", parents=[source, output],
                       help="central-difference partials of the powers")
    p.add_argument("--param", action="append", metavar="PLAYER.FIELD",
                   help="parameters to vary (default: every player's p)")
    p.add_argument("--h", default="1/1000", help="finite-difference step (default 1/1000)")
    p.set_defaults(handler=cmd_sensitivity)

    p = sub.add_parser("series", parents=[source, output],
                       help="structure and influence coefficient series (CSV)")
    p.add_argument("--player", required=True)
    p.set_defaults(handler=cmd_series)

    p = sub.add_parser("verify", parents=[source, output],
                       help="cross-check the polynomial route against the oracles")
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "precision", 1) < 1:
            raise InputError("precision must be at least 1")
        return args.handler(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except DegenerateGameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (ValueError, OSError) as exc:  # InputError is a ValueError
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())

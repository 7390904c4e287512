"""Command-line front end.

Subcommands: ``hex simulate``, ``hex verify``, ``tree check``,
``forest solve``.  All reports are JSON with sorted keys so identical
invocations produce byte-identical output.  Exit codes: 0 for a computed
verdict or a passing verification, 1 for a containment or verification
failure, 2 for usage and I/O errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import engine, forest, strategy
from .strategy import StrategyParams

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

SCHEMA_VERSION = 1


def _emit(doc: dict, out: str | None) -> None:
    text = json.dumps(doc, sort_keys=True, indent=2)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _default_window(tau: int, fmt: str):
    from .render import RenderWindow

    # covers the whole strategy: spiral legs west and north, rays east
    return RenderWindow(-17 * tau - 18, 4, -3 * (tau + 1) // 2 - 2,
                        12 * tau + 14, format=fmt)


def _containment_json(params: StrategyParams, schedule, report) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "tau_star": params.tau_star,
        "tau": params.tau,
        "bonus_turn": schedule.bonus_turn,
        "final_protection_turn": schedule.final_turn,
        "contained": report.contained,
        "final_turn": report.final_turn,
        "burned_count": report.burned_count,
        "protected_count": report.protected_count,
        "checks": [
            {"name": c.name, "passed": c.passed, "violations": list(c.violations)}
            for c in report.checks
        ],
    }


def cmd_hex_simulate(args) -> int:
    if args.tau_star < 1:
        print("error: --tau-star must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    params = StrategyParams(args.tau_star)
    window = None
    if args.render:
        from . import render as render_mod

        try:
            if args.window:
                window = render_mod.RenderWindow.parse(args.window, format=args.render)
            else:
                window = _default_window(params.tau, args.render)
        except ValueError as err:
            print(f"error: {err}", file=sys.stderr)
            return EXIT_USAGE

    schedule, trace, outcome = strategy.run(params, max_turn=args.max_turn)
    report = strategy.evaluate(params, trace, outcome)
    _emit(_containment_json(params, schedule, report), args.out)

    if args.trace:
        with open(args.trace, "w") as fp:
            engine.write_trace_jsonl(trace, fp)
    if args.schedule:
        Path(args.schedule).write_text(
            json.dumps(strategy.schedule_to_json(params, schedule), sort_keys=True,
                       indent=2) + "\n")
    if window is not None:
        highlight = (strategy.ORIGIN, params.spiral_center)
        paths = render_mod.render_trace(
            trace, window, args.frames_dir, scale=args.scale, highlight=highlight)
        print(f"wrote {len(paths)} frames to {args.frames_dir}", file=sys.stderr)

    if not report.all_passed:
        failed = [c.name for c in report.checks if not c.passed]
        print(f"error: containment/verification failed: {failed or outcome}",
              file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def cmd_hex_verify(args) -> int:
    if args.tau_max < 1:
        print("error: --tau-max must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    all_ok = True
    for tau in range(1, args.tau_max + 1, 2):
        report = strategy.contain(StrategyParams(tau))
        ok = report.all_passed
        all_ok = all_ok and ok
        checks = " ".join(
            f"{c.name}={'pass' if c.passed else 'FAIL'}" for c in report.checks)
        print(f"tau={tau:<3d} contained={'yes' if report.contained else 'NO'} "
              f"turn={report.final_turn} burned={report.burned_count} "
              f"protected={report.protected_count} {checks}")
    print("all checks passed" if all_ok else "FAILURES detected")
    return EXIT_OK if all_ok else EXIT_FAILED


def cmd_tree_check(args) -> int:
    try:
        degrees = tuple(int(x) for x in args.birth.split(","))
        seq = forest.BirthSequence(degrees, tail=args.tail)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    if args.k < 1:
        print("error: --k must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    result = forest.tree_containable(seq, args.k, horizon=args.horizon)
    doc = {
        "schema": SCHEMA_VERSION,
        "birth": list(degrees),
        "tail": args.tail,
        "k": args.k,
        "horizon": args.horizon,
    }
    if isinstance(result, forest.Containable):
        doc["verdict"] = "containable"
        doc["depth"] = result.depth
    elif isinstance(result, forest.ProvablyNotContainable):
        doc["verdict"] = "provably-not-containable"
        doc["depth"] = None
    else:
        doc["verdict"] = "not-containable-within-horizon"
        doc["depth"] = None
    _emit(doc, args.out)
    return EXIT_OK


def cmd_forest_solve(args) -> int:
    try:
        doc = json.loads(Path(args.spec_file).read_text())
        spec = forest.ForestSpec.from_json(doc)
    except (OSError, ValueError) as err:
        print(f"error: cannot load forest spec: {err}", file=sys.stderr)
        return EXIT_USAGE
    result = forest.leaves_savable(
        spec, prune=not args.no_prune, want_witness=args.witness)
    out = {
        "schema": SCHEMA_VERSION,
        "savable": result.savable,
        "witness": [list(p) for p in result.witness] if result.witness else None,
        "states": result.node_count,
        "edges": result.edge_count,
        "early_reject": result.early_reject,
    }
    _emit(out, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="firebreak",
        description="Firefighter containment on the hexagonal grid and "
                    "birth-sequence forests.")
    sub = parser.add_subparsers(dest="command", required=True)

    hex_cmd = sub.add_parser("hex", help="hexagonal-grid strategy commands")
    hex_sub = hex_cmd.add_subparsers(dest="subcommand", required=True)

    sim = hex_sub.add_parser(
        "simulate", help="run and verify the containment schedule for one tau*")
    sim.add_argument("--tau-star", type=int, required=True,
                     help="turn index of the extra placement (turn 2*tau*)")
    sim.add_argument("--render", choices=["svg", "ascii"],
                     help="write one frame per turn")
    sim.add_argument("--window", help="render window as i_min:i_max:j_min:j_max")
    sim.add_argument("--scale", type=float, default=12.0,
                     help="pixels per unit edge length for svg frames")
    sim.add_argument("--frames-dir", default="frames",
                     help="directory for rendered frames")
    sim.add_argument("--out", help="write the JSON report here instead of stdout")
    sim.add_argument("--trace", help="write a JSON-lines trace here")
    sim.add_argument("--schedule", help="write the protection schedule JSON here")
    sim.add_argument("--max-turn", type=int, default=None,
                     help="stop the simulation at this turn (debugging aid)")
    sim.set_defaults(func=cmd_hex_simulate)

    ver = hex_sub.add_parser(
        "verify", help="verify containment and all structural claims for every "
                       "odd tau up to a bound")
    ver.add_argument("--tau-max", type=int, required=True)
    ver.set_defaults(func=cmd_hex_verify)

    tree_cmd = sub.add_parser("tree", help="birth-sequence tree commands")
    tree_sub = tree_cmd.add_subparsers(dest="subcommand", required=True)
    chk = tree_sub.add_parser("check", help="decide k-containability of one tree")
    chk.add_argument("--birth", required=True,
                     help="comma-separated child counts per depth, e.g. 3,1")
    chk.add_argument("--tail", type=int, default=None,
                     help="constant child count continuing the sequence forever")
    chk.add_argument("--k", type=int, required=True, help="firefighters per turn")
    chk.add_argument("--horizon", type=int, default=None,
                     help="maximum depth to scan")
    chk.add_argument("--out", help="write the JSON verdict here instead of stdout")
    chk.set_defaults(func=cmd_tree_check)

    forest_cmd = sub.add_parser("forest", help="birth-sequence forest commands")
    forest_sub = forest_cmd.add_subparsers(dest="subcommand", required=True)
    slv = forest_sub.add_parser(
        "solve", help="decide whether every leaf of a forest can be saved")
    slv.add_argument("spec_file", help='JSON file {"m","n","k","d"}')
    slv.add_argument("--witness", action="store_true",
                     help="reconstruct one winning strategy sequence")
    slv.add_argument("--no-prune", action="store_true",
                     help="disable the viability bound (differential testing)")
    slv.add_argument("--out", help="write the JSON verdict here instead of stdout")
    slv.set_defaults(func=cmd_forest_solve)

    return parser


def _attach_window_value(argv):
    # argparse mistakes "--window -80:10:-40:40" for a missing argument
    # because the value starts with "-"; glue the pair together
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--window" and i + 1 < len(argv):
            out.append(f"--window={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    args = parser.parse_args(_attach_window_value(list(argv)))
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

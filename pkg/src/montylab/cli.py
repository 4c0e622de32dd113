"""Command-line front door: simulate, analyze, optimize, export, serve.

Probabilities are accepted as decimals ("0.25") or rationals ("1/4");
grids additionally accept comma lists and "start..end step s" ranges.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import analytics, oracle, simulation
from .analytics import indifference_point, sweep_records, sweep_rows, sweep_table
from .game import GuestStrategy, ShowmasterStrategy, play_game, derive_seed, write_transcripts
from .probability import InvalidParameter, as_probability


def parse_grid(spec: str) -> list[Fraction]:
    """Parse "1/2", "0,1/4,1/2", or "0..1 step 1/4" into probabilities."""
    spec = spec.strip()
    if ".." in spec:
        head, _, step_text = spec.partition("step")
        if not step_text.strip():
            raise InvalidParameter(f"range grid needs a step, got {spec!r}")
        start_text, _, end_text = head.partition("..")
        start = as_probability(start_text.strip(), "grid start")
        end = as_probability(end_text.strip(), "grid end")
        step = as_probability(step_text.strip(), "grid step")
        if step <= 0 or start > end:
            raise InvalidParameter(f"bad grid range {spec!r}")
        values = []
        value = start
        while value <= end:
            values.append(value)
            value += step
        return values
    return [as_probability(part, "grid value") for part in spec.split(",") if part.strip()]


def _build_showmaster(args) -> ShowmasterStrategy:
    if args.host == "fair":
        return ShowmasterStrategy.fair()
    if args.host == "evil":
        return ShowmasterStrategy.evil()
    if args.host == "moody":
        if args.p is None:
            raise InvalidParameter("--host moody needs --p")
        return ShowmasterStrategy.moody(as_probability(args.p, "p"))
    accuracy = as_probability(args.accuracy, "accuracy") if args.accuracy is not None else 1
    return ShowmasterStrategy.mind_reader(accuracy)


def _build_guest(args) -> GuestStrategy:
    if args.guest == "stay":
        return GuestStrategy.stay()
    if args.guest == "switch":
        return GuestStrategy.switch()
    if args.guest == "mixed":
        if args.q is None:
            raise InvalidParameter("--guest mixed needs --q")
        return GuestStrategy.mixed(as_probability(args.q, "q"))
    if args.detection_risk is None:
        raise InvalidParameter("--guest actor needs --detection-risk")
    return GuestStrategy.actor(as_probability(args.detection_risk, "detection_risk"))


def _add_strategy_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--host", choices=["fair", "evil", "moody", "mind_reader"], required=True)
    parser.add_argument("--p", help="evil frequency for moody hosts (rational or decimal)")
    parser.add_argument("--accuracy", help="read probability for mind readers (default 1)")
    parser.add_argument("--guest", choices=["stay", "switch", "mixed", "actor"], required=True)
    parser.add_argument("--q", help="stay probability for mixed guests")
    parser.add_argument("--detection-risk", dest="detection_risk", help="actor detection risk")


def cmd_simulate(args) -> int:
    showmaster = _build_showmaster(args)
    guest = _build_guest(args)
    report = simulation.run_batch(showmaster, guest, args.n, args.seed, workers=args.workers)

    violations = [("win", report.z_score)]
    exact_mine = oracle.event_probability(
        oracle.enumerate_games(showmaster, guest), oracle.opened_mine
    )
    violations.append(("opened_mine", report.event_z("opened_mine", exact_mine)))

    if args.json:
        record = report.to_record()
        record["opened_mine_exact"] = str(exact_mine)
        record["opened_mine_z"] = violations[1][1]
        print(json.dumps(record))
    else:
        print(simulation.format_report(report))
        print(
            f"  opened_mine rate={report.event_rate('opened_mine'):.6f}  "
            f"exact={exact_mine} ({float(exact_mine):.6f})  z={violations[1][1]:+.3f}"
        )
    worst = max(abs(z) for _, z in violations)
    if worst >= args.z_max:
        print(f"z-threshold violated (|z|={worst:.2f} >= {args.z_max})", file=sys.stderr)
        return 1
    return 0


def cmd_analyze(args) -> int:
    if args.equilibrium:
        point = indifference_point()
        stay, switch = analytics.win_stay(point), analytics.win_switch(point)
        if args.json:
            print(
                json.dumps(
                    {
                        "indifference_point": str(point),
                        "indifference_decimal": float(point),
                        "win_stay": str(stay),
                        "win_switch": str(switch),
                    }
                )
            )
        else:
            print(f"indifference point: p = {point} ({float(point):.6f})")
            print(f"payoffs there: win_stay = {stay}, win_switch = {switch} (gap 0)")
            print("below it switching is better; above it staying is better")
        return 0

    if args.p is None:
        raise InvalidParameter("analyze needs --p (or --equilibrium)")
    p_values = parse_grid(args.p)
    q_values = parse_grid(args.q) if args.q is not None else None
    # Offsets may be negative (a host shaving his announced rate), so
    # parse directly rather than through the [0,1] validator.
    try:
        p_offset = Fraction(args.p_offset) if args.p_offset else Fraction(0)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidParameter(f"bad --p-offset {args.p_offset!r}") from exc
    rows = sweep_rows(p_values, q_values, p_offset=p_offset)
    if args.json:
        for record in sweep_records(rows):
            print(json.dumps(record))
    else:
        columns = ("p", "posterior_evil", "posterior_car") if args.posteriors else None
        print(sweep_table(rows, columns))
    return 0


def cmd_export(args) -> int:
    showmaster = _build_showmaster(args)
    guest = _build_guest(args)
    transcripts = (
        play_game(showmaster, guest, derive_seed(args.seed, index)) for index in range(args.n)
    )
    count = write_transcripts(args.out, transcripts)
    print(f"wrote {count} transcripts to {args.out}")
    return 0


def cmd_serve(args) -> int:
    from .service import serve

    prior = as_probability(args.prior, "prior") if args.prior is not None else Fraction(1, 2)
    serve(addr=args.addr, port=args.port, archive_path=args.archive, prior=prior)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="montylab",
        description="Monty Hall against showmasters you cannot trust: simulate, analyze, play.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="Monte Carlo batch with exact-value comparison")
    _add_strategy_flags(sim)
    sim.add_argument("--n", type=int, required=True, help="replications (>= 1)")
    sim.add_argument("--seed", type=int, default=0, help="master seed (default 0)")
    sim.add_argument("--workers", type=int, default=1)
    sim.add_argument("--z-max", dest="z_max", type=float, default=5.0, help="exit nonzero at |z| >= this")
    sim.add_argument("--json", action="store_true", help="machine-readable report")
    sim.set_defaults(func=cmd_simulate)

    ana = sub.add_parser("analyze", help="exact closed-form tables over a (p, q) grid")
    ana.add_argument("--p", help="grid: '1/2', '0,1/4,1/2', or '0..1 step 1/4'")
    ana.add_argument("--q", help="optional stay-rate grid")
    ana.add_argument("--p-offset", dest="p_offset", help="shift every p by a margin")
    ana.add_argument("--posteriors", action="store_true", help="show only the posterior columns")
    ana.add_argument("--equilibrium", action="store_true", help="report the indifference point")
    ana.add_argument("--json", action="store_true", help="one JSON row per grid cell")
    ana.set_defaults(func=cmd_analyze)

    opt = sub.add_parser("optimize", help="alias of analyze --equilibrium")
    opt.add_argument("--json", action="store_true")
    opt.set_defaults(func=cmd_analyze, equilibrium=True, p=None, q=None, p_offset=None, posteriors=False)

    exp = sub.add_parser("export", help="write a JSONL archive of simulated games")
    _add_strategy_flags(exp)
    exp.add_argument("--n", type=int, required=True)
    exp.add_argument("--seed", type=int, default=0)
    exp.add_argument("--out", required=True, help="output JSONL path")
    exp.set_defaults(func=cmd_export)

    srv = sub.add_parser("serve", help="run the HTTP session service")
    srv.add_argument("--addr", help="listen address (env MONTYLAB_ADDR, default 127.0.0.1)")
    srv.add_argument("--port", type=int, help="listen port (env MONTYLAB_PORT, default 8000)")
    srv.add_argument("--archive", help="JSONL archive path (env MONTYLAB_ARCHIVE)")
    srv.add_argument("--prior", help="default belief prior for sessions (default 1/2)")
    srv.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", None) is not None and args.n < 1:
        parser.error("--n must be at least 1")
    try:
        return args.func(args)
    except InvalidParameter as exc:
        parser.error(str(exc))
        return 2  # unreachable; parser.error exits


if __name__ == "__main__":
    sys.exit(main())

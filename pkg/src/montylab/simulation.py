"""Seeded Monte Carlo batches with automatic comparison to exact values.

A batch of n replications plays n independent games whose seeds come from
the documented counter scheme ``derive_seed(master_seed, i)``; the report
compares the empirical win rate against the enumeration oracle's exact
value via a z-score.  Replications are embarrassingly parallel: partition
the index range however you like, merge the counts, and the result is
identical to a serial run.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from . import oracle
from .game import (
    GuestStrategy,
    HostActionKind,
    Intent,
    Mood,
    Outcome,
    ShowmasterStrategy,
    derive_seed,
    play_game,
)
from .probability import InvalidParameter

EVENT_LABELS = (
    "win",
    "lose",
    "opened_mine",
    "opened_other",
    "mood_evil",
    "mood_fair",
    "decision_stay",
    "decision_switch",
)


@dataclass
class SimulationReport:
    """Result of one batch, with everything needed to audit it."""

    showmaster: ShowmasterStrategy
    guest: GuestStrategy
    replications: int
    master_seed: int
    wins: int
    win_rate: float
    std_error: float
    exact_value: Fraction
    z_score: float
    event_counts: dict[str, int] = field(default_factory=dict)

    def event_rate(self, label: str) -> float:
        return self.event_counts.get(label, 0) / self.replications

    def event_z(self, label: str, exact: Fraction) -> float:
        """z-score of an event frequency against an exact probability."""
        count = self.event_counts.get(label, 0)
        return _z_score(count, self.replications, exact)

    def to_record(self) -> dict:
        return {
            "showmaster": self.showmaster.to_dict(),
            "guest": self.guest.to_dict(),
            "replications": self.replications,
            "master_seed": self.master_seed,
            "wins": self.wins,
            "win_rate": self.win_rate,
            "std_error": self.std_error,
            "exact_value": str(self.exact_value),
            "exact_decimal": float(self.exact_value),
            "z_score": self.z_score,
            "event_counts": dict(self.event_counts),
        }


def _z_score(count: int, n: int, exact: Fraction) -> float:
    rate = count / n
    std_error = math.sqrt(rate * (1 - rate) / n)
    if std_error == 0:
        return 0.0 if Fraction(count, n) == exact else math.inf
    return (rate - float(exact)) / std_error


def _run_range(
    showmaster: ShowmasterStrategy,
    guest: GuestStrategy,
    master_seed: int,
    start: int,
    stop: int,
) -> tuple[int, dict[str, int]]:
    """Play replications [start, stop) and tally. Top-level so it pickles."""
    wins = 0
    mine = 0
    evil = 0
    stays = 0
    decided = 0
    for index in range(start, stop):
        t = play_game(showmaster, guest, derive_seed(master_seed, index))
        if t.outcome is Outcome.WIN:
            wins += 1
        if t.host_action.kind is HostActionKind.OPENED_MINE:
            mine += 1
        if t.sampled_mood is Mood.EVIL:
            evil += 1
        if t.final_decision is not None:
            decided += 1
            if t.final_decision is Intent.STAY:
                stays += 1
    n = stop - start
    counts = {
        "win": wins,
        "lose": n - wins,
        "opened_mine": mine,
        "opened_other": n - mine,
        "mood_evil": evil,
        "mood_fair": n - evil,
        "decision_stay": stays,
        "decision_switch": decided - stays,
    }
    return wins, counts


def run_batch(
    showmaster: ShowmasterStrategy,
    guest: GuestStrategy,
    replications: int,
    master_seed: int,
    *,
    workers: int = 1,
) -> SimulationReport:
    """Play ``replications`` games and report against the oracle's exact value.

    Deterministic for a given (configuration, master_seed): replication i
    always plays with seed ``derive_seed(master_seed, i)``, whether the
    index range is processed serially or split across workers.
    """
    if replications < 1:
        raise InvalidParameter(f"replications must be >= 1, got {replications}")
    if workers < 1:
        raise InvalidParameter(f"workers must be >= 1, got {workers}")

    exact = oracle.win_rate(oracle.enumerate_games(showmaster, guest))

    if workers == 1 or replications < 2 * workers:
        wins, counts = _run_range(showmaster, guest, master_seed, 0, replications)
    else:
        bounds = [replications * i // workers for i in range(workers + 1)]
        wins = 0
        counts = {label: 0 for label in EVENT_LABELS}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_run_range, showmaster, guest, master_seed, lo, hi)
                for lo, hi in zip(bounds, bounds[1:])
            ]
            for future in futures:
                part_wins, part_counts = future.result()
                wins += part_wins
                for label, value in part_counts.items():
                    counts[label] += value

    rate = wins / replications
    return SimulationReport(
        showmaster=showmaster,
        guest=guest,
        replications=replications,
        master_seed=master_seed,
        wins=wins,
        win_rate=rate,
        std_error=math.sqrt(rate * (1 - rate) / replications),
        exact_value=exact,
        z_score=_z_score(wins, replications, exact),
        event_counts=counts,
    )


def sweep(
    replications: int,
    master_seed: int,
    *,
    p_values: Iterable | None = None,
    q_values: Iterable | None = None,
    showmaster: ShowmasterStrategy | None = None,
    guest: GuestStrategy | None = None,
    workers: int = 1,
) -> list[SimulationReport]:
    """One batch per grid cell; cells are independent and individually rerunnable.

    ``p_values`` sweeps moody showmasters, ``q_values`` sweeps mixed
    guests; a fixed strategy fills whichever axis is not swept.  Cell j
    uses master seed ``derive_seed(master_seed, j)``, so any single cell
    can be reproduced without running the others.
    """
    if p_values is not None:
        hosts = [ShowmasterStrategy.moody(p) for p in p_values]
    elif showmaster is not None:
        hosts = [showmaster]
    else:
        raise InvalidParameter("sweep needs p_values or a fixed showmaster")
    if q_values is not None:
        guests = [GuestStrategy.mixed(q) for q in q_values]
    elif guest is not None:
        guests = [guest]
    else:
        raise InvalidParameter("sweep needs q_values or a fixed guest")

    reports = []
    for cell_index, (host, g) in enumerate(product(hosts, guests)):
        cell_seed = derive_seed(master_seed, cell_index)
        reports.append(run_batch(host, g, replications, cell_seed, workers=workers))
    return reports


def format_report(report: SimulationReport) -> str:
    lines = [
        f"host={report.showmaster}  guest={report.guest}  "
        f"n={report.replications}  master_seed={report.master_seed}",
        f"  wins={report.wins}  win_rate={report.win_rate:.6f}  "
        f"exact={report.exact_value} ({float(report.exact_value):.6f})  "
        f"se={report.std_error:.6f}  z={report.z_score:+.3f}",
        "  events: "
        + "  ".join(f"{label}={report.event_counts.get(label, 0)}" for label in EVENT_LABELS),
    ]
    return "\n".join(lines)


def format_reports(reports: Sequence[SimulationReport]) -> str:
    return "\n".join(format_report(report) for report in reports)

"""Closed-form win rates, posteriors, and best-response analysis.

All functions take and return exact rationals.  ``evil_rate`` is the prior
probability that the showmaster plays evil in a given game; ``stay_rate``
is the fraction of guests whose strategy is to keep their initial door.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .probability import as_probability, decimal_str, rational_str

_THIRD = Fraction(1, 3)


class Recommendation(Enum):
    STAY = "stay"
    SWITCH = "switch"
    INDIFFERENT = "indifferent"


def win_stay(evil_rate) -> Fraction:
    """Win probability of always staying: 1/3 no matter how evil the host is."""
    as_probability(evil_rate, "evil_rate")
    return _THIRD


def win_switch(evil_rate) -> Fraction:
    """Win probability of always switching: 2(1-p)/3 for evil rate p."""
    p = as_probability(evil_rate, "evil_rate")
    return 2 * (1 - p) / 3


def win_probability(evil_rate, stay_rate) -> Fraction:
    """Population win rate (2 - 2p - q + 2pq)/3 for evil rate p, stay rate q."""
    p = as_probability(evil_rate, "evil_rate")
    q = as_probability(stay_rate, "stay_rate")
    return (2 - 2 * p - q + 2 * p * q) / 3


def prob_other_door(evil_rate) -> Fraction:
    """Probability the host opens a door other than the pick: (3-2p)/3."""
    p = as_probability(evil_rate, "evil_rate")
    return (3 - 2 * p) / 3


def prob_my_door(evil_rate) -> Fraction:
    """Probability the host opens the guest's own door: 2p/3."""
    p = as_probability(evil_rate, "evil_rate")
    return 2 * p / 3


def posterior_evil_given_other(evil_rate) -> Fraction:
    """P(evil | host opened another door) = p/(3-2p).

    Seeing another door opened rules out most evil branches, so this is
    at most the prior, with equality only at p = 0 and p = 1.
    """
    p = as_probability(evil_rate, "evil_rate")
    return p / (3 - 2 * p)


def posterior_fair_given_other(evil_rate) -> Fraction:
    """Complement of the evil posterior: (3-3p)/(3-2p)."""
    p = as_probability(evil_rate, "evil_rate")
    return (3 - 3 * p) / (3 - 2 * p)


def posterior_evil_given_my() -> Fraction:
    """P(evil | host opened the guest's door) = 1; fair hosts never do this."""
    return Fraction(1)


def posterior_car_given_other(evil_rate) -> Fraction:
    """P(car behind the pick | host opened another door) = 1/(3-2p).

    Grows from 1/3 (always-fair host) to 1 (always-evil host, whose offer
    to switch gives the game away); at p = 1/2 the guest is left with a
    fifty-fifty guess.
    """
    p = as_probability(evil_rate, "evil_rate")
    return 1 / (3 - 2 * p)


def mind_reader_win_rate(stay_rate) -> Fraction:
    """Guest win rate against a perfect mind reader: q/3 (switchers never win)."""
    q = as_probability(stay_rate, "stay_rate")
    return q / 3


def mind_reader_open_rate(stay_rate) -> Fraction:
    """How often a perfect mind reader opens another door: (1+2q)/3.

    Computed under the generous-looking policy of playing fair both for
    stay guests and for switchers who would switch onto a goat; exceeds
    2/3 whenever q > 1/2.
    """
    q = as_probability(stay_rate, "stay_rate")
    return (1 + 2 * q) / 3


def best_response(evil_rate) -> Recommendation:
    """The guest's best pure strategy against a known evil rate."""
    gap = win_switch(evil_rate) - win_stay(evil_rate)
    if gap > 0:
        return Recommendation.SWITCH
    if gap < 0:
        return Recommendation.STAY
    return Recommendation.INDIFFERENT


def bisect_root(
    fn: Callable[[Fraction], Fraction],
    lo: Fraction,
    hi: Fraction,
    steps: int = 60,
) -> tuple[Fraction, Fraction]:
    """Exact-rational bisection of a decreasing function with a sign change.

    Returns the final bracketing interval [lo, hi]; collapses to a point
    when a midpoint evaluates to exactly zero.  Requires fn(lo) >= 0 and
    fn(hi) <= 0.
    """
    f_lo, f_hi = fn(lo), fn(hi)
    if f_lo < 0 or f_hi > 0:
        raise ValueError(f"no sign change on [{lo}, {hi}]")
    if f_lo == 0:
        return lo, lo
    if f_hi == 0:
        return hi, hi
    for _ in range(steps):
        mid = (lo + hi) / 2
        value = fn(mid)
        if value == 0:
            return mid, mid
        if value > 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


def indifference_point(steps: int = 60) -> Fraction:
    """The evil rate at which staying and switching pay the same.

    Found by bisecting the exact payoff gap win_switch(p) - win_stay(p)
    over [0, 1] rather than read off the algebra, then confirmed against
    the closed forms.  The search collapses onto the exact root 1/2.
    """
    gap = lambda p: win_switch(p) - win_stay(p)
    lo, hi = bisect_root(gap, Fraction(0), Fraction(1), steps=steps)
    if lo != hi:
        raise ArithmeticError(f"payoff gap has no exact rational root in [{lo}, {hi}]")
    root = lo
    if win_switch(root) != win_stay(root):
        raise ArithmeticError(f"closed-form check failed at {root}")
    return root


@dataclass(frozen=True)
class SweepRow:
    """One grid cell of exact values; q-dependent columns are None without q."""

    p: Fraction
    q: Fraction | None
    win_stay: Fraction
    win_switch: Fraction
    win: Fraction | None
    posterior_evil: Fraction
    posterior_car: Fraction


def sweep_rows(
    p_values: Iterable,
    q_values: Iterable | None = None,
    p_offset=0,
) -> list[SweepRow]:
    """Exact values over a (p, q) grid.

    ``p_offset`` shifts every evil rate by a fixed margin (clamped to
    [0, 1]) to explore hosts that tweak their moodiness slightly away from
    the announced rate.
    """
    offset = Fraction(p_offset)
    p_grid = [as_probability(p, "p") for p in p_values]
    q_grid = [as_probability(q, "q") for q in q_values] if q_values is not None else [None]
    rows = []
    for p_raw in p_grid:
        p = min(Fraction(1), max(Fraction(0), p_raw + offset))
        for q in q_grid:
            rows.append(
                SweepRow(
                    p=p,
                    q=q,
                    win_stay=win_stay(p),
                    win_switch=win_switch(p),
                    win=win_probability(p, q) if q is not None else None,
                    posterior_evil=posterior_evil_given_other(p),
                    posterior_car=posterior_car_given_other(p),
                )
            )
    return rows


_SWEEP_COLUMNS = ("p", "q", "win_stay", "win_switch", "win", "posterior_evil", "posterior_car")


def sweep_records(rows: Sequence[SweepRow]) -> list[dict]:
    """Machine-readable rows: rationals as "a/b" strings plus 6-place decimals."""
    records = []
    for row in rows:
        record: dict = {}
        for column in _SWEEP_COLUMNS:
            value = getattr(row, column)
            if value is None:
                record[column] = None
                record[column + "_decimal"] = None
            else:
                record[column] = rational_str(value)
                record[column + "_decimal"] = round(float(value), 6)
        records.append(record)
    return records


def sweep_table(rows: Sequence[SweepRow], columns: Sequence[str] | None = None) -> str:
    """Aligned text table; each cell shows the exact value and its decimal."""
    columns = list(columns or _SWEEP_COLUMNS)
    cells = [columns]
    for row in rows:
        rendered = []
        for column in columns:
            value = getattr(row, column)
            if value is None:
                rendered.append("-")
            else:
                rendered.append(f"{rational_str(value)} ({decimal_str(value)})")
        cells.append(rendered)
    widths = [max(len(line[i]) for line in cells) for i in range(len(columns))]
    lines = ["  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip() for line in cells]
    lines.insert(1, "  ".join("-" * width for width in widths))
    return "\n".join(lines)

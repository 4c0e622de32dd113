"""Guest-side Bayesian tracking of the showmaster's mood and the car.

The guest watches a single observable per game -- did the host open my
door or another one? -- and updates two numbers: the probability that the
host is in an evil mood and the probability that the car sits behind the
initially chosen door.  The likelihood table is fixed by the rules: a fair
host always opens another door; an evil host opens the guest's door
whenever it hides a goat (2/3 of the time) and another door otherwise.

Across many archived games the same observable identifies the host's evil
frequency: P(my door opened) = 2p/3, inverted by the method-of-moments
estimator in :func:`estimate_evil_rate`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from statistics import NormalDist
from typing import Iterable

from .analytics import Recommendation
from .game import GameTranscript, HostAction, HostActionKind
from .probability import as_probability

_HALF = Fraction(1, 2)
_THIRD = Fraction(1, 3)


class NoChoiceAvailable(RuntimeError):
    """There is no stay/switch choice to recommend in this state."""


class EmptyArchive(ValueError):
    """An estimator was asked to learn from zero transcripts."""


@dataclass(frozen=True)
class BeliefState:
    """Immutable posterior snapshot; updates return fresh states."""

    prior_evil: Fraction
    posterior_evil: Fraction
    posterior_car_own_door: Fraction
    observations: tuple[HostAction, ...] = ()


def initial_belief(prior_evil) -> BeliefState:
    """Belief before the host has done anything: car is anywhere, mood is prior."""
    prior = as_probability(prior_evil, "prior_evil")
    return BeliefState(prior_evil=prior, posterior_evil=prior, posterior_car_own_door=_THIRD)


def update(state: BeliefState, action: HostAction) -> BeliefState:
    """Condition the current belief on one observed host action.

    An opened guest door is a confession: only evil hosts do that, so the
    evil posterior jumps to 1 (and the revealed goat puts the car
    elsewhere).  An opened other door is weak evidence of fairness: with
    e the current evil belief, the posteriors become e/(3-2e) for the mood
    and 1/(3-2e) for the car.
    """
    e = state.posterior_evil
    if action.kind is HostActionKind.OPENED_MINE:
        posterior_evil = Fraction(1)
        posterior_car = Fraction(0)
    else:
        posterior_evil = e / (3 - 2 * e)
        posterior_car = 1 / (3 - 2 * e)
    return BeliefState(
        prior_evil=state.prior_evil,
        posterior_evil=posterior_evil,
        posterior_car_own_door=posterior_car,
        observations=state.observations + (action,),
    )


def recommend(state: BeliefState) -> Recommendation:
    """Stay or switch, given the tracked car posterior.

    Switch when the car is probably behind the remaining door
    (posterior < 1/2), stay when it is probably behind the pick
    (> 1/2), indifferent at exactly 1/2 -- which mirrors the prior
    threshold p = 1/2.

    Raises:
        NoChoiceAvailable: if no door was opened yet, or the host opened
            the guest's own door (the game is already over).
    """
    if not state.observations:
        raise NoChoiceAvailable("no host action observed yet")
    if any(action.kind is HostActionKind.OPENED_MINE for action in state.observations):
        raise NoChoiceAvailable("the host opened the guest's door; there is nothing to decide")
    car = state.posterior_car_own_door
    if car < _HALF:
        return Recommendation.SWITCH
    if car > _HALF:
        return Recommendation.STAY
    return Recommendation.INDIFFERENT


def trace_records(state: BeliefState) -> list[dict]:
    """Per-observation rows (step, action, posteriors) for export or UIs.

    Rationals are rendered "a/b" with float companions, in the same JSONL
    style as transcripts.
    """
    rows = []
    replay = initial_belief(state.prior_evil)
    for step, action in enumerate(state.observations, start=1):
        replay = update(replay, action)
        row = {
            "step": step,
            "action": action.kind.value,
            "posterior_evil": str(replay.posterior_evil),
            "posterior_evil_decimal": float(replay.posterior_evil),
            "posterior_car": str(replay.posterior_car_own_door),
            "posterior_car_decimal": float(replay.posterior_car_own_door),
        }
        if action.door is not None:
            row["door"] = action.door
        rows.append(row)
    return rows


@dataclass(frozen=True)
class EvilRateEstimate:
    """Point estimate of a host's evil frequency with a 95% interval."""

    point: Fraction
    low: float
    high: float
    opened_mine: int
    games: int

    def covers(self, true_rate) -> bool:
        p = float(Fraction(true_rate))
        return self.low <= p <= self.high


# 97.5% normal quantile for the two-sided 95% Wilson interval.
_Z95 = NormalDist().inv_cdf(0.975)


def estimate_evil_rate(transcripts: Iterable[GameTranscript]) -> EvilRateEstimate:
    """Method-of-moments estimate of p from an archive of transcripts.

    Inverts P(my door opened) = 2p/3: with f the observed frequency of
    the host opening the guest's door, the point estimate is
    min(1, 3f/2), exact.  The interval is a Wilson 95% interval on f,
    scaled by 3/2 and clamped to [0, 1].  Opened-other frequencies are no
    use here: fair hosts generate them too.

    Raises:
        EmptyArchive: on an empty transcript iterable.
    """
    games = 0
    mine = 0
    for transcript in transcripts:
        games += 1
        if transcript.host_action.kind is HostActionKind.OPENED_MINE:
            mine += 1
    if games == 0:
        raise EmptyArchive("cannot estimate an evil rate from zero games")

    point = min(Fraction(1), Fraction(3 * mine, 2 * games))

    f = mine / games
    z2 = _Z95 * _Z95
    denom = 1 + z2 / games
    center = (f + z2 / (2 * games)) / denom
    half = _Z95 * math.sqrt(f * (1 - f) / games + z2 / (4 * games * games)) / denom
    # At the data boundaries the Wilson endpoint is exactly the boundary;
    # don't let rounding noise push it off zero.
    wilson_low = 0.0 if mine == 0 else center - half
    wilson_high = 1.0 if mine == games else center + half
    low = max(0.0, 1.5 * wilson_low)
    high = min(1.0, 1.5 * wilson_high)
    return EvilRateEstimate(point=point, low=low, high=high, opened_mine=mine, games=games)

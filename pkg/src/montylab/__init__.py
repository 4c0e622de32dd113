"""Monty Hall laboratory: engine, exact analytics, oracle, and live play.

The textbook puzzle assumes a showmaster who always opens a goat door and
offers the switch.  This package drops that assumption and makes the
resulting game measurable: a seedable engine plays fair, evil, moody,
and mind-reading showmasters against staying, switching, mixed, and
acting guests; closed-form analytics and a brute-force enumeration
oracle agree on every probability exactly; a Monte Carlo runner checks
the engine against both; and a belief tracker plus a small HTTP service
make the game playable by a human against an opponent-modeling host.
"""

from .analytics import (
    Recommendation,
    best_response,
    indifference_point,
    mind_reader_open_rate,
    mind_reader_win_rate,
    posterior_car_given_other,
    posterior_evil_given_my,
    posterior_evil_given_other,
    win_probability,
    win_stay,
    win_switch,
)
from .belief import (
    BeliefState,
    EmptyArchive,
    EvilRateEstimate,
    NoChoiceAvailable,
    estimate_evil_rate,
    initial_belief,
    recommend,
    update,
)
from .game import (
    DOORS,
    GameTranscript,
    GuestKind,
    GuestStrategy,
    HostAction,
    HostActionKind,
    HostKind,
    Intent,
    Mood,
    Outcome,
    ShowmasterStrategy,
    SplitMix64,
    actor_game,
    derive_seed,
    host_act,
    play_game,
    read_transcripts,
    replay,
    resolve_mind_reader,
    write_transcripts,
)
from .oracle import (
    ConditioningOnNull,
    OutcomeAtom,
    conditional_probability,
    enumerate_games,
    event_probability,
)
from .probability import InvalidParameter, as_probability
from .simulation import SimulationReport, run_batch, sweep

__version__ = "0.1.0"

__all__ = [
    "DOORS",
    "BeliefState",
    "ConditioningOnNull",
    "EmptyArchive",
    "EvilRateEstimate",
    "GameTranscript",
    "GuestKind",
    "GuestStrategy",
    "HostAction",
    "HostActionKind",
    "HostKind",
    "Intent",
    "InvalidParameter",
    "Mood",
    "NoChoiceAvailable",
    "Outcome",
    "OutcomeAtom",
    "Recommendation",
    "ShowmasterStrategy",
    "SimulationReport",
    "SplitMix64",
    "actor_game",
    "as_probability",
    "best_response",
    "conditional_probability",
    "derive_seed",
    "enumerate_games",
    "estimate_evil_rate",
    "event_probability",
    "host_act",
    "indifference_point",
    "initial_belief",
    "mind_reader_open_rate",
    "mind_reader_win_rate",
    "play_game",
    "posterior_car_given_other",
    "posterior_evil_given_my",
    "posterior_evil_given_other",
    "read_transcripts",
    "recommend",
    "replay",
    "resolve_mind_reader",
    "run_batch",
    "sweep",
    "update",
    "win_probability",
    "win_stay",
    "win_switch",
    "write_transcripts",
]

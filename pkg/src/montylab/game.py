"""Single-game engine for Monty Hall against showmasters of varying honesty.

One game runs like this: a car is hidden behind one of three doors, the
guest picks a door, the showmaster reacts according to his mood, and the
guest (if still in the game) stays or switches.  A *fair* showmaster always
opens a different goat door and offers the switch.  An *evil* showmaster
opens the guest's own door the moment it hides a goat, ending the game; he
only offers the switch when the guest has already found the car.  A *moody*
showmaster flips a biased coin between the two each game, and a
*mind-reading* showmaster picks his mood from the guest's signaled
intention.

Everything is driven by one explicit per-game generator (SplitMix64) so
that a transcript is a pure function of (strategies, seed).  Draws happen
in a fixed order, documented on :func:`play_game`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator

from .probability import InvalidParameter, as_probability

DOORS = (1, 2, 3)

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """Tiny, portable 64-bit generator with O(1) seeding.

    The state advances by the 64-bit golden-gamma constant and each output
    is the standard SplitMix64 finalizer of the new state, so any
    implementation of SplitMix64 reproduces the same stream for the same
    seed.  Integer draws use rejection sampling and are therefore exactly
    uniform; a Bernoulli draw with probability 0 or 1 consumes no
    randomness.
    """

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = s = (self._state + _GOLDEN) & _MASK64
        z = ((s ^ (s >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Exactly uniform integer in [0, n)."""
        limit = (1 << 64) // n * n
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n

    def door(self) -> int:
        return self.below(3) + 1

    def chance(self, numerator: int, denominator: int) -> bool:
        """Exact Bernoulli(numerator/denominator); degenerate coins draw nothing."""
        if numerator <= 0:
            return False
        if numerator >= denominator:
            return True
        return self.below(denominator) < numerator

    def coin(self, prob: Fraction) -> bool:
        return self.chance(prob.numerator, prob.denominator)


def derive_seed(master_seed: int, index: int) -> int:
    """Documented counter scheme for sub-seeds.

    ``derive_seed(m, i)`` is the (i+1)-th raw output of ``SplitMix64(m)``,
    computed in O(1).  Simulation replications, sweep cells, and session
    games all derive their per-game seeds this way, so parallel and serial
    execution see identical streams.
    """
    s = (master_seed + (index + 1) * _GOLDEN) & _MASK64
    z = ((s ^ (s >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    return z ^ (z >> 31)


class Mood(Enum):
    FAIR = "fair"
    EVIL = "evil"


class Intent(Enum):
    """A guest's (signaled or final) choice between keeping and moving."""

    STAY = "stay"
    SWITCH = "switch"


class Outcome(Enum):
    WIN = "win"
    LOSE = "lose"


class HostActionKind(Enum):
    OPENED_OTHER = "opened_other"
    OPENED_MINE = "opened_mine"


@dataclass(frozen=True, slots=True)
class HostAction:
    """What the showmaster did after the pick.

    ``door`` carries the opened door for OPENED_OTHER and is None for
    OPENED_MINE (the opened door is then the guest's own pick).
    """

    kind: HostActionKind
    door: int | None = None

    @classmethod
    def other(cls, door: int) -> "HostAction":
        return cls(HostActionKind.OPENED_OTHER, door)

    @classmethod
    def mine(cls) -> "HostAction":
        return cls(HostActionKind.OPENED_MINE, None)

    def to_dict(self) -> dict:
        if self.kind is HostActionKind.OPENED_OTHER:
            return {"kind": self.kind.value, "door": self.door}
        return {"kind": self.kind.value}

    @classmethod
    def from_dict(cls, data: dict) -> "HostAction":
        kind = HostActionKind(data["kind"])
        return cls(kind, data.get("door"))


class HostKind(Enum):
    FAIR = "fair"
    EVIL = "evil"
    MOODY = "moody"
    MIND_READER = "mind_reader"


@dataclass(frozen=True, slots=True)
class ShowmasterStrategy:
    """Tagged showmaster descriptor.

    ``evil_rate`` is the per-game probability of the evil mood (moody
    hosts only); ``accuracy`` is the probability a mind reader actually
    reads the guest's signal (he plays evil when unsure).
    """

    kind: HostKind
    evil_rate: Fraction | None = None
    accuracy: Fraction | None = None

    @classmethod
    def fair(cls) -> "ShowmasterStrategy":
        return cls(HostKind.FAIR)

    @classmethod
    def evil(cls) -> "ShowmasterStrategy":
        return cls(HostKind.EVIL)

    @classmethod
    def moody(cls, evil_rate) -> "ShowmasterStrategy":
        return cls(HostKind.MOODY, evil_rate=as_probability(evil_rate, "evil_rate"))

    @classmethod
    def mind_reader(cls, accuracy=1) -> "ShowmasterStrategy":
        return cls(HostKind.MIND_READER, accuracy=as_probability(accuracy, "accuracy"))

    def __str__(self) -> str:
        if self.kind is HostKind.MOODY:
            return f"moody(p={self.evil_rate})"
        if self.kind is HostKind.MIND_READER:
            return f"mind_reader(accuracy={self.accuracy})"
        return self.kind.value

    def to_dict(self) -> dict:
        data: dict = {"kind": self.kind.value}
        if self.kind is HostKind.MOODY:
            data["p"] = str(self.evil_rate)
        elif self.kind is HostKind.MIND_READER:
            data["accuracy"] = str(self.accuracy)
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "ShowmasterStrategy":
        kind = HostKind(data["kind"])
        if kind is HostKind.MOODY:
            return cls.moody(Fraction(data["p"]))
        if kind is HostKind.MIND_READER:
            return cls.mind_reader(Fraction(data.get("accuracy", 1)))
        return cls(kind)


class GuestKind(Enum):
    STAY = "stay"
    SWITCH = "switch"
    MIXED = "mixed"
    ACTOR = "actor"
    # Interactive play: picks and decisions come from outside the engine.
    HUMAN = "human"


@dataclass(frozen=True, slots=True)
class GuestStrategy:
    """Tagged guest descriptor.

    ``stay_rate`` is the per-game probability that a mixed guest stays;
    ``detection_risk`` is the probability a mind reader sees through an
    actor's bluff.  An actor signals the intent to stay and then switches
    whenever the choice is offered.
    """

    kind: GuestKind
    stay_rate: Fraction | None = None
    detection_risk: Fraction | None = None

    @classmethod
    def stay(cls) -> "GuestStrategy":
        return cls(GuestKind.STAY)

    @classmethod
    def switch(cls) -> "GuestStrategy":
        return cls(GuestKind.SWITCH)

    @classmethod
    def mixed(cls, stay_rate) -> "GuestStrategy":
        return cls(GuestKind.MIXED, stay_rate=as_probability(stay_rate, "stay_rate"))

    @classmethod
    def actor(cls, detection_risk) -> "GuestStrategy":
        return cls(
            GuestKind.ACTOR,
            detection_risk=as_probability(detection_risk, "detection_risk"),
        )

    @classmethod
    def human(cls) -> "GuestStrategy":
        return cls(GuestKind.HUMAN)

    def __str__(self) -> str:
        if self.kind is GuestKind.MIXED:
            return f"mixed(q={self.stay_rate})"
        if self.kind is GuestKind.ACTOR:
            return f"actor(detection_risk={self.detection_risk})"
        return self.kind.value

    def to_dict(self) -> dict:
        data: dict = {"kind": self.kind.value}
        if self.kind is GuestKind.MIXED:
            data["q"] = str(self.stay_rate)
        elif self.kind is GuestKind.ACTOR:
            data["detection_risk"] = str(self.detection_risk)
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "GuestStrategy":
        kind = GuestKind(data["kind"])
        if kind is GuestKind.MIXED:
            return cls.mixed(Fraction(data["q"]))
        if kind is GuestKind.ACTOR:
            return cls.actor(Fraction(data["detection_risk"]))
        return cls(kind)


@dataclass(frozen=True, slots=True)
class GameTranscript:
    """Complete record of one game.

    ``signaled_intent`` is None only for interactive (human) games that the
    showmaster ended by opening the guest's door before any intention was
    expressed; strategy guests always signal.
    """

    seed: int
    showmaster: ShowmasterStrategy
    guest: GuestStrategy
    car_door: int
    initial_pick: int
    sampled_mood: Mood
    signaled_intent: Intent | None
    host_action: HostAction
    final_decision: Intent | None
    outcome: Outcome

    def validate(self) -> None:
        """Raise AssertionError if any transcript invariant is broken."""
        assert self.car_door in DOORS and self.initial_pick in DOORS
        action = self.host_action
        if action.kind is HostActionKind.OPENED_MINE:
            # Only a goat door gets opened, and the game ends immediately.
            assert self.initial_pick != self.car_door
            assert self.sampled_mood is Mood.EVIL
            assert self.final_decision is None
            assert self.outcome is Outcome.LOSE
        else:
            assert action.door in DOORS
            assert action.door != self.initial_pick
            assert action.door != self.car_door
            assert self.final_decision is not None
            if self.final_decision is Intent.STAY:
                won = self.initial_pick == self.car_door
            else:
                won = self.initial_pick != self.car_door
            assert self.outcome is (Outcome.WIN if won else Outcome.LOSE)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "showmaster": self.showmaster.to_dict(),
            "guest": self.guest.to_dict(),
            "car_door": self.car_door,
            "initial_pick": self.initial_pick,
            "sampled_mood": self.sampled_mood.value,
            "signaled_intent": self.signaled_intent.value if self.signaled_intent else None,
            "host_action": self.host_action.to_dict(),
            "final_decision": self.final_decision.value if self.final_decision else None,
            "outcome": self.outcome.value,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "GameTranscript":
        return cls(
            seed=data["seed"],
            showmaster=ShowmasterStrategy.from_dict(data["showmaster"]),
            guest=GuestStrategy.from_dict(data["guest"]),
            car_door=data["car_door"],
            initial_pick=data["initial_pick"],
            sampled_mood=Mood(data["sampled_mood"]),
            signaled_intent=Intent(data["signaled_intent"]) if data["signaled_intent"] else None,
            host_action=HostAction.from_dict(data["host_action"]),
            final_decision=Intent(data["final_decision"]) if data["final_decision"] else None,
            outcome=Outcome(data["outcome"]),
        )


def host_act(mood: Mood, car_door: int, initial_pick: int, rng: SplitMix64) -> HostAction:
    """The showmaster's door action for a fixed mood.

    Fair mood: open a goat door other than the pick, tie-breaking uniformly
    when the guest picked the car (both other doors hide goats).  Evil
    mood: open the guest's own door if it hides a goat, otherwise open
    another door just like the fair host would.
    """
    if mood is Mood.EVIL and initial_pick != car_door:
        return HostAction.mine()
    if initial_pick == car_door:
        goats = [d for d in DOORS if d != car_door]
        return HostAction.other(goats[rng.below(2)])
    # Exactly one door is neither the pick nor the car.
    return HostAction.other(6 - car_door - initial_pick)


def resolve_mind_reader(accuracy: Fraction, signaled_intent: Intent, rng: SplitMix64) -> Mood:
    """Mood of a mind-reading showmaster facing a signaled intention.

    With probability ``accuracy`` he reads the signal: a read "stay" earns
    the fair mood, a read "switch" the evil one.  When unsure he defaults
    to evil, which never costs him a car.  The coin is drawn only for
    0 < accuracy < 1 (degenerate coins consume no randomness).
    """
    if rng.chance(accuracy.numerator, accuracy.denominator):
        return Mood.FAIR if signaled_intent is Intent.STAY else Mood.EVIL
    return Mood.EVIL


def play_game(
    showmaster: ShowmasterStrategy,
    guest: GuestStrategy,
    seed: int,
    *,
    pick: int | None = None,
    decision: Intent | None = None,
) -> GameTranscript:
    """Play one complete game and return its transcript.

    Pure function of its inputs.  Draws from ``SplitMix64(seed)`` happen in
    this fixed order:

    1. car door (uniform on 1..3)
    2. guest's initial pick (uniform; skipped when ``pick`` is given)
    3. guest intent coin (mixed guests only)
    4. showmaster mood coins -- moody: one evil/fair coin; mind reader:
       the actor-detection coin (actor guests only), then the read coin
    5. fair/evil tie-break coin when two goat doors qualify

    Degenerate coins (probability 0 or 1) consume no draws, so e.g.
    ``moody(0)`` produces bit-identical transcripts to ``fair``.

    ``pick`` and ``decision`` replace the guest's own draws; they exist for
    replaying interactive games and are required for ``human`` guests.
    """
    if pick is not None and pick not in DOORS:
        raise InvalidParameter(f"pick must be one of {DOORS}, got {pick!r}")
    seed &= _MASK64
    rng = SplitMix64(seed)

    car_door = rng.door()
    if pick is None:
        if guest.kind is GuestKind.HUMAN:
            raise InvalidParameter("human guests need an explicit pick")
        initial_pick = rng.door()
    else:
        initial_pick = pick

    signaled: Intent | None
    if guest.kind is GuestKind.STAY:
        signaled = Intent.STAY
    elif guest.kind is GuestKind.SWITCH:
        signaled = Intent.SWITCH
    elif guest.kind is GuestKind.MIXED:
        q = guest.stay_rate
        signaled = Intent.STAY if rng.chance(q.numerator, q.denominator) else Intent.SWITCH
    elif guest.kind is GuestKind.ACTOR:
        signaled = Intent.STAY
    else:  # HUMAN: the decision, once actually made, is the only expressed intent.
        signaled = None

    kind = showmaster.kind
    if kind is HostKind.FAIR:
        mood = Mood.FAIR
    elif kind is HostKind.EVIL:
        mood = Mood.EVIL
    elif kind is HostKind.MOODY:
        p = showmaster.evil_rate
        mood = Mood.EVIL if rng.chance(p.numerator, p.denominator) else Mood.FAIR
    else:  # MIND_READER
        if guest.kind is GuestKind.HUMAN:
            raise InvalidParameter("a mind reader needs a signaled intent; human guests are not supported")
        perceived = signaled
        if guest.kind is GuestKind.ACTOR:
            d = guest.detection_risk
            caught = rng.chance(d.numerator, d.denominator)
            # Caught actors are read as the switchers they really are.
            perceived = Intent.SWITCH if caught else Intent.STAY
        mood = resolve_mind_reader(showmaster.accuracy, perceived, rng)

    action = host_act(mood, car_door, initial_pick, rng)

    final: Intent | None
    if action.kind is HostActionKind.OPENED_MINE:
        final = None
        outcome = Outcome.LOSE
    else:
        if guest.kind is GuestKind.HUMAN:
            if decision is None:
                raise InvalidParameter("human guests need an explicit decision")
            final = decision
            signaled = final
        elif guest.kind is GuestKind.ACTOR:
            final = Intent.SWITCH
        else:
            final = signaled
        if final is Intent.STAY:
            outcome = Outcome.WIN if initial_pick == car_door else Outcome.LOSE
        else:
            outcome = Outcome.WIN if initial_pick != car_door else Outcome.LOSE

    return GameTranscript(
        seed=seed,
        showmaster=showmaster,
        guest=guest,
        car_door=car_door,
        initial_pick=initial_pick,
        sampled_mood=mood,
        signaled_intent=signaled,
        host_action=action,
        final_decision=final,
        outcome=outcome,
    )


def actor_game(detection_risk, showmaster: ShowmasterStrategy, seed: int) -> GameTranscript:
    """One game of an acting guest against a mind-reading showmaster.

    The actor signals "stay" and switches when offered the chance.  With
    probability ``detection_risk`` the host sees through the act and plays
    evil; otherwise he believes the signal.  Against a perfect reader the
    long-run win rate is (1 - detection_risk) * 2/3.
    """
    if showmaster.kind is not HostKind.MIND_READER:
        raise InvalidParameter("actor_game expects a mind-reading showmaster")
    return play_game(showmaster, GuestStrategy.actor(detection_risk), seed)


def replay(transcript: GameTranscript) -> GameTranscript:
    """Re-run a recorded game from its seed and recorded guest inputs.

    Strategy guests replay from the seed alone.  Human games replay with
    the recorded pick and decision (overrides skip the corresponding
    draws, so they must only be passed for guests that never drew them).
    """
    if transcript.guest.kind is GuestKind.HUMAN:
        return play_game(
            transcript.showmaster,
            transcript.guest,
            transcript.seed,
            pick=transcript.initial_pick,
            decision=transcript.final_decision,
        )
    return play_game(transcript.showmaster, transcript.guest, transcript.seed)


def write_transcripts(path: str | Path, transcripts: Iterable[GameTranscript], append: bool = False) -> int:
    """Write transcripts as JSONL (one JSON object per line); returns the count."""
    mode = "a" if append else "w"
    count = 0
    with open(path, mode, encoding="utf-8") as fh:
        for transcript in transcripts:
            fh.write(json.dumps(transcript.to_dict()) + "\n")
            count += 1
    return count


def read_transcripts(path: str | Path) -> Iterator[GameTranscript]:
    """Stream transcripts back from a JSONL archive."""
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield GameTranscript.from_dict(json.loads(line))

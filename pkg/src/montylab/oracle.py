"""Brute-force enumeration of the full game tree with exact weights.

Instead of sampling, this module walks every branch of one game -- car
placement, initial pick, guest intent coin, mood coins, host tie-breaks --
and multiplies the exact branch probabilities into a weight per leaf.  The
resulting atom list is the ground truth the closed-form analytics and the
Monte Carlo engine are tested against.

One deliberate difference from the live engine: the enumerated mind reader
is the omniscient version, who plays fair not only for guests read as
stayers but also for switchers whose switch would land on a goat (he can
see the car; the engine's host cannot and plays evil on any read
switcher).  Door actions and outcomes are distributed identically either
way; only the mood label on the read-switcher-with-car branch differs, and
the omniscient convention is what the (1+2q)/3 door-opening rate refers
to.  Caught actors get the evil mood outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .game import (
    DOORS,
    GuestKind,
    GuestStrategy,
    HostAction,
    HostActionKind,
    HostKind,
    Intent,
    Mood,
    Outcome,
    ShowmasterStrategy,
)

Predicate = Callable[["OutcomeAtom"], bool]

_ZERO = Fraction(0)
_ONE = Fraction(1)
_THIRD = Fraction(1, 3)
_HALF = Fraction(1, 2)


class ConditioningOnNull(ZeroDivisionError):
    """Raised when conditioning on an event of probability zero."""


@dataclass(frozen=True)
class OutcomeAtom:
    """One leaf of the game tree: observable transcript fields plus weight."""

    car_door: int
    initial_pick: int
    sampled_mood: Mood
    signaled_intent: Intent
    host_action: HostAction
    final_decision: Intent | None
    outcome: Outcome
    weight: Fraction

    def observable(self) -> tuple:
        return (
            self.car_door,
            self.initial_pick,
            self.sampled_mood,
            self.signaled_intent,
            self.host_action,
            self.final_decision,
            self.outcome,
        )


def _intent_branches(guest: GuestStrategy) -> list[tuple[Intent, Fraction]]:
    if guest.kind is GuestKind.STAY:
        return [(Intent.STAY, _ONE)]
    if guest.kind is GuestKind.SWITCH:
        return [(Intent.SWITCH, _ONE)]
    if guest.kind is GuestKind.MIXED:
        q = guest.stay_rate
        return [(Intent.STAY, q), (Intent.SWITCH, 1 - q)]
    if guest.kind is GuestKind.ACTOR:
        return [(Intent.STAY, _ONE)]
    raise ValueError(f"cannot enumerate guests of kind {guest.kind}")


def _mood_branches(
    showmaster: ShowmasterStrategy,
    guest: GuestStrategy,
    signaled: Intent,
    car_door: int,
    initial_pick: int,
) -> list[tuple[Mood, Fraction]]:
    kind = showmaster.kind
    if kind is HostKind.FAIR:
        return [(Mood.FAIR, _ONE)]
    if kind is HostKind.EVIL:
        return [(Mood.EVIL, _ONE)]
    if kind is HostKind.MOODY:
        p = showmaster.evil_rate
        return [(Mood.EVIL, p), (Mood.FAIR, 1 - p)]
    # Mind reader, omniscient convention.
    a = showmaster.accuracy
    if guest.kind is GuestKind.ACTOR:
        d = guest.detection_risk
        # Caught: evil outright.  Unnoticed: the false "stay" signal is
        # read with probability a (fair), otherwise he is unsure (evil).
        fair = (1 - d) * a
        return [(Mood.FAIR, fair), (Mood.EVIL, 1 - fair)]
    if signaled is Intent.STAY or initial_pick == car_door:
        # Read: fair for stayers and for switchers heading to a goat.
        return [(Mood.FAIR, a), (Mood.EVIL, 1 - a)]
    return [(Mood.EVIL, _ONE)]


def _action_branches(mood: Mood, car_door: int, initial_pick: int) -> list[tuple[HostAction, Fraction]]:
    if mood is Mood.EVIL and initial_pick != car_door:
        return [(HostAction.mine(), _ONE)]
    if initial_pick == car_door:
        goats = [d for d in DOORS if d != car_door]
        return [(HostAction.other(goats[0]), _HALF), (HostAction.other(goats[1]), _HALF)]
    return [(HostAction.other(6 - car_door - initial_pick), _ONE)]


def enumerate_games(showmaster: ShowmasterStrategy, guest: GuestStrategy) -> list[OutcomeAtom]:
    """Exhaustive, mutually exclusive atoms for one configuration.

    Zero-weight branches are pruned; the remaining weights sum to exactly 1.
    """
    atoms: list[OutcomeAtom] = []
    base = _THIRD * _THIRD
    for car_door in DOORS:
        for initial_pick in DOORS:
            for signaled, w_intent in _intent_branches(guest):
                if w_intent == 0:
                    continue
                for mood, w_mood in _mood_branches(showmaster, guest, signaled, car_door, initial_pick):
                    if w_mood == 0:
                        continue
                    for action, w_action in _action_branches(mood, car_door, initial_pick):
                        if action.kind is HostActionKind.OPENED_MINE:
                            final = None
                            outcome = Outcome.LOSE
                        else:
                            final = Intent.SWITCH if guest.kind is GuestKind.ACTOR else signaled
                            if final is Intent.STAY:
                                won = initial_pick == car_door
                            else:
                                won = initial_pick != car_door
                            outcome = Outcome.WIN if won else Outcome.LOSE
                        atoms.append(
                            OutcomeAtom(
                                car_door=car_door,
                                initial_pick=initial_pick,
                                sampled_mood=mood,
                                signaled_intent=signaled,
                                host_action=action,
                                final_decision=final,
                                outcome=outcome,
                                weight=base * w_intent * w_mood * w_action,
                            )
                        )
    return atoms


def event_probability(atoms: Iterable[OutcomeAtom], predicate: Predicate) -> Fraction:
    """Exact probability of an event: sum of weights of matching atoms."""
    return sum((atom.weight for atom in atoms if predicate(atom)), _ZERO)


def conditional_probability(atoms: Sequence[OutcomeAtom], target: Predicate, given: Predicate) -> Fraction:
    """P(target | given), exactly; raises ConditioningOnNull if P(given) = 0."""
    p_given = event_probability(atoms, given)
    if p_given == 0:
        raise ConditioningOnNull("conditioning event has probability zero")
    p_both = event_probability(atoms, lambda atom: target(atom) and given(atom))
    return p_both / p_given


# Common predicates.

def is_win(atom: OutcomeAtom) -> bool:
    return atom.outcome is Outcome.WIN


def opened_mine(atom: OutcomeAtom) -> bool:
    return atom.host_action.kind is HostActionKind.OPENED_MINE


def opened_other(atom: OutcomeAtom) -> bool:
    return atom.host_action.kind is HostActionKind.OPENED_OTHER


def mood_evil(atom: OutcomeAtom) -> bool:
    return atom.sampled_mood is Mood.EVIL


def picked_car(atom: OutcomeAtom) -> bool:
    return atom.initial_pick == atom.car_door


def win_rate(atoms: Iterable[OutcomeAtom]) -> Fraction:
    return event_probability(atoms, is_win)


def distribution(atoms: Iterable[OutcomeAtom]) -> dict[tuple, Fraction]:
    """Collapse atoms to a map from observable tuple to total weight.

    Two configurations are distributionally equivalent exactly when their
    distributions compare equal.
    """
    table: dict[tuple, Fraction] = {}
    for atom in atoms:
        key = atom.observable()
        table[key] = table.get(key, _ZERO) + atom.weight
    return {key: weight for key, weight in table.items() if weight != 0}


def atom_table(atoms: Sequence[OutcomeAtom]) -> str:
    """Aligned text dump of the atom list for auditing."""
    header = ("car", "pick", "mood", "intent", "host_action", "decision", "outcome", "weight")
    lines = [header]
    for atom in atoms:
        action = atom.host_action
        action_text = action.kind.value if action.door is None else f"{action.kind.value}({action.door})"
        lines.append(
            (
                str(atom.car_door),
                str(atom.initial_pick),
                atom.sampled_mood.value,
                atom.signaled_intent.value,
                action_text,
                atom.final_decision.value if atom.final_decision else "-",
                atom.outcome.value,
                str(atom.weight),
            )
        )
    widths = [max(len(line[i]) for line in lines) for i in range(len(header))]
    rendered = ["  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip() for line in lines]
    rendered.insert(1, "  ".join("-" * width for width in widths))
    return "\n".join(rendered)

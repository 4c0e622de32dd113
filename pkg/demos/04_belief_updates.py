"""Belief updates: what one opened door tells you about the host.

You observe a single bit per game: did he open *your* door or an *other*
door?  Your-door is a confession -- only evil hosts do that.  An other
door is mild evidence of fairness, but not enough to outsmart a host who
calibrated his evil frequency to p = 1/2: your car posterior then sits at
exactly fifty-fifty, and the decision problem is a coin flip.
"""

from fractions import Fraction

from montylab import initial_belief, recommend, update
from montylab.belief import trace_records
from montylab.game import HostAction

print("posterior after seeing him open ANOTHER door, by prior p:")
print(f"  {'prior p':10s} {'P(evil | other)':18s} {'P(car | other)':16s} advice")
for p in [Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(2, 3), Fraction(1)]:
    state = update(initial_belief(p), HostAction.other(3))
    print(
        f"  {str(p):10s} {str(state.posterior_evil):18s} "
        f"{str(state.posterior_car_own_door):16s} {recommend(state).value}"
    )

print("\nthe confession case: he opens YOUR door (prior 1/2)")
state = update(initial_belief(Fraction(1, 2)), HostAction.mine())
print(f"  P(evil) = {state.posterior_evil}, P(car behind your door) = {state.posterior_car_own_door}")

print("\na two-observation trace, exported the way the service streams it:")
state = initial_belief(Fraction(1, 2))
state = update(state, HostAction.other(2))
state = update(state, HostAction.other(3))
for row in trace_records(state):
    print(f"  {row}")

"""The evil host: why the "irrational" urge to stay is a defense.

An evil host opens your own door the moment it hides a goat -- instant
loss -- and only offers the switch when you have already found the car,
hoping you walk away from it.  Against him, switching *always* loses;
staying still wins its guaranteed 1/3.
"""

from montylab import GuestStrategy, Outcome, ShowmasterStrategy, play_game
from montylab.oracle import enumerate_games, event_probability, opened_mine, win_rate
from montylab.simulation import run_batch

evil = ShowmasterStrategy.evil()

atoms = enumerate_games(evil, GuestStrategy.switch())
print(f"switch vs evil, exact: P(win) = {win_rate(atoms)}")
print(f"how often he slams your own door open: {event_probability(atoms, opened_mine)}")

losses = sum(
    play_game(evil, GuestStrategy.switch(), seed).outcome is Outcome.LOSE for seed in range(50_000)
)
print(f"switch vs evil, 50,000 games: {losses} losses out of 50,000 (no exceptions)")

report = run_batch(evil, GuestStrategy.stay(), 100_000, master_seed=2)
print(
    f"stay vs evil, 100,000 games: rate {report.win_rate:.4f} "
    f"vs the stay guarantee {report.exact_value} (z = {report.z_score:+.2f})"
)
print("\nhe cannot touch the 1/3 you lock in by being stubborn.")

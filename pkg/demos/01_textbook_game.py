"""The textbook game: a trustworthy host, and why switching wins.

The host always opens a goat door you did not pick and offers a switch.
Staying wins only when your first pick was right (1/3); switching wins
whenever it was wrong (2/3).  We get both numbers three ways: by exact
enumeration, by closed form, and by playing a lot of games.
"""

from montylab import GuestStrategy, ShowmasterStrategy, win_stay, win_switch
from montylab.oracle import enumerate_games, win_rate
from montylab.simulation import run_batch

host = ShowmasterStrategy.fair()

print("exact enumeration of the game tree:")
for guest, label in [(GuestStrategy.stay(), "stay"), (GuestStrategy.switch(), "switch")]:
    atoms = enumerate_games(host, guest)
    print(f"  {label:6s} -> P(win) = {win_rate(atoms)}  ({len(atoms)} outcome atoms)")

print("\nclosed forms at evil-rate 0 (the textbook host):")
print(f"  win_stay(0)   = {win_stay(0)}")
print(f"  win_switch(0) = {win_switch(0)}")

print("\n100,000 seeded games each:")
for guest, label in [(GuestStrategy.stay(), "stay"), (GuestStrategy.switch(), "switch")]:
    report = run_batch(host, guest, 100_000, master_seed=1)
    print(
        f"  {label:6s} -> {report.wins} wins, rate {report.win_rate:.4f}, "
        f"exact {report.exact_value}, z = {report.z_score:+.2f}"
    )

"""Estimating a host's evilness from broadcast archives.

Guests who study recordings of the show can recover the evil frequency p
without ever seeing the host's mood: he opens the guest's own door in
exactly 2p/3 of games, so p-hat = 3f/2 for the observed your-door
frequency f.  This demo builds archives with known p and inverts them.
"""

from fractions import Fraction

from montylab import GuestStrategy, ShowmasterStrategy, estimate_evil_rate
from montylab.game import derive_seed, play_game

guest = GuestStrategy.stay()

print("archives of 20,000 broadcast games each:")
print(f"  {'true p':8s} {'estimate':12s} {'95% interval':22s} covered?")
for index, p in enumerate([Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)]):
    host = ShowmasterStrategy.moody(p)
    archive = (play_game(host, guest, derive_seed(300 + index, i)) for i in range(20_000))
    estimate = estimate_evil_rate(archive)
    print(
        f"  {str(p):8s} {str(estimate.point):12s} "
        f"[{estimate.low:.4f}, {estimate.high:.4f}]    {estimate.covers(p)}"
    )

print("\na 95% interval misses the truth about one archive in twenty; rerun with")
print("other seeds and you will see it happen.")
print("the same estimator feeds on JSONL archives written by `montylab export`.")

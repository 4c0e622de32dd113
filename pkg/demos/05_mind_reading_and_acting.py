"""Mind reading and acting: strategy leaks, and the bluff that exploits them.

A host who can read whether you intend to stay gets a friendly reputation
on the cheap: he opens other doors in (1+2q)/3 of games, more than an
always-evil host, yet pays out only q/3.  The counter is to act: signal
stay, then switch.  Unnoticed, the bluff earns the full 2/3; caught, it is
a guaranteed loss.
"""

from fractions import Fraction

from montylab import GuestStrategy, ShowmasterStrategy, mind_reader_open_rate, mind_reader_win_rate
from montylab.simulation import run_batch

print("perfect mind reader vs a population that stays with rate q:")
print(f"  {'q':6s} {'P(win)':8s} {'P(other door opened)':20s}")
for n in range(5):
    q = Fraction(n, 4)
    print(f"  {str(q):6s} {str(mind_reader_win_rate(q)):8s} {str(mind_reader_open_rate(q)):20s}")
print("  (an always-evil host would open other doors only 1/3 of the time)")

print("\nthe acting guest, 50,000 games per detection risk:")
reader = ShowmasterStrategy.mind_reader(1)
for d in (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(1)):
    report = run_batch(reader, GuestStrategy.actor(d), 50_000, master_seed=5)
    print(
        f"  detection risk {str(d):4s} -> rate {report.win_rate:.4f}, "
        f"exact {report.exact_value}, z = {report.z_score:+.2f}"
    )
print("\ncaught means certain goat; the bluff is only as good as your poker face.")

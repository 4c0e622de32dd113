"""The moody host: mixing moods until the guest's information is gone.

A moody host plays evil with frequency p.  Staying pays 1/3 flat;
switching pays 2(1-p)/3, so the strategies cross at p = 1/2, where the
guest learns nothing usable from watching the host.  A host who wants
the audience on the edge of its seat (and a smaller car bill) aims right
at that point.
"""

from fractions import Fraction

from montylab import best_response, indifference_point
from montylab.analytics import sweep_rows, sweep_table
from montylab.simulation import sweep

grid = [Fraction(n, 8) for n in range(9)]

print(sweep_table(sweep_rows(grid), columns=("p", "win_stay", "win_switch")))

print("\nbest responses:")
for p in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
    print(f"  p = {p}: {best_response(p).value}")

point = indifference_point()
print(f"\nbisection search over the exact payoff gap lands on p = {point}")

print("\nMonte Carlo spot-check (20,000 games per cell, switch guest):")
for report in sweep(20_000, 3, p_values=[Fraction(0), Fraction(1, 2), Fraction(1)], q_values=[Fraction(0)]):
    print(
        f"  p = {str(report.showmaster.evil_rate):4s} -> rate {report.win_rate:.4f}, "
        f"exact {report.exact_value}, z = {report.z_score:+.2f}"
    )

"""Classical Theta(p) versus quantum Theta(sqrt(p)) secret search.

Classically, nothing beats trying candidates through the identity oracle:
the mean hitting time in random order is (p+1)/2.  The Grover simulator
drives the same oracle through its one-query point-search view and
reaches success probability 2/3 after about 0.48*sqrt(p) iterations.
Both scalings are measured side by side here.
"""

import math

from dhbox import run_scaling
from dhbox.grover_sim import fit_sqrt_coefficient, quantum_query_curve

PRIMES = [101, 211, 401, 809, 1601]
SEED = 11

print("classical brute force, 2000 random-order trials per prime:")
rows = run_scaling(PRIMES, trials=2000, seed=SEED)
print(f"  {'p':>6} {'mean queries':>13} {'(p+1)/2':>9} {'max':>5}")
for row in rows:
    print(f"  {row.p:>6} {row.mean_queries:>13.2f} {row.expected_mean:>9.1f} {row.max_queries:>5}")

print("\nquantum search simulation, smallest k with success >= 2/3:")
points = quantum_query_curve(PRIMES)
print(f"  {'p':>6} {'k*':>4} {'success':>9} {'pi/4 sqrt(p)':>13}")
for pt in points:
    print(f"  {pt.p:>6} {pt.iterations:>4} {pt.success_probability:>9.4f} "
          f"{math.pi / 4 * math.sqrt(pt.p):>13.2f}")

c = fit_sqrt_coefficient(points)
print(f"\nleast-squares fit: k* ~ {c:.3f} * sqrt(p)")
ratio = rows[-1].mean_queries / rows[0].mean_queries
print(f"classical means grew {ratio:.2f}x while p grew {PRIMES[-1] / PRIMES[0]:.2f}x; "
      f"the quantum iteration counts grew "
      f"{points[-1].iterations / points[0].iterations:.2f}x "
      f"(sqrt ratio {math.sqrt(PRIMES[-1] / PRIMES[0]):.2f}x)")

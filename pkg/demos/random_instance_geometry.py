"""How often a random level-2 DDH input breaks the counting argument.

The level-2 lower bound hinges on no query line meeting the zero set of
the quadruple polynomial in more than two points.  For the fixed input
that is a root-counting fact; for uniformly random inputs it can fail,
but rarely: the bad-instance probability is at most 7/p.  This experiment
measures the actual fraction at p = 31 and shows one bad instance's
geometry explicitly.
"""

from dhbox import run_level2_solution_counts
from dhbox.experiments import max_line_solution_count

P = 31
SEED = 13

result = run_level2_solution_counts(P, trials=1000, seed=SEED)
print(f"p = {P}, 1000 uniform instances:")
print(f"  instances with a line carrying > 2 solutions: {result.bad_count}")
print(f"  bad fraction {result.bad_fraction:.4f} vs bound 7/p = {result.bound:.4f} "
      f"(+3 sigma = {result.threshold:.4f})")

if result.bad_samples:
    sample = result.bad_samples[0]
    g, h, k, l = sample.instance
    print(f"\none bad instance: g={g} h={h} k={k} l={l}")
    print(f"  worst line u = {sample.worst_line} carries {sample.solution_count} "
          f"common zeros of the quadruple polynomial")

# A hand-degenerate instance: with h and k in the zero class the quadruple
# polynomial factors into two affine forms, and the zero line of the g
# form carries all p of its points.
count, line = max_line_solution_count(7, (1, 2, 3), (0, 0, 0), (0, 0, 0), (2, 1, 5))
print(f"\ndegenerate instance over p = 7 (h = k = 0): worst line {line} "
      f"has {count} solutions out of 7 points")

"""Oracle plumbing: mutual simulation, normalization, budgets and escrow.

The identity oracle of a level-1 group and the point-search oracle over
Z_p are the same object in disguise: each simulates the other with at
most one query.  Raw oracles with un-normalized hidden normals cost at
most t extra queries to tame.  Query budgets make lower bounds tangible:
an algorithm cut off below the required query count simply cannot finish.
"""

import numpy as np

from dhbox import (
    Escrow,
    GroupElement,
    GroverOracle,
    IdentityOracle,
    PrimeModulus,
    QueryBudgetExceeded,
    RawOracle,
    brute_force_secret,
    grover_from_identity,
    identity_from_grover,
    normalize_oracle,
)

P = 13
modulus = PrimeModulus(P)
escrow = Escrow()

# --- mutual simulation ----------------------------------------------------
secret = 9
identity = IdentityOracle.level1(modulus, secret)
point = GroverOracle(modulus, secret)
print(f"p = {P}, secret = {secret}")
print("point-search via identity:",
      [grover_from_identity(identity, x) for x in range(P)])
print("identity via point-search on (h0, 1):",
      [identity_from_grover(point, GroupElement((h0, 1), modulus)) for h0 in range(P)])
print(f"queries spent: identity {identity.queries}, point {point.queries} "
      f"(one per simulated answer)\n")

# --- normalizing a raw oracle ---------------------------------------------
raw = RawOracle((0, 0, 4, 11), modulus)  # first nonzero coordinate hides at index 2
perm, view = normalize_oracle(raw)
n = view.reveal_hidden(escrow)
print(f"raw normal located with {raw.queries} unit-vector queries; "
      f"permutation {perm} and rescaling yield the normalized normal {n.coords}\n")

# --- budgets enforce lower bounds ------------------------------------------
rng = np.random.default_rng(2)
budget = P // 2
capped = IdentityOracle.level1(modulus, P - 1, budget=budget)
try:
    brute_force_secret(capped)
    print("unexpectedly finished under budget")
except QueryBudgetExceeded:
    print(f"budget of {budget} queries exhausted before the worst-case secret "
          f"was found, as the linear lower bound demands")
full = IdentityOracle.level1(modulus, P - 1)
found = brute_force_secret(full)
print(f"without the cap the same search finishes: s = {found.value} "
      f"after {full.queries} queries")

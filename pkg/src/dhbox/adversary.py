"""Exhaustive weighted-adversary quantities for level-2 DDH at small p.

The fixed input is the quadruple ((1,0,0), (0,1,0), (0,0,1), (0,1,1)),
whose first element generates the group under every hidden vector
(1, n_1, n_2).  The quadruple is a DH-quadruple exactly when
n_1 + n_2 = n_1 * n_2; vectors satisfying this are called positive, the
rest negative.  The adversary matrix puts weight 1 between every
positive/negative pair, and restricting it to pairs distinguished by a
query h yields the per-query row sums whose worst-case ratios lower-bound
the randomized and quantum query complexity.

Row sums of the restricted matrix depend only on h, the polarity of the
row vector and its oracle answer at h, so the search over all admissible
(n, n', h) collapses to one pass over h with four counts per h:
positives/negatives on and off the hyperplane of h.  Counting is
vectorized; the minimization is done in exact rationals so reported
values never owe anything to float rounding.  The reduction is a plain
minimum, hence insensitive to any chunking or parallel split of the h
range.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from .modmath import PrimeModulus, _inv_int

DEFAULT_ENUMERATION_GUARD = 31

# The fixed level-2 input instance: generator and three unit-ish vectors.
FIXED_INSTANCE = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 1, 1))


@dataclass(frozen=True)
class ClassifiedVector:
    """A candidate hidden vector (1, n1, n2) with its polarity."""

    n1: int
    n2: int
    positive: bool

    @property
    def coords(self) -> Tuple[int, int, int]:
        return (1, self.n1, self.n2)


def is_positive(p: int, n1: int, n2: int) -> bool:
    """Whether the fixed instance is a DH-quadruple under (1, n1, n2)."""
    return (n1 + n2) % p == n1 * n2 % p


def classify(p: int) -> List[ClassifiedVector]:
    """Classify all p^2 candidate hidden vectors, in lexicographic order.

    Exactly p - 1 are positive: n1 = 1 admits no partner, and every other
    n1 forces n2 = n1 / (n1 - 1).
    """
    PrimeModulus(p)
    return [
        ClassifiedVector(n1, n2, is_positive(p, n1, n2))
        for n1 in range(p)
        for n2 in range(p)
    ]


def positive_pairs(p: int) -> List[Tuple[int, int]]:
    """The p - 1 positive (n1, n2) pairs, from the closed form."""
    pairs = []
    for n1 in range(p):
        if n1 == 1:
            continue
        pairs.append((n1, n1 * _inv_int(n1 - 1, p) % p))
    return sorted(pairs)


def identity_value(p: int, n1: int, n2: int, h: Tuple[int, int, int]) -> int:
    """Answer of the oracle hidden at (1, n1, n2) on the query h."""
    return 1 if (h[0] + h[1] * n1 + h[2] * n2) % p == 0 else 0


def sigma_gamma(p: int, vec: ClassifiedVector) -> int:
    """Row sum of the adversary matrix at vec: the size of the other class."""
    return p * p - p + 1 if vec.positive else p - 1


def sigma_gamma_h(p: int, vec: ClassifiedVector, h: Tuple[int, int, int]) -> int:
    """Row sum of the h-restricted matrix at vec, by direct enumeration.

    Counts opposite-polarity vectors whose oracle answer at h differs
    from vec's.  O(p^2); the aggregated path below is the fast route.
    """
    own = identity_value(p, vec.n1, vec.n2, h)
    count = 0
    for m1 in range(p):
        for m2 in range(p):
            if is_positive(p, m1, m2) == vec.positive:
                continue
            if identity_value(p, m1, m2, h) != own:
                count += 1
    return count


def build_gamma(p: int) -> np.ndarray:
    """The adversary matrix materialized explicitly (reference, small p).

    Rows and columns are indexed by n1 * p + n2.
    """
    pos = np.array(
        [is_positive(p, n1, n2) for n1 in range(p) for n2 in range(p)],
        dtype=bool,
    )
    return (pos[:, None] ^ pos[None, :]).astype(np.int64)


def _hyperplane_counts(p: int):
    """Per-query counts over all h in Z_p^3.

    Returns flat arrays (indexed by h0*p^2 + h1*p + h2) of the number of
    positive vectors on the hyperplane of h, the number of negative ones,
    and their complements off the hyperplane.
    """
    idx = np.arange(p**3, dtype=np.int64)
    h0 = idx // (p * p)
    h1 = (idx // p) % p
    h2 = idx % p
    pos_on = np.zeros(p**3, dtype=np.int64)
    for m1, m2 in positive_pairs(p):
        pos_on += (h0 + h1 * m1 + h2 * m2) % p == 0
    # Points on a hyperplane: p when (h1, h2) != 0, else p^2 or none.
    total_on = np.where(
        (h1 != 0) | (h2 != 0), p, np.where(h0 == 0, p * p, 0)
    ).astype(np.int64)
    neg_on = total_on - pos_on
    n_pos = p - 1
    n_neg = p * p - p + 1
    return pos_on, neg_on, n_pos - pos_on, n_neg - neg_on


def case_count_extremes(p: int):
    """Largest restricted row sums over all admissible (n, n', h).

    For a pair distinguished by h, the negative side answering 0 has row
    sum equal to the number of positives on the hyperplane (at most 2:
    they are roots of a nonzero quadratic), and the positive side
    answering 0 has row sum equal to the number of negatives on the
    hyperplane (at most p: a nonzero linear equation).  Returns the
    observed maxima of the two counts.
    """
    pos_on, neg_on, pos_off, neg_off = _hyperplane_counts(p)
    # Pair kind (positive answers 1, negative answers 0): needs both sides.
    kind_a = (pos_on >= 1) & (neg_off >= 1)
    # Pair kind (positive answers 0, negative answers 1).
    kind_b = (pos_off >= 1) & (neg_on >= 1)
    max_case1 = int(pos_on[kind_a].max()) if kind_a.any() else 0
    max_case2 = int(neg_on[kind_b].max()) if kind_b.any() else 0
    return max_case1, max_case2


@dataclass(frozen=True)
class Witness:
    """A minimizing triple: positive n, negative n', query h, and the
    restricted row sums realized there."""

    n: Tuple[int, int, int]
    n_prime: Tuple[int, int, int]
    h: Tuple[int, int, int]
    sigma_h_n: int
    sigma_h_n_prime: int

    def to_dict(self) -> dict:
        return {
            "n": list(self.n),
            "n_prime": list(self.n_prime),
            "h": list(self.h),
            "sigma_h_n": self.sigma_h_n,
            "sigma_h_n_prime": self.sigma_h_n_prime,
        }


@dataclass(frozen=True)
class AdversaryReport:
    """All adversary quantities for DDH at level 2, at one prime.

    Ratios are exact rationals with float companions; the quantum bound
    is reported both as the exact squared ratio and its float root.
    """

    p: int
    count_positive: int
    count_negative: int
    sigma_positive: int
    sigma_negative: int
    worst_ratio_randomized: Fraction
    worst_ratio_quantum_squared: Fraction
    worst_ratio_quantum: float
    witness_randomized: Witness
    witness_quantum: Witness

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "count_positive": self.count_positive,
            "count_negative": self.count_negative,
            "sigma_positive": self.sigma_positive,
            "sigma_negative": self.sigma_negative,
            "worst_ratio_randomized": float(self.worst_ratio_randomized),
            "worst_ratio_randomized_exact": str(self.worst_ratio_randomized),
            "worst_ratio_quantum": self.worst_ratio_quantum,
            "worst_ratio_quantum_squared_exact": str(self.worst_ratio_quantum_squared),
            "witnesses": {
                "randomized": self.witness_randomized.to_dict(),
                "quantum": self.witness_quantum.to_dict(),
            },
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _first_vector(p: int, positive: bool, h: Tuple[int, int, int], answer: int) -> Tuple[int, int, int]:
    """Lexicographically first vector of given polarity and answer at h."""
    for n1 in range(p):
        for n2 in range(p):
            if is_positive(p, n1, n2) != positive:
                continue
            if identity_value(p, n1, n2, h) == answer:
                return (1, n1, n2)
    raise AssertionError("no vector matches an admissible kind")


def adversary_bounds(p: int, guard: int = DEFAULT_ENUMERATION_GUARD, force: bool = False) -> AdversaryReport:
    """Exact worst-case adversary ratios by full enumeration over queries.

    For every query h and each of the two admissible answer patterns, the
    randomized candidate is max of the two row-sum ratios and the quantum
    candidate is the product ratio; both are minimized over all h in
    exact rational arithmetic, with lexicographically first witnesses.

    Enumeration is O(p^3) queries with O(p) counting work each; the guard
    rejects p beyond the default 31 unless ``force`` is set.
    """
    PrimeModulus(p)
    if p > guard and not force:
        raise ValueError(
            f"p = {p} exceeds the enumeration guard {guard}; pass force=True"
        )
    pos_on, neg_on, pos_off, neg_off = _hyperplane_counts(p)
    sp = p * p - p + 1  # row sum at a positive vector
    sn = p - 1  # row sum at a negative vector

    best_rand: Optional[Fraction] = None
    best_rand_key = None
    best_quad: Optional[Fraction] = None
    best_quad_key = None

    n_h = p**3
    for i in range(n_h):
        po = int(pos_on[i])
        no = int(neg_on[i])
        pf = int(pos_off[i])
        nf = int(neg_off[i])
        # Kind A: positive row answers 1, negative row answers 0.
        if po >= 1 and nf >= 1:
            rand = max(Fraction(sp, nf), Fraction(sn, po))
            quad = Fraction(sp * sn, nf * po)
            if best_rand is None or rand < best_rand:
                best_rand, best_rand_key = rand, (i, 1, nf, po)
            if best_quad is None or quad < best_quad:
                best_quad, best_quad_key = quad, (i, 1, nf, po)
        # Kind B: positive row answers 0, negative row answers 1.
        if pf >= 1 and no >= 1:
            rand = max(Fraction(sp, no), Fraction(sn, pf))
            quad = Fraction(sp * sn, no * pf)
            if best_rand is None or rand < best_rand:
                best_rand, best_rand_key = rand, (i, 0, no, pf)
            if best_quad is None or quad < best_quad:
                best_quad, best_quad_key = quad, (i, 0, no, pf)

    if best_rand is None or best_quad is None:
        raise AssertionError("no admissible (n, n', h) found")

    def witness(key) -> Witness:
        i, pos_answer, sig_n, sig_np = key
        h = (i // (p * p), (i // p) % p, i % p)
        n = _first_vector(p, True, h, pos_answer)
        n_prime = _first_vector(p, False, h, 1 - pos_answer)
        return Witness(n, n_prime, h, sig_n, sig_np)

    return AdversaryReport(
        p=p,
        count_positive=sn,
        count_negative=sp,
        sigma_positive=sp,
        sigma_negative=sn,
        worst_ratio_randomized=best_rand,
        worst_ratio_quantum_squared=best_quad,
        worst_ratio_quantum=float(best_quad) ** 0.5,
        witness_randomized=witness(best_rand_key),
        witness_quantum=witness(best_quad_key),
    )

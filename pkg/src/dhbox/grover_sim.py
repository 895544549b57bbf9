"""Classical state-vector simulation of Grover search over Z_p.

The searcher sees the hidden secret only through the one-query
point-search view of the identity oracle.  A run keeps the full amplitude
vector, applies the phase oracle (one counted query per application per
standard quantum query accounting) followed by inversion about the mean,
and reports the success probability of measuring the secret.

The phase flip needs the secret's position, which is taken once through
escrow at construction; simulating the oracle's action on every basis
state individually would otherwise charge p classical queries per
iteration and say nothing about quantum cost.  Norm drift is asserted,
never corrected: a drifting norm means the simulation is wrong.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from .blackbox import Escrow

MAX_STATES = 1 << 22
_NORM_TOL = 1e-9


class NormDriftError(FloatingPointError):
    """The simulated state stopped being a unit vector."""


def closed_form_success(n_states: int, iterations: int) -> float:
    """sin^2((2k+1) * asin(1/sqrt(N))): success after k Grover iterations."""
    theta = math.asin(1.0 / math.sqrt(n_states))
    return math.sin((2 * iterations + 1) * theta) ** 2


def optimal_iterations(n_states: int) -> int:
    """The standard iteration count round(pi/4 * sqrt(N) - 1/2)."""
    return max(0, round(math.pi / 4 * math.sqrt(n_states) - 0.5))


def _check_norm(amplitudes: np.ndarray) -> None:
    norm = float(np.linalg.norm(amplitudes))
    if abs(norm - 1.0) > _NORM_TOL:
        raise NormDriftError(f"state norm drifted to {norm!r}")


def _step(amplitudes: np.ndarray, target: int) -> np.ndarray:
    """One Grover iteration: phase flip at the target, then inversion
    about the mean."""
    amplitudes = amplitudes.copy()
    amplitudes[target] = -amplitudes[target]
    amplitudes = 2 * amplitudes.mean() - amplitudes
    _check_norm(amplitudes)
    return amplitudes


def simulate_search(n_states: int, target: int, iterations: int) -> np.ndarray:
    """Amplitudes after running Grover search from the uniform state.

    Works for any N >= 2 and any target, with no oracle attached; the
    self-test N = 4, k = 1 hits the textbook exact case.
    """
    if n_states < 2:
        raise ValueError(f"need at least 2 states, got {n_states}")
    if n_states > MAX_STATES:
        raise ValueError(f"{n_states} states exceed the memory guard {MAX_STATES}")
    if not 0 <= target < n_states:
        raise ValueError(f"target {target} outside [0, {n_states})")
    amplitudes = np.full(n_states, 1.0 / math.sqrt(n_states), dtype=np.complex128)
    _check_norm(amplitudes)
    for _ in range(iterations):
        amplitudes = _step(amplitudes, target)
    return amplitudes


@dataclass(frozen=True)
class GroverRun:
    """Record of one simulated search: sizes, counts and the outcome."""

    p: int
    target: int
    iterations: int
    success_probability: float
    measured_outcome: int
    oracle_queries: int

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "target": self.target,
            "iterations": self.iterations,
            "success_probability": self.success_probability,
            "measured_outcome": self.measured_outcome,
            "oracle_queries": self.oracle_queries,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_dict())


def grover_search(oracle, iterations: Optional[int] = None, rng=None) -> GroverRun:
    """Search for the secret of a level-1 identity oracle.

    The number of iterations defaults to the optimal choice; each
    iteration applies the phase oracle once, so the reported query count
    equals the iteration count.  Measurement samples the final
    distribution with ``rng`` (fixed rng implies a fixed outcome).
    """
    if oracle.level != 1:
        raise ValueError(f"level-1 oracle required, got level {oracle.level}")
    p = oracle.modulus.p
    if p > MAX_STATES:
        raise ValueError(f"p = {p} exceeds the memory guard {MAX_STATES}")
    target = oracle.reveal_hidden(Escrow()).coords[1]
    k = optimal_iterations(p) if iterations is None else iterations
    amplitudes = simulate_search(p, target, k)
    probs = np.abs(amplitudes) ** 2
    if rng is None:
        rng = np.random.default_rng()
    measured = int(rng.choice(p, p=probs / probs.sum()))
    return GroverRun(
        p=p,
        target=target,
        iterations=k,
        success_probability=float(probs[target]),
        measured_outcome=measured,
        oracle_queries=k,
    )


@dataclass(frozen=True)
class CurvePoint:
    """Smallest iteration count reaching success probability 2/3 at one p."""

    p: int
    iterations: int
    success_probability: float

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "iterations": self.iterations,
            "success_probability": self.success_probability,
        }


def quantum_query_curve(ps: Sequence[int]) -> List[CurvePoint]:
    """For each p, the smallest k with simulated success >= 2/3.

    Evolves one state per p, reading the success probability after every
    iteration.  The found k always satisfies k <= ceil(pi/4 * sqrt(p));
    exceeding that bound would mean the simulator is broken and raises.
    """
    points = []
    for p in ps:
        if p > MAX_STATES:
            raise ValueError(f"p = {p} exceeds the memory guard {MAX_STATES}")
        bound = math.ceil(math.pi / 4 * math.sqrt(p))
        amplitudes = np.full(p, 1.0 / math.sqrt(p), dtype=np.complex128)
        k = 0
        success = float(abs(amplitudes[0]) ** 2)
        while success < 2 / 3:
            if k >= bound:
                raise AssertionError(
                    f"success 2/3 not reached within ceil(pi/4 sqrt(p)) = {bound}"
                )
            amplitudes = _step(amplitudes, 0)
            k += 1
            success = float(abs(amplitudes[0]) ** 2)
        points.append(CurvePoint(p=p, iterations=k, success_probability=success))
    return points


def fit_sqrt_coefficient(points: Sequence[CurvePoint]) -> float:
    """Least-squares c for k ~ c * sqrt(p) through the origin."""
    num = sum(pt.iterations * math.sqrt(pt.p) for pt in points)
    den = sum(pt.p for pt in points)
    return num / den

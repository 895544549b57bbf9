"""Identity black-box groups over the ambient vector space Z_p^(t+1).

The group under study is the quotient of Z_p^(t+1) by a hidden hyperplane.
Group operations are ordinary coordinate arithmetic and cost nothing; the
only access to the hidden structure is the identity oracle, which answers
whether a vector lies on the hyperplane and charges one counted query per
evaluation.

Everything that would let algorithm code peek at the hidden normal vector
is gated behind an explicit :class:`Escrow` capability.  Reference maps
such as :func:`coset_label` take an explicit normal vector, which honest
algorithm code can only obtain through ``reveal_hidden(escrow)``; keeping
Escrow construction out of algorithm code is what makes every reported
query count meaningful.
"""

from __future__ import annotations

from typing import Optional, Sequence, Tuple

from .modmath import PrimeModulus, Residue


class EscrowError(PermissionError):
    """Raised when hidden state is requested without the escrow token."""


class QueryBudgetExceeded(RuntimeError):
    """Raised when an oracle with a query budget is asked one query too many."""


class MalformedOracleError(ValueError):
    """Raised when a raw oracle behaves as if its normal vector were zero."""


class Escrow:
    """Capability token marking trusted test or reference-oracle code.

    Holding an instance is the declared permission to see hidden vectors.
    Algorithm code must never construct one; tests, honest-oracle builders
    and the Grover simulator do.
    """

    __slots__ = ()


def _check_escrow(escrow) -> None:
    if not isinstance(escrow, Escrow):
        raise EscrowError("hidden state requires an Escrow token")


class GroupElement:
    """A coordinate vector in Z_p^(t+1), one representative of a group class.

    Note that ``==`` compares ambient coordinates.  Equality *in the
    black-box group* (equality of cosets) is a different relation and
    needs an oracle query; see :func:`equal_in_group`.
    """

    __slots__ = ("coords", "modulus")

    def __init__(self, coords: Sequence[int], modulus: PrimeModulus):
        p = modulus.p
        self.coords = tuple(c % p for c in coords)
        self.modulus = modulus
        if len(self.coords) < 2:
            raise ValueError("group elements need at least two coordinates")

    @classmethod
    def zero(cls, modulus: PrimeModulus, level: int) -> "GroupElement":
        return cls((0,) * (level + 1), modulus)

    @property
    def level(self) -> int:
        return len(self.coords) - 1

    def _check_compatible(self, other: "GroupElement") -> None:
        if self.modulus.p != other.modulus.p:
            raise ValueError(
                f"modulus mismatch: {self.modulus.p} vs {other.modulus.p}"
            )
        if len(self.coords) != len(other.coords):
            raise ValueError(
                f"dimension mismatch: {len(self.coords)} vs {len(other.coords)}"
            )

    def __add__(self, other: "GroupElement") -> "GroupElement":
        if not isinstance(other, GroupElement):
            return NotImplemented
        self._check_compatible(other)
        p = self.modulus.p
        return GroupElement(
            tuple((a + b) % p for a, b in zip(self.coords, other.coords)),
            self.modulus,
        )

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        if not isinstance(other, GroupElement):
            return NotImplemented
        self._check_compatible(other)
        p = self.modulus.p
        return GroupElement(
            tuple((a - b) % p for a, b in zip(self.coords, other.coords)),
            self.modulus,
        )

    def __neg__(self) -> "GroupElement":
        p = self.modulus.p
        return GroupElement(tuple(-a % p for a in self.coords), self.modulus)

    def __mul__(self, scalar: int) -> "GroupElement":
        if not isinstance(scalar, int):
            return NotImplemented
        p = self.modulus.p
        return GroupElement(tuple(a * scalar % p for a in self.coords), self.modulus)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GroupElement)
            and self.modulus.p == other.modulus.p
            and self.coords == other.coords
        )

    def __hash__(self) -> int:
        return hash((self.coords, self.modulus.p))

    def __repr__(self) -> str:
        return f"GroupElement({self.coords} mod {self.modulus.p})"


class NormalVector:
    """Hyperplane normal normalized to leading coordinate 1.

    Stored as (1, n_1, ..., n_t).  Any nonzero normal vector can be brought
    to this form by a coordinate permutation and a scaling, neither of
    which changes the hyperplane; see :func:`normalize_oracle`.
    """

    __slots__ = ("coords", "modulus")

    def __init__(self, coords: Sequence[int], modulus: PrimeModulus):
        p = modulus.p
        self.coords = tuple(c % p for c in coords)
        self.modulus = modulus
        if len(self.coords) < 2:
            raise ValueError("a normal vector needs at least two coordinates")
        if self.coords[0] != 1:
            raise ValueError(
                f"normalized normal vector must start with 1, got {self.coords[0]}"
            )

    @classmethod
    def level1(cls, modulus: PrimeModulus, secret: int) -> "NormalVector":
        return cls((1, secret), modulus)

    @property
    def level(self) -> int:
        return len(self.coords) - 1

    @property
    def secret(self) -> int:
        """The single hidden coordinate of a level-1 vector."""
        if self.level != 1:
            raise ValueError(f"secret is a level-1 notion, this is level {self.level}")
        return self.coords[1]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, NormalVector)
            and self.modulus.p == other.modulus.p
            and self.coords == other.coords
        )

    def __hash__(self) -> int:
        return hash((self.coords, self.modulus.p, "normal"))

    def __repr__(self) -> str:
        return f"NormalVector({self.coords} mod {self.modulus.p})"


class LinearPoly:
    """The affine form h_0 + sum_i h_i x_i attached to an ambient vector.

    Evaluating the form of h at the hidden coordinates (n_1, ..., n_t)
    gives exactly the scalar product of h with the normal vector, which is
    what turns membership questions into polynomial root questions.
    """

    __slots__ = ("coeffs", "modulus")

    def __init__(self, coeffs: Sequence[int], modulus: PrimeModulus):
        p = modulus.p
        self.coeffs = tuple(c % p for c in coeffs)
        self.modulus = modulus

    def evaluate(self, point: Sequence[int]) -> Residue:
        if len(point) != len(self.coeffs) - 1:
            raise ValueError(
                f"expected {len(self.coeffs) - 1} coordinates, got {len(point)}"
            )
        acc = self.coeffs[0]
        for c, x in zip(self.coeffs[1:], point):
            acc += c * x
        return Residue(acc, self.modulus)

    def __repr__(self) -> str:
        return f"LinearPoly({self.coeffs} mod {self.modulus.p})"


def linear_form(h: GroupElement) -> LinearPoly:
    return LinearPoly(h.coords, h.modulus)


class _QueryCounting:
    """Shared query counter and optional hard budget."""

    __slots__ = ("_queries", "_budget")

    def _init_counter(self, budget: Optional[int]) -> None:
        self._queries = 0
        self._budget = budget

    @property
    def queries(self) -> int:
        return self._queries

    @property
    def budget(self) -> Optional[int]:
        return self._budget

    def _charge(self) -> None:
        if self._budget is not None and self._queries >= self._budget:
            raise QueryBudgetExceeded(
                f"query budget of {self._budget} exhausted"
            )
        self._queries += 1


class IdentityOracle(_QueryCounting):
    """Membership oracle of the hidden hyperplane, with query accounting.

    ``query(h)`` returns 1 exactly when h lies on the hyperplane of the
    hidden normal vector, and increases the counter by one.  The hidden
    vector is reachable only through ``reveal_hidden`` with an escrow
    token, never by the algorithms being measured.
    """

    __slots__ = ("_hidden",)

    def __init__(self, hidden: NormalVector, budget: Optional[int] = None):
        self._hidden = hidden
        self._init_counter(budget)

    @classmethod
    def level1(cls, modulus: PrimeModulus, secret: int, budget: Optional[int] = None) -> "IdentityOracle":
        return cls(NormalVector.level1(modulus, secret), budget)

    @property
    def modulus(self) -> PrimeModulus:
        return self._hidden.modulus

    @property
    def level(self) -> int:
        return self._hidden.level

    def query_coords(self, coords: Sequence[int]) -> int:
        n = self._hidden.coords
        if len(coords) != len(n):
            raise ValueError(
                f"dimension mismatch: oracle level {len(n) - 1}, "
                f"query has {len(coords)} coordinates"
            )
        self._charge()
        acc = 0
        for c, nc in zip(coords, n):
            acc += c * nc
        return 1 if acc % self._hidden.modulus.p == 0 else 0

    def query(self, h: GroupElement) -> int:
        if h.modulus.p != self._hidden.modulus.p:
            raise ValueError(
                f"modulus mismatch: {h.modulus.p} vs {self._hidden.modulus.p}"
            )
        return self.query_coords(h.coords)

    def reveal_hidden(self, escrow: Escrow) -> NormalVector:
        """Test-escrow accessor for the hidden vector.  Never counted."""
        _check_escrow(escrow)
        return self._hidden


class RawOracle(_QueryCounting):
    """Identity oracle whose normal vector is nonzero but not normalized.

    The starting point of :func:`normalize_oracle`: same query mechanics
    as :class:`IdentityOracle`, but the hidden normal may have any nonzero
    coordinate pattern.
    """

    __slots__ = ("_normal", "modulus")

    def __init__(self, normal: Sequence[int], modulus: PrimeModulus, budget: Optional[int] = None):
        p = modulus.p
        self._normal = tuple(c % p for c in normal)
        self.modulus = modulus
        if len(self._normal) < 2:
            raise ValueError("a normal vector needs at least two coordinates")
        if not any(self._normal):
            raise ValueError("normal vector must be nonzero")
        self._init_counter(budget)

    @property
    def level(self) -> int:
        return len(self._normal) - 1

    def query_coords(self, coords: Sequence[int]) -> int:
        n = self._normal
        if len(coords) != len(n):
            raise ValueError(
                f"dimension mismatch: oracle level {len(n) - 1}, "
                f"query has {len(coords)} coordinates"
            )
        self._charge()
        acc = 0
        for c, nc in zip(coords, n):
            acc += c * nc
        return 1 if acc % self.modulus.p == 0 else 0

    def query(self, h: GroupElement) -> int:
        if h.modulus.p != self.modulus.p:
            raise ValueError(f"modulus mismatch: {h.modulus.p} vs {self.modulus.p}")
        return self.query_coords(h.coords)

    def reveal_normal(self, escrow: Escrow) -> Tuple[int, ...]:
        _check_escrow(escrow)
        return self._normal


class PermutedOracle:
    """View of a raw oracle through a coordinate permutation.

    Queries are permuted and delegated, so each query here costs exactly
    one query on the wrapped oracle and the counter is shared.  The
    effective hidden vector is the permuted, rescaled raw normal, which is
    normalized by construction.
    """

    __slots__ = ("_raw", "perm")

    def __init__(self, raw: RawOracle, perm: Tuple[int, ...]):
        self._raw = raw
        self.perm = perm

    @property
    def modulus(self) -> PrimeModulus:
        return self._raw.modulus

    @property
    def level(self) -> int:
        return self._raw.level

    @property
    def queries(self) -> int:
        return self._raw.queries

    def query_coords(self, coords: Sequence[int]) -> int:
        if len(coords) != len(self.perm):
            raise ValueError(
                f"dimension mismatch: oracle level {len(self.perm) - 1}, "
                f"query has {len(coords)} coordinates"
            )
        return self._raw.query_coords(tuple(coords[i] for i in self.perm))

    def query(self, h: GroupElement) -> int:
        if h.modulus.p != self.modulus.p:
            raise ValueError(f"modulus mismatch: {h.modulus.p} vs {self.modulus.p}")
        return self.query_coords(h.coords)

    def reveal_hidden(self, escrow: Escrow) -> NormalVector:
        _check_escrow(escrow)
        raw = self._raw.reveal_normal(escrow)
        permuted = tuple(raw[i] for i in self.perm)
        scale = pow(permuted[0], -1, self.modulus.p)
        return NormalVector(tuple(c * scale for c in permuted), self.modulus)


class GroverOracle(_QueryCounting):
    """Point-search oracle over Z_p: answers 1 exactly on the hidden value."""

    __slots__ = ("_secret", "modulus")

    def __init__(self, modulus: PrimeModulus, secret: int, budget: Optional[int] = None):
        self.modulus = modulus
        self._secret = secret % modulus.p
        self._init_counter(budget)

    def query(self, x: int) -> int:
        self._charge()
        return 1 if x % self.modulus.p == self._secret else 0

    def reveal_secret(self, escrow: Escrow) -> int:
        _check_escrow(escrow)
        return self._secret


def equal_in_group(oracle, a: GroupElement, b: GroupElement) -> int:
    """Equality of cosets: one identity query on the difference a - b."""
    a._check_compatible(b)
    p = a.modulus.p
    diff = tuple((x - y) % p for x, y in zip(a.coords, b.coords))
    return oracle.query_coords(diff)


def grover_from_identity(oracle, x: int) -> int:
    """Point-search answer for x through one level-1 identity query.

    (x, -1) lies on the hidden line exactly when x equals the secret.
    """
    if oracle.level != 1:
        raise ValueError(f"level-1 oracle required, got level {oracle.level}")
    p = oracle.modulus.p
    return oracle.query_coords((x % p, p - 1))


def identity_from_grover(grover: GroverOracle, h: GroupElement) -> int:
    """Level-1 identity answer for h through at most one point-search query.

    (h0, h1) lies on the hidden line exactly when -h0 = s*h1, which for
    invertible h1 is the point question at -h0/h1; the two h1 = 0 cases
    need no query at all.
    """
    if h.level != 1:
        raise ValueError(f"level-1 element required, got level {h.level}")
    if h.modulus.p != grover.modulus.p:
        raise ValueError(f"modulus mismatch: {h.modulus.p} vs {grover.modulus.p}")
    h0, h1 = h.coords
    p = grover.modulus.p
    if h1 == 0:
        return 1 if h0 == 0 else 0
    return grover.query(-h0 * pow(h1, -1, p) % p)


def coset_label(n: NormalVector, h: GroupElement) -> Residue:
    """Scalar product of h with the normal vector: the label of h's coset.

    Labels identify cosets and turn the quotient into Z_p: the map is a
    surjective homomorphism whose kernel is the hidden hyperplane.  Only
    reference and test code should hold the normal vector needed here.
    """
    if h.modulus.p != n.modulus.p:
        raise ValueError(f"modulus mismatch: {h.modulus.p} vs {n.modulus.p}")
    if len(h.coords) != len(n.coords):
        raise ValueError(
            f"dimension mismatch: {len(h.coords)} vs {len(n.coords)}"
        )
    acc = 0
    for c, nc in zip(h.coords, n.coords):
        acc += c * nc
    return Residue(acc, h.modulus)


def canonical_element(modulus: PrimeModulus, label: int, level: int) -> GroupElement:
    """The representative (label, 0, ..., 0) of the coset with that label.

    Its first coordinate meets the normalized normal's leading 1, so its
    label is the given one whatever the hidden vector is.
    """
    return GroupElement((label,) + (0,) * level, modulus)


def field_mul(n: NormalVector, h: GroupElement, k: GroupElement) -> GroupElement:
    """Product of the cosets of h and k in the field carried over from F_p.

    Multiplication is transported through the coset labels; the result is
    returned as the canonical representative of the product coset.
    Requires the normal vector, so it is escrow-side only.
    """
    a = coset_label(n, h).value
    b = coset_label(n, k).value
    return canonical_element(h.modulus, a * b, h.level)


def normalize_oracle(raw, verify: bool = False):
    """Locate the first nonzero coordinate of a raw oracle's normal vector.

    Queries the unit vectors e_0, ..., e_(t-1): the answer on e_i is 1
    exactly when coordinate i of the normal is zero.  If all t queries
    answer 1, the last coordinate is nonzero by elimination, so the worst
    case stays at t queries.  Returns the transposition that moves the
    nonzero coordinate to the front together with the permuted oracle
    view, whose hidden vector is normalized; the rescaling costs nothing
    because scaling a normal vector does not change its hyperplane.

    With ``verify=True`` one extra query on e_t is spent to detect a
    malformed (all-zero) oracle instead of trusting elimination.
    """
    t = raw.level
    width = t + 1
    first_nonzero = t
    for i in range(t):
        e = tuple(1 if j == i else 0 for j in range(width))
        if raw.query_coords(e) == 0:
            first_nonzero = i
            break
    else:
        if verify:
            e = tuple(1 if j == t else 0 for j in range(width))
            if raw.query_coords(e) == 1:
                raise MalformedOracleError(
                    "oracle accepts every unit vector: normal vector is zero"
                )
    perm = list(range(width))
    perm[0], perm[first_nonzero] = perm[first_nonzero], perm[0]
    perm = tuple(perm)
    return perm, PermutedOracle(raw, perm)


def random_element(modulus: PrimeModulus, level: int, rng) -> GroupElement:
    coords = tuple(int(c) for c in rng.integers(0, modulus.p, size=level + 1))
    return GroupElement(coords, modulus)


def random_identity_oracle(modulus: PrimeModulus, level: int, rng, budget: Optional[int] = None) -> IdentityOracle:
    """Oracle with a uniformly random hidden vector of the given level."""
    hidden = (1,) + tuple(int(c) for c in rng.integers(0, modulus.p, size=level))
    return IdentityOracle(NormalVector(hidden, modulus), budget)

"""Upper-bound algorithms and reductions for DLOG, CDH and DDH.

The level-1 structure does all the work: labeling cosets by scalars turns
the quotient group into a copy of F_p, DH-quadruples become roots of a
polynomial of degree at most two in the secret, and recovering the secret
from a DLOG or CDH oracle costs a single oracle call.  Level lifting and
the multiplicative-subgroup embedding connect these groups to higher
levels and to ordinary prime-order groups.
"""

from __future__ import annotations

from typing import Callable, NamedTuple, Optional, Tuple

from .blackbox import (
    Escrow,
    GroupElement,
    NormalVector,
    _check_escrow,
    canonical_element,
    coset_label,
    grover_from_identity,
)
from .modmath import PrimeModulus, Residue, _inv_int, _legendre_int, _roots_int, is_prime

_MAX_RESAMPLES = 1000


class NotAGeneratorError(ValueError):
    """An element promised to generate the group has label zero."""


class DishonestOracleError(RuntimeError):
    """An oracle's answer is inconsistent with its problem contract."""


class DHInstance(NamedTuple):
    """A Diffie-Hellman instance (g, h, k) or quadruple (g, h, k, l).

    ``l`` is None for CDH inputs.  Whether g actually generates the group
    depends on the hidden vector and is checked by the consuming
    algorithm, not here.
    """

    g: GroupElement
    h: GroupElement
    k: GroupElement
    l: Optional[GroupElement] = None

    @property
    def modulus(self) -> PrimeModulus:
        return self.g.modulus

    @property
    def level(self) -> int:
        return self.g.level

    def check(self) -> "DHInstance":
        p = self.g.modulus.p
        width = len(self.g.coords)
        for e in (self.h, self.k, self.l):
            if e is None:
                continue
            if e.modulus.p != p:
                raise ValueError(f"modulus mismatch: {e.modulus.p} vs {p}")
            if len(e.coords) != width:
                raise ValueError(
                    f"dimension mismatch: {len(e.coords)} vs {width}"
                )
        return self


class DlogOracle:
    """Counted handle around a solver for DLOG instances.

    The callable receives (g, h) and must return an integer d with
    d*g = h in the group.  Honest handles raise NotAGeneratorError on a
    broken promise; the counter counts every call, answered or not.
    """

    __slots__ = ("_fn", "modulus", "calls")

    def __init__(self, fn: Callable[[GroupElement, GroupElement], int], modulus: PrimeModulus):
        self._fn = fn
        self.modulus = modulus
        self.calls = 0

    def __call__(self, g: GroupElement, h: GroupElement) -> int:
        self.calls += 1
        return self._fn(g, h)


class CdhOracle:
    """Counted handle around a solver for CDH instances.

    The callable receives (g, h, k) and must return some representative
    of the coset completing them to a DH-quadruple.
    """

    __slots__ = ("_fn", "modulus", "calls")

    def __init__(self, fn: Callable[[GroupElement, GroupElement, GroupElement], GroupElement], modulus: PrimeModulus):
        self._fn = fn
        self.modulus = modulus
        self.calls = 0

    def __call__(self, g: GroupElement, h: GroupElement, k: GroupElement) -> GroupElement:
        self.calls += 1
        return self._fn(g, h, k)


def honest_dlog_oracle(oracle, escrow: Escrow) -> DlogOracle:
    """A truthful DLOG solver built from escrowed knowledge of the oracle.

    Test plumbing: something must play the oracle the reductions assume,
    and it answers through coset labels without spending counted queries.
    """
    n = oracle.reveal_hidden(escrow)
    p = n.modulus.p

    def solve(g: GroupElement, h: GroupElement) -> int:
        fg = coset_label(n, g).value
        if fg == 0:
            raise NotAGeneratorError("DLOG instance with non-generator g")
        return coset_label(n, h).value * _inv_int(fg, p) % p

    return DlogOracle(solve, n.modulus)


def honest_cdh_oracle(oracle, escrow: Escrow, rng=None) -> CdhOracle:
    """A truthful CDH solver built from escrowed knowledge of the oracle.

    Returns the canonical representative of the answer coset by default;
    with ``rng`` it returns a random representative, which exercises
    callers that must not rely on any particular encoding.
    """
    n = oracle.reveal_hidden(escrow)
    modulus = n.modulus
    p = modulus.p
    t = n.level

    def solve(g: GroupElement, h: GroupElement, k: GroupElement) -> GroupElement:
        fg = coset_label(n, g).value
        if fg == 0:
            raise NotAGeneratorError("CDH instance with non-generator g")
        label = (
            coset_label(n, h).value * coset_label(n, k).value * _inv_int(fg, p)
        ) % p
        if rng is None:
            return canonical_element(modulus, label, t)
        tail = tuple(int(c) for c in rng.integers(0, p, size=t))
        head = (label - sum(c * nc for c, nc in zip(tail, n.coords[1:]))) % p
        return GroupElement((head,) + tail, modulus)

    return CdhOracle(solve, modulus)


def dh_polynomial(inst: DHInstance):
    """Coefficients (a2, a1, a0) of the level-1 quadruple polynomial.

    The product of the affine forms of g and l minus that of h and k; the
    quadruple is a DH-quadruple exactly when the secret is a root.
    """
    g0, g1 = inst.g.coords
    h0, h1 = inst.h.coords
    k0, k1 = inst.k.coords
    l0, l1 = inst.l.coords
    p = inst.modulus.p
    a2 = (g1 * l1 - h1 * k1) % p
    a1 = (g0 * l1 + g1 * l0 - h0 * k1 - h1 * k0) % p
    a0 = (g0 * l0 - h0 * k0) % p
    return a2, a1, a0


def ddh_decide_level1(oracle, inst: DHInstance, check_generator: bool = True) -> int:
    """Decide whether a level-1 quadruple is a DH-quadruple.

    Builds the quadruple polynomial in the secret.  A constant polynomial
    decides immediately with zero queries; otherwise its at most two roots
    are candidate secrets and each costs one identity query, so the
    decision spends at most two counted queries.

    ``check_generator`` spends one extra (separately understood) query to
    validate the promise that g generates the group; disable it when the
    promise is already established and exact per-instance counts matter.
    """
    if inst.level != 1:
        raise ValueError(f"level-1 instance required, got level {inst.level}")
    if inst.l is None:
        raise ValueError("DDH needs a full quadruple, l is missing")
    inst.check()
    if check_generator and oracle.query(inst.g) == 1:
        raise NotAGeneratorError("DDH instance with non-generator g")
    p = inst.modulus.p
    a2, a1, a0 = dh_polynomial(inst)
    if a2 == 0 and a1 == 0:
        return 1 if a0 == 0 else 0
    roots = _roots_int(a2, a1, a0, p)
    for r in roots:
        if oracle.query_coords((r, p - 1)) == 1:
            return 1
    return 0


def secret_from_dlog(dlog: DlogOracle) -> Residue:
    """Recover the hidden secret with a single DLOG call.

    (1, 0) generates the group whatever the secret is, and (0, 1) has
    label equal to the secret, so the discrete logarithm of that pair is
    the secret itself.  No identity queries are spent.
    """
    modulus = dlog.modulus
    g = GroupElement((1, 0), modulus)
    h = GroupElement((0, 1), modulus)
    return Residue(dlog(g, h), modulus)


def secret_from_dlog_random(dlog: DlogOracle, rng) -> Optional[Residue]:
    """Secret recovery from one DLOG call on a random instance.

    Draws (g, h) uniformly, resampling when the handle rejects a
    non-generator g.  With answer d, h - d*g lies on the hidden line, so
    the secret is -(h0 - d*g0) / (h1 - d*g1) unless the divisor vanishes;
    that degenerate draw has probability 1/p and yields None.
    """
    modulus = dlog.modulus
    p = modulus.p
    for _ in range(_MAX_RESAMPLES):
        coords = rng.integers(0, p, size=4)
        g = GroupElement((int(coords[0]), int(coords[1])), modulus)
        h = GroupElement((int(coords[2]), int(coords[3])), modulus)
        try:
            d = dlog(g, h)
        except NotAGeneratorError:
            continue
        den = (h.coords[1] - d * g.coords[1]) % p
        if den == 0:
            return None
        num = -(h.coords[0] - d * g.coords[0])
        return Residue(num * _inv_int(den, p), modulus)
    raise DishonestOracleError(
        f"no generator accepted in {_MAX_RESAMPLES} draws"
    )


def secret_from_cdh(cdh: CdhOracle, oracle, nonresidue: Optional[Residue] = None) -> Residue:
    """Recover the hidden secret with a single CDH call.

    Asks the oracle to complete g = (1,0), h = (0,1), k = (1,1).  For the
    answer l, the quadruple polynomial is -x^2 + (l1 - 1)x + l0, so the
    secret solves x^2 + (1 - l1)x - l0 = 0.  Both roots are computed (a
    supplied quadratic non-residue makes that step deterministic) and at
    most two identity queries pick out which root is the secret.
    """
    modulus = cdh.modulus
    p = modulus.p
    g = GroupElement((1, 0), modulus)
    h = GroupElement((0, 1), modulus)
    k = GroupElement((1, 1), modulus)
    l = cdh(g, h, k)
    l0, l1 = l.coords
    nr = None
    if nonresidue is not None:
        if _legendre_int(nonresidue.value, p) != -1:
            raise ValueError(
                f"{nonresidue.value} is a square modulo {p}, not a non-residue"
            )
        nr = nonresidue.value
    roots = _roots_int(1, 1 - l1, -l0, p, nr)
    for r in roots:
        if oracle.query_coords((r, p - 1)) == 1:
            return Residue(r, modulus)
    raise DishonestOracleError("no root of the CDH answer passes the identity test")


def secret_from_cdh_random(cdh: CdhOracle, oracle, rng) -> Optional[Residue]:
    """Secret recovery from one CDH call on a random instance.

    Draws (g, h, k) with g screened to be a generator (each screening
    attempt costs one identity query).  The answer l gives the quadruple
    polynomial; when its quadratic coefficient g1*l1 - h1*k1 is nonzero
    the secret is among its at most two roots and the identity oracle
    selects it.  A degenerate (lower-degree) draw yields None; that
    happens with probability at most 2/p.
    """
    modulus = cdh.modulus
    p = modulus.p
    g = None
    for _ in range(_MAX_RESAMPLES):
        cand = GroupElement((int(rng.integers(0, p)), int(rng.integers(0, p))), modulus)
        if oracle.query(cand) == 0:
            g = cand
            break
    if g is None:
        raise DishonestOracleError(
            f"no generator accepted in {_MAX_RESAMPLES} draws"
        )
    coords = rng.integers(0, p, size=4)
    h = GroupElement((int(coords[0]), int(coords[1])), modulus)
    k = GroupElement((int(coords[2]), int(coords[3])), modulus)
    l = cdh(g, h, k)
    inst = DHInstance(g, h, k, l)
    a2, a1, a0 = dh_polynomial(inst)
    if a2 == 0:
        return None
    for r in _roots_int(a2, a1, a0, p):
        if oracle.query_coords((r, p - 1)) == 1:
            return Residue(r, modulus)
    return None


def brute_force_secret(oracle, rng=None) -> Residue:
    """Exhaustive search for the secret through point-search queries.

    Sequential order by default; with ``rng`` the candidates are tried in
    a uniformly random order, for an expected (p+1)/2 queries.  The final
    candidate is tested rather than inferred, so the worst case is exactly
    p queries.
    """
    p = oracle.modulus.p
    candidates = range(p) if rng is None else rng.permutation(p)
    for x in candidates:
        x = int(x)
        if grover_from_identity(oracle, x) == 1:
            return Residue(x, oracle.modulus)
    raise DishonestOracleError("no candidate passed the identity test")


def brute_force_hidden_vector(oracle) -> NormalVector:
    """Recover the full hidden vector coordinate by coordinate.

    Coordinate i is found by scanning x and asking whether x*e_0 - e_i
    lies on the hyperplane, which holds exactly at x = n_i.  At most p
    queries per coordinate, so t*p in total at level t.
    """
    p = oracle.modulus.p
    t = oracle.level
    width = t + 1
    found = []
    for i in range(1, width):
        hit = None
        for x in range(p):
            probe = [0] * width
            probe[0] = x
            probe[i] = p - 1
            if oracle.query_coords(tuple(probe)) == 1:
                hit = x
                break
        if hit is None:
            raise DishonestOracleError(f"no candidate for coordinate {i} accepted")
        found.append(hit)
    return NormalVector((1, *found), oracle.modulus)


def dlog_given_secret(secret, g: GroupElement, h: GroupElement) -> Residue:
    """Discrete logarithm once the level-1 secret is known: label(h)/label(g).

    Costs zero oracle queries; the labels are computed from the secret.
    """
    s = secret.value if isinstance(secret, Residue) else secret
    modulus = g.modulus
    p = modulus.p
    fg = (g.coords[0] + g.coords[1] * s) % p
    if fg == 0:
        raise NotAGeneratorError("g has label zero under the recovered secret")
    fh = (h.coords[0] + h.coords[1] * s) % p
    return Residue(fh * _inv_int(fg, p), modulus)


def cdh_given_secret(secret, inst: DHInstance) -> GroupElement:
    """CDH answer once the level-1 secret is known.

    Returns the canonical representative of label(h)*label(k)/label(g).
    """
    s = secret.value if isinstance(secret, Residue) else secret
    modulus = inst.modulus
    p = modulus.p
    fg = (inst.g.coords[0] + inst.g.coords[1] * s) % p
    if fg == 0:
        raise NotAGeneratorError("g has label zero under the recovered secret")
    fh = (inst.h.coords[0] + inst.h.coords[1] * s) % p
    fk = (inst.k.coords[0] + inst.k.coords[1] * s) % p
    return canonical_element(modulus, fh * fk * _inv_int(fg, p), 1)


def lift_element(h: GroupElement) -> GroupElement:
    return GroupElement(h.coords + (0,), h.modulus)


def lift_instance(inst: DHInstance) -> DHInstance:
    """Append a zero coordinate to every element: a level-(t+1) instance.

    DH-quadruple status is preserved in both directions when the oracle is
    lifted the same way (the new coordinate never contributes to labels).
    """
    return DHInstance(
        lift_element(inst.g),
        lift_element(inst.h),
        lift_element(inst.k),
        None if inst.l is None else lift_element(inst.l),
    )


def project_cdh_answer(l_star: GroupElement) -> GroupElement:
    """Drop the last coordinate of a lifted CDH answer."""
    if l_star.level < 2:
        raise ValueError("projection needs a level >= 2 element")
    return GroupElement(l_star.coords[:-1], l_star.modulus)


class LiftedOracle:
    """Identity oracle one level up, simulated by the base oracle.

    The lifted hidden vector is the base vector with a zero appended, so
    dropping the last query coordinate and asking the base oracle gives
    exactly the lifted answer.  Each query costs one base query and the
    counter is shared.
    """

    __slots__ = ("_base",)

    def __init__(self, base):
        self._base = base

    @property
    def modulus(self) -> PrimeModulus:
        return self._base.modulus

    @property
    def level(self) -> int:
        return self._base.level + 1

    @property
    def queries(self) -> int:
        return self._base.queries

    def query_coords(self, coords) -> int:
        if len(coords) != self.level + 1:
            raise ValueError(
                f"dimension mismatch: oracle level {self.level}, "
                f"query has {len(coords)} coordinates"
            )
        return self._base.query_coords(tuple(coords[:-1]))

    def query(self, h: GroupElement) -> int:
        if h.modulus.p != self.modulus.p:
            raise ValueError(f"modulus mismatch: {h.modulus.p} vs {self.modulus.p}")
        return self.query_coords(h.coords)

    def reveal_hidden(self, escrow: Escrow) -> NormalVector:
        base = self._base.reveal_hidden(escrow)
        return NormalVector(base.coords + (0,), base.modulus)


def lift_oracle(oracle) -> LiftedOracle:
    return LiftedOracle(oracle)


class EmbeddedOracle:
    """Identity oracle over Z_p^4 built from a prime-order subgroup mod q.

    Four subgroup elements (the DDH input) become the exponent maps
    x -> g_i^x; the oracle answers whether the product of the four mapped
    coordinates is the unit.  Writing g_i = g_1^(a_i), that product is
    g_1 raised to the scalar product of the query with (1, a_2, a_3, a_4),
    so this is an identity black-box group whose hidden vector encodes
    the exponents.  Each query costs O(log p) counted modular
    multiplications plus one comparison with the unit.
    """

    __slots__ = ("modulus", "q", "generators", "_queries", "mults")

    def __init__(self, modulus: PrimeModulus, q: int, generators: Tuple[int, int, int, int]):
        p = modulus.p
        if not is_prime(q):
            raise ValueError(f"{q} is not prime")
        if (q - 1) % p != 0:
            raise ValueError(f"{p} does not divide {q} - 1")
        gens = tuple(g % q for g in generators)
        if len(gens) != 4:
            raise ValueError("exactly four subgroup elements required")
        for g in gens:
            if g == 0 or pow(g, p, q) != 1:
                raise ValueError(f"{g} does not lie in the order-{p} subgroup mod {q}")
        if gens[0] == 1:
            raise ValueError("the first element must generate the subgroup")
        self.modulus = modulus
        self.q = q
        self.generators = gens
        self._queries = 0
        self.mults = 0

    @property
    def level(self) -> int:
        return 3

    @property
    def queries(self) -> int:
        return self._queries

    def _pow_counted(self, base: int, exp: int) -> int:
        # Square-and-multiply over the binary expansion, counting each
        # modular multiplication.
        q = self.q
        result = 1
        b = base
        while exp:
            if exp & 1:
                result = result * b % q
                self.mults += 1
            exp >>= 1
            if exp:
                b = b * b % q
                self.mults += 1
        return result

    def query_coords(self, coords) -> int:
        if len(coords) != 4:
            raise ValueError(f"4 coordinates required, got {len(coords)}")
        self._queries += 1
        p = self.modulus.p
        acc = 1
        for g, x in zip(self.generators, coords):
            acc = acc * self._pow_counted(g, x % p) % self.q
            self.mults += 1
        return 1 if acc == 1 else 0

    def query(self, h: GroupElement) -> int:
        if h.modulus.p != self.modulus.p:
            raise ValueError(f"modulus mismatch: {h.modulus.p} vs {self.modulus.p}")
        return self.query_coords(h.coords)

    def reveal_hidden(self, escrow: Escrow) -> NormalVector:
        """Exponents of the subgroup elements, by direct scan (test only)."""
        _check_escrow(escrow)
        g1 = self.generators[0]
        p = self.modulus.p
        table = {}
        acc = 1
        for e in range(p):
            table[acc] = e
            acc = acc * g1 % self.q
        exps = tuple(table[g] for g in self.generators[1:])
        return NormalVector((1,) + exps, self.modulus)


def embed_generic_group(modulus: PrimeModulus, q: int, generators: Tuple[int, int, int, int]):
    """Embed a DDH input from a multiplicative prime-order subgroup.

    Returns the constructed oracle over Z_p^4 together with the
    unit-vector instance, whose DH-quadruple status in the constructed
    group equals the DDH status of the four subgroup elements.
    """
    oracle = EmbeddedOracle(modulus, q, generators)
    units = []
    for i in range(4):
        c = [0, 0, 0, 0]
        c[i] = 1
        units.append(GroupElement(tuple(c), modulus))
    inst = DHInstance(units[0], units[1], units[2], units[3])
    return oracle, inst


def ddh_decide_by_search(oracle, inst: DHInstance) -> int:
    """Decide DDH at any level by exhaustive recovery of the hidden vector.

    Costs at most t*p queries; the generic upper bound that works where
    no polynomial decision is available.
    """
    if inst.l is None:
        raise ValueError("DDH needs a full quadruple, l is missing")
    inst.check()
    n = brute_force_hidden_vector(oracle)
    p = n.modulus.p
    fg = coset_label(n, inst.g).value
    if fg == 0:
        raise NotAGeneratorError("DDH instance with non-generator g")
    fh = coset_label(n, inst.h).value
    fk = coset_label(n, inst.k).value
    fl = coset_label(n, inst.l).value
    return 1 if fg * fl % p == fh * fk % p else 0

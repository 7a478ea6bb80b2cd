"""Rota-Baxter systems on finite semigroups, monoids and groups.

A pair of self-maps ``(b1, b2)`` of a carrier ``G`` is a Rota-Baxter system
when for all ``a, b``::

    b1(a) b1(b) = b1(b1(a) b b2(a))        # "1a"
    b2(b) b2(a) = b2(b1(a) b b2(a))        # "1b"

The descendent operation is ``a∘b = b1(a) b b2(a)`` and the cocycle is
``phi(a) = b1(a) b2(a)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .tables import (
    MulTable,
    OperatorMap,
    Subset,
    TableError,
    center,
    direct_sum,
    find_associativity_failure,
    invert_map,
    is_anti_hom,
    is_bijective,
    is_hom,
    is_subgroup,
    subset,
    validate_table,
)


class RbsError(Exception):
    pass


class TheoremViolation(AssertionError):
    """A statement that the theory guarantees did not hold; always a bug."""


@dataclass(frozen=True)
class Violation:
    eq: str
    a: int
    b: int
    c: int | None = None

    def to_dict(self) -> dict:
        return {"eq": self.eq, "a": self.a, "b": self.b, "c": self.c}


class RbsViolation(RbsError):
    def __init__(self, violations: list[Violation]):
        self.violations = violations
        v = violations[0]
        super().__init__(f"eq {v.eq} fails at a={v.a}, b={v.b}")


class NotRbOperator(RbsError):
    pass


class NotUniqueFactorization(RbsError):
    def __init__(self, element: int, count: int):
        self.element = element
        self.count = count
        super().__init__(f"element {element} has {count} factorizations")


class NotHomomorphism(RbsError):
    pass


class TwistedViolation(RbsError):
    def __init__(self, a: int, b: int):
        self.a, self.b = a, b
        super().__init__(f"twisted identity fails at a={a}, b={b}")


class NotAssociativeDescendent(RbsError):
    def __init__(self, triple: tuple[int, int, int]):
        self.triple = triple
        super().__init__(f"descendent operation not associative at {triple}")


class PreconditionFailed(RbsError):
    pass


class CocycleNotBijective(RbsError):
    pass


def require(cond: bool, msg: str) -> None:
    if not cond:
        raise TheoremViolation(msg)


def _as_map(G: MulTable, f: Sequence[int], name: str) -> OperatorMap:
    f = tuple(f)
    if len(f) != G.order or any(not 0 <= x < G.order for x in f):
        raise RbsError(f"{name} is not a self-map of a carrier of order {G.order}")
    return f


def descendent_table(G: MulTable, b1: Sequence[int], b2: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    t = G.table
    return tuple(tuple(t[t[b1[a]][b]][b2[a]] for b in G.elements) for a in G.elements)


def cocycle(G: MulTable, b1: Sequence[int], b2: Sequence[int]) -> OperatorMap:
    return tuple(G.mul(b1[a], b2[a]) for a in G.elements)


@dataclass(frozen=True)
class RbsInstance:
    carrier: MulTable
    b1: OperatorMap
    b2: OperatorMap
    circ: MulTable
    phi: OperatorMap
    e_map: OperatorMap | None
    dagger: OperatorMap | None
    verified: bool = False

    @property
    def G(self) -> MulTable:
        return self.carrier

    def o(self, a: int, b: int) -> int:
        return self.circ.table[a][b]

    @property
    def one(self) -> int:
        return self.carrier.identity


def make_instance(G: MulTable, b1: Sequence[int], b2: Sequence[int], verified: bool = False) -> RbsInstance:
    b1 = _as_map(G, b1, "b1")
    b2 = _as_map(G, b2, "b2")
    circ = validate_table(descendent_table(G, b1, b2), "magma", name="circ")
    if verified:
        # RBS forces associativity; record it in the kind
        circ = MulTable(circ.order, circ.table, "semigroup", circ.identity, circ.inverses, "circ")
    e_map = dagger = None
    if G.is_group:
        inv = G.inv
        e_map = tuple(G.prod(inv(b1[a]), a, inv(b2[a])) for a in G.elements)
        dagger = tuple(G.prod(inv(b1[a]), e_map[a], inv(b2[a])) for a in G.elements)
    return RbsInstance(G, b1, b2, circ, cocycle(G, b1, b2), e_map, dagger, verified)


# -- verification -----------------------------------------------------------


def check_rbs(G: MulTable, b1: Sequence[int], b2: Sequence[int], first_only: bool = True) -> list[Violation]:
    """Violations of 1a/1b in row-major (a, b) order, 1a before 1b at each pair."""
    t = G.table
    out = []
    for a in G.elements:
        x1, x2 = b1[a], b2[a]
        for b in G.elements:
            x = t[t[x1][b]][x2]
            if t[x1][b1[b]] != b1[x]:
                out.append(Violation("1a", a, b))
                if first_only:
                    return out
            if t[b2[b]][x2] != b2[x]:
                out.append(Violation("1b", a, b))
                if first_only:
                    return out
    return out


def is_rbs(G: MulTable, b1: Sequence[int], b2: Sequence[int]) -> bool:
    return not check_rbs(G, b1, b2)


def verify_rbs(G: MulTable, b1: Sequence[int], b2: Sequence[int], all_violations: bool = False) -> RbsInstance:
    """Return a verified instance or raise RbsViolation."""
    if G.kind == "magma":
        raise RbsError("carrier must be at least a semigroup")
    b1 = _as_map(G, b1, "b1")
    b2 = _as_map(G, b2, "b2")
    bad = check_rbs(G, b1, b2, first_only=not all_violations)
    if bad:
        raise RbsViolation(bad)
    return make_instance(G, b1, b2, verified=True)


def verify_group_rb_operator(G: MulTable, B: Sequence[int], weight: int) -> bool:
    """Weight 1: B(a)B(b) = B(a B(a) b B(a)^-1); weight -1: C(a)C(b) = C(C(a) b C(a)^-1 a)."""
    if weight not in (1, -1):
        raise ValueError("weight must be +1 or -1")
    inv = G.inv
    for a in G.elements:
        Ba = B[a]
        for b in G.elements:
            if weight == 1:
                x = G.prod(a, Ba, b, inv(Ba))
            else:
                x = G.prod(Ba, b, inv(Ba), a)
            if G.mul(Ba, B[b]) != B[x]:
                return False
    return True


# -- constructions ------------------------------------------------------------


def from_rb_group(G: MulTable, B: Sequence[int]) -> RbsInstance:
    """``b1(a) = a B(a)``, ``b2(a) = B(a)^-1`` for a weight-1 operator B."""
    if not verify_group_rb_operator(G, B, 1):
        raise NotRbOperator("B is not a Rota-Baxter operator of weight 1")
    b1 = tuple(G.mul(a, B[a]) for a in G.elements)
    b2 = tuple(G.inv(B[a]) for a in G.elements)
    return verify_rbs(G, b1, b2)


def from_factorization(G: MulTable, G1: Subset | Sequence[int], G2: Subset | Sequence[int]) -> RbsInstance:
    """Operators from a unique factorization ``a = a1 a2`` with a1 ∈ G1, a2 ∈ G2."""
    s1, s2 = sorted(set(G1)), sorted(set(G2))
    for which, s in (("G1", s1), ("G2", s2)):
        if any(G.mul(x, y) not in s for x in s for y in s):
            raise RbsError(f"{which} is not a subsemigroup")
    factors: dict[int, list[tuple[int, int]]] = {a: [] for a in G.elements}
    for x in s1:
        for y in s2:
            factors[G.mul(x, y)].append((x, y))
    for a in G.elements:
        if len(factors[a]) != 1:
            raise NotUniqueFactorization(a, len(factors[a]))
    b1 = tuple(factors[a][0][0] for a in G.elements)
    b2 = tuple(factors[a][0][1] for a in G.elements)
    return verify_rbs(G, b1, b2)


def twisted_violation(G: MulTable, B: Sequence[int], twist: Sequence[int]) -> tuple[int, int] | None:
    for a in G.elements:
        Ba = B[a]
        tail = twist[G.inv(Ba)]
        for b in G.elements:
            if G.mul(Ba, B[b]) != B[G.prod(Ba, b, tail)]:
                return (a, b)
    return None


def verify_twisted_rb(G: MulTable, B: Sequence[int], twist: Sequence[int]) -> bool:
    """Whether ``B(a)B(b) = B(B(a) b twist(B(a)^-1))``; the twist must be a homomorphism."""
    if not is_hom(twist, G, G):
        raise NotHomomorphism("twist is not a group homomorphism")
    return twisted_violation(G, B, twist) is None


def from_twisted_rb(G: MulTable, B: Sequence[int], twist: Sequence[int]) -> RbsInstance:
    if not is_hom(twist, G, G):
        raise NotHomomorphism("twist is not a group homomorphism")
    bad = twisted_violation(G, B, twist)
    if bad is not None:
        raise TwistedViolation(*bad)
    b2 = tuple(twist[G.inv(B[a])] for a in G.elements)
    return verify_rbs(G, tuple(B), b2)


def from_direct_product(G: MulTable, H: MulTable) -> RbsInstance:
    """On G×H: ``b1((a, b)) = (a, 1)``, ``b2 ≡ (1, 1)``."""
    for M in (G, H):
        if M.identity is None:
            raise RbsError(f"{M.name or 'factor'} is not a monoid")
    P = direct_sum(G, H)
    nh = H.order
    b1 = tuple((x // nh) * nh + H.identity for x in P.elements)
    b2 = (G.identity * nh + H.identity,) * P.order
    return verify_rbs(P, b1, b2)


# -- descendent operation and skew trusses ----------------------------------


def associativity_witness(G: MulTable, b1: Sequence[int], b2: Sequence[int]) -> tuple[int, int, int] | None:
    return find_associativity_failure(descendent_table(G, b1, b2))


def is_associative_descendent(G: MulTable, b1: Sequence[int], b2: Sequence[int]) -> tuple[bool, tuple[int, int, int] | None]:
    bad = associativity_witness(G, b1, b2)
    return bad is None, bad


def truss_violation(G: MulTable, b1: Sequence[int], b2: Sequence[int]) -> tuple[int, int, int] | None:
    """First (a, b, c) breaking ``a∘(bc) = (a∘b) phi(a)^-1 (a∘c)``."""
    circ = descendent_table(G, b1, b2)
    phi = cocycle(G, b1, b2)
    for a in G.elements:
        pinv = G.inv(phi[a])
        row = circ[a]
        for b in G.elements:
            left = G.mul(row[b], pinv)
            for c in G.elements:
                if row[G.mul(b, c)] != G.mul(left, row[c]):
                    return (a, b, c)
    return None


def verify_skew_truss(G: MulTable, b1: Sequence[int], b2: Sequence[int]) -> bool:
    bad = associativity_witness(G, b1, b2)
    if bad is not None:
        raise NotAssociativeDescendent(bad)
    return truss_violation(G, b1, b2) is None


@dataclass(frozen=True)
class Th1Report:
    lambda_functorial: bool
    mu_functorial: bool
    unit_assoc: bool
    associative: bool


def th1_check(G: MulTable, b1: Sequence[int], b2: Sequence[int]) -> Th1Report:
    """Conjugation actions ``λ_a(b) = b2(a)^-1 b b2(a)``, ``μ_a(b) = b1(a) b b1(a)^-1``.

    Associativity of ∘ holds iff λ is multiplicative with unit associativity,
    iff μ is; the three statements are checked to agree.
    """
    inv, one = G.inv, G.identity
    circ = descendent_table(G, b1, b2)
    lam = [tuple(G.prod(inv(b2[a]), x, b2[a]) for x in G.elements) for a in G.elements]
    mu = [tuple(G.prod(b1[a], x, inv(b1[a])) for x in G.elements) for a in G.elements]

    def functorial(act):
        return all(
            tuple(act[a][act[b][x]] for x in G.elements) == act[circ[a][b]]
            for a in G.elements for b in G.elements
        )

    unit = all(circ[circ[a][b]][one] == circ[a][circ[b][one]] for a in G.elements for b in G.elements)
    report = Th1Report(
        lambda_functorial=functorial(lam),
        mu_functorial=functorial(mu),
        unit_assoc=unit,
        associative=find_associativity_failure(circ) is None,
    )
    require(report.associative == (report.lambda_functorial and report.unit_assoc), f"λ criterion broken: {report}")
    require(report.associative == (report.mu_functorial and report.unit_assoc), f"μ criterion broken: {report}")
    return report


def check_cen(G: MulTable, b1: Sequence[int], b2: Sequence[int]) -> bool:
    """Associative ∘ on a centerless group forces the system axioms."""
    bad = associativity_witness(G, b1, b2)
    if bad is not None:
        raise PreconditionFailed(f"descendent operation not associative at {bad}")
    if len(center(G)) != 1:
        raise PreconditionFailed("center of G is not trivial")
    require(is_rbs(G, b1, b2), "associative pair on a centerless group is not a Rota-Baxter system")
    return True


# -- left identities, division, induced operators -----------------------------


def _need_group(inst: RbsInstance) -> None:
    if not inst.carrier.is_group:
        raise RbsError("operation needs a group carrier")


def left_identity(inst: RbsInstance, a: int) -> int:
    _need_group(inst)
    return inst.e_map[a]


def right_divide(inst: RbsInstance, a: int, b: int) -> int:
    """The unique ``c`` with ``a∘c = b``."""
    _need_group(inst)
    G = inst.carrier
    return G.prod(G.inv(inst.b1[a]), b, G.inv(inst.b2[a]))


def induced_rb_operators(inst: RbsInstance) -> tuple[OperatorMap, OperatorMap]:
    """Weight -1 operator ``b1∘phi^-1`` and weight 1 operator ``a ↦ b2(phi^-1(a))^-1``."""
    _need_group(inst)
    G = inst.carrier
    if not is_bijective(inst.phi):
        raise CocycleNotBijective("cocycle is not bijective")
    pinv = invert_map(inst.phi)
    bneg = tuple(inst.b1[pinv[a]] for a in G.elements)
    bpos = tuple(G.inv(inst.b2[pinv[a]]) for a in G.elements)
    require(verify_group_rb_operator(G, bneg, -1), "induced operator fails weight -1")
    require(verify_group_rb_operator(G, bpos, 1), "induced operator fails weight 1")
    return bneg, bpos


@dataclass(frozen=True)
class GroupReport:
    circ_is_group: bool
    phi_bijective: bool
    identity: int | None


def group_iff_bijective(inst: RbsInstance) -> GroupReport:
    _need_group(inst)
    circ = inst.circ
    is_group = circ.identity is not None and circ.inverses is not None
    report = GroupReport(is_group, is_bijective(inst.phi), circ.identity)
    require(report.circ_is_group == report.phi_bijective, f"group/bijectivity mismatch: {report}")
    return report


def brace_operation(inst: RbsInstance) -> MulTable:
    """``a•b = b1(phi^-1(a)) b b2(phi^-1(a))``; checks the skew brace law.

    The law is ``a•(bc) = (a•b) a^-1 (a•c)`` with ``a^-1`` taken in (G,·).
    """
    _need_group(inst)
    G = inst.carrier
    if not is_bijective(inst.phi):
        raise CocycleNotBijective("cocycle is not bijective")
    pinv = invert_map(inst.phi)
    rows = [[G.prod(inst.b1[pinv[a]], b, inst.b2[pinv[a]]) for b in G.elements] for a in G.elements]
    try:
        bullet = validate_table(rows, "group", name="brace")
    except TableError as exc:
        raise TheoremViolation(f"(G, •) is not a group: {exc}") from exc
    require(bullet.identity == G.identity, "(G, •) and (G, ·) have different identities")
    for a in G.elements:
        ai = G.inv(a)
        for b in G.elements:
            left = G.mul(rows[a][b], ai)
            for c in G.elements:
                require(rows[a][G.mul(b, c)] == G.mul(left, rows[a][c]), f"brace law fails at {(a, b, c)}")
    return bullet


def base_component(inst: RbsInstance) -> tuple[int, ...]:
    """G_1 = {a : a∘e_1 = a}."""
    e1 = inst.e_map[inst.one]
    return tuple(a for a in inst.carrier.elements if inst.o(a, e1) == a)


def proj_to_component(inst: RbsInstance) -> OperatorMap:
    """``a ↦ a∘e_1``, the projection of G onto the base component."""
    e1 = inst.e_map[inst.one]
    return tuple(inst.o(a, e1) for a in inst.carrier.elements)


def base_cocycle_inverse(inst: RbsInstance) -> dict[int, int]:
    """Inverse of the cocycle restricted to the base component, as a lookup."""
    base = base_component(inst)
    table = {inst.phi[a]: a for a in base}
    require(len(table) == len(base) and set(table) == set(base),
            "cocycle is not a bijection of the base component")
    return table


def normalize(inst: RbsInstance) -> RbsInstance:
    """Operators ``c_i(a) = b_i(phi_1^-1(a∘e_1))`` with ``c_i(1) = 1``."""
    _need_group(inst)
    G = inst.carrier
    pinv = base_cocycle_inverse(inst)
    psi = proj_to_component(inst)
    c1 = tuple(inst.b1[pinv[psi[a]]] for a in G.elements)
    c2 = tuple(inst.b2[pinv[psi[a]]] for a in G.elements)
    try:
        out = verify_rbs(G, c1, c2)
    except RbsViolation as exc:
        raise TheoremViolation(f"normalized operators are not a Rota-Baxter system: {exc}") from exc
    one = G.identity
    require(c1[one] == one and c2[one] == one, "normalized operators do not fix the identity")
    require(all(c1[out.phi[a]] == c1[a] and c2[out.phi[a]] == c2[a] for a in G.elements),
            "normalized operators are not invariant under their cocycle")
    return out


def image(f: Sequence[int], G: MulTable) -> Subset:
    return subset(G, set(f))


def kernel(f: Sequence[int], G: MulTable) -> Subset:
    return subset(G, (a for a in G.elements if f[a] == G.identity))


# -- properties used by the theorem suite ------------------------------------


def b1_is_hom(inst: RbsInstance) -> bool:
    return is_hom(inst.b1, inst.circ, inst.carrier)


def b2_is_anti_hom(inst: RbsInstance) -> bool:
    return is_anti_hom(inst.b2, inst.circ, inst.carrier)


def images_are_subgroups(inst: RbsInstance) -> bool:
    G = inst.carrier
    return is_subgroup(G, set(inst.b1)) and is_subgroup(G, set(inst.b2))


def lambda_bijective(inst: RbsInstance) -> bool:
    """Every ``λ_a(b) = phi(a)^-1 (a∘b)`` is a bijection of G."""
    G = inst.carrier
    return all(
        is_bijective([G.mul(G.inv(inst.phi[a]), inst.o(a, b)) for b in G.elements])
        for a in G.elements
    )


def right_divisible(inst: RbsInstance) -> bool:
    G = inst.carrier
    return all(len(set(inst.circ.table[a])) == G.order for a in G.elements)

"""Finite magmas, semigroups, monoids and groups as multiplication tables.

Elements are the dense indices ``0..n-1``; names only live in ``labels``.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterable, Sequence

KINDS = ("magma", "semigroup", "monoid", "group")

OperatorMap = tuple[int, ...]


class TableError(ValueError):
    pass


class NotAssociative(TableError):
    def __init__(self, triple: tuple[int, int, int]):
        self.triple = triple
        super().__init__(f"not associative at (a, b, c) = {triple}")


class NoIdentity(TableError):
    pass


class NotInvertible(TableError):
    def __init__(self, element: int):
        self.element = element
        super().__init__(f"element {element} has no two-sided inverse")


class NotSubgroup(TableError):
    pass


class NotNormal(TableError):
    pass


@dataclass(frozen=True)
class MulTable:
    order: int
    table: tuple[tuple[int, ...], ...]
    kind: str = "magma"
    identity: int | None = None
    inverses: tuple[int, ...] | None = None
    name: str = ""
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        if self.inverses is None:
            raise NotInvertible(a)
        return self.inverses[a]

    def prod(self, *xs: int) -> int:
        acc = xs[0]
        for x in xs[1:]:
            acc = self.table[acc][x]
        return acc

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def is_group(self) -> bool:
        return self.kind == "group"

    def digest(self) -> str:
        h = hashlib.sha256(repr(self.table).encode()).hexdigest()[:16]
        return f"{self.order}:{h}"

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)


@dataclass(frozen=True)
class Subset:
    """A sorted, duplicate-free set of elements of ``carrier``."""

    carrier: MulTable
    members: tuple[int, ...]
    _set: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        ms = tuple(sorted(set(self.members)))
        for m in ms:
            if not 0 <= m < self.carrier.order:
                raise TableError(f"member {m} out of range for order {self.carrier.order}")
        object.__setattr__(self, "members", ms)
        object.__setattr__(self, "_set", frozenset(ms))

    def __contains__(self, a: int) -> bool:
        return a in self._set

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def index(self, a: int) -> int:
        return self.members.index(a)


def subset(G: MulTable, members: Iterable[int]) -> Subset:
    return Subset(G, tuple(members))


# -- validation ---------------------------------------------------------------


def find_associativity_failure(table: Sequence[Sequence[int]]) -> tuple[int, int, int] | None:
    n = len(table)
    for a in range(n):
        row_a = table[a]
        for b in range(n):
            ab = row_a[b]
            row_ab = table[ab]
            row_b = table[b]
            for c in range(n):
                if row_ab[c] != row_a[row_b[c]]:
                    return (a, b, c)
    return None


def find_identity(table: Sequence[Sequence[int]]) -> int | None:
    n = len(table)
    candidates = [
        e for e in range(n)
        if all(table[e][a] == a and table[a][e] == a for a in range(n))
    ]
    if len(candidates) > 1:
        raise NoIdentity(f"several identity candidates {candidates}")
    return candidates[0] if candidates else None


def find_inverses(table: Sequence[Sequence[int]], e: int) -> tuple[list[int | None], int | None]:
    """Two-sided inverses; returns the inverse list and the first non-invertible element."""
    n = len(table)
    inverses: list[int | None] = [None] * n
    bad = None
    for a in range(n):
        for b in range(n):
            if table[a][b] == e and table[b][a] == e:
                inverses[a] = b
                break
        else:
            if bad is None:
                bad = a
    return inverses, bad


def validate_table(
    table: Sequence[Sequence[int]],
    kind: str = "group",
    *,
    name: str = "",
    labels: Sequence[str] | None = None,
) -> MulTable:
    """Check the claimed ``kind`` and return an immutable table.

    Identity and inverses are filled in whenever they exist, even when the
    claimed kind does not require them.
    """
    if kind not in KINDS:
        raise TableError(f"unknown kind {kind!r}")
    n = len(table)
    if n == 0:
        raise TableError("empty table")
    for i, row in enumerate(table):
        if len(row) != n:
            raise TableError(f"row {i} has length {len(row)}, expected {n}")
        for j, x in enumerate(row):
            if not isinstance(x, int) or not 0 <= x < n:
                raise TableError(f"entry [{i}][{j}] = {x!r} out of range")
    if labels is not None and len(labels) != n:
        raise TableError(f"{len(labels)} labels for order {n}")
    t = tuple(tuple(row) for row in table)

    if kind != "magma":
        bad = find_associativity_failure(t)
        if bad is not None:
            raise NotAssociative(bad)
    identity = find_identity(t)
    if identity is None and kind in ("monoid", "group"):
        raise NoIdentity("no two-sided identity")
    inverses = None
    if identity is not None:
        inv, bad_elem = find_inverses(t, identity)
        if bad_elem is None:
            inverses = tuple(inv)
        elif kind == "group":
            raise NotInvertible(bad_elem)
    return MulTable(
        order=n,
        table=t,
        kind=kind,
        identity=identity,
        inverses=inverses,
        name=name,
        labels=tuple(labels) if labels is not None else None,
    )


def is_latin_square(G: MulTable) -> bool:
    n = G.order
    full = set(range(n))
    return all(set(row) == full for row in G.table) and all(
        {G.table[a][b] for a in range(n)} == full for b in range(n)
    )


# -- standard carriers -------------------------------------------------------


def cyclic(n: int) -> MulTable:
    return validate_table([[(a + b) % n for b in range(n)] for a in range(n)], "group", name=f"Z{n}")


def trivial() -> MulTable:
    return validate_table([[0]], "group", name="1")


def klein() -> MulTable:
    return validate_table([[a ^ b for b in range(4)] for a in range(4)], "group", name="V4")


def from_permutations(perms: Sequence[Sequence[int]], name: str = "") -> MulTable:
    """Group table of a list of permutations closed under composition.

    The product is ``(p*q)(x) = p(q(x))``.
    """
    perms = [tuple(p) for p in perms]
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[x] for x in q)] for q in perms] for p in perms]
    labels = ["".join(str(x + 1) for x in p) for p in perms]
    return validate_table(table, "group", name=name, labels=labels)


def symmetric(k: int) -> MulTable:
    """S_k on the permutations of ``range(k)`` in lexicographic order (identity is 0)."""
    return from_permutations(list(permutations(range(k))), name=f"S{k}")


def dihedral(m: int) -> MulTable:
    """Dihedral group of order 2m; element r^i s^j has index i + m*j."""
    def mul(x, y):
        i1, j1 = x % m, x // m
        i2, j2 = y % m, y // m
        i = (i1 + (i2 if j1 == 0 else -i2)) % m
        return i + m * ((j1 + j2) % 2)

    n = 2 * m
    return validate_table([[mul(a, b) for b in range(n)] for a in range(n)], "group", name=f"D{m}")


def opposite(G: MulTable) -> MulTable:
    n = G.order
    return validate_table(
        [[G.table[b][a] for b in range(n)] for a in range(n)], G.kind, name=f"{G.name}^op"
    )


# -- subobjects ---------------------------------------------------------------


def center(G: MulTable) -> Subset:
    return subset(G, (z for z in G.elements if all(G.mul(z, a) == G.mul(a, z) for a in G.elements)))


def is_closed(G: MulTable, S: Iterable[int]) -> bool:
    s = set(S)
    return all(G.mul(a, b) in s for a in s for b in s)


def is_subgroup(G: MulTable, S: Subset | Iterable[int]) -> bool:
    s = set(S)
    if not s or G.identity is None or G.identity not in s:
        return False
    if not is_closed(G, s):
        return False
    return all(G.inverses is not None and G.inverses[a] in s for a in s)


def is_normal(G: MulTable, S: Subset | Iterable[int], ambient: Iterable[int] | None = None) -> bool:
    """``S`` is a subgroup and ``gSg^-1 ⊆ S`` for every ``g`` of ``ambient`` (default: all of G)."""
    s = set(S)
    if not is_subgroup(G, s):
        return False
    amb = G.elements if ambient is None else list(ambient)
    return all(G.prod(g, x, G.inv(g)) in s for g in amb for x in s)


def generated(G: MulTable, gens: Iterable[int]) -> Subset:
    """Closure of ``gens`` (plus the identity, if any) under the product."""
    members = set(gens)
    if G.identity is not None:
        members.add(G.identity)
    frontier = list(members)
    while frontier:
        new = []
        for a in frontier:
            for b in list(members):
                for c in (G.mul(a, b), G.mul(b, a)):
                    if c not in members:
                        members.add(c)
                        new.append(c)
        frontier = new
    return subset(G, members)


def restrict(op: Sequence[Sequence[int]], members: Sequence[int], kind: str = "magma",
             name: str = "") -> MulTable:
    """Table of ``op`` restricted to ``members``, re-indexed by position.

    Raises TableError when the subset is not closed under ``op``.
    """
    pos = {m: i for i, m in enumerate(members)}
    rows = []
    for a in members:
        row = []
        for b in members:
            c = op[a][b]
            if c not in pos:
                raise TableError(f"subset not closed: {a}*{b} = {c}")
            row.append(pos[c])
        rows.append(row)
    return validate_table(rows, kind, name=name, labels=[str(m) for m in members])


@dataclass(frozen=True)
class QuotientGroup:
    parent: Subset
    normal: Subset
    cosets: tuple[tuple[int, ...], ...]
    table: MulTable
    rep: tuple[int, ...]
    coset_of: dict[int, int] = field(compare=False, hash=False)

    def project(self, a: int) -> int:
        return self.coset_of[a]


def quotient(ambient: Subset, N: Subset) -> QuotientGroup:
    """Cosets of ``N`` in ``ambient``, ordered by their smallest member."""
    G = ambient.carrier
    if not is_subgroup(G, ambient):
        raise NotSubgroup("ambient is not a subgroup")
    if not set(N) <= set(ambient) or not is_normal(G, N, ambient):
        raise NotNormal("N is not a normal subgroup of the ambient subgroup")
    coset_of: dict[int, int] = {}
    cosets = []
    for g in ambient:
        if g in coset_of:
            continue
        coset = tuple(sorted({G.mul(g, x) for x in N}))
        for x in coset:
            coset_of[x] = len(cosets)
        cosets.append(coset)
    rep = tuple(c[0] for c in cosets)
    table = [[coset_of[G.mul(rep[i], rep[j])] for j in range(len(cosets))] for i in range(len(cosets))]
    return QuotientGroup(
        parent=ambient,
        normal=N,
        cosets=tuple(cosets),
        table=validate_table(table, "group", name="quotient"),
        rep=rep,
        coset_of=coset_of,
    )


# -- products -----------------------------------------------------------------


def _weakest(*kinds: str) -> str:
    return KINDS[min(KINDS.index(k) for k in kinds)]


def pair_index(i: int, j: int, n2: int) -> int:
    return i * n2 + j


def pair_split(x: int, n2: int) -> tuple[int, int]:
    return divmod(x, n2)


def twisted_product(G1: Subset, G2: Subset) -> MulTable:
    """``(a1, a2)·(b1, b2) = (a1 b1, b2 a2)`` on pairs of members.

    The pair of the i-th member of G1 and the j-th member of G2 is encoded as
    ``i*len(G2) + j``; label ``"a1,a2"`` holds the carrier elements.
    """
    G = G1.carrier
    if G2.carrier is not G and G2.carrier != G:
        raise NotSubgroup("G1 and G2 live in different carriers")
    for which, S in (("G1", G1), ("G2", G2)):
        if not is_subgroup(G, S):
            raise NotSubgroup(f"{which} is not a subgroup")
    m1, m2 = G1.members, G2.members
    p1 = {a: i for i, a in enumerate(m1)}
    p2 = {a: j for j, a in enumerate(m2)}
    n2 = len(m2)
    rows = []
    for a1, a2 in product(m1, m2):
        row = []
        for b1, b2 in product(m1, m2):
            row.append(pair_index(p1[G.mul(a1, b1)], p2[G.mul(b2, a2)], n2))
        rows.append(row)
    labels = [f"{a1},{a2}" for a1, a2 in product(m1, m2)]
    return validate_table(rows, "group", name="twisted", labels=labels)


def direct_sum(G: MulTable, K: MulTable) -> MulTable:
    """Componentwise product; ``(a, b)`` is encoded as ``a*|K| + b``."""
    nk = K.order
    rows = []
    for a, b in product(G.elements, K.elements):
        rows.append([pair_index(G.mul(a, c), K.mul(b, d), nk) for c, d in product(G.elements, K.elements)])
    labels = [f"({G.label(a)},{K.label(b)})" for a, b in product(G.elements, K.elements)]
    return validate_table(rows, _weakest(G.kind, K.kind), name=f"{G.name}+{K.name}", labels=labels)


# -- morphisms ----------------------------------------------------------------


def is_hom(f: Sequence[int], src: MulTable, dst: MulTable) -> bool:
    return all(f[src.mul(a, b)] == dst.mul(f[a], f[b]) for a in src.elements for b in src.elements)


def is_anti_hom(f: Sequence[int], src: MulTable, dst: MulTable) -> bool:
    return all(f[src.mul(a, b)] == dst.mul(f[b], f[a]) for a in src.elements for b in src.elements)


def is_bijective(f: Sequence[int], codomain_size: int | None = None) -> bool:
    size = len(f) if codomain_size is None else codomain_size
    return len(set(f)) == len(f) == size


def invert_map(f: Sequence[int]) -> OperatorMap:
    inv = [0] * len(f)
    for a, b in enumerate(f):
        inv[b] = a
    return tuple(inv)


def compose(f: Sequence[int], g: Sequence[int]) -> OperatorMap:
    """``f∘g``: first g, then f."""
    return tuple(f[x] for x in g)


def constant_map(G: MulTable, value: int | None = None) -> OperatorMap:
    v = G.identity if value is None else value
    return (v,) * G.order


def identity_map(G: MulTable) -> OperatorMap:
    return tuple(G.elements)


def inversion_map(G: MulTable) -> OperatorMap:
    return tuple(G.inv(a) for a in G.elements)


def automorphisms(G: MulTable) -> list[OperatorMap]:
    """All automorphisms of a group, by backtracking on images of generators."""
    if not G.is_group:
        raise TableError("automorphisms need a group")
    gens: list[int] = []
    span = generated(G, [])
    for a in G.elements:
        if a not in span:
            gens.append(a)
            span = generated(G, gens)
    order_of = [_element_order(G, a) for a in G.elements]
    result = []

    def extend(images: list[int]):
        if len(images) == len(gens):
            f = _hom_from_generators(G, gens, images)
            if f is not None and is_bijective(f):
                result.append(f)
            return
        g = gens[len(images)]
        for x in G.elements:
            if order_of[x] == order_of[g]:
                extend(images + [x])

    extend([])
    return sorted(result)


def _element_order(G: MulTable, a: int) -> int:
    k, x = 1, a
    while x != G.identity:
        x = G.mul(x, a)
        k += 1
    return k


def _hom_from_generators(G: MulTable, gens: list[int], images: list[int]) -> OperatorMap | None:
    f: dict[int, int] = {G.identity: G.identity}
    frontier = [G.identity]
    while frontier:
        new = []
        for a in frontier:
            for g, x in zip(gens, images):
                b = G.mul(a, g)
                y = G.mul(f[a], x)
                if b in f:
                    if f[b] != y:
                        return None
                else:
                    f[b] = y
                    new.append(b)
        frontier = new
    fm = tuple(f[a] for a in G.elements)
    return fm if is_hom(fm, G, G) else None

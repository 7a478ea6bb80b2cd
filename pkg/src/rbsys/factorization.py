"""Cayley transform of a Rota-Baxter system and unique factorization on the base component."""

from __future__ import annotations

from dataclasses import dataclass

from .rbs import (
    RbsError,
    RbsInstance,
    _need_group,
    base_cocycle_inverse,
    base_component,
    image,
    kernel,
    require,
)
from .tables import (
    MulTable,
    QuotientGroup,
    Subset,
    is_bijective,
    is_normal,
    is_subgroup,
    pair_index,
    quotient,
    subset,
    twisted_product,
)


class NotInImage(RbsError):
    pass


@dataclass(frozen=True)
class FactorizationData:
    inst: RbsInstance
    G1: Subset
    G2: Subset
    H1: Subset
    H2: Subset
    Q1: QuotientGroup
    Q2: QuotientGroup
    theta: tuple[int, ...]
    dprod: MulTable
    g_theta: Subset

    def encode(self, a1: int, a2: int) -> int:
        return pair_index(self.G1.index(a1), self.G2.index(a2), len(self.G2))

    def decode(self, x: int) -> tuple[int, int]:
        i, j = divmod(x, len(self.G2))
        return self.G1.members[i], self.G2.members[j]

    def pairs(self) -> list[tuple[int, int]]:
        return [self.decode(x) for x in self.g_theta]

    def to_dict(self) -> dict:
        return {
            "G1": list(self.G1.members),
            "G2": list(self.G2.members),
            "H1": list(self.H1.members),
            "H2": list(self.H2.members),
            "theta": list(self.theta),
            "g_theta": [list(p) for p in self.pairs()],
        }


def _normal_by_division(inst: RbsInstance, ker1: Subset, ker2: Subset, H1: Subset, H2: Subset) -> None:
    """Normality of H1, H2 through the right-division witnesses."""
    G = inst.carrier
    b1, b2 = inst.b1, inst.b2
    inv = G.inv
    h1, h2 = set(H1), set(H2)
    for a in G.elements:
        left2, right2 = set(), set()
        left1, right1 = set(), set()
        for b in ker1:
            c = G.prod(inv(b1[a]), inst.o(b, a), inv(b2[a]))
            require(c in ker1, "division witness leaves Ker b1")
            require(G.mul(b2[c], b2[a]) == G.mul(b2[a], b2[b]), "division witness identity fails for b2")
        for b in ker2:
            c = G.prod(inv(b1[a]), inst.o(b, a), inv(b2[a]))
            require(c in ker2, "division witness leaves Ker b2")
            require(G.mul(b1[a], b1[c]) == G.mul(b1[b], b1[a]), "division witness identity fails for b1")
        for h in h2:
            left2.add(G.mul(b2[a], h))
            right2.add(G.mul(h, b2[a]))
        for h in h1:
            left1.add(G.mul(b1[a], h))
            right1.add(G.mul(h, b1[a]))
        require(left2 <= right2, "b2(a) H2 ⊄ H2 b2(a)")
        require(right1 <= left1, "H1 b1(a) ⊄ b1(a) H1")


def build_factorization(inst: RbsInstance) -> FactorizationData:
    _need_group(inst)
    G = inst.carrier
    b1, b2 = inst.b1, inst.b2
    G1, G2 = image(b1, G), image(b2, G)
    ker1, ker2 = kernel(b1, G), kernel(b2, G)
    H1 = subset(G, (b1[a] for a in ker2))
    H2 = subset(G, (b2[a] for a in ker1))
    require(is_subgroup(G, G1) and is_subgroup(G, G2), "operator images are not subgroups")
    require(is_subgroup(G, H1) and set(H1) <= set(G1), "H1 is not a subgroup of G1")
    require(is_subgroup(G, H2) and set(H2) <= set(G2), "H2 is not a subgroup of G2")
    _normal_by_division(inst, ker1, ker2, H1, H2)
    require(is_normal(G, H1, G1) and is_normal(G, H2, G2), "H_i not normal by conjugation")

    Q1, Q2 = quotient(G1, H1), quotient(G2, H2)
    theta: dict[int, int] = {}
    for a in G.elements:
        x, y = Q1.project(b1[a]), Q2.project(b2[a])
        require(theta.setdefault(x, y) == y, "Cayley transform is not well defined")
    n1 = Q1.table.order
    require(sorted(theta) == list(range(n1)), "Cayley transform is not defined everywhere")
    th = tuple(theta[x] for x in range(n1))
    require(is_bijective(th, Q2.table.order), "Cayley transform is not bijective")
    for x in range(n1):
        for y in range(n1):
            require(th[Q1.table.mul(x, y)] == Q2.table.mul(th[y], th[x]),
                    "Cayley transform is not an anti-homomorphism")

    dprod = twisted_product(G1, G2)
    n2 = len(G2)
    members = [
        pair_index(i, j, n2)
        for i, a1 in enumerate(G1.members)
        for j, a2 in enumerate(G2.members)
        if th[Q1.project(a1)] == Q2.project(a2)
    ]
    g_theta = subset(dprod, members)
    require(is_subgroup(dprod, g_theta), "G_Θ is not a subgroup of the twisted product")
    return FactorizationData(inst, G1, G2, H1, H2, Q1, Q2, th, dprod, g_theta)


def psi_to_gtheta(inst: RbsInstance, fd: FactorizationData) -> dict[int, tuple[int, int]]:
    """``a ↦ (b1(a), b2(a))`` on the base component; checked to be an isomorphism onto G_Θ."""
    base = base_component(inst)
    psi = {a: (inst.b1[a], inst.b2[a]) for a in base}
    enc = {a: fd.encode(*p) for a, p in psi.items()}
    require(all(x in fd.g_theta for x in enc.values()), "image leaves G_Θ")
    require(len(set(enc.values())) == len(base), "map to G_Θ is not injective")
    require(set(enc.values()) == set(fd.g_theta), "map to G_Θ is not surjective")
    for a in base:
        for b in base:
            require(enc[inst.o(a, b)] == fd.dprod.mul(enc[a], enc[b]), "map to G_Θ is not a homomorphism")
    return psi


def factorize_element(inst: RbsInstance, fd: FactorizationData, a: int) -> tuple[int, int]:
    """The unique ``(a1, a2) ∈ G_Θ`` with ``a = a1 a2``; ``a`` must lie in phi(G)."""
    G = inst.carrier
    if a not in set(inst.phi):
        raise NotInImage(f"{a} is not in the image of the cocycle")
    b = base_cocycle_inverse(inst)[a]
    pair = (inst.b1[b], inst.b2[b])
    hits = [p for p in fd.pairs() if G.mul(*p) == a]
    require(hits == [pair], f"factorization of {a} is not unique: {hits}")
    return pair

"""Component groups, the set of left identities and the direct-sum decomposition."""

from __future__ import annotations

from dataclasses import dataclass

from .rbs import (
    NotRbOperator,
    RbsInstance,
    TheoremViolation,
    _need_group,
    base_component,
    base_cocycle_inverse,
    proj_to_component,
    require,
    verify_group_rb_operator,
    verify_rbs,
)
from .tables import (
    MulTable,
    Subset,
    TableError,
    direct_sum,
    is_bijective,
    pair_index,
    restrict,
    subset,
)


@dataclass(frozen=True)
class ComponentDecomposition:
    inst: RbsInstance
    components: tuple[Subset, ...]
    e_classes: Subset
    base: int = 0

    def to_dict(self, opl_ok: bool | None = None) -> dict:
        return {
            "components": [list(c.members) for c in self.components],
            "K": list(self.e_classes.members),
            "base": self.base,
            "opl_ok": opl_ok,
        }


def component_of(inst: RbsInstance, t: int) -> Subset:
    """``G_t = {a : a∘e_t = a}``; checked to equal ``G∘e_t`` and to be a ∘-group."""
    _need_group(inst)
    G = inst.carrier
    et = inst.e_map[t]
    members = [a for a in G.elements if inst.o(a, et) == a]
    require(set(members) == {inst.o(a, et) for a in G.elements}, f"G_{t} differs from G∘e_{t}")
    try:
        grp = restrict(inst.circ.table, members, "group")
    except TableError as exc:
        raise TheoremViolation(f"G_{t} is not a group under ∘: {exc}") from exc
    require(members[grp.identity] == et, f"identity of G_{t} is not e_{t}")
    return subset(G, members)


def partition(inst: RbsInstance) -> ComponentDecomposition:
    """Split G into the components G_t; the base component (containing 1) comes first."""
    _need_group(inst)
    G = inst.carrier
    covered: set[int] = set()
    comps: list[Subset] = []
    for t in G.elements:
        if t in covered:
            continue
        c = component_of(inst, t)
        require(t in c, f"{t} not in its own component")
        require(covered.isdisjoint(c.members), "components overlap")
        covered.update(c.members)
        comps.append(c)
    require(covered == set(G.elements), "components do not cover G")
    base_members = set(base_component(inst))
    base = next(i for i, c in enumerate(comps) if set(c.members) == base_members)
    require(inst.e_map[inst.one] in comps[base], "e_1 is not in the base component")
    comps.insert(0, comps.pop(base))
    K = subset(G, set(inst.e_map))
    return ComponentDecomposition(inst, tuple(comps), K, 0)


def component_iso(inst: RbsInstance, t1: int, t2: int) -> dict[int, int]:
    """``a ↦ a∘e_t2`` from G_t1 onto G_t2, checked to be a ∘-isomorphism."""
    c1, c2 = component_of(inst, t1), component_of(inst, t2)
    e2 = inst.e_map[t2]
    f = {a: inst.o(a, e2) for a in c1}
    require(set(f.values()) == set(c2.members) and len(c1) == len(c2), "component map is not bijective")
    for a in c1:
        for b in c1:
            require(f[inst.o(a, b)] == inst.o(f[a], f[b]), "component map is not a homomorphism")
    require({inst.o(a, b) for a in c1 for b in c2} == set(c2.members), "G_t1∘G_t2 ≠ G_t2")
    return f


def cocycle_image(inst: RbsInstance, t: int) -> Subset:
    """``phi(G_t)``; equals ``phi(G)`` and the base component for every t."""
    G = inst.carrier
    comp = component_of(inst, t)
    img = {inst.phi[a] for a in comp}
    require(img == set(inst.phi), "phi(G_t) ≠ phi(G)")
    require(img == set(base_component(inst)), "phi(G) ≠ G_1")
    base_cocycle_inverse(inst)
    return subset(G, img)


@dataclass(frozen=True)
class OplIsomorphism:
    mapping: tuple[tuple[int, int], ...]
    base: tuple[int, ...]
    K: tuple[int, ...]
    target: MulTable

    def encode(self, pair: tuple[int, int]) -> int:
        return pair_index(self.base.index(pair[0]), self.K.index(pair[1]), len(self.K))


def opl_isomorphism(inst: RbsInstance) -> OplIsomorphism:
    """``a ↦ (a∘e_1, e_a)`` into the componentwise ∘-product of G_1 and K."""
    _need_group(inst)
    G = inst.carrier
    base = base_component(inst)
    K = tuple(sorted(set(inst.e_map)))
    circ = inst.circ.table
    for x in K:
        for y in K:
            require(circ[x][y] == y, "e_a∘e_b ≠ e_b")
    base_table = restrict(circ, base, "group", name="G_1")
    k_table = restrict(circ, K, "semigroup", name="K")
    target = direct_sum(base_table, k_table)
    psi = proj_to_component(inst)
    mapping = tuple((psi[a], inst.e_map[a]) for a in G.elements)
    iso = OplIsomorphism(mapping, base, K, target)
    enc = [iso.encode(p) for p in mapping]
    require(is_bijective(enc, target.order), "a ↦ (a∘e_1, e_a) is not bijective")
    for a in G.elements:
        for b in G.elements:
            require(enc[inst.o(a, b)] == target.mul(enc[a], enc[b]), "a ↦ (a∘e_1, e_a) is not a homomorphism")
    return iso


def build_direct_sum_rbs(G: MulTable, B, K: MulTable) -> RbsInstance:
    """On G⊕K: ``b1((a, k)) = (a B(a), 1)``, ``b2((a, k)) = (B(a)^-1, 1)``."""
    if not verify_group_rb_operator(G, B, 1):
        raise NotRbOperator("B is not a Rota-Baxter operator of weight 1")
    P = direct_sum(G, K)
    nk = K.order
    b1, b2 = [], []
    for x in P.elements:
        a = x // nk
        b1.append(pair_index(G.mul(a, B[a]), K.identity, nk))
        b2.append(pair_index(G.inv(B[a]), K.identity, nk))
    inst = verify_rbs(P, b1, b2)
    require(len(partition(inst).components) == K.order, "direct-sum system has the wrong number of components")
    return inst


def structure_report(inst: RbsInstance) -> dict:
    dec = partition(inst)
    ok = True
    try:
        opl_isomorphism(inst)
    except AssertionError:
        ok = False
    return dec.to_dict(opl_ok=ok)


"""Run every structural statement about a Rota-Baxter system against one instance.

Each check either passes or raises :class:`~rbsys.rbs.TheoremViolation`;
the returned dict maps check names to a short result.
"""

from __future__ import annotations

from typing import Sequence

from .factorization import build_factorization, factorize_element, psi_to_gtheta
from .rbs import (
    RbsInstance,
    base_cocycle_inverse,
    b1_is_hom,
    b2_is_anti_hom,
    brace_operation,
    descendent_table,
    group_iff_bijective,
    images_are_subgroups,
    induced_rb_operators,
    is_associative_descendent,
    is_rbs,
    lambda_bijective,
    normalize,
    proj_to_component,
    require,
    right_divide,
    right_divisible,
    th1_check,
    truss_violation,
)
from .structure import cocycle_image, component_iso, opl_isomorphism, partition
from .tables import MulTable, find_associativity_failure, is_anti_hom, is_hom, validate_table


def hom_equivalence(G: MulTable, b1: Sequence[int], b2: Sequence[int]) -> bool:
    """(i) RBS ⟺ (ii) associative with b1 a hom ⟺ (iii) associative with b2 an anti-hom."""
    rows = descendent_table(G, b1, b2)
    assoc = find_associativity_failure(rows) is None
    i = is_rbs(G, b1, b2)
    ii = iii = False
    if assoc:
        circ = validate_table(rows, "semigroup")
        ii = is_hom(b1, circ, G)
        iii = is_anti_hom(b2, circ, G)
    require(i == ii == iii, f"system / hom / anti-hom criteria disagree: {i} {ii} {iii}")
    return i


def pair_suite(G: MulTable, b1: Sequence[int], b2: Sequence[int]) -> dict:
    """Checks that apply to any pair on a group carrier."""
    out = {"hom": hom_equivalence(G, b1, b2)}
    rep = th1_check(G, b1, b2)
    out["action"] = rep.associative
    if rep.associative:
        require(truss_violation(G, b1, b2) is None, "truss law fails for an associative descendent")
        out["truss"] = True
    return out


def theorem_suite(inst: RbsInstance) -> dict:
    """All checks on a verified instance over a group carrier."""
    require(inst.verified, "theorem suite needs a verified instance")
    G = inst.carrier
    b1, b2, phi = inst.b1, inst.b2, inst.phi
    one = G.identity
    els = list(G.elements)
    out = pair_suite(G, b1, b2)
    require(out["hom"] and out["action"], "verified instance fails the hom or action criteria")
    require(b1_is_hom(inst) and b2_is_anti_hom(inst), "b1 hom / b2 anti-hom fails")
    require(is_associative_descendent(G, b1, b2)[0], "descendent operation not associative")

    # Φ(a∘b) = a∘Φ(b)
    require(all(phi[inst.o(a, b)] == inst.o(a, phi[b]) for a in els for b in els), "phi(a∘b) != a∘phi(b)")
    out["cocycle_equivariant"] = True

    # left identities e_a with b_i(e_a) = 1
    for a in els:
        e = inst.e_map[a]
        require(all(inst.o(e, b) == b for b in els), f"e_{a} is not a left identity")
        require(b1[e] == one and b2[e] == one, f"b_i(e_{a}) != 1")
    out["left_identities"] = True

    # unique right division, and its λ-criterion
    for a in els:
        for b in els:
            c = right_divide(inst, a, b)
            require(inst.o(a, c) == b, "right division fails")
    require(right_divisible(inst), "∘ is not right divisible")
    require(right_divisible(inst) == lambda_bijective(inst), "λ bijectivity disagrees with divisibility")
    out["right_division"] = True

    for a in els:
        d = inst.dagger[a]
        require(b1[d] == G.inv(b1[a]) and b2[d] == G.inv(b2[a]), f"dagger identity fails at {a}")
    out["dagger"] = True

    require(images_are_subgroups(inst), "operator images are not subgroups")
    out["images_subgroups"] = True

    for a in els:
        require((phi[a] == one) == (b1[a] == one and b2[a] == one), f"phi(a) = 1 does not match b1(a) = b2(a) = 1 at {a}")
    out["cocycle_kernel"] = True

    # components, K and the decomposition of (G, ∘)
    dec = partition(inst)
    comps = dec.components
    reps = [c.members[0] for c in comps]
    for t1 in reps:
        for t2 in reps:
            component_iso(inst, t1, t2)
    for t in reps:
        cocycle_image(inst, t)
    opl_isomorphism(inst)
    require(G.order == len(comps[0]) * len(dec.e_classes), "|G| != |G_1|·|K|")
    out["components"] = len(comps)

    psi = proj_to_component(inst)
    pinv = base_cocycle_inverse(inst)
    for a in els:
        require(b1[psi[a]] == b1[a] and b2[psi[a]] == b2[a], "b_i(a∘e_1) != b_i(a)")
        require(pinv[phi[a]] == psi[a], "phi_1^-1(phi(a)) != a∘e_1")

    norm = normalize(inst)
    require(norm.phi == proj_to_component(norm), "normalized cocycle differs from a ↦ a∘e_1")
    out["normalized"] = True

    fd = build_factorization(inst)
    psi_to_gtheta(inst, fd)
    for a in sorted(set(phi)):
        pair = factorize_element(inst, fd, a)
        require(G.mul(*pair) == a, "factorization does not multiply back")
    for b in els:
        c = psi[b]
        require(factorize_element(inst, fd, phi[b]) == (b1[c], b2[c]), "factorization depends on the preimage")
    out["factorization"] = len(fd.g_theta)

    rep = group_iff_bijective(inst)
    out["phi_bijective"] = rep.phi_bijective
    if rep.phi_bijective:
        induced_rb_operators(inst)
        brace_operation(inst)
    return out

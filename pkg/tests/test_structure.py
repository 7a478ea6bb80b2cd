import pytest

from conftest import A3, REFL12
from rbsys import rbs as R
from rbsys import search
from rbsys import structure as S
from rbsys import tables as T

SWAP, ZERO2 = (1, 0), (0, 0)


@pytest.fixture(scope="module")
def zero_inst(z2):
    return R.verify_rbs(z2, ZERO2, ZERO2)


@pytest.fixture(scope="module")
def swap_inst(z2):
    return R.verify_rbs(z2, SWAP, ZERO2)


def test_components(zero_inst, swap_inst):
    assert list(S.component_of(zero_inst, 0)) == [0]
    assert list(S.component_of(swap_inst, 0)) == [0, 1]
    for inst in (zero_inst, swap_inst):
        for t in (0, 1):
            assert inst.e_map[t] in S.component_of(inst, t)


def test_partition(zero_inst, swap_inst, s3):
    dec = S.partition(zero_inst)
    assert [list(c) for c in dec.components] == [[0], [1]]
    assert list(dec.e_classes) == [0, 1] and dec.base == 0
    dec = S.partition(swap_inst)
    assert [list(c) for c in dec.components] == [[0, 1]] and list(dec.e_classes) == [1]
    dec = S.partition(R.from_factorization(s3, A3, REFL12))
    assert len(dec.components) == 1


def test_component_iso(zero_inst, swap_inst):
    assert S.component_iso(zero_inst, 0, 1) == {0: 1}
    assert S.component_iso(swap_inst, 0, 0) == {0: 0, 1: 1}


def test_component_isos_compose_over_catalogs():
    for G in (T.cyclic(2), T.cyclic(4), T.klein()):
        for b1, b2 in search.enumerate_pruned(G, "rbs").entries:
            inst = R.verify_rbs(G, b1, b2)
            reps = [c.members[0] for c in S.partition(inst).components]
            for t1 in reps:
                for t2 in reps:
                    f12 = S.component_iso(inst, t1, t2)
                    for t3 in reps:
                        f23, f13 = S.component_iso(inst, t2, t3), S.component_iso(inst, t1, t3)
                        assert {a: f23[f12[a]] for a in f12} == f13


def test_cocycle_image(zero_inst, swap_inst):
    assert list(S.cocycle_image(zero_inst, 0)) == [0]
    assert list(S.cocycle_image(zero_inst, 1)) == [0]
    for t in (0, 1):
        assert list(S.cocycle_image(swap_inst, t)) == [0, 1]


def test_opl_isomorphism(zero_inst, swap_inst):
    iso = S.opl_isomorphism(zero_inst)
    assert iso.mapping == ((0, 0), (0, 1)) and iso.base == (0,) and iso.K == (0, 1)
    iso = S.opl_isomorphism(swap_inst)
    assert iso.K == (1,) and iso.mapping == ((0, 1), (1, 1))


def test_cardinality_over_catalogs():
    for G in (T.cyclic(3), T.klein()):
        for b1, b2 in search.enumerate_pruned(G, "rbs").entries:
            iso = S.opl_isomorphism(R.verify_rbs(G, b1, b2))
            assert G.order == len(iso.base) * len(iso.K)


def test_direct_sum_construction(z2, z3):
    inst = S.build_direct_sum_rbs(z3, T.constant_map(z3), z2)
    assert inst.carrier.order == 6 and len(S.partition(inst).components) == 2


def test_direct_sum_with_trivial_factor(z3):
    inst = S.build_direct_sum_rbs(z3, T.constant_map(z3), T.trivial())
    ref = R.from_rb_group(z3, T.constant_map(z3))
    assert (inst.b1, inst.b2) == (ref.b1, ref.b2)


def test_direct_sum_over_trivial_group(z2):
    inst = S.build_direct_sum_rbs(T.trivial(), (0,), z2)
    assert inst.b1 == inst.b2 == (0, 0)
    assert [list(c) for c in S.partition(inst).components] == [[0], [1]]


def test_direct_sum_needs_rb_operator(z2, s3):
    with pytest.raises(R.NotRbOperator):
        S.build_direct_sum_rbs(s3, tuple(range(6)), z2)


def test_structure_report(zero_inst):
    assert S.structure_report(zero_inst) == {"components": [[0], [1]], "K": [0, 1], "base": 0, "opl_ok": True}


def test_projection_properties(s3):
    for inst in (R.from_factorization(s3, A3, REFL12), R.from_rb_group(s3, T.constant_map(s3))):
        psi = R.proj_to_component(inst)
        pinv = R.base_cocycle_inverse(inst)
        for a in s3.elements:
            assert inst.b1[psi[a]] == inst.b1[a] and inst.b2[psi[a]] == inst.b2[a]
            assert pinv[inst.phi[a]] == psi[a]

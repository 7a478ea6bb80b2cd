import pytest
from hypothesis import given, strategies as st

import oracles as O
from conftest import A3, C123, E, REFL12, T12
from rbsys import tables as T


def test_z2_group():
    G = T.validate_table([[0, 1], [1, 0]], "group")
    assert G.kind == "group" and G.identity == 0 and G.inverses == (0, 1)


def test_idempotent_magma_is_not_a_group():
    with pytest.raises(T.NotInvertible) as exc:
        T.validate_table([[0, 0], [0, 1]], "group")
    assert exc.value.element == 0


def test_s3_matches_independent_permutation_table(s3):
    assert [list(r) for r in s3.table] == O.table_of(O.s3())
    assert s3.kind == "group" and s3.identity == E


@pytest.mark.parametrize("table,kind,err", [
    ([[0, 1], [0, 1]], "monoid", T.NoIdentity),
    ([[1, 0], [0, 0]], "semigroup", T.NotAssociative),
    ([[0, 2], [1, 0]], "magma", T.TableError),
    ([[0, 1]], "magma", T.TableError),
])
def test_validation_errors(table, kind, err):
    with pytest.raises(err):
        T.validate_table(table, kind)


def test_magma_keeps_identity_when_present():
    G = T.validate_table([[0, 1], [1, 1]], "magma")
    assert G.identity == 0 and G.inverses is None


def test_center(z2, z3, s3):
    assert list(T.center(z2)) == [0, 1]
    assert list(T.center(z3)) == [0, 1, 2]
    assert list(T.center(s3)) == [E]


def test_subgroups_and_normality(z2, s3):
    assert T.is_subgroup(z2, [0]) and T.is_normal(z2, [0])
    assert T.is_subgroup(s3, A3) and T.is_normal(s3, A3)
    assert T.is_subgroup(s3, REFL12) and not T.is_normal(s3, REFL12)
    # conjugating (12) by (123) leaves {e,(12)}
    c = s3.prod(C123, T12, s3.inv(C123))
    assert c not in REFL12


def test_quotients(z2, s3):
    q = T.quotient(T.subset(s3, s3.elements), T.subset(s3, A3))
    assert q.table.order == 2 and q.cosets[0] == A3
    assert T.is_hom(tuple(q.project(a) for a in s3.elements), s3, q.table)
    full = T.subset(z2, [0, 1])
    assert T.quotient(full, T.subset(z2, [0])).table.table == z2.table
    assert T.quotient(full, full).table.order == 1
    with pytest.raises(T.NotNormal):
        T.quotient(T.subset(s3, s3.elements), T.subset(s3, REFL12))


def test_twisted_product_z2(z2):
    full = T.subset(z2, [0, 1])
    D = T.twisted_product(full, full)
    assert D.order == 4 and D.identity == T.pair_index(0, 0, 2)
    assert D.mul(T.pair_index(1, 0, 2), T.pair_index(1, 1, 2)) == T.pair_index(0, 1, 2)


def test_twisted_product_reverses_second_slot(s3):
    G1, G2 = T.subset(s3, A3), T.subset(s3, REFL12)
    D = T.twisted_product(G1, G2)
    assert D.order == 6
    for x in D.elements:
        for y in D.elements:
            i1, j1 = T.pair_split(x, 2)
            i2, j2 = T.pair_split(y, 2)
            a1, a2 = G1.members[i1], G2.members[j1]
            b1, b2 = G1.members[i2], G2.members[j2]
            assert D.mul(x, y) == T.pair_index(G1.index(s3.mul(a1, b1)), G2.index(s3.mul(b2, a2)), 2)
    # equals the direct sum with the opposite group in the second slot
    g1 = T.restrict(s3.table, A3, "group")
    g2 = T.restrict(s3.table, REFL12, "group")
    assert D.table == T.direct_sum(g1, T.opposite(g2)).table


def test_direct_sums(z2, z3):
    assert T.direct_sum(z2, z2).table == T.klein().table
    assert T.direct_sum(z2, T.trivial()).table == z2.table
    z6 = T.direct_sum(z2, z3)
    x, acc, order = T.pair_index(1, 1, 3), T.pair_index(1, 1, 3), 1
    while acc != z6.identity:
        acc, order = z6.mul(acc, x), order + 1
    assert order == 6


def test_morphism_predicates(z2, s3):
    assert T.is_hom((0, 1), z2, z2) and T.is_anti_hom((0, 1), z2, z2)
    assert T.is_hom(T.constant_map(s3), s3, s3)
    inv = T.inversion_map(s3)
    assert not T.is_hom(inv, s3, s3) and T.is_anti_hom(inv, s3, s3)
    assert T.is_bijective(inv) and not T.is_bijective(T.constant_map(s3))


def test_automorphism_counts(z2, z3, s3):
    assert len(T.automorphisms(z2)) == 1
    assert len(T.automorphisms(z3)) == 2
    assert len(T.automorphisms(T.klein())) == 6
    assert len(T.automorphisms(s3)) == 6
    assert all(T.is_hom(f, s3, s3) and T.is_bijective(f) for f in T.automorphisms(s3))


def test_generated_and_restrict(s3):
    assert list(T.generated(s3, [C123])) == list(A3)
    with pytest.raises(T.TableError):
        T.restrict(s3.table, [E, T12, C123], "magma")


def test_digest_is_stable(z2):
    assert z2.digest() == T.cyclic(2).digest()
    assert z2.digest() != T.cyclic(3).digest()


@given(st.sampled_from([T.cyclic(4), T.klein(), T.symmetric(3), T.dihedral(4), T.cyclic(5)]))
def test_group_tables_are_latin_squares(G):
    assert T.is_latin_square(G)


@given(st.integers(1, 7), st.integers(1, 4))
def test_quotient_orders(n, k):
    G = T.cyclic(n * k)
    N = T.generated(G, [k % G.order])
    q = T.quotient(T.subset(G, G.elements), N)
    assert q.table.order * len(N) == G.order
    assert T.is_hom(tuple(q.project(a) for a in G.elements), G, q.table)

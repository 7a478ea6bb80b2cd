"""Acceptance criteria, one printed PASS/FAIL line each."""

import random
import time
from pathlib import Path

import pytest

import oracles as O
from conftest import A3, REFL12
from rbsys import audit, cli, lie, search
from rbsys import qlinalg as ql
from rbsys import rbs as R
from rbsys import tables as T
from rbsys.qlinalg import Matrix

SAMPLES = Path(__file__).resolve().parent.parent / "samples"
Z2_RBS = sorted([((0, 1), (0, 0)), ((0, 0), (0, 1)), ((0, 0), (1, 0)), ((1, 0), (0, 0)), ((0, 0), (0, 0))])


@pytest.fixture
def verdict(capsys):
    def emit(n: int, title: str, ok: bool, detail: str = "") -> None:
        with capsys.disabled():
            print(f"\nACCEPTANCE {n}: {'PASS' if ok else 'FAIL'} {title}" + (f" ({detail})" if detail else ""))
        assert ok, f"criterion {n} failed: {detail}"
    return emit


def test_1_z2_census(verdict):
    t0 = time.perf_counter()
    naive = search.enumerate_naive(T.cyclic(2))
    pruned = search.enumerate_pruned(T.cyclic(2))
    dt = time.perf_counter() - t0
    ok = naive.entries == pruned.entries == Z2_RBS and dt < 1
    verdict(1, "Z2 census has the 5 listed pairs", ok, f"{len(naive)} naive, {len(pruned)} pruned, {dt:.3f}s")


def test_2_oracle_equivalence(verdict):
    t0 = time.perf_counter()
    bad = []
    for G in (T.cyclic(2), T.cyclic(3)):
        for mode in search.MODES:
            if search.enumerate_pruned(G, mode).canonical_bytes() != search.enumerate_naive(G, mode).canonical_bytes():
                bad.append((G.name, mode))
    # the package's naive sweep is itself checked against the standalone oracle
    for g, G in ((O.zmod(2), T.cyclic(2)), (O.zmod(3), T.cyclic(3))):
        for mode in search.MODES:
            if O.census(g, mode) != search.enumerate_naive(G, mode).entries:
                bad.append((G.name, mode, "oracle"))
    dt = time.perf_counter() - t0
    verdict(2, "pruned == naive on Z2, Z3 in both modes", not bad and dt < 60, f"mismatches={bad}, {dt:.2f}s")


def test_3_theorem_suite(verdict):
    t0 = time.perf_counter()
    count = 0
    for G in (T.cyclic(2), T.cyclic(3), T.cyclic(4), T.klein()):
        cat = search.enumerate_pruned(G)
        assert cat.complete
        for b1, b2 in cat.entries:
            audit.theorem_suite(R.verify_rbs(G, b1, b2))
            count += 1
        for b1, b2 in search.enumerate_pruned(G, "associative").entries:
            audit.pair_suite(G, b1, b2)
    s3 = T.symmetric(3)
    built = [
        R.from_factorization(s3, A3, REFL12),
        R.from_rb_group(s3, T.constant_map(s3)),
        R.from_twisted_rb(s3, T.constant_map(s3), T.constant_map(s3)),
        R.from_factorization(s3, REFL12, A3),
    ]
    built += [R.verify_rbs(s3, b1, b2) for b1, b2 in search.enumerate_pruned(s3).entries]
    for inst in built:
        audit.theorem_suite(inst)
        count += 1
    dt = time.perf_counter() - t0
    verdict(3, "theorem suite over Z2/Z3/Z4/V4 catalogs and S3 instances", dt < 300, f"{count} instances, {dt:.1f}s")


def test_4_centre_witness(verdict):
    z2 = T.cyclic(2)
    pair = ((0, 1), (0, 1))
    in_assoc = pair in search.enumerate_pruned(z2, "associative")
    in_rbs = pair in search.enumerate_pruned(z2, "rbs")
    truss = R.verify_skew_truss(z2, *pair)
    ok = in_assoc and not in_rbs and truss and len(T.center(z2)) == 2
    verdict(4, "Z2 (id, id) is a truss but not a system", ok, f"assoc={in_assoc} rbs={in_rbs} truss={truss}")


def test_5_lie_fixtures(verdict):
    t0 = time.perf_counter()
    borel = lie.borel_instance()
    lie.derived_bracket(borel)
    dims = lie.morphism_checks(borel)
    lie.lie_cayley_transform(borel)
    tm = lie.t_map(borel)
    split_ef = lie.lie_factorize(borel, (1, 0, 1))
    split_h = lie.lie_factorize(borel, (0, 1, 0))
    efh = lie.efh_instance()
    ker = ql.kernel(efh.phi)
    dt = time.perf_counter() - t0
    ok = (
        split_ef == ((1, 0, 0), (0, 0, 1))
        and split_h == ((0, 1, 0), (0, 0, 0))
        and tm.target.dim == 3
        and lie.is_decomposable(efh)
        and ker == ql.span([(0, 1, 0)], 3)
        and dt < 1
    )
    verdict(5, "sl2 Borel and e-f-h fixtures", ok, f"dims={dims}, {dt:.3f}s")


def test_6_twisted_yang_baxter_biconditional(verdict):
    t0 = time.perf_counter()
    rng = random.Random(20261015)
    summary = {}
    fixtures = {
        "sl2": [(lie.diag(1, 1, 0), lie.diag(0, 0, 1)), (lie.diag(1, 0, 0), lie.diag(0, 0, 1))],
        "two_dim": [(Matrix.of([[1, 1], [1, 1]]), Matrix.of([[0, -1], [0, -1]])),
                    (Matrix.of([[1, 0], [0, 1]]), Matrix.zero(2))],
        "abelian": [(Matrix.identity(2), Matrix.identity(2))],
    }
    for name, alg in (("abelian", lie.abelian(2)), ("two_dim", lie.two_dim()), ("sl2", lie.sl2())):
        trues = total = 0
        for b1, b2 in fixtures[name]:
            trues += lie.tmybe_equivalence(alg, b1, b2)
            total += 1
        fixture_trues = trues
        for _ in range(1000):
            trues += lie.tmybe_equivalence(alg, lie.random_matrix(rng, alg.dim, 1), lie.random_matrix(rng, alg.dim, 1))
            total += 1
        summary[name] = (total, trues, fixture_trues == len(fixtures[name]))
    dt = time.perf_counter() - t0
    ok = all(t >= 1000 and fx for t, _, fx in summary.values()) and dt < 30
    verdict(6, "twisted Yang-Baxter flags equal system flags", ok, f"(pairs, true) {summary}, {dt:.1f}s")


def test_7_yang_baxter_reduction(verdict):
    borel = lie.borel_instance()
    flags = lie.myb_reduction(lie.sl2(), borel.r)
    verdict(7, "Borel R solves the modified Yang-Baxter equation; P1 weight -1, P2 weight +1", all(flags.values()), str(flags))


def test_8_cli_determinism(verdict, tmp_path, capsys):
    same = {}
    for g in ("z3.json", "v4.json"):
        outs = []
        for jobs in ("1", "8"):
            out = tmp_path / f"{g}.{jobs}"
            code = cli.run(["enumerate", str(SAMPLES / g), "--jobs", jobs, "-o", str(out)])
            assert code == 0
            outs.append(out.read_bytes())
        same[g] = outs[0] == outs[1]
    capsys.readouterr()
    verdict(8, "enumerate --jobs 1 and --jobs 8 byte-identical", all(same.values()), str(same))

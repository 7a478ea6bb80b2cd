"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a mathematical check fails,
2 for malformed input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable

from . import lie, search, serial
from .factorization import NotInImage, build_factorization, factorize_element
from .lie import LieError, LieRbsViolation
from .rbs import RbsError, RbsViolation, TheoremViolation, descendent_table, truss_violation, verify_rbs
from .serial import InputError
from .structure import structure_report
from .tables import MulTable, find_associativity_failure

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class Failure(Exception):
    """A mathematical check failed; carries the report to print."""

    def __init__(self, report: dict):
        super().__init__(report.get("error", "check failed"))
        self.report = report


def _carrier(args, *, group_only: bool = False) -> MulTable:
    G = serial.load_group(args.group)
    if G.kind == "magma":
        raise InputError(args.group, "kind", "carrier must be at least a semigroup")
    if G.kind != "group" and (group_only or not args.monoid):
        why = "this command needs a group" if group_only else "non-group carrier needs --monoid"
        raise InputError(args.group, "kind", why)
    return G


def _operators(args, G: MulTable):
    return serial.load_operator(args.b1, G.order), serial.load_operator(args.b2, G.order)


def _verified(G, b1, b2):
    try:
        return verify_rbs(G, b1, b2)
    except RbsViolation as exc:
        raise Failure({"ok": False, "violations": [v.to_dict() for v in exc.violations]}) from exc


# -- group verbs ------------------------------------------------------------------


def cmd_verify(args) -> dict:
    G = _carrier(args)
    b1, b2 = _operators(args, G)
    try:
        verify_rbs(G, b1, b2, all_violations=args.all)
    except RbsViolation as exc:
        raise Failure({"ok": False, "violations": [v.to_dict() for v in exc.violations]}) from exc
    return {"ok": True, "violations": []}


def cmd_descendent(args) -> dict:
    G = _carrier(args)
    b1, b2 = _operators(args, G)
    rows = descendent_table(G, b1, b2)
    violations = []
    bad = find_associativity_failure(rows)
    if bad is not None:
        violations.append({"eq": "assoc", "a": bad[0], "b": bad[1], "c": bad[2]})
    elif G.is_group:
        bad = truss_violation(G, b1, b2)
        if bad is not None:
            violations.append({"eq": "truss", "a": bad[0], "b": bad[1], "c": bad[2]})
    report = {"ok": not violations, "violations": violations, "table": [list(r) for r in rows]}
    if violations:
        raise Failure(report)
    return report


def cmd_enumerate(args) -> dict:
    G = _carrier(args)
    cat = search.enumerate_pruned(G, args.mode, jobs=args.jobs, budget=args.budget)
    return cat.to_dict()


def cmd_structure(args) -> dict:
    G = _carrier(args, group_only=True)
    inst = _verified(G, *_operators(args, G))
    return structure_report(inst)


def cmd_factorize(args) -> dict:
    G = _carrier(args, group_only=True)
    inst = _verified(G, *_operators(args, G))
    fd = build_factorization(inst)
    report = fd.to_dict()
    if args.element is not None:
        if not 0 <= args.element < G.order:
            raise InputError("<argv>", "--element", f"must lie in [0, {G.order})")
        try:
            report["factor"] = list(factorize_element(inst, fd, args.element))
        except NotInImage as exc:
            raise Failure({"ok": False, "error": str(exc)}) from exc
    return report


# -- Lie verbs --------------------------------------------------------------------


def _lie_pair(args):
    alg = serial.load_lie(args.algebra)
    return alg, serial.load_matrix(args.b1, alg.dim), serial.load_matrix(args.b2, alg.dim)


def cmd_lie_verify(args) -> dict:
    alg, b1, b2 = _lie_pair(args)
    try:
        lie.verify_lie_rbs(alg, b1, b2, seed=args.seed)
    except LieRbsViolation as exc:
        raise Failure({"ok": False, "violations": [v.to_dict() for v in exc.violations]}) from exc
    return {"ok": True, "violations": []}


def cmd_lie_tmybe(args) -> dict:
    alg = serial.load_lie(args.algebra)
    R, phi = serial.load_matrix(args.r, alg.dim), serial.load_matrix(args.phi, alg.dim)
    ok, bad = lie.verify_tmybe(alg, R, phi)
    report = {"ok": ok, "violations": [v.to_dict() for v in bad]}
    if not ok:
        raise Failure(report)
    return report


def cmd_lie_factorize(args) -> dict:
    alg, b1, b2 = _lie_pair(args)
    w = serial.parse_vector(args.vector, alg.dim)
    try:
        lr = lie.verify_lie_rbs(alg, b1, b2, seed=args.seed)
        up, um = lie.lie_factorize(lr, w)
    except LieRbsViolation as exc:
        raise Failure({"ok": False, "violations": [v.to_dict() for v in exc.violations]}) from exc
    except (lie.NotDecomposable, lie.NotInImage) as exc:
        raise Failure({"ok": False, "error": str(exc)}) from exc
    return {"ok": True, "u_plus": [str(x) for x in up], "u_minus": [str(x) for x in um]}


def cmd_lie_from_projections(args) -> dict:
    alg = serial.load_lie(args.algebra)
    parts = [serial.load_subspace(p, alg.dim) for p in (args.gplus, args.gminus, args.v)]
    try:
        lr = lie.from_triple_decomposition(alg, *parts)
    except (lie.NotDirectSum, lie.NotSubalgebra) as exc:
        raise Failure({"ok": False, "error": str(exc)}) from exc
    return {"ok": True, "b1": serial.matrix_to_dict(lr.b1), "b2": serial.matrix_to_dict(lr.b2),
            "decomposable": lie.is_decomposable(lr)}


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indent the JSON report")
    common.add_argument("-o", "--output", help="also write the report to this file")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized re-checks")
    common.add_argument("--monoid", action="store_true", help="accept monoid and semigroup carriers")

    parser = argparse.ArgumentParser(prog="rbsys", description="Rota-Baxter systems on finite groups and Lie algebras")
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name: str, fn: Callable, help: str, *positional: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        for arg in positional:
            p.add_argument(arg)
        p.set_defaults(func=fn)
        return p

    verb("verify", cmd_verify, "check the system identities", "group", "b1", "b2").add_argument(
        "--all", action="store_true", help="list every violation")
    verb("descendent", cmd_descendent, "descendent table, associativity and truss law", "group", "b1", "b2")
    p = verb("enumerate", cmd_enumerate, "catalog all operator pairs", "group")
    p.add_argument("--mode", choices=search.MODES, default="rbs")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=None, help="node budget; partial catalogs are marked incomplete")
    verb("structure", cmd_structure, "component decomposition", "group", "b1", "b2")
    verb("factorize", cmd_factorize, "Cayley transform and factorization data", "group", "b1", "b2").add_argument(
        "--element", type=int, default=None)
    verb("lie-verify", cmd_lie_verify, "check a Lie algebra system", "algebra", "b1", "b2")
    verb("lie-tmybe", cmd_lie_tmybe, "twisted modified Yang-Baxter equations", "algebra", "r", "phi")
    verb("lie-factorize", cmd_lie_factorize, "split a vector of phi(g)", "algebra", "b1", "b2").add_argument(
        "--vector", required=True, help="comma-separated rationals")
    verb("lie-from-projections", cmd_lie_from_projections, "system from g = g+ ⊕ g- ⊕ V",
         "algebra", "gplus", "gminus", "v")
    return parser


def _emit(report: dict, args) -> None:
    text = serial.dumps(report, pretty=getattr(args, "pretty", False))
    sys.stdout.write(text)
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    for flag, value in (("--jobs", getattr(args, "jobs", 1)), ("--budget", getattr(args, "budget", None))):
        if value is not None and value < 1:
            _emit(InputError("<argv>", flag, "must be at least 1").to_dict(), args)
            return EXIT_INPUT
    try:
        report = args.func(args)
    except InputError as exc:
        print(f"rbsys: {exc}", file=sys.stderr)
        _emit(exc.to_dict(), args)
        return EXIT_INPUT
    except Failure as exc:
        _emit(exc.report, args)
        return EXIT_FAIL
    except (TheoremViolation, RbsError, LieError) as exc:
        _emit({"ok": False, "error": str(exc)}, args)
        return EXIT_FAIL
    _emit(report, args)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

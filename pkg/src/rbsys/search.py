"""Exhaustive enumeration of operator pairs on a finite carrier.

Two modes: ``rbs`` keeps pairs satisfying the Rota-Baxter system identities,
``associative`` keeps pairs whose descendent operation is associative.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .rbs import associativity_witness, is_rbs
from .tables import MulTable, OperatorMap, compose, is_bijective, is_hom, invert_map

MODES = ("rbs", "associative")
NAIVE_LIMIT = 4

Entry = tuple[OperatorMap, OperatorMap]


class TooLarge(ValueError):
    pass


class NotAutomorphism(ValueError):
    pass


@dataclass
class Catalog:
    group: str
    mode: str
    entries: list[Entry]
    complete: bool = True
    nodes: int = 0
    wall_time: float = field(default=0.0, compare=False)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, pair) -> bool:
        return (tuple(pair[0]), tuple(pair[1])) in set(self.entries)

    def to_dict(self) -> dict:
        # wall time stays out so that reports are byte-stable
        return {
            "group": self.group,
            "mode": self.mode,
            "complete": self.complete,
            "entries": [{"b1": list(b1), "b2": list(b2)} for b1, b2 in self.entries],
            "stats": {"nodes": self.nodes},
        }

    def canonical_bytes(self) -> bytes:
        """The catalog content without run statistics, for oracle comparisons."""
        d = self.to_dict()
        del d["stats"]
        return json.dumps(d, separators=(",", ":"), sort_keys=True).encode()

    @classmethod
    def from_dict(cls, d: dict) -> "Catalog":
        entries = [(tuple(e["b1"]), tuple(e["b2"])) for e in d["entries"]]
        return cls(d["group"], d["mode"], entries, bool(d["complete"]), int(d.get("stats", {}).get("nodes", 0)))


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def passes(G: MulTable, b1: Sequence[int], b2: Sequence[int], mode: str) -> bool:
    if mode == "rbs":
        return is_rbs(G, b1, b2)
    return associativity_witness(G, b1, b2) is None


def enumerate_naive(G: MulTable, mode: str = "rbs") -> Catalog:
    """Test all (n^n)^2 pairs with the full verifier; only for order ≤ 4."""
    _check_mode(mode)
    n = G.order
    if n > NAIVE_LIMIT:
        raise TooLarge(f"naive enumeration is limited to order {NAIVE_LIMIT}, got {n}")
    start = time.perf_counter()
    maps = list(product(range(n), repeat=n))
    found = [(b1, b2) for b1 in maps for b2 in maps if passes(G, b1, b2, mode)]
    return Catalog(G.digest(), mode, sorted(found), True, len(maps) ** 2, time.perf_counter() - start)


# -- pruned backtracking ---------------------------------------------------------


def _rbs_consistent(t, v1, v2, n) -> bool:
    """Every instance of 1a/1b whose inputs are all assigned holds."""
    for a in range(n):
        x1, x2 = v1[a], v2[a]
        if x1 < 0 or x2 < 0:
            continue
        row = t[x1]
        for b in range(n):
            x = t[row[b]][x2]
            y1 = v1[b]
            if y1 >= 0:
                z = v1[x]
                if z >= 0 and row[y1] != z:
                    return False
            y2 = v2[b]
            if y2 >= 0:
                z = v2[x]
                if z >= 0 and t[y2][x2] != z:
                    return False
    return True


def _assoc_consistent(t, v1, v2, n) -> bool:
    """Associativity on every triple whose descendent rows are all known."""
    rows = [None] * n
    for a in range(n):
        if v1[a] >= 0 and v2[a] >= 0:
            r, x2 = t[v1[a]], v2[a]
            rows[a] = [t[r[b]][x2] for b in range(n)]
    for a in range(n):
        ra = rows[a]
        if ra is None:
            continue
        for b in range(n):
            rb = rows[b]
            if rb is None:
                continue
            rab = rows[ra[b]]
            if rab is None:
                continue
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    return False
    return True


@dataclass
class _TaskResult:
    entries: list[tuple[int, Entry]]
    nodes: int
    truncated: bool


def _search_subtree(table: tuple, mode: str, first: tuple[int, int], limit: int | None) -> _TaskResult:
    """Depth-first search with (b1(0), b2(0)) fixed to ``first``.

    Variables are assigned in the order b1(0), b2(0), b1(1), b2(1), ...;
    every assignment counts as a node, and each found entry records the node
    count at which it completed.
    """
    n = len(table)
    consistent = _rbs_consistent if mode == "rbs" else _assoc_consistent
    v1 = [-1] * n
    v2 = [-1] * n
    found: list[tuple[int, Entry]] = []
    nodes = 0
    truncated = False

    def domain(pos):
        if pos == 0:
            return (first[0],)
        if pos == 1:
            return (first[1],)
        return range(n)

    def dfs(pos: int) -> bool:
        nonlocal nodes, truncated
        if pos == 2 * n:
            found.append((nodes, (tuple(v1), tuple(v2))))
            return True
        k, which = divmod(pos, 2)
        target = v1 if which == 0 else v2
        for val in domain(pos):
            if limit is not None and nodes >= limit:
                truncated = True
                return False
            nodes += 1
            target[k] = val
            if consistent(table, v1, v2, n):
                if not dfs(pos + 1):
                    target[k] = -1
                    return False
            target[k] = -1
        return True

    dfs(0)
    return _TaskResult(found, nodes, truncated)


def _run_task(args):
    return _search_subtree(*args)


def enumerate_pruned(G: MulTable, mode: str = "rbs", jobs: int = 1, budget: int | None = None) -> Catalog:
    """Backtracking enumeration; identical output to :func:`enumerate_naive`.

    Work is split on the value pair ``(b1(0), b2(0))``. With a node budget
    the result equals that of a sequential search stopped after ``budget``
    nodes, whatever ``jobs`` is, and is flagged incomplete.
    """
    _check_mode(mode)
    if G.identity is None:
        raise ValueError("pruned enumeration needs a monoid or group carrier")
    start = time.perf_counter()
    n = G.order
    tasks = [(G.table, mode, (x, y), budget) for x in range(n) for y in range(n)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_task, tasks))
    else:
        results = [_run_task(t) for t in tasks]

    entries: list[Entry] = []
    total = 0
    complete = True
    for res in results:
        if budget is None:
            entries.extend(e for _, e in res.entries)
            total += res.nodes
            continue
        remaining = budget - total
        entries.extend(e for at, e in res.entries if at <= remaining)
        if res.truncated or res.nodes > remaining:
            total = budget
            complete = False
            break
        total += res.nodes
    return Catalog(G.digest(), mode, sorted(entries), complete, total, time.perf_counter() - start)


# -- orbits under automorphisms ------------------------------------------------


def _closure(maps: list[OperatorMap], n: int) -> list[OperatorMap]:
    group = {tuple(range(n))}
    frontier = list(group)
    while frontier:
        new = []
        for f in frontier:
            for g in maps:
                h = compose(g, f)
                if h not in group:
                    group.add(h)
                    new.append(h)
        frontier = new
    return sorted(group)


def conjugate_pair(sigma: Sequence[int], pair: Entry) -> Entry:
    """``(σ b1 σ^-1, σ b2 σ^-1)``."""
    sinv = invert_map(sigma)
    b1, b2 = pair
    return (
        tuple(sigma[b1[sinv[x]]] for x in range(len(sigma))),
        tuple(sigma[b2[sinv[x]]] for x in range(len(sigma))),
    )


def canonicalize(cat: Catalog, G: MulTable, automorphisms: Sequence[Sequence[int]] = ()) -> Catalog:
    """Keep the lexicographically least entry of each automorphism orbit.

    The identity automorphism is always included; the orbit is taken under
    the group generated by the supplied maps.
    """
    maps = [tuple(s) for s in automorphisms]
    for s in maps:
        if len(s) != G.order or not is_bijective(s) or not is_hom(s, G, G):
            raise NotAutomorphism(f"{list(s)} is not an automorphism")
    group = _closure(maps, G.order)
    reps = {min(conjugate_pair(s, e) for s in group) for e in cat.entries}
    return Catalog(cat.group, cat.mode, sorted(reps), cat.complete, cat.nodes, cat.wall_time)

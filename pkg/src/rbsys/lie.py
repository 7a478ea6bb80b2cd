"""Rota-Baxter systems on finite-dimensional Lie algebras over Q.

Operators are square :class:`~rbsys.qlinalg.Matrix` objects acting on
coordinate columns in the algebra's basis. Violations carry these codes::

    [B1u, B1v] = B1([u,v]_R)                       # "TWT1"
    [B2v, B2u] = B2([u,v]_R)                       # "TWT2"
    [Ru,Rv] + [φu,φv] = R([Ru,φv] + [φu,Rv])       # "TWT3"
    [Ru,φv] + [φu,Rv] = φ([Ru,φv] + [φu,Rv])       # "TWT4"

with ``[u,v]_R = [B1u,B1v] - [B2u,B2v]``, ``φ = B1 + B2`` and ``R = B1 - B2``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import qlinalg as ql
from .qlinalg import DimensionMismatch, Matrix, Subspace, Vector
from .rbs import TheoremViolation, require


class LieError(ValueError):
    pass


class NotAntisymmetric(LieError):
    def __init__(self, i: int, j: int, k: int):
        super().__init__(f"c[{i}][{j}][{k}] != -c[{j}][{i}][{k}]")
        self.i, self.j, self.k = i, j, k


class JacobiFails(LieError):
    def __init__(self, i: int, j: int, l: int):
        super().__init__(f"Jacobi identity fails on basis triple ({i}, {j}, {l})")
        self.i, self.j, self.l = i, j, l


class NotDirectSum(LieError):
    pass


class NotSubalgebra(LieError):
    def __init__(self, which: str):
        super().__init__(f"{which} is not closed under the bracket")
        self.which = which


class NotIdempotent(LieError):
    pass


class NotDecomposable(LieError):
    pass


class NotInImage(LieError):
    pass


@dataclass(frozen=True)
class LieViolation:
    eq: str
    i: int
    j: int
    lhs: Vector
    rhs: Vector

    def to_dict(self) -> dict:
        return {"eq": self.eq, "i": self.i, "j": self.j,
                "lhs": [ql.qstr(x) for x in self.lhs], "rhs": [ql.qstr(x) for x in self.rhs]}


class LieRbsViolation(LieError):
    def __init__(self, violations: list[LieViolation]):
        v = violations[0]
        super().__init__(f"{v.eq} fails on basis pair ({v.i}, {v.j})")
        self.violations = violations


# -- algebras ------------------------------------------------------------------


@dataclass(frozen=True)
class LieAlgebra:
    dim: int
    c: tuple[tuple[Vector, ...], ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        nz = tuple((i, j, k, self.c[i][j][k])
                   for i in range(self.dim) for j in range(self.dim) for k in range(self.dim)
                   if self.c[i][j][k] != 0)
        object.__setattr__(self, "_nz", nz)

    def basis(self, i: int) -> Vector:
        return ql.unit_vec(self.dim, i)

    def to_dict(self) -> dict:
        return {"dim": self.dim,
                "c": [[[ql.qstr(x) for x in v] for v in row] for row in self.c],
                "labels": list(self.labels)}


def validate_lie(dim: int, c, labels: Sequence[str] | None = None) -> LieAlgebra:
    """Build a Lie algebra from structure constants, checking both axioms exactly."""
    if len(c) != dim or any(len(row) != dim or any(len(v) != dim for v in row) for row in c):
        raise DimensionMismatch(f"structure tensor must be {dim}x{dim}x{dim}")
    cq = tuple(tuple(ql.vec(v) for v in row) for row in c)
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                if cq[i][j][k] != -cq[j][i][k]:
                    raise NotAntisymmetric(i, j, k)
    labels = tuple(labels) if labels is not None else tuple(f"x{i}" for i in range(dim))
    if len(labels) != dim:
        raise DimensionMismatch("one label per basis vector")
    alg = LieAlgebra(dim, cq, labels)
    for i in range(dim):
        for j in range(dim):
            for l in range(dim):
                if not ql.is_zero(jacobi(alg, alg.basis(i), alg.basis(j), alg.basis(l))):
                    raise JacobiFails(i, j, l)
    return alg


def _from_brackets(dim: int, brackets: dict[tuple[int, int], dict[int, int]], labels) -> LieAlgebra:
    c = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
    for (i, j), out in brackets.items():
        for k, val in out.items():
            c[i][j][k] = val
            c[j][i][k] = -val
    return validate_lie(dim, c, labels)


def abelian(dim: int) -> LieAlgebra:
    return _from_brackets(dim, {}, [f"x{i}" for i in range(dim)])


def two_dim() -> LieAlgebra:
    """The non-abelian 2-dimensional algebra ``[x, y] = y``."""
    return _from_brackets(2, {(0, 1): {1: 1}}, ["x", "y"])


def sl2() -> LieAlgebra:
    """Basis (e, h, f): ``[h,e]=2e``, ``[h,f]=-2f``, ``[e,f]=h``."""
    return _from_brackets(3, {(1, 0): {0: 2}, (1, 2): {2: -2}, (0, 2): {1: 1}}, ["e", "h", "f"])


def bracket(alg: LieAlgebra, u: Sequence, v: Sequence) -> Vector:
    if len(u) != alg.dim or len(v) != alg.dim:
        raise DimensionMismatch(f"vectors must have length {alg.dim}")
    out = [Fraction(0)] * alg.dim
    for i, j, k, val in alg._nz:
        if u[i] and v[j]:
            out[k] += u[i] * v[j] * val
    return tuple(out)


def jacobi(alg: LieAlgebra, u, v, w) -> Vector:
    br = lambda a, b: bracket(alg, a, b)
    return ql.vadd(ql.vadd(br(u, br(v, w)), br(v, br(w, u))), br(w, br(u, v)))


def is_subalgebra(alg: LieAlgebra, U: Subspace) -> bool:
    return all(U.contains(bracket(alg, x, y)) for x in U.basis for y in U.basis)


def is_ideal_in(alg: LieAlgebra, I: Subspace, S: Subspace) -> bool:
    """``[S, I] ⊆ I`` under the bracket of ``alg``."""
    return all(I.contains(bracket(alg, s, x)) for s in S.basis for x in I.basis)


def random_vector(rng: random.Random, n: int, size: int = 3) -> Vector:
    return tuple(Fraction(rng.randint(-size, size), rng.randint(1, size)) for _ in range(n))


def random_matrix(rng: random.Random, n: int, size: int = 2) -> Matrix:
    return Matrix(tuple(random_vector(rng, n, size) for _ in range(n)), n)


# -- systems -------------------------------------------------------------------


@dataclass(frozen=True)
class LieRbs:
    alg: LieAlgebra
    b1: Matrix
    b2: Matrix
    phi: Matrix
    r: Matrix
    verified: bool = False


def _square(alg: LieAlgebra, *ms: Matrix) -> None:
    for m in ms:
        if m.shape != (alg.dim, alg.dim):
            raise DimensionMismatch(f"operator must be {alg.dim}x{alg.dim}, got {m.shape}")


def r_bracket(alg: LieAlgebra, b1: Matrix, b2: Matrix, u, v) -> Vector:
    """``[u,v]_R = [B1 u, B1 v] - [B2 u, B2 v]``."""
    return ql.vsub(bracket(alg, b1.apply(u), b1.apply(v)), bracket(alg, b2.apply(u), b2.apply(v)))


def check_lie_rbs(alg: LieAlgebra, b1: Matrix, b2: Matrix, first_only: bool = False) -> list[LieViolation]:
    """TWT1 and TWT2 on all ordered basis pairs, row-major, TWT1 first within a pair."""
    _square(alg, b1, b2)
    out = []
    n = alg.dim
    img1 = [b1.column(i) for i in range(n)]
    img2 = [b2.column(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            x1 = bracket(alg, img1[i], img1[j])
            x2 = bracket(alg, img2[i], img2[j])
            r = ql.vsub(x1, x2)
            rhs1 = b1.apply(r)
            if x1 != rhs1:
                out.append(LieViolation("TWT1", i, j, x1, rhs1))
                if first_only:
                    return out
            lhs2 = bracket(alg, img2[j], img2[i])
            rhs2 = b2.apply(r)
            if lhs2 != rhs2:
                out.append(LieViolation("TWT2", i, j, lhs2, rhs2))
                if first_only:
                    return out
    return out


def phi_form_holds(alg: LieAlgebra, b1: Matrix, b2: Matrix, i: int, j: int) -> bool:
    """TWT1 rewritten through phi: ``[B1u,B1v] = B1([B1u,φv] + [φu,B1v] - [φu,φv])``."""
    phi = b1 + b2
    u, v = alg.basis(i), alg.basis(j)
    p, q = phi.apply(u), phi.apply(v)
    a, b = b1.apply(u), b1.apply(v)
    inner = ql.vsub(ql.vadd(bracket(alg, a, q), bracket(alg, p, b)), bracket(alg, p, q))
    return bracket(alg, a, b) == b1.apply(inner)


def verify_lie_rbs(alg: LieAlgebra, b1: Matrix, b2: Matrix, *, seed: int = 0, samples: int = 100) -> LieRbs:
    """Verify TWT1/TWT2 and return the system; raises :class:`LieRbsViolation`.

    Beyond the basis check this re-tests both identities on ``samples``
    random rational vector pairs and checks ``φ([u,v]_R) = [u,v]_R``.
    """
    bad = check_lie_rbs(alg, b1, b2)
    if bad:
        raise LieRbsViolation(bad)
    phi, r = b1 + b2, b1 - b2
    rng = random.Random(seed)
    for _ in range(samples):
        u, v = random_vector(rng, alg.dim), random_vector(rng, alg.dim)
        x = r_bracket(alg, b1, b2, u, v)
        require(bracket(alg, b1.apply(u), b1.apply(v)) == b1.apply(x), "TWT1 fails off the basis")
        require(bracket(alg, b2.apply(v), b2.apply(u)) == b2.apply(x), "TWT2 fails off the basis")
    for i in range(alg.dim):
        for j in range(alg.dim):
            x = r_bracket(alg, b1, b2, alg.basis(i), alg.basis(j))
            require(phi.apply(x) == x, "phi does not fix the derived bracket")
    return LieRbs(alg, b1, b2, phi, r, True)


def is_lie_rbs(alg: LieAlgebra, b1: Matrix, b2: Matrix) -> bool:
    return not check_lie_rbs(alg, b1, b2, first_only=True)


def _projection(parts: list[Subspace], keep: int, n: int) -> Matrix:
    """Projection onto ``parts[keep]`` along the others, for a direct sum of Q^n."""
    basis = [v for p in parts for v in p.basis]
    P = Matrix.from_columns(basis, n)
    Pinv = ql.inverse(P)
    start = sum(p.dim for p in parts[:keep])
    stop = start + parts[keep].dim
    mask = Matrix(tuple(ql.unit_vec(n, i) if start <= i < stop else ql.zero_vec(n) for i in range(n)), n)
    return P @ mask @ Pinv


def from_triple_decomposition(alg: LieAlgebra, gplus: Subspace, gminus: Subspace, v: Subspace) -> LieRbs:
    """``B1`` projects onto g₊ along g₋⊕V and ``B2`` onto g₋ along g₊⊕V."""
    n = alg.dim
    for S in (gplus, gminus, v):
        if S.dim_ambient != n:
            raise DimensionMismatch(f"subspaces must live in dimension {n}")
    total = ql.span(list(gplus.basis) + list(gminus.basis) + list(v.basis), n)
    if gplus.dim + gminus.dim + v.dim != n or total.dim != n:
        raise NotDirectSum("g+, g- and V do not form a direct sum of the whole space")
    if not is_subalgebra(alg, gplus):
        raise NotSubalgebra("g+")
    if not is_subalgebra(alg, gminus):
        raise NotSubalgebra("g-")
    parts = [gplus, gminus, v]
    b1, b2 = _projection(parts, 0, n), _projection(parts, 1, n)
    lr = verify_lie_rbs(alg, b1, b2)
    kphi = ql.kernel(lr.phi)
    require(kphi == v, "Ker phi differs from V")
    require(is_decomposable(lr), "triple decomposition is not decomposable")
    return lr


def is_decomposable(lr: LieRbs) -> bool:
    return ql.is_subspace_of(ql.kernel(lr.phi), ql.kernel(lr.b1))


# -- derived structure ---------------------------------------------------------


@dataclass(frozen=True)
class DerivedBracket:
    parent: LieRbs
    alg_r: LieAlgebra

    def bracket(self, u, v) -> Vector:
        return bracket(self.alg_r, u, v)


def _need_verified(lr: LieRbs) -> None:
    if not lr.verified:
        raise LieError("operation needs a verified Lie Rota-Baxter system")


def derived_bracket(lr: LieRbs) -> DerivedBracket:
    _need_verified(lr)
    alg = lr.alg
    n = alg.dim
    c = [[r_bracket(alg, lr.b1, lr.b2, alg.basis(i), alg.basis(j)) for j in range(n)] for i in range(n)]
    try:
        alg_r = validate_lie(n, c, alg.labels)
    except LieError as exc:
        raise TheoremViolation(f"derived bracket is not a Lie bracket: {exc}") from exc
    return DerivedBracket(lr, alg_r)


def morphism_checks(lr: LieRbs) -> dict:
    db = derived_bracket(lr)
    alg, b1, b2 = lr.alg, lr.b1, lr.b2
    n = alg.dim
    for i in range(n):
        for j in range(n):
            x = db.bracket(alg.basis(i), alg.basis(j))
            require(b1.apply(x) == bracket(alg, b1.column(i), b1.column(j)), "B1 is not a homomorphism from g_R")
            require(b2.apply(x) == bracket(alg, b2.column(j), b2.column(i)), "B2 is not an anti-homomorphism from g_R")
    im1, im2 = ql.image(b1), ql.image(b2)
    k1, k2 = ql.kernel(b1), ql.kernel(b2)
    require(is_subalgebra(alg, im1) and is_subalgebra(alg, im2), "operator image is not a subalgebra")
    whole = ql.full_space(n)
    require(is_ideal_in(db.alg_r, k1, whole), "Ker B1 is not an ideal of g_R")
    require(is_ideal_in(db.alg_r, k2, whole), "Ker B2 is not an ideal of g_R")
    require(im1.dim == n - k1.dim and im2.dim == n - k2.dim, "rank-nullity fails")
    return {"im_b1": im1.dim, "im_b2": im2.dim, "ker_b1": k1.dim, "ker_b2": k2.dim}


@dataclass(frozen=True)
class Quotient:
    """``S / I`` with representatives completing an echelon basis of I to one of S."""

    S: Subspace
    I: Subspace
    reps: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.reps)

    def coords(self, x) -> Vector:
        basis = list(self.I.basis) + list(self.reps)
        c = ql.coordinates(basis, x)
        if c is None:
            raise NotInImage("vector outside the subalgebra")
        return c[self.I.dim:]

    def lift(self, coords) -> Vector:
        out = ql.zero_vec(self.S.dim_ambient)
        for a, r in zip(coords, self.reps):
            out = ql.vadd(out, ql.vscale(a, r))
        return out


def make_quotient(S: Subspace, I: Subspace) -> Quotient:
    require(ql.is_subspace_of(I, S), "ideal is not inside the subalgebra")
    return Quotient(S, I, tuple(ql.extend_basis(I.basis, S.basis, S.dim_ambient)))


@dataclass(frozen=True)
class LieCayley:
    Q1: Quotient
    Q2: Quotient
    theta: Matrix

    def apply(self, x) -> Vector:
        """θ on a vector of Im B1, returned as a representative in Im B2."""
        return self.Q2.lift(self.theta.apply(self.Q1.coords(x)))

    def to_dict(self) -> dict:
        return {"im_b1": self.Q1.S.to_strings(), "h1": self.Q1.I.to_strings(),
                "im_b2": self.Q2.S.to_strings(), "h2": self.Q2.I.to_strings(),
                "theta": self.theta.to_strings()}


def lie_cayley_transform(lr: LieRbs) -> LieCayley:
    _need_verified(lr)
    alg, b1, b2 = lr.alg, lr.b1, lr.b2
    n = alg.dim
    im1, im2 = ql.image(b1), ql.image(b2)
    I1 = ql.span([b1.apply(k) for k in ql.kernel(b2).basis], n)
    I2 = ql.span([b2.apply(k) for k in ql.kernel(b1).basis], n)
    require(is_subalgebra(alg, im1) and is_subalgebra(alg, im2), "operator image is not a subalgebra")
    require(is_ideal_in(alg, I1, im1), "B1(Ker B2) is not an ideal of Im B1")
    require(is_ideal_in(alg, I2, im2), "B2(Ker B1) is not an ideal of Im B2")
    Q1, Q2 = make_quotient(im1, I1), make_quotient(im2, I2)
    require(Q1.dim == Q2.dim, "quotients have different dimensions")
    cols = []
    for rep in Q1.reps:
        u = ql.solve(b1, rep)
        require(u is not None, "representative is not in Im B1")
        cols.append(Q2.coords(b2.apply(u)))
    theta = Matrix.from_columns(cols, Q2.dim) if cols else Matrix((), 0)
    for i in range(n):
        # well defined on every basis image
        require(theta.apply(Q1.coords(b1.column(i))) == Q2.coords(b2.column(i)), "θ is not well defined")
    if Q1.dim:
        ql.inverse(theta)
    for x in Q1.reps:
        for y in Q1.reps:
            lhs = theta.apply(Q1.coords(bracket(alg, x, y)))
            tx, ty = Q2.lift(theta.apply(Q1.coords(x))), Q2.lift(theta.apply(Q1.coords(y)))
            require(lhs == Q2.coords(bracket(alg, ty, tx)), "θ is not an anti-homomorphism")
    return LieCayley(Q1, Q2, theta)


def pair_bracket(alg: LieAlgebra, x: Vector, y: Vector) -> Vector:
    """Bracket on pairs ``(x+, x-)`` stored as 2n-vectors; the second slot uses the opposite bracket."""
    n = alg.dim
    first = bracket(alg, x[:n], y[:n])
    second = bracket(alg, y[n:], x[n:])
    return first + second


def g_tilde(lr: LieRbs, cay: LieCayley | None = None) -> Subspace:
    """``{(u+, u-) ∈ Im B1 ⊕ Im B2 : θ(ū+) = ū-}`` inside Q^(2n)."""
    cay = cay or lie_cayley_transform(lr)
    n = lr.alg.dim
    im1, im2 = cay.Q1.S, cay.Q2.S
    # condition θ·proj1(a) - proj2(b) = 0 on coordinates in the image bases
    rows_a = [cay.theta.apply(cay.Q1.coords(v)) if cay.Q2.dim else () for v in im1.basis]
    rows_b = [ql.vscale(-1, cay.Q2.coords(v)) if cay.Q2.dim else () for v in im2.basis]
    cols = rows_a + rows_b
    m = im1.dim + im2.dim
    if cay.Q2.dim == 0:
        params = [ql.unit_vec(m, i) for i in range(m)]
    else:
        params = list(ql.kernel(Matrix.from_columns(cols, cay.Q2.dim)).basis)
    out = []
    for p in params:
        x = ql.zero_vec(n)
        y = ql.zero_vec(n)
        for a, v in zip(p[:im1.dim], im1.basis):
            x = ql.vadd(x, ql.vscale(a, v))
        for b, v in zip(p[im1.dim:], im2.basis):
            y = ql.vadd(y, ql.vscale(b, v))
        out.append(x + y)
    return ql.span(out, 2 * n)


@dataclass(frozen=True)
class TMap:
    domain: Subspace
    target: Subspace
    surjective: bool

    def to_dict(self) -> dict:
        return {"phi_image": self.domain.to_strings(), "g_tilde": self.target.to_strings(),
                "surjective": self.surjective}


def t_map(lr: LieRbs) -> TMap:
    """``T(u) = (B1 u, B2 u)`` on φ(g): an injective bracket map into g̃.

    Onto g̃ is asserted for decomposable systems only. Without that
    hypothesis a preimage in g need not come from φ(g); on ``[x,y]=y``,
    ``B1=[[1,1],[1,1]]``, ``B2=[[0,-1],[0,-1]]`` has φ idempotent and a
    2-dimensional g̃ over a 1-dimensional φ(g).
    """
    _need_verified(lr)
    alg, phi = lr.alg, lr.phi
    if phi @ phi != phi:
        raise NotIdempotent("phi = B1 + B2 is not idempotent")
    db = derived_bracket(lr)
    dom = ql.image(phi)
    require(is_subalgebra(db.alg_r, dom), "phi(g) is not closed under the derived bracket")
    cay = lie_cayley_transform(lr)
    target = g_tilde(lr, cay)
    require(is_subalgebra_pairs(alg, target), "g̃ is not closed under the pair bracket")
    T = lambda u: lr.b1.apply(u) + lr.b2.apply(u)
    images = [T(u) for u in dom.basis]
    require(all(target.contains(x) for x in images), "T leaves g̃")
    require(ql.span(images, 2 * alg.dim).dim == dom.dim, "T is not injective")
    onto = target.dim == dom.dim
    require(onto or not is_decomposable(lr), "T is not surjective onto g̃")
    for u in dom.basis:
        for v in dom.basis:
            require(T(db.bracket(u, v)) == pair_bracket(alg, T(u), T(v)), "T does not preserve brackets")
    return TMap(dom, target, onto)


def is_subalgebra_pairs(alg: LieAlgebra, U: Subspace) -> bool:
    return all(U.contains(pair_bracket(alg, x, y)) for x in U.basis for y in U.basis)


def lie_factorize(lr: LieRbs, w: Sequence) -> tuple[Vector, Vector]:
    """Split ``w ∈ φ(g)`` as ``u+ + u-`` with ``(u+, u-) ∈ g̃``; uniqueness is checked."""
    _need_verified(lr)
    n = lr.alg.dim
    w = ql.vec(w)
    if len(w) != n:
        raise DimensionMismatch(f"vector must have length {n}")
    if not is_decomposable(lr):
        raise NotDecomposable("Ker phi is not contained in Ker B1")
    u = ql.solve(lr.phi, w)
    if u is None:
        raise NotInImage("vector is not in the image of phi")
    pair = (lr.b1.apply(u), lr.b2.apply(u))
    target = g_tilde(lr)
    require(target.contains(pair[0] + pair[1]), "(B1 u, B2 u) is not in g̃")
    # pairs in g̃ summing to w form a coset of g̃ ∩ {(x, -x)}
    anti = ql.span([ql.unit_vec(n, i) + ql.vscale(-1, ql.unit_vec(n, i)) for i in range(n)], 2 * n)
    require(ql.subspace_intersect(target, anti).dim == 0, "decomposition is not unique")
    return pair


def idempotent_split_criterion(lr: LieRbs) -> bool:
    """``(decomposable and φ² = φ) ⟺ (B1 φ = B1 and B2 φ = B2)``; returns the common value."""
    left = is_decomposable(lr) and lr.phi @ lr.phi == lr.phi
    right = lr.b1 @ lr.phi == lr.b1 and lr.b2 @ lr.phi == lr.b2
    require(left == right, "idempotent split criterion biconditional fails")
    return left


# -- Yang-Baxter forms ---------------------------------------------------------


def tmybe_violations(alg: LieAlgebra, R: Matrix, phi: Matrix) -> list[LieViolation]:
    _square(alg, R, phi)
    out = []
    n = alg.dim
    for i in range(n):
        for j in range(n):
            ru, rv = R.column(i), R.column(j)
            pu, pv = phi.column(i), phi.column(j)
            x = ql.vadd(bracket(alg, ru, pv), bracket(alg, pu, rv))
            lhs3 = ql.vadd(bracket(alg, ru, rv), bracket(alg, pu, pv))
            rhs3 = R.apply(x)
            if lhs3 != rhs3:
                out.append(LieViolation("TWT3", i, j, lhs3, rhs3))
            rhs4 = phi.apply(x)
            if x != rhs4:
                out.append(LieViolation("TWT4", i, j, x, rhs4))
    return out


def verify_tmybe(alg: LieAlgebra, R: Matrix, phi: Matrix) -> tuple[bool, list[LieViolation]]:
    bad = tmybe_violations(alg, R, phi)
    return (not bad, bad)


def tmybe_equivalence(alg: LieAlgebra, b1: Matrix, b2: Matrix) -> bool:
    rbs = is_lie_rbs(alg, b1, b2)
    tm, _ = verify_tmybe(alg, b1 - b2, b1 + b2)
    require(rbs == tm, "Rota-Baxter system and twisted Yang-Baxter flags disagree")
    return rbs


def verify_lie_rb_weight(alg: LieAlgebra, B: Matrix, lam) -> bool:
    """``[Bu,Bv] = B([Bu,v]) + B([u,Bv]) + λ B([u,v])`` on basis pairs."""
    _square(alg, B)
    lam = ql.q(lam)
    for i in range(alg.dim):
        for j in range(alg.dim):
            u, v = alg.basis(i), alg.basis(j)
            bu, bv = B.column(i), B.column(j)
            inner = ql.vadd(ql.vadd(bracket(alg, bu, v), bracket(alg, u, bv)), ql.vscale(lam, bracket(alg, u, v)))
            if bracket(alg, bu, bv) != B.apply(inner):
                return False
    return True


def verify_myb(alg: LieAlgebra, R: Matrix) -> bool:
    """``[Ru,Rv] = R([Ru,v]) + R([u,Rv]) - [u,v]`` on basis pairs."""
    _square(alg, R)
    for i in range(alg.dim):
        for j in range(alg.dim):
            u, v = alg.basis(i), alg.basis(j)
            ru, rv = R.column(i), R.column(j)
            rhs = ql.vsub(R.apply(ql.vadd(bracket(alg, ru, v), bracket(alg, u, rv))), bracket(alg, u, v))
            if bracket(alg, ru, rv) != rhs:
                return False
    return True


def myb_reduction(alg: LieAlgebra, R: Matrix) -> dict:
    """With φ = id all four forms agree: the twisted pair, the modified equation, P1 at weight -1, P2 at weight +1."""
    n = alg.dim
    one = Matrix.identity(n)
    flags = {
        "tmybe": verify_tmybe(alg, R, one)[0],
        "myb": verify_myb(alg, R),
        "p1_weight_minus1": verify_lie_rb_weight(alg, (R + one).scale(Fraction(1, 2)), -1),
        "p2_weight_plus1": verify_lie_rb_weight(alg, (R - one).scale(Fraction(1, 2)), 1),
    }
    require(len(set(flags.values())) == 1, f"Yang-Baxter reductions disagree: {flags}")
    return flags


# -- fixtures ------------------------------------------------------------------


def diag(*xs) -> Matrix:
    n = len(xs)
    return Matrix(tuple(tuple(ql.q(xs[i]) if i == j else Fraction(0) for j in range(n)) for i in range(n)), n)


def borel_instance() -> LieRbs:
    """sl2 with B1 projecting onto span(e, h) and B2 onto span(f)."""
    return verify_lie_rbs(sl2(), diag(1, 1, 0), diag(0, 0, 1))


def efh_instance() -> LieRbs:
    """sl2 split as g₊ = span(e), g₋ = span(f), V = span(h)."""
    alg = sl2()
    return from_triple_decomposition(alg, ql.span([alg.basis(0)], 3), ql.span([alg.basis(2)], 3),
                                     ql.span([alg.basis(1)], 3))

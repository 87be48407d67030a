"""Explicit representations of the n-Kronecker quiver over F_p.

A representation carries ``n`` matrices of shape ``b x a`` (source dimension
``a``, sink dimension ``b``); matrix ``i`` sends a source column vector to the
sink.  A subrepresentation is a pair ``(U2, U1)`` of canonical (RREF) bases,
``U2`` in the source and ``U1`` in the sink, with every ``alpha_i(U2)`` inside
``U1``.

The oracle runs over F_p rather than an algebraically closed field.  Every
statement checked here is field-robust for the tested dimension vectors, but
sampling over F_p cannot refute statements that are special to algebraically
closed base fields.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from ..dimvec import DimVec, KroneckerContext
from ..errors import BudgetExceeded, PreconditionError, SchemaError
from . import ffield as ff
from .ffield import Basis

DEFAULT_END_BUDGET = 2**20


@dataclass(frozen=True)
class Rep:
    n: int
    p: int
    a: int
    b: int
    mats: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise PreconditionError("need at least one arrow")
        if not ff.is_prime(self.p):
            raise PreconditionError(f"p={self.p} is not prime")
        if self.a < 0 or self.b < 0:
            raise PreconditionError("dimensions must be nonnegative")
        if len(self.mats) != self.n:
            raise PreconditionError(f"expected {self.n} matrices, got {len(self.mats)}")
        for m in self.mats:
            if len(m) != self.b or any(len(row) != self.a for row in m):
                raise PreconditionError(f"matrix shape must be {self.b}x{self.a}")
            if any(not 0 <= x < self.p for row in m for x in row):
                raise PreconditionError(f"matrix entries must lie in [0, {self.p})")

    @property
    def dim(self) -> DimVec:
        return DimVec(self.a, self.b)

    @property
    def length(self) -> int:
        return self.a + self.b

    @property
    def ctx(self) -> KroneckerContext:
        return KroneckerContext(self.n)

    def act(self, i: int, v: Sequence[int]) -> tuple[int, ...]:
        return ff.mat_vec(self.mats[i], v, self.p)

    @cached_property
    def kernel(self) -> Basis:
        """Source vectors killed by every arrow."""
        if self.a == 0:
            return ()
        stacked = [row for m in self.mats for row in m]
        return ff.nullspace(stacked, self.a, self.p)

    def image_of(self, U2: Basis) -> Basis:
        """Canonical basis of ``sum_i alpha_i(U2)``."""
        vecs = [self.act(i, u) for u in U2 for i in range(self.n)]
        return ff.rref(vecs, self.p, self.b)

    def joint_preimage(self, U1: Basis) -> Basis:
        """``W(U1) = intersection of alpha_i^-1(U1)``: the largest U2 allowed over U1."""
        piv = ff.pivots(U1)
        pset = set(piv)
        eqs = []
        for m in self.mats:
            for c in range(self.b):
                if c in pset:
                    continue
                row = list(m[c])
                for t, pc in zip(U1, piv):
                    f = t[c]
                    if f:
                        row = [(x - f * y) % self.p for x, y in zip(row, m[pc])]
                eqs.append(row)
        return ff.nullspace(eqs, self.a, self.p)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "dim": [self.a, self.b],
            "mats": [[x for row in m for x in row] for m in self.mats],
        }

    @classmethod
    def from_json(cls, data) -> "Rep":
        if not isinstance(data, dict) or set(data) != {"n", "p", "dim", "mats"}:
            raise SchemaError("representation JSON needs exactly the keys n, p, dim, mats")
        n, p, dim, mats = data["n"], data["p"], data["dim"], data["mats"]
        if not (isinstance(n, int) and isinstance(p, int) and not isinstance(n, bool) and not isinstance(p, bool)):
            raise SchemaError("n and p must be integers")
        if not ff.is_prime(p):
            raise SchemaError(f"p={p} is not prime")
        if not (isinstance(dim, list) and len(dim) == 2 and all(isinstance(x, int) and x >= 0 for x in dim)):
            raise SchemaError("dim must be [a, b] with nonnegative integers")
        a, b = dim
        if not isinstance(mats, list) or len(mats) != n:
            raise SchemaError(f"mats must hold {n} matrices")
        out = []
        for m in mats:
            if not isinstance(m, list) or len(m) != a * b or not all(isinstance(x, int) and not isinstance(x, bool) for x in m):
                raise SchemaError(f"each matrix must be a row-major list of {b}x{a} = {a * b} integers")
            if any(not 0 <= x < p for x in m):
                raise SchemaError(f"matrix entries must lie in [0, {p})")
            out.append(tuple(tuple(m[r * a:(r + 1) * a]) for r in range(b)))
        try:
            return cls(n, p, a, b, tuple(out))
        except PreconditionError as exc:
            raise SchemaError(str(exc)) from exc


def make_rep(n: int, p: int, a: int, b: int, mats) -> Rep:
    return Rep(n, p, a, b, tuple(tuple(tuple(x % p for x in row) for row in m) for m in mats))


def dumps(rep: Rep) -> str:
    return json.dumps(rep.to_json(), separators=(",", ":"))


def loads(text: str) -> Rep:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    return Rep.from_json(data)


def store(rep: Rep, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(dumps(rep))
        fh.write("\n")


def load(path) -> Rep:
    with open(path, encoding="ascii") as fh:
        return loads(fh.read())


# ---------------------------------------------------------------- constructors


def build_canonical(ctx: KroneckerContext, p: int, kind: str, params=None) -> Rep:
    """Explicit realizations of P1, P2, Q0, Q1 and of dimension (1, c) modules.

    * P2 = (1, n): arrow i sends the source basis vector to sink basis vector i.
    * Q1 = (n, 1): arrow i is the i-th coordinate functional.
    * ``OneC`` takes ``params = (c, columns)`` with one column in F_p^c per
      arrow (a scalar is accepted when c = 1).  Its indecomposability is not
      assumed; call :func:`is_indecomposable`.
    """
    n = ctx.n
    if kind == "P1":
        return make_rep(n, p, 0, 1, [[()]] * n)
    if kind == "Q0":
        return make_rep(n, p, 1, 0, [()] * n)
    if kind == "P2":
        return make_rep(n, p, 1, n, [[(int(r == i),) for r in range(n)] for i in range(n)])
    if kind == "Q1":
        return make_rep(n, p, n, 1, [[tuple(int(c == i) for c in range(n))] for i in range(n)])
    if kind == "OneC":
        try:
            c, columns = params
        except (TypeError, ValueError):
            raise PreconditionError("OneC needs params (c, columns)") from None
        if c < 1 or len(columns) != n:
            raise PreconditionError(f"OneC needs c >= 1 and {n} columns")
        mats = []
        for col in columns:
            col = (col,) if isinstance(col, int) else tuple(col)
            if len(col) != c:
                raise PreconditionError(f"each OneC column must have {c} entries")
            mats.append([(x,) for x in col])
        return make_rep(n, p, 1, c, mats)
    raise PreconditionError(f"unknown kind {kind!r}")


def direct_sum(x: Rep, y: Rep) -> Rep:
    if (x.n, x.p) != (y.n, y.p):
        raise PreconditionError("direct sum needs equal n and p")
    mats = []
    for mx, my in zip(x.mats, y.mats):
        rows = [tuple(r) + (0,) * y.a for r in mx] + [(0,) * x.a + tuple(r) for r in my]
        mats.append(rows)
    return make_rep(x.n, x.p, x.a + y.a, x.b + y.b, mats)


def dual(x: Rep) -> Rep:
    """Transpose every arrow; the Kronecker quiver is self-opposite, so this swaps
    preprojectives and preinjectives (``P_r <-> Q_{r-1}``)."""
    mats = [[tuple(m[c][r] for c in range(x.b)) for r in range(x.a)] for m in x.mats]
    return make_rep(x.n, x.p, x.b, x.a, mats)


def _draw(rng: random.Random, p: int) -> int:
    # rejection sampling on getrandbits keeps the stream identical across platforms
    bits = max(1, (p - 1).bit_length())
    while True:
        x = rng.getrandbits(bits)
        if x < p:
            return x


def random_rep(ctx: KroneckerContext, p: int, dim: DimVec, seed: int) -> Rep:
    """Uniform entries from MT19937 seeded with ``seed``, drawn matrix by matrix, row-major."""
    rng = random.Random(seed)
    mats = [[tuple(_draw(rng, p) for _ in range(dim.a)) for _ in range(dim.b)] for _ in range(ctx.n)]
    return make_rep(ctx.n, p, dim.a, dim.b, mats)


def random_indecomposable(
    ctx: KroneckerContext, p: int, dim: DimVec, seed: int, max_tries: int = 200, end_budget: int = DEFAULT_END_BUDGET
) -> tuple[Rep, int]:
    """First indecomposable among ``random_rep(seed + k)``, k = 0, 1, ...; returns (rep, k).

    Samples whose endomorphism algebra is too large to enumerate are skipped,
    not classified.
    """
    for k in range(max_tries):
        r = random_rep(ctx, p, dim, seed + k)
        try:
            if is_indecomposable(r, end_budget):
                return r, k
        except BudgetExceeded:
            continue
    raise PreconditionError(f"no indecomposable of dimension {dim} in {max_tries} tries from seed {seed}")


# ---------------------------------------------------------------- endomorphisms


def endomorphisms(rep: Rep) -> Basis:
    """Basis of End(rep) as flat vectors ``phi1 (b x b, row-major) ++ phi2 (a x a)``.

    Solves ``phi1 alpha_i = alpha_i phi2`` for all arrows.
    """
    a, b, p = rep.a, rep.b, rep.p
    nv = b * b + a * a
    rows = []
    for A in rep.mats:
        for r in range(b):
            for c in range(a):
                eq = [0] * nv
                for s in range(b):  # (phi1 A)[r][c] = sum_s phi1[r][s] A[s][c]
                    if A[s][c]:
                        eq[r * b + s] = (eq[r * b + s] + A[s][c]) % p
                for s in range(a):  # (A phi2)[r][c] = sum_s A[r][s] phi2[s][c]
                    if A[r][s]:
                        k = b * b + s * a + c
                        eq[k] = (eq[k] - A[r][s]) % p
                rows.append(eq)
    return ff.nullspace(rows, nv, p)


def split_endomorphism(rep: Rep, flat: Sequence[int]):
    a, b = rep.a, rep.b
    phi1 = tuple(tuple(flat[r * b:(r + 1) * b]) for r in range(b))
    off = b * b
    phi2 = tuple(tuple(flat[off + r * a: off + (r + 1) * a]) for r in range(a))
    return phi1, phi2


def _nilpotent_or_invertible(phi1, phi2, total: int, p: int) -> bool:
    if ff.rank(phi1, p, len(phi1)) == len(phi1) and ff.rank(phi2, p, len(phi2)) == len(phi2):
        return True
    zero1 = not phi1 or not any(any(r) for r in ff.mat_pow(phi1, total, p))
    zero2 = not phi2 or not any(any(r) for r in ff.mat_pow(phi2, total, p))
    return zero1 and zero2


def is_indecomposable(rep: Rep, end_budget: int = DEFAULT_END_BUDGET) -> bool:
    """Fitting's lemma: indecomposable iff every endomorphism is nilpotent or invertible.

    All ``p^d`` endomorphisms are enumerated (``d = dim End``), so the answer is
    exact; BudgetExceeded is raised when ``p^d`` exceeds ``end_budget``.
    """
    if rep.length == 0:
        return False
    basis = endomorphisms(rep)
    d = len(basis)
    if d == 1:
        return True  # End = scalars
    if rep.p**d > end_budget:
        raise BudgetExceeded("endomorphism enumeration", rep.p**d, end_budget)
    p, nv = rep.p, len(basis[0])
    for coeffs in itertools.product(range(p), repeat=d):
        flat = [0] * nv
        for c, vec in zip(coeffs, basis):
            if c:
                flat = [(x + c * y) % p for x, y in zip(flat, vec)]
        phi1, phi2 = split_endomorphism(rep, flat)
        if not _nilpotent_or_invertible(phi1, phi2, rep.length, p):
            return False
    return True


# ---------------------------------------------------------------- subrepresentations


@dataclass(frozen=True, order=True)
class SubRep:
    U2: Basis
    U1: Basis

    @property
    def dim(self) -> DimVec:
        return DimVec(len(self.U2), len(self.U1))

    @property
    def length(self) -> int:
        return len(self.U2) + len(self.U1)

    def to_json(self) -> dict:
        return {"U2": [list(v) for v in self.U2], "U1": [list(v) for v in self.U1]}

    @classmethod
    def from_json(cls, data) -> "SubRep":
        if not isinstance(data, dict) or set(data) != {"U2", "U1"}:
            raise SchemaError("subrepresentation JSON needs keys U2, U1")
        return cls(tuple(tuple(v) for v in data["U2"]), tuple(tuple(v) for v in data["U1"]))


def whole(rep: Rep) -> SubRep:
    return SubRep(ff.full_space(rep.a), ff.full_space(rep.b))


def canonical_subrep(rep: Rep, U2, U1) -> SubRep:
    return SubRep(ff.rref(U2, rep.p, rep.a), ff.rref(U1, rep.p, rep.b))


def is_subrep(rep: Rep, U: SubRep) -> bool:
    return all(ff.contains(U.U1, rep.act(i, u), rep.p) for u in U.U2 for i in range(rep.n))


def contained_in(U: SubRep, V: SubRep, p: int) -> bool:
    return ff.is_subspace(U.U2, V.U2, p) and ff.is_subspace(U.U1, V.U1, p)


def restrict(rep: Rep, U: SubRep) -> Rep:
    """The subrepresentation as a representation in the bases ``U2``, ``U1``."""
    if not is_subrep(rep, U):
        raise PreconditionError("not a subrepresentation")
    mats = []
    for i in range(rep.n):
        cols = [ff.coords(rep.act(i, u), U.U1) for u in U.U2]
        mats.append([tuple(col[r] for col in cols) for r in range(len(U.U1))])
    return make_rep(rep.n, rep.p, len(U.U2), len(U.U1), mats)


def quotient(rep: Rep, U: SubRep) -> Rep:
    """``rep / U`` in the coordinates not used as pivots by ``U``."""
    if not is_subrep(rep, U):
        raise PreconditionError("not a subrepresentation")
    p = rep.p
    src_free = [c for c in range(rep.a) if c not in set(ff.pivots(U.U2))]
    snk_free = [c for c in range(rep.b) if c not in set(ff.pivots(U.U1))]
    mats = []
    for i in range(rep.n):
        cols = []
        for c in src_free:
            e = tuple(int(k == c) for k in range(rep.a))
            img = ff.reduce(rep.act(i, e), U.U1, p)
            cols.append([img[r] for r in snk_free])
        mats.append([tuple(col[r] for col in cols) for r in range(len(snk_free))])
    return make_rep(rep.n, p, len(src_free), len(snk_free), mats)

"""Dimension-vector arithmetic for the n-Kronecker quiver.

Conventions (fixed once, used everywhere):

* A dimension vector ``(a, b)`` has ``a`` = dimension at the source vertex 2 and
  ``b`` = dimension at the sink vertex 1.  So ``P1 = (0, 1)``, ``P2 = (1, n)``,
  ``Q0 = (1, 0)`` and ``Q1 = (n, 1)``.
* Vectors are rows multiplied by matrices on the right: ``dim tau M = (dim M) Phi``
  with ``Phi = [[n^2-1, n], [-n, -1]]`` and ``Phi^-1 = [[-1, -n], [n, n^2-1]]``.
* Imaginary roots are the vectors with ``q < 0``.  For ``n >= 3`` no nonzero
  integer vector has ``q = 0`` (the eigenray slopes are irrational), so the
  strict and non-strict definitions agree.

All arithmetic is on Python ints; entries grow exponentially along orbits.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import InternalContradiction, NotARoot, OrbitEscape, PreconditionError, SchemaError


@dataclass(frozen=True)
class KroneckerContext:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 3:
            raise PreconditionError(f"arrow count must be an integer >= 3, got {self.n!r}")

    @cached_property
    def cartan(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((1, 0), (self.n, 1))

    @cached_property
    def coxeter(self) -> tuple[tuple[int, int], tuple[int, int]]:
        n = self.n
        return ((n * n - 1, n), (-n, -1))

    @cached_property
    def coxeter_inv(self) -> tuple[tuple[int, int], tuple[int, int]]:
        n = self.n
        return ((-1, -n), (n, n * n - 1))


@dataclass(frozen=True, order=False)
class DimVec:
    a: int
    b: int

    def __iter__(self):
        yield self.a
        yield self.b

    def __add__(self, other: "DimVec") -> "DimVec":
        return DimVec(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "DimVec") -> "DimVec":
        return DimVec(self.a - other.a, self.b - other.b)

    def __mul__(self, k: int) -> "DimVec":
        return DimVec(k * self.a, k * self.b)

    __rmul__ = __mul__

    def __str__(self):
        return f"({self.a},{self.b})"

    @property
    def length(self) -> int:
        return self.a + self.b

    def below(self, other: "DimVec") -> bool:
        """Componentwise strict inequality ``self < other``."""
        return self.a < other.a and self.b < other.b

    def is_nonnegative(self) -> bool:
        return self.a >= 0 and self.b >= 0

    def swapped(self) -> "DimVec":
        return DimVec(self.b, self.a)

    def to_json(self) -> list[str]:
        return [str(self.a), str(self.b)]

    @classmethod
    def from_json(cls, data) -> "DimVec":
        if not (isinstance(data, list) and len(data) == 2 and all(isinstance(x, (str, int)) for x in data)):
            raise SchemaError("dimension vector JSON must be a two-element array")
        try:
            return cls(int(data[0]), int(data[1]))
        except ValueError as exc:
            raise SchemaError(str(exc)) from exc


def dv(a: int, b: int) -> DimVec:
    return DimVec(a, b)


def length(v: DimVec) -> int:
    return v.a + v.b


def _row_times(v: DimVec, m) -> DimVec:
    return DimVec(v.a * m[0][0] + v.b * m[1][0], v.a * m[0][1] + v.b * m[1][1])


def coxeter_step(ctx: KroneckerContext, v: DimVec, direction: int) -> DimVec:
    """One unchecked step: ``v Phi`` for direction +1 (tau), ``v Phi^-1`` for -1."""
    return _row_times(v, ctx.coxeter if direction > 0 else ctx.coxeter_inv)


def coxeter_apply(ctx: KroneckerContext, v: DimVec, k: int) -> DimVec:
    """Return ``v Phi^k``, raising OrbitEscape when any step leaves the positive cone."""
    step = 1 if k > 0 else -1
    cur = v
    for s in range(abs(k)):
        cur = coxeter_step(ctx, cur, step)
        if cur.a < 0 or cur.b < 0 or cur.length == 0:
            raise OrbitEscape(f"{v} Phi^{k}: step {s + 1} gives {cur}")
    return cur


def quadratic_form(ctx: KroneckerContext, v: DimVec) -> int:
    return v.a * v.a + v.b * v.b - ctx.n * v.a * v.b


def euler_form(ctx: KroneckerContext, x: DimVec, y: DimVec) -> int:
    return x.a * y.a + x.b * y.b - ctx.n * x.a * y.b


class RootKind(enum.Enum):
    REAL = "real"
    IMAGINARY = "imaginary"
    NOT_ROOT = "not-root"


def classify_root(ctx: KroneckerContext, v: DimVec) -> RootKind:
    if not v.is_nonnegative():
        raise PreconditionError(f"{v} is not a nonnegative vector")
    if v.length == 0:
        raise PreconditionError("the zero vector is not classified")
    q = quadratic_form(ctx, v)
    if q == 1:
        return RootKind.REAL
    if q < 0:
        return RootKind.IMAGINARY
    return RootKind.NOT_ROOT


def preprojective_dim(ctx: KroneckerContext, r: int) -> DimVec:
    """``P_r``: ``P_1 = (0,1)``, ``P_2 = (1,n)``, ``P_{r+2} = P_r Phi^-1``."""
    if r < 1:
        raise PreconditionError(f"preprojective index must be >= 1, got {r}")
    v = DimVec(0, 1) if r % 2 else DimVec(1, ctx.n)
    for _ in range((r - 1) // 2):
        v = coxeter_step(ctx, v, -1)
    return v


def preinjective_dim(ctx: KroneckerContext, r: int) -> DimVec:
    """``Q_r``: ``Q_0 = (1,0)``, ``Q_1 = (n,1)``, ``Q_{r+2} = Q_r Phi``."""
    if r < 0:
        raise PreconditionError(f"preinjective index must be >= 0, got {r}")
    v = DimVec(1, 0) if r % 2 == 0 else DimVec(ctx.n, 1)
    for _ in range(r // 2):
        v = coxeter_step(ctx, v, 1)
    return v


class Position(enum.Enum):
    PREPROJECTIVE = "preprojective"
    PREINJECTIVE = "preinjective"
    REGULAR = "regular"


@dataclass(frozen=True)
class PositionClass:
    kind: Position
    index: int | None = None

    def __str__(self):
        if self.kind is Position.REGULAR:
            return "Regular"
        name = "P" if self.kind is Position.PREPROJECTIVE else "Q"
        return f"{name}{self.index}"

    def to_json(self) -> dict:
        out = {"kind": self.kind.value}
        if self.index is not None:
            out["index"] = str(self.index)
        return out


def preprojective(r: int) -> PositionClass:
    return PositionClass(Position.PREPROJECTIVE, r)


def preinjective(r: int) -> PositionClass:
    return PositionClass(Position.PREINJECTIVE, r)


REGULAR = PositionClass(Position.REGULAR)


def classify_position(ctx: KroneckerContext, v: DimVec) -> PositionClass:
    kind = classify_root(ctx, v)
    if kind is RootKind.NOT_ROOT:
        raise NotARoot(f"{v} has q = {quadratic_form(ctx, v)} (n={ctx.n})")
    if kind is RootKind.IMAGINARY:
        return REGULAR
    target = v.length
    r = 1
    while True:
        p = preprojective_dim(ctx, r)
        if p == v:
            return preprojective(r)
        if p.length > target:
            break
        r += 1
    r = 0
    while True:
        q = preinjective_dim(ctx, r)
        if q == v:
            return preinjective(r)
        if q.length > target:
            break
        r += 1
    raise InternalContradiction(f"real root {v} is neither preprojective nor preinjective (n={ctx.n})")


def orbit_sum_check(ctx: KroneckerContext, x0: DimVec, r: int) -> bool:
    """Check ``sum_{i=0}^{r} tau^-i x0 < tau^-(r+1) x0`` componentwise."""
    if x0.a > x0.b:
        raise PreconditionError(f"orbit sum inequality needs a <= b, got {x0}")
    if r < 0:
        raise PreconditionError("r must be >= 0")
    total = DimVec(0, 0)
    cur = x0
    for _ in range(r + 1):
        total = total + cur
        cur = coxeter_step(ctx, cur, -1)
    return total.below(cur)


def hom_bound_second_coord(ctx: KroneckerContext, x: DimVec) -> Fraction:
    """Lower bound ``b + q(a,b) / ((n+1)a - b)`` on the sink dimension of an
    equal-length regular ``Y`` with ``Hom(X, Y) = 0``."""
    denom = (ctx.n + 1) * x.a - x.b
    if denom <= 0:
        raise PreconditionError(f"needs (n+1)a > b, got {x} for n={ctx.n}")
    return x.b + Fraction(quadratic_form(ctx, x), denom)


def root_window_check(ctx: KroneckerContext, v: DimVec) -> bool:
    """True iff no ``(a-t, b+t)`` with ``1 <= t <= a-1`` is an imaginary root."""
    for t in range(1, v.a):
        if quadratic_form(ctx, DimVec(v.a - t, v.b + t)) < 0:
            return False
    return True


def positive_roots(ctx: KroneckerContext, max_length: int) -> list[tuple[DimVec, RootKind]]:
    """All positive roots of length at most ``max_length``, ordered by (length, a)."""
    out = []
    for total in range(1, max_length + 1):
        for a in range(total + 1):
            v = DimVec(a, total - a)
            kind = classify_root(ctx, v)
            if kind is not RootKind.NOT_ROOT:
                out.append((v, kind))
    return out

"""Closed-form GR measures for the n-Kronecker quiver.

Two families are covered:

* the take-off chain ``mu(P_r) = {|P_1|, ..., |P_r|}``;
* ``mu(tau^-i X[j])`` for ``dim X = (1, c)``, ``1 <= c <= n-1``.  The irreducible
  monomorphisms ``tau^-i X[j] -> tau^-i X[j+1]`` are GR inclusions, so the
  measure grows by one length per step in ``j``; at ``j = 1`` the GR submodule is
  preprojective: ``P_1`` for ``i = 0``, ``P_{2i}`` for ``c = 1, i >= 1`` and
  ``P_{2i+1}`` for ``c >= 2``.

Each family measure is a direct successor of the previous one in ``j``.
:func:`measure_universe` collects the measures within bounds so that this can
be checked on a finite universe; it is not a substitute for the full module
category.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .dimvec import (
    DimVec,
    KroneckerContext,
    PositionClass,
    coxeter_apply,
    preprojective,
    preprojective_dim,
)
from .errors import PreconditionError
from .grorder import GrMeasure, extend, starts_with


@dataclass(frozen=True, order=True)
class RegularCoord:
    """``tau^-i X[j]`` for any indecomposable ``X`` with ``dim X = (1, c)``."""

    c: int
    i: int
    j: int

    def validate(self, ctx: KroneckerContext) -> "RegularCoord":
        if not 1 <= self.c <= ctx.n - 1:
            raise PreconditionError(f"c must lie in 1..{ctx.n - 1}, got {self.c}")
        if self.i < 0 or self.j < 1:
            raise PreconditionError(f"need i >= 0 and j >= 1, got i={self.i}, j={self.j}")
        return self

    def __str__(self):
        return f"tau^-{self.i} X(1,{self.c})[{self.j}]"

    def to_json(self) -> dict:
        return {"c": str(self.c), "i": str(self.i), "j": str(self.j)}


@dataclass(frozen=True)
class GrDescriptor:
    coord: RegularCoord
    gr_submodule: PositionClass | RegularCoord
    measure: GrMeasure
    dim: DimVec

    def to_json(self) -> dict:
        sub = self.gr_submodule
        return {
            "coord": self.coord.to_json(),
            "dim": self.dim.to_json(),
            "length": str(self.dim.length),
            "measure": self.measure.to_json(),
            "gr_submodule": {"regular": sub.to_json()} if isinstance(sub, RegularCoord) else sub.to_json(),
        }


class _Memo:
    """Write-once-per-key cache; values are pure functions of the key."""

    def __init__(self):
        self._data: dict = {}
        self._lock = threading.Lock()

    def get(self, key, compute):
        try:
            return self._data[key]
        except KeyError:
            pass
        value = compute()
        with self._lock:
            return self._data.setdefault(key, value)


_translates = _Memo()
_measures = _Memo()


def _translate(ctx: KroneckerContext, c: int, t: int) -> DimVec:
    return _translates.get((ctx.n, c, t), lambda: coxeter_apply(ctx, DimVec(1, c), -t))


def preprojective_measure(ctx: KroneckerContext, r: int) -> GrMeasure:
    if r < 1:
        raise PreconditionError("r must be >= 1")
    return GrMeasure(preprojective_dim(ctx, s).length for s in range(1, r + 1))


def family_dim(ctx: KroneckerContext, coord: RegularCoord) -> DimVec:
    coord.validate(ctx)
    total = DimVec(0, 0)
    for t in range(coord.i, coord.i + coord.j):
        total = total + _translate(ctx, coord.c, t)
    return total


def family_gr_submodule(ctx: KroneckerContext, coord: RegularCoord) -> PositionClass | RegularCoord:
    coord.validate(ctx)
    c, i, j = coord.c, coord.i, coord.j
    if j >= 2:
        return RegularCoord(c, i, j - 1)
    if i == 0:
        return preprojective(1)
    if c == 1:
        return preprojective(2 * i)  # tau^-(i-1) P_2
    return preprojective(2 * i + 1)  # tau^-i P_1


def family_measure(ctx: KroneckerContext, coord: RegularCoord) -> GrMeasure:
    coord.validate(ctx)

    def compute():
        sub = family_gr_submodule(ctx, coord)
        if isinstance(sub, RegularCoord):
            base = family_measure(ctx, sub)
        else:
            base = preprojective_measure(ctx, sub.index)
        return extend(base, family_dim(ctx, coord).length)

    return _measures.get((ctx.n, coord), compute)


def describe(ctx: KroneckerContext, coord: RegularCoord) -> GrDescriptor:
    return GrDescriptor(
        coord=coord,
        gr_submodule=family_gr_submodule(ctx, coord),
        measure=family_measure(ctx, coord),
        dim=family_dim(ctx, coord),
    )


def direct_successor(ctx: KroneckerContext, coord: RegularCoord) -> GrMeasure:
    coord.validate(ctx)
    nxt = family_measure(ctx, RegularCoord(coord.c, coord.i, coord.j + 1))
    assert starts_with(nxt, family_measure(ctx, coord))
    return nxt


def segment(ctx: KroneckerContext, c: int, i: int, j_max: int) -> list[GrMeasure]:
    if j_max < 1:
        raise PreconditionError("j_max must be >= 1")
    return [family_measure(ctx, RegularCoord(c, i, j)) for j in range(1, j_max + 1)]


def monotone_in_i(ctx: KroneckerContext, c: int, i: int, i2: int) -> bool:
    """True iff ``mu(tau^-i2 X) < mu(tau^-i X)``; requires ``0 <= i < i2``."""
    if not 0 <= i < i2:
        raise PreconditionError("need 0 <= i < i'")
    return family_measure(ctx, RegularCoord(c, i2, 1)) < family_measure(ctx, RegularCoord(c, i, 1))


def landing_order(r: int, s: int) -> bool:
    """``mu(Q_r) > mu(Q_s)``, known only as an ordering of indices (``1 <= r < s``)."""
    if not 1 <= r:
        raise PreconditionError("landing measures start at Q_1")
    return r < s


@dataclass(frozen=True)
class UniverseBounds:
    r_max: int
    c_values: tuple[int, ...] = ()
    i_max: int = 0
    j_max: int = 1


def measure_universe(ctx: KroneckerContext, bounds: UniverseBounds) -> dict[GrMeasure, list[str]]:
    """Every measure from the take-off chain and the (1,c) families within bounds.

    Returns a mapping measure -> provenance labels (several labels when two
    constructions give the same measure).
    """
    out: dict[GrMeasure, list[str]] = {}
    for r in range(1, bounds.r_max + 1):
        out.setdefault(preprojective_measure(ctx, r), []).append(f"P{r}")
    for c in bounds.c_values:
        for i in range(bounds.i_max + 1):
            for j in range(1, bounds.j_max + 1):
                coord = RegularCoord(c, i, j)
                out.setdefault(family_measure(ctx, coord), []).append(str(coord))
    return out


def betweenness_violations(ctx: KroneckerContext, bounds: UniverseBounds) -> list[tuple[RegularCoord, GrMeasure]]:
    """Universe members lying strictly between consecutive family measures."""
    universe = sorted(measure_universe(ctx, bounds))
    bad = []
    for c in bounds.c_values:
        for i in range(bounds.i_max + 1):
            for j in range(1, bounds.j_max):
                lo = family_measure(ctx, RegularCoord(c, i, j))
                hi = family_measure(ctx, RegularCoord(c, i, j + 1))
                bad.extend((RegularCoord(c, i, j), m) for m in universe if lo < m < hi)
    return bad

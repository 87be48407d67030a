"""The 3-Kronecker quiver through Fibonacci numbers.

For ``n = 3`` the Coxeter matrix is ``[[8, 3], [-3, -1]]`` and tau-powers of a
dimension vector have closed forms in ``F_k``.  The regular component through a
module of dimension ``(1,1)`` (or ``(1,2)``) is laid out as a grid::

    grid[j][t] = sum_{s=t}^{t+j-1} dim tau^-s(anchor)

where ``j >= 1`` is the quasi-length and ``t`` the orbit offset of the
quasi-socle, ``t = 0`` at the anchor.  In the drawn picture a vertex sits in
column ``x = 2t + j - 1``; the anchor is at ``x = 0``.  Row 0 is the zero vector,
which makes every mesh read ``grid[j+1][t] = grid[j][t] + grid[j][t+1] - grid[j-1][t+1]``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .dimvec import DimVec, KroneckerContext, coxeter_apply
from .errors import NegativeEntry, OrbitEscape, PreconditionError

KRON3 = KroneckerContext(3)


class FibCache:
    """Append-only table of Fibonacci numbers; growth is serialized by a lock."""

    def __init__(self):
        self._table = [0, 1]
        self._lock = threading.Lock()

    def __call__(self, k: int) -> int:
        if k < 0:
            # F_{-k} = (-1)^{k+1} F_k, so F_{-1} = 1, F_{-2} = -1
            v = self(-k)
            return v if k % 2 else -v
        table = self._table
        if k < len(table):
            return table[k]
        with self._lock:
            table = self._table
            while len(table) <= k:
                table.append(table[-1] + table[-2])
            return table[k]


fibonacci = FibCache()


def fib_identity_check(r: int, s: int) -> bool:
    """``F_r F_s + F_{r-1} F_{s-1} == F_{r+s-1}``."""
    if r < 1 or s < 1:
        raise PreconditionError("r and s must be >= 1")
    F = fibonacci
    return F(r) * F(s) + F(r - 1) * F(s - 1) == F(r + s - 1)


def tau_power_closed_form(v: DimVec, k: int) -> DimVec:
    """``dim tau^k`` of a module with dimension vector ``v`` (negative ``k`` = tau inverse)."""
    if k == 0:
        return v
    F = fibonacci
    a, b = v.a, v.b
    if k > 0:
        i = k
        out = DimVec(F(4 * i + 2) * a - F(4 * i) * b, F(4 * i) * a - F(4 * i - 2) * b)
    else:
        i = -k
        out = DimVec(F(4 * i) * b - F(4 * i - 2) * a, F(4 * i + 2) * b - F(4 * i) * a)
    if out.a < 0 or out.b < 0:
        raise NegativeEntry(f"tau^{k}{v} = {out}")
    return out


def quasi_length_dim(m: int, mirrored: bool = False) -> DimVec:
    """Dimension vector of ``X_m``: ``F_2m (1,1)`` for odd m, ``F_2m (2,1)`` for even m.

    ``X_1`` is the (1,1) anchor and ``X_m`` has quasi-length m.  With
    ``mirrored=True`` the even case returns the mirror image ``F_2m (1,2)``,
    which is ``tau^-1 X_m``.
    """
    if m < 1:
        raise PreconditionError("m must be >= 1")
    f = fibonacci(2 * m)
    if m % 2:
        return DimVec(f, f)
    return DimVec(f, 2 * f) if mirrored else DimVec(2 * f, f)


def quasi_length_dim_telescoped(m: int) -> DimVec:
    """Independent route to ``dim X_m``: sum the tau-translates of the anchor."""
    if m < 1:
        raise PreconditionError("m must be >= 1")
    x = DimVec(1, 1)
    if m % 2:
        left = right = (m - 1) // 2
    else:
        left, right = m // 2, m // 2 - 1
    total = x
    for i in range(1, left + 1):
        total = total + coxeter_apply(KRON3, x, i)
    for i in range(1, right + 1):
        total = total + coxeter_apply(KRON3, x, -i)
    return total


@dataclass(frozen=True)
class GridCoord:
    j: int  # quasi-length
    t: int  # orbit offset of the quasi-socle

    @property
    def column(self) -> int:
        return 2 * self.t + self.j - 1


def grid_entry(anchor: DimVec, j: int, t: int) -> DimVec:
    if j < 0:
        raise PreconditionError("quasi-length must be >= 0")
    total = DimVec(0, 0)
    for s in range(t, t + j):
        total = total + tau_power_closed_form(anchor, -s)
    return total


def window(tau_radius: int, ql_max: int) -> list[GridCoord]:
    """Coordinates with ``|column| <= 2 * tau_radius``, rows 1..ql_max, row-major."""
    if tau_radius < 0 or ql_max < 1:
        raise PreconditionError("tau_radius must be >= 0 and ql_max >= 1")
    out = []
    span = 2 * tau_radius
    for j in range(1, ql_max + 1):
        # column = 2t + j - 1 must lie in [-span, span]
        t_lo = -((span + j - 1) // 2)
        t_hi = (span - j + 1) // 2
        for t in range(t_lo, t_hi + 1):
            if abs(2 * t + j - 1) <= span:
                out.append(GridCoord(j, t))
    return out


def component_grid(anchor: DimVec, tau_radius: int = 2, ql_max: int = 5) -> dict[GridCoord, DimVec]:
    return {c: grid_entry(anchor, c.j, c.t) for c in window(tau_radius, ql_max)}


def locate(anchor: DimVec, v: DimVec) -> GridCoord:
    """Grid coordinate of dimension vector ``v`` in the anchor's component.

    Modules in a regular component are determined by their dimension vectors.
    Lengths along each row increase moving away from the row's centre, and
    every entry of row j is at least j times the shortest quasi-simple, which
    bounds the search.
    """
    target = v.length
    shortest = min(grid_entry(anchor, 1, t).length for t in range(-2, 3))
    for j in range(1, target // shortest + 1):
        centre = -((j - 1) // 2)
        for direction in (1, -1):
            t = centre if direction == 1 else centre - 1
            while True:
                w = grid_entry(anchor, j, t)
                if w == v:
                    return GridCoord(j, t)
                if w.length > target:
                    break
                t += direction
    raise PreconditionError(f"{v} is not in the component of {anchor}")


def mirror_center(anchor: DimVec) -> int:
    """Sum of the columns of any mirror pair in the anchor's component.

    Mirror pairs have swapped dimension vectors.  For an anchor ``(m, m)`` the
    centre is the anchor's own column (sum 0); for ``(1, 2)`` it lies between
    ``tau(1,2) = (2,1)`` and the anchor (sum -2).
    """
    row = {t: grid_entry(anchor, 1, t) for t in range(-3, 4)}
    for t, w in row.items():
        for u, x in row.items():
            if x == w.swapped():
                return 2 * t + 2 * u
    raise PreconditionError(f"no mirror pair found near {anchor}")


def same_length_mirror(m: DimVec, n: DimVec, anchor: DimVec = DimVec(1, 1)) -> bool:
    """True iff the two modules have equal quasi-length and mirrored orbit positions.

    Returns False when the lengths differ.
    """
    if m.length != n.length:
        return False
    cm, cn = locate(anchor, m), locate(anchor, n)
    return cm.j == cn.j and cm.column + cn.column == mirror_center(anchor)


def same_length_window_check(anchor: DimVec, tau_radius: int, ql_max: int) -> list[tuple[GridCoord, GridCoord]]:
    """Exhaustively test the same-length lemma on a window; returns the violating pairs."""
    grid = component_grid(anchor, tau_radius, ql_max)
    center = mirror_center(anchor)
    by_length: dict[int, list[GridCoord]] = {}
    for c, v in grid.items():
        by_length.setdefault(v.length, []).append(c)
    bad = []
    for coords in by_length.values():
        for x in coords:
            for y in coords:
                if x.j != y.j or (x != y and x.column + y.column != center):
                    bad.append((x, y))
    return bad


def mesh_violations(anchor: DimVec, tau_radius: int, ql_max: int) -> list[GridCoord]:
    """Coordinates where ``grid[j+1][t] != grid[j][t] + grid[j][t+1] - grid[j-1][t+1]``."""
    bad = []
    for c in window(tau_radius, ql_max):
        if c.j < 2:
            continue
        lhs = grid_entry(anchor, c.j, c.t)
        rhs = grid_entry(anchor, c.j - 1, c.t) + grid_entry(anchor, c.j - 1, c.t + 1) - grid_entry(anchor, c.j - 2, c.t + 1)
        if lhs != rhs:
            bad.append(c)
    return bad


def compare3_holds(m: int, i: int) -> bool:
    """For odd m: ``dim tau^-i F_2m(1,1) < dim tau^-(i+(m+1)/2) (1,1)`` componentwise."""
    if m < 1 or m % 2 == 0:
        raise PreconditionError("m must be odd and >= 1")
    f = fibonacci(2 * m)
    left = tau_power_closed_form(DimVec(f, f), -i)
    right = tau_power_closed_form(DimVec(1, 1), -(i + (m + 1) // 2))
    return left.below(right)


def compare4_holds(m: int, i: int) -> bool:
    """For even m: ``dim tau^-i F_2m(1,2) < dim tau^-(i+m/2+1) (1,1)`` componentwise."""
    if m < 2 or m % 2:
        raise PreconditionError("m must be even and >= 2")
    f = fibonacci(2 * m)
    left = tau_power_closed_form(DimVec(f, 2 * f), -i)
    right = tau_power_closed_form(DimVec(1, 1), -(i + m // 2 + 1))
    return left.below(right)


def tau_power_agrees(v: DimVec, k: int) -> bool:
    """Closed form and stepwise Coxeter iteration agree (or both refuse)."""
    try:
        stepwise = coxeter_apply(KRON3, v, k)
    except OrbitEscape:
        stepwise = None
    try:
        closed = tau_power_closed_form(v, k)
    except NegativeEntry:
        closed = None
    if stepwise is None:
        return True  # the closed form is only claimed where the module exists
    return closed == stepwise

"""Seeded constructors for the modules the acceptance checks need.

Indecomposables of real-root dimension are unique up to isomorphism over any
field, so a seeded random search plus the Fitting test is a valid constructor
for ``P_r`` and ``Q_r`` beyond the explicit small ones.
"""

from __future__ import annotations

import random

from ..dimvec import DimVec, KroneckerContext, coxeter_apply, preinjective_dim, preprojective_dim
from ..errors import PreconditionError
from ..grorder import GrMeasure, starts_with
from .oracle import oracle_run
from .rep import DEFAULT_END_BUDGET, Rep, _draw, build_canonical, dual, is_indecomposable, make_rep, random_indecomposable


def preprojective_rep(ctx: KroneckerContext, p: int, r: int, seed: int = 1) -> Rep:
    if r == 1:
        return build_canonical(ctx, p, "P1")
    if r == 2:
        return build_canonical(ctx, p, "P2")
    return random_indecomposable(ctx, p, preprojective_dim(ctx, r), seed)[0]


def preinjective_rep(ctx: KroneckerContext, p: int, r: int, seed: int = 1) -> Rep:
    """``Q_r`` as the transpose of ``P_{r+1}``."""
    if r == 0:
        return build_canonical(ctx, p, "Q0")
    if r == 1:
        return build_canonical(ctx, p, "Q1")
    rep = dual(preprojective_rep(ctx, p, r + 1, seed))
    assert rep.dim == preinjective_dim(ctx, r)
    return rep


def random_with_line_submodule(ctx: KroneckerContext, p: int, dim: DimVec, seed: int) -> Rep:
    """Random rep in which ``(e_1, f_1)`` is a subrepresentation of dimension (1,1).

    Arrow ``i`` sends ``e_1`` to ``c_i f_1`` with ``(c_i)`` drawn nonzero; all other
    columns are uniform.
    """
    if dim.a < 1 or dim.b < 1:
        raise PreconditionError("need a >= 1 and b >= 1")
    rng = random.Random(seed)
    cs = [0] * ctx.n
    while not any(cs):
        cs = [_draw(rng, p) for _ in range(ctx.n)]
    mats = [
        [((cs[i] if r == 0 else 0),) + tuple(_draw(rng, p) for _ in range(dim.a - 1)) for r in range(dim.b)]
        for i in range(ctx.n)
    ]
    return make_rep(ctx.n, p, dim.a, dim.b, mats)


def find_x2(
    ctx: KroneckerContext, p: int, seed: int = 0, max_tries: int = 5000, end_budget: int = DEFAULT_END_BUDGET
) -> tuple[Rep, int]:
    """An indecomposable of dimension ``(1,1)[2]`` whose measure starts with {1,2}.

    Only the c = 1, i = 0 case is searched; returns (rep, k) for the first hit
    at seed ``seed + k``.
    """
    dim = DimVec(1, 1) + coxeter_apply(ctx, DimVec(1, 1), -1)
    head = GrMeasure((1, 2))
    for k in range(max_tries):
        rep = random_with_line_submodule(ctx, p, dim, seed + k)
        if not is_indecomposable(rep, end_budget):
            continue
        if starts_with(oracle_run(rep).measure, head):
            return rep, k
    raise PreconditionError(f"no (1,1)[2] module found in {max_tries} tries from seed {seed}")


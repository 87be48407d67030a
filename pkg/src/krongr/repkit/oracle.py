"""Gabriel-Roiter measures computed from the definition.

``mu(M)`` is the maximum, in the GR order, of the length sets of chains of
indecomposable submodules of ``M``.  Three routes are provided:

``dp``
    Dynamic program over the indecomposable submodules.  An indecomposable
    submodule with nonzero source part ``S`` must have sink part exactly
    ``alpha(S) = sum_i alpha_i(S)`` (a complement of ``alpha(S)`` in the sink
    part would split off copies of ``P1``) and ``S`` must meet the joint kernel
    trivially (otherwise a copy of ``Q0`` splits off).  So the non-simple
    indecomposables are indexed by source subspaces ``S``, inclusion between
    them is inclusion of ``S``, and::

        best(S) = extend(max({1}, max_H G(H)), |S| + |alpha(S)|)
        G(S)    = max({1}, best(S) if indecomposable, max_H G(H))

    with ``H`` running over the hyperplanes of ``S``.
``frontier``
    Greedy search upward through the full lattice.  The maximal length set
    picks the smallest available next length at every step, so starting from
    the simple submodules the algorithm repeatedly finds the shortest
    indecomposable submodules containing the current frontier.  The frontier
    before the last step is exactly the set of GR submodules.
``naive``
    Every chain of indecomposables in the full lattice, each node tested by
    Fitting's lemma without shortcuts.  Exponential; meant for total
    dimension <= 5 as an independent check on the other two.

The default ``auto`` runs the DP while the source side is small and the
frontier search otherwise (the DP over the 417199 subspaces of F_2^8 needed for
``Q_2`` takes minutes, the frontier search under a second).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..dimvec import PositionClass, classify_position, Position
from ..errors import BudgetExceeded, KronError, NotIndecomposable, PreconditionError
from ..grorder import GrMeasure, extend, max_of, starts_with
from . import ffield as ff
from .lattice import DEFAULT_LATTICE_BUDGET, enumerate_submodules
from .rep import DEFAULT_END_BUDGET, Rep, SubRep, is_indecomposable, restrict, whole

ONE = GrMeasure((1,))


@dataclass(frozen=True)
class GrCertificate:
    chain: tuple[SubRep, ...]
    measure: GrMeasure
    gr_submodule_class: PositionClass | None
    method: str = "dp"

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(u.length for u in self.chain)

    def to_json(self) -> dict:
        return {
            "measure": self.measure.to_json(),
            "chain": [u.to_json() for u in self.chain],
            "lengths": [str(x) for x in self.lengths],
        }


@dataclass
class OracleRun:
    rep: Rep
    measure: GrMeasure
    chain: tuple[SubRep, ...]
    gr_submodules: list[SubRep]
    method: str
    # measure of every indecomposable submodule the run evaluated
    measures: dict[SubRep, GrMeasure] = field(default_factory=dict)

    def certificate(self) -> GrCertificate:
        cls = None
        if len(self.chain) >= 2:
            try:
                cls = classify_position(self.rep.ctx, self.chain[-2].dim)
            except KronError:
                cls = None
        return GrCertificate(self.chain, self.measure, cls, self.method)


class _Classifier:
    """Indecomposability of subrepresentations with the structural shortcuts."""

    def __init__(self, rep: Rep, end_budget: int):
        self.rep = rep
        self.end_budget = end_budget
        self._cache: dict[SubRep, bool] = {}

    def injective_on(self, S: ff.Basis) -> bool:
        """``S`` meets the joint kernel trivially."""
        rep = self.rep
        stacked = [tuple(x for i in range(rep.n) for x in rep.act(i, u)) for u in S]
        return ff.rank(stacked, rep.p, rep.n * rep.b) == len(S)

    def __call__(self, U: SubRep) -> bool:
        hit = self._cache.get(U)
        if hit is not None:
            return hit
        self._cache[U] = res = self._decide(U)
        return res

    def _decide(self, U: SubRep) -> bool:
        k2, k1 = len(U.U2), len(U.U1)
        if k2 + k1 == 1:
            return True
        if k2 == 0:
            return False  # semisimple sink part of dimension >= 2
        if U.U1 != self.rep.image_of(U.U2):
            return False
        if not self.injective_on(U.U2):
            return False
        return is_indecomposable(restrict(self.rep, U), self.end_budget)


def _simples(rep: Rep) -> list[SubRep]:
    lines = [SubRep((), L) for L in ff.subspaces(ff.full_space(rep.b), rep.p, dims=[1])] if rep.b else []
    points = [SubRep(P, ()) for P in ff.subspaces(rep.kernel, rep.p, dims=[1])] if rep.kernel else []
    return lines + points


def _require_nonzero(rep: Rep):
    if rep.length == 0:
        raise NotIndecomposable("the zero representation has no GR measure")


def run_dp(rep: Rep, lattice_budget: int = DEFAULT_LATTICE_BUDGET, end_budget: int = DEFAULT_END_BUDGET) -> OracleRun:
    _require_nonzero(rep)
    p = rep.p
    n_nodes = ff.count_subspaces(rep.a, p)
    if n_nodes > lattice_budget:
        raise BudgetExceeded("source-subspace poset", n_nodes, lattice_budget)
    classify = _Classifier(rep, end_budget)
    R = whole(rep)
    if rep.length == 1:
        return OracleRun(rep, ONE, (R,), [], "dp", {R: ONE})
    if not classify(R):
        raise NotIndecomposable(f"representation of dimension {rep.dim} is decomposable")

    best: dict[ff.Basis, GrMeasure] = {}
    below_src: dict[ff.Basis, SubRep | None] = {}  # None: a simple submodule
    G: dict[ff.Basis, GrMeasure] = {}
    G_src: dict[ff.Basis, SubRep | None] = {}
    subs: dict[ff.Basis, SubRep] = {}

    for S in ff.subspaces(ff.full_space(rep.a), p):
        if not S:
            continue
        top, top_src = ONE, None
        for H in ff.hyperplanes(S, p):
            g = G.get(H)
            if g is not None and top < g:
                top, top_src = g, G_src[H]
        img = rep.image_of(S)
        U = SubRep(S, img)
        if U.length >= 2 and classify(U):
            m = extend(top, U.length)
            best[S], below_src[S], subs[S] = m, top_src, U
            if top < m:
                top, top_src = m, U
        G[S], G_src[S] = top, top_src

    full = ff.full_space(rep.a)
    mu = best[full]
    target = GrMeasure(mu.entries[:-1])
    grs = [subs[S] for S, m in best.items() if S != full and m == target]
    if target == ONE:
        grs = _simples(rep) + grs
    measures = {subs[S]: m for S, m in best.items()}

    def chain_of(U: SubRep) -> list[SubRep]:
        src = below_src[U.U2]
        if src is None:
            return [SubRep((), (U.U1[0],)), U]
        return chain_of(src) + [U]

    return OracleRun(rep, mu, tuple(chain_of(subs[full])), sorted(grs), "dp", measures)


def _upper_covers(rep: Rep, U: SubRep):
    p = rep.p
    for L in ff.upper_covers(U.U1, ff.full_space(rep.b), p, rep.b):
        yield SubRep(U.U2, L)
    for S in ff.upper_covers(U.U2, rep.joint_preimage(U.U1), p, rep.a):
        yield SubRep(S, U.U1)


def run_frontier(rep: Rep, lattice_budget: int = DEFAULT_LATTICE_BUDGET, end_budget: int = DEFAULT_END_BUDGET) -> OracleRun:
    _require_nonzero(rep)
    classify = _Classifier(rep, end_budget)
    R = whole(rep)
    if rep.length == 1:
        return OracleRun(rep, ONE, (R,), [], "frontier", {R: ONE})
    if not classify(R):
        raise NotIndecomposable(f"representation of dimension {rep.dim} is decomposable")

    frontier = _simples(rep)
    chains = {U: (U,) for U in frontier}
    mu = ONE
    measures = {U: ONE for U in frontier}
    visited = 0
    while True:
        layer = frontier
        parent: dict[SubRep, SubRep] = {U: U for U in frontier}
        found: list[SubRep] = []
        while not found:
            nxt: dict[SubRep, SubRep] = {}
            for U in layer:
                for V in _upper_covers(rep, U):
                    if V not in parent and V not in nxt:
                        nxt[V] = U
            if not nxt:
                raise AssertionError("upward search exhausted below the whole module")
            visited += len(nxt)
            if visited > lattice_budget:
                raise BudgetExceeded("frontier search", visited, lattice_budget)
            parent.update(nxt)
            found = sorted(V for V in nxt if classify(V))
            layer = list(nxt)
        mu = extend(mu, found[0].length)
        new_chains = {}
        for V in found:
            anc = parent[V]
            while anc not in chains:
                anc = parent[anc]
            new_chains[V] = chains[anc] + (V,)
            measures[V] = mu
        if R in new_chains:
            return OracleRun(rep, mu, new_chains[R], sorted(frontier), "frontier", measures)
        frontier, chains = found, new_chains


def run_naive(rep: Rep, lattice_budget: int = DEFAULT_LATTICE_BUDGET, end_budget: int = DEFAULT_END_BUDGET) -> OracleRun:
    _require_nonzero(rep)
    lat = enumerate_submodules(rep, lattice_budget)
    indec = [U for U in lat.nodes if U.length and is_indecomposable(restrict(rep, U), end_budget)]
    R = whole(rep)
    if R not in indec:
        raise NotIndecomposable(f"representation of dimension {rep.dim} is decomposable")
    below = {U: [V for V in indec if V != U and lat.includes(V, U)] for U in indec}
    measures: dict[SubRep, GrMeasure] = {}
    witness: dict[SubRep, tuple[SubRep, ...]] = {}

    def all_chains(U):
        # every chain of indecomposables ending at U
        yield (U,)
        for V in below[U]:
            for ch in all_chains(V):
                yield ch + (U,)

    for U in indec:
        options = [(GrMeasure(x.length for x in ch), ch) for ch in all_chains(U)]
        m = max_of(o[0] for o in options)
        measures[U] = m
        witness[U] = next(ch for mm, ch in options if mm == m)
    mu = measures[R]
    target = GrMeasure(mu.entries[:-1])
    grs = sorted(U for U in indec if U != R and measures[U] == target)
    return OracleRun(rep, mu, witness[R], grs, "naive", measures)


# above this many source subspaces the DP loses to the frontier search
AUTO_DP_LIMIT = 2**14


def run_auto(rep: Rep, lattice_budget: int = DEFAULT_LATTICE_BUDGET, end_budget: int = DEFAULT_END_BUDGET) -> OracleRun:
    if ff.count_subspaces(rep.a, rep.p) <= AUTO_DP_LIMIT:
        return run_dp(rep, lattice_budget, end_budget)
    return run_frontier(rep, lattice_budget, end_budget)


METHODS = {"auto": run_auto, "dp": run_dp, "frontier": run_frontier, "naive": run_naive}

_runs: dict[tuple, OracleRun] = {}


def oracle_run(rep: Rep, method: str = "auto", lattice_budget: int = DEFAULT_LATTICE_BUDGET, end_budget: int = DEFAULT_END_BUDGET) -> OracleRun:
    try:
        fn = METHODS[method]
    except KeyError:
        raise PreconditionError(f"unknown oracle method {method!r}; choose from {sorted(METHODS)}") from None
    # budgets are part of the contract, so a cached run does not bypass them
    key = (rep, method, lattice_budget, end_budget)
    if key not in _runs:
        _runs[key] = fn(rep, lattice_budget, end_budget)
    return _runs[key]


def gr_measure_oracle(rep: Rep, method: str = "auto", **budgets) -> tuple[GrMeasure, GrCertificate]:
    run = oracle_run(rep, method, **budgets)
    return run.measure, run.certificate()


def gr_submodules(rep: Rep, method: str = "auto", **budgets) -> list[SubRep]:
    return list(oracle_run(rep, method, **budgets).gr_submodules)


def is_piling(U: SubRep, rep: Rep, method: str = "auto", **budgets) -> bool:
    sub = restrict(rep, U)
    mu_u, _ = gr_measure_oracle(sub, method, **budgets)
    mu_r, _ = gr_measure_oracle(rep, method, **budgets)
    return starts_with(mu_r, mu_u)


def in_B(rep: Rep, method: str = "auto", **budgets) -> bool:
    """Regular indecomposable whose GR submodules are all preprojective."""
    pos = classify_position(rep.ctx, rep.dim)
    if pos.kind is not Position.REGULAR:
        raise PreconditionError(f"{rep.dim} is not a regular dimension vector ({pos})")
    for U in gr_submodules(rep, method, **budgets):
        try:
            if classify_position(rep.ctx, U.dim).kind is not Position.PREPROJECTIVE:
                return False
        except KronError:
            return False
    return True

"""Check suites that cross-check the symbolic engine against the oracle.

Each check is a module-level function ``check(seed) -> (ok, expected, actual)``
so that it can be shipped to a worker process.  Reports list checks in suite
order whatever the pool size, and carry runtimes as integer milliseconds.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import fib3, grsym
from .dimvec import DimVec, KroneckerContext, preinjective_dim, preprojective_dim, quadratic_form
from .errors import PreconditionError
from .grorder import GrMeasure, Order, compare, extend, starts_with
from .repkit import build_canonical, oracle_run, quotient, random_indecomposable
from .repkit.rep import is_indecomposable
from .repkit.samples import find_x2, preinjective_rep, preprojective_rep

K3 = KroneckerContext(3)

# Oracle goldens over F_2, n = 3, each confirmed by the dp and frontier methods
# (and the naive chain enumeration where the total dimension is <= 5).
ORACLE_GOLDENS = {
    "P1": "{1}",
    "P2": "{1,4}",
    "P3": "{1,4,11}",
    "(1,1)": "{1,2}",
    "(1,2)": "{1,3}",
    "(2,5)": "{1,4,7}",
    "X[2]": "{1,2,9}",
    "Q1": "{1,2,3,4}",
}
Q2_GOLDEN = "{1,2,3,5,6,7,9,10,11}"

FIGURE_VECTORS = [
    (34, 13), (5, 2), (1, 1), (2, 5), (13, 34), (39, 15), (6, 3),
    (3, 6), (15, 39), (8, 8), (42, 21), (55, 55), (275, 110),
]

UNIVERSE = grsym.UniverseBounds(r_max=20, c_values=(1, 2), i_max=3, j_max=5)


@dataclass
class CheckResult:
    id: str
    status: str
    expected: str
    actual: str
    runtime_ms: int

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "status": self.status,
            "expected": self.expected,
            "actual": self.actual,
            "runtime_ms": str(self.runtime_ms),
        }


@dataclass
class VerifyReport:
    suite: str
    seed: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "seed": str(self.seed),
            "checks": [c.to_json() for c in self.checks],
            "overall": "pass" if self.passed else "fail",
        }


# ------------------------------------------------------------------ builders


def oracle_instance(name: str, seed: int = 1):
    """The module behind each oracle golden."""
    if name == "P1":
        return preprojective_rep(K3, 2, 1)
    if name == "P2":
        return preprojective_rep(K3, 2, 2)
    if name == "P3":
        return preprojective_rep(K3, 2, 3, seed)
    if name == "(1,1)":
        return build_canonical(K3, 2, "OneC", (1, [1, 1, 0]))
    if name == "(1,2)":
        return build_canonical(K3, 2, "OneC", (2, [(1, 0), (0, 1), (0, 0)]))
    if name == "(2,5)":
        return random_indecomposable(K3, 2, DimVec(2, 5), seed)[0]
    if name == "X[2]":
        return find_x2(K3, 2, seed)[0]
    if name == "Q1":
        return build_canonical(K3, 2, "Q1")
    if name == "Q2":
        return preinjective_rep(K3, 2, 2, seed)
    raise PreconditionError(f"unknown oracle instance {name!r}")


def sampled_instances(seed: int):
    """The 100 (2,5) and 50 (1,1) random indecomposables of the sampling check."""
    rng = random.Random(seed)
    out = []
    for dim, count in ((DimVec(2, 5), 100), (DimVec(1, 1), 50)):
        for _ in range(count):
            out.append(random_indecomposable(K3, 2, dim, rng.getrandbits(32), max_tries=500)[0])
    return out


# ------------------------------------------------------------------ checks


def _fmt(ok_items):
    return ", ".join(str(x) for x in ok_items) if ok_items else "none"


def check_fib_identity(seed):
    bad = [(r, s) for r in range(1, 41) for s in range(1, 41) if not fib3.fib_identity_check(r, s)]
    return not bad, "none", _fmt(bad)


def check_tau_closed_form(seed):
    rng = random.Random(seed)
    bad = []
    anchors = []
    # imaginary roots: the whole tau-orbit stays positive, so no comparison is vacuous
    while len(anchors) < 50:
        v = DimVec(rng.randint(1, 10**6), rng.randint(1, 10**6))
        if quadratic_form(K3, v) < 0:
            anchors.append(v)
    for v in anchors:
        for k in range(-50, 51):
            if not fib3.tau_power_agrees(v, k):
                bad.append((v, k))
    return not bad, "none", _fmt(bad[:5])


def check_quasi_length(seed):
    bad = [m for m in range(1, 31) if fib3.quasi_length_dim(m) != fib3.quasi_length_dim_telescoped(m)]
    return not bad, "none", _fmt(bad)


def check_mesh(seed):
    bad = []
    for anchor in (DimVec(1, 1), DimVec(1, 2)):
        bad += fib3.mesh_violations(anchor, 4, 8)
        bad += fib3.same_length_window_check(anchor, 4, 8)
    return not bad, "none", _fmt(bad[:5])


def check_figure_ends(seed):
    bad = []
    for n in (3, 4, 5, 6):
        ctx = KroneckerContext(n)
        want_p = [(0, 1), (1, n), (n, n * n - 1), (n * n - 1, n**3 - 2 * n)]
        want_q = [(1, 0), (n, 1), (n * n - 1, n), (n**3 - 2 * n, n * n - 1)]
        for r, w in enumerate(want_p, start=1):
            if tuple(preprojective_dim(ctx, r)) != w:
                bad.append(f"n={n} P{r}")
        for r, w in enumerate(want_q):
            if tuple(preinjective_dim(ctx, r)) != w:
                bad.append(f"n={n} Q{r}")
    return not bad, "none", _fmt(bad)


def check_component_figure(seed):
    values = set(fib3.component_grid(DimVec(1, 1)).values())
    missing = [v for v in FIGURE_VECTORS if DimVec(*v) not in values]
    return not missing, f"{len(FIGURE_VECTORS)} vectors present", _fmt(missing) if missing else f"{len(FIGURE_VECTORS)} vectors present"


def _family_measures() -> list[GrMeasure]:
    return [
        grsym.family_measure(K3, grsym.RegularCoord(c, i, j))
        for c in UNIVERSE.c_values
        for i in range(UNIVERSE.i_max + 1)
        for j in range(1, UNIVERSE.j_max + 1)
    ]


def check_betweenness(seed):
    bad = grsym.betweenness_violations(K3, UNIVERSE)
    return not bad, "none", _fmt(bad[:5])


def check_partition(seed):
    chain = [grsym.preprojective_measure(K3, r) for r in range(1, 31)]
    bad = [r + 1 for r in range(len(chain) - 1) if not chain[r] < chain[r + 1]]
    fams = _family_measures()
    takeoff = [grsym.preprojective_measure(K3, r) for r in range(1, UNIVERSE.r_max + 1)]
    bad += [str(f) for f in fams if not all(t < f for t in takeoff)]
    return not bad, "none", _fmt(bad[:5])


def check_landing(seed):
    mu = oracle_run(oracle_instance("Q2", seed)).measure
    fams = _family_measures()
    ok = str(mu) == Q2_GOLDEN and all(f < mu for f in fams)
    return ok, f"{Q2_GOLDEN} above all family measures", str(mu)


def _random_measure(rng: random.Random, alphabet: int, max_len: int) -> GrMeasure:
    k = rng.randint(0, min(max_len, alphabet))
    return GrMeasure(sorted(rng.sample(range(1, alphabet + 1), k)))


def _sym_diff_less(I: GrMeasure, J: GrMeasure) -> bool:
    d = set(I) ^ set(J)
    return bool(d) and min(d) in set(J)


def check_order_axioms(seed):
    rng = random.Random(seed)
    bad = []
    sandwiches = 0
    for t in range(10**5):
        # small alphabets make prefixes and sandwiches frequent
        alphabet = 10 if t % 2 else 10**6
        I, J, K = (_random_measure(rng, alphabet, 12) for _ in range(3))
        if t % 4 == 1 and len(K):
            I = GrMeasure(K.entries[: rng.randint(0, len(K))])
        rels = [(I < J), (I == J), (J < I)]
        if sum(rels) != 1 or (I == J) != (I.entries == J.entries):
            bad.append(("totality", I, J))
        if (I < J) != _sym_diff_less(I, J):
            bad.append(("sym-diff", I, J))
        if I < J and J < K and not I < K:
            bad.append(("transitivity", I, J, K))
        if I < J < K and starts_with(K, I):
            sandwiches += 1
            if not starts_with(J, I):
                bad.append(("sandwich", I, J, K))
        if compare(I, extend(I, I.top + rng.randint(1, 5))) is not Order.LESS:
            bad.append(("extend", I))
    return not bad, "no violations", _fmt(bad[:3]) if bad else f"no violations ({sandwiches} sandwich triples)"


def _oracle_check(name):
    def check(seed):
        mu = oracle_run(oracle_instance(name, seed)).measure
        return str(mu) == ORACLE_GOLDENS[name], ORACLE_GOLDENS[name], str(mu)

    check.__name__ = f"check_oracle_{name}"
    return check


def check_sampling(seed):
    reps = sampled_instances(seed)
    got = {}
    for r in reps:
        key = f"{r.dim}"
        got.setdefault(key, set()).add(str(oracle_run(r).measure))
    expected = {"(2,5)": {"{1,4,7}"}, "(1,1)": {"{1,2}"}}
    return got == expected, "(2,5): {1,4,7}; (1,1): {1,2}", "; ".join(f"{k}: {' '.join(sorted(v))}" for k, v in sorted(got.items()))


def invariant_violations(rep) -> list[str]:
    """GR factors are indecomposable; proper indecomposable submodules have smaller measure."""
    run = oracle_run(rep)
    bad = []
    for U in run.gr_submodules:
        if not is_indecomposable(quotient(rep, U)):
            bad.append(f"factor by {U.dim} decomposes")
    R = run.chain[-1]
    for U, m in run.measures.items():
        if U != R and not m < run.measure:
            bad.append(f"sub {U.dim} has {m} >= {run.measure}")
    return bad


def check_invariants(seed):
    reps = [oracle_instance(name, seed) for name in ORACLE_GOLDENS] + sampled_instances(seed)
    bad = []
    for r in reps:
        bad += invariant_violations(r)
    return not bad, "none", _fmt(bad[:5])


def check_cross_methods(seed):
    """dp, frontier and naive agree on measure and GR submodules."""
    bad = []
    for name in ORACLE_GOLDENS:
        rep = oracle_instance(name, seed)
        methods = ["dp", "frontier"] + (["naive"] if rep.length <= 5 else [])
        if name == "P3":
            methods = ["dp"]  # frontier walks the 2^8 sink subspaces slowly
        runs = [oracle_run(rep, m) for m in methods]
        if len({str(r.measure) for r in runs}) != 1 or len({tuple(r.gr_submodules) for r in runs}) != 1:
            bad.append(name)
    return not bad, "none", _fmt(bad)


CHECKS = {
    "fib.identity": check_fib_identity,
    "fib.tau-closed-form": check_tau_closed_form,
    "fib.quasi-length": check_quasi_length,
    "fib.mesh": check_mesh,
    "figure.ends": check_figure_ends,
    "figure.component": check_component_figure,
    "order.axioms": check_order_axioms,
    "symbolic.betweenness": check_betweenness,
    "symbolic.partition": check_partition,
    **{f"oracle.{name}": _oracle_check(name) for name in ORACLE_GOLDENS},
    "oracle.cross-methods": check_cross_methods,
    "sampling.random-indecs": check_sampling,
    "landing.Q2": check_landing,
    "invariants.repkit": check_invariants,
}

SUITES = {
    "fib": ["fib.identity", "fib.tau-closed-form", "fib.quasi-length", "fib.mesh"],
    "figures": ["figure.ends", "figure.component"],
    "order": ["order.axioms"],
    "symbolic": ["symbolic.betweenness", "symbolic.partition"],
    "oracle-small": [k for k in CHECKS if k.startswith("oracle.")],
    "sampling": ["sampling.random-indecs"],
    "landing": ["landing.Q2"],
    "invariants": ["invariants.repkit"],
}
SUITES["acceptance"] = [k for name in SUITES for k in SUITES[name]]


def run_check(check_id: str, seed: int = 1) -> CheckResult:
    fn = CHECKS[check_id]
    t0 = time.perf_counter()
    try:
        ok, expected, actual = fn(seed)
    except Exception as exc:  # a crashing check is a failing check
        ok, expected, actual = False, "no error", f"{type(exc).__name__}: {exc}"
    ms = int((time.perf_counter() - t0) * 1000)
    return CheckResult(check_id, "pass" if ok else "fail", str(expected), str(actual), ms)


def worker_count() -> int:
    raw = os.environ.get("KRON_WORKERS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise PreconditionError(f"KRON_WORKERS must be an integer, got {raw!r}") from None
    return max(1, n)


def run_suite(suite: str, seed: int = 1, workers: int | None = None) -> VerifyReport:
    try:
        ids = SUITES[suite]
    except KeyError:
        raise PreconditionError(f"unknown suite {suite!r}; choose from {', '.join(sorted(SUITES))}") from None
    workers = worker_count() if workers is None else workers
    report = VerifyReport(suite, seed)
    if workers == 1 or len(ids) == 1:
        report.checks = [run_check(i, seed) for i in ids]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            report.checks = list(pool.map(run_check, ids, [seed] * len(ids)))
    return report

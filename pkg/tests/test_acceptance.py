"""Acceptance criteria 1-10, one printed PASS/FAIL line each.

All comparisons are exact (integers and measures); the only tolerances are
the wall-clock limits below.
"""

import random
import time

import pytest

from krongr import fib3
from krongr.dimvec import DimVec, KroneckerContext, coxeter_apply, preinjective_dim, preprojective_dim, quadratic_form
from krongr.grorder import GrMeasure, Order, compare, extend, starts_with
from krongr.grsym import RegularCoord, UniverseBounds, betweenness_violations, family_measure, preprojective_measure
from krongr.repkit import build_canonical, is_indecomposable, oracle_run, quotient, random_indecomposable
from krongr.repkit.samples import find_x2, preinjective_rep, preprojective_rep

K3 = KroneckerContext(3)

# seconds
LIMITS = {1: 1, 2: 1, 3: 5, 4: 1, 5: 600, 6: 600, 7: 10, 8: 10, 9: 900}

UNIVERSE = UniverseBounds(r_max=20, c_values=(1, 2), i_max=3, j_max=5)

_instances = {}
_samples = []


def M(*xs):
    return GrMeasure(xs)


@pytest.fixture
def report(capsys):
    def emit(n, ok, elapsed, detail=""):
        limit = LIMITS.get(n)
        timing = f"{elapsed:.2f}s" + (f" (limit {limit}s)" if limit else "")
        with capsys.disabled():
            print(f"\n[criterion {n:2}] {'PASS' if ok else 'FAIL'}  {timing}  {detail}")

    return emit


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def _families():
    return [
        family_measure(K3, RegularCoord(c, i, j))
        for c in UNIVERSE.c_values
        for i in range(UNIVERSE.i_max + 1)
        for j in range(1, UNIVERSE.j_max + 1)
    ]


def test_c01_ends_of_the_quiver(report):
    def run():
        bad = []
        for n in (3, 4, 5, 6):
            ctx = KroneckerContext(n)
            p = [(0, 1), (1, n), (n, n * n - 1), (n * n - 1, n**3 - 2 * n)]
            q = [(1, 0), (n, 1), (n * n - 1, n), (n**3 - 2 * n, n * n - 1)]
            bad += [(n, "P", r) for r in range(1, 5) if tuple(preprojective_dim(ctx, r)) != p[r - 1]]
            bad += [(n, "Q", r) for r in range(4) if tuple(preinjective_dim(ctx, r)) != q[r]]
        return bad

    bad, dt = _timed(run)
    ok = not bad and dt < LIMITS[1]
    report(1, ok, dt, "P_1..P_4, Q_0..Q_3 for n = 3..6")
    assert ok, bad


def test_c02_component_figure(report):
    shown = [(34, 13), (5, 2), (1, 1), (2, 5), (13, 34), (39, 15), (6, 3),
             (3, 6), (15, 39), (8, 8), (42, 21), (55, 55), (275, 110)]

    def run():
        grid = fib3.component_grid(DimVec(1, 1), tau_radius=2, ql_max=5)
        return [v for v in shown if DimVec(*v) not in set(grid.values())]

    missing, dt = _timed(run)
    ok = not missing and dt < LIMITS[2]
    report(2, ok, dt, f"{len(shown) - len(missing)}/{len(shown)} figure vectors reproduced")
    assert ok, missing


def test_c03_tau_closed_form(report):
    def run():
        rng = random.Random(3)
        anchors = []
        while len(anchors) < 50:
            v = DimVec(rng.randint(1, 10**6), rng.randint(1, 10**6))
            if quadratic_form(K3, v) < 0:
                anchors.append(v)
        bad = []
        for v in anchors:
            for k in range(-50, 51):
                if fib3.tau_power_closed_form(v, k) != coxeter_apply(K3, v, k):
                    bad.append((v, k))
        return bad

    bad, dt = _timed(run)
    ok = not bad and dt < LIMITS[3]
    report(3, ok, dt, "50 regular anchors x |k| <= 50, closed form == Coxeter iteration")
    assert ok, bad[:3]


def test_c04_quasi_length(report):
    bad, dt = _timed(lambda: [m for m in range(1, 31) if fib3.quasi_length_dim(m) != fib3.quasi_length_dim_telescoped(m)])
    ok = not bad and dt < LIMITS[4]
    report(4, ok, dt, "X_m closed form == telescoped tau-sum, m <= 30")
    assert ok, bad


def _oracle_instances():
    if not _instances:
        _instances.update(
            {
                "P_1": (preprojective_rep(K3, 2, 1), M(1)),
                "P_2": (preprojective_rep(K3, 2, 2), M(1, 4)),
                "P_3": (preprojective_rep(K3, 2, 3), M(1, 4, 11)),
                "(1,1)": (build_canonical(K3, 2, "OneC", (1, [1, 1, 0])), M(1, 2)),
                "(1,2)": (build_canonical(K3, 2, "OneC", (2, [(1, 0), (0, 1), (0, 0)])), M(1, 3)),
                "(2,5)": (random_indecomposable(K3, 2, DimVec(2, 5), 1)[0], M(1, 4, 7)),
                "X[2] (3,6)": (find_x2(K3, 2, 1)[0], M(1, 2, 9)),
                # oracle-confirmed; the chain (0,1) < (1,1) < (2,1) < (3,1) is all indecomposable
                "Q_1": (build_canonical(K3, 2, "Q1"), M(1, 2, 3, 4)),
            }
        )
    return _instances


def test_c05_oracle_vs_symbolic(report):
    def run():
        got = {name: oracle_run(rep).measure for name, (rep, _) in _oracle_instances().items()}
        bad = [name for name, (_, want) in _oracle_instances().items() if got[name] != want]
        symbolic = {
            "P_1": preprojective_measure(K3, 1),
            "P_2": preprojective_measure(K3, 2),
            "P_3": preprojective_measure(K3, 3),
            "(1,1)": family_measure(K3, RegularCoord(1, 0, 1)),
            "(1,2)": family_measure(K3, RegularCoord(2, 0, 1)),
            "(2,5)": family_measure(K3, RegularCoord(1, 1, 1)),
            "X[2] (3,6)": family_measure(K3, RegularCoord(1, 0, 2)),
        }
        bad += [f"{name} symbolic" for name, m in symbolic.items() if got[name] != m]
        return bad, got

    (bad, got), dt = _timed(run)
    ok = not bad and dt < LIMITS[5]
    report(5, ok, dt, "; ".join(f"{k}={v}" for k, v in got.items()) + "  [Q_1 golden corrected from {1,2,4}]")
    assert ok, bad


def _sampled():
    if not _samples:
        rng = random.Random(6)
        reps = []
        for dim, count in ((DimVec(2, 5), 100), (DimVec(1, 1), 50)):
            reps += [random_indecomposable(K3, 2, dim, rng.getrandbits(32), max_tries=500)[0] for _ in range(count)]
        _samples.extend(reps)
    return _samples


def test_c06_sampling(report):
    def run():
        want = {DimVec(2, 5): M(1, 4, 7), DimVec(1, 1): M(1, 2)}
        reps = _sampled()
        return [r.dim for r in reps if oracle_run(r).measure != want[r.dim]], len(reps)

    (bad, count), dt = _timed(run)
    ok = not bad and count == 150 and dt < LIMITS[6]
    report(6, ok, dt, f"{count - len(bad)}/{count} sampled indecomposables match ((2,5): {{1,4,7}}, (1,1): {{1,2}})")
    assert ok, bad


def test_c07_betweenness(report):
    bad, dt = _timed(lambda: betweenness_violations(K3, UNIVERSE))
    ok = not bad and dt < LIMITS[7]
    report(7, ok, dt, "no universe measure strictly between (c,i,j) and (c,i,j+1); finite universe only")
    assert ok, bad[:3]


def test_c08_order_axioms(report):
    def run():
        rng = random.Random(8)
        bad = []
        sandwiches = 0

        def draw(alphabet):
            k = rng.randint(0, min(12, alphabet))
            return GrMeasure(sorted(rng.sample(range(1, alphabet + 1), k)))

        for t in range(10**5):
            alphabet = 10 if t % 2 else 10**6
            I, J, K = draw(alphabet), draw(alphabet), draw(alphabet)
            if t % 4 == 1 and len(K):
                I = GrMeasure(K.entries[: rng.randint(0, len(K))])
            if sum([I < J, I == J, J < I]) != 1:
                bad.append(("total", I, J))
            d = set(I) ^ set(J)
            if (I < J) != (bool(d) and min(d) in set(J)):
                bad.append(("rule", I, J))
            if I < J < K and not I < K:
                bad.append(("transitive", I, J, K))
            if I < J < K and starts_with(K, I):
                sandwiches += 1
                if not starts_with(J, I):
                    bad.append(("sandwich", I, J, K))
            if compare(I, extend(I, I.top + 1)) is not Order.LESS:
                bad.append(("extend", I))
        return bad, sandwiches

    (bad, sandwiches), dt = _timed(run)
    ok = not bad and sandwiches > 0 and dt < LIMITS[8]
    report(8, ok, dt, f"10^5 triples, {sandwiches} sandwich instances exercised")
    assert ok, bad[:3]


def test_c09_partition(report):
    def run():
        chain = [preprojective_measure(K3, r) for r in range(1, 31)]
        bad = [r for r in range(29) if not chain[r] < chain[r + 1]]
        takeoff = chain[: UNIVERSE.r_max]
        fams = _families()
        bad += [f for f in fams if not all(t < f for t in takeoff)]
        q2 = preinjective_rep(K3, 2, 2)
        mu_q2 = oracle_run(q2).measure
        bad += [f for f in fams if not f < mu_q2]
        return bad, q2.dim, mu_q2

    (bad, dim, mu), dt = _timed(run)
    ok = not bad and dt < LIMITS[9]
    report(9, ok, dt, f"take-off chain increasing; families above take-off; mu(Q_2 {dim}) = {mu} above all families")
    assert ok, bad[:3]


def test_c10_invariants(report):
    def run():
        bad = []
        reps = [rep for rep, _ in _oracle_instances().values()] + _sampled()
        for rep in reps:
            run_ = oracle_run(rep)
            for u in run_.gr_submodules:
                if not is_indecomposable(quotient(rep, u)):
                    bad.append((rep.dim, "factor", u.dim))
            for u, m in run_.measures.items():
                if u.length < rep.length and not m < run_.measure:
                    bad.append((rep.dim, "monotone", u.dim))
        return bad, len(reps)

    (bad, count), dt = _timed(run)
    ok = not bad
    report(10, ok, dt, f"GR factors indecomposable and proper submodules below mu(R) on {count} instances")
    assert ok, bad[:3]

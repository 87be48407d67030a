import pytest

from krongr.dimvec import DimVec, KroneckerContext, Position, classify_position, preprojective
from krongr.errors import BudgetExceeded, NotIndecomposable, PreconditionError
from krongr.grorder import GrMeasure, starts_with
from krongr.grsym import RegularCoord, family_measure, preprojective_measure
from krongr.repkit import (
    build_canonical,
    direct_sum,
    gr_measure_oracle,
    gr_submodules,
    in_B,
    is_indecomposable,
    is_piling,
    oracle_run,
    quotient,
    random_indecomposable,
    restrict,
)
from krongr.repkit.rep import SubRep
from krongr.repkit.samples import find_x2, preinjective_rep, preprojective_rep

K3 = KroneckerContext(3)
P1 = build_canonical(K3, 2, "P1")
P2 = build_canonical(K3, 2, "P2")
Q1 = build_canonical(K3, 2, "Q1")
ONE_ONE = build_canonical(K3, 2, "OneC", (1, [1, 1, 0]))
ONE_TWO = build_canonical(K3, 2, "OneC", (2, [(1, 0), (0, 1), (0, 0)]))
X2 = find_x2(K3, 2, 1)[0]


def M(*xs):
    return GrMeasure(xs)


def test_oracle_examples():
    assert gr_measure_oracle(P2)[0] == M(1, 4) == preprojective_measure(K3, 2)
    assert gr_measure_oracle(ONE_ONE)[0] == M(1, 2) == family_measure(K3, RegularCoord(1, 0, 1))
    assert gr_measure_oracle(ONE_TWO)[0] == M(1, 3) == family_measure(K3, RegularCoord(2, 0, 1))


def test_q1_measure_includes_length_three():
    # the (2,1) submodule: the three functionals restricted to a plane span its dual
    mu, cert = gr_measure_oracle(Q1)
    assert mu == M(1, 2, 3, 4)
    assert [u.dim for u in cert.chain] == [DimVec(0, 1), DimVec(1, 1), DimVec(2, 1), DimVec(3, 1)]
    plane = SubRep(((1, 0, 0), (0, 1, 0)), ((1,),))
    assert is_indecomposable(restrict(Q1, plane))


def test_certificate():
    mu, cert = gr_measure_oracle(P2)
    assert cert.lengths == (1, 4) and cert.measure == mu
    assert cert.gr_submodule_class == preprojective(1)
    doc = cert.to_json()
    assert doc["measure"] == ["1", "4"] and doc["lengths"] == ["1", "4"]
    assert set(doc["chain"][0]) == {"U2", "U1"}
    for small, big in zip(cert.chain, cert.chain[1:]):
        assert small.length < big.length
    _, c3 = gr_measure_oracle(random_indecomposable(K3, 2, DimVec(2, 5), 1)[0])
    assert c3.gr_submodule_class == preprojective(2)


def test_methods_agree():
    reps = [P1, P2, Q1, ONE_ONE, ONE_TWO, X2] + [random_indecomposable(K3, 2, DimVec(2, 5), s)[0] for s in (1, 9)]
    reps += [random_indecomposable(K3, 2, DimVec(a, b), 3)[0] for a, b in ((2, 2), (2, 3), (3, 2), (1, 2))]
    for rep in reps:
        methods = ["dp", "frontier"] + (["naive"] if rep.length <= 5 else [])
        runs = [oracle_run(rep, m) for m in methods]
        assert len({r.measure for r in runs}) == 1, rep.dim
        assert len({tuple(r.gr_submodules) for r in runs}) == 1, rep.dim


def test_gr_submodules():
    subs = gr_submodules(P2)
    assert len(subs) == 7 and all(u.dim == DimVec(0, 1) for u in subs)
    assert gr_submodules(ONE_ONE) == [SubRep((), ((1,),))]
    x2_subs = gr_submodules(X2)
    assert x2_subs and {u.dim for u in x2_subs} == {DimVec(1, 1)}


def test_x2_factor_is_tau_inverse():
    for u in gr_submodules(X2):
        q = quotient(X2, u)
        assert q.dim == DimVec(2, 5) and is_indecomposable(q)
        assert oracle_run(q).measure == M(1, 4, 7)


def test_is_piling():
    line = SubRep((), ((1, 0, 0),))
    assert is_piling(line, P2)
    assert is_piling(gr_submodules(X2)[0], X2)
    assert is_piling(SubRep((), ((1,),)), Q1)
    run = oracle_run(X2, "dp")
    off_chain = [u for u, m in run.measures.items() if not starts_with(run.measure, m)]
    assert off_chain
    assert not is_piling(off_chain[0], X2)


def test_in_B():
    assert in_B(ONE_ONE)
    assert in_B(random_indecomposable(K3, 2, DimVec(2, 5), 1)[0])
    assert not in_B(X2)
    with pytest.raises(PreconditionError):
        in_B(P2)


def test_refusals():
    with pytest.raises(NotIndecomposable):
        gr_measure_oracle(direct_sum(P1, P1))
    with pytest.raises(NotIndecomposable):
        gr_measure_oracle(direct_sum(P2, ONE_ONE), method="frontier")
    with pytest.raises(BudgetExceeded):
        oracle_run(preprojective_rep(K3, 2, 3), "dp", lattice_budget=5)
    with pytest.raises(PreconditionError):
        oracle_run(P2, "magic")


def test_larger_ends():
    assert oracle_run(preprojective_rep(K3, 2, 3)).measure == M(1, 4, 11)
    q2 = preinjective_rep(K3, 2, 2)
    assert q2.dim == DimVec(8, 3)
    run = oracle_run(q2)
    assert run.method == "frontier"
    assert run.measure == M(1, 2, 3, 5, 6, 7, 9, 10, 11)
    assert {u.dim for u in run.gr_submodules} == {DimVec(7, 3)}
    assert classify_position(K3, DimVec(7, 3)).kind is Position.REGULAR


def test_monotonicity_inside_one_module():
    run = oracle_run(X2, "dp")
    for u, m in run.measures.items():
        if u.length < X2.length:
            assert m < run.measure
            assert not starts_with(m, run.measure)

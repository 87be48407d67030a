import pytest

from krongr.dimvec import DimVec, KroneckerContext, preprojective
from krongr.errors import PreconditionError
from krongr.grorder import GrMeasure
from krongr.grsym import (
    RegularCoord,
    UniverseBounds,
    betweenness_violations,
    describe,
    direct_successor,
    family_dim,
    family_gr_submodule,
    family_measure,
    landing_order,
    measure_universe,
    monotone_in_i,
    preprojective_measure,
    segment,
)

K3, K4 = KroneckerContext(3), KroneckerContext(4)


def M(*xs):
    return GrMeasure(xs)


def test_takeoff():
    assert preprojective_measure(K3, 1) == M(1)
    assert preprojective_measure(K3, 2) == M(1, 4)
    assert preprojective_measure(K3, 3) == M(1, 4, 11)
    chain = [preprojective_measure(K3, r) for r in range(1, 31)]
    assert all(a < b for a, b in zip(chain, chain[1:]))


def test_family_dim():
    assert family_dim(K3, RegularCoord(1, 0, 2)) == DimVec(3, 6)
    assert family_dim(K3, RegularCoord(1, 0, 3)) == DimVec(16, 40)
    assert family_dim(K3, RegularCoord(1, 1, 1)) == DimVec(2, 5)


def test_gr_submodule():
    assert family_gr_submodule(K3, RegularCoord(1, 1, 1)) == preprojective(2)
    assert family_gr_submodule(K3, RegularCoord(2, 1, 1)) == preprojective(3)
    assert family_gr_submodule(K3, RegularCoord(1, 0, 4)) == RegularCoord(1, 0, 3)
    assert family_gr_submodule(K3, RegularCoord(2, 0, 1)) == preprojective(1)


def test_family_measure():
    assert family_measure(K3, RegularCoord(1, 0, 1)) == M(1, 2)
    assert family_measure(K3, RegularCoord(1, 1, 1)) == M(1, 4, 7)
    assert family_measure(K3, RegularCoord(1, 0, 2)) == M(1, 2, 9)
    assert family_measure(K3, RegularCoord(2, 0, 1)) == M(1, 3)
    assert family_measure(K3, RegularCoord(1, 2, 1)) == M(1, 4, 11, 29, 47)
    assert family_measure(K3, RegularCoord(2, 1, 1)) == M(1, 4, 11, 18)


def test_direct_successor_and_segment():
    assert direct_successor(K3, RegularCoord(1, 0, 1)) == M(1, 2, 9)
    assert direct_successor(K3, RegularCoord(1, 1, 1)) == M(1, 4, 7, 54)
    assert direct_successor(K3, RegularCoord(2, 0, 1)) == M(1, 3, 21)
    # third length is |(16,40)| = 56
    assert segment(K3, 1, 0, 3) == [M(1, 2), M(1, 2, 9), M(1, 2, 9, 56)]
    assert segment(K3, 1, 1, 2) == [M(1, 4, 7), M(1, 4, 7, 54)]
    assert segment(K3, 2, 0, 1) == [M(1, 3)]


def test_monotone_in_i():
    assert monotone_in_i(K3, 1, 0, 1)
    assert monotone_in_i(K3, 1, 1, 2)
    assert monotone_in_i(K3, 2, 0, 1)
    with pytest.raises(PreconditionError):
        monotone_in_i(K3, 1, 2, 2)


def test_validation():
    with pytest.raises(PreconditionError):
        family_measure(K3, RegularCoord(3, 0, 1))
    with pytest.raises(PreconditionError):
        family_dim(K3, RegularCoord(1, 0, 0))


def test_universe():
    u = measure_universe(K3, UniverseBounds(r_max=3, c_values=(1,), i_max=1, j_max=2))
    assert len(u) == 7
    assert measure_universe(K3, UniverseBounds(r_max=1)) == {M(1): ["P1"]}
    u4 = measure_universe(K4, UniverseBounds(r_max=2, c_values=(1, 2, 3), i_max=0, j_max=1))
    assert set(u4) == {M(1), M(1, 5), M(1, 2), M(1, 3), M(1, 4)}


def test_betweenness_desk_scale():
    assert betweenness_violations(K3, UniverseBounds(20, (1, 2), 3, 5)) == []


def test_descriptor_json_and_landing():
    d = describe(K3, RegularCoord(1, 1, 1)).to_json()
    assert d["measure"] == ["1", "4", "7"]
    assert d["length"] == "7"
    assert d["gr_submodule"] == {"kind": "preprojective", "index": "2"}
    assert landing_order(1, 2)
    assert not landing_order(3, 2)

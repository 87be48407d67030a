import pytest
from hypothesis import given, strategies as st

from krongr.errors import PreconditionError, SchemaError
from krongr.grorder import GrMeasure, Order, compare, extend, max_of, measure, starts_with


def M(*xs):
    return GrMeasure(xs)


measures = st.lists(st.integers(1, 40), max_size=8, unique=True).map(lambda xs: GrMeasure(sorted(xs)))


def brute_less(I, J):
    d = set(I) ^ set(J)
    return bool(d) and min(d) in set(J)


@pytest.mark.parametrize(
    "I, J, want",
    [
        (M(1, 3), M(1, 2), Order.LESS),
        (M(1, 4), M(1, 2), Order.LESS),
        (M(1, 2), M(1, 2, 5), Order.LESS),
        (M(), M(1), Order.LESS),
        (M(1, 2), M(1, 2), Order.EQUAL),
        (M(1, 2), M(1, 3), Order.GREATER),
    ],
)
def test_compare_examples(I, J, want):
    assert compare(I, J) is want
    assert (I < J) == (want is Order.LESS) == brute_less(I, J)


def test_starts_with():
    assert starts_with(M(1, 2, 9), M(1, 2))
    assert not starts_with(M(1, 4, 7), M(1, 2))
    assert starts_with(M(1, 4), M(1, 4))
    assert starts_with(M(1, 4), M())
    assert not starts_with(M(1), M(1, 4))


def test_extend():
    assert extend(M(1, 2), 9) == M(1, 2, 9)
    assert extend(M(), 1) == M(1)
    assert extend(M(1, 4), 7) == M(1, 4, 7)
    with pytest.raises(PreconditionError):
        extend(M(1, 4), 4)


def test_max_of():
    assert max_of([M(1), M(1, 2)]) == M(1, 2)
    assert max_of([M(1, 4), M(1, 2)]) == M(1, 2)
    assert max_of([M(1)]) == M(1)
    with pytest.raises(PreconditionError):
        max_of([])


def test_validation_and_immutability():
    with pytest.raises(PreconditionError):
        M(2, 1)
    with pytest.raises(PreconditionError):
        M(0, 1)
    m = M(1, 4)
    with pytest.raises(AttributeError):
        m.entries = (1,)
    assert measure(1, 4) == m and hash(measure(1, 4)) == hash(m)


def test_json_and_parse():
    big = M(1, 4, 10**40)
    assert big.to_json() == ["1", "4", str(10**40)]
    assert GrMeasure.from_json(big.to_json()) == big
    assert GrMeasure.parse("{1, 4,7}") == M(1, 4, 7)
    assert GrMeasure.parse("{}") == M()
    assert str(M(1, 2, 9)) == "{1,2,9}"
    for bad in ([1, 2], "x", ["1", "a"]):
        with pytest.raises(SchemaError):
            GrMeasure.from_json(bad)
    with pytest.raises(SchemaError):
        GrMeasure.parse("1,2")


@given(measures, measures)
def test_total_and_matches_symmetric_difference(I, J):
    assert sum([I < J, I == J, J < I]) == 1
    assert (I == J) == (I.entries == J.entries)
    assert (I < J) == brute_less(I, J)


@given(measures, measures, measures)
def test_transitive_and_sandwich(I, J, K):
    if I < J and J < K:
        assert I < K
        if starts_with(K, I):
            assert starts_with(J, I)


@given(measures, st.integers(1, 10))
def test_extend_increases(I, step):
    assert compare(I, extend(I, I.top + step)) is Order.LESS

import pytest

from synchq.partitions import DistinctPartition, InvalidPartition, enumerate_distinct, weight
from synchq.qpoly import QPoly
from synchq.qseries import pochhammer
from oracles import subsets


@pytest.mark.parametrize("parts, w", [((), 0), ((2, 0), 2), ((3, 2, 1), 6)])
def test_weight(parts, w):
    assert weight(DistinctPartition(parts, zero_allowed=True)) == w


def test_enumerate_small():
    assert [p.parts for p in enumerate_distinct(1)] == [(), (1,)]
    assert {p.parts for p in enumerate_distinct(1, True)} == {(), (0,), (1,), (1, 0)}
    got = list(enumerate_distinct(2))
    assert [p.weight for p in got] == [0, 1, 2, 3]


def test_enumeration_is_graded_and_complete():
    for m in range(7):
        for zero in (False, True):
            got = [p.parts for p in enumerate_distinct(m, zero)]
            assert len(got) == len(set(got)) == 2 ** (m + zero)
            assert set(got) == set(subsets(range(0 if zero else 1, m + 1)))
            keys = [(sum(p), p) for p in got]
            assert keys == sorted(keys)


def test_weight_generating_functions():
    for m in range(8):
        gf = QPoly((p.weight, 1) for p in enumerate_distinct(m))
        assert gf == pochhammer(-1, 1, m)
        gf0 = QPoly((p.weight, 1) for p in enumerate_distinct(m, True))
        assert gf0 == pochhammer(-1, 0, m + 1)


@pytest.mark.parametrize("parts, zero", [((1, 2), False), ((2, 2), False), ((1, 0), False),
                                         ((1, 0, 0), True), ((2, -1), True)])
def test_invalid(parts, zero):
    with pytest.raises(InvalidPartition):
        DistinctPartition(parts, zero)

import pytest

from kkschur.cores import LevelContext
from kkschur.errors import OutOfRange
from kkschur.theorems import Bounds, verify
from kkschur.theorems.conjectures import check_filter_partition, filter_piece, minindex, strong_interval


def test_minindex_examples(ctx3):
    assert minindex(ctx3, (2,), 1) == {"mu": (2,)}
    for t in (1, 2, 3):
        assert minindex(ctx3, (1,), t) == {"mu": ()}
    assert minindex(ctx3, (2, 2), 2) == {"mu": ()}
    with pytest.raises(OutOfRange):
        minindex(ctx3, (1,), 4)


def test_strong_interval(ctx3):
    assert strong_interval(ctx3, (), (2,)) == {(), (1,), (2,)}
    assert strong_interval(ctx3, (2,), (1, 1)) == set()


def test_filter_piece_and_partition(ctx3):
    piece = filter_piece(ctx3, (), 2)
    assert piece["zero_one"] and piece["filter"]
    assert check_filter_partition(ctx3, (2, 1), 2) is None


@pytest.mark.parametrize("sid", ["CONJ_POSITIVITY", "CONJ_INTERVAL", "CONJ_MININDEX_RECT", "CONJ_FILTER_PARTITION"])
@pytest.mark.parametrize("k", [2, 3])
def test_conjectures_hold_in_range(sid, k):
    assert verify(LevelContext.for_level(k), sid, Bounds(max_size=6, max_total=2)).passed


def test_monotonicity_fails_on_the_minindex_table(ctx3):
    # (1,1,1) is inside (2,1,1) but its minindex sits strictly above
    assert minindex(ctx3, (1, 1, 1), 2) == {"mu": (1, 1, 1)}
    assert minindex(ctx3, (2, 1, 1), 2) == {"mu": ()}
    v = verify(ctx3, "CONJ_MININDEX_MONOTONE", Bounds(max_size=6))
    assert not v.passed
    assert any(inst == (2, (2, 1, 1)) for inst, _, _ in v.counterexamples)

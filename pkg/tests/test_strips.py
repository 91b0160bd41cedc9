from math import comb

import pytest

from kkschur.cores import Core, LevelContext, core_shape
from kkschur.errors import LevelMismatch, NotContained
from kkschur.partitions import bounded_partitions, size
from kkschur.rectangles import RectangleMultiset
from kkschur.strips import (
    _weak_strip_bounded,
    affine_set_valued_strips,
    is_cyclically_decreasing,
    is_weak_strip,
    is_weak_strip_by_chain,
    is_weak_strip_by_word,
    r_stat,
    r_stat_shapes,
    rectangle_pullback,
    strong_cover,
    strong_leq,
    weak_cover,
    weak_strip_bounded_over,
    weak_strip_residue_check,
    weak_strips_over,
)


def test_weak_cover_examples(ctx3):
    assert weak_cover(ctx3, (1,), (2,))
    assert weak_cover(ctx3, (2, 2), (2, 2, 1))
    assert not weak_cover(ctx3, (2,), (1, 1, 1))


def test_is_weak_strip_examples(ctx3):
    for r in range(4):
        assert is_weak_strip(ctx3, to(ctx3, (r,) if r else ()), Core((), 4), r)
    assert is_weak_strip(ctx3, Core((3, 2, 1), 4), Core((2, 2), 4), 1)
    assert not is_weak_strip(ctx3, Core((2, 1), 4), Core((), 4), 2)


def to(ctx, lam):
    return Core(core_shape(ctx, lam), ctx.k + 1)


def test_level_mismatch(ctx3):
    with pytest.raises(LevelMismatch):
        is_weak_strip(ctx3, Core((1,), 3), Core((), 3), 1)


def test_weak_strips_over_examples(ctx3):
    outer = lambda tau, r: [w.outer.shape for w in weak_strips_over(ctx3, to(ctx3, tau), r)]
    assert outer((), 1) == [(1,)]
    assert outer((2, 2), 1) == [(3, 2, 1)]
    assert sorted(outer((1,), 1)) == [(1, 1), (2,)]


def test_cyclically_decreasing_examples():
    assert is_cyclically_decreasing(3, (2, 1, 0))
    assert not is_cyclically_decreasing(3, (0, 1))
    assert is_cyclically_decreasing(3, (1, 0, 3))
    assert not is_cyclically_decreasing(3, (1, 1))


def test_r_stat_examples(ctx3):
    assert r_stat(ctx3, Core((3, 2, 1), 4), Core((2, 2), 4)) == 1
    assert r_stat(ctx3, Core((), 4), Core((), 4)) == 0
    assert r_stat(ctx3, Core((2, 2), 4), Core((2, 2), 4)) == 1
    with pytest.raises(NotContained):
        r_stat(ctx3, Core((1,), 4), Core((2,), 4))


def test_asv_examples(ctx3):
    one = affine_set_valued_strips(ctx3, (), 1)
    assert [(s.gamma.shape, s.rho) for s in one] == [((1,), ())]
    two = {(s.gamma.shape, s.rho) for s in affine_set_valued_strips(ctx3, (2, 2), 1)}
    assert two == {((3, 2, 1), (2, 2)), ((2, 2), (2, 1))}
    for lam in [(), (2, 1), (3, 1, 1)]:
        zero = affine_set_valued_strips(ctx3, lam, 0)
        c = core_shape(ctx3, lam)
        assert [(s.gamma.shape, s.beta.shape, s.rho) for s in zero] == [(c, c, c)]


def test_asv_json(ctx3):
    s = affine_set_valued_strips(ctx3, (2, 2), 1)[0]
    assert set(s.to_json()) == {"outer", "inner", "rho", "size"}


def test_strong_order_examples(ctx3):
    assert strong_leq(ctx3, (1,), (2,))
    assert strong_leq(ctx3, (3,), (2, 1, 1))
    assert not strong_leq(ctx3, (2,), (1, 1))
    assert strong_cover(ctx3, (3,), (2, 1, 1))


def test_pullback_examples(ctx3):
    assert rectangle_pullback(ctx3, RectangleMultiset.of(3, [2]), (2, 2, 2)) == (2,)
    assert rectangle_pullback(ctx3, RectangleMultiset.of(3, [2]), (2, 1)) is None
    assert rectangle_pullback(ctx3, RectangleMultiset.of(3, [1, 2]), (2, 2, 1, 1, 1, 1)) == (1,)


@pytest.mark.parametrize("k", [2, 3])
def test_four_characterizations_agree(k):
    """Every pair of cores of length <= 8 and every r <= k."""
    ctx = LevelContext.for_level(k)
    lams = bounded_partitions(k, 8)
    for tau in lams:
        for kappa in lams:
            r = size(kappa) - size(tau)
            if not 0 <= r <= k:
                continue
            outer, inner = core_shape(ctx, kappa), core_shape(ctx, tau)
            votes = {_weak_strip_bounded(ctx, kappa, tau, r),
                     is_weak_strip_by_chain(k, outer, inner, r),
                     is_weak_strip_by_word(k, outer, inner, r),
                     weak_strip_residue_check(k, outer, inner, r)}
            assert len(votes) == 1, (kappa, tau, r)


@pytest.mark.parametrize("k", [2, 3])
def test_asv_count_identity(k):
    ctx = LevelContext.for_level(k)
    for lam in bounded_partitions(k, 8 - k):
        beta = core_shape(ctx, lam)
        for r in range(k + 1):
            counts: dict = {}
            for s in affine_set_valued_strips(ctx, lam, r):
                counts[s.gamma.shape] = counts.get(s.gamma.shape, 0) + 1
            for m in range(r + 1):
                for mu in weak_strip_bounded_over(ctx, lam, r - m):
                    gamma = core_shape(ctx, mu)
                    assert counts.get(gamma, 0) == comb(r_stat_shapes(k, gamma, beta), m)


def test_weak_cover_implies_strong_cover(ctx3):
    lams = bounded_partitions(3, 6)
    for a in lams:
        for b in lams:
            if weak_cover(ctx3, a, b):
                assert strong_cover(ctx3, a, b)

"""Weak and strong order, weak strips, affine set-valued strips and r_stat."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, permutations

from .cores import (
    Core,
    LevelContext,
    apply_s_shape,
    check_bounded,
    core_shape,
    k_conjugate,
    residues_of,
    shape_length,
    to_bounded,
)
from .errors import LevelMismatch, NotContained, RankOutOfRange
from .partitions import (
    Partition,
    contains,
    graded_key,
    horizontal_strips_over,
    is_horizontal_strip,
    is_vertical_strip,
    make_partition,
    part,
    removable_corners,
    size,
    skew_cells,
)
from .rectangles import RectangleMultiset


@dataclass(frozen=True)
class WeakStripWitness:
    outer: Core
    inner: Core
    size: int
    added_residues: frozenset

    def __post_init__(self):
        assert is_horizontal_strip(self.outer.shape, self.inner.shape)
        assert len(self.added_residues) == self.size, "residue count differs from strip size"

    def to_json(self) -> dict:
        return {"outer": list(self.outer.shape), "inner": list(self.inner.shape),
                "rho": list(self.inner.shape), "size": self.size}


@dataclass(frozen=True)
class AffineSetValuedStrip:
    gamma: Core
    beta: Core
    rho: Partition
    size: int

    @property
    def m(self) -> int:
        return len(residues_of(self.gamma.level - 1, skew_cells(self.beta.shape, self.rho)))

    def to_json(self) -> dict:
        return {"outer": list(self.gamma.shape), "inner": list(self.beta.shape),
                "rho": list(self.rho), "size": self.size}


def _check_level(ctx: LevelContext, *cores: Core):
    for c in cores:
        if c.level != ctx.k + 1:
            raise LevelMismatch(f"core of level {c.level} used with k={ctx.k}")


def _check_rank(ctx: LevelContext, r: int):
    if not 0 <= r <= ctx.k:
        raise RankOutOfRange(f"r={r} outside [0, {ctx.k}]")


def weak_cover(ctx: LevelContext, lam: Partition, mu: Partition) -> bool:
    check_bounded(ctx, lam)
    check_bounded(ctx, mu)
    return (size(mu) == size(lam) + 1 and contains(mu, lam)
            and contains(k_conjugate(ctx, mu), k_conjugate(ctx, lam)))


def _weak_strip_bounded(ctx: LevelContext, outer: Partition, inner: Partition, r: int) -> bool:
    """Weak r-strip test on bounded partitions: horizontal, k-conjugate vertical, sizes."""
    return (size(outer) == size(inner) + r
            and is_horizontal_strip(outer, inner)
            and is_vertical_strip(k_conjugate(ctx, outer), k_conjugate(ctx, inner))
            and contains(core_shape(ctx, outer), core_shape(ctx, inner)))


def is_weak_strip(ctx: LevelContext, kappa: Core, tau: Core, r: int) -> bool:
    _check_level(ctx, kappa, tau)
    return _weak_strip_bounded(ctx, to_bounded(ctx, kappa), to_bounded(ctx, tau), r)


def is_weak_strip_by_chain(k: int, kappa: Partition, tau: Partition, r: int) -> bool:
    """Oracle: horizontal strip reached from ``tau`` by ``r`` weak covers ``s_i``."""
    if not is_horizontal_strip(kappa, tau):
        return False
    target = shape_length(k, kappa)
    if target != shape_length(k, tau) + r:
        return False
    layer = {tau}
    for _ in range(r):
        nxt = set()
        for c in layer:
            base = shape_length(k, c)
            for i in range(k + 1):
                d = apply_s_shape(k, i, c)
                if contains(kappa, d) and shape_length(k, d) == base + 1:
                    nxt.add(d)
        layer = nxt
    return kappa in layer


def is_cyclically_decreasing(k: int, word) -> bool:
    word = [i % (k + 1) for i in word]
    if len(set(word)) != len(word):
        return False
    pos = {i: n for n, i in enumerate(word)}
    return not any((j + 1) % (k + 1) in pos and pos[j] < pos[(j + 1) % (k + 1)] for j in word)


def is_weak_strip_by_word(k: int, kappa: Partition, tau: Partition, r: int) -> bool:
    """Oracle: ``kappa = s_{i_1} ... s_{i_r} tau`` for a cyclically decreasing reduced word."""
    base = shape_length(k, tau)
    for subset in combinations(range(k + 1), r):
        for w in permutations(subset):
            if not is_cyclically_decreasing(k, w):
                continue
            shape, ok = tau, True
            for step, i in enumerate(reversed(w), start=1):
                shape = apply_s_shape(k, i, shape)
                if shape_length(k, shape) != base + step:
                    ok = False
                    break
            if ok and shape == kappa:
                return True
    return False


def weak_strip_residue_check(k: int, kappa: Partition, tau: Partition, r: int) -> bool:
    """The horizontal-strip plus residue-count characterization (derived check only)."""
    return (is_horizontal_strip(kappa, tau)
            and shape_length(k, kappa) == shape_length(k, tau) + r
            and len(residues_of(k, skew_cells(kappa, tau))) == r)


def weak_strip_bounded_over(ctx: LevelContext, lam: Partition, r: int) -> list[Partition]:
    """Every bounded ``mu`` with core(mu)/core(lam) a weak r-strip, graded-lex descending."""
    table = ctx.memo("wstrips")
    key = (lam, r)
    hit = table.get(key)
    if hit is not None:
        return hit
    check_bounded(ctx, lam)
    out = [mu for mu in horizontal_strips_over(lam, r, ctx.k) if _weak_strip_bounded(ctx, mu, lam, r)]
    out.sort(key=graded_key, reverse=True)
    out = tuple(out)
    table[key] = out
    return out


def weak_strips_over(ctx: LevelContext, tau: Core, r: int) -> list[WeakStripWitness]:
    _check_level(ctx, tau)
    _check_rank(ctx, r)
    lam = to_bounded(ctx, tau)
    out = []
    for mu in weak_strip_bounded_over(ctx, lam, r):
        kappa = Core(core_shape(ctx, mu), tau.level)
        added = frozenset(residues_of(ctx.k, skew_cells(kappa.shape, tau.shape)))
        out.append(WeakStripWitness(kappa, tau, r, added))
    return out


def r_stat_shapes(k: int, blocker: Partition, base: Partition) -> int:
    """Distinct residues of ``base``-removable corners not blocked by ``blocker``."""
    return len({(c.col - c.row) % (k + 1) for c in removable_corners(base)
                if part(blocker, c.row + 1) < c.col})


def r_stat(ctx: LevelContext, gamma: Core | Partition, beta: Core | Partition) -> int:
    g = gamma.shape if isinstance(gamma, Core) else gamma
    b = beta.shape if isinstance(beta, Core) else beta
    if not contains(g, b):
        raise NotContained(f"{list(b)} is not contained in {list(g)}")
    return r_stat_shapes(ctx.k, g, b)


def _is_asv(k: int, gamma: Partition, beta: Partition, rho: Partition, r: int, weak_ok) -> bool:
    removed = skew_cells(beta, rho)
    rem = set(removable_corners(beta))
    if not set(removed) <= rem:
        return False
    m = len(residues_of(k, removed))
    if m > r or not weak_ok(r - m):
        return False
    if not is_horizontal_strip(gamma, rho):
        return False
    res = residues_of(k, removed)
    for c in rem:
        if (c.col - c.row) % (k + 1) in res and part(gamma, c.row + 1) < c.col and c not in removed:
            return False
    return True


def affine_set_valued_strips(ctx: LevelContext, lam: Partition, r: int) -> list[AffineSetValuedStrip]:
    """Every affine set-valued r-strip over core(lam), by literal subset enumeration."""
    _check_rank(ctx, r)
    check_bounded(ctx, lam)
    k = ctx.k
    beta = core_shape(ctx, lam)
    rem = removable_corners(beta)
    out = []
    for s in range(r + 1):
        for mu in weak_strip_bounded_over(ctx, lam, s):
            gamma = core_shape(ctx, mu)
            for n in range(len(rem) + 1):
                for subset in combinations(rem, n):
                    parts = list(beta)
                    for c in subset:
                        parts[c.row - 1] -= 1
                    rho = make_partition(parts)
                    if _is_asv(k, gamma, beta, rho, r, lambda x, s=s: x == s):
                        out.append((mu, rho, gamma))
    out.sort(key=lambda t: (graded_key(t[0]), graded_key(t[1])), reverse=True)
    level = k + 1
    return [AffineSetValuedStrip(Core(g, level), Core(beta, level), rho, r) for _, rho, g in out]


def strong_leq(ctx: LevelContext, lam: Partition, mu: Partition) -> bool:
    check_bounded(ctx, lam)
    check_bounded(ctx, mu)
    return contains(core_shape(ctx, mu), core_shape(ctx, lam))


def strong_cover(ctx: LevelContext, lam: Partition, mu: Partition) -> bool:
    return size(mu) == size(lam) + 1 and strong_leq(ctx, lam, mu)


def rectangle_pullback(ctx: LevelContext, P: RectangleMultiset, mu: Partition) -> Partition | None:
    """The ``nu`` with ``mu = nu u P``, if P's parts embed in mu."""
    check_bounded(ctx, mu)
    have = Counter(mu)
    need = Counter(P.partition())
    if any(have[t] < n for t, n in need.items()):
        return None
    rest = have - need
    return tuple(sorted(rest.elements(), reverse=True))

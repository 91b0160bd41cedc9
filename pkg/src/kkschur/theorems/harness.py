"""Statement registry, ``verify`` and the resumable conjecture ``scan``.

Every statement is a pair of functions: one lists the instances inside the
bounds, the other checks a single instance and returns None on success or an
``(expected, got)`` pair describing the mismatch.
"""
from __future__ import annotations

import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Callable

from ..cores import LevelContext, core_shape
from ..errors import KSchurError, NotDivisible, UnknownStatement
from ..partitions import (
    EMPTY,
    Partition,
    add_cell,
    addable_corners,
    bounded_partitions,
    contains,
    horizontal_strips_over,
    in_k_rectangle,
    is_horizontal_strip,
    k_rectangle,
    oplus,
    part,
    removable_corners,
    size,
    subpartitions,
    union,
)
from ..rectangles import RectangleMultiset, rectangle_multisets
from ..ring import (
    Basis,
    SymFunc,
    convert,
    divide_exact,
    g,
    g_sum,
    multiply,
    pieri_kk,
    pieri_kk_by_strips,
)
from ..strips import (
    affine_set_valued_strips,
    is_weak_strip_by_chain,
    is_weak_strip_by_word,
    r_stat_shapes,
    rectangle_pullback,
    weak_strip_bounded_over,
    weak_strip_residue_check,
    _weak_strip_bounded,
)
from .binomials import binom_gen, check_binom_identity, check_binom_inverse, random_beta
from .conjectures import check_filter_partition, minindex
from .formulas import (
    a_coeff_closed,
    a_coeff_recursive,
    quotient_rect_row,
    rect_of_length,
    rect_pieri,
    t_operator,
    t_prime_operator,
)
from .verdict import Bounds, Verdict, _jsonable


@dataclass(frozen=True)
class Statement:
    ident: str
    kind: str  # "theorem", "check" or "conjecture"
    instances: Callable
    check: Callable


REGISTRY: dict[str, Statement] = {}


def statement(ident: str, kind: str = "theorem"):
    def wrap(pair):
        inst, chk = pair()
        REGISTRY[ident] = Statement(ident, kind, inst, chk)
        return pair
    return wrap


def _row(u: int) -> Partition:
    return (u,) if u else EMPTY


def _partitions(ctx, bounds):
    return bounded_partitions(ctx.k, bounds.max_size)


def _multisets(ctx, bounds, distinct=False):
    return rectangle_multisets(ctx.k, bounds.max_total, bounds.max_mult, distinct_only=distinct)


def _rect_shapes(k: int, min_len: int = 1) -> list[Partition]:
    """Every ``mu`` with ``l(mu) >= min_len`` fitting inside ``R_(k+1-l(mu))``."""
    out = []
    for l in range(min_len, k + 1):
        for mu in subpartitions(rect_of_length(k, l)):
            if len(mu) == l:
                out.append(mu)
    return out


def _mismatch(a: SymFunc, b: SymFunc):
    return None if a == b else (a, b)


def _gp(ctx, P: RectangleMultiset, lam: Partition = EMPTY) -> SymFunc:
    return g(ctx, union(P.partition(), lam))


# Theorems ------------------------------------------------------------------

@statement("P_FACTOR")
def _p_factor():
    def inst(ctx, b):
        return [(P, lam) for P in _multisets(ctx, b) for lam in _partitions(ctx, b)]

    def chk(ctx, i):
        P, lam = i
        try:
            q = divide_exact(ctx, _gp(ctx, P, lam), _gp(ctx, P))
        except NotDivisible as e:
            return "divisible", e.residual
        lower = all(size(mu) < size(lam) for mu, _ in q.items if mu != lam)
        if q.coeff(lam) != 1 or not lower:
            return "g_lam + lower-degree terms", q
        return None
    return inst, chk


@statement("RT_TWICE")
def _rt_twice():
    def inst(ctx, b):
        out = [("twice", t, lam) for t in range(1, ctx.k + 1) for lam in _partitions(ctx, b)]
        out += [("power", t, a) for t in range(1, ctx.k + 1) for a in range(2, b.max_total + 2)]
        return out

    def chk(ctx, i):
        kind, t, x = i
        R = k_rectangle(t, ctx.k)
        ratio = divide_exact(ctx, g(ctx, R + R), g(ctx, R))
        if kind == "twice":
            lhs = g(ctx, union(union(x, R), R))
            return _mismatch(lhs, multiply(ctx, g(ctx, union(x, R)), ratio))
        rhs = g(ctx, R)
        for _ in range(x - 1):
            rhs = multiply(ctx, rhs, ratio)
        return _mismatch(g(ctx, R * x), rhs)
    return inst, chk


@statement("MULTIPLICITY_FREE_QUOTIENT")
def _mfq():
    def inst(ctx, b):
        Ps = [P for P in rectangle_multisets(ctx.k, max(b.max_total, 2), b.max_mult) if P.total > len(P.entries)]
        return [(P, lam) for P in Ps for lam in _partitions(ctx, b)]

    def chk(ctx, i):
        P, lam = i
        Q = P.without_multiplicity()
        a = divide_exact(ctx, _gp(ctx, P, lam), _gp(ctx, P))
        return _mismatch(divide_exact(ctx, _gp(ctx, Q, lam), _gp(ctx, Q)), a)
    return inst, chk


@statement("RECT_PIERI")
def _rect_pieri():
    def inst(ctx, b):
        return [(P, r) for P in _multisets(ctx, b) for r in range(ctx.k + 1)]

    def chk(ctx, i):
        P, r = i
        return _mismatch(pieri_kk(ctx, P.partition(), r), rect_pieri(ctx, P, r))
    return inst, chk


@statement("QUOTIENT_RECT_ROW")
def _qrr():
    def inst(ctx, b):
        return [(P, r) for P in _multisets(ctx, b) for r in range(ctx.k + 1)]

    def chk(ctx, i):
        P, r = i
        closed = quotient_rect_row(ctx, P, r)
        got = divide_exact(ctx, _gp(ctx, P, _row(r)), _gp(ctx, P))
        bad = _mismatch(convert(ctx, closed, Basis.KKSCHUR), got)
        if bad:
            return bad
        h = lambda terms: SymFunc.from_dict(ctx.k, Basis.H, terms)
        if P.max_width() < r:
            return _mismatch(h({_row(r): 1}), closed)
        if len(P.entries) == 1:
            return _mismatch(h({_row(s): 1 for s in range(r + 1)}), closed)
        return None
    return inst, chk


@statement("STRIP_CLASSIFICATION")
def _strip_class():
    def inst(ctx, b):
        Ps = [None] + _multisets(ctx, b)
        return [(mu, u, P) for mu in _rect_shapes(ctx.k) for u in range(mu[-1] + 1) for P in Ps]

    def chk(ctx, i):
        mu, u, P = i
        k, l = ctx.k, len(mu)
        weak = set(weak_strip_bounded_over(ctx, mu, u))
        if P is not None:
            got = set(weak_strip_bounded_over(ctx, union(P.partition(), mu), u))
            want = {union(P.partition(), kappa) for kappa in weak}
            return None if got == want else (sorted(want), sorted(got))
        horiz = set(horizontal_strips_over(mu, u, k - l + 1))
        rect = rect_of_length(k, l)
        split = {union(nu, _row(u - (size(nu) - size(mu))))
                 for nu in subpartitions(rect)
                 if is_horizontal_strip(nu, mu) and size(nu) - size(mu) <= u}
        if weak == horiz == split:
            return None
        return sorted(horiz), {"weak": sorted(weak), "split": sorted(split)}
    return inst, chk


def _strip_partners(k: int, mu: Partition, bound: int | None = None):
    """``nu`` inside R_(k+1-l(mu)) with ``nu/mu`` a horizontal strip of size at most ``bound``."""
    rect = rect_of_length(k, len(mu))
    return [nu for nu in subpartitions(rect)
            if is_horizontal_strip(nu, mu) and (bound is None or size(nu) - size(mu) <= bound)]


@statement("EXPLICIT_PIERI_RECT")
def _explicit_pieri():
    def inst(ctx, b):
        out = []
        for mu in _rect_shapes(ctx.k):
            Ps = [None] + [P for P in _multisets(ctx, b) if P.max_width() <= mu[-1]]
            out += [(mu, r, P) for r in range(mu[-1] + 1) for P in Ps]
        return out

    def chk(ctx, i):
        mu, r, P = i
        k = ctx.k
        nus = _strip_partners(k, mu, r)
        if P is None:
            rhs = g_sum(ctx, [])
            for nu in nus:
                rhs = rhs + t_operator(ctx, nu, r - (size(nu) - size(mu)), r_stat_shapes(k, nu, mu))
            bad = _mismatch(pieri_kk(ctx, mu, r), rhs)
            if bad:
                return bad
            for nu in _strip_partners(k, mu):
                for x in range(nu[-1] + 1):
                    got = r_stat_shapes(k, core_shape(ctx, union(nu, _row(x))), core_shape(ctx, mu))
                    want = r_stat_shapes(k, nu, mu) - (x >= mu[-1])
                    if got != want:
                        return {"r_shift": [nu, x], "want": want}, got
            return None
        equal = P.max_width() == mu[-1]
        rhs = g_sum(ctx, [])
        for nu in nus:
            p = r_stat_shapes(k, nu, mu) - equal
            rhs = rhs + t_prime_operator(ctx, P, nu, r - (size(nu) - size(mu)), p)
        bad = _mismatch(pieri_kk(ctx, union(P.partition(), mu), r), rhs)
        if bad:
            return bad
        base = core_shape(ctx, union(P.partition(), mu))
        for nu in _strip_partners(k, mu):
            for x in range(nu[-1] + 1):
                got = r_stat_shapes(k, core_shape(ctx, union(union(P.partition(), nu), _row(x))), base)
                shift = 1 if equal else int(x >= mu[-1])
                want = r_stat_shapes(k, nu, mu) + P.alpha(x + 1) - shift
                if got != want:
                    return {"r_shift": [nu, x], "want": want}, got
        return None
    return inst, chk


@statement("SUMMATION_INDEPENDENCE")
def _sum_indep():
    def inst(ctx, b):
        shapes = [EMPTY] + _rect_shapes(ctx.k)
        Ps = [None] + _multisets(ctx, b)
        return [(nu, u, n, P) for nu in shapes for u in range((nu[-1] if nu else ctx.k) + 1)
                for n in range(-2, 3) for P in Ps]

    def chk(ctx, i):
        nu, u, n, P = i
        if P is None:
            rhs = g_sum(ctx, ((union(nu, _row(u - s)), binom_gen(n + s - 1, s)) for s in range(u + 1)))
        else:
            base = union(P.partition(), nu)
            rhs = g_sum(ctx, ((union(base, _row(u - s)), binom_gen(n - P.alpha(u + 1 - s) + s - 1, s))
                              for s in range(u + 1)))
        for p in range(4):
            lhs = g_sum(ctx, [])
            for j in range(u + 1):
                op = (t_operator(ctx, nu, u - j, p) if P is None
                      else t_prime_operator(ctx, P, nu, u - j, p))
                lhs = lhs + op.scale(binom_gen(p + n + j - 1, j))
            if lhs != rhs:
                return rhs, {"p": p, "lhs": lhs}
        return None
    return inst, chk


def _expansion_rhs(ctx, lam_bar, r, table, P=None, shift_fn=None):
    acc = g_sum(ctx, [])
    prefix = P.partition() if P is not None else EMPTY
    for (mu, q), a in table.entries.items():
        top = r - (size(mu) - size(lam_bar))
        extra = shift_fn(mu) if shift_fn else 0
        for i in range(top + 1):
            c = binom_gen(q + i + extra - 1, i)
            if c:
                acc = acc + pieri_kk(ctx, union(prefix, mu), top - i).scale(a * c)
    return acc


def _split_shapes(ctx, b, min_bar: int):
    """Every ``lam`` with ``l(lam) - 1 >= min_bar`` whose head lies inside the matching rectangle."""
    out = []
    for lam in _partitions(ctx, b):
        if len(lam) < min_bar + 1:
            continue
        bar = lam[:-1]
        if contains(rect_of_length(ctx.k, len(bar)), bar):
            out.append(lam)
    return out


@statement("EXPANSION")
def _expansion():
    def inst(ctx, b):
        out = []
        for lam in _split_shapes(ctx, b, 1):
            Ps = [None] + [P for P in _multisets(ctx, b) if P.max_width() <= lam[-2]]
            out += [(lam, P) for P in Ps]
        return out

    def chk(ctx, i):
        lam, P = i
        bar, r = lam[:-1], lam[-1]
        table = a_coeff_recursive(ctx, bar)
        if P is None:
            return _mismatch(g(ctx, lam), _expansion_rhs(ctx, bar, r, table))
        a_r = P.alpha(r)
        if P.max_width() < bar[-1]:
            shift = lambda mu: a_r
        else:
            shift = lambda mu: a_r - 1 + int(mu[len(bar) - 1] != bar[-1])
        return _mismatch(_gp(ctx, P, lam), _expansion_rhs(ctx, bar, r, table, P, shift))
    return inst, chk


@statement("PRODUCT_FORMULA")
def _product():
    def inst(ctx, b):
        out = []
        for lam in _split_shapes(ctx, b, 0):
            bar = lam[:-1]
            for P in _multisets(ctx, b):
                if not bar or P.max_width() < bar[-1]:
                    out.append((lam, P))
        return out

    def chk(ctx, i):
        lam, P = i
        bar, r = lam[:-1], lam[-1]
        gP = _gp(ctx, P)
        one = g_sum(ctx, ((union(union(P.partition(), bar), _row(r - s)),
                           (-1) ** s * binom_gen(P.alpha(r + 1 - s), s)) for s in range(r + 1)))
        bad = _mismatch(one, multiply(ctx, gP, g(ctx, lam)))
        if bad:
            return {"part": 1, "want": bad[0]}, bad[1]
        inner = g_sum(ctx, ((union(bar, _row(r - s)), binom_gen(P.alpha(r) + s - 1, s)) for s in range(r + 1)))
        bad = _mismatch(_gp(ctx, P, lam), multiply(ctx, gP, inner))
        if bad:
            return {"part": 2, "want": bad[0]}, bad[1]
        if P.max_width() < r:
            bad = _mismatch(_gp(ctx, P, lam), multiply(ctx, gP, g(ctx, lam)))
            if bad:
                return {"part": "collapse", "want": bad[0]}, bad[1]
        beta = [P.alpha(j) for j in range(1, r + 2)]
        v = check_binom_inverse(r, beta)
        if not v.passed:
            return {"part": "bridge", "beta": beta}, v.counterexamples
        return None
    return inst, chk


@statement("SPLIT_RECTANGLES")
def _split():
    def inst(ctx, b):
        return [P for P in _multisets(ctx, b) if len(P.entries) > 1]

    def chk(ctx, P):
        prod = None
        for t, a in P.entries:
            piece = g(ctx, k_rectangle(t, ctx.k) * a)
            prod = piece if prod is None else multiply(ctx, prod, piece)
        return _mismatch(_gp(ctx, P), prod)
    return inst, chk


@statement("DOUBLE_RECT")
def _double():
    def inst(ctx, b):
        return list(range(1, ctx.k + 1))

    def chk(ctx, t):
        R = k_rectangle(t, ctx.k)
        rhs = multiply(ctx, g(ctx, R), g_sum(ctx, ((nu, 1) for nu in subpartitions(R))))
        return _mismatch(g(ctx, R + R), rhs)
    return inst, chk


# Supporting checks ---------------------------------------------------------

@statement("A_COEFF", "check")
def _a_coeff():
    def inst(ctx, b):
        return [EMPTY] + _rect_shapes(ctx.k)

    def chk(ctx, bar):
        a, c = a_coeff_recursive(ctx, bar), a_coeff_closed(ctx, bar)
        return None if a.entries == c.entries else (c, a)
    return inst, chk


@statement("WEAK_STRIP_EQUIV", "check")
def _weak_equiv():
    def inst(ctx, b):
        return _partitions(ctx, b)

    def chk(ctx, tau):
        k = ctx.k
        inner = core_shape(ctx, tau)
        for n in range(0, k + 1):
            for kappa in bounded_partitions(k, size(tau) + n, size(tau) + n):
                outer = core_shape(ctx, kappa)
                votes = (_weak_strip_bounded(ctx, kappa, tau, n),
                         is_weak_strip_by_chain(k, outer, inner, n),
                         is_weak_strip_by_word(k, outer, inner, n),
                         weak_strip_residue_check(k, outer, inner, n))
                if len(set(votes)) != 1:
                    return "agreement", {"outer": kappa, "inner": tau, "votes": votes}
        return None
    return inst, chk


@statement("ASV_COUNT", "check")
def _asv_count():
    def inst(ctx, b):
        return [(lam, r) for lam in _partitions(ctx, b) for r in range(ctx.k + 1)]

    def chk(ctx, i):
        lam, r = i
        k = ctx.k
        beta = core_shape(ctx, lam)
        counts: dict = {}
        for st in affine_set_valued_strips(ctx, lam, r):
            counts[st.gamma.shape] = counts.get(st.gamma.shape, 0) + 1
        for s in range(r + 1):
            for mu in weak_strip_bounded_over(ctx, lam, s):
                gamma = core_shape(ctx, mu)
                want = comb(r_stat_shapes(k, gamma, beta), r - s)
                if counts.get(gamma, 0) != want:
                    return {"gamma": gamma, "count": want}, counts.get(gamma, 0)
        return _mismatch(pieri_kk(ctx, lam, r), pieri_kk_by_strips(ctx, lam, r))
    return inst, chk


@statement("RECT_STABILITY", "check")
def _rect_stab():
    def inst(ctx, b):
        return [(lam, P) for lam in bounded_partitions(ctx.k, min(b.max_size, 6))
                for P in rectangle_multisets(ctx.k, min(b.max_total, 2), b.max_mult)]

    def chk(ctx, i):
        lam, P = i
        k = ctx.k
        Pp = P.partition()
        big = union(lam, Pp)
        for n in range(k + 1):
            for nu in horizontal_strips_over(lam, n, k):
                a = _weak_strip_bounded(ctx, nu, lam, n)
                c = _weak_strip_bounded(ctx, union(nu, Pp), big, n)
                if a != c:
                    return {"nu": nu, "strip": a}, c
            for mu in weak_strip_bounded_over(ctx, big, n):
                nu = rectangle_pullback(ctx, P, mu)
                if nu is None or not _weak_strip_bounded(ctx, nu, lam, n):
                    return {"pullback_of": mu}, nu
        return None
    return inst, chk


@statement("R_STAT_STABILITY", "check")
def _rstat_stab():
    def inst(ctx, b):
        return [(lam, t) for lam in _partitions(ctx, b) for t in range(1, ctx.k + 1)]

    def chk(ctx, i):
        lam, t = i
        k = ctx.k
        R = k_rectangle(t, k)
        for n in range(k + 1):
            for nu in weak_strip_bounded_over(ctx, lam, n):
                a = r_stat_shapes(k, core_shape(ctx, nu), core_shape(ctx, lam))
                c = r_stat_shapes(k, core_shape(ctx, union(nu, R)), core_shape(ctx, union(lam, R)))
                if c - a not in (0, 1) or (t in lam and c != a):
                    return {"nu": nu, "before": a}, c
        return None
    return inst, chk


@statement("CORE_RECT_ROWS", "check")
def _core_rows():
    def inst(ctx, b):
        return [(lam, t) for lam in _partitions(ctx, b) for t in range(1, ctx.k + 1)]

    def chk(ctx, i):
        lam, t = i
        k = ctx.k
        h = k + 1 - t
        c = core_shape(ctx, lam)
        ct = core_shape(ctx, union(lam, k_rectangle(t, k)))
        for r in range(len(lam) + 1):
            if not ((r == 0 or lam[r - 1] >= t) and t >= part(lam, r + 1)):
                continue
            for i_ in range(1, len(ct) + 1):
                want = part(c, i_) + t if i_ <= r + h else part(c, i_ - h)
                if ct[i_ - 1] != want:
                    return {"r": r, "row": i_, "want": want}, ct[i_ - 1]
        return None
    return inst, chk


@statement("CORE_OPLUS", "check")
def _core_oplus():
    def inst(ctx, b):
        return [(P, mu) for P in _multisets(ctx, b) for mu in [EMPTY] + _rect_shapes(ctx.k)
                if not mu or mu[-1] >= P.max_width()]

    def chk(ctx, i):
        P, mu = i
        want = oplus(mu, core_shape(ctx, P.partition()))
        got = core_shape(ctx, union(P.partition(), mu))
        return None if want == got else (want, got)
    return inst, chk


@statement("CORNER_COUNT", "check")
def _corner_count():
    def inst(ctx, b):
        return [beta for beta in bounded_partitions(ctx.k, b.max_size) if in_k_rectangle(beta, ctx.k)]

    def chk(ctx, beta):
        k = ctx.k
        for gam in subpartitions(beta):
            base = r_stat_shapes(k, beta, gam)
            rem = set(removable_corners(gam))
            for y in addable_corners(gam):
                tilde = add_cell(gam, y)
                # y must sit inside beta for "nonblocked" to carry its meaning
                if not contains(beta, tilde) or not in_k_rectangle(tilde, k) or part(beta, y.row + 1) >= y.col:
                    continue
                left = (y.row, y.col - 1)
                zero = any((c.row, c.col) == left for c in rem) and part(beta, y.row + 1) < y.col - 1
                want = 0 if zero else 1
                got = r_stat_shapes(k, beta, tilde) - base
                if got != want:
                    return {"gamma": gam, "y": tuple(y), "want": want}, got
        return None
    return inst, chk


@statement("BINOM_INVERSE", "check")
def _binom_inv():
    def inst(ctx, b):
        import random
        rng = random.Random(20240)
        return [(l, tuple(random_beta(rng, l))) for l in range(1, 9) for _ in range(25)]

    def chk(ctx, i):
        l, beta = i
        v = check_binom_inverse(l, beta)
        return None if v.passed else (None, v.counterexamples)
    return inst, chk


@statement("BINOM_IDENTITY", "check")
def _binom_id():
    def inst(ctx, b):
        return [0]

    def chk(ctx, _):
        v = check_binom_identity(10, 10)
        return None if v.passed else (None, v.counterexamples)
    return inst, chk


# Conjectures ---------------------------------------------------------------

@statement("CONJ_POSITIVITY", "conjecture")
def _positivity():
    def inst(ctx, b):
        return [(P, lam) for P in _multisets(ctx, b) for lam in _partitions(ctx, b)]

    def chk(ctx, i):
        P, lam = i
        q = divide_exact(ctx, _gp(ctx, P, lam), _gp(ctx, P))
        neg = [(mu, c) for mu, c in q.items if c < 0]
        return ("nonnegative", q) if neg else None
    return inst, chk


@statement("CONJ_INTERVAL", "conjecture")
def _interval():
    def inst(ctx, b):
        return [(t, lam) for t in range(1, ctx.k + 1) for lam in _partitions(ctx, b)]

    def chk(ctx, i):
        t, lam = i
        m = minindex(ctx, lam, t)
        return None if "mu" in m else ("interval", m)
    return inst, chk


def _strong_leq(ctx, a, b):
    return contains(core_shape(ctx, b), core_shape(ctx, a))


@statement("CONJ_MININDEX_MONOTONE", "conjecture")
def _mono():
    def inst(ctx, b):
        return [(t, lam) for t in range(1, ctx.k + 1) for lam in _partitions(ctx, b)]

    def chk(ctx, i):
        t, lam = i
        top = minindex(ctx, lam, t)
        if "mu" not in top:
            return "minindex defined", top
        for mu in subpartitions(lam):
            low = minindex(ctx, mu, t)
            if "mu" not in low or not _strong_leq(ctx, low["mu"], top["mu"]):
                return {"sub": mu, "upper": top}, low
        return None
    return inst, chk


@statement("CONJ_MININDEX_RECT", "conjecture")
def _mini_rect():
    def inst(ctx, b):
        k = ctx.k
        return [(t, s, lam) for t in range(1, k + 1) for s in range(1, k + 1) if s != t
                for lam in _partitions(ctx, b)]

    def chk(ctx, i):
        t, s, lam = i
        Rs = k_rectangle(s, ctx.k)
        base = minindex(ctx, lam, t)
        one = minindex(ctx, union(Rs, lam), t)
        two = minindex(ctx, union(union(Rs, Rs), lam), t)
        if not all("mu" in m for m in (base, one, two)):
            return "minindex defined", [base, one, two]
        rest = rectangle_pullback(ctx, RectangleMultiset.of(ctx.k, [s]), one["mu"])
        if rest is None or not _strong_leq(ctx, base["mu"], rest):
            return {"contains R_s above": base["mu"]}, one["mu"]
        if union(Rs, one["mu"]) != two["mu"]:
            return union(Rs, one["mu"]), two["mu"]
        return None
    return inst, chk


@statement("CONJ_FILTER_PARTITION", "conjecture")
def _filters():
    def inst(ctx, b):
        return [(t, lam) for t in range(1, ctx.k + 1) for lam in _partitions(ctx, b)]

    def chk(ctx, i):
        t, lam = i
        bad = check_filter_partition(ctx, lam, t)
        return None if bad is None else ("disjoint order filters", bad)
    return inst, chk


# Driver --------------------------------------------------------------------

def _run_one(ctx, st: Statement, inst):
    try:
        return st.check(ctx, inst)
    except KSchurError as e:
        return "no error", f"{type(e).__name__}: {e}"


def instances(ctx: LevelContext, statement_id: str, bounds: Bounds | None = None) -> list:
    st = _lookup(statement_id)
    return st.instances(ctx, bounds or Bounds())


def _lookup(statement_id: str) -> Statement:
    try:
        return REGISTRY[statement_id]
    except KeyError:
        raise UnknownStatement(f"unknown statement {statement_id!r}; known: {', '.join(sorted(REGISTRY))}")


def verify(ctx: LevelContext, statement_id: str, bounds: Bounds | None = None, jobs: int = 1) -> Verdict:
    st = _lookup(statement_id)
    start = time.perf_counter()
    todo = instances(ctx, statement_id, bounds)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda x: _run_one(ctx, st, x), todo))
    else:
        results = [_run_one(ctx, st, x) for x in todo]
    bad = [(inst, res[0], res[1]) for inst, res in zip(todo, results) if res is not None]
    return Verdict(st.ident, ctx.k, len(todo), bad, time.perf_counter() - start)


def instance_key(statement_id: str, k: int, inst) -> str:
    return json.dumps([statement_id, k, _jsonable(inst)], separators=(",", ":"))


def _read_report(path: str) -> dict:
    done: dict = {}
    if not os.path.exists(path):
        return done
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError:
                continue  # a torn final line from an interrupted run
            if rec.get("type") == "instance":
                done[instance_key(rec["statement"], rec["k"], rec["instance"])] = rec
    return done


def scan(ctx: LevelContext, statement_ids, bounds: Bounds | None, report: str, jobs: int = 1,
         limit: int | None = None) -> list[Verdict]:
    """Check instances not yet in ``report`` and append one JSON line per instance.

    The report doubles as the checkpoint: rerunning resumes where it stopped.
    ``limit`` caps how many new instances are checked in this call.
    """
    done = _read_report(report)
    verdicts = []
    budget = limit
    with open(report, "a") as fh:
        for sid in statement_ids:
            st = _lookup(sid)
            start = time.perf_counter()
            todo = instances(ctx, sid, bounds)
            fresh = [x for x in todo if instance_key(sid, ctx.k, _jsonable(x)) not in done]
            if budget is not None:
                fresh, budget = fresh[:budget], max(0, budget - len(fresh))
            step = max(1, jobs) * 8
            for lo in range(0, len(fresh), step):
                chunk = fresh[lo:lo + step]
                if jobs > 1:
                    with ThreadPoolExecutor(max_workers=jobs) as pool:
                        res = list(pool.map(lambda x: _run_one(ctx, st, x), chunk))
                else:
                    res = [_run_one(ctx, st, x) for x in chunk]
                for inst, r in zip(chunk, res):
                    rec = {"type": "instance", "statement": sid, "k": ctx.k, "instance": _jsonable(inst),
                           "ok": r is None}
                    if r is not None:
                        rec["expected"], rec["got"] = _jsonable(r[0]), _jsonable(r[1])
                    fh.write(json.dumps(rec, separators=(",", ":")) + "\n")
                    done[instance_key(sid, ctx.k, rec["instance"])] = rec
                fh.flush()
            mine = [done[instance_key(sid, ctx.k, _jsonable(x))] for x in todo
                    if instance_key(sid, ctx.k, _jsonable(x)) in done]
            bad = [(r["instance"], r.get("expected"), r.get("got")) for r in mine if not r["ok"]]
            v = Verdict(sid, ctx.k, len(mine), bad, time.perf_counter() - start)
            summary = {"type": "summary", **v.to_json(), "complete": len(mine) == len(todo)}
            fh.write(json.dumps(summary, separators=(",", ":")) + "\n")
            fh.flush()
            verdicts.append(v)
    return verdicts


THEOREMS = [s for s, st in REGISTRY.items() if st.kind == "theorem"]
CHECKS = [s for s, st in REGISTRY.items() if st.kind == "check"]
CONJECTURES = [s for s, st in REGISTRY.items() if st.kind == "conjecture"]

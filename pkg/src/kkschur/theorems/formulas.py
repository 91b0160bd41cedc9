"""Closed-form right-hand sides: rectangle Pieri, row quotients, T operators, A coefficients."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..cores import LevelContext
from ..errors import BaseNotInRectangle, PreconditionViolated, RankOutOfRange
from ..partitions import (
    EMPTY,
    Partition,
    conjugate,
    contains,
    in_k_rectangle,
    is_horizontal_strip,
    is_vertical_strip,
    size,
    subpartitions,
    union,
)
from ..rectangles import RectangleMultiset
from ..ring import Basis, SymFunc, g_sum
from ..strips import r_stat_shapes
from .binomials import binom_gen


def _rank(ctx: LevelContext, r: int):
    if not 0 <= r <= ctx.k:
        raise RankOutOfRange(f"r={r} outside [0, {ctx.k}]")


def rect_pieri(ctx: LevelContext, P: RectangleMultiset, r: int) -> SymFunc:
    """``g_P h_r = sum_s (-1)^(r-s) C(alpha_(s+1), r-s) g_(P u (s))``."""
    _rank(ctx, r)
    base = P.partition()
    return g_sum(ctx, ((union(base, (s,) if s else EMPTY), (-1) ** (r - s) * binom_gen(P.alpha(s + 1), r - s))
                       for s in range(r + 1)))


def quotient_rect_row(ctx: LevelContext, P: RectangleMultiset, r: int) -> SymFunc:
    """``g_(P u (r)) / g_P = sum_s C(alpha_r + r-s-1, r-s) h_s`` in the h basis."""
    _rank(ctx, r)
    a = P.alpha(r) if r else 0
    terms = {((s,) if s else EMPTY): binom_gen(a + r - s - 1, r - s) for s in range(r + 1)}
    return SymFunc.from_dict(ctx.k, Basis.H, terms)


def rect_of_length(k: int, l: int) -> Partition:
    """``R_(k+1-l)``, empty unless ``1 <= k+1-l <= k``."""
    t = k + 1 - l
    return (t,) * l if 1 <= t <= k else EMPTY


def _row(u: int) -> Partition:
    return (u,) if u else EMPTY


def _check_t(ctx: LevelContext, nu: Partition, u: int):
    if not in_k_rectangle(nu, ctx.k):
        raise PreconditionViolated(f"{list(nu)} is not inside a k-rectangle")
    cap = nu[-1] if nu else ctx.k
    if not 0 <= u <= cap:
        raise PreconditionViolated(f"u={u} outside [0, {cap}]")


def t_operator(ctx: LevelContext, nu: Partition, u: int, p: int) -> SymFunc:
    """``sum_s (-1)^s C(p, s) g_(nu u (u-s))``."""
    _check_t(ctx, nu, u)
    return g_sum(ctx, ((union(nu, _row(u - s)), (-1) ** s * binom_gen(p, s)) for s in range(u + 1)))


def t_prime_operator(ctx: LevelContext, P: RectangleMultiset, nu: Partition, u: int, p: int) -> SymFunc:
    """``sum_s (-1)^s C(p + alpha_(u+1-s), s) g_(P u nu u (u-s))``."""
    _check_t(ctx, nu, u)
    base = union(P.partition(), nu)
    return g_sum(ctx, ((union(base, _row(u - s)), (-1) ** s * binom_gen(p + P.alpha(u + 1 - s), s))
                       for s in range(u + 1)))


@dataclass
class ACoefficientTable:
    base: Partition
    entries: dict = field(default_factory=dict)  # (mu, q) -> int, zeros dropped

    def get(self, mu: Partition, q: int) -> int:
        return self.entries.get((mu, q), 0)

    def by_shape(self, mu: Partition) -> dict:
        return {q: c for (m, q), c in self.entries.items() if m == mu}

    def to_json(self) -> dict:
        rows = sorted(self.entries.items(), key=lambda t: (size(t[0][0]), t[0][0], t[0][1]))
        return {"base": list(self.base),
                "entries": [{"mu": list(m), "q": q, "coeff": str(c)} for (m, q), c in rows]}


def _a_domain(ctx: LevelContext, lam_bar: Partition) -> list[Partition]:
    rect = rect_of_length(ctx.k, len(lam_bar))
    if not contains(rect, lam_bar):
        raise BaseNotInRectangle(f"{list(lam_bar)} is not inside R_(k+1-{len(lam_bar)})")
    out = [mu for mu in subpartitions(rect) if contains(mu, lam_bar)]
    out.sort(key=lambda m: (size(m), m))
    return out


def a_coeff_recursive(ctx: LevelContext, lam_bar: Partition) -> ACoefficientTable:
    """A coefficients from the subtraction recursion over horizontal strips."""
    k = ctx.k
    lam_bar = tuple(lam_bar)
    dom = _a_domain(ctx, lam_bar)
    f: dict[Partition, dict[int, int]] = {}
    for mu in dom:
        if mu == lam_bar:
            f[mu] = {r_stat_shapes(k, mu, mu): 1}
            continue
        acc: dict[int, int] = {}
        r_mm = r_stat_shapes(k, mu, mu)
        for kappa in dom:
            if kappa == mu or not contains(kappa, lam_bar) or not is_horizontal_strip(mu, kappa):
                continue
            shift = r_mm - r_stat_shapes(k, mu, kappa)
            for q, c in f[kappa].items():
                acc[q + shift] = acc.get(q + shift, 0) - c
        f[mu] = {q: c for q, c in acc.items() if c}
    table = ACoefficientTable(lam_bar)
    for mu, poly in f.items():
        for q, c in poly.items():
            table.entries[(mu, q)] = c
    return table


def a_coeff_closed(ctx: LevelContext, lam_bar: Partition) -> ACoefficientTable:
    """``(-1)^|mu/lam_bar|`` at ``q = |mu/lam_bar| + r(mu', lam_bar')`` for vertical strips."""
    k = ctx.k
    lam_bar = tuple(lam_bar)
    table = ACoefficientTable(lam_bar)
    for mu in _a_domain(ctx, lam_bar):
        if is_vertical_strip(mu, lam_bar):
            d = size(mu) - size(lam_bar)
            q = d + r_stat_shapes(k, conjugate(mu), conjugate(lam_bar))
            table.entries[(mu, q)] = (-1) ** d
    return table

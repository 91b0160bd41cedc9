"""minindex and the interval / filter structure of rectangle quotients."""
from __future__ import annotations

from ..cores import LevelContext
from ..errors import OutOfRange
from ..partitions import EMPTY, Partition, bounded_partitions, k_rectangle, size, subpartitions, union
from ..ring import SymFunc, divide_exact, g, g_sum, multiply
from ..strips import strong_leq


def rect_quotient(ctx: LevelContext, lam: Partition, t: int) -> SymFunc:
    """``g_(R_t u lam) / g_(R_t)``, memoized per (lam, t)."""
    table = ctx.memo("rect_quotient")
    key = (tuple(lam), t)
    hit = table.get(key)
    if hit is None:
        R = k_rectangle(t, ctx.k)
        hit = divide_exact(ctx, g(ctx, union(R, tuple(lam))), g(ctx, R))
        table[key] = hit
    return hit


def strong_interval(ctx: LevelContext, low: Partition, high: Partition) -> set[Partition]:
    """All bounded ``nu`` with core(low) inside core(nu) inside core(high)."""
    if not strong_leq(ctx, low, high):
        return set()
    cands = bounded_partitions(ctx.k, size(high), size(low))
    return {nu for nu in cands if strong_leq(ctx, low, nu) and strong_leq(ctx, nu, high)}


def strong_minimal(ctx: LevelContext, support) -> list[Partition]:
    support = list(support)
    return sorted(m for m in support
                  if not any(o != m and strong_leq(ctx, o, m) for o in support))


def minindex(ctx: LevelContext, lam: Partition, t: int) -> dict:
    """``{"mu": ...}`` when the quotient is a 0/1 sum over a strong interval ending at lam.

    Otherwise ``{"failure": reason}`` naming the property that broke.
    """
    if not 1 <= t <= ctx.k:
        raise OutOfRange(f"t={t} outside [1, {ctx.k}]")
    lam = tuple(lam)
    q = rect_quotient(ctx, lam, t)
    coeffs = q.terms
    if any(c not in (0, 1) for c in coeffs.values()):
        bad = sorted(mu for mu, c in coeffs.items() if c not in (0, 1))
        return {"failure": "coefficient outside {0,1}", "at": [list(m) for m in bad]}
    support = set(coeffs)
    if lam not in support:
        return {"failure": "top index missing from the quotient"}
    mins = strong_minimal(ctx, support)
    if len(mins) != 1:
        return {"failure": "no unique strong-order minimum", "minima": [list(m) for m in mins]}
    mu = mins[0]
    if strong_interval(ctx, mu, lam) != support:
        return {"failure": "support is not a strong-order interval", "mu": list(mu)}
    return {"mu": mu}


def rect_sum(ctx: LevelContext, t: int) -> SymFunc:
    """``sum_(nu inside R_t) g_nu``."""
    return g_sum(ctx, ((nu, 1) for nu in subpartitions(k_rectangle(t, ctx.k))))


def filter_piece(ctx: LevelContext, mu: Partition, t: int) -> dict:
    """Describe ``g_mu * sum_(nu inside R_t) g_nu``: its support and whether it is a 0/1 order filter."""
    prod = multiply(ctx, g(ctx, mu), rect_sum(ctx, t))
    coeffs = prod.terms
    support = set(coeffs)
    top = union(k_rectangle(t, ctx.k), tuple(mu))
    whole = strong_interval(ctx, EMPTY, top)
    zero_one = all(c == 1 for c in coeffs.values())
    inside = support <= whole
    upward = inside and all(nu in support for gam in support for nu in whole if strong_leq(ctx, gam, nu))
    return {"support": support, "zero_one": zero_one, "filter": upward}


def check_filter_partition(ctx: LevelContext, lam: Partition, t: int) -> dict | None:
    """None when the pieces over [minindex(lam), lam] tile [minindex(R_t u lam), R_t u lam]."""
    lam = tuple(lam)
    inner = minindex(ctx, lam, t)
    R = k_rectangle(t, ctx.k)
    outer = minindex(ctx, union(R, lam), t)
    if "mu" not in inner or "mu" not in outer:
        return {"reason": "minindex undefined", "inner": inner, "outer": outer}
    seen: set = set()
    for mu in sorted(strong_interval(ctx, inner["mu"], lam)):
        piece = filter_piece(ctx, mu, t)
        if not piece["zero_one"] or not piece["filter"]:
            return {"reason": "piece is not a 0/1 order filter", "mu": list(mu)}
        if seen & piece["support"]:
            return {"reason": "pieces overlap", "mu": list(mu)}
        seen |= piece["support"]
    target = strong_interval(ctx, outer["mu"], union(R, lam))
    if seen != target:
        return {"reason": "union of pieces differs from the target interval"}
    return None


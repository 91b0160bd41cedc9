"""Weak and strong Hasse diagrams on bounded partitions, with DOT output."""
from __future__ import annotations

from itertools import combinations

from .cores import LevelContext, apply_s_shape, core_shape, shape_length
from .partitions import Partition, bounded_partitions, contains, size
from .strips import strong_cover, weak_cover

Edge = tuple[Partition, Partition]


def nodes(ctx: LevelContext, max_size: int) -> list[Partition]:
    """Bounded partitions of size at most ``max_size``, graded then lex ascending."""
    return sorted(bounded_partitions(ctx.k, max_size), key=lambda lam: (size(lam), lam))


def weak_edges(ctx: LevelContext, max_size: int) -> list[Edge]:
    ns = nodes(ctx, max_size)
    return [(a, b) for a in ns for b in ns if weak_cover(ctx, a, b)]


def strong_edges(ctx: LevelContext, max_size: int) -> list[Edge]:
    ns = nodes(ctx, max_size)
    return [(a, b) for a in ns for b in ns if strong_cover(ctx, a, b)]


def weak_edges_by_action(ctx: LevelContext, max_size: int) -> set[Edge]:
    """Oracle: every ``s_i`` that lengthens a core by one is a weak cover."""
    k = ctx.k
    by_core = {core_shape(ctx, lam): lam for lam in nodes(ctx, max_size)}
    out = set()
    for c, lam in by_core.items():
        for i in range(k + 1):
            d = apply_s_shape(k, i, c)
            if d in by_core and shape_length(k, d) == shape_length(k, c) + 1:
                out.add((lam, by_core[d]))
    return out


def strong_edges_by_reduction(ctx: LevelContext, max_size: int) -> set[Edge]:
    """Oracle: transitive reduction of core containment, ignoring sizes."""
    ns = nodes(ctx, max_size)
    cs = {lam: core_shape(ctx, lam) for lam in ns}
    below = {(a, b) for a, b in combinations(ns, 2) if contains(cs[b], cs[a])}
    below |= {(b, a) for a, b in combinations(ns, 2) if contains(cs[a], cs[b])}
    return {(a, b) for a, b in below
            if not any((a, m) in below and (m, b) in below for m in ns)}


def _label(lam: Partition) -> str:
    return "[" + ",".join(map(str, lam)) + "]"


def to_dot(ctx: LevelContext, max_size: int, order: str = "both") -> str:
    """Undirected DOT graph: solid edges are weak covers, dashed edges are strong-only covers.

    ``order="weak"`` drops the dashed edges; ``"strong"`` and ``"both"`` keep every strong cover.
    """
    if order not in ("weak", "strong", "both"):
        raise ValueError(f"unknown order {order!r}")
    weak = weak_edges(ctx, max_size)
    weak_set = set(weak)
    lines = [f'graph "cores_k{ctx.k}" {{', "  rankdir=TB;"]
    for lam in nodes(ctx, max_size):
        lines.append(f'  "{_label(lam)}" [core="{_label(core_shape(ctx, lam))}", rank={size(lam)}];')
    for a, b in weak:
        lines.append(f'  "{_label(a)}" -- "{_label(b)}" [style=solid];')
    if order != "weak":
        for a, b in strong_edges(ctx, max_size):
            if (a, b) not in weak_set:
                lines.append(f'  "{_label(a)}" -- "{_label(b)}" [style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"

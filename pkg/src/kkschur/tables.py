"""Regenerate the rectangle-quotient table and the minindex table for any level."""
from __future__ import annotations

from itertools import combinations, product

from .cores import LevelContext, core_shape
from .partitions import Partition, bounded_partitions, size, union
from .rectangles import RectangleMultiset
from .ring import SymFunc, divide_exact, g
from .theorems.conjectures import minindex


def _label(lam: Partition) -> str:
    return "[" + ",".join(map(str, lam)) + "]"


def staircase_columns(k: int) -> list[Partition]:
    """Nonempty ``lam`` with at most ``k - i`` parts equal to ``i``, graded then lex ascending."""
    out = []
    for mults in product(*(range(k - i + 1) for i in range(1, k))):
        lam = tuple(i for i in range(k - 1, 0, -1) for _ in range(mults[i - 1]))
        if lam:
            out.append(lam)
    return sorted(out, key=lambda lam: (size(lam), lam))


def distinct_rectangle_unions(k: int) -> list[RectangleMultiset]:
    """Every ``R_(t_1) u ... u R_(t_n)`` with distinct widths, by count then widths descending."""
    out = []
    for n in range(1, k + 1):
        for ws in sorted(combinations(range(k, 0, -1), n), reverse=True):
            out.append(RectangleMultiset.of(k, list(ws)))
    return out


def table1(ctx: LevelContext) -> list[tuple[RectangleMultiset, Partition, SymFunc]]:
    rows = []
    for Q in distinct_rectangle_unions(ctx.k):
        den = g(ctx, Q.partition())
        for lam in staircase_columns(ctx.k):
            rows.append((Q, lam, divide_exact(ctx, g(ctx, union(Q.partition(), lam)), den)))
    return rows


def table1_text(ctx: LevelContext) -> str:
    lines = [f"# k={ctx.k}  Q  lam  g_(Q u lam) / g_Q"]
    for Q, lam, q in table1(ctx):
        lines.append(f"{_label(Q.partition())}\t{_label(lam)}\t{q.pretty()}")
    return "\n".join(lines) + "\n"


def table1_json(ctx: LevelContext) -> list[dict]:
    return [{"Q": list(Q.partition()), "lambda": list(lam), "quotient": q.to_json()}
            for Q, lam, q in table1(ctx)]


def table2(ctx: LevelContext, max_size: int) -> list[tuple[Partition, Partition, list]]:
    """Rows ``(lam, core(lam), [minindex(lam, t) for t = 1..k])`` in graded-lex descending order."""
    lams = sorted(bounded_partitions(ctx.k, max_size), key=lambda lam: (-size(lam), lam), reverse=True)
    return [(lam, core_shape(ctx, lam), [minindex(ctx, lam, t) for t in range(1, ctx.k + 1)])
            for lam in lams]


def _mu_cells(ctx, m: dict) -> tuple[str, str]:
    if "mu" not in m:
        return "?", "?"
    return _label(m["mu"]), _label(core_shape(ctx, m["mu"]))


def table2_text(ctx: LevelContext, max_size: int) -> str:
    head = "\t".join(f"t={t}\tcore" for t in range(1, ctx.k + 1))
    lines = [f"# k={ctx.k}  lam\tcore\t{head}"]
    for lam, c, ms in table2(ctx, max_size):
        cells = [x for m in ms for x in _mu_cells(ctx, m)]
        lines.append("\t".join([_label(lam), _label(c), *cells]))
    return "\n".join(lines) + "\n"


def table2_json(ctx: LevelContext, max_size: int) -> list[dict]:
    out = []
    for lam, c, ms in table2(ctx, max_size):
        row = {"lambda": list(lam), "core": list(c), "minindex": []}
        for t, m in enumerate(ms, start=1):
            if "mu" in m:
                row["minindex"].append({"t": t, "mu": list(m["mu"]), "core": list(core_shape(ctx, m["mu"]))})
            else:
                row["minindex"].append({"t": t, **{a: (list(b) if isinstance(b, tuple) else b) for a, b in m.items()}})
        out.append(row)
    return out


"""Partitions as Young diagrams (French convention, 1-based cells).

A partition is a plain tuple of weakly decreasing positive integers; the
empty tuple is the empty partition.  Cells are ``(row, col)`` pairs with row 1
at the bottom, so the content of a cell is ``col - row``.
"""
from __future__ import annotations

from functools import cache
from itertools import accumulate
from typing import Iterable, Iterator, NamedTuple

from .errors import CellOutsideShape, OutOfRange

Partition = tuple[int, ...]

EMPTY: Partition = ()


class Cell(NamedTuple):
    row: int
    col: int


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return the canonical tuple (zeros dropped)."""
    out = tuple(int(p) for p in parts if p != 0)
    if any(p < 0 for p in out):
        raise ValueError(f"negative part in {out}")
    if any(out[i] < out[i + 1] for i in range(len(out) - 1)):
        raise ValueError(f"parts not weakly decreasing: {out}")
    return out


def size(lam: Partition) -> int:
    return sum(lam)


def part(lam: Partition, i: int) -> int:
    """``lam_i`` with 1-based ``i``; zero past the end."""
    return lam[i - 1] if 0 < i <= len(lam) else 0


@cache
def conjugate(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def union(lam: Partition, mu: Partition) -> Partition:
    return tuple(sorted(lam + mu, reverse=True))


def oplus(lam: Partition, mu: Partition) -> Partition:
    """Stack ``lam`` on top of ``mu``, shifted right by ``mu_1``."""
    if not mu:
        return lam
    shift = mu[0]
    return tuple(p + shift for p in lam) + mu


def oplus_many(*parts: Partition) -> Partition:
    out = EMPTY
    for p in parts:
        out = oplus(out, p)
    return out


def contains(lam: Partition, mu: Partition) -> bool:
    """True iff ``mu`` is a subdiagram of ``lam``."""
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


def cells(lam: Partition) -> Iterator[Cell]:
    for i, p in enumerate(lam, start=1):
        for j in range(1, p + 1):
            yield Cell(i, j)


def skew_cells(lam: Partition, mu: Partition) -> list[Cell]:
    return [Cell(i, j) for i, p in enumerate(lam, start=1) for j in range(part(mu, i) + 1, p + 1)]


def hook(c: Cell | tuple[int, int], lam: Partition) -> int:
    i, j = c
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise CellOutsideShape(f"cell {tuple(c)} is not in {list(lam)}")
    return lam[i - 1] + part(conjugate(lam), j) - i - j + 1


def removable_corners(lam: Partition) -> list[Cell]:
    return [Cell(i, p) for i, p in enumerate(lam, start=1) if p > part(lam, i + 1)]


def addable_corners(lam: Partition) -> list[Cell]:
    out = [Cell(i, part(lam, i) + 1) for i in range(1, len(lam) + 1)
           if i == 1 or lam[i - 2] > lam[i - 1]]
    out.append(Cell(len(lam) + 1, 1))
    return out


def corners(lam: Partition) -> tuple[set[Cell], set[Cell]]:
    return set(removable_corners(lam)), set(addable_corners(lam))


def add_cell(lam: Partition, c: Cell) -> Partition:
    parts = list(lam)
    if c.row == len(parts) + 1:
        parts.append(0)
    parts[c.row - 1] += 1
    return make_partition(parts)


def remove_cell(lam: Partition, c: Cell) -> Partition:
    parts = list(lam)
    parts[c.row - 1] -= 1
    return make_partition(parts)


def is_horizontal_strip(lam: Partition, mu: Partition) -> bool:
    """``lam/mu`` has at most one cell in each column."""
    if not contains(lam, mu):
        return False
    return all(part(mu, i) >= part(lam, i + 1) for i in range(1, len(lam) + 1))


def is_vertical_strip(lam: Partition, mu: Partition) -> bool:
    """``lam/mu`` has at most one cell in each row."""
    if not contains(lam, mu):
        return False
    return all(p - part(mu, i) <= 1 for i, p in enumerate(lam, start=1))


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    if size(lam) != size(mu):
        return False
    n = max(len(lam), len(mu))
    a = list(accumulate(lam + (0,) * (n - len(lam))))
    b = list(accumulate(mu + (0,) * (n - len(mu))))
    return all(x <= y for x, y in zip(a, b))


def k_rectangle(t: int, k: int) -> Partition:
    if not 1 <= t <= k:
        raise OutOfRange(f"rectangle width {t} outside [1, {k}]")
    return (t,) * (k + 1 - t)


def in_k_rectangle(lam: Partition, k: int) -> bool:
    """``lam`` fits inside some k-rectangle, i.e. ``lam_1 + l(lam) <= k + 1``."""
    return not lam or lam[0] + len(lam) <= k + 1


def residue(c: Cell | tuple[int, int], k: int) -> int:
    return (c[1] - c[0]) % (k + 1)


def partitions_of(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in lex-descending order."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n

    def gen(rest, cap, slots):
        if rest == 0:
            yield EMPTY
            return
        if slots == 0:
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first, slots - 1):
                yield (first,) + tail

    yield from gen(n, max_part, max_len)


def bounded_partitions(k: int, max_size: int, min_size: int = 0) -> list[Partition]:
    """k-bounded partitions with ``min_size <= |lam| <= max_size``, graded-lex ascending."""
    out = []
    for n in range(min_size, max_size + 1):
        out.extend(sorted(partitions_of(n, k)))
    return out


def subpartitions(lam: Partition) -> Iterator[Partition]:
    """Every ``mu`` contained in ``lam`` (including the empty one)."""
    def gen(i, cap):
        if i == len(lam):
            yield EMPTY
            return
        for p in range(min(cap, lam[i]), -1, -1):
            if p == 0:
                yield EMPTY
            else:
                for tail in gen(i + 1, p):
                    yield (p,) + tail

    yield from gen(0, lam[0] if lam else 0)


def horizontal_strips_over(lam: Partition, n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Every ``mu`` with ``mu/lam`` a horizontal strip of size ``n`` and ``mu_1 <= max_part``."""
    rows = len(lam) + 1
    caps = [max_part if max_part is not None else lam[0] + n if lam else n]
    caps += [lam[i - 1] for i in range(1, rows)]

    def gen(i, rest):
        if i == rows:
            if rest == 0:
                yield EMPTY
            return
        low = part(lam, i + 1)
        for extra in range(0, min(rest, caps[i] - low) + 1):
            for tail in gen(i + 1, rest - extra):
                yield (low + extra,) + tail

    for mu in gen(0, n):
        yield make_partition(mu)


def graded_key(lam: Partition) -> tuple[int, Partition]:
    """Sort key for the package-wide order: by size, then lexicographically."""
    return size(lam), lam


def parse_partition(text: str) -> Partition:
    """Parse ``"3,2,2"`` (or ``""``/``"[]"``/``"0"`` for the empty partition)."""
    text = text.strip().strip("[]()")
    if text in ("", "0", "e", "empty"):
        return EMPTY
    return make_partition(sorted((int(x) for x in text.split(",") if x.strip()), reverse=True))

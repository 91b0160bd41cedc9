"""(k+1)-cores and the bounded-partition / core / affine-Grassmannian dictionary."""
from __future__ import annotations

import threading
from dataclasses import dataclass

from .errors import LevelMismatch, NotACore, NotKBounded
from .partitions import (
    EMPTY,
    Partition,
    addable_corners,
    conjugate,
    make_partition,
    removable_corners,
)


class LevelContext:
    """The fixed level ``k`` plus every memo table keyed by partitions.

    Cached values are canonical (tuples, immutable SymFuncs), so concurrent
    readers may race to fill the same slot and still observe identical data.
    """

    _shared: dict[int, "LevelContext"] = {}
    _shared_lock = threading.Lock()

    def __init__(self, k: int):
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        self.k = k
        self.caches: dict[str, dict] = {}
        self._lock = threading.Lock()

    @classmethod
    def for_level(cls, k: int) -> "LevelContext":
        """Process-wide shared context for ``k``."""
        with cls._shared_lock:
            if k not in cls._shared:
                cls._shared[k] = cls(k)
            return cls._shared[k]

    def memo(self, name: str) -> dict:
        table = self.caches.get(name)
        if table is None:
            with self._lock:
                table = self.caches.setdefault(name, {})
        return table

    def clear(self):
        with self._lock:
            self.caches.clear()

    def __repr__(self):
        return f"LevelContext(k={self.k})"


@dataclass(frozen=True)
class Core:
    shape: Partition
    level: int

    def __post_init__(self):
        if not is_core(self.shape, self.level):
            raise NotACore(f"{list(self.shape)} is not a {self.level}-core")

    @property
    def length(self) -> int:
        return core_length(self)

    def to_json(self) -> dict:
        return {"level": self.level, "shape": list(self.shape)}


def _hooks_of_row(shape: Partition, i: int) -> list[int]:
    conj = conjugate(shape)
    return [shape[i - 1] + conj[j - 1] - i - j + 1 for j in range(1, shape[i - 1] + 1)]


def is_core(shape: Partition, level: int) -> bool:
    return all(level not in _hooks_of_row(shape, i) for i in range(1, len(shape) + 1))


def check_bounded(ctx: LevelContext, lam: Partition):
    if lam and lam[0] > ctx.k:
        raise NotKBounded(f"{list(lam)} has a part larger than k={ctx.k}")


def core_shape(ctx: LevelContext, lam: Partition) -> Partition:
    """Shape of core(lam), by the row recursion c_j = c_{j+k+1-lam_j} + lam_j."""
    table = ctx.memo("core")
    hit = table.get(lam)
    if hit is not None:
        return hit
    check_bounded(ctx, lam)
    k = ctx.k
    n = len(lam)
    rows = [0] * (n + k + 2)
    for j in range(n, 0, -1):
        rows[j] = rows[j + k + 1 - lam[j - 1]] + lam[j - 1]
    out = tuple(rows[1 : n + 1])
    table[lam] = out
    return out


def core_by_sliding(k: int, lam: Partition) -> Partition:
    """Slow reference for core(lam): slide rows right, shortest row first."""
    if lam and lam[0] > k:
        raise NotKBounded(f"{list(lam)} has a part larger than k={k}")
    n = len(lam)
    outer = [0] * (n + 2)
    for i in range(n, 0, -1):
        length = lam[i - 1]
        shift = 0
        while True:
            ends = shift + length
            ok = True
            for j in range(shift + 1, ends + 1):
                leg = sum(1 for r in range(i + 1, n + 1) if outer[r] >= j)
                if ends - j + leg + 1 > k:
                    ok = False
                    break
            if ok:
                break
            shift += 1
        outer[i] = shift + length
    return tuple(outer[1 : n + 1])


def to_core(ctx: LevelContext, lam: Partition) -> Core:
    return Core(core_shape(ctx, lam), ctx.k + 1)


def bounded_of_shape(ctx: LevelContext, shape: Partition) -> Partition:
    table = ctx.memo("bdd")
    hit = table.get(shape)
    if hit is not None:
        return hit
    k = ctx.k
    if not is_core(shape, k + 1):
        raise NotACore(f"{list(shape)} is not a {k + 1}-core")
    out = make_partition(sum(1 for h in _hooks_of_row(shape, i) if h <= k) for i in range(1, len(shape) + 1))
    table[shape] = out
    return out


def to_bounded(ctx: LevelContext, kappa: Core | Partition) -> Partition:
    if isinstance(kappa, Core):
        if kappa.level != ctx.k + 1:
            raise LevelMismatch(f"core of level {kappa.level} used with k={ctx.k}")
        kappa = kappa.shape
    return bounded_of_shape(ctx, kappa)


def core_length(kappa: Core) -> int:
    """Number of cells with hook length below the level."""
    shape, level = kappa.shape, kappa.level
    return sum(1 for i in range(1, len(shape) + 1) for h in _hooks_of_row(shape, i) if h < level)


def apply_s_shape(k: int, i: int, shape: Partition) -> Partition:
    i %= k + 1
    add = [c for c in addable_corners(shape) if (c.col - c.row) % (k + 1) == i]
    rem = [c for c in removable_corners(shape) if (c.col - c.row) % (k + 1) == i]
    assert not (add and rem), f"core {shape} has addable and removable {i}-corners"
    parts = list(shape) + [0]
    for c in add:
        parts[c.row - 1] += 1
    for c in rem:
        parts[c.row - 1] -= 1
    return make_partition(parts)


def apply_s(ctx: LevelContext, i: int, kappa: Core) -> Core:
    if kappa.level != ctx.k + 1:
        raise LevelMismatch(f"core of level {kappa.level} used with k={ctx.k}")
    return Core(apply_s_shape(ctx.k, i, kappa.shape), kappa.level)


def word(ctx: LevelContext, lam: Partition) -> tuple[int, ...]:
    """Residues of lam's cells, top row first, each row read right to left."""
    check_bounded(ctx, lam)
    k = ctx.k
    return tuple((j - i) % (k + 1) for i in range(len(lam), 0, -1) for j in range(lam[i - 1], 0, -1))


def act_word(k: int, residues, shape: Partition = EMPTY) -> Partition:
    """Apply ``s_{i_1} ... s_{i_l}`` to ``shape`` (rightmost generator first)."""
    for i in reversed(tuple(residues)):
        shape = apply_s_shape(k, i, shape)
    return shape


def k_conjugate(ctx: LevelContext, lam: Partition) -> Partition:
    table = ctx.memo("kconj")
    hit = table.get(lam)
    if hit is not None:
        return hit
    out = bounded_of_shape(ctx, conjugate(core_shape(ctx, lam)))
    table[lam] = out
    return out


def residues_of(k: int, cs) -> set[int]:
    return {(c[1] - c[0]) % (k + 1) for c in cs}


def shape_length(k: int, shape: Partition) -> int:
    """core_length for a raw shape (no validation)."""
    return sum(1 for i in range(1, len(shape) + 1) for h in _hooks_of_row(shape, i) if h <= k)


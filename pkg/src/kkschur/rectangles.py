"""Multisets of k-rectangles ``P = R_{t_1}^{a_1} u ... u R_{t_m}^{a_m}``."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, product

from .errors import OutOfRange
from .partitions import EMPTY, Partition, k_rectangle, union


@dataclass(frozen=True)
class RectangleMultiset:
    """Entries ``(t, a)`` with strictly increasing widths ``t`` and ``a >= 1``."""

    k: int
    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        widths = [t for t, _ in self.entries]
        if widths != sorted(set(widths)):
            raise ValueError(f"rectangle widths must be strictly increasing: {widths}")
        for t, a in self.entries:
            if not 1 <= t <= self.k:
                raise OutOfRange(f"rectangle width {t} outside [1, {self.k}]")
            if a < 1:
                raise ValueError(f"multiplicity must be positive, got {a}")

    @classmethod
    def of(cls, k: int, spec) -> "RectangleMultiset":
        """Build from ``{t: a}``, an iterable of ``(t, a)`` pairs, or a list of widths."""
        if isinstance(spec, dict):
            pairs = spec.items()
        else:
            spec = list(spec)
            if spec and not isinstance(spec[0], tuple):
                pairs = Counter(spec).items()
            else:
                pairs = spec
        return cls(k, tuple(sorted((int(t), int(a)) for t, a in pairs)))

    @classmethod
    def parse(cls, k: int, text: str) -> "RectangleMultiset":
        """Parse the command-line form ``"2^1,3^2"`` (``"3"`` means ``3^1``)."""
        pairs: Counter = Counter()
        for token in filter(None, (x.strip() for x in text.split(","))):
            t, _, a = token.partition("^")
            pairs[int(t)] += int(a) if a else 1
        return cls.of(k, dict(pairs))

    @property
    def widths(self) -> tuple[int, ...]:
        return tuple(t for t, _ in self.entries)

    @property
    def total(self) -> int:
        return sum(a for _, a in self.entries)

    def alpha(self, u: int) -> int:
        """Number of distinct widths ``t_i >= u`` (multiplicities ignored)."""
        return sum(1 for t in self.widths if t >= u)

    def max_width(self) -> int:
        return max(self.widths, default=0)

    def partition(self) -> Partition:
        out = EMPTY
        for t, a in self.entries:
            for _ in range(a):
                out = union(out, k_rectangle(t, self.k))
        return out

    def without_multiplicity(self) -> "RectangleMultiset":
        return RectangleMultiset(self.k, tuple((t, 1) for t in self.widths))

    def to_json(self) -> list[list[int]]:
        return [[t, a] for t, a in self.entries]

    def __str__(self):
        return ",".join(f"{t}^{a}" for t, a in self.entries) or "-"


def is_rectangle_union(lam: Partition, k: int) -> bool:
    """True iff every part ``t`` occurs a multiple of ``k + 1 - t`` times."""
    counts = Counter(lam)
    return all(t <= k and n % (k + 1 - t) == 0 for t, n in counts.items())


def rectangle_decomposition(lam: Partition, k: int) -> RectangleMultiset | None:
    if not lam or not is_rectangle_union(lam, k):
        return None
    counts = Counter(lam)
    return RectangleMultiset(k, tuple(sorted((t, n // (k + 1 - t)) for t, n in counts.items())))


def rectangle_multisets(k: int, max_total: int, max_mult: int | None = None, distinct_only: bool = False):
    """Every nonempty multiset with ``sum a_i <= max_total`` (and ``a_i <= max_mult``)."""
    cap = max_total if max_mult is None else min(max_total, max_mult)
    if distinct_only:
        cap = 1
    out = []
    for m in range(1, min(k, max_total) + 1):
        for widths in combinations(range(1, k + 1), m):
            for mults in product(range(1, cap + 1), repeat=m):
                if sum(mults) <= max_total:
                    out.append(RectangleMultiset(k, tuple(zip(widths, mults))))
    return out

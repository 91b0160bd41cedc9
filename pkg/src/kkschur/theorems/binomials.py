"""Generalized binomial coefficients and the two binomial identities."""
from __future__ import annotations

import random
import time
from math import factorial

from ..errors import BadBetaSequence
from .verdict import Verdict


def binom_gen(a: int, b: int) -> int:
    """``a(a-1)...(a-b+1)/b!`` for any integer ``a``; zero when ``b < 0``."""
    if b < 0:
        return 0
    num = 1
    for i in range(b):
        num *= a - i
    return num // factorial(b)


def _check_beta(beta):
    for x, y in zip(beta, beta[1:]):
        if not x - 1 <= y <= x:
            raise BadBetaSequence(f"beta={list(beta)} violates beta_i >= beta_(i+1) >= beta_i - 1")


def binom_matrices(l: int, beta) -> tuple[list[list[int]], list[list[int]]]:
    """``C = ((-1)^(r-s) C(beta_(s+1), r-s))`` and ``D = (C(beta_r + r-s-1, r-s))``, 0 <= r,s <= l.

    ``beta`` is 1-indexed in the formulas; ``beta[0]`` holds beta_1.  D never
    reads beta_0 because its ``r = 0`` row only has the ``s = 0`` entry.
    """
    if len(beta) != l + 1:
        raise BadBetaSequence(f"need {l + 1} entries for l={l}, got {len(beta)}")
    _check_beta(beta)
    b = [None] + list(beta)
    C = [[(-1) ** (r - s) * binom_gen(b[s + 1], r - s) for s in range(l + 1)] for r in range(l + 1)]
    D = [[binom_gen((b[r] if r else 0) + r - s - 1, r - s) if r >= s else 0 for s in range(l + 1)]
         for r in range(l + 1)]
    return C, D


def _matmul(A, B):
    n = len(A)
    return [[sum(A[i][j] * B[j][m] for j in range(n)) for m in range(n)] for i in range(n)]


def check_binom_inverse(l: int, beta) -> Verdict:
    start = time.perf_counter()
    C, D = binom_matrices(l, beta)
    ident = [[int(i == j) for j in range(l + 1)] for i in range(l + 1)]
    bad = []
    for name, got in (("CD", _matmul(C, D)), ("DC", _matmul(D, C))):
        if got != ident:
            bad.append(({"l": l, "beta": list(beta), "product": name}, ident, got))
    return Verdict("BINOM_INVERSE", None, 1, bad, time.perf_counter() - start)


def random_beta(rng: random.Random, l: int, low: int = -3, high: int = 6) -> list[int]:
    beta = [rng.randint(low, high)]
    for _ in range(l):
        beta.append(beta[-1] - rng.randint(0, 1))
    return beta


def binom_identity_sides(a: int, b: int, c: int) -> tuple[int, int]:
    lhs = sum((-1) ** i * binom_gen(a, i) * binom_gen(b - 1 + c - i, c - i) for i in range(c + 1))
    return lhs, (-1) ** c * binom_gen(a - b, c)


def check_binom_identity(bound: int = 10, max_c: int = 10) -> Verdict:
    start = time.perf_counter()
    bad, n = [], 0
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            for c in range(max_c + 1):
                n += 1
                lhs, rhs = binom_identity_sides(a, b, c)
                if lhs != rhs:
                    bad.append(({"a": a, "b": b, "c": c}, rhs, lhs))
    return Verdict("BINOM_IDENTITY", None, n, bad, time.perf_counter() - start)

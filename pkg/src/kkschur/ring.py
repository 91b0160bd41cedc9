"""Exact arithmetic in Z[h_1, ..., h_k] with the h, k-Schur and K-k-Schur bases.

Memo tables live in the LevelContext and hold tuples of ``(index, coeff)``
pairs, so cached values are never mutated after they are published.
"""
from __future__ import annotations

import enum
import json
from collections import defaultdict
from dataclasses import dataclass
from math import comb

from .cores import LevelContext, check_bounded, core_shape, to_bounded
from .errors import LevelMismatch, NotDivisible, NotKBounded, RankOutOfRange
from .partitions import EMPTY, Partition, graded_key, make_partition, size, union
from .rectangles import RectangleMultiset
from .strips import affine_set_valued_strips, r_stat_shapes, weak_strip_bounded_over


class Basis(enum.Enum):
    H = "H"
    KSCHUR = "KSCHUR"
    KKSCHUR = "KKSCHUR"


Terms = dict  # Partition -> int


def _clean(d: dict) -> dict:
    return {lam: c for lam, c in d.items() if c}


def _freeze(d: dict) -> tuple:
    return tuple(sorted(((lam, c) for lam, c in d.items() if c), key=lambda t: graded_key(t[0]), reverse=True))


def _axpy(acc: dict, scale: int, items):
    for lam, c in items:
        acc[lam] = acc.get(lam, 0) + scale * c


@dataclass(frozen=True)
class SymFunc:
    """Immutable finitely supported map from bounded partitions to integers."""

    k: int
    basis: Basis
    items: tuple  # ((Partition, int), ...) graded-lex descending, no zeros

    @classmethod
    def from_dict(cls, k: int, basis: Basis, terms: dict) -> "SymFunc":
        for lam in terms:
            if lam and lam[0] > k:
                raise NotKBounded(f"{list(lam)} has a part larger than k={k}")
        return cls(k, basis, _freeze(terms))

    @classmethod
    def basis_element(cls, k: int, basis: Basis, lam: Partition = EMPTY, coeff: int = 1) -> "SymFunc":
        return cls.from_dict(k, basis, {tuple(lam): coeff})

    @classmethod
    def zero(cls, k: int, basis: Basis) -> "SymFunc":
        return cls(k, basis, ())

    @property
    def terms(self) -> dict:
        return dict(self.items)

    def coeff(self, lam: Partition) -> int:
        return self.terms.get(tuple(lam), 0)

    def degree(self) -> int:
        return max((size(lam) for lam, _ in self.items), default=-1)

    def homogeneous_part(self, d: int) -> "SymFunc":
        return SymFunc(self.k, self.basis, tuple(t for t in self.items if size(t[0]) == d))

    def is_zero(self) -> bool:
        return not self.items

    def _compatible(self, other: "SymFunc"):
        if self.k != other.k:
            raise LevelMismatch(f"k={self.k} vs k={other.k}")
        if self.basis != other.basis:
            raise ValueError(f"basis {self.basis.value} vs {other.basis.value}")

    def __add__(self, other):
        self._compatible(other)
        acc = self.terms
        _axpy(acc, 1, other.items)
        return SymFunc(self.k, self.basis, _freeze(acc))

    def __sub__(self, other):
        self._compatible(other)
        acc = self.terms
        _axpy(acc, -1, other.items)
        return SymFunc(self.k, self.basis, _freeze(acc))

    def __neg__(self):
        return SymFunc(self.k, self.basis, tuple((lam, -c) for lam, c in self.items))

    def scale(self, n: int) -> "SymFunc":
        return SymFunc(self.k, self.basis, _freeze({lam: n * c for lam, c in self.items}))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return multiply(LevelContext.for_level(self.k), self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def to_json(self) -> dict:
        return {"k": self.k, "basis": self.basis.value,
                "terms": [{"index": list(lam), "coeff": str(c)} for lam, c in self.items]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, data, k: int | None = None, basis: Basis | None = None) -> "SymFunc":
        if isinstance(data, str):
            data = json.loads(data)
        k = data.get("k", k)
        if k is None:
            raise ValueError("SymFunc JSON needs a level k")
        b = Basis(data["basis"]) if "basis" in data else (basis or Basis.KKSCHUR)
        acc: dict = {}
        for t in data["terms"]:
            lam = make_partition(t["index"])
            acc[lam] = acc.get(lam, 0) + int(t["coeff"])
        return cls.from_dict(int(k), b, acc)

    def pretty(self, symbol: str | None = None) -> str:
        symbol = symbol or {"H": "h", "KSCHUR": "s", "KKSCHUR": "g"}[self.basis.value]
        if not self.items:
            return "0"
        out = []
        for lam, c in self.items:
            idx = ",".join(map(str, lam)) or "0"
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            out.append(f"{sign} {mag}{symbol}[{idx}]")
        text = " ".join(out)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


# Pieri rules ---------------------------------------------------------------

def _check_rank(ctx: LevelContext, r: int):
    if not 0 <= r <= ctx.k:
        raise RankOutOfRange(f"r={r} outside [0, {ctx.k}]")


def _pieri_kk_items(ctx: LevelContext, lam: Partition, r: int) -> tuple:
    table = ctx.memo("pieri_kk")
    key = (lam, r)
    hit = table.get(key)
    if hit is not None:
        return hit
    beta = core_shape(ctx, lam)
    acc: dict = {}
    for s in range(r + 1):
        for mu in weak_strip_bounded_over(ctx, lam, s):
            c = comb(r_stat_shapes(ctx.k, core_shape(ctx, mu), beta), r - s)
            if c:
                acc[mu] = acc.get(mu, 0) + (-1) ** (r - s) * c
    out = _freeze(acc)
    table[key] = out
    return out


def pieri_kk(ctx: LevelContext, lam: Partition, r: int) -> SymFunc:
    """``h_r g_lam`` in the K-k-Schur basis, binomial form."""
    _check_rank(ctx, r)
    check_bounded(ctx, lam)
    return SymFunc(ctx.k, Basis.KKSCHUR, _pieri_kk_items(ctx, tuple(lam), r))


def pieri_kk_by_strips(ctx: LevelContext, lam: Partition, r: int) -> SymFunc:
    """Oracle: signed sum over every affine set-valued strip."""
    _check_rank(ctx, r)
    acc: dict = {}
    for st in affine_set_valued_strips(ctx, lam, r):
        mu = to_bounded(ctx, st.gamma)
        acc[mu] = acc.get(mu, 0) + (-1) ** (size(lam) + r - size(mu))
    return SymFunc.from_dict(ctx.k, Basis.KKSCHUR, acc)


def _pieri_k_items(ctx: LevelContext, lam: Partition, r: int) -> tuple:
    return tuple((mu, 1) for mu in weak_strip_bounded_over(ctx, lam, r))


def pieri_k(ctx: LevelContext, lam: Partition, r: int) -> SymFunc:
    """``h_r s_lam`` in the k-Schur basis."""
    _check_rank(ctx, r)
    check_bounded(ctx, lam)
    return SymFunc(ctx.k, Basis.KSCHUR, _pieri_k_items(ctx, tuple(lam), r))


def _pieri_fn(basis: Basis):
    return _pieri_kk_items if basis is Basis.KKSCHUR else _pieri_k_items


def _apply_h(ctx: LevelContext, basis: Basis, items, r: int) -> dict:
    pieri = _pieri_fn(basis)
    acc: dict = {}
    for lam, c in items:
        _axpy(acc, c, pieri(ctx, lam, r))
    return acc


def _times_h(ctx: LevelContext, basis: Basis, lam: Partition, nu: Partition) -> tuple:
    """``b_lam * h_nu`` in ``basis``, memoized on prefixes of ``nu``."""
    table = ctx.memo(f"times_h/{basis.value}")
    key = (lam, nu)
    hit = table.get(key)
    if hit is not None:
        return hit
    if not nu:
        out = ((lam, 1),)
    else:
        out = _freeze(_apply_h(ctx, basis, _times_h(ctx, basis, lam, nu[:-1]), nu[-1]))
    table[key] = out
    return out


# Basis change --------------------------------------------------------------

def expand_h(ctx: LevelContext, lam: Partition, target: Basis = Basis.KKSCHUR) -> SymFunc:
    """``h_lam`` in the k-Schur or K-k-Schur basis."""
    lam = tuple(lam)
    check_bounded(ctx, lam)
    if target is Basis.H:
        return SymFunc.basis_element(ctx.k, Basis.H, lam)
    return SymFunc(ctx.k, target, _times_h(ctx, target, EMPTY, lam))


def _to_h_items(ctx: LevelContext, basis: Basis, lam: Partition) -> tuple:
    """The basis element ``b_lam`` written in the h-basis, by triangular inversion."""
    table = ctx.memo(f"to_h/{basis.value}")
    hit = table.get(lam)
    if hit is not None:
        return hit
    acc = {lam: 1}
    for mu, c in _times_h(ctx, basis, EMPTY, lam):
        if mu != lam:
            _axpy(acc, -c, _to_h_items(ctx, basis, mu))
    out = _freeze(acc)
    table[lam] = out
    return out


def to_h_basis(ctx: LevelContext, f: SymFunc) -> SymFunc:
    _check_ctx(ctx, f)
    if f.basis is Basis.H:
        return f
    acc: dict = {}
    for lam, c in f.items:
        _axpy(acc, c, _to_h_items(ctx, f.basis, lam))
    return SymFunc(ctx.k, Basis.H, _freeze(acc))


def from_h_basis(ctx: LevelContext, f: SymFunc, target: Basis = Basis.KKSCHUR) -> SymFunc:
    _check_ctx(ctx, f)
    if target is Basis.H:
        return to_h_basis(ctx, f)
    acc: dict = {}
    for lam, c in to_h_basis(ctx, f).items:
        _axpy(acc, c, _times_h(ctx, target, EMPTY, lam))
    return SymFunc(ctx.k, target, _freeze(acc))


def convert(ctx: LevelContext, f: SymFunc, target: Basis) -> SymFunc:
    if f.basis is target:
        return f
    return from_h_basis(ctx, to_h_basis(ctx, f), target)


def _check_ctx(ctx: LevelContext, *fs: SymFunc):
    for f in fs:
        if f.k != ctx.k:
            raise LevelMismatch(f"SymFunc of level {f.k} used with k={ctx.k}")


# Multiplication and division -----------------------------------------------

def _product_items(ctx: LevelContext, basis: Basis, lam: Partition, mu: Partition) -> tuple:
    """``b_lam * b_mu``; the smaller index is expanded into h's."""
    if graded_key(lam) < graded_key(mu):
        lam, mu = mu, lam
    table = ctx.memo(f"product/{basis.value}")
    key = (lam, mu)
    hit = table.get(key)
    if hit is not None:
        return hit
    acc: dict = {}
    for nu, c in _to_h_items(ctx, basis, mu):
        _axpy(acc, c, _times_h(ctx, basis, lam, nu))
    out = _freeze(acc)
    table[key] = out
    return out


def _multiply_dicts(ctx: LevelContext, basis: Basis, f_items, g_items) -> dict:
    acc: dict = {}
    for lam, a in f_items:
        for mu, b in g_items:
            _axpy(acc, a * b, _product_items(ctx, basis, lam, mu))
    return acc


def multiply(ctx: LevelContext, f: SymFunc, g: SymFunc) -> SymFunc:
    """Exact product, returned in the K-k-Schur basis."""
    _check_ctx(ctx, f, g)
    f = convert(ctx, f, Basis.KKSCHUR)
    g = convert(ctx, g, Basis.KKSCHUR)
    return SymFunc(ctx.k, Basis.KKSCHUR, _freeze(_multiply_dicts(ctx, Basis.KKSCHUR, f.items, g.items)))


def _multiset_difference(rho: Partition, nu: Partition) -> Partition | None:
    rest = list(rho)
    for p in nu:
        try:
            rest.remove(p)
        except ValueError:
            return None
    return tuple(rest)


def divide_exact(ctx: LevelContext, f: SymFunc, d: SymFunc) -> SymFunc:
    """The ``q`` with ``f = d q``, raising NotDivisible when none exists.

    At the residual's top degree, the top homogeneous parts multiply as
    k-Schur functions, and ``s_nu s_mu`` is ``s_{nu u mu}`` plus
    dominance-larger terms.  Since union is strictly monotone for the
    lexicographic order, the lex-smallest top term of the residual equals
    ``nu0 u mu`` where ``nu0`` is the lex-smallest top index of ``d``; this
    fixes one quotient term at a time.
    """
    _check_ctx(ctx, f, d)
    basis = Basis.KKSCHUR
    f = convert(ctx, f, basis)
    d = convert(ctx, d, basis)
    if d.is_zero():
        raise ZeroDivisionError("division by the zero function")
    deg_d = d.degree()
    top = sorted((t for t in d.items if size(t[0]) == deg_d), key=lambda t: t[0])
    nu0, c0 = top[0]
    residual = f.terms
    quotient: dict = {}
    while residual:
        deg = max(size(lam) for lam in residual)
        if deg < deg_d:
            break
        rho = min(lam for lam in residual if size(lam) == deg)
        c = residual[rho]
        mu = _multiset_difference(rho, nu0)
        if mu is None or c % c0:
            break
        q = c // c0
        quotient[mu] = quotient.get(mu, 0) + q
        for lam, a in d.items:
            _axpy(residual, -q * a, _product_items(ctx, basis, lam, mu))
        residual = _clean(residual)
    if residual:
        worst = SymFunc(ctx.k, basis, _freeze(residual))
        raise NotDivisible(f"residual {worst.pretty()} is not a multiple of the divisor", worst)
    out = SymFunc(ctx.k, basis, _freeze(quotient))
    if _freeze(_multiply_dicts(ctx, basis, d.items, out.items)) != f.items:
        raise NotDivisible("quotient failed the re-multiplication check", None)
    return out


def kk_schur_of_union(ctx: LevelContext, P: RectangleMultiset, lam: Partition) -> Partition:
    if P.k != ctx.k:
        raise LevelMismatch(f"rectangles of level {P.k} used with k={ctx.k}")
    check_bounded(ctx, tuple(lam))
    return union(P.partition(), tuple(lam))


def g(ctx: LevelContext, lam: Partition = EMPTY, coeff: int = 1) -> SymFunc:
    check_bounded(ctx, tuple(lam))
    return SymFunc.basis_element(ctx.k, Basis.KKSCHUR, lam, coeff)


def g_sum(ctx: LevelContext, pairs) -> SymFunc:
    """``sum c * g_lam`` from an iterable of ``(lam, c)``."""
    acc: dict = defaultdict(int)
    for lam, c in pairs:
        acc[tuple(lam)] += c
    return SymFunc.from_dict(ctx.k, Basis.KKSCHUR, dict(acc))


# Polynomial oracle ---------------------------------------------------------

def _h_poly_mul(f: dict, g_: dict) -> dict:
    acc: dict = {}
    for a, x in f.items():
        for b, y in g_.items():
            m = union(a, b)
            acc[m] = acc.get(m, 0) + x * y
    return _clean(acc)


def _monomial_key(k: int, lam: Partition):
    """Graded lex with ``h_k > ... > h_1``: weighted degree, then exponents of h_k, h_{k-1}, ..."""
    return size(lam), tuple(lam.count(i) for i in range(k, 0, -1))


def oracle_multiply(ctx: LevelContext, f: SymFunc, g_: SymFunc) -> SymFunc:
    """Product through h-monomials: convert, multiply polynomials, convert back."""
    prod = _h_poly_mul(to_h_basis(ctx, f).terms, to_h_basis(ctx, g_).terms)
    return from_h_basis(ctx, SymFunc.from_dict(ctx.k, Basis.H, prod), Basis.KKSCHUR)


def oracle_divide(ctx: LevelContext, f: SymFunc, d: SymFunc) -> SymFunc:
    """Exact division of h-polynomials by leading monomials."""
    k = ctx.k
    fh = dict(to_h_basis(ctx, f).terms)
    dh = to_h_basis(ctx, d).terms
    if not dh:
        raise ZeroDivisionError("division by the zero function")
    lead = max(dh, key=lambda m: _monomial_key(k, m))
    lc = dh[lead]
    q: dict = {}
    while fh:
        m = max(fh, key=lambda x: _monomial_key(k, x))
        rest = _multiset_difference(m, lead)
        if rest is None or fh[m] % lc:
            raise NotDivisible("h-polynomial division leaves a remainder",
                               SymFunc.from_dict(k, Basis.H, fh))
        c = fh[m] // lc
        q[rest] = q.get(rest, 0) + c
        for a, x in dh.items():
            u = union(a, rest)
            fh[u] = fh.get(u, 0) - c * x
        fh = _clean(fh)
    return from_h_basis(ctx, SymFunc.from_dict(k, Basis.H, q), Basis.KKSCHUR)

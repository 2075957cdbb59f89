"""Ground-truth graded dimensions of the free n-Lie algebra.

The weight-w slice is realized as the span of canonical nonzero bracket
monomials (skew-symmetry is folded into canonicalization) modulo the span
of all generalized-Jacobi instances landing in the slice.  An instance is
a context monomial with one hole, filled with the element

    [[m_1,...,m_n], y_2,...,y_n] - sum_i [m_1,...,[m_i, y_2,...,y_n],...,m_n]

for distinct canonical monomials m_1 > ... > m_n and y_2 > ... > y_n
(instances with a repeated argument vanish modulo skew-symmetry, so the
distinct, ordered choices span everything).  Instances are generated at
every hole position, not only the root.

The graded dimension is |monomials| - rank(instances), with rank computed
by exact integer fraction-free elimination.  No floating point, no
modular shortcuts.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Optional

from .terms import Term, canonicalize, is_leaf, term_key, weight

DEFAULT_CEILING = 200_000

CACHE_ENV_VAR = "NLIE_ORACLE_CACHE"

_HOLE = "__hole__"


class InstanceCeilingExceeded(RuntimeError):
    """The monomial slice is larger than the configured ceiling."""


@dataclass
class MonomialBasis:
    n: int
    d: int
    w: int
    monomials: list  # ascending in the term order
    index: dict  # Term -> position


@dataclass
class RelationMatrix:
    basis: MonomialBasis
    rows: list  # sparse integer rows: dict column -> coefficient
    provenance: list  # (lhs term or None, hole path placeholder) per row


def _weight_multisets(total: int, parts: int, cap: int):
    if parts == 1:
        if 1 <= total <= cap:
            yield (total,)
        return
    for first in range(min(cap, total - (parts - 1)), 0, -1):
        for rest in _weight_multisets(total - first, parts - 1, first):
            yield (first,) + rest


def _distinct_descending(ws: tuple, pools: dict, n: int):
    """Strictly descending tuples of distinct terms with the given
    non-increasing weight profile, drawn from pools[w] (ascending)."""
    runs = [(w, len(list(g))) for w, g in itertools.groupby(ws)]
    per_run = []
    for w, count in runs:
        pool = pools[w]
        if len(pool) < count:
            return
        per_run.append(
            [tuple(reversed(c)) for c in itertools.combinations(pool, count)]
        )
    for pick in itertools.product(*per_run):
        yield tuple(itertools.chain.from_iterable(pick))


@lru_cache(maxsize=None)
def _monomials(n: int, d: int, w: int) -> tuple:
    """All canonical nonzero monomials of weight w on d letters, ascending."""
    if w == 1:
        return tuple(range(1, d + 1))
    out = []
    for ws in _weight_multisets(w + n - 2, n, w - 1):
        pools = {wc: _monomials(n, d, wc) for wc in set(ws)}
        out.extend(_distinct_descending(ws, pools, n))
    out.sort(key=lambda t: term_key(t, n))
    return tuple(out)


def graded_monomials(
    n: int, d: int, w: int, ceiling: int = DEFAULT_CEILING
) -> MonomialBasis:
    if n < 2 or d < 1 or w < 1:
        raise ValueError(f"bad instance (n={n}, d={d}, w={w})")
    ms = _monomials(n, d, w)
    if len(ms) > ceiling:
        raise InstanceCeilingExceeded(
            f"{len(ms)} monomials at (n={n}, d={d}, w={w}) exceeds ceiling {ceiling}"
        )
    return MonomialBasis(n, d, w, list(ms), {t: i for i, t in enumerate(ms)})


@lru_cache(maxsize=None)
def _contexts(n: int, d: int, w: int, v: int) -> tuple:
    """Monomial trees of weight w with one hole standing for a weight-v
    subterm.  The hole is kept in the first slot of its bracket; sibling
    order is irrelevant up to a global sign."""
    out = []
    if w == v:
        out.append(_HOLE)
    if w > v:
        for sub_w in range(v, w):
            sib_total = w + n - 2 - sub_w
            if sib_total < n - 1:
                continue
            for sib_ws in _weight_multisets(sib_total, n - 1, sib_total):
                pools = {wc: _monomials(n, d, wc) for wc in set(sib_ws)}
                for sibs in _distinct_descending(sib_ws, pools, n):
                    for sub in _contexts(n, d, sub_w, v):
                        out.append((sub,) + sibs)
    return tuple(out)


def _plug(ctx, filling: Term) -> Term:
    if ctx == _HOLE:
        return filling
    if is_leaf(ctx):
        return ctx
    return tuple(_plug(c, filling) for c in ctx)


def _jacobi_element(m_tuple: tuple, y_tuple: tuple) -> list[tuple[int, Term]]:
    """(sign, term) pairs of the raw generalized-Jacobi element."""
    n = len(m_tuple)
    lhs = (tuple(m_tuple),) + y_tuple
    out = [(1, lhs)]
    for i in range(n):
        inner = (m_tuple[i],) + y_tuple
        out.append((-1, m_tuple[:i] + (inner,) + m_tuple[i + 1 :]))
    return out


def _instance_rows(n: int, d: int, w: int, basis: MonomialBasis):
    rows = []
    provenance = []
    for v in range(2, w + 1):
        contexts = _contexts(n, d, w, v)
        if not contexts:
            continue
        # all (M, Y) with weight([[M], Y]) == v
        for wb in range(2, v):
            m_total = wb + n - 2
            y_total = v - wb + n - 2
            m_choices = []
            for ws in _weight_multisets(m_total, n, m_total):
                pools = {wc: _monomials(n, d, wc) for wc in set(ws)}
                m_choices.extend(_distinct_descending(ws, pools, n))
            y_choices = []
            for ws in _weight_multisets(y_total, n - 1, y_total):
                pools = {wc: _monomials(n, d, wc) for wc in set(ws)}
                y_choices.extend(_distinct_descending(ws, pools, n))
            if not m_choices or not y_choices:
                continue
            for mt in m_choices:
                for yt in y_choices:
                    element = _jacobi_element(mt, yt)
                    for ctx in contexts:
                        row: dict[int, int] = {}
                        for sgn, raw in element:
                            s, ct = canonicalize(_plug(ctx, raw), n)
                            if s == 0:
                                continue
                            col = basis.index[ct]
                            coeff = row.get(col, 0) + sgn * s
                            if coeff == 0:
                                row.pop(col, None)
                            else:
                                row[col] = coeff
                        if row:
                            rows.append(row)
                            provenance.append(((tuple(mt), tuple(yt)), ctx))
    return rows, provenance


def relation_rows(
    n: int, d: int, w: int, ceiling: int = DEFAULT_CEILING
) -> RelationMatrix:
    basis = graded_monomials(n, d, w, ceiling=ceiling)
    rows, provenance = _instance_rows(n, d, w, basis)
    return RelationMatrix(basis, rows, provenance)


class _Echelon:
    """Incremental integer row reduction: pivots[col] is a row whose
    leading (smallest-index) column is col."""

    def __init__(self):
        self.pivots: dict[int, dict[int, int]] = {}

    @staticmethod
    def _normalize(row: dict[int, int]) -> dict[int, int]:
        g = 0
        for c in row.values():
            g = gcd(g, abs(c))
        if g > 1:
            row = {k: c // g for k, c in row.items()}
        lead = min(row)
        if row[lead] < 0:
            row = {k: -c for k, c in row.items()}
        return row

    def reduce(self, row: dict[int, int]) -> dict[int, int]:
        row = dict(row)
        while row:
            lead = min(row)
            piv = self.pivots.get(lead)
            if piv is None:
                return self._normalize(row)
            a, b = piv[lead], row[lead]
            new: dict[int, int] = {}
            for k in set(row) | set(piv):
                c = a * row.get(k, 0) - b * piv.get(k, 0)
                if c != 0:
                    new[k] = c
            row = new
        return {}

    def insert(self, row: dict[int, int]) -> bool:
        """Reduce and insert; True if the rank grew."""
        res = self.reduce(row)
        if not res:
            return False
        self.pivots[min(res)] = res
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


@lru_cache(maxsize=None)
def _relation_space(n: int, d: int, w: int, ceiling: int = DEFAULT_CEILING):
    basis = graded_monomials(n, d, w, ceiling=ceiling)
    ech = _Echelon()
    rows, _ = _instance_rows(n, d, w, basis)
    for row in rows:
        ech.insert(row)
    return basis, ech


def rank(n: int, d: int, w: int, ceiling: int = DEFAULT_CEILING) -> int:
    _, ech = _relation_space(n, d, w, ceiling)
    return ech.rank


def graded_dimension(
    n: int,
    d: int,
    w: int,
    ceiling: int = DEFAULT_CEILING,
    cache_dir: Optional[str] = None,
) -> int:
    """dim F^w / F^(w+1) on d generators: |monomials| - rank(relations).

    If `cache_dir` (or the environment variable NLIE_ORACLE_CACHE) names a
    directory, computed cells are stored there as one JSON record per
    cell: {n, d, w, basis_size, rank, dim}."""
    cache_dir = cache_dir or os.environ.get(CACHE_ENV_VAR)
    cache_path = None
    if cache_dir:
        cache_path = os.path.join(cache_dir, f"cell_n{n}_d{d}_w{w}.json")
        if os.path.exists(cache_path):
            with open(cache_path) as fh:
                rec = json.load(fh)
            return rec["dim"]
    basis, ech = _relation_space(n, d, w, ceiling)
    dim = len(basis.monomials) - ech.rank
    if cache_path:
        os.makedirs(cache_dir, exist_ok=True)
        rec = {
            "n": n,
            "d": d,
            "w": w,
            "basis_size": len(basis.monomials),
            "rank": ech.rank,
            "dim": dim,
        }
        with open(cache_path, "w") as fh:
            json.dump(rec, fh)
    return dim


def membership(
    lc: dict, n: int, d: int, ceiling: int = DEFAULT_CEILING
) -> bool:
    """Whether the combination lies in the relation span of its graded
    component.  All terms must share one weight; the empty combination is
    trivially a member."""
    if not lc:
        return True
    weights = {weight(t, n) for t in lc}
    if len(weights) != 1:
        raise ValueError(f"mixed-weight combination: weights {sorted(weights)}")
    w = weights.pop()
    basis, ech = _relation_space(n, d, w, ceiling)
    # clear denominators to an integer vector
    denom = 1
    for c in lc.values():
        denom = denom * Fraction(c).denominator // gcd(denom, Fraction(c).denominator)
    row: dict[int, int] = {}
    for t, c in lc.items():
        if t not in basis.index:
            raise ValueError(f"term outside the monomial slice: {t!r}")
        val = int(Fraction(c) * denom)
        if val:
            row[basis.index[t]] = val
    if not row:
        return True
    return not ech.reduce(row)

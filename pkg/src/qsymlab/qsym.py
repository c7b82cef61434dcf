"""Quasisymmetric functions in the monomial basis.

Elements are :class:`~qsymlab.lincomb.LinComb` objects keyed by
:class:`~qsymlab.compositions.Composition`.  All structure constants in this
basis are integers; they are computed once per basis input, cached, and then
mapped into whichever coefficient ring the caller uses.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Sequence

from .compositions import (
    EMPTY,
    Composition,
    rearrangements,
    sort_to_partition,
)
from .config import check_degree
from .errors import ClosureError
from .lincomb import Accumulator, LinComb
from .matrices import enum_column_reduced_with_row_reductions, enum_reduced_with_read_reduction
from .rings import ZZ, CoefficientRing


def M(*parts: int, ring: CoefficientRing = ZZ) -> LinComb:
    """The monomial quasisymmetric function ``M_(parts)``.

    ``M(2, 1)`` and ``M((2, 1))`` are both accepted.
    """
    if len(parts) == 1 and not isinstance(parts[0], int):
        parts = tuple(parts[0])
    return LinComb.monomial(ring, Composition(parts))


def one(ring: CoefficientRing = ZZ) -> LinComb:
    return LinComb.monomial(ring, EMPTY)


# -- product ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _mul_basis(rows: tuple) -> tuple:
    check_degree(sum(sum(r) for r in rows))
    counts: dict = {}
    for a in enum_column_reduced_with_row_reductions(rows):
        c = Composition._trusted(tuple(a.column()))
        counts[c] = counts.get(c, 0) + 1
    return tuple(counts.items())


def mul_basis(*rows: Composition) -> tuple:
    """Integer structure constants of ``M_{rows[0]} * ... * M_{rows[-1]}``.

    Commutativity lets the cache key be the sorted row list.
    """
    return _mul_basis(tuple(sorted(tuple(r) for r in rows)))


def qsym_mul(f: LinComb, g: LinComb) -> LinComb:
    if f.ring != g.ring:
        raise ValueError("coefficient rings differ")
    out = Accumulator(f.ring)
    for a, ca in f.items():
        for b, cb in g.items():
            c = ca * cb
            for k, n in mul_basis(a, b):
                out.add(k, c * n)
    return out.result()


def qsym_mul_many(fs: Sequence[LinComb], ring: CoefficientRing | None = None) -> LinComb:
    """k-fold product through the k-row matrix enumeration."""
    if not fs:
        return one(ring or ZZ)
    ring = fs[0].ring
    out = Accumulator(ring)
    choices = [f.items() for f in fs]

    def rec(i: int, keys: list, c) -> None:
        if i == len(choices):
            for k, n in mul_basis(*keys):
                out.add(k, c * n)
            return
        for k, v in choices[i]:
            keys.append(k)
            rec(i + 1, keys, c * v)
            keys.pop()

    rec(0, [], 1)
    return out.result()


def qsym_power(f: LinComb, n: int) -> LinComb:
    if n < 0:
        raise ValueError("negative powers are not defined")
    result = one(f.ring)
    for _ in range(n):
        result = qsym_mul(result, f)
    return result


# -- coalgebra structure -----------------------------------------------------

def deconcatenations(gamma: Composition, k: int) -> list[tuple]:
    """Ordered k-tuples of compositions concatenating to ``gamma``."""
    ell = len(gamma)
    if k == 0:
        return [()] if ell == 0 else []
    out = []
    for cuts in combinations_with_replacement(range(ell + 1), k - 1):
        bounds = (0,) + cuts + (ell,)
        out.append(tuple(gamma[bounds[i]:bounds[i + 1]] for i in range(k)))
    return out


def qsym_coprod(f: LinComb) -> LinComb:
    """Deconcatenation coproduct; keys are pairs of compositions."""
    out = Accumulator(f.ring)
    for g, c in f.items():
        for i in range(len(g) + 1):
            out.add((g[:i], g[i:]), c)
    return out.result()


def qsym_counit(f: LinComb):
    return f.coeff(EMPTY)


def qsym_iterated_coprod(f: LinComb, k: int) -> LinComb:
    """``Delta^(k-1)`` on k-tuple keys.

    ``k = 0`` gives the counit as the coefficient of the empty tuple and
    ``k = 1`` gives ``f`` on 1-tuple keys.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = Accumulator(f.ring)
    for g, c in f.items():
        for t in deconcatenations(g, k):
            out.add(t, c)
    return out.result()


def eps_P(f: LinComb):
    """Evaluation at ``(1, 0, 0, ...)``: only ``M_()`` and ``M_(n)`` survive."""
    total = 0
    for g, c in f.items():
        if len(g) <= 1:
            total += c
    return f.ring.normalize(total)


# -- antipode ----------------------------------------------------------------

@lru_cache(maxsize=None)
def _antipode_basis(gamma: Composition) -> tuple:
    if not gamma:
        return ((EMPTY, 1),)
    # S(x) = -x - sum S(x') x'' over the proper deconcatenations
    acc: dict = {gamma: -1}
    for i in range(1, len(gamma)):
        left, right = gamma[:i], gamma[i:]
        for s, cs in _antipode_basis(left):
            for k, n in mul_basis(s, right):
                acc[k] = acc.get(k, 0) - cs * n
    return tuple((k, v) for k, v in acc.items() if v)


def qsym_antipode(f: LinComb) -> LinComb:
    out = Accumulator(f.ring)
    for g, c in f.items():
        for k, n in _antipode_basis(g):
            out.add(k, c * n)
    return out.result()


# -- internal coproduct --------------------------------------------------------

@lru_cache(maxsize=None)
def _delta_P_basis(alpha: Composition) -> tuple:
    check_degree(sum(alpha))
    counts: dict = {}
    for a in enum_reduced_with_read_reduction(alpha):
        key = (Composition._trusted(tuple(a.row())), Composition._trusted(tuple(a.column())))
        counts[key] = counts.get(key, 0) + 1
    return tuple(counts.items())


def delta_P(f: LinComb) -> LinComb:
    """Internal coproduct: ``M_alpha -> sum M_row(A) (x) M_column(A)``."""
    out = Accumulator(f.ring)
    for g, c in f.items():
        for k, n in _delta_P_basis(g):
            out.add(k, c * n)
    return out.result()


def twist(t: LinComb) -> LinComb:
    return t.map_keys(lambda k: (k[1], k[0]))


def delta_P_prime(f: LinComb) -> LinComb:
    return twist(delta_P(f))


# -- symmetric functions -------------------------------------------------------

def is_symmetric(f: LinComb) -> bool:
    """True iff the coefficient of ``M_alpha`` depends only on sorted ``alpha``."""
    seen: dict = {}
    for g, c in f.items():
        lam = sort_to_partition(g)
        if lam in seen:
            if seen[lam] != c:
                return False
            continue
        seen[lam] = c
        for r in rearrangements(lam):
            if f.coeff(r) != c:
                return False
    return True


def m_lambda(lam: Sequence[int], ring: CoefficientRing = ZZ) -> LinComb:
    """Monomial symmetric function: sum of ``M_alpha`` over rearrangements."""
    lam = Composition(lam)
    if not lam.is_partition():
        raise ValueError(f"{list(lam)} is not weakly decreasing")
    return LinComb(ring, {r: 1 for r in rearrangements(lam)})


def to_m_basis(f: LinComb) -> LinComb:
    """Coordinates of a symmetric ``f`` in the ``m_lambda`` basis."""
    if not is_symmetric(f):
        raise ClosureError(f"element is not symmetric: {f!r}")
    return LinComb._trusted(f.ring, {g: c for g, c in f.items() if g.is_partition()})

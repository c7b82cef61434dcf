"""Nonnegative integer matrices and the two enumerations behind QSym.

``enum_column_reduced_with_row_reductions`` lists the matrices indexing the
product ``M_{a_1} ... M_{a_k}``; ``enum_reduced_with_read_reduction`` lists
the reduced matrices indexing the internal coproduct of ``M_alpha``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Sequence

from .compositions import Composition, NNTuple, compositions_of, reduce_tuple


@dataclass(frozen=True)
class NNMatrix:
    """A ``u x v`` matrix of nonnegative integers, stored row-major."""

    u: int
    v: int
    entries: tuple  # tuple of u row tuples, each of length v

    def __post_init__(self):
        if len(self.entries) != self.u or any(len(r) != self.v for r in self.entries):
            raise ValueError("entries do not match the declared shape")
        if any(x < 0 for r in self.entries for x in r):
            raise ValueError("entries must be nonnegative")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], v: int | None = None) -> "NNMatrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if v is None:
            v = len(rows[0]) if rows else 0
        return cls(len(rows), v, rows)

    def row(self) -> NNTuple:
        return NNTuple(sum(r) for r in self.entries)

    def column(self) -> NNTuple:
        return NNTuple(sum(r[j] for r in self.entries) for j in range(self.v))

    def read(self) -> NNTuple:
        return NNTuple(x for r in self.entries for x in r)

    def is_column_reduced(self) -> bool:
        return all(c != 0 for c in self.column())

    def is_row_reduced(self) -> bool:
        return all(r != 0 for r in self.row())

    def is_reduced(self) -> bool:
        return self.is_row_reduced() and self.is_column_reduced()

    def order_key(self) -> tuple:
        return (self.u, self.v, tuple(self.read()))

    def to_json(self) -> list:
        return [list(r) for r in self.entries]

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ",".join(map(str, r)) + "]" for r in self.entries) + "]"


def row(a: NNMatrix) -> NNTuple:
    return a.row()


def column(a: NNMatrix) -> NNTuple:
    return a.column()


def read(a: NNMatrix) -> NNTuple:
    return a.read()


def is_column_reduced(a: NNMatrix) -> bool:
    return a.is_column_reduced()


def is_row_reduced(a: NNMatrix) -> bool:
    return a.is_row_reduced()


def is_reduced(a: NNMatrix) -> bool:
    return a.is_reduced()


def _product_columns(rows: tuple) -> list[tuple]:
    """Column lists of the column-reduced matrices; each column is a k-tuple.

    Every column picks a nonempty set of rows that still have parts left and
    consumes the next part of each.
    """
    k = len(rows)
    out: list[tuple] = []
    cols: list[tuple] = []

    def rec(pos: tuple) -> None:
        live = [g for g in range(k) if pos[g] < len(rows[g])]
        if not live:
            out.append(tuple(cols))
            return
        for r in range(1, len(live) + 1):
            for chosen in combinations(live, r):
                col = [0] * k
                nxt = list(pos)
                for g in chosen:
                    col[g] = rows[g][pos[g]]
                    nxt[g] += 1
                cols.append(tuple(col))
                rec(tuple(nxt))
                cols.pop()

    rec((0,) * k)
    return out


@lru_cache(maxsize=4096)
def _enum_product(rows: tuple) -> tuple:
    k = len(rows)
    mats = []
    for cols in _product_columns(rows):
        v = len(cols)
        entries = tuple(tuple(cols[j][g] for j in range(v)) for g in range(k))
        mats.append(NNMatrix(k, v, entries))
    mats.sort(key=NNMatrix.order_key)
    return tuple(mats)


def enum_column_reduced_with_row_reductions(rows: Sequence[Composition]) -> list[NNMatrix]:
    """Column-reduced ``k x v`` matrices whose ``g``-th row reduces to ``rows[g]``."""
    return list(_enum_product(tuple(tuple(r) for r in rows)))


@lru_cache(maxsize=4096)
def _enum_reduced(alpha: tuple) -> tuple:
    ell = len(alpha)
    if ell == 0:
        return (NNMatrix(0, 0, ()),)
    mats = []
    # Nonzero cells form an increasing row-major sequence, so row i holds a
    # consecutive block of the parts; split alpha into u nonempty blocks.
    for sizes in compositions_of(ell):
        u = len(sizes)
        for v in range(max(sizes), ell + 1):
            choices = [list(combinations(range(v), s)) for s in sizes]
            for pick in product(*choices):
                covered = set()
                for cols in pick:
                    covered.update(cols)
                if len(covered) != v:
                    continue
                entries = [[0] * v for _ in range(u)]
                t = 0
                for i, cols in enumerate(pick):
                    for j in cols:
                        entries[i][j] = alpha[t]
                        t += 1
                mats.append(NNMatrix(u, v, tuple(tuple(r) for r in entries)))
    mats.sort(key=NNMatrix.order_key)
    return tuple(mats)


def enum_reduced_with_read_reduction(alpha: Composition) -> list[NNMatrix]:
    """Reduced matrices ``A`` (any shape) with ``read(A)`` reducing to ``alpha``."""
    return list(_enum_reduced(tuple(alpha)))


def reduced_read(a: NNMatrix) -> Composition:
    return reduce_tuple(a.read())

"""Compositions, nonnegative tuples and their enumeration.

>>> concat(Composition([1, 3]), Composition([2]))
Composition([1, 3, 2])
>>> reduce_tuple((3, 1, 0, 1, 0, 0, 2))
Composition([3, 1, 1, 2])
"""
from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Sequence

from .config import check_degree


class Composition(tuple):
    """A finite (possibly empty) sequence of positive integers.

    Ordered graded-lexicographically: by size, then length, then entries.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for p in parts:
            if isinstance(p, bool) or not isinstance(p, int):
                raise TypeError(f"composition parts must be integers, got {p!r}")
            if p < 1:
                raise ValueError(f"composition parts must be >= 1, got {p}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: tuple) -> "Composition":
        return tuple.__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def order_key(self) -> tuple:
        return (sum(self), len(self), tuple(self))

    def is_partition(self) -> bool:
        return all(self[i] >= self[i + 1] for i in range(len(self) - 1))

    def __add__(self, other):
        if isinstance(other, Composition):
            return Composition._trusted(tuple.__add__(self, other))
        return tuple.__add__(self, other)

    def __getitem__(self, item):
        got = tuple.__getitem__(self, item)
        if isinstance(item, slice):
            return Composition._trusted(got)
        return got

    def __repr__(self) -> str:
        return f"Composition({list(self)})"

    def __str__(self) -> str:
        return format_composition(self)


class NNTuple(tuple):
    """A finite tuple of nonnegative integers (zeros allowed).

    Kept distinct from :class:`Composition`: ``(1, 3)`` and ``(1, 3, 0)``
    are different tuples and neither is a padded form of the other.
    """

    __slots__ = ()

    def __new__(cls, entries: Iterable[int] = ()):
        entries = tuple(int(e) for e in entries)
        if any(e < 0 for e in entries):
            raise ValueError("entries must be nonnegative")
        return super().__new__(cls, entries)

    def __repr__(self) -> str:
        return f"NNTuple({list(self)})"


EMPTY = Composition()


def concat(alpha: Composition, beta: Composition) -> Composition:
    return Composition._trusted(tuple(alpha) + tuple(beta))


def reduce_tuple(w: Sequence[int]) -> Composition:
    """Drop the zero entries of a nonnegative tuple."""
    if any(x < 0 for x in w):
        raise ValueError("entries must be nonnegative")
    return Composition._trusted(tuple(x for x in w if x != 0))


def embed(alpha: Composition) -> NNTuple:
    return NNTuple(alpha)


def sort_to_partition(alpha: Composition) -> Composition:
    return Composition._trusted(tuple(sorted(alpha, reverse=True)))


@lru_cache(maxsize=None)
def _compositions(n: int) -> tuple:
    if n == 0:
        return (EMPTY,)
    out = []
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            out.append(Composition._trusted((first,) + rest))
    out.sort(key=Composition.order_key)
    return tuple(out)


def compositions_of(n: int) -> list[Composition]:
    """All ``2**(n-1)`` compositions of ``n`` in key order (``[()]`` for 0)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    check_degree(n)
    return list(_compositions(n))


def compositions_up_to(d: int) -> list[Composition]:
    out = []
    for n in range(d + 1):
        out.extend(compositions_of(n))
    return out


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[Composition]:
    """Partitions of ``n`` as weakly decreasing compositions, in key order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    check_degree(n)
    parts = [Composition._trusted(p) for p in _partitions(n, n)]
    parts.sort(key=Composition.order_key)
    return parts


def rearrangements(lam: Composition) -> list[Composition]:
    """Distinct orderings of the parts of ``lam``, in key order."""
    out: list[tuple] = []

    def rec(prefix: tuple, counts: dict) -> None:
        if not counts:
            out.append(prefix)
            return
        for p in sorted(counts):
            rest = dict(counts)
            rest[p] -= 1
            if not rest[p]:
                del rest[p]
            rec(prefix + (p,), rest)

    counts: dict = {}
    for p in lam:
        counts[p] = counts.get(p, 0) + 1
    rec((), counts)
    return sorted((Composition._trusted(t) for t in out), key=Composition.order_key)


def coarsenings(alpha: Composition) -> list[Composition]:
    """Compositions obtained by summing runs of adjacent parts of ``alpha``."""
    if not alpha:
        return [EMPTY]
    out = []
    ell = len(alpha)
    for mask in range(1 << (ell - 1)):
        parts, acc = [], alpha[0]
        for i in range(1, ell):
            if mask >> (i - 1) & 1:
                acc += alpha[i]
            else:
                parts.append(acc)
                acc = alpha[i]
        parts.append(acc)
        out.append(Composition._trusted(tuple(parts)))
    return sorted(set(out), key=Composition.order_key)


def format_composition(alpha: Sequence[int]) -> str:
    return "[" + ",".join(str(p) for p in alpha) + "]"


_COMP_RE = re.compile(r"^\s*\[\s*(|-?\d+(\s*,\s*-?\d+)*)\s*\]\s*$")


def parse_composition(text: str) -> Composition:
    """Parse ``[a1,a2,...]`` (``[]`` for the empty composition)."""
    m = _COMP_RE.match(text)
    if not m:
        raise ValueError(f"malformed composition literal {text!r}")
    body = m.group(1)
    if not body:
        return EMPTY
    return Composition(int(x) for x in body.split(","))

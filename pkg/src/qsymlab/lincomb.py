"""Sparse finitely-supported linear combinations over a coefficient ring.

A :class:`LinComb` is an immutable map ``key -> coefficient`` with no zero
coefficients.  Keys are hashable and totally ordered by :func:`key_order`:
objects exposing ``order_key()`` (compositions) use it, plain tuples are
tensor keys ordered componentwise, everything else orders natively.
"""
from __future__ import annotations

from typing import Any, Callable, Hashable, Iterable, Mapping

from .errors import UndefinedKeyError
from .rings import CoefficientRing, RingElem


def key_order(key: Any) -> Any:
    ok = getattr(key, "order_key", None)
    if ok is not None:
        return ok()
    if type(key) is tuple:
        return tuple(key_order(k) for k in key)
    return key


def canonical(ring: CoefficientRing, terms: Mapping) -> dict:
    norm = ring.normalize
    out = {}
    for k, v in terms.items():
        v = norm(v)
        if v != 0:
            out[k] = v
    return out


class LinComb:
    __slots__ = ("ring", "_terms", "_sorted", "_hash")

    def __init__(self, ring: CoefficientRing, terms: Mapping | Iterable = ()):
        self.ring = ring
        if not isinstance(terms, Mapping):
            acc: dict = {}
            for k, v in terms:
                acc[k] = acc.get(k, 0) + v
            terms = acc
        self._terms = canonical(ring, terms)
        self._sorted = None
        self._hash = None

    @classmethod
    def _trusted(cls, ring: CoefficientRing, terms: dict) -> "LinComb":
        # terms must already be canonical
        obj = cls.__new__(cls)
        obj.ring = ring
        obj._terms = terms
        obj._sorted = None
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, ring: CoefficientRing) -> "LinComb":
        return cls._trusted(ring, {})

    @classmethod
    def monomial(cls, ring: CoefficientRing, key: Hashable, coeff: Any = 1) -> "LinComb":
        return cls(ring, {key: coeff})

    # -- mapping protocol -------------------------------------------------
    def coeff(self, key: Hashable) -> RingElem:
        return self._terms.get(key, self.ring.zero)

    __getitem__ = coeff

    def __contains__(self, key: Hashable) -> bool:
        return key in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self) -> list[tuple[Any, RingElem]]:
        """Terms in key order."""
        if self._sorted is None:
            self._sorted = sorted(self._terms.items(), key=lambda kv: key_order(kv[0]))
        return self._sorted

    def keys(self) -> list:
        return [k for k, _ in self.items()]

    def __iter__(self):
        return iter(self.keys())

    def as_dict(self) -> dict:
        return dict(self._terms)

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: "LinComb") -> None:
        if not isinstance(other, LinComb):
            raise TypeError(f"cannot combine LinComb with {type(other).__name__}")
        if other.ring != self.ring:
            raise ValueError("coefficient rings differ")

    def __add__(self, other: "LinComb") -> "LinComb":
        self._check(other)
        acc = dict(self._terms)
        for k, v in other._terms.items():
            acc[k] = acc.get(k, 0) + v
        return LinComb(self.ring, acc)

    def __neg__(self) -> "LinComb":
        return LinComb(self.ring, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "LinComb") -> "LinComb":
        self._check(other)
        acc = dict(self._terms)
        for k, v in other._terms.items():
            acc[k] = acc.get(k, 0) - v
        return LinComb(self.ring, acc)

    def scale(self, c: Any) -> "LinComb":
        c = self.ring.normalize(c)
        if c == 0:
            return LinComb.zero(self.ring)
        return LinComb(self.ring, {k: c * v for k, v in self._terms.items()})

    def __rmul__(self, c: Any) -> "LinComb":
        if isinstance(c, LinComb):
            return NotImplemented
        return self.scale(c)

    def map_keys(self, f: Callable[[Any], Any]) -> "LinComb":
        """Reindex through ``f``; colliding keys are summed."""
        return LinComb(self.ring, ((f(k), v) for k, v in self._terms.items()))

    def filter(self, pred: Callable[[Any], bool]) -> "LinComb":
        return LinComb._trusted(self.ring, {k: v for k, v in self._terms.items() if pred(k)})

    # -- comparison -------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        if not self._terms:
            return "LinComb(0)"
        body = ", ".join(f"{k!r}: {self.ring.to_string(v)}" for k, v in self.items())
        return "LinComb({" + body + "})"


class Accumulator:
    """Mutable scratch space for building a :class:`LinComb` term by term."""

    __slots__ = ("ring", "acc")

    def __init__(self, ring: CoefficientRing):
        self.ring = ring
        self.acc: dict = {}

    def add(self, key: Hashable, coeff: Any) -> None:
        acc = self.acc
        acc[key] = acc.get(key, 0) + coeff

    def add_lc(self, lc: LinComb, coeff: Any = 1) -> None:
        acc = self.acc
        for k, v in lc._terms.items():
            acc[k] = acc.get(k, 0) + coeff * v

    def result(self) -> LinComb:
        return LinComb(self.ring, self.acc)


def lc_add(a: LinComb, b: LinComb) -> LinComb:
    return a + b


def lc_sub(a: LinComb, b: LinComb) -> LinComb:
    return a - b


def lc_scale(c: Any, a: LinComb) -> LinComb:
    return a.scale(c)


def lc_tensor(*factors: LinComb) -> LinComb:
    """Tensor product of elements; keys are flat tuples ``(k1, ..., kn)``.

    With no factors the result is the scalar ``1`` on the empty-tuple key.
    """
    if not factors:
        raise ValueError("lc_tensor needs at least one factor to fix the ring")
    ring = factors[0].ring
    for f in factors[1:]:
        if f.ring != ring:
            raise ValueError("coefficient rings differ")
    current: dict = {(): 1}
    for f in factors:
        nxt: dict = {}
        for k, v in current.items():
            for k2, v2 in f._terms.items():
                key = k + (k2,)
                nxt[key] = nxt.get(key, 0) + v * v2
        current = nxt
    return LinComb(ring, current)


def lc_apply_linear(
    f: Callable[[Any], LinComb] | Mapping[Any, LinComb],
    a: LinComb,
    ring: CoefficientRing | None = None,
) -> LinComb:
    """Linear extension of the basis map ``f`` evaluated at ``a``."""
    out = Accumulator(ring or a.ring)
    lookup = f.__getitem__ if isinstance(f, Mapping) else f
    for k, v in a._terms.items():
        try:
            img = lookup(k)
        except KeyError as exc:
            raise UndefinedKeyError(f"map undefined on key {k!r}") from exc
        out.add_lc(img, v)
    return out.result()

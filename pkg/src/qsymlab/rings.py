"""Exact commutative coefficient rings.

Three rings ship: arbitrary-precision integers, rationals, and ``Z/m``.
Elements are plain Python numbers (``int`` or ``Fraction``); a ring object
only knows how to normalize, compare and serialize them.  Modular elements
are ``int`` representatives in ``range(m)``.

Because the three rings are all quotients of (localizations of) ``Z``, native
``+`` and ``*`` on representatives followed by :meth:`CoefficientRing.normalize`
is always correct; the sparse arithmetic in :mod:`qsymlab.lincomb` relies on
that and normalizes once per canonicalization instead of after every step.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Union

RingElem = Union[int, Fraction]


class CoefficientRing:
    """Base class; subclasses fix :attr:`name` and :meth:`normalize`."""

    name = "abstract"

    @property
    def zero(self) -> RingElem:
        return self.normalize(0)

    @property
    def one(self) -> RingElem:
        return self.normalize(1)

    def normalize(self, x: Any) -> RingElem:
        raise NotImplementedError

    def from_integer(self, n: int) -> RingElem:
        return self.normalize(int(n))

    def add(self, a: RingElem, b: RingElem) -> RingElem:
        return self.normalize(a + b)

    def mul(self, a: RingElem, b: RingElem) -> RingElem:
        return self.normalize(a * b)

    def neg(self, a: RingElem) -> RingElem:
        return self.normalize(-a)

    def sub(self, a: RingElem, b: RingElem) -> RingElem:
        return self.normalize(a - b)

    def eq(self, a: RingElem, b: RingElem) -> bool:
        return self.normalize(a) == self.normalize(b)

    def is_zero(self, a: RingElem) -> bool:
        return self.normalize(a) == 0

    def to_string(self, a: RingElem) -> str:
        return str(self.normalize(a))

    def parse(self, s: str) -> RingElem:
        return self.normalize(int(s.strip()))

    def to_json(self) -> Any:
        return self.name

    def __eq__(self, other: object) -> bool:
        return type(self) is type(other) and self._ident() == other._ident()

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._ident()))

    def _ident(self) -> tuple:
        return ()

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"


class IntegerRing(CoefficientRing):
    name = "int"

    def normalize(self, x: Any) -> int:
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"{x} is not an integer")
            return x.numerator
        return int(x)


class RationalRing(CoefficientRing):
    name = "rat"

    def normalize(self, x: Any) -> Fraction:
        return x if type(x) is Fraction else Fraction(x)

    def parse(self, s: str) -> Fraction:
        return Fraction(s.strip())

    def inverse(self, a: RingElem) -> Fraction:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return 1 / Fraction(a)


class ModularRing(CoefficientRing):
    """``Z/m`` for ``m >= 2``; serialized as ``"r mod m"``."""

    name = "mod"

    def __init__(self, modulus: int):
        if modulus < 2:
            raise ValueError("modulus must be at least 2")
        self.modulus = int(modulus)

    def _ident(self) -> tuple:
        return (self.modulus,)

    def normalize(self, x: Any) -> int:
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.modulus) % self.modulus
        return int(x) % self.modulus

    def to_string(self, a: RingElem) -> str:
        return f"{self.normalize(a)} mod {self.modulus}"

    def parse(self, s: str) -> int:
        s = s.strip()
        if " mod " in s:
            r, m = s.split(" mod ")
            if int(m) != self.modulus:
                raise ValueError(f"coefficient {s!r} is not in Z/{self.modulus}")
            s = r
        return self.normalize(int(s))

    def inverse(self, a: RingElem) -> int:
        return pow(self.normalize(a), -1, self.modulus)

    def to_json(self) -> Any:
        return {"mod": self.modulus}

    def __repr__(self) -> str:
        return f"ModularRing({self.modulus})"


ZZ = IntegerRing()
QQ = RationalRing()


def ring_from_spec(spec: Any) -> CoefficientRing:
    """Accept ``"int"``, ``"rat"``, ``"mod:7"`` or the JSON form ``{"mod": 7}``."""
    if isinstance(spec, CoefficientRing):
        return spec
    if isinstance(spec, dict):
        if set(spec) != {"mod"}:
            raise ValueError(f"unknown ring {spec!r}")
        return ModularRing(spec["mod"])
    if spec == "int":
        return ZZ
    if spec == "rat":
        return QQ
    if isinstance(spec, str) and spec.startswith("mod:"):
        return ModularRing(int(spec[4:]))
    raise ValueError(f"unknown ring {spec!r}")

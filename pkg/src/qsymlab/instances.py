"""Concrete Hopf algebras: the binomial algebra ``k[x]``, QSym, and Lambda.

Lambda is carried by its embedding in QSym: keys are partitions, structure
maps are computed on ``m_lambda`` inside QSym and read back in the
``m``-basis, raising :class:`~qsymlab.errors.ClosureError` if an image is not
symmetric.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Any, Callable

from . import qsym
from .compositions import EMPTY, Composition, compositions_of, format_composition, partitions_of
from .errors import ClosureError
from .hopf import HopfPresentation
from .lincomb import LinComb
from .rings import ZZ, CoefficientRing


def format_monomial(n: int) -> str:
    if n == 0:
        return "1"
    if n == 1:
        return "x"
    return f"x^{n}"


def make_binomial(ring: CoefficientRing = ZZ) -> HopfPresentation:
    """``k[x]`` with ``x`` primitive, so ``Delta(x^n) = sum C(n,i) x^i (x) x^(n-i)``."""

    @lru_cache(maxsize=None)
    def product(a: int, b: int) -> LinComb:
        return LinComb.monomial(ring, a + b)

    @lru_cache(maxsize=None)
    def coproduct(n: int) -> LinComb:
        return LinComb(ring, {(i, n - i): comb(n, i) for i in range(n + 1)})

    return HopfPresentation(
        name="poly",
        ring=ring,
        degree=lambda n: n,
        unit_key=0,
        product=product,
        coproduct=coproduct,
        counit=lambda n: 1 if n == 0 else 0,
        basis=lambda n: [n],
        commutative=True,
        cocommutative=True,
        format_key=format_monomial,
        key_to_json=lambda n: n,
        key_from_json=int,
    )


def _comp(j: Any) -> Composition:
    return Composition(j)


def make_qsym(ring: CoefficientRing = ZZ) -> HopfPresentation:
    @lru_cache(maxsize=None)
    def product(a, b) -> LinComb:
        return LinComb(ring, dict(qsym.mul_basis(a, b)))

    @lru_cache(maxsize=None)
    def coproduct(g) -> LinComb:
        return LinComb(ring, {(g[:i], g[i:]): 1 for i in range(len(g) + 1)})

    return HopfPresentation(
        name="qsym",
        ring=ring,
        degree=lambda g: sum(g),
        unit_key=EMPTY,
        product=product,
        coproduct=coproduct,
        counit=lambda g: 1 if not g else 0,
        basis=compositions_of,
        commutative=True,
        cocommutative=False,
        format_key=lambda g: "M" + format_composition(g),
        key_to_json=list,
        key_from_json=_comp,
    )


def _symmetric_pairs(t: LinComb) -> LinComb:
    """Read a symmetric element of QSym (x) QSym in the ``m (x) m`` basis."""
    by_right: dict = {}
    for (a, b), c in t.items():
        by_right.setdefault(b, {})[a] = c
    for b, col in by_right.items():
        if not qsym.is_symmetric(LinComb._trusted(t.ring, col)):
            raise ClosureError(f"left leg over M{list(b)} is not symmetric")
    by_left: dict = {}
    for (a, b), c in t.items():
        by_left.setdefault(a, {})[b] = c
    for a, row in by_left.items():
        if not qsym.is_symmetric(LinComb._trusted(t.ring, row)):
            raise ClosureError(f"right leg over M{list(a)} is not symmetric")
    return t.filter(lambda k: k[0].is_partition() and k[1].is_partition())


def make_lambda(ring: CoefficientRing = ZZ) -> HopfPresentation:
    """Symmetric functions in the monomial basis ``m_lambda``."""

    @lru_cache(maxsize=None)
    def product(a, b) -> LinComb:
        f = qsym.qsym_mul(qsym.m_lambda(a, ring), qsym.m_lambda(b, ring))
        return qsym.to_m_basis(f)

    @lru_cache(maxsize=None)
    def coproduct(lam) -> LinComb:
        return _symmetric_pairs(qsym.qsym_coprod(qsym.m_lambda(lam, ring)))

    def from_json(j):
        lam = Composition(j)
        if not lam.is_partition():
            raise ValueError(f"{j} is not a partition")
        return lam

    return HopfPresentation(
        name="lambda",
        ring=ring,
        degree=lambda g: sum(g),
        unit_key=EMPTY,
        product=product,
        coproduct=coproduct,
        counit=lambda g: 1 if not g else 0,
        basis=partitions_of,
        commutative=True,
        cocommutative=True,
        format_key=lambda g: "m" + format_composition(g),
        key_to_json=list,
        key_from_json=from_json,
    )


def lambda_to_qsym(f: LinComb) -> LinComb:
    """Embed an ``m``-basis element of Lambda into QSym."""
    out = LinComb.zero(f.ring)
    for lam, c in f.items():
        out = out + qsym.m_lambda(lam, f.ring).scale(c)
    return out


INSTANCES: dict[str, Callable[[CoefficientRing], HopfPresentation]] = {
    "poly": make_binomial,
    "qsym": make_qsym,
    "lambda": make_lambda,
}


def make_instance(name: str, ring: CoefficientRing = ZZ) -> HopfPresentation:
    try:
        return INSTANCES[name](ring)
    except KeyError:
        raise ValueError(f"unknown instance {name!r}; choose from {sorted(INSTANCES)}") from None


@lru_cache(maxsize=None)
def get_instance(name: str, ring: CoefficientRing = ZZ) -> HopfPresentation:
    """Shared presentation per (name, ring), so memo tables are reused."""
    return make_instance(name, ring)


# -- characters --------------------------------------------------------------

@dataclass(frozen=True)
class Character:
    """An algebra morphism ``H -> k`` given on basis keys."""

    name: str
    value: Callable[[Any], Any]

    def __call__(self, key):
        return self.value(key)

    def on(self, H: HopfPresentation, f: LinComb):
        return H.ring.normalize(sum(c * self.value(k) for k, c in f.items()))


def counit_character(H: HopfPresentation) -> Character:
    return Character("counit", H.counit)


def eps_P_character() -> Character:
    return Character("eps_P", lambda g: 1 if len(g) <= 1 else 0)


def stock_characters(ring: CoefficientRing = ZZ) -> list[tuple[HopfPresentation, Character]]:
    """Bundled ``(H, zeta)`` fixtures."""
    Q = get_instance("qsym", ring)
    P = get_instance("poly", ring)
    L = get_instance("lambda", ring)
    return [
        (Q, eps_P_character()),
        (P, Character("zeta1", lambda n: 1)),
        (P, Character("zeta0", lambda n: 1 if n == 0 else 0)),
        # eps_P(m_lambda) = 1 iff lambda has at most one part
        (L, Character("eps_P", lambda lam: 1 if len(lam) <= 1 else 0)),
    ]


def characters_for(H: HopfPresentation) -> list[Character]:
    out = [counit_character(H)]
    for G, z in stock_characters(H.ring):
        if G.name == H.name and z.name != "counit":
            out.append(z)
    return out

"""Basis-presented connected graded Hopf algebras and constructions on them.

A :class:`HopfPresentation` is a table of callbacks on basis keys.  Infinite
bases are presented lazily by degree through ``basis(n)``.  Nothing here
checks the Hopf axioms at construction time; :func:`audit_hopf` verifies them
up to a caller-chosen degree.

Elements of ``H^{(x)k}`` are :class:`LinComb` objects keyed by flat k-tuples
of basis keys; the scalar case ``k = 0`` uses the empty tuple.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Sequence

from .errors import ArityError, NotConnectedError
from .lincomb import Accumulator, LinComb
from .rings import CoefficientRing

Key = Hashable
EndoMap = Callable[[Key], LinComb]


@dataclass(eq=False)
class HopfPresentation:
    name: str
    ring: CoefficientRing
    degree: Callable[[Key], int]
    unit_key: Key
    product: Callable[[Key, Key], LinComb]
    coproduct: Callable[[Key], LinComb]
    counit: Callable[[Key], Any]
    basis: Callable[[int], Sequence[Key]]
    commutative: bool = False
    cocommutative: bool = False
    top_degree: int | None = None  # finite presentations stop here
    format_key: Callable[[Key], str] = repr
    key_to_json: Callable[[Key], Any] = lambda k: k
    key_from_json: Callable[[Any], Key] = lambda j: j
    _memo: dict = field(default_factory=dict, repr=False)
    _lock: Any = field(default_factory=threading.RLock, repr=False)

    # memo tables are keyed by (table name, args)
    def memo(self, table: str, args: Any, compute: Callable[[], Any]) -> Any:
        key = (table, args)
        with self._lock:
            if key in self._memo:
                return self._memo[key]
        value = compute()
        with self._lock:
            self._memo.setdefault(key, value)
        return value

    # -- element helpers ------------------------------------------------
    def elem(self, key: Key, coeff: Any = 1) -> LinComb:
        return LinComb.monomial(self.ring, key, coeff)

    def one(self) -> LinComb:
        return self.elem(self.unit_key)

    def zero(self) -> LinComb:
        return LinComb.zero(self.ring)

    def basis_up_to(self, d: int) -> list:
        out = []
        for n in range(d + 1):
            if self.top_degree is not None and n > self.top_degree:
                break
            out.extend(self.basis(n))
        return out

    def mul(self, f: LinComb, g: LinComb) -> LinComb:
        out = Accumulator(self.ring)
        for a, ca in f.items():
            for b, cb in g.items():
                out.add_lc(self.product(a, b), ca * cb)
        return out.result()

    def coprod(self, f: LinComb) -> LinComb:
        out = Accumulator(self.ring)
        for a, c in f.items():
            out.add_lc(self.coproduct(a), c)
        return out.result()

    def counit_of(self, f: LinComb):
        return self.ring.normalize(sum(c * self.counit(a) for a, c in f.items()))

    def power(self, f: LinComb, n: int) -> LinComb:
        result = self.one()
        for _ in range(n):
            result = self.mul(result, f)
        return result

    def degrees(self, f: LinComb) -> set:
        return {self.degree(k) for k in f.keys()}

    def __repr__(self) -> str:
        return f"<HopfPresentation {self.name} over {self.ring!r}>"


def ground(ring: CoefficientRing) -> HopfPresentation:
    """The base ring as a (trivial) Hopf algebra on the single key ``()``."""
    o = LinComb.monomial(ring, ())
    oo = LinComb.monomial(ring, ((), ()))
    return HopfPresentation(
        name="k",
        ring=ring,
        degree=lambda k: 0,
        unit_key=(),
        product=lambda a, b: o,
        coproduct=lambda a: oo,
        counit=lambda a: 1,
        basis=lambda n: [()] if n == 0 else [],
        commutative=True,
        cocommutative=True,
        format_key=lambda k: "1",
    )


def scalar(f: LinComb):
    """Read an element of the ground algebra as a ring element."""
    return f.coeff(())


def tensor_presentation(H: HopfPresentation, G: HopfPresentation) -> HopfPresentation:
    """``H (x) G`` with componentwise product and coproduct."""
    if H.ring != G.ring:
        raise ValueError("coefficient rings differ")
    ring = H.ring

    def product(a, b):
        out = Accumulator(ring)
        for x, cx in H.product(a[0], b[0]).items():
            for y, cy in G.product(a[1], b[1]).items():
                out.add((x, y), cx * cy)
        return out.result()

    def coproduct(a):
        out = Accumulator(ring)
        for (h1, h2), ch in H.coproduct(a[0]).items():
            for (g1, g2), cg in G.coproduct(a[1]).items():
                out.add(((h1, g1), (h2, g2)), ch * cg)
        return out.result()

    def basis(n):
        out = []
        for i in range(n + 1):
            out.extend((h, g) for h in H.basis(i) for g in G.basis(n - i))
        return out

    return HopfPresentation(
        name=f"{H.name}(x){G.name}",
        ring=ring,
        degree=lambda k: H.degree(k[0]) + G.degree(k[1]),
        unit_key=(H.unit_key, G.unit_key),
        product=product,
        coproduct=coproduct,
        counit=lambda k: H.counit(k[0]) * G.counit(k[1]),
        basis=basis,
        commutative=H.commutative and G.commutative,
        cocommutative=H.cocommutative and G.cocommutative,
        format_key=lambda k: f"{H.format_key(k[0])} ⊗ {G.format_key(k[1])}",
    )


def tensor_mul(H: HopfPresentation, G: HopfPresentation, f: LinComb, g: LinComb) -> LinComb:
    """Componentwise product in ``H (x) G`` of elements keyed by pairs."""
    out = Accumulator(H.ring)
    for (a1, b1), c1 in f.items():
        for (a2, b2), c2 in g.items():
            c = c1 * c2
            for x, cx in H.product(a1, a2).items():
                for y, cy in G.product(b1, b2).items():
                    out.add((x, y), c * cx * cy)
    return out.result()


# -- projections -------------------------------------------------------------

def proj_n(H: HopfPresentation, f: LinComb, n: int) -> LinComb:
    return f.filter(lambda k: H.degree(k) == n)


def proj_alpha(H: HopfPresentation, t: LinComb, alpha: Sequence[int]) -> LinComb:
    """Keep the terms of a k-tuple tensor whose factor degrees equal ``alpha``."""
    alpha = tuple(alpha)
    k = len(alpha)
    for key in t.keys():
        if len(key) != k:
            raise ArityError(f"tensor key {key!r} has arity {len(key)}, expected {k}")
    return t.filter(lambda key: all(H.degree(x) == a for x, a in zip(key, alpha)))


# -- iterated structure maps --------------------------------------------------

def _iterated_coprod_key(H: HopfPresentation, key: Key, k: int) -> LinComb:
    def compute():
        if k == 0:
            return LinComb(H.ring, {(): H.counit(key)})
        if k == 1:
            return LinComb.monomial(H.ring, (key,))
        out = Accumulator(H.ring)
        for (a, b), c in H.coproduct(key).items():
            for t, d in _iterated_coprod_key(H, b, k - 1).items():
                out.add((a,) + t, c * d)
        return out.result()

    return H.memo("dk", (key, k), compute)


def iterated_coprod(H: HopfPresentation, f: LinComb, k: int) -> LinComb:
    """``Delta^(k-1)``, defined recursively as ``(id (x) Delta^(k-2)) o Delta``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = Accumulator(H.ring)
    for key, c in f.items():
        out.add_lc(_iterated_coprod_key(H, key, k), c)
    return out.result()


def _iterated_prod_key(H: HopfPresentation, t: tuple) -> LinComb:
    if len(t) == 0:
        return H.one()
    if len(t) == 1:
        return H.elem(t[0])

    def compute():
        rest = _iterated_prod_key(H, t[1:])
        out = Accumulator(H.ring)
        for b, c in rest.items():
            out.add_lc(H.product(t[0], b), c)
        return out.result()

    return H.memo("mk", t, compute)


def iterated_prod(H: HopfPresentation, t: LinComb) -> LinComb:
    """``m^(k-1)``: sends ``a1 (x) ... (x) ak`` to ``a1 ... ak``; ``k = 0`` is the unit map."""
    out = Accumulator(H.ring)
    for key, c in t.items():
        out.add_lc(_iterated_prod_key(H, key), c)
    return out.result()


# -- convolution ---------------------------------------------------------------

def linear(f: EndoMap, ring: CoefficientRing | None = None) -> Callable[[LinComb], LinComb]:
    """Linear extension of a basis map."""

    def apply(x: LinComb) -> LinComb:
        out = Accumulator(ring or x.ring)
        for k, c in x.items():
            out.add_lc(f(k), c)
        return out.result()

    return apply


def memoized(f: EndoMap) -> EndoMap:
    cache: dict = {}
    lock = threading.Lock()

    def g(key):
        with lock:
            if key in cache:
                return cache[key]
        val = f(key)
        with lock:
            cache.setdefault(key, val)
        return val

    return g


def convolve(H: HopfPresentation, f: EndoMap, g: EndoMap, A: HopfPresentation | None = None) -> EndoMap:
    """The convolution ``m_A o (f (x) g) o Delta_H`` of two basis maps ``H -> A``."""
    A = A or H

    def fg(key):
        out = Accumulator(A.ring)
        for (a, b), c in H.coproduct(key).items():
            fa = f(a)
            if not fa:
                continue
            gb = g(b)
            if not gb:
                continue
            out.add_lc(A.mul(fa, gb), c)
        return out.result()

    return memoized(fg)


def convolution_unit(H: HopfPresentation, A: HopfPresentation | None = None) -> EndoMap:
    """``u_A o eps_H``."""
    A = A or H
    return lambda key: A.one().scale(H.counit(key))


def convolve_many(H: HopfPresentation, maps: Sequence[EndoMap], A: HopfPresentation | None = None) -> EndoMap:
    if not maps:
        return convolution_unit(H, A)
    result = maps[-1]
    for f in reversed(maps[:-1]):
        result = convolve(H, f, result, A)
    return result


# -- antipode --------------------------------------------------------------------

def check_connected(H: HopfPresentation) -> None:
    deg0 = list(H.basis(0))
    if deg0 != [H.unit_key] or H.degree(H.unit_key) != 0:
        raise NotConnectedError(f"{H.name}: degree-0 part is not spanned by the unit")
    if H.ring.normalize(H.counit(H.unit_key)) != H.ring.one:
        raise NotConnectedError(f"{H.name}: counit of the unit is not 1")


def _antipode_key(H: HopfPresentation, key: Key) -> LinComb:
    def compute():
        n = H.degree(key)
        if n == 0:
            return H.elem(key).scale(H.counit(key))
        # sum S(a) b over Delta(key) = 0, and the (n, 0) part is key (x) 1
        out = Accumulator(H.ring)
        for (a, b), c in H.coproduct(key).items():
            if H.degree(a) < n:
                for s, cs in _antipode_key(H, a).items():
                    out.add_lc(H.product(s, b), -c * cs)
        return out.result()

    return H.memo("S", key, compute)


def generic_antipode(H: HopfPresentation, f: LinComb) -> LinComb:
    check_connected(H)
    out = Accumulator(H.ring)
    for key, c in f.items():
        out.add_lc(_antipode_key(H, key), c)
    return out.result()


# -- audit -------------------------------------------------------------------------

@dataclass
class Violation:
    law: str
    witnesses: tuple
    lhs: Any
    rhs: Any

    def __str__(self) -> str:
        return f"{self.law} fails at {self.witnesses!r}: {self.lhs!r} != {self.rhs!r}"


@dataclass
class AuditReport:
    name: str
    max_degree: int
    checked: dict = field(default_factory=dict)  # law -> number of instances
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def first_violation(self) -> Violation | None:
        return self.violations[0] if self.violations else None

    def __str__(self) -> str:
        lines = [f"audit {self.name} up to degree {self.max_degree}: {'pass' if self.passed else 'FAIL'}"]
        for law in sorted(self.checked):
            lines.append(f"  {law}: {self.checked[law]} checks")
        for v in self.violations:
            lines.append(f"  violation: {v}")
        return "\n".join(lines)


def _pairs(H: HopfPresentation, d: int):
    keys = H.basis_up_to(d)
    for a in keys:
        for b in keys:
            if H.degree(a) + H.degree(b) <= d:
                yield a, b


def audit_hopf(H: HopfPresentation, max_degree: int, antipode: bool = True) -> AuditReport:
    """Check the Hopf axioms on all basis keys (pairs, triples) up to ``max_degree``.

    Only the first violation of each law is recorded.
    """
    report = AuditReport(H.name, max_degree)
    failed: set = set()

    def check(law: str, witnesses: tuple, lhs, rhs) -> None:
        report.checked[law] = report.checked.get(law, 0) + 1
        if lhs != rhs and law not in failed:
            failed.add(law)
            report.violations.append(Violation(law, witnesses, lhs, rhs))

    ring = H.ring
    keys = H.basis_up_to(max_degree)

    try:
        check_connected(H)
        report.checked["connected"] = 1
    except NotConnectedError as exc:
        report.checked["connected"] = 1
        report.violations.append(Violation("connected", (H.unit_key,), str(exc), None))
        failed.add("connected")

    for a in keys:
        da = H.degree(a)
        x = H.elem(a)
        cop = H.coproduct(a)
        bad = [t for t in cop.keys() if H.degree(t[0]) + H.degree(t[1]) != da]
        check("grading/coproduct", (a,), bad, [])
        if da > 0:
            check("counit vanishes in positive degree", (a,), ring.normalize(H.counit(a)), ring.zero)
        left = LinComb(ring, ((t[1], c * H.counit(t[0])) for t, c in cop.items()))
        right = LinComb(ring, ((t[0], c * H.counit(t[1])) for t, c in cop.items()))
        check("counit (eps (x) id)Delta = id", (a,), left, x)
        check("counit (id (x) eps)Delta = id", (a,), right, x)
        lhs = LinComb(ring, ((t1 + (t[1],), c * c1)
                             for t, c in cop.items()
                             for t1, c1 in H.coproduct(t[0]).items()))
        rhs = LinComb(ring, (((t[0],) + t2, c * c2)
                             for t, c in cop.items()
                             for t2, c2 in H.coproduct(t[1]).items()))
        check("coassociativity", (a,), lhs, rhs)
        check("unit law", (a,), H.product(H.unit_key, a), x)
        check("unit law", (a,), H.product(a, H.unit_key), x)
        if H.cocommutative:
            check("cocommutativity", (a,), cop, cop.map_keys(lambda t: (t[1], t[0])))
        if antipode and "connected" not in failed:
            left, right = Accumulator(ring), Accumulator(ring)
            for (u, v), c in cop.items():
                left.add_lc(H.mul(generic_antipode(H, H.elem(u)), H.elem(v)), c)
                right.add_lc(H.mul(H.elem(u), generic_antipode(H, H.elem(v))), c)
            target = H.one().scale(H.counit(a))
            check("antipode S*id = u eps", (a,), left.result(), target)
            check("antipode id*S = u eps", (a,), right.result(), target)

    for a, b in _pairs(H, max_degree):
        p = H.product(a, b)
        bad = [k for k in p.keys() if H.degree(k) != H.degree(a) + H.degree(b)]
        check("grading/product", (a, b), bad, [])
        if H.commutative:
            check("commutativity", (a, b), p, H.product(b, a))
        check("counit multiplicative", (a, b),
              H.counit_of(p), ring.normalize(H.counit(a) * H.counit(b)))
        lhs = H.coprod(p)
        acc = Accumulator(ring)
        for (a1, a2), c in H.coproduct(a).items():
            for (b1, b2), d in H.coproduct(b).items():
                for x, cx in H.product(a1, b1).items():
                    for y, cy in H.product(a2, b2).items():
                        acc.add((x, y), c * d * cx * cy)
        check("bialgebra Delta(ab) = Delta(a)Delta(b)", (a, b), lhs, acc.result())

    for a, b in _pairs(H, max_degree):
        for c in keys:
            if H.degree(a) + H.degree(b) + H.degree(c) > max_degree:
                continue
            lhs = H.mul(H.product(a, b), H.elem(c))
            rhs = H.mul(H.elem(a), H.product(b, c))
            check("associativity", (a, b, c), lhs, rhs)

    return report

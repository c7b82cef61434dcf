"""Named verification suites.

Each suite returns a :class:`SuiteReport` of exact checks.  Reports are
deterministic: checks are sorted by name, random fixtures come from a seeded
generator, and the text rendering has no timing information.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable

from . import bernstein as bn
from . import qsym
from .compositions import EMPTY, Composition, coarsenings, compositions_of, compositions_up_to
from .hopf import HopfPresentation, audit_hopf, generic_antipode, ground, tensor_mul
from .instances import Character, characters_for, get_instance
from .lincomb import LinComb
from .oracle import expand_M, extract_M_coeffs, oracle_pairs, oracle_product
from .rings import ZZ, CoefficientRing, ModularRing, RationalRing


@dataclass
class Check:
    name: str
    count: int = 0
    failure: str | None = None

    @property
    def passed(self) -> bool:
        return self.failure is None


@dataclass
class SuiteReport:
    suite: str
    algebra: str
    ring: str
    max_degree: int
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def sorted_checks(self) -> list:
        return sorted(self.checks, key=lambda c: c.name)

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"suite {self.suite} algebra={self.algebra} ring={self.ring} "
                 f"max-degree={self.max_degree}: {status}"]
        for c in self.sorted_checks():
            mark = "ok  " if c.passed else "FAIL"
            line = f"  {mark} {c.name} ({c.count} cases)"
            if c.failure:
                line += f": {c.failure}"
            lines.append(line)
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "algebra": self.algebra,
            "ring": self.ring,
            "max_degree": self.max_degree,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "count": c.count, "passed": c.passed, "failure": c.failure}
                for c in self.sorted_checks()
            ],
        }

    def summary(self) -> tuple:
        """Ring-independent fingerprint: check names, counts and outcomes."""
        return tuple((c.name, c.count, c.passed) for c in self.sorted_checks())


class Recorder:
    def __init__(self, report: SuiteReport):
        self.report = report
        self.by_name: dict = {}

    def check(self, name: str, witness: Any, lhs: Any, rhs: Any) -> bool:
        c = self.by_name.get(name)
        if c is None:
            c = self.by_name[name] = Check(name)
            self.report.checks.append(c)
        c.count += 1
        ok = lhs == rhs
        if not ok and c.failure is None:
            c.failure = f"at {witness!r}: {lhs!r} != {rhs!r}"
        return ok

    def require(self, name: str, witness: Any, ok: bool, detail: str = "failed") -> bool:
        c = self.by_name.get(name)
        if c is None:
            c = self.by_name[name] = Check(name)
            self.report.checks.append(c)
        c.count += 1
        if not ok and c.failure is None:
            c.failure = f"at {witness!r}: {detail}"
        return bool(ok)


class SuiteUsageError(ValueError):
    pass


# -- algebra resolution -----------------------------------------------------------

@dataclass
class Algebra:
    H: HopfPresentation
    characters: list
    label: str


def resolve_algebra(spec: str, ring: CoefficientRing) -> Algebra:
    if spec.startswith("file:"):
        from .jsonio import load_presentation

        fp = load_presentation(spec[5:], ring)
        H = fp.presentation
        chars = [Character("counit", H.counit)] + fp.character_objects()
        return Algebra(H, chars, spec)
    try:
        H = get_instance(spec, ring)
    except ValueError as exc:
        raise SuiteUsageError(str(exc)) from None
    return Algebra(H, characters_for(H), spec)


def ring_label(ring: CoefficientRing) -> str:
    if isinstance(ring, ModularRing):
        return f"mod:{ring.modulus}"
    return ring.name


def _basis(H: HopfPresentation, d: int) -> list:
    return H.basis_up_to(d)


def _pairs(H: HopfPresentation, d: int) -> Iterable:
    keys = _basis(H, d)
    for a in keys:
        for b in keys:
            if H.degree(a) + H.degree(b) <= d:
                yield a, b


def _M(ring, g) -> LinComb:
    return LinComb.monomial(ring, g)


# -- suites ----------------------------------------------------------------------------

def suite_hopf_axioms(alg: Algebra, ring: CoefficientRing, d: int, rec: Recorder) -> None:
    H = alg.H
    audit = audit_hopf(H, d)
    failures = {v.law: str(v) for v in audit.violations}
    for law, n in audit.checked.items():
        c = Check(f"audit: {law}", n, failures.get(law))
        rec.report.checks.append(c)
    if H.name == "qsym":
        for g in compositions_up_to(d):
            x = _M(ring, g)
            rec.check("antipode: generic recursion = qsym_antipode", g,
                      generic_antipode(H, x), qsym.qsym_antipode(x))
            sign = (-1) ** len(g)
            closed = LinComb(ring, {c: sign for c in coarsenings(Composition(reversed(g)))})
            rec.check("antipode: closed coarsening formula", g, qsym.qsym_antipode(x), closed)


def suite_secondbialg(alg: Algebra, ring: CoefficientRing, d: int, rec: Recorder,
                      counit_degree: int | None = None) -> None:
    counit_degree = d if counit_degree is None else counit_degree
    for g in compositions_up_to(max(d, counit_degree)):
        x = _M(ring, g)
        dp = qsym.delta_P(x)
        if sum(g) <= counit_degree:
            left = LinComb(ring, ((k[1], c * qsym.eps_P(_M(ring, k[0]))) for k, c in dp.items()))
            right = LinComb(ring, ((k[0], c * qsym.eps_P(_M(ring, k[1]))) for k, c in dp.items()))
            rec.check("counit (eps_P (x) id) Delta_P = id", g, left, x)
            rec.check("counit (id (x) eps_P) Delta_P = id", g, right, x)
        if sum(g) > d:
            continue
        bad = [k for k in dp.keys() if sum(k[0]) != sum(g) or sum(k[1]) != sum(g)]
        rec.check("Delta_P degree diagonality", g, bad, [])
        lhs = LinComb(ring, ((t + (k[1],), c * e) for k, c in dp.items()
                             for t, e in qsym.delta_P(_M(ring, k[0])).items()))
        rhs = LinComb(ring, (((k[0],) + t, c * e) for k, c in dp.items()
                             for t, e in qsym.delta_P(_M(ring, k[1])).items()))
        rec.check("Delta_P coassociativity", g, lhs, rhs)
    rec.check("Delta_P(1) = 1 (x) 1", EMPTY, qsym.delta_P(qsym.one(ring)),
              LinComb.monomial(ring, (EMPTY, EMPTY)))
    Q = get_instance("qsym", ring)
    for a, b in _pairs(Q, d):
        prod = qsym.qsym_mul(_M(ring, a), _M(ring, b))
        rec.check("Delta_P multiplicative", (a, b), qsym.delta_P(prod),
                  tensor_mul(Q, Q, qsym.delta_P(_M(ring, a)), qsym.delta_P(_M(ring, b))))
        rec.check("eps_P multiplicative", (a, b), qsym.eps_P(prod),
                  ring.normalize(qsym.eps_P(_M(ring, a)) * qsym.eps_P(_M(ring, b))))


def suite_product_oracle(alg: Algebra, ring: CoefficientRing, d: int, rec: Recorder) -> None:
    for a, b in oracle_pairs(d):
        rec.check("M_a * M_b = truncated-polynomial oracle", (a, b),
                  qsym.qsym_mul(_M(ring, a), _M(ring, b)), oracle_product(a, b, ring))


def suite_oracle(alg: Algebra, ring: CoefficientRing, d: int, rec: Recorder) -> None:
    for g in compositions_up_to(d):
        n = max(sum(g), 1)
        rec.check("oracle round trip extract(expand(M_a))", g,
                  extract_M_coeffs(expand_M(g, n, ring)), _M(ring, g))
    suite_product_oracle(alg, ring, d, rec)


def suite_beta_eq_deltaP(alg: Algebra, ring: CoefficientRing, d: int, rec: Recorder) -> None:
    for g in compositions_up_to(d):
        rec.check("beta_QSym(M_g) = Delta'_P(M_g)", g,
                  bn.bernstein_on_qsym(g, ring), qsym.delta_P_prime(_M(ring, g)))


def _require_commutative(alg: Algebra) -> None:
    if not alg.H.commutative:
        raise SuiteUsageError(f"{alg.label} is not declared commutative")


def suite_bernstein_counit(alg: Algebra, ring: CoefficientRing, d: int, rec: Recorder) -> None:
    _require_commutative(alg)
    H = alg.H
    for k in _basis(H, d):
        h = H.elem(k)
        rec.check("(id (x) eps_P) beta_H = id", k, bn.counit_leg(bn.bernstein_map(H, h)), h)


def suite_bernstein_coaction(alg: Algebra, ring: CoefficientRing, d: int, rec: Recorder) -> None:
    _require_commutative(alg)
    H = alg.H
    for k in _basis(H, d):
        h = H.elem(k)
        rec.check("(beta_H (x) id) beta_H = (id (x) Delta'_P) beta_H", k,
                  bn.beta_then_beta(H, h), bn.beta_then_delta_P_prime(H, h))
        beta = bn.bernstein_map(H, h)
        bad = [key for key in beta.keys() if sum(key[1]) != H.degree(k) or H.degree(key[0]) != H.degree(k)]
        rec.check("beta_H graded", k, bad, [])


def suite_bernstein_algmorph(alg: Algebra, ring: CoefficientRing, d: int, rec: Recorder) -> None:
    _require_commutative(alg)
    H = alg.H
    Q = get_instance("qsym", ring)
    rec.check("beta_H(1) = 1 (x) M_()", H.unit_key, bn.bernstein_map(H, H.one()),
              LinComb.monomial(ring, (H.unit_key, EMPTY)))
    for a, b in _pairs(H, d):
        lhs = bn.bernstein_map(H, H.product(a, b))
        rhs = tensor_mul(H, Q, bn.bernstein_map(H, H.elem(a)), bn.bernstein_map(H, H.elem(b)))
        rec.check("beta_H(ab) = beta_H(a) beta_H(b)", (a, b), lhs, rhs)


def nonsymmetric_witness(ring: CoefficientRing, d: int):
    """Smallest ``M_g`` whose Bernstein image has a non-symmetric QSym leg."""
    for g in compositions_up_to(d):
        for h, leg in bn.legs(bn.bernstein_on_qsym(g, ring)).items():
            if not qsym.is_symmetric(leg):
                return g, h, leg
    return None


def suite_cocomm_lambda(alg: Algebra, ring: CoefficientRing, d: int, rec: Recorder) -> None:
    _require_commutative(alg)
    H = alg.H
    if not H.cocommutative:
        raise SuiteUsageError(f"{alg.label} is not declared cocommutative")
    for k in _basis(H, d):
        for h, leg in bn.legs(bn.bernstein_map(H, H.elem(k))).items():
            rec.require("QSym leg of beta_H is symmetric", (k, h), qsym.is_symmetric(leg),
                        f"leg {leg!r} is not symmetric")
    w = nonsymmetric_witness(ring, min(d, 4))
    rec.require("non-vacuity: some beta_QSym leg is not symmetric", "qsym", w is not None,
                "no non-symmetric leg found")


def suite_abs_morphism(alg: Algebra, ring: CoefficientRing, d: int, rec: Recorder,
                       identity_degree: int | None = None) -> None:
    H = alg.H
    identity_degree = d if identity_degree is None else identity_degree
    for zeta in alg.characters:
        tag = f"[{zeta.name}]"
        psi = lambda key, z=zeta: bn.abs_on_key(H, z, key)
        rec.check(f"{tag} zeta(1) = 1", H.unit_key, ring.normalize(zeta(H.unit_key)), ring.one)
        for a, b in _pairs(H, d):
            rec.check(f"{tag} zeta multiplicative", (a, b),
                      zeta.on(H, H.product(a, b)), ring.normalize(zeta(a) * zeta(b)))
        for k in _basis(H, d):
            img = psi(k)
            bad = [g for g in img.keys() if sum(g) != H.degree(k)]
            rec.check(f"{tag} Psi graded", k, bad, [])
            rec.check(f"{tag} eps_P o Psi = zeta", k, qsym.eps_P(img), ring.normalize(zeta(k)))
            acc: dict = {}
            for (x, y), c in H.coproduct(k).items():
                for g1, c1 in psi(x).items():
                    for g2, c2 in psi(y).items():
                        acc[(g1, g2)] = acc.get((g1, g2), 0) + c * c1 * c2
            rec.check(f"{tag} (Psi (x) Psi) Delta_H = Delta_QSym Psi", k,
                      LinComb(ring, acc), qsym.qsym_coprod(img))
            if H.cocommutative:
                rec.require(f"{tag} Psi lands in Lambda", k, qsym.is_symmetric(img),
                            f"Psi = {img!r} is not symmetric")
            if H.name == "qsym" and zeta.name == "eps_P" and H.degree(k) <= identity_degree:
                rec.check(f"{tag} Psi = id on QSym", k, img, H.elem(k))
        for a, b in _pairs(H, d):
            lhs = LinComb.zero(ring)
            for k, c in H.product(a, b).items():
                lhs = lhs + psi(k).scale(c)
            rhs = qsym.qsym_mul(psi(a), psi(b))
            rec.check(f"{tag} Psi(ab) = Psi(a) Psi(b)", (a, b), lhs, rhs)


def suite_antipode(alg: Algebra, ring: CoefficientRing, d: int, rec: Recorder) -> None:
    _require_commutative(alg)
    H = alg.H
    for k in _basis(H, d):
        h = H.elem(k)
        s = generic_antipode(H, h)
        rec.check("beta_H o S_H = (id (x) S_QSym) beta_H", k,
                  bn.bernstein_map(H, s), bn.qsym_leg_map(bn.bernstein_map(H, h), qsym.qsym_antipode))
        rec.check("S_H = (id (x) eps_P S_QSym) beta_H", k, bn.antipode_via_bernstein(H, h), s)
        rec.check("S_H^2 = id (H commutative)", k, generic_antipode(H, s), h)
        if H.name == "qsym":
            rec.check("generic antipode = qsym_antipode", k, s, qsym.qsym_antipode(h))


def random_element(H: HopfPresentation, d: int, rng: random.Random, max_terms: int = 3) -> LinComb:
    keys = _basis(H, d)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rng.choice(keys)] = rng.randint(-3, 3) or 1
    return LinComb(H.ring, terms)


def random_composition(d: int, rng: random.Random) -> Composition:
    return rng.choice(compositions_of(rng.randint(0, d)))


def suite_dual_route(alg: Algebra, ring: CoefficientRing, d: int, rec: Recorder,
                     samples: int = 200, seed: int = 0) -> None:
    H = alg.H
    rng = random.Random(seed)
    K = ground(ring)
    for i in range(samples):
        h = random_element(H, d, rng)
        # bias toward sizes that actually occur in h so the checks are not all zero
        if rng.random() < 0.75:
            n = H.degree(rng.choice(h.keys()))
            alpha = rng.choice(compositions_of(n))
        else:
            alpha = random_composition(d, rng)
        wit = (i, alpha)
        for zeta in alg.characters:
            z1 = bn.zeta_alpha(H, zeta, alpha, h)
            rec.check(f"zeta_alpha composite = convolution [{zeta.name}]", wit,
                      z1, bn.zeta_alpha_convolution(H, zeta, alpha, h))
            rec.check(f"xi_alpha_general(A=k) = zeta_alpha [{zeta.name}]", wit,
                      bn.xi_alpha_general(H, bn.character_as_map(zeta, ring), K, alpha, h).coeff(()), z1)
        if H.commutative:
            x1 = bn.xi_alpha(H, alpha, h)
            rec.check("xi_alpha composite = convolution", wit, x1, bn.xi_alpha_convolution(H, alpha, h))
            rec.check("xi_alpha_general(A=H, id) = xi_alpha", wit,
                      bn.xi_alpha_general(H, H.elem, H, alpha, h), x1)


def suite_ring_axioms(alg: Algebra, ring: CoefficientRing, d: int, rec: Recorder,
                      samples: int = 1000, seed: int = 0) -> None:
    rng = random.Random(seed)

    def sample():
        if isinstance(ring, RationalRing):
            return ring.normalize(Fraction(rng.randint(-50, 50), rng.randint(1, 20)))
        return ring.from_integer(rng.randint(-10**30, 10**30))

    z, o = ring.zero, ring.one
    rec.check("from_integer(0) = zero", 0, ring.from_integer(0), z)
    rec.check("from_integer(1) = one", 1, ring.from_integer(1), o)
    for _ in range(samples):
        a, b, c = sample(), sample(), sample()
        w = (a, b, c)
        rec.require("add associative", w, ring.eq(ring.add(ring.add(a, b), c), ring.add(a, ring.add(b, c))))
        rec.require("mul associative", w, ring.eq(ring.mul(ring.mul(a, b), c), ring.mul(a, ring.mul(b, c))))
        rec.require("add commutative", w, ring.eq(ring.add(a, b), ring.add(b, a)))
        rec.require("mul commutative", w, ring.eq(ring.mul(a, b), ring.mul(b, a)))
        rec.require("distributive", w, ring.eq(ring.mul(a, ring.add(b, c)),
                                               ring.add(ring.mul(a, b), ring.mul(a, c))))
        rec.require("units", w, ring.eq(ring.add(a, z), a) and ring.eq(ring.mul(a, o), a))
        rec.require("negation", w, ring.is_zero(ring.add(a, ring.neg(a))))


@dataclass(frozen=True)
class SuiteSpec:
    run: Callable
    default_algebra: str
    default_degree: int
    qsym_only: bool = False


SUITES: dict[str, SuiteSpec] = {
    "hopf-axioms": SuiteSpec(suite_hopf_axioms, "qsym", 8),
    "secondbialg": SuiteSpec(suite_secondbialg, "qsym", 6, qsym_only=True),
    "product-oracle": SuiteSpec(suite_product_oracle, "qsym", 8, qsym_only=True),
    "oracle": SuiteSpec(suite_oracle, "qsym", 8, qsym_only=True),
    "beta-eq-deltaP": SuiteSpec(suite_beta_eq_deltaP, "qsym", 6, qsym_only=True),
    "bernstein-counit": SuiteSpec(suite_bernstein_counit, "qsym", 8),
    "bernstein-coaction": SuiteSpec(suite_bernstein_coaction, "qsym", 6),
    "bernstein-algmorph": SuiteSpec(suite_bernstein_algmorph, "qsym", 8),
    "cocomm-lambda": SuiteSpec(suite_cocomm_lambda, "lambda", 8),
    "abs-morphism": SuiteSpec(suite_abs_morphism, "qsym", 8),
    "antipode": SuiteSpec(suite_antipode, "qsym", 8),
    "dual-route": SuiteSpec(suite_dual_route, "qsym", 8),
    "ring-axioms": SuiteSpec(suite_ring_axioms, "qsym", 0),
}


def run_suite(name: str, ring: CoefficientRing = ZZ, max_degree: int | None = None,
              algebra: str | None = None, **options) -> SuiteReport:
    try:
        spec = SUITES[name]
    except KeyError:
        raise SuiteUsageError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}") from None
    algebra = algebra or spec.default_algebra
    if spec.qsym_only and algebra != "qsym":
        raise SuiteUsageError(f"suite {name} only runs on qsym")
    d = spec.default_degree if max_degree is None else max_degree
    alg = resolve_algebra(algebra, ring)
    report = SuiteReport(name, algebra, ring_label(ring), d)
    spec.run(alg, ring, d, Recorder(report), **options)
    return report


def report_json(report: SuiteReport) -> str:
    return json.dumps(report.to_json(), indent=2, sort_keys=True)

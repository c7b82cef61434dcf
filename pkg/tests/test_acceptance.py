"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""
import time

import pytest

from qsymlab.compositions import compositions_up_to, format_composition
from qsymlab.oracle import oracle_pairs
from qsymlab.rings import QQ, ZZ, ModularRing
from qsymlab.suites import nonsymmetric_witness, run_suite


@pytest.fixture
def verdict(capsys):
    def emit(number, title, ok, started, limit=None):
        elapsed = time.perf_counter() - started
        within = limit is None or elapsed < limit
        status = "PASS" if ok and within else "FAIL"
        budget = f" (limit {limit}s)" if limit else ""
        with capsys.disabled():
            print(f"\n[acceptance {number:2d}] {status}: {title} in {elapsed:.1f}s{budget}")
        assert ok, f"criterion {number} failed"
        assert within, f"criterion {number} took {elapsed:.1f}s"

    return emit


def _names(report):
    return {c.name: c for c in report.checks}


def criterion_1(ring=ZZ):
    r = run_suite("product-oracle", ring, 6)
    pairs = sum(1 for _ in oracle_pairs(6))
    return r, r.passed and r.checks[0].count == pairs


def criterion_2(ring=ZZ):
    r = run_suite("hopf-axioms", ring, 6, "qsym")
    names = _names(r)
    required = [
        "audit: coassociativity",
        "audit: counit (eps (x) id)Delta = id",
        "audit: counit (id (x) eps)Delta = id",
        "audit: bialgebra Delta(ab) = Delta(a)Delta(b)",
        "audit: antipode S*id = u eps",
    ]
    return r, r.passed and all(names[n].count >= 64 for n in required)


def criterion_3(ring=ZZ):
    r = run_suite("secondbialg", ring, 5, counit_degree=6)
    names = _names(r)
    ok = (
        r.passed
        and names["Delta_P coassociativity"].count == len(compositions_up_to(5))
        and names["counit (id (x) eps_P) Delta_P = id"].count == len(compositions_up_to(6))
        and names["Delta_P multiplicative"].count > 0
    )
    return r, ok


def criterion_4(ring=ZZ):
    r = run_suite("beta-eq-deltaP", ring, 6)
    return r, r.passed and r.checks[0].count == len(compositions_up_to(6))


def criterion_5(ring=ZZ):
    reports = [
        run_suite("bernstein-counit", ring, 8, "poly"),
        run_suite("bernstein-counit", ring, 6, "qsym"),
        run_suite("bernstein-counit", ring, 6, "lambda"),
    ]
    return reports, all(r.passed for r in reports)


def test_criterion_01_product_oracle(verdict):
    t = time.perf_counter()
    _, ok = criterion_1()
    verdict(1, "product equals the polynomial oracle for all pairs of total degree <= 6", ok, t, 60)


def test_criterion_02_hopf_axioms(verdict):
    t = time.perf_counter()
    _, ok = criterion_2()
    verdict(2, "Hopf axioms of QSym on all basis elements of degree <= 6", ok, t, 120)


def test_criterion_03_internal_bialgebra(verdict):
    t = time.perf_counter()
    _, ok = criterion_3()
    verdict(3, "Delta_P coassociative and multiplicative to degree 5, eps_P counit to 6", ok, t, 300)


def test_criterion_04_bernstein_is_internal_coproduct(verdict):
    t = time.perf_counter()
    _, ok = criterion_4()
    verdict(4, "beta_QSym equals Delta'_P on every M_g with |g| <= 6", ok, t)


def test_criterion_05_bernstein_counit(verdict):
    t = time.perf_counter()
    _, ok = criterion_5()
    verdict(5, "(id (x) eps_P) beta_H = id: k[x] to 8, QSym and Lambda to 6", ok, t)


def test_criterion_06_coaction(verdict):
    t = time.perf_counter()
    ok = all(run_suite("bernstein-coaction", ZZ, 5, a).passed for a in ("poly", "qsym"))
    verdict(6, "(beta (x) id) beta = (id (x) Delta'_P) beta to degree 5 on k[x] and QSym", ok, t)


def test_criterion_07_algebra_morphism(verdict):
    t = time.perf_counter()
    reports = [run_suite("bernstein-algmorph", ZZ, 6, a) for a in ("poly", "qsym", "lambda")]
    ok = all(r.passed and r.checks[-1].count > 0 for r in reports)
    verdict(7, "beta_H(fg) = beta_H(f) beta_H(g) for pairs of total degree <= 6", ok, t)


def test_criterion_08_cocommutative_lands_in_lambda(verdict):
    t = time.perf_counter()
    reports = [run_suite("cocomm-lambda", ZZ, 8, a) for a in ("poly", "lambda")]
    witness = nonsymmetric_witness(ZZ, 4)
    ok = all(r.passed for r in reports) and witness is not None
    verdict(8, f"symmetric QSym legs for k[x] and Lambda to 8; QSym witness M{format_composition(witness[0])}", ok, t)


def test_criterion_09_antipode(verdict):
    t = time.perf_counter()
    ok = all(run_suite("antipode", ZZ, 6, a).passed for a in ("poly", "qsym"))
    verdict(9, "beta S = (id (x) S) beta and S = (id (x) eps_P S) beta to degree 6", ok, t)


def test_criterion_10_abs_morphism(verdict):
    t = time.perf_counter()
    ok = True
    for algebra in ("qsym", "poly", "lambda"):
        r = run_suite("abs-morphism", ZZ, 6, algebra, identity_degree=5)
        names = _names(r)
        ok &= r.passed
        # every stock character received every morphism check
        for kind in ("Psi graded", "eps_P o Psi = zeta", "(Psi (x) Psi) Delta_H = Delta_QSym Psi",
                     "Psi(ab) = Psi(a) Psi(b)"):
            ok &= sum(1 for n in names if n.endswith(kind)) >= 2
        if algebra in ("poly", "lambda"):
            ok &= any(n.endswith("Psi lands in Lambda") for n in names)
        if algebra == "qsym":
            ok &= names["[eps_P] Psi = id on QSym"].count == len(compositions_up_to(5))
    verdict(10, "Psi is a graded coalgebra and algebra morphism with eps_P Psi = zeta", ok, t)


def test_criterion_11_dual_routes(verdict):
    t = time.perf_counter()
    ok = True
    for algebra in ("qsym", "poly", "lambda"):
        r = run_suite("dual-route", ZZ, 6, algebra, samples=200)
        ok &= r.passed and all(c.count >= 200 for c in r.checks)
    verdict(11, "composite and convolution routes agree on 200 random fixtures per instance", ok, t)


def test_criterion_12_ring_independence(verdict):
    t = time.perf_counter()
    ok = True
    fingerprints = []
    for ring in (ZZ, QQ, ModularRing(7)):
        row = []
        for crit in (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5):
            reports, passed = crit(ring)
            ok &= passed
            reports = reports if isinstance(reports, list) else [reports]
            row.append(tuple(r.summary() for r in reports))
        fingerprints.append(tuple(row))
    ok &= len(set(fingerprints)) == 1
    verdict(12, "criteria 1-5 pass identically over Z, Q and Z/7", ok, t)

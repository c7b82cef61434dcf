from math import comb

import pytest

from qsymlab import qsym
from qsymlab.compositions import EMPTY, Composition
from qsymlab.errors import ArityError, NotConnectedError
from qsymlab.hopf import (
    HopfPresentation,
    audit_hopf,
    convolution_unit,
    convolve,
    generic_antipode,
    ground,
    iterated_coprod,
    iterated_prod,
    proj_alpha,
    proj_n,
    tensor_presentation,
)
from qsymlab.instances import get_instance, make_binomial
from qsymlab.lincomb import LinComb
from qsymlab.rings import QQ, ZZ, ModularRing

C = Composition


@pytest.mark.parametrize("name, degree", [("qsym", 5), ("poly", 8), ("lambda", 6)])
@pytest.mark.parametrize("ring", [ZZ, QQ, ModularRing(7)], ids=repr)
def test_stock_instances_pass_the_audit(name, degree, ring):
    report = audit_hopf(get_instance(name, ring), degree)
    assert report.passed, str(report)
    assert report.checked["coassociativity"] > 0


def test_ground_ring_audit():
    assert audit_hopf(ground(ZZ), 3).passed


def test_tensor_presentation_audit():
    P = make_binomial(ZZ)
    assert audit_hopf(tensor_presentation(P, P), 4).passed


def _broken_poly():
    """k[x] with Delta(x^n) = x^n (x) 1 for n >= 1: counitality fails."""
    P = make_binomial(ZZ)
    return HopfPresentation(
        name="broken",
        ring=ZZ,
        degree=P.degree,
        unit_key=0,
        product=P.product,
        coproduct=lambda n: LinComb(ZZ, {(n, 0): 1}),
        counit=P.counit,
        basis=P.basis,
        commutative=True,
    )


def test_audit_reports_first_counit_violation():
    report = audit_hopf(_broken_poly(), 3, antipode=False)
    assert not report.passed
    laws = [v.law for v in report.violations]
    assert "counit (eps (x) id)Delta = id" in laws
    v = next(v for v in report.violations if v.law == "counit (eps (x) id)Delta = id")
    assert v.witnesses == (1,)
    assert "counit (id (x) eps)Delta = id" not in laws


def test_not_connected_is_reported():
    P = make_binomial(ZZ)
    H = HopfPresentation("two-units", ZZ, P.degree, 0, P.product, P.coproduct, P.counit,
                         lambda n: [n, "y"] if n == 0 else [n])
    with pytest.raises(NotConnectedError):
        generic_antipode(H, H.one())


def test_iterated_coproduct_of_binomial():
    P = make_binomial(ZZ)
    t = iterated_coprod(P, P.elem(4), 3)
    # multinomial coefficients
    assert t.coeff((1, 2, 1)) == 12
    assert sum(c for _, c in t.items()) == 3 ** 4
    assert iterated_coprod(P, P.elem(4), 1) == LinComb(ZZ, {(4,): 1})
    assert iterated_coprod(P, P.elem(4), 0) == LinComb.zero(ZZ)
    assert iterated_coprod(P, P.one(), 0) == LinComb(ZZ, {(): 1})


def test_iterated_product_and_projection():
    Q = get_instance("qsym", ZZ)
    t = iterated_coprod(Q, Q.elem(C([1, 2, 1])), 2)
    assert proj_alpha(Q, t, (1, 3)) == LinComb(ZZ, {(C([1]), C([2, 1])): 1})
    with pytest.raises(ArityError):
        proj_alpha(Q, t, (1, 2, 1))
    assert iterated_prod(Q, LinComb(ZZ, {(C([1]), C([1])): 1})) == qsym.qsym_mul(qsym.M(1), qsym.M(1))
    assert iterated_prod(Q, LinComb(ZZ, {(): 3})) == qsym.one().scale(3)
    f = qsym.M(1) + qsym.M(1, 1) + qsym.M(3)
    assert proj_n(Q, f, 2) == qsym.M(1, 1)


def test_convolution_identities():
    P = make_binomial(ZZ)
    ident = P.elem
    u = convolution_unit(P)
    S = lambda k: generic_antipode(P, P.elem(k))
    for n in range(7):
        assert convolve(P, ident, u)(n) == P.elem(n)
        assert convolve(P, S, ident)(n) == u(n)
        # id * id doubles x: x^n -> 2^n x^n
        assert convolve(P, ident, ident)(n) == P.elem(n, 2 ** n)


def test_generic_antipode_on_binomial():
    P = make_binomial(ZZ)
    for n in range(6):
        assert generic_antipode(P, P.elem(n)) == P.elem(n, (-1) ** n)


@pytest.mark.parametrize("n", range(6))
def test_generic_antipode_matches_qsym_recursion(n):
    Q = get_instance("qsym", ZZ)
    for g in Q.basis(n):
        assert generic_antipode(Q, Q.elem(g)) == qsym.qsym_antipode(Q.elem(g))


def test_memo_is_shared():
    Q = get_instance("qsym", ZZ)
    calls = []
    Q.memo("test-table", 1, lambda: calls.append(1) or 5)
    assert Q.memo("test-table", 1, lambda: calls.append(1) or 6) == 5
    assert calls == [1]


def test_binomial_coproduct_coefficients():
    P = make_binomial(ZZ)
    assert P.coproduct(5).as_dict() == {(i, 5 - i): comb(5, i) for i in range(6)}
    assert P.elem(0) == P.one()
    assert qsym.qsym_coprod(qsym.M()) == LinComb(ZZ, {(EMPTY, EMPTY): 1})

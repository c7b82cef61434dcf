from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qsymlab import qsym
from qsymlab.compositions import EMPTY, Composition, coarsenings, compositions_up_to, rearrangements
from qsymlab.errors import ClosureError
from qsymlab.lincomb import LinComb
from qsymlab.rings import ZZ, ModularRing

from conftest import compositions

M = qsym.M
C = Composition


def elements(max_size=4):
    return st.dictionaries(compositions(max_size, 3), st.integers(-3, 3), max_size=3).map(
        lambda d: LinComb(ZZ, d)
    )


# -- product ----------------------------------------------------------------------

def test_small_products():
    assert qsym.qsym_mul(M(1), M(1)) == M(2) + M(1, 1).scale(2)
    assert qsym.qsym_mul(M(1), M(2)) == M(3) + M(1, 2) + M(2, 1)
    assert qsym.qsym_power(M(1), 3) == M(3) + M(1, 2).scale(3) + M(2, 1).scale(3) + M(1, 1, 1).scale(6)
    assert qsym.qsym_mul(M(), M(2, 1)) == M(2, 1)


@given(elements(), elements(), elements())
def test_product_is_associative_and_commutative(f, g, h):
    assert qsym.qsym_mul(f, g) == qsym.qsym_mul(g, f)
    assert qsym.qsym_mul(qsym.qsym_mul(f, g), h) == qsym.qsym_mul(f, qsym.qsym_mul(g, h))


@given(elements(), elements(), elements())
def test_product_distributes(f, g, h):
    assert qsym.qsym_mul(f, g + h) == qsym.qsym_mul(f, g) + qsym.qsym_mul(f, h)


def test_multiplicity_counts_overlapping_shuffles():
    # coefficient of M[1,1,1] in M[1]^3 counts the 3! orderings
    assert qsym.qsym_mul_many([M(1), M(1), M(1)]).coeff(C([1, 1, 1])) == 6


# -- coalgebra --------------------------------------------------------------------

def test_deconcatenation():
    t = qsym.qsym_coprod(M(1, 2))
    assert t == LinComb(ZZ, {(EMPTY, C([1, 2])): 1, (C([1]), C([2])): 1, (C([1, 2]), EMPTY): 1})
    assert qsym.qsym_counit(M()) == 1 and qsym.qsym_counit(M(1)) == 0


def test_iterated_coproduct_counts():
    # (k choose ... ) ways to cut a length-2 word into 3 consecutive pieces
    assert len(qsym.qsym_iterated_coprod(M(1, 2), 3)) == 6
    assert qsym.qsym_iterated_coprod(M(2), 0) == LinComb(ZZ, {(): 0})
    assert qsym.qsym_iterated_coprod(M(), 0) == LinComb(ZZ, {(): 1})


def test_eps_P():
    assert qsym.eps_P(M()) == 1
    assert qsym.eps_P(M(3)) == 1
    assert qsym.eps_P(M(1, 2)) == 0


# -- antipode ------------------------------------------------------------------------

def closed_antipode(alpha):
    sign = (-1) ** len(alpha)
    return LinComb(ZZ, {c: sign for c in coarsenings(C(reversed(alpha)))})


def test_antipode_examples():
    assert qsym.qsym_antipode(M(2)) == -M(2)
    assert qsym.qsym_antipode(M(1, 2)) == M(3) + M(2, 1)


@pytest.mark.parametrize("alpha", compositions_up_to(6), ids=str)
def test_antipode_closed_formula(alpha):
    assert qsym.qsym_antipode(M(*alpha)) == closed_antipode(alpha)


@given(elements(5))
def test_antipode_is_an_involution(f):
    assert qsym.qsym_antipode(qsym.qsym_antipode(f)) == f


@given(elements(3), elements(3))
def test_antipode_is_multiplicative(f, g):
    S = qsym.qsym_antipode
    assert S(qsym.qsym_mul(f, g)) == qsym.qsym_mul(S(f), S(g))


# -- internal coproduct ----------------------------------------------------------------

def test_internal_coproduct_of_two_ones():
    expected = LinComb(ZZ, {(C([2]), C([1, 1])): 1, (C([1, 1]), C([2])): 1, (C([1, 1]), C([1, 1])): 2})
    assert qsym.delta_P(M(1, 1)) == expected
    assert qsym.delta_P(M(1)) == LinComb(ZZ, {(C([1]), C([1])): 1})
    assert qsym.delta_P(M()) == LinComb(ZZ, {(EMPTY, EMPTY): 1})


def _expand_tensor(t, n):
    """Expand an element of QSym (x) QSym as a polynomial in x_1..x_n, y_1..y_n."""
    poly = {}
    for (a, b), c in t.items():
        for ia in combinations(range(n), len(a)):
            for ib in combinations(range(n), len(b)):
                ex, ey = [0] * n, [0] * n
                for i, p in zip(ia, a):
                    ex[i] = p
                for j, p in zip(ib, b):
                    ey[j] = p
                key = (tuple(ex), tuple(ey))
                poly[key] = poly.get(key, 0) + c
    return {k: v for k, v in poly.items() if v}


def _substituted(alpha, n):
    """``M_alpha`` on the alphabet ``x_i y_j``, pairs ordered lexicographically."""
    cells = list(product(range(n), range(n)))
    poly = {}
    for idx in combinations(range(len(cells)), len(alpha)):
        ex, ey = [0] * n, [0] * n
        for k, p in zip(idx, alpha):
            i, j = cells[k]
            ex[i] += p
            ey[j] += p
        key = (tuple(ex), tuple(ey))
        poly[key] = poly.get(key, 0) + 1
    return poly


@pytest.mark.parametrize("alpha", [a for a in compositions_up_to(3)] + [C([1, 1, 1, 1])], ids=str)
def test_internal_coproduct_is_substitution_into_product_alphabet(alpha):
    n = max(len(alpha), 1)
    assert _expand_tensor(qsym.delta_P(M(*alpha)), n) == _substituted(alpha, n)


def test_twist_swaps_legs():
    t = qsym.delta_P(M(1, 2))
    assert qsym.twist(qsym.twist(t)) == t
    assert qsym.delta_P_prime(M(1, 2)) == qsym.twist(t)


@pytest.mark.parametrize("alpha", compositions_up_to(4), ids=str)
def test_internal_coproduct_counit(alpha):
    x = M(*alpha)
    dp = qsym.delta_P(x)
    right = LinComb(ZZ, ((a, c * qsym.eps_P(M(*b))) for (a, b), c in dp.items()))
    left = LinComb(ZZ, ((b, c * qsym.eps_P(M(*a))) for (a, b), c in dp.items()))
    assert right == x and left == x


# -- symmetric functions -------------------------------------------------------------

def test_m_lambda_and_back():
    lam = C([2, 1])
    f = qsym.m_lambda(lam)
    assert f == LinComb(ZZ, {a: 1 for a in rearrangements(lam)})
    assert qsym.is_symmetric(f)
    assert qsym.to_m_basis(f) == LinComb(ZZ, {lam: 1})
    assert not qsym.is_symmetric(M(1, 2))
    with pytest.raises(ClosureError):
        qsym.to_m_basis(M(1, 2))
    with pytest.raises(ValueError):
        qsym.m_lambda([1, 2])


def test_modular_coefficients_reduce():
    R = ModularRing(2)
    assert qsym.qsym_mul(M(1, ring=R), M(1, ring=R)) == M(2, ring=R)

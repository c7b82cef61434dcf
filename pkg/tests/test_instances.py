import pytest

from qsymlab import qsym
from qsymlab.compositions import Composition, partitions_of
from qsymlab.instances import (
    characters_for,
    get_instance,
    lambda_to_qsym,
    make_instance,
    stock_characters,
)
from qsymlab.lincomb import LinComb
from qsymlab.rings import ZZ

C = Composition


def test_lambda_product_matches_qsym():
    L = get_instance("lambda", ZZ)
    assert L.product(C([1]), C([1])) == LinComb(ZZ, {C([2]): 1, C([1, 1]): 2})
    for a in partitions_of(2):
        for b in partitions_of(3):
            lhs = lambda_to_qsym(L.product(a, b))
            assert lhs == qsym.qsym_mul(qsym.m_lambda(a), qsym.m_lambda(b))


def test_lambda_coproduct_in_m_basis():
    L = get_instance("lambda", ZZ)
    # Delta(m_21) = m_21 (x) 1 + m_2 (x) m_1 + m_1 (x) m_2 + 1 (x) m_21
    E = C([])
    expected = {(C([2, 1]), E): 1, (C([2]), C([1])): 1, (C([1]), C([2])): 1, (E, C([2, 1])): 1}
    assert L.coproduct(C([2, 1])).as_dict() == expected


def test_lambda_basis_is_partitions():
    L = get_instance("lambda", ZZ)
    assert L.basis(4) == partitions_of(4)
    with pytest.raises(ValueError):
        L.key_from_json([1, 2])


def test_unknown_instance():
    with pytest.raises(ValueError):
        make_instance("nsym")


def test_instances_are_shared():
    assert get_instance("qsym", ZZ) is get_instance("qsym", ZZ)


def test_stock_characters_are_multiplicative():
    for H, zeta in stock_characters(ZZ):
        assert zeta(H.unit_key) == 1
        keys = H.basis_up_to(4)
        for a in keys:
            for b in keys:
                if H.degree(a) + H.degree(b) <= 4:
                    assert zeta.on(H, H.product(a, b)) == zeta(a) * zeta(b), (H.name, zeta.name, a, b)


def test_characters_for_each_instance():
    names = {H: [z.name for z in characters_for(get_instance(H, ZZ))] for H in ("qsym", "poly", "lambda")}
    assert names == {
        "qsym": ["counit", "eps_P"],
        "poly": ["counit", "zeta1", "zeta0"],
        "lambda": ["counit", "eps_P"],
    }


def test_formatting():
    assert get_instance("poly", ZZ).format_key(3) == "x^3"
    assert get_instance("qsym", ZZ).format_key(C([2, 1])) == "M[2,1]"
    assert get_instance("lambda", ZZ).format_key(C([])) == "m[]"

import json

import pytest

from qsymlab import qsym
from qsymlab.bernstein import bernstein_map
from qsymlab.hopf import audit_hopf
from qsymlab.instances import characters_for, get_instance
from qsymlab.jsonio import (
    FilePresentation,
    coaction_from_json,
    coaction_to_json,
    dumps,
    element_from_json,
    element_to_json,
    load_presentation,
    presentation_element_from_json,
    presentation_element_to_json,
    presentation_to_json,
)
from qsymlab.lincomb import LinComb
from qsymlab.rings import QQ, ZZ, ModularRing
from fractions import Fraction


def test_element_format():
    Q = get_instance("qsym", ZZ)
    f = qsym.M(2) + qsym.M(1, 1).scale(2)
    obj = presentation_element_to_json(Q, f)
    assert obj == {"ring": "int", "terms": [{"key": [2], "coeff": "1"}, {"key": [1, 1], "coeff": "2"}]}
    assert presentation_element_from_json(Q, obj) == f


@pytest.mark.parametrize("ring", [ZZ, QQ, ModularRing(7)], ids=repr)
def test_ring_is_preserved(ring):
    f = LinComb(ring, {1: Fraction(3) if ring is QQ else 3, 4: -1})
    back = element_from_json(json.loads(dumps(element_to_json(f))), int)
    assert back == f and back.ring == ring


def test_ring_mismatch_is_rejected():
    Q = get_instance("qsym", QQ)
    with pytest.raises(ValueError):
        presentation_element_from_json(Q, {"ring": "int", "terms": []})


def test_coaction_round_trip():
    P = get_instance("poly", ZZ)
    t = bernstein_map(P, P.elem(3))
    obj = coaction_to_json(P, t)
    assert obj["terms"][0] == {"h": 3, "q": [3], "coeff": "1"}
    assert coaction_from_json(P, obj) == t


def test_serialization_is_canonical():
    Q = get_instance("qsym", ZZ)
    a = qsym.M(1) + qsym.M(2, 1)
    b = qsym.M(2, 1) + qsym.M(1)
    assert dumps(element_to_json(a, list)) == dumps(element_to_json(b, list))


@pytest.mark.parametrize("name, degree", [("poly", 6), ("qsym", 4), ("lambda", 5)])
def test_presentation_round_trip(tmp_path, name, degree):
    H = get_instance(name, ZZ)
    chars = {z.name: z for z in characters_for(H) if z.name != "counit"}
    path = tmp_path / f"{name}.json"
    path.write_text(json.dumps(presentation_to_json(H, degree, chars)))
    loaded = load_presentation(path)
    G = loaded.presentation
    assert G.top_degree == degree
    assert audit_hopf(G, degree).passed
    assert [c.name for c in loaded.character_objects()] == sorted(chars)
    for k in H.basis_up_to(degree):
        jk = G.key_from_json(H.key_to_json(k))
        assert G.counit(jk) == H.counit(k)
        assert len(G.coproduct(jk)) == len(H.coproduct(k))


def test_products_above_the_top_degree_truncate():
    H = get_instance("poly", ZZ)
    G = FilePresentation(presentation_to_json(H, 3)).presentation
    assert G.product(2, 2) == LinComb.zero(ZZ)
    assert G.product(0, 3) == G.elem(3)


def test_missing_counit_defaults_to_unit():
    obj = presentation_to_json(get_instance("poly", ZZ), 2)
    del obj["counit"]
    G = FilePresentation(obj).presentation
    assert G.counit(0) == 1 and G.counit(1) == 0


def test_unknown_unit_rejected():
    obj = presentation_to_json(get_instance("poly", ZZ), 2)
    obj["unit"] = 99
    with pytest.raises(ValueError):
        FilePresentation(obj)

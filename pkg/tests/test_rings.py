import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qsymlab.rings import QQ, ZZ, ModularRing, ring_from_spec

RINGS = [ZZ, QQ, ModularRing(7), ModularRing(2), ModularRing(12)]


def _sample(ring, rng):
    if ring is QQ:
        return QQ.normalize(Fraction(rng.randint(-99, 99), rng.randint(1, 30)))
    return ring.from_integer(rng.randint(-10**20, 10**20))


@pytest.mark.parametrize("ring", RINGS, ids=repr)
def test_ring_axioms_on_random_triples(ring):
    rng = random.Random(12345)
    for _ in range(1000):
        a, b, c = (_sample(ring, rng) for _ in range(3))
        assert ring.eq(ring.add(ring.add(a, b), c), ring.add(a, ring.add(b, c)))
        assert ring.eq(ring.mul(ring.mul(a, b), c), ring.mul(a, ring.mul(b, c)))
        assert ring.eq(ring.add(a, b), ring.add(b, a))
        assert ring.eq(ring.mul(a, b), ring.mul(b, a))
        assert ring.eq(ring.mul(a, ring.add(b, c)), ring.add(ring.mul(a, b), ring.mul(a, c)))
        assert ring.eq(ring.add(a, ring.zero), a)
        assert ring.eq(ring.mul(a, ring.one), a)
        assert ring.is_zero(ring.sub(a, a))
        assert ring.eq(ring.neg(ring.neg(a)), a)


@pytest.mark.parametrize("ring", RINGS, ids=repr)
def test_string_round_trip(ring):
    rng = random.Random(7)
    for _ in range(200):
        a = _sample(ring, rng)
        assert ring.eq(ring.parse(ring.to_string(a)), a)


def test_modular_reduction_and_format():
    R = ModularRing(7)
    assert R.normalize(-1) == 6
    assert R.to_string(10) == "3 mod 7"
    assert R.parse("3 mod 7") == 3
    with pytest.raises(ValueError):
        R.parse("3 mod 5")
    assert R.inverse(3) * 3 % 7 == 1
    assert R.normalize(Fraction(1, 2)) == 4


def test_integer_ring_rejects_proper_fractions():
    with pytest.raises(ValueError):
        ZZ.normalize(Fraction(1, 2))
    assert ZZ.normalize(Fraction(4, 2)) == 2


def test_rational_inverse():
    assert QQ.inverse(Fraction(2, 3)) == Fraction(3, 2)
    with pytest.raises(ZeroDivisionError):
        QQ.inverse(0)


def test_ring_from_spec_forms():
    assert ring_from_spec("int") == ZZ
    assert ring_from_spec("rat") == QQ
    assert ring_from_spec("mod:7") == ModularRing(7)
    assert ring_from_spec({"mod": 7}) == ModularRing(7)
    assert ring_from_spec(ModularRing(3).to_json()) == ModularRing(3)
    assert ModularRing(7) != ModularRing(5)
    assert hash(ModularRing(7)) == hash(ModularRing(7))
    for bad in ("real", "mod:1", {"p": 3}):
        with pytest.raises(ValueError):
            ring_from_spec(bad)


@given(st.integers(), st.integers(), st.integers(2, 50))
def test_modular_from_integer_is_a_homomorphism(a, b, m):
    R = ModularRing(m)
    assert R.eq(R.from_integer(a * b), R.mul(R.from_integer(a), R.from_integer(b)))
    assert R.eq(R.from_integer(a + b), R.add(R.from_integer(a), R.from_integer(b)))

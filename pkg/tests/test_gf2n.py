import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vanishingflats import GF, FieldElement, kloosterman
from vanishingflats.gf2n import DEFAULT_MODULI


GF8 = GF(3, 0b1011)


def test_add_is_xor():
    assert GF8.add(0b011, 0b101) == 0b110
    for a in GF8.elements():
        assert GF8.add(a, 0) == a
        assert GF8.add(a, a) == 0


def test_mul_known_products():
    # x * x = x^2 (no reduction); x^2 * x = x^3 = x + 1 mod x^3 + x + 1
    assert GF8.mul(0b010, 0b010) == 0b100
    assert GF8.mul(0b100, 0b010) == 0b011
    for a in GF8.elements():
        assert GF8.mul(a, 1) == a


@pytest.mark.parametrize("n", range(2, 9))
def test_field_axioms_exhaustive(n):
    gf = GF(n)
    elems = list(gf.elements())
    sample = elems if n <= 4 else elems[:8] + elems[-8:]
    for a in sample:
        for b in sample:
            assert gf.mul(a, b) == gf.mul(b, a)
            for c in sample[:6]:
                assert gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c))
                assert gf.mul(gf.mul(a, b), c) == gf.mul(a, gf.mul(b, c))


@given(st.integers(min_value=0, max_value=255),
       st.integers(min_value=0, max_value=255),
       st.integers(min_value=0, max_value=255))
def test_distributivity_gf256(a, b, c):
    gf = GF(8)
    assert gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c))


def test_pow_conventions():
    gf = GF(5)
    assert gf.pow(0, 0) == 1
    assert gf.pow(0, 7) == 0
    for a in gf.elements():
        assert gf.pow(a, 1) == a
    alpha = gf.primitive_element()
    assert gf.pow(alpha, gf.order - 1) == 1


def test_inv():
    gf = GF(6)
    with pytest.raises(ZeroDivisionError):
        gf.inv(0)
    assert gf.inv(1) == 1
    for a in range(1, gf.order):
        assert gf.mul(a, gf.inv(a)) == 1
        assert gf.inv(a) == gf.pow(a, gf.order - 2)


def test_frobenius():
    gf = GF(6)
    for a in (0, 1, 5, 37, 63):
        assert gf.frobenius(a, 0) == a
        acc = a
        for _ in range(gf.n):
            acc = gf.frobenius(acc, 1)
        assert acc == a
    for a in range(0, gf.order, 7):
        for b in range(0, gf.order, 5):
            for i in range(gf.n):
                assert gf.frobenius(a ^ b, i) == gf.frobenius(a, i) ^ gf.frobenius(b, i)
                assert (gf.frobenius(gf.mul(a, b), i)
                        == gf.mul(gf.frobenius(a, i), gf.frobenius(b, i)))
    with pytest.raises(ValueError):
        gf.frobenius(1, 6)


@pytest.mark.parametrize("n", range(2, 11))
def test_multiplicative_group_cyclic(n):
    gf = GF(n)
    alpha = gf.primitive_element()
    seen = set()
    acc = 1
    for _ in range(gf.order - 1):
        seen.add(acc)
        acc = gf.mul(acc, alpha)
    assert acc == 1
    assert len(seen) == gf.order - 1


def test_primitive_element_smallest_and_deterministic():
    gf = GF(2, 0b111)
    assert gf.primitive_element() == 0b10
    assert GF(6).primitive_element() == GF(6).primitive_element()


def test_reducible_modulus_rejected():
    # x^4 + 1 = (x+1)^4 is reducible
    with pytest.raises(ValueError):
        GF(4, 0b10001).primitive_element()
    with pytest.raises(ValueError):
        GF(4, 0b101)  # wrong degree


def test_cube_root_of_unity():
    for n in (2, 4, 6, 8):
        gf = GF(n)
        z = gf.cube_root_of_unity()
        assert z != 1
        assert gf.pow(z, 3) == 1
        assert 1 ^ z ^ gf.mul(z, z) == 0
    gf2 = GF(2)
    assert gf2.cube_root_of_unity() == gf2.primitive_element()
    with pytest.raises(ValueError):
        GF(5).cube_root_of_unity()


def test_mul_log_table_agrees():
    for n in (3, 6, 8):
        gf = GF(n)
        for a in range(0, gf.order, 3):
            for b in range(0, gf.order, 5):
                assert gf.mul(a, b) == gf.mul_via_log(a, b)


def test_default_moduli_all_valid():
    for n, mod in DEFAULT_MODULI.items():
        gf = GF(n)
        assert gf.modulus == mod
        assert mod >> n == 1
        gf.primitive_element()  # raises if reducible


def test_kloosterman_values():
    assert kloosterman(6) == -8
    assert kloosterman(7) == -12
    for n in range(2, 17):
        assert isinstance(kloosterman(n), int)


def test_kloosterman_matches_direct_sum():
    # independent evaluation of the binomial sum with Fraction-free integers
    for n in range(2, 17):
        total = sum((-1) ** i * math.comb(n, 2 * i) * 7 ** i
                    for i in range(n // 2 + 1))
        num = (-1) ** (n - 1) * total
        assert num % (1 << (n - 1)) == 0
        assert kloosterman(n) == 1 + num // (1 << (n - 1))


def test_field_element_wrapper():
    gf = GF(4)
    a = gf.element(5)
    b = gf.element(9)
    assert int(a + b) == 5 ^ 9
    assert int(a * b) == gf.mul(5, 9)
    assert int(a ** 3) == gf.pow(5, 3)
    assert int(~a) == gf.inv(5)
    assert int(a / b) == gf.div(5, 9)
    other = GF(4, 0b11001).element(1)
    with pytest.raises(ValueError):
        a + other
    with pytest.raises(ValueError):
        a * other


def test_field_spec_serialization():
    gf = GF(7)
    assert GF.from_json(gf.to_json()) == gf
    assert gf.to_json() == {"n": 7, "modulus": 0b10000011}

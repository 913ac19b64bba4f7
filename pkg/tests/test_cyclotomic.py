import cmath
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from skeingram.cyclotomic import (
    CycNumber,
    RootOfUnity,
    conjugate,
    cyclotomic_polynomial,
    dumps,
    embed_root,
    euler_phi,
    invert,
    lift,
    to_complex,
)


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def random_element(rng, n, height=5):
    deg = euler_phi(n)
    return CycNumber(n, [Fraction(rng.randint(-height, height), rng.randint(1, 3)) for _ in range(deg)])


def elements(n):
    deg = euler_phi(n)
    coeff = st.fractions(min_value=-9, max_value=9, max_denominator=7)
    return st.lists(coeff, min_size=deg, max_size=deg).map(lambda c: CycNumber(n, c))


# --- cyclotomic polynomials -------------------------------------------------


@pytest.mark.parametrize(
    "n, expected",
    [(1, (-1, 1)), (2, (1, 1)), (6, (1, -1, 1)), (4, (1, 0, 1)), (12, (1, 0, -1, 0, 1))],
)
def test_small_cyclotomic_polynomials(n, expected):
    assert cyclotomic_polynomial(n) == expected


def test_product_over_divisors_is_x_n_minus_1():
    for n in range(1, 361):
        prod = [1]
        for d in range(1, n + 1):
            if n % d == 0:
                prod = poly_mul(prod, cyclotomic_polynomial(d))
        assert prod == [-1] + [0] * (n - 1) + [1], n
        assert len(cyclotomic_polynomial(n)) - 1 == euler_phi(n)


# --- roots of unity ----------------------------------------------------------


def test_embed_root_examples():
    assert embed_root(RootOfUnity(0, 120)) == 1
    assert embed_root(RootOfUnity(120, 120)) == 1
    assert embed_root(RootOfUnity(1, 6)).coeffs == (0, 1)
    i = embed_root(RootOfUnity(1, 4))
    assert i * i == -1


def test_embed_root_is_multiplicative():
    n = 120
    for a in range(0, n, 7):
        for b in range(0, n, 5):
            assert embed_root(RootOfUnity(a, n)) * embed_root(RootOfUnity(b, n)) == embed_root(
                RootOfUnity(a + b, n)
            )


def test_root_of_unity_group():
    r = RootOfUnity(78, 120)
    assert (r ** 3).exponent == 114
    assert (r * r.inverse()).is_one()
    assert (-RootOfUnity(0, 120)).exponent == 60
    assert RootOfUnity(114, 120).order == 20


# --- field operations --------------------------------------------------------


def test_add_negate_and_mismatched_orders():
    x = random_element(random.Random(1), 120)
    assert (x + (-x)).is_zero()
    with pytest.raises(ValueError):
        x + CycNumber.one(60)


@settings(max_examples=40, deadline=None)
@given(elements(60), elements(60), elements(60))
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x + y - y == x


def test_inverse_round_trip_n120():
    rng = random.Random(120)
    for _ in range(100):
        x = random_element(rng, 120)
        if x.is_zero():
            continue
        assert x * invert(x) == 1


def test_inverse_examples():
    assert invert(CycNumber.one(6)) == 1
    z6 = embed_root(RootOfUnity(1, 6))
    assert invert(z6) == embed_root(RootOfUnity(5, 6))
    assert invert(z6) == 1 - z6
    for e in (1, 17, 59):
        assert invert(embed_root(RootOfUnity(e, 120))) == embed_root(RootOfUnity(120 - e, 120))
    with pytest.raises(ZeroDivisionError):
        invert(CycNumber.zero(120))


def test_division_and_powers():
    rng = random.Random(7)
    x, y = random_element(rng, 84), random_element(rng, 84)
    assert (x / y) * y == x
    assert x ** -2 * x ** 2 == 1
    assert x ** 0 == 1


def test_conjugate():
    rng = random.Random(3)
    assert conjugate(CycNumber.one(120)) == 1
    assert conjugate(embed_root(RootOfUnity(7, 120))) == embed_root(RootOfUnity(-7, 120))
    for _ in range(20):
        x, y = random_element(rng, 120), random_element(rng, 120)
        assert conjugate(conjugate(x)) == x
        assert conjugate(x * y) == conjugate(x) * conjugate(y)


def test_lift_into_larger_field():
    x = random_element(random.Random(5), 20)
    y = random_element(random.Random(6), 20)
    assert lift(x * y, 120) == lift(x, 120) * lift(y, 120)
    assert lift(embed_root(RootOfUnity(3, 20)), 120) == embed_root(RootOfUnity(18, 120))


def test_equality_with_rationals_and_hash():
    half = CycNumber.from_int(120, Fraction(1, 2))
    assert half == Fraction(1, 2)
    assert hash(half) == hash(Fraction(1, 2))
    assert CycNumber.one(120) == 1 and CycNumber.zero(120) == 0


def test_json_round_trip():
    x = random_element(random.Random(11), 168)
    import json

    assert CycNumber.from_json(json.loads(dumps(x.to_json()))) == x


# --- floats ------------------------------------------------------------------


def test_to_complex_examples():
    assert to_complex(CycNumber.one(120)) == 1 + 0j
    assert abs(to_complex(embed_root(RootOfUnity(1, 4))) - 1j) < 1e-12
    with pytest.raises(ValueError):
        to_complex(CycNumber.one(120), root_choice=2)


def test_to_complex_respects_conjugation_and_ring_ops():
    rng = random.Random(9)
    for _ in range(30):
        x, y = random_element(rng, 120), random_element(rng, 120)
        s = to_complex(x + conjugate(x))
        assert abs(s.imag) <= 1e-9 * max(1, abs(s))
        assert abs(s.real - 2 * to_complex(x).real) <= 1e-9 * max(1, abs(s))
        prod, expect = to_complex(x * y), to_complex(x) * to_complex(y)
        assert abs(prod - expect) <= 1e-9 * max(1, abs(expect))


def test_to_complex_other_embeddings():
    x = embed_root(RootOfUnity(1, 120))
    assert abs(to_complex(x, root_choice=7) - cmath.exp(2j * cmath.pi * 7 / 120)) < 1e-12


def test_to_complex_keeps_relative_accuracy_under_cancellation():
    mu = embed_root(RootOfUnity(114, 120))
    d = (1 - mu) ** 60
    expect = (1 - cmath.exp(2j * cmath.pi * 114 / 120)) ** 60
    assert abs(to_complex(d) - expect) <= 1e-9 * abs(expect)

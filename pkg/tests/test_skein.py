import random

import pytest

from skeingram.cyclotomic import RootOfUnity, embed_root, invert
from skeingram.skein import (
    ConventionError,
    ParameterError,
    ScalarTable,
    SkeinElement,
    construct_params,
    e_to_z,
    hopf_kernel,
    hopf_pairing,
    kirby_color,
    loop_value,
    make_params,
    quantum_integer,
    skein_mul,
    twist,
    twist_eigenvalue,
    unknot_eval,
    z_to_e,
)


def random_skein(rng, n_order, degree, basis="z"):
    cs = []
    for _ in range(degree + 1):
        e = rng.randrange(n_order)
        cs.append(embed_root(RootOfUnity(e, n_order)) * rng.randint(-3, 3))
    return SkeinElement(basis, n_order, tuple(cs))


# --- parameters --------------------------------------------------------------


def test_p5_constants(p5):
    assert p5.n_order == 120
    assert p5.kappa_root.exponent == 78
    assert (p5.kappa_root ** 6).exponent == 108
    assert (p5.a_root ** (-21)).exponent == 108
    assert p5.kappa ** 3 == p5.mu
    assert p5.mu != 1
    assert p5.eta * unknot_eval(p5, kirby_color(p5)) == 1


def test_parameter_range():
    with pytest.raises(ParameterError):
        make_params(4)
    with pytest.raises(ParameterError):
        make_params(7, kappa_choice=6)


@pytest.mark.parametrize("p", range(5, 14))
def test_construction_checks_pass(p):
    params = construct_params(p)
    assert params.ok, params.failed_checks()
    names = [n for n, _ in params.checks]
    assert "G+ / G- == kappa^6" in names and "eta * U(omega) == 1" in names


@pytest.mark.parametrize("choice", range(6))
def test_every_kappa_choice_at_p7(choice):
    params = construct_params(7, choice)
    assert params.ok, params.failed_checks()
    assert (params.kappa_root ** 6) == (params.a_root ** (-6 - 28))


def test_make_params_raises_on_failed_identity(monkeypatch):
    import skeingram.skein as sk

    real = sk.construct_params

    def broken(p, kappa_choice=0):
        params = real(p, kappa_choice)
        object.__setattr__(params, "checks", params.checks + (("forced", False),))
        return params

    monkeypatch.setattr(sk, "construct_params", broken)
    with pytest.raises(ConventionError, match="forced"):
        sk.make_params(5)


def test_mu_subfield(p5):
    m, mu = p5.mu_subfield()
    assert m == 20
    assert mu ** 20 == 1 and mu ** 10 != 1


# --- scalars -----------------------------------------------------------------


def test_quantum_integers(p5):
    a2 = p5.a ** 2
    assert quantum_integer(p5, 0) == 0
    assert quantum_integer(p5, 1) == 1
    assert quantum_integer(p5, 2) == a2 + invert(a2)
    for n in range(-12, 13):
        assert quantum_integer(p5, -n) == -quantum_integer(p5, n)
        lhs = quantum_integer(p5, n) * (a2 - invert(a2))
        assert lhs == a2 ** n - invert(a2) ** n


def test_loop_values(p7):
    delta = -(p7.a ** 2) - invert(p7.a ** 2)
    assert loop_value(p7, 0) == 1
    assert loop_value(p7, 1) == delta
    for i in range(1, 3 * 7):
        assert loop_value(p7, i + 1) == delta * loop_value(p7, i) - loop_value(p7, i - 1)


def test_twist_eigenvalues_periodic():
    for p in range(5, 21):
        table = ScalarTable(p, RootOfUnity(12, 24 * p))
        for i in range(3 * p + 1):
            assert embed_root(table.twist_root(i)) ** (2 * p) == 1


# --- bases and products --------------------------------------------------------


def test_basis_examples():
    n = 120
    one = SkeinElement.one(n)
    assert e_to_z(SkeinElement.e(0, n)) == one
    assert e_to_z(SkeinElement.e(2, n)) == SkeinElement.z(2, n) - one
    assert z_to_e(SkeinElement.z(3, n)) == SkeinElement.e(3, n) + SkeinElement.e(1, n).scale(2)


def test_basis_round_trip():
    rng = random.Random(2)
    for deg in (0, 5, 17, 40):
        x = random_skein(rng, 120, deg)
        assert e_to_z(z_to_e(x)) == x
        y = random_skein(rng, 120, deg, basis="e")
        assert z_to_e(e_to_z(y)) == y


def test_skein_mul_examples():
    n = 120
    rng = random.Random(4)
    x = random_skein(rng, n, 6)
    assert skein_mul(SkeinElement.one(n), x) == x
    e1 = SkeinElement.e(1, n)
    assert skein_mul(e1, e1).equals(SkeinElement.e(2, n) + SkeinElement.e(0, n))
    assert skein_mul(SkeinElement.z(4, n), SkeinElement.z(7, n)).degree == 11


def test_power_matches_repeated_product():
    rng = random.Random(8)
    x = random_skein(rng, 120, 3)
    y = SkeinElement.one(120)
    for _ in range(5):
        y = y * x
    assert (x ** 5).equals(y)


# --- twist, Kirby color, evaluations ---------------------------------------------


def test_twist_examples(p5):
    n = p5.n_order
    e1 = SkeinElement.e(1, n)
    assert twist(p5, e1, 1) == e1.scale((-p5.a) ** 3)
    assert twist(p5, SkeinElement.e(0, n), 17) == SkeinElement.e(0, n)
    x = random_skein(random.Random(5), n, 12)
    assert twist(p5, x, 10).equals(x)


def test_twist_composition(p7):
    rng = random.Random(6)
    x = random_skein(rng, p7.n_order, 10)
    for a, b in [(1, 2), (-3, 5), (4, -4), (7, 9)]:
        assert twist(p7, twist(p7, x, a), b).equals(twist(p7, x, a + b))
    assert twist_eigenvalue(p7, 3, -2) * twist_eigenvalue(p7, 3, 2) == 1


def test_kirby_color(p5):
    omega = kirby_color(p5)
    assert omega.coeff(0) == p5.norm_c
    assert p5.eta * unknot_eval(p5, omega) == 1
    assert unknot_eval(p5, twist(p5, omega, 1)) == p5.mu
    assert unknot_eval(p5, twist(p5, omega, -1)) == p5.mu_inv
    for s in (-2, 1, 3):
        assert unknot_eval(p5, twist(p5, omega, 10 * s)) == unknot_eval(p5, omega)


def test_unknot_eval(p5):
    n = p5.n_order
    for i in range(8):
        assert unknot_eval(p5, SkeinElement.e(i, n)) == loop_value(p5, i)
    assert unknot_eval(p5, SkeinElement.z(2, n)) == p5.delta ** 2


def test_hopf_pairing(p5):
    n = p5.n_order
    rng = random.Random(10)
    y = random_skein(rng, n, 7)
    assert hopf_pairing(p5, SkeinElement.e(0, n), y) == unknot_eval(p5, y)
    assert hopf_pairing(p5, SkeinElement.e(1, n), SkeinElement.e(1, n)) == quantum_integer(p5, 4)
    assert hopf_kernel(p5, 2, 3) == -quantum_integer(p5, 12)
    for _ in range(5):
        x, y = random_skein(rng, n, 6), random_skein(rng, n, 9)
        assert hopf_pairing(p5, x, y) == hopf_pairing(p5, y, x)


@pytest.mark.parametrize("p", range(5, 14))
def test_kirby_color_encircling_observed(p):
    # With q = A^2 of order p, sum_j Delta_j H_ij is 2p([p | i+2] - [p | i]) up to a unit,
    # so omega kills e_1 .. e_{p-3} and e_{p-1} but not the top color e_{p-2}.
    params = make_params(p)
    omega = kirby_color(params)
    killed = [
        i for i in range(0, p)
        if hopf_pairing(params, omega, SkeinElement.e(i, params.n_order)).is_zero()
    ]
    print(f"p={p}: Hopf(omega, e_i) = 0 exactly for i in {killed}")
    assert killed == list(range(1, p - 2)) + [p - 1]

"""Normal ordering, star products, Kummer elements, cyclic norms.

Randomized cases are checked against the naive word-sorting oracle in
oracles.py, which shares nothing with the library's multiplication path.
"""

import random

import pytest

import oracles
from kummer.algebra import (
    AlgebraSpec,
    commutation_exponent,
    conjugation_exponent,
    cyclic_norm,
    is_kummer_element,
    monomial_str,
    mul_monomials,
    star_product,
)
from kummer.scalars import Cyclotomic, Laurent, alpha, beta


@pytest.fixture
def s1():
    return AlgebraSpec(3, 1)


@pytest.fixture
def s2():
    return AlgebraSpec(3, 2)


def test_spec_validation():
    with pytest.raises(ValueError):
        AlgebraSpec(4, 1)
    with pytest.raises(ValueError):
        AlgebraSpec(1, 1)
    with pytest.raises(ValueError):
        AlgebraSpec(3, 0)
    assert AlgebraSpec(3, 2).dimension == 81


def test_monomial_validation(s1):
    with pytest.raises(ValueError):
        s1.monomial((3, 0))
    with pytest.raises(ValueError):
        s1.monomial((0, -1))
    with pytest.raises(ValueError):
        s1.monomial((0, 0, 1))


def test_defining_relations(s1):
    x, y = s1.x(1), s1.y(1)
    assert x ** 3 == s1.alpha(1) * s1.one()
    assert y ** 3 == s1.beta(1) * s1.one()
    assert y * x == s1.rho(1) * (x * y)


def test_distant_slots_commute(s2):
    assert s2.x(1) * s2.y(2) == s2.y(2) * s2.x(1)
    assert s2.y(1) * s2.x(2) == s2.x(2) * s2.y(1)


def test_mul_monomials_with_carry(s1):
    # x^2 y * x^2 y^2 picks up a phase rho^2 and carries into alpha*beta
    phase, carry, cls = mul_monomials(s1, (2, 1), (2, 2))
    assert phase == Cyclotomic.rho(3) ** 2
    assert carry == alpha(3, 1, 1) * beta(3, 1, 1)
    assert cls == (1, 0)


def test_commutation_exponent_antisymmetric(s2):
    classes = [w for w in s2.monomial_classes()]
    rng = random.Random(11)
    for _ in range(200):
        u, v = rng.choice(classes), rng.choice(classes)
        e = commutation_exponent(s2, u, v)
        f = commutation_exponent(s2, v, u)
        assert (e + f) % 3 == 0


def test_commutation_exponent_is_the_swap_phase(s2):
    rng = random.Random(13)
    classes = [w for w in s2.monomial_classes() if any(w)]
    for _ in range(100):
        u_cls, v_cls = rng.choice(classes), rng.choice(classes)
        u, v = s2.monomial(u_cls), s2.monomial(v_cls)
        e = commutation_exponent(s2, u_cls, v_cls)
        assert u * v == s2.rho(e) * (v * u)


def test_conjugation_exponent_general_elements(s1):
    x, y = s1.x(1), s1.y(1)
    # y (x + xy) y^{-1} = rho (x + xy): both classes pick up the same phase
    assert conjugation_exponent(y, x + x * y) == 1
    # x twists y the opposite way: x y x^{-1} = rho^{-1} y
    assert conjugation_exponent(x, y + x * y) == 2
    # mixed classes that scale differently have no exponent
    assert conjugation_exponent(x, x + y) is None


def test_power_of_sum(s1):
    x, y = s1.x(1), s1.y(1)
    cube = (x + y) ** 3
    assert cube.is_scalar()
    assert cube.scalar_value() == alpha(3, 1, 1) + beta(3, 1, 1)


def test_star_products_frozen(s2):
    x1, y1, x2 = s2.x(1), s2.y(1), s2.x(2)
    assert star_product([x1, x2], (2, 1)) == 3 * (x1 * x1 * x2)
    assert star_product([x1, y1], (2, 1)) == s2.zero()
    z = s2.monomial((2, 2, 1, 0))
    star = star_product([x1, y1, z], (1, 1, 1))
    expected = s2.monomial((0, 0, 1, 0), (alpha(3, 2, 1) * beta(3, 2, 1)).scaled(
        Cyclotomic.rho(3)).scaled(-3))
    assert star == expected


def test_star_three_cycle_ratio(s1):
    # for a scalar 3-cycle x, y, xy the star is -3 rho^{-1} times the product
    x, y = s1.x(1), s1.y(1)
    z = s1.monomial((2, 2))
    star = star_product([x, y, z], (1, 1, 1))
    product = x * y * z
    assert star == s1.rho(-1) * (-3) * product


def test_star_degree_validation(s1):
    x = s1.x(1)
    with pytest.raises(ValueError):
        star_product([x], (0,))
    with pytest.raises(ValueError):
        star_product([x, x], (1,))
    with pytest.raises(ValueError):
        star_product([x], (-1, 2))


def test_multinomial_expansion(s1):
    # z^p expands into the star products weighted by coefficient powers
    x, y = s1.x(1), s1.y(1)
    c1, c2 = alpha(3, 1, 1), beta(3, 1, 1) + Laurent.one(3, 1)
    z = x.scale(c1) + y.scale(c2)
    total = s1.zero()
    for d1 in range(4):
        d2 = 3 - d1
        coeff = c1 ** d1 * c2 ** d2
        total = total + star_product([x, y], (d1, d2)).scale(coeff)
    assert z ** 3 == total


def test_is_kummer_element(s1, s2):
    x, y = s1.x(1), s1.y(1)
    assert is_kummer_element(x)
    assert is_kummer_element(x + y)
    assert is_kummer_element(s1.monomial((1, 2)))
    assert not is_kummer_element(s1.one() + x)
    assert not is_kummer_element(s1.one().scale(alpha(3, 1, 1)))
    assert not is_kummer_element(s1.zero())
    # x2 and y2 sit in the same factor, so their sum cubes to a scalar
    assert is_kummer_element(s2.x(2) + s2.y(2))
    # x1 and y2 commute: the cross terms of the cube survive
    assert not is_kummer_element(s2.x(1) + s2.y(2))


def test_monomial_str():
    assert monomial_str((0, 0)) == "1"
    assert monomial_str((2, 1)) == "x1^2 y1"
    assert monomial_str((1, 0, 0, 2)) == "x1 y2^2"


def test_cyclic_norm_frozen(s1):
    one = Laurent.one(3, 1)
    zero = Laurent.zero(3, 1)
    # N(1 + x) = (1+x)(1+rho x)(1+rho^2 x) = 1 + alpha
    assert cyclic_norm(s1, [one, one, zero], 1) == one + alpha(3, 1, 1)
    # N(x) = alpha
    assert cyclic_norm(s1, [zero, one, zero], 1) == alpha(3, 1, 1)


def test_cyclic_norm_multiplicative_in_samples(s2):
    rng = random.Random(3)
    for _ in range(20):
        f = [Laurent.constant(3, 2, rng.randint(-2, 2)) for _ in range(3)]
        g = [Laurent.constant(3, 2, rng.randint(-2, 2)) for _ in range(3)]
        if all(c.is_zero() for c in f) or all(c.is_zero() for c in g):
            continue
        # N(f)N(g) = N(fg) with fg reduced modulo x^3 = alpha
        h = [Laurent.zero(3, 2) for _ in range(3)]
        for i, fi in enumerate(f):
            for j, gj in enumerate(g):
                k, carry = (i + j) % 3, (i + j) // 3
                term = fi * gj
                if carry:
                    term = term * alpha(3, 2, 1)
                h[k] = h[k] + term
        lhs = cyclic_norm(s2, f, 1) * cyclic_norm(s2, g, 1)
        assert lhs == cyclic_norm(s2, h, 1)


def test_power_formula_small_case(s2):
    # (f(x_2) y_2 + v x_2^a)^3 = N(f) b2 + v^3 a2^a for v in the k=1 space
    f = [Laurent.one(3, 2), alpha(3, 2, 1), Laurent.zero(3, 2)]
    fy = sum(
        (s2.monomial((0, 0, j, 1), f[j]) for j in range(3)), s2.zero()
    )
    v = s2.x(1) + s2.y(1)
    a = 2
    z = fy + v * s2.monomial((0, 0, a, 0))
    lhs = z ** 3
    rhs_scalar = cyclic_norm(s2, f, 2) * beta(3, 2, 2) + (
        (v ** 3).scalar_value() * alpha(3, 2, 2, a)
    )
    assert lhs.is_scalar()
    assert lhs.scalar_value() == rhs_scalar


# -- oracle cross-checks ------------------------------------------------------


def test_multiplication_matches_oracle():
    rng = random.Random(421)
    for _ in range(200):
        p = rng.choice([2, 3, 3, 5])
        n = rng.choice([1, 1, 2])
        spec = AlgebraSpec(p, n)
        d1 = oracles.random_description(rng, p, n)
        d2 = oracles.random_description(rng, p, n)
        lib = oracles.build_element(spec, d1) * oracles.build_element(spec, d2)
        ref = oracles.to_element(
            spec, oracles.mul(oracles.build_naive(d1, p, n),
                              oracles.build_naive(d2, p, n), p, n)
        )
        assert lib == ref


def test_associativity_matches_oracle():
    rng = random.Random(5)
    spec = AlgebraSpec(3, 2)
    for _ in range(60):
        a, b, c = (
            oracles.build_element(spec, oracles.random_description(rng, 3, 2))
            for _ in range(3)
        )
        assert (a * b) * c == a * (b * c)


def test_star_matches_oracle():
    rng = random.Random(77)
    for _ in range(60):
        p = rng.choice([2, 3, 3])
        n = rng.choice([1, 2])
        spec = AlgebraSpec(p, n)
        m = rng.randint(1, 3)
        descs = [oracles.random_description(rng, p, n, max_terms=2) for _ in range(m)]
        degrees = [0] * m
        for _ in range(p):
            degrees[rng.randrange(m)] += 1
        lib = star_product([oracles.build_element(spec, d) for d in descs], degrees)
        ref = oracles.to_element(
            spec,
            oracles.star([oracles.build_naive(d, p, n) for d in descs],
                         degrees, p, n),
        )
        assert lib == ref


def test_power_matches_oracle():
    rng = random.Random(99)
    for _ in range(40):
        p = rng.choice([2, 3])
        spec = AlgebraSpec(p, 1)
        d = oracles.random_description(rng, p, 1)
        lib = oracles.build_element(spec, d) ** p
        ref = oracles.to_element(
            spec, oracles.power(oracles.build_naive(d, p, 1), p, p, 1)
        )
        assert lib == ref

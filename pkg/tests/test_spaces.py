"""Kummer-space verification, free lifts, and monomialization."""

import random

import pytest

import oracles
from kummer.algebra import AlgebraSpec, star_product
from kummer.scalars import Cyclotomic, Laurent, alpha, beta
from kummer.spaces import (
    FreeLift,
    MonomializationError,
    SpaceBasis,
    clear_denominators,
    degree_tuples,
    in_span,
    is_kummer_space,
    is_kummer_space_triples,
    leading_monomial,
    lift_to_polynomial,
    monomialize,
)


@pytest.fixture
def s1():
    return AlgebraSpec(3, 1)


@pytest.fixture
def s2():
    return AlgebraSpec(3, 2)


def test_degree_tuples_order_and_count():
    tuples = list(degree_tuples(3, 3))
    assert tuples[0] == (0, 0, 3)
    assert tuples[-1] == (3, 0, 0)
    assert len(tuples) == 10  # C(5, 2)
    assert all(sum(t) == 3 for t in tuples)
    assert tuples == sorted(tuples)


def test_basis_validation(s1):
    x, y = s1.x(1), s1.y(1)
    with pytest.raises(ValueError, match="dependent"):
        SpaceBasis(s1, [x, y, x + y])
    with pytest.raises(ValueError, match="scalar"):
        SpaceBasis(s1, [x, x + s1.one()])
    with pytest.raises(ValueError):
        SpaceBasis(s1, [x, s1.zero()])
    with pytest.raises(ValueError):
        SpaceBasis(s1, [s1.one()])
    with pytest.raises(ValueError):
        SpaceBasis(s1, [])


def test_basis_accepts_shifted_coefficients(s1):
    # same class twice is dependent even with different coefficients
    x = s1.x(1)
    with pytest.raises(ValueError, match="dependent"):
        SpaceBasis(s1, [x, x.scale(alpha(3, 1, 1))])


def test_in_span(s1):
    x, y = s1.x(1), s1.y(1)
    basis = SpaceBasis(s1, [x, y])
    assert in_span(basis, x)
    assert in_span(basis, x.scale(alpha(3, 1, 1)) - y)
    assert not in_span(basis, x * y)
    assert not in_span(basis, x + s1.one())
    assert in_span(basis, s1.zero())


def test_kummer_space_positive(s1):
    x, y = s1.x(1), s1.y(1)
    assert is_kummer_space(SpaceBasis(s1, [x, y]))
    assert is_kummer_space(SpaceBasis(s1, [x, y, x * y]))
    # basis-independence: this spans the same space as {x, y}
    assert is_kummer_space(SpaceBasis(s1, [x, x + y]))


def test_kummer_space_negative_witness_is_least(s2):
    vectors = [s2.x(1), s2.y(1), s2.monomial((2, 2, 1, 0))]
    verdict = is_kummer_space(SpaceBasis(s2, vectors))
    assert not verdict
    assert verdict.witness == (1, 1, 1)
    expected = s2.monomial((0, 0, 1, 0)).scale(
        (alpha(3, 2, 1) * beta(3, 2, 1)).scaled(Cyclotomic.rho(3)).scaled(-3)
    )
    assert verdict.star == expected


def test_kummer_space_rejects_nonmonomial_failure(s1):
    # xy and x^2y^2 commute, so this pair cannot span a Kummer space even
    # though both vectors are Kummer elements
    u = s1.x(1) + s1.monomial((1, 1))
    v = s1.monomial((2, 2))
    verdict = is_kummer_space(SpaceBasis(s1, [u, v]))
    assert not verdict
    assert verdict.witness == (1, 2)
    assert not verdict.star.is_scalar()


def test_triples_agrees_with_general(s1, s2):
    rng = random.Random(31)
    cases = []
    for _ in range(40):
        spec = rng.choice([s1, s2])
        classes = rng.sample(
            [w for w in spec.monomial_classes() if any(w)], rng.randint(2, 4)
        )
        cases.append((spec, [spec.monomial(w) for w in classes]))
    x, y = s1.x(1), s1.y(1)
    cases.append((s1, [x + y, x - y]))
    cases.append((s1, [x, x + y]))
    for spec, vectors in cases:
        basis = SpaceBasis(spec, vectors)
        full = is_kummer_space(basis)
        fast = is_kummer_space_triples(basis)
        assert bool(full) == bool(fast)
        if fast.witness is not None:
            # scan orders differ, so the witnesses need not coincide, but
            # the fast one must still be a genuine failure
            assert sum(fast.witness) == 3
            support = [i for i, d in enumerate(fast.witness) if d]
            star = star_product(
                [vectors[i] for i in support],
                [fast.witness[i] for i in support],
            )
            assert star == fast.star
            assert not star.is_scalar()


def test_triples_requires_p3():
    s = AlgebraSpec(5, 1)
    with pytest.raises(ValueError):
        is_kummer_space_triples(SpaceBasis(s, [s.x(1)]))


def test_p2_and_p5_spaces():
    s = AlgebraSpec(2, 1)
    assert is_kummer_space(SpaceBasis(s, [s.x(1), s.y(1)]))
    s5 = AlgebraSpec(5, 1)
    assert is_kummer_space(SpaceBasis(s5, [s5.x(1)]))
    # {x, y} is Kummer at every prime: the mixed fifth-power terms cancel
    assert is_kummer_space(SpaceBasis(s5, [s5.x(1), s5.y(1)]))
    # a commuting pair is not: xy and x^2 y^2 satisfy the zero-exponent test
    bad = is_kummer_space(
        SpaceBasis(s5, [s5.monomial((1, 1)), s5.monomial((2, 2))])
    )
    assert not bad
    assert sum(bad.witness) == 5


# -- lifts -------------------------------------------------------------------


def test_lift_round_trip(s1):
    z = s1.monomial((1, 2), alpha(3, 1, 1) * beta(3, 1, 1, 2) + Laurent.one(3, 1))
    lift = lift_to_polynomial(z)
    assert lift.to_element(s1) == z
    assert leading_monomial(lift) == (3 + 1, 6 + 2)


def test_lift_requires_cleared_denominators(s1):
    z = s1.monomial((1, 0), alpha(3, 1, 1, -1))
    with pytest.raises(ValueError, match="denominators"):
        lift_to_polynomial(z)
    cleared = clear_denominators(z)
    assert cleared == s1.x(1)


def test_clear_denominators_scales_uniformly(s1):
    z = s1.x(1).scale(alpha(3, 1, 1, -2)) + s1.y(1).scale(beta(3, 1, 1, -1))
    cleared = clear_denominators(z)
    lift = lift_to_polynomial(cleared)  # no exception: all exponents >= 0
    assert leading_monomial(lift) >= (0, 0)
    # clearing is a unit scaling, so spans are preserved
    assert in_span(SpaceBasis(s1, [z]), cleared)


def test_leading_monomial_orders_by_slot_priority(s1):
    z = s1.x(1) + s1.y(1)
    assert leading_monomial(lift_to_polynomial(z)) == (1, 0)
    w = s1.y(1) + s1.monomial((0, 2))
    assert leading_monomial(lift_to_polynomial(w)) == (0, 2)
    with pytest.raises(ValueError):
        leading_monomial(FreeLift(3, 1, {}))


# -- monomialization ----------------------------------------------------------


def test_monomialize_identity_on_monomial_basis(s1):
    basis = SpaceBasis(s1, [s1.x(1), s1.y(1)])
    assert sorted(monomialize(basis)) == [(0, 1), (1, 0)]


def test_monomialize_two_vectors(s1):
    x, y = s1.x(1), s1.y(1)
    out = monomialize(SpaceBasis(s1, [x + y, x]))
    assert sorted(out) == [(0, 1), (1, 0)]


def test_monomialize_rejects_non_kummer_input(s1):
    u = s1.x(1) + s1.monomial((1, 1))
    v = s1.monomial((2, 2))
    with pytest.raises(ValueError, match="witness"):
        monomialize(SpaceBasis(s1, [u, v]))


def test_monomialize_random_recombinations(s1, s2):
    from kummer.constructions import MaximalSpaceParams, build_maximal_space

    rng = random.Random(271)
    for spec, k in ((s1, 1), (s2, 2)):
        base = list(build_maximal_space(spec, MaximalSpaceParams([1, 1]), k))
        for _ in range(10):
            vectors = recombine(rng, spec, base)
            classes = monomialize(SpaceBasis(spec, vectors))
            assert len(classes) == len(base)
            assert len(set(classes)) == len(base)
            mono = SpaceBasis(spec, [spec.monomial(w) for w in classes])
            assert is_kummer_space(mono)


def recombine(rng, spec, vectors):
    """Invertible K-linear recombination: shuffle, scale, add multiples."""
    out = list(vectors)
    rng.shuffle(out)
    units = [
        Laurent.one(spec.p, spec.n),
        Laurent.constant(spec.p, spec.n, 2),
        Laurent.constant(spec.p, spec.n, Cyclotomic.rho(spec.p)),
        alpha(spec.p, spec.n, 1),
        alpha(spec.p, spec.n, 1, -1),
    ]
    for i in range(len(out)):
        out[i] = out[i].scale(rng.choice(units))
    for _ in range(len(out) + 2):
        i, j = rng.randrange(len(out)), rng.randrange(len(out))
        if i == j:
            continue
        c = rng.choice([1, -1, 2])
        out[i] = out[i] + out[j].scale(Laurent.constant(spec.p, spec.n, c))
    return out


def test_monomialize_with_denominators(s1):
    x, y = s1.x(1), s1.y(1)
    vectors = [
        x.scale(alpha(3, 1, 1, -1)) + y,
        y.scale(beta(3, 1, 1, -2)),
        s1.monomial((1, 1)),
    ]
    classes = monomialize(SpaceBasis(s1, vectors))
    assert sorted(classes) == [(0, 1), (1, 0), (1, 1)]


def test_monomialize_preserves_span(s1):
    x, y = s1.x(1), s1.y(1)
    vectors = [x + y, x - y]
    basis = SpaceBasis(s1, vectors)
    classes = monomialize(basis)
    for w in classes:
        assert in_span(basis, s1.monomial(w))


def test_star_scalar_iff_kummer_closure(s2):
    # spot check: every total-degree-p star over a verified space is scalar
    from kummer.constructions import MaximalSpaceParams, build_maximal_space

    basis = build_maximal_space(s2, MaximalSpaceParams([2, 1]), 2)
    assert is_kummer_space(basis)
    rng = random.Random(6)
    vectors = list(basis)
    for _ in range(25):
        picks = rng.sample(range(len(vectors)), 3)
        star = star_product([vectors[i] for i in picks], (1, 1, 1))
        assert star.is_scalar()

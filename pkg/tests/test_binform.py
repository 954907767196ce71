import random

import mpmath
import pytest

from hyperform.binform import (
    BinaryForm,
    InvalidTransform,
    NonSeparableError,
    Transform,
    act,
    curve_discriminant,
    discriminant,
    form_from_poly,
    format_form,
    format_poly,
    isomorphism_witness,
    make_form,
    parse_form,
    transform_discriminant_factor,
)
from hyperform.nfield import RATIONALS, FieldError, QuadField

from conftest import random_element, random_form

Q = RATIONALS


def _random_transform(field, rng, h=3):
    while True:
        T = Transform(*(random_element(field, rng, h) for _ in range(4)),
                      random_element(field, rng, h))
        if T.is_invertible():
            return T


def test_act_examples():
    F = make_form([1, 0, 0, 0, 0, 0, 1], Q)
    assert act(F, Transform.identity(Q)) == F
    assert act(F, Transform.make([[0, 1], [-1, 0]])) == F
    G = make_form([-1, 0, 0, 0, 0, 1, 0], Q)  # X^5 Z - Z^6
    H = act(G, Transform.make([[1, 1], [0, 1]]))
    assert H == make_form([0, 5, 10, 10, 5, 1, 0], Q)


def test_act_rejects_singular():
    F = make_form([1, 0, 0, 0, 0, 0, 1], Q)
    with pytest.raises(InvalidTransform):
        act(F, Transform.make([[1, 2], [2, 4]]))
    with pytest.raises(InvalidTransform):
        act(F, Transform.make([[1, 0], [0, 1]], 0))


@pytest.mark.parametrize("D", [None, 5])
def test_action_law(D):
    rng = random.Random(7)
    K = Q if D is None else QuadField(D)
    for _ in range(100):
        F = random_form(K, rng, n=rng.choice([5, 6]), h=4)
        T1, T2 = _random_transform(K, rng), _random_transform(K, rng)
        assert act(act(F, T1), T2) == act(F, T1.compose(T2))


def test_scalar_subgroup_acts_trivially(K5):
    rng = random.Random(3)
    for _ in range(30):
        F = random_form(K5, rng)
        mu = random_element(K5, rng) or K5(2)
        T = Transform(mu, K5.zero, K5.zero, mu, mu ** -6)
        assert act(F, T) == F


def test_discriminant_examples():
    G = make_form([-1, 0, 0, 0, 0, 1, 0], Q)
    assert discriminant(G) == 3125
    assert discriminant(make_form([0, -1, 1, 0], Q)) == 1  # X^2 Z - X Z^2
    T = Transform.make([[1, 0], [0, 2]], 1)
    assert discriminant(act(G, T)) == 2 ** 30 * 3125


def test_discriminant_non_separable():
    with pytest.raises(NonSeparableError):
        discriminant(make_form([0, 0, 0, 1], Q))  # X^3
    with pytest.raises(NonSeparableError):
        discriminant(make_form([1, 2, 1, 0, 0], Q))  # double root at infinity


def _numeric_disc(F, prec=200):
    cs = [c.as_fraction() for c in F.coeffs]
    n = F.degree
    while cs and cs[-1] == 0:
        cs.pop()
    m = len(cs) - 1
    if n - m >= 2:
        return mpmath.mpf(0)
    with mpmath.workprec(prec):
        lead = mpmath.mpf(cs[-1].numerator) / cs[-1].denominator
        roots = mpmath.polyroots([mpmath.mpf(c.numerator) / c.denominator for c in reversed(cs)],
                                 maxsteps=400, extraprec=prec)
        prod = mpmath.mpf(1)
        for i in range(m):
            for j in range(i + 1, m):
                prod *= (roots[i] - roots[j]) ** 2
        return mpmath.re(lead ** (2 * n - 2) * prod)


def test_discriminant_matches_root_oracle():
    rng = random.Random(11)
    done = 0
    while done < 100:
        n = rng.randint(3, 6)
        cs = [rng.randint(-20, 20) for _ in range(n + 1)]
        if rng.random() < 0.2:
            cs[-1] = 0
        F = make_form(cs, Q, n)
        try:
            d = F.discriminant()
        except (NonSeparableError, FieldError):
            assert abs(_numeric_disc(F)) < mpmath.mpf(10) ** -40
            continue
        approx = _numeric_disc(F)
        exact = d.as_fraction()
        assert abs(approx - exact.numerator) <= mpmath.mpf(10) ** -30 * max(1, abs(exact.numerator))
        assert exact.denominator == 1
        done += 1


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_eq1_scaling(n):
    rng = random.Random(n)
    for K in (Q, QuadField(5)):
        for _ in range(15):
            F = random_form(K, rng, n=n, h=4)
            T = _random_transform(K, rng)
            assert discriminant(act(F, T)) == transform_discriminant_factor(T, n) * discriminant(F)
            A_det, u = T.det(), T.u
            assert transform_discriminant_factor(T, n) == u ** (2 * (n - 1)) * A_det ** (n * (n - 1))


def test_curve_discriminant_examples():
    G = make_form([-1, 0, 0, 0, 0, 1, 0], Q)
    assert curve_discriminant(G) == 2 ** 8 * 5 ** 5
    F = form_from_poly("4x^5 - 30x^3 + 45x - 22", Q)
    assert curve_discriminant(F) == 2 ** 22 * 5 ** 5
    assert curve_discriminant(G.scale(3)) == 3 ** 10 * curve_discriminant(G)
    with pytest.raises(FieldError, match="no hyperelliptic interpretation"):
        curve_discriminant(make_form([-1, 0, 0, 0, 0, 1], Q))


def test_isomorphism_witness_examples():
    w = isomorphism_witness(Transform.identity(Q), 1)
    assert w.is_identity()
    w = isomorphism_witness(Transform.make([[1, 1], [0, 1]]), 1)
    assert w(Q(3), Q(7)) == (Q(4), Q(7))
    w = isomorphism_witness(Transform.make([[1, 0], [0, 1]], 4), 2)
    assert w(Q(3), Q(8)) == (Q(3), Q(4))
    with pytest.raises(InvalidTransform, match="twist"):
        isomorphism_witness(Transform.make([[1, 0], [0, 1]], 3), 2)


def test_isomorphism_witness_maps_points():
    # a rational point on C_{F.T} goes to a point on C_F
    F = make_form([4, 0, 0, 0, 0, 0, 1], Q)  # y^2 = x^6 + 4
    T = Transform.make([[2, 1], [1, 1]], 9)
    G = act(F, T)
    w = isomorphism_witness(T, 3)
    for x in range(0, 8):
        # y^2 = f_G(x) maps to Y^2 = f(X) with Y = v^-1 (cx+d)^-3 y
        y2 = G.evaluate(Q(x))
        X, Y = w(Q(x), Q(1))
        assert Y * Y * y2 == F.evaluate(X)


def test_form_identity_includes_degree():
    a = make_form([-1, 0, 0, 0, 0, 1], Q, 5)
    b = make_form([-1, 0, 0, 0, 0, 1, 0], Q, 6)
    assert a != b
    assert a.discriminant() == b.discriminant()


def test_serialisation_round_trip(K5):
    rng = random.Random(1)
    for _ in range(20):
        F = random_form(K5, rng)
        assert parse_form(format_form(F), K5) == F
        assert form_from_poly(format_poly(F), K5) == F
    F = parse_form("deg=6; poly=(1+a)x^6 - x^2 + (-3*a)*x + 1/2", K5)
    assert format_poly(F) == "(1+a)*x^6 - x^2 + (-3*a)*x + (1/2)"
    with pytest.raises(FieldError):
        parse_form("deg=6", K5)


def test_form_queries(K5):
    G = BinaryForm([K5(2), K5(0, 2), K5(4), K5(6)], K5)
    assert not G.is_primitive() and G.is_integral()
    assert G.genus == 0
    H = BinaryForm([K5(1, 0, 2)] + [K5(1)] * 6, K5)
    assert H.common_denominator() == 2 and not H.is_integral()

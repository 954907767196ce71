import math
import random

import mpmath
import pytest

from hyperform.nfield import (
    RATIONALS,
    FieldError,
    OkIdeal,
    QuadField,
    embed,
    fundamental_unit,
    ideal_conjugate,
    ideal_divides,
    ideal_from_generators,
    ideal_gcd,
    ideal_mul,
    ideal_norm,
    ideal_perfect_power_root,
    ideal_pow,
    ideals_of_norm,
    parse_element,
    parse_field,
    principal_ideal,
    split_rational_prime,
    unit_ideal,
)

FIELDS = [5, 8, 12, 13, 17]


def test_field_constants():
    for D, eps, c0 in [(5, 1, -1), (8, 0, -2), (12, 0, -3), (13, 1, -3), (17, 1, -4)]:
        K = QuadField(D)
        assert (K.eps, K.c0) == (eps, c0)
        a = K.gen
        assert (a * a + a * eps + c0).is_zero()


def test_element_normalisation():
    K = QuadField(5)
    e = K(4, 6, 8)
    assert (e.x, e.y, e.den) == (2, 3, 4)
    assert K(3, 0, -6) == K(-1, 0, 2)


def test_embed_examples():
    K = QuadField(5)
    vals, err = embed(K.one, 80)
    assert vals == (1, 1)
    vals, err = embed(K.gen, 80)
    assert err <= 2 ** -80
    with mpmath.workprec(200):
        s5 = mpmath.sqrt(5)
        assert abs(vals[0] - (-1 + s5) / 2) < 2 ** -80
        assert abs(vals[1] - (-1 - s5) / 2) < 2 ** -80
        v, _ = embed(K(1, 2, 3), 80)
        assert abs(v[0] - (1 + 2 * (-1 + s5) / 2) / 3) < 2 ** -80


def test_embed_bisection_oracle():
    # root of x^2 + x - 1 in [0, 1] by bisection
    lo, hi = mpmath.mpf(0), mpmath.mpf(1)
    with mpmath.workprec(120):
        for _ in range(110):
            mid = (lo + hi) / 2
            if mid * mid + mid - 1 > 0:
                hi = mid
            else:
                lo = mid
    vals, err = embed(QuadField(5).gen, 100)
    assert abs(vals[0] - lo) < 2 ** -95


def test_embed_respects_products():
    rng = random.Random(5)
    K = QuadField(13)
    for _ in range(1000):
        e = K(rng.randint(-99, 99), rng.randint(-99, 99), rng.randint(1, 9))
        f = K(rng.randint(-99, 99), rng.randint(-99, 99), rng.randint(1, 9))
        (e1, e2), er = embed(e, 60)
        (f1, f2), fr = embed(f, 60)
        (p1, p2), pr = embed(e * f, 60)
        with mpmath.workprec(200):
            bound = pr + er * abs(f1) + fr * abs(e1) + er * fr
            assert abs(p1 - e1 * f1) <= bound
            bound = pr + er * abs(f2) + fr * abs(e2) + er * fr
            assert abs(p2 - e2 * f2) <= bound


def test_small_embedding_not_lost_to_cancellation():
    K = QuadField(17)
    e = K(-36366223, 81081415)  # |second embedding| is tiny compared with the coordinates
    e1, e2 = e.embeddings_float()
    assert e1 * e2 == pytest.approx(float(e.norm()), rel=1e-12)
    assert e2 != 0


@pytest.mark.parametrize("D", FIELDS)
def test_norm_multiplicative_trace_additive(D):
    rng = random.Random(D)
    K = QuadField(D)
    for _ in range(200):
        e = K(rng.randint(-50, 50), rng.randint(-50, 50), rng.randint(1, 6))
        f = K(rng.randint(-50, 50), rng.randint(-50, 50), rng.randint(1, 6))
        assert (e * f).norm() == e.norm() * f.norm()
        assert (e + f).trace() == e.trace() + f.trace()
        if not e.is_zero():
            assert e * e.inverse() == K.one


def test_fundamental_unit_examples():
    K5 = QuadField(5)
    u = fundamental_unit(K5)
    a = K5.gen
    # a and 1/a = 1 + a generate the same group; either sign is fine
    assert u in (a, -a, a.inverse(), -a.inverse())
    assert a.norm() == -1
    K8 = QuadField(8)
    assert fundamental_unit(K8) == 1 + K8.gen
    with pytest.raises(FieldError, match="trivial unit group"):
        fundamental_unit(RATIONALS)


@pytest.mark.parametrize("D", FIELDS + [29, 41, 257])
def test_fundamental_unit_is_minimal(D):
    K = QuadField(D)
    u = fundamental_unit(K)
    assert abs(u.norm()) == 1 and u.is_integral()
    bound = max(abs(t) for t in u.embeddings_float())
    # any unit v with 1 < |phi_1(v)| < |phi_1(u)| has small coordinates
    a1, a2 = K.gen_float()
    ylim = int(2 * bound / abs(a1 - a2)) + 2
    for y in range(-ylim, ylim + 1):
        for x in range(-int(2 * bound) - 3 * ylim - 2, int(2 * bound) + 3 * ylim + 3):
            v = K(x, y)
            if abs(v.norm()) != 1:
                continue
            p1 = abs(x + y * a1)
            assert not (1 + 1e-9 < p1 < bound - 1e-9), (v, u)


def test_ideal_from_generators_examples():
    K5 = QuadField(5)
    A = ideal_from_generators([K5(2)])
    assert A.hnf == ((2, 0), (0, 2)) and A.norm() == 4
    assert ideal_from_generators([K5(1, 2)]).norm() == 5
    K17 = QuadField(17)
    assert ideal_from_generators([K17(2), K17(1, 1)]).norm() == 2
    with pytest.raises(FieldError, match="zero ideal"):
        ideal_from_generators([K5(0)])


def _closed_under_a(A: OkIdeal):
    K = A.field
    if K.is_rational:
        return True
    return all(A.contains(g * K.gen) for g in A.basis())


@pytest.mark.parametrize("D", FIELDS)
def test_hnf_invariants(D):
    rng = random.Random(D)
    K = QuadField(D)
    for _ in range(100):
        gens = [K(rng.randint(-30, 30), rng.randint(-30, 30)) for _ in range(rng.randint(1, 3))]
        if all(g.is_zero() for g in gens):
            continue
        A = ideal_from_generators(gens)
        (n, _), (t, s) = A.hnf
        assert 0 <= t < n and n % s == 0 and t % s == 0
        assert A.norm() == n * s
        assert _closed_under_a(A)
        assert all(A.contains(g) for g in gens)


def test_gcd_and_norm_examples():
    Q = RATIONALS
    assert ideal_gcd(OkIdeal(Q, 6), OkIdeal(Q, 4)) == OkIdeal(Q, 2)
    K5 = QuadField(5)
    P = principal_ideal(K5(1, 2))
    assert ideal_norm(ideal_mul(P, P)) == 25
    # (2a+1) is the ramified prime above 5, so (2a+1)^2 = (5)
    assert ideal_pow(P, 2) == principal_ideal(K5(5))
    assert ideal_gcd(ideal_pow(P, 2), principal_ideal(K5(5))).norm() == 25
    assert ideal_gcd(P, principal_ideal(K5(5))).norm() == 5


def test_gcd_is_greatest_common_divisor():
    K = QuadField(13)
    small = [B for m in range(1, 51) for B in ideals_of_norm(K, m)]
    rng = random.Random(13)
    for _ in range(40):
        A, B = rng.choice(small), rng.choice(small)
        G = ideal_gcd(A, B)
        assert ideal_divides(G, A) and ideal_divides(G, B)
        for C in small:
            if ideal_divides(C, A) and ideal_divides(C, B):
                assert ideal_divides(C, G)


@pytest.mark.parametrize("D", FIELDS)
def test_split_rational_prime_multiplies_back(D):
    import sympy

    K = QuadField(D)
    for p in sympy.primerange(2, 101):
        facs = split_rational_prime(p, K)
        prod = unit_ideal(K)
        for P, e in facs:
            prod = ideal_mul(prod, ideal_pow(P, e))
        assert prod == principal_ideal(K(p))


def test_split_rational_prime_examples():
    K5 = QuadField(5)
    (P, e), = split_rational_prime(5, K5)
    assert e == 2 and P.norm() == 5
    (P, e), = split_rational_prime(2, K5)
    assert e == 1 and P.norm() == 4
    facs = split_rational_prime(11, K5)
    assert [(P.norm(), e) for P, e in facs] == [(11, 1), (11, 1)]
    want = {principal_ideal(K5(2, 3)), principal_ideal(K5(1, 3))}
    assert {P for P, _ in facs} == want
    assert facs[0][0] == ideal_conjugate(facs[1][0])
    with pytest.raises(FieldError):
        split_rational_prime(6, K5)


def test_perfect_power_root_examples():
    Q = RATIONALS
    assert ideal_perfect_power_root(OkIdeal(Q, 8)) == (OkIdeal(Q, 2), 3)
    assert ideal_perfect_power_root(OkIdeal(Q, 6)) == (OkIdeal(Q, 6), 1)
    K5 = QuadField(5)
    P = principal_ideal(K5(2, 3))  # norm 11, split
    assert ideal_perfect_power_root(ideal_pow(P, 2)) == (P, 2)
    R = principal_ideal(K5(1, 2))
    assert ideal_perfect_power_root(ideal_pow(R, 2)) == (R, 2)


def test_perfect_power_root_is_certified():
    K = QuadField(17)
    rng = random.Random(2)
    for _ in range(50):
        A = ideal_from_generators([K(rng.randint(1, 40), rng.randint(-40, 40))])
        e = rng.randint(1, 4)
        B, k = ideal_perfect_power_root(ideal_pow(A, e))
        assert ideal_pow(B, k) == ideal_pow(A, e)
        assert k % e == 0 or k >= e or A.norm() == 1


def test_parse_element_and_field():
    K = QuadField(5)
    assert parse_element("(3+2*a)/1", K) == K(3, 2)
    assert parse_element("-5", K) == K(-5)
    assert parse_element("(1-a)/2", K) == K(1, -1, 2)
    for e in [K(3, 2), K(0, -1), K(1, 1, 2), K(7)]:
        assert parse_element(str(e), K) == e
    assert parse_field("Q").is_rational
    assert parse_field("D'=17") == QuadField(17)
    with pytest.raises(FieldError):
        parse_field("banana")


def test_rational_field_is_degree_one():
    Q = RATIONALS
    assert Q.degree == 1
    assert ideal_from_generators([Q(12), Q(18)]) == OkIdeal(Q, 6)
    assert math.isclose(float(Q(1, 0, 3)), 1 / 3)

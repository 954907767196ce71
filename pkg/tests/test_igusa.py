import itertools
import random

import mpmath
import pytest

from hyperform.binform import NonSeparableError, Transform, act, make_form
from hyperform.igusa import (
    AbsoluteIgusa,
    absolute_igusa,
    i6_from_prime,
    i6_prime,
    igusa_clebsch,
    reconstruct,
    same_geometric_class,
    same_weighted_point,
)
from hyperform.nfield import RATIONALS, FieldError, QuadField
from hyperform.tables import load_tables

from conftest import random_element, random_form

Q = RATIONALS


def _root_sums(F, prec=250):
    """Classical Igusa-Clebsch root sums, scaled so that I10 = 2^20 Delta."""
    cs = [c.as_fraction() for c in F.coeffs]
    with mpmath.workprec(prec):
        lead = mpmath.mpf(cs[6].numerator) / cs[6].denominator
        r = mpmath.polyroots([mpmath.mpf(c.numerator) / c.denominator for c in reversed(cs)],
                             maxsteps=500, extraprec=prec)

        def sq(i, j):
            return (r[i] - r[j]) ** 2

        idx = range(6)
        s2 = mpmath.mpf(0)
        for m in _matchings(list(idx)):
            s2 += mpmath.fprod(sq(i, j) for i, j in m)
        s4 = mpmath.mpf(0)
        s6 = mpmath.mpf(0)
        for A in itertools.combinations(idx, 3):
            if 0 not in A:
                continue
            B = tuple(i for i in idx if i not in A)
            tA = sq(A[0], A[1]) * sq(A[1], A[2]) * sq(A[2], A[0])
            tB = sq(B[0], B[1]) * sq(B[1], B[2]) * sq(B[2], B[0])
            s4 += tA * tB
            for perm in itertools.permutations(B):
                s6 += tA * tB * mpmath.fprod(sq(A[k], perm[k]) for k in range(3))
        s10 = mpmath.fprod(sq(i, j) for i, j in itertools.combinations(idx, 2))
        out = []
        for s, w in ((s2, 2), (s4, 4), (s6, 6), (s10, 10)):
            out.append(mpmath.re(s * lead ** w * 4 ** w))
        return out


def _matchings(items):
    if not items:
        yield []
        return
    a = items[0]
    for k in range(1, len(items)):
        rest = items[1:k] + items[k + 1:]
        for m in _matchings(rest):
            yield [(a, items[k])] + m


def test_matching_count():
    assert len(list(_matchings(list(range(6))))) == 15


def test_against_root_difference_oracle():
    rng = random.Random(4)
    for _ in range(15):
        F = random_form(Q, rng, h=9)
        ic = igusa_clebsch(F)
        num = _root_sums(F)
        for exact, approx in zip(ic.as_tuple(), num):
            e = exact.as_fraction()
            assert abs(approx - e) <= mpmath.mpf(10) ** -40 * max(1, abs(e))


def test_x5_minus_1():
    F = make_form([-1, 0, 0, 0, 0, 1, 0], Q)
    ic = igusa_clebsch(F)
    assert ic.I2 == 0 and ic.I4 == 0 and ic.I6 == 0
    assert ic.I10 == 2 ** 20 * 5 ** 5
    ai = absolute_igusa(ic)
    assert ai.as_tuple() == (0, 0, 0) and ai.degenerate


def test_degree5_input_is_embedded():
    F5 = make_form([-1, 0, 0, 0, 0, 1], Q, 5)
    F6 = make_form([-1, 0, 0, 0, 0, 1, 0], Q, 6)
    assert igusa_clebsch(F5) == igusa_clebsch(F6)
    with pytest.raises(FieldError):
        igusa_clebsch(make_form([1, 0, 0, 0, 0, 0, 0, 1], Q))
    with pytest.raises(NonSeparableError):
        igusa_clebsch(make_form([0, 0, 1, 0, 0, 0, 1], Q))


@pytest.mark.parametrize("D", [None, 5])
def test_covariance(D):
    rng = random.Random(8)
    K = Q if D is None else QuadField(D)
    for _ in range(40):
        F = random_form(K, rng, h=4)
        while True:
            T = Transform(*(random_element(K, rng, 3) for _ in range(5)))
            if T.is_invertible():
                break
        a = igusa_clebsch(F).as_tuple()
        b = igusa_clebsch(act(F, T)).as_tuple()
        for j, x, y in zip((2, 4, 6, 10), a, b):
            assert y == T.u ** j * T.det() ** (3 * j) * x


def test_i10_anchor():
    rng = random.Random(9)
    for _ in range(200):
        F = random_form(Q, rng, h=6)
        assert igusa_clebsch(F).I10 == 2 ** 20 * F.discriminant()


def test_i6_prime_round_trip(K5):
    rng = random.Random(10)
    for _ in range(20):
        ic = igusa_clebsch(random_form(K5, rng))
        p = i6_prime(ic.I2, ic.I4, ic.I6)
        assert p == ic.I6p
        assert i6_from_prime(ic.I2, ic.I4, p) == ic.I6


def test_absolute_invariants_constant_on_orbits():
    rng = random.Random(12)
    F = random_form(Q, rng, h=5)
    ai = absolute_igusa(igusa_clebsch(F))
    for _ in range(200):
        while True:
            T = Transform(*(random_element(Q, rng, 4) for _ in range(5)))
            if T.is_invertible():
                break
        assert absolute_igusa(igusa_clebsch(act(F, T))) == ai


def test_reconstruction(K5):
    rng = random.Random(13)
    for _ in range(20):
        ic = igusa_clebsch(random_form(K5, rng))
        if ic.I2.is_zero() or ic.I4.is_zero():
            continue
        ai = absolute_igusa(ic)
        assert reconstruct(ic.I2, ai) == ic
    with pytest.raises(FieldError):
        reconstruct(Q(0), AbsoluteIgusa(Q(1), Q(1), Q(1)))


def test_same_geometric_class_examples():
    rng = random.Random(14)
    F = random_form(Q, rng)
    T = Transform.make([[2, 1], [1, 3]], 5)
    assert same_geometric_class(F, act(F, T))
    rows = [r for r in load_tables() if r.dab == (5, 10, 20)]
    assert len(rows) == 2
    assert not same_geometric_class(rows[0].form(), rows[1].form())
    for _ in range(20):
        G = random_form(Q, rng)
        assert not same_geometric_class(F, G)


def test_same_weighted_point_handles_zeros():
    one, two = Q(1), Q(2)
    zero = Q(0)
    assert same_weighted_point((zero, zero, zero, one), (zero, zero, zero, two))
    assert not same_weighted_point((zero, one, zero, one), (zero, zero, zero, one))
    # mu = 2: (2, 4, 8, 32)
    assert same_weighted_point((one, one, one, one), (two, Q(4), Q(8), Q(32)))
    assert not same_weighted_point((one, one, one, one), (two, Q(4), Q(8), Q(31)))


def test_table_rows_pairwise_classes():
    rows = load_tables()
    by_dab = {}
    for r in rows:
        by_dab.setdefault((r.table_id, r.dab), []).append(r)
    for group in by_dab.values():
        if len(group) == 2:
            assert not same_geometric_class(group[0].form(), group[1].form())
        for r in group:
            K = r.field
            T = Transform(K.one, K(1) if K.is_rational else K(1, 1), K.zero, K.one, K(3))
            assert same_geometric_class(r.form(), act(r.form(), T))

"""Regenerate src/hyperform/_igusa_coeffs.py.

Each of I2, I4, I6 is a homogeneous isobaric polynomial in f0..f6.  We fix
the classical root-difference sums, evaluate them exactly on sextics with
integer roots, and interpolate the coefficient polynomial.  The result is
scaled by 4^j so that I10 = 2^20 * Delta(F).
"""

import itertools
import random
from pathlib import Path

import sympy


def pairings():
    # the 15 perfect matchings of {0..5}
    out = []

    def rec(rest, acc):
        if not rest:
            out.append(tuple(acc))
            return
        a = rest[0]
        for b in rest[1:]:
            rec([x for x in rest if x not in (a, b)], acc + [(a, b)])

    rec(list(range(6)), [])
    return out


def triple_splits():
    # 10 ways to split {0..5} into two unordered triples
    out = []
    for t in itertools.combinations(range(6), 3):
        if 0 in t:
            out.append((t, tuple(x for x in range(6) if x not in t)))
    return out


def i6_terms():
    # 60 terms: triangles (abc)(def) plus a matching between them
    out = []
    for t1, t2 in triple_splits():
        for perm in itertools.permutations(t2):
            out.append((t1, t2, tuple(zip(t1, perm))))
    return out


PAIRS, SPLITS, SIX = pairings(), triple_splits(), i6_terms()
assert len(PAIRS) == 15 and len(SPLITS) == 10 and len(SIX) == 60


def root_invariants(c, r):
    d = lambda i, j: (r[i] - r[j]) ** 2
    tri = lambda t: d(t[0], t[1]) * d(t[1], t[2]) * d(t[2], t[0])
    A = sum(d(*p[0]) * d(*p[1]) * d(*p[2]) for p in PAIRS) * c ** 2
    B = sum(tri(a) * tri(b) for a, b in SPLITS) * c ** 4
    C = 0
    for a, b, m in SIX:
        C += tri(a) * tri(b) * d(*m[0]) * d(*m[1]) * d(*m[2])
    C *= c ** 6
    return A, B, C


def coeffs_from_roots(c, r):
    x = sympy.symbols("x")
    p = sympy.Poly(c * sympy.prod([x - ri for ri in r]), x)
    cs = p.all_coeffs()[::-1]
    return [int(v) for v in cs]


def monomials(deg):
    # exponent vectors e with sum e = deg and sum i*e_i = 3*deg
    out = []

    def rec(i, left, weight, acc):
        if i == 6:
            if weight + 6 * left == 3 * deg:
                out.append(tuple(acc + [left]))
            return
        for k in range(left + 1):
            rec(i + 1, left - k, weight + i * k, acc + [k])

    rec(0, deg, 0, [])
    return out


def interpolate(idx, deg, rng):
    mons = monomials(deg)
    rows, rhs = [], []
    while len(rows) < len(mons) + 10:
        r = rng.sample(range(-12, 13), 6)
        c = rng.choice([1, 2, 3, -1, 5])
        f = coeffs_from_roots(c, r)
        val = root_invariants(c, r)[idx]
        rows.append([sympy.prod([f[i] ** e[i] for i in range(7)]) for e in mons])
        rhs.append(val)
    M = sympy.Matrix(rows)
    sol, params = M.gauss_jordan_solve(sympy.Matrix(rhs))
    assert params.shape[0] == 0, "samples do not pin the polynomial"
    scale = 4 ** deg
    return [(int(v * scale), e) for v, e in zip(sol, mons) if v != 0]


def main():
    rng = random.Random(2)
    out = ['"""Generated by tools/gen_igusa.py; do not edit."""', ""]
    for name, idx, deg in (("I2", 0, 2), ("I4", 1, 4), ("I6", 2, 6)):
        terms = interpolate(idx, deg, rng)
        out.append(f"{name} = (")
        for c, e in terms:
            out.append(f"    ({c}, {e}),")
        out.append(")")
        out.append("")
    path = Path(__file__).resolve().parents[1] / "src" / "hyperform" / "_igusa_coeffs.py"
    path.write_text("\n".join(out))
    print("wrote", path)


if __name__ == "__main__":
    main()

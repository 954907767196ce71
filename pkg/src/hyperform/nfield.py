"""Exact arithmetic in Q and in real quadratic fields Q(a).

The generator ``a`` is a root of ``x^2 + eps*x + (eps - D')/4`` with
``eps = D' mod 4``, so that ``Z[a]`` is the ring of integers.  Elements are
stored as ``(x + y*a)/den`` on the integral basis ``{1, a}``; ideals are
stored in Hermite normal form on the same basis.
"""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import product

import gmpy2
import mpmath


class FieldError(ValueError):
    pass


class QuadField:
    """Q (``disc=None``) or the real quadratic field of discriminant ``disc``."""

    __slots__ = ("disc", "eps", "c0", "_sqrt_cache")

    def __init__(self, disc: int | None = None):
        if disc is not None:
            disc = int(disc)
            if disc <= 1:
                raise FieldError(f"D' must be > 1, got {disc}")
            if disc % 4 not in (0, 1):
                raise FieldError(f"D' = {disc} is not 0 or 1 mod 4")
            if gmpy2.is_square(disc):
                raise FieldError(f"D' = {disc} is a square")
            self.eps = disc % 4
            self.c0 = (self.eps - disc) // 4
        else:
            self.eps = 0
            self.c0 = 0
        self.disc = disc
        self._sqrt_cache = {}

    @classmethod
    def rational(cls) -> "QuadField":
        return cls(None)

    @property
    def degree(self) -> int:
        return 1 if self.disc is None else 2

    @property
    def is_rational(self) -> bool:
        return self.disc is None

    def __eq__(self, other):
        return isinstance(other, QuadField) and self.disc == other.disc

    def __hash__(self):
        return hash(("QuadField", self.disc))

    def __repr__(self):
        return "QuadField(Q)" if self.disc is None else f"QuadField(D'={self.disc})"

    def __str__(self):
        return "Q" if self.disc is None else f"D'={self.disc}"

    # element constructors
    def __call__(self, x=0, y=0, den=1) -> "FieldElement":
        return FieldElement(self, x, y, den)

    def coerce(self, v) -> "FieldElement":
        if isinstance(v, FieldElement):
            if v.field != self:
                raise FieldError(f"element of {v.field} used in {self}")
            return v
        if isinstance(v, int):
            return FieldElement(self, v, 0, 1)
        try:
            from fractions import Fraction

            fr = Fraction(v)
        except (TypeError, ValueError):
            raise TypeError(f"cannot coerce {v!r} into {self}") from None
        return FieldElement(self, fr.numerator, 0, fr.denominator)

    @property
    def zero(self):
        return FieldElement(self, 0, 0, 1)

    @property
    def one(self):
        return FieldElement(self, 1, 0, 1)

    @property
    def gen(self):
        if self.is_rational:
            raise FieldError("the rational field has no quadratic generator")
        return FieldElement(self, 0, 1, 1)

    def integral_basis(self):
        return [self.one] if self.is_rational else [self.one, self.gen]

    # real embeddings of the generator
    def sqrt_disc_scaled(self, bits: int) -> int:
        """floor(sqrt(D') * 2**bits)."""
        if bits not in self._sqrt_cache:
            self._sqrt_cache[bits] = int(gmpy2.isqrt(self.disc << (2 * bits)))
        return self._sqrt_cache[bits]

    def gen_embeddings(self, prec: int = 53):
        """The two real roots of the generator's minimal polynomial, larger first."""
        with mpmath.workprec(prec + 10):
            s = mpmath.sqrt(self.disc)
            return ((-self.eps + s) / 2, (-self.eps - s) / 2)

    def gen_float(self):
        s = math.sqrt(self.disc)
        return ((-self.eps + s) / 2, (-self.eps - s) / 2)


RATIONALS = QuadField(None)


class FieldElement:
    """Immutable ``(x + y*a)/den`` with ``gcd(x, y, den) = 1`` and ``den > 0``."""

    __slots__ = ("field", "x", "y", "den")

    def __init__(self, field: QuadField, x=0, y=0, den=1):
        x, y, den = int(x), int(y), int(den)
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if field.disc is None and y != 0:
            raise FieldError("rational element with nonzero a-coordinate")
        if den < 0:
            x, y, den = -x, -y, -den
        if den != 1:
            g = math.gcd(math.gcd(x, y), den)
            if g != 1:
                x //= g
                y //= g
                den //= g
        self.field = field
        self.x = x
        self.y = y
        self.den = den

    @classmethod
    def _raw(cls, field, x, y, den):
        e = object.__new__(cls)
        e.field = field
        e.x = x
        e.y = y
        e.den = den
        return e

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def __bool__(self):
        return not self.is_zero()

    def is_integral(self) -> bool:
        return self.den == 1

    def is_rational(self) -> bool:
        return self.y == 0

    def is_unit(self) -> bool:
        return self.den == 1 and not self.is_zero() and abs(self.norm()) == 1

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldError("elements of different fields")
            return other
        if isinstance(other, int):
            return FieldElement._raw(self.field, other, 0, 1)
        return self.field.coerce(other)

    def __add__(self, other):
        o = self._coerce(other)
        if self.den == o.den == 1:
            return FieldElement._raw(self.field, self.x + o.x, self.y + o.y, 1)
        d = self.den * o.den
        return FieldElement(self.field, self.x * o.den + o.x * self.den,
                            self.y * o.den + o.y * self.den, d)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement._raw(self.field, -self.x, -self.y, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        f = self.field
        if f.disc is None:
            x, y = self.x * o.x, 0
        else:
            yy = self.y * o.y
            x = self.x * o.x - f.c0 * yy
            y = self.x * o.y + o.x * self.y - f.eps * yy
        if self.den == o.den == 1:
            return FieldElement._raw(f, x, y, 1)
        return FieldElement(f, x, y, self.den * o.den)

    __rmul__ = __mul__

    def conjugate(self):
        if self.field.disc is None:
            return self
        return FieldElement._raw(self.field, self.x - self.field.eps * self.y, -self.y, self.den)

    def norm(self):
        """Exact norm to Q; an int when the element is integral."""
        f = self.field
        if f.disc is None:
            n = self.x
        else:
            n = self.x * self.x - f.eps * self.x * self.y + f.c0 * self.y * self.y
        if self.den == 1:
            return n
        from fractions import Fraction

        return Fraction(n, self.den ** f.degree)

    def trace(self):
        f = self.field
        t = self.x if f.disc is None else 2 * self.x - f.eps * self.y
        if self.den == 1:
            return t
        from fractions import Fraction

        return Fraction(t, self.den)

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        f = self.field
        if f.disc is None:
            return FieldElement(f, self.den, 0, self.x)
        c = self.conjugate()
        n = self.x * self.x - f.eps * self.x * self.y + f.c0 * self.y * self.y
        # (x+ya)/den inverse = den * conj(x+ya) / N(x+ya)
        return FieldElement(f, c.x * self.den, c.y * self.den, n)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        k = int(k)
        if k < 0:
            return self.inverse() ** (-k)
        result = FieldElement._raw(self.field, 1, 0, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return (self.field == other.field and self.x == other.x
                    and self.y == other.y and self.den == other.den)
        if isinstance(other, int):
            return self.y == 0 and self.den == 1 and self.x == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field.disc, self.x, self.y, self.den))

    # -- conversions ------------------------------------------------------
    def as_fraction(self):
        if self.y:
            raise FieldError(f"{self} is not rational")
        from fractions import Fraction

        return Fraction(self.x, self.den)

    def coords(self):
        """Rational coordinates on the basis {1, a}."""
        from fractions import Fraction

        return Fraction(self.x, self.den), Fraction(self.y, self.den)

    def content_denominator(self) -> int:
        return self.den

    def embeddings_float(self):
        """(phi_1, phi_2) as floats (one value over Q)."""
        f = self.field
        if f.disc is None:
            return (_ratio_float(self.x, self.den),)
        a1, a2 = f.gen_float()
        if max(abs(self.x), abs(self.y)).bit_length() > 900 or self.den.bit_length() > 900:
            v = embed(self, 80)[0]
            return tuple(float(t) for t in v)
        e1 = (self.x + self.y * a1) / self.den
        e2 = (self.x + self.y * a2) / self.den
        # the smaller embedding can lose all its digits to cancellation;
        # recover it from the exact norm and the larger one
        N = self.norm()
        if abs(e1) >= abs(e2):
            if e1:
                e2 = _ratio_float(N.numerator, N.denominator) / e1
        elif e2:
            e1 = _ratio_float(N.numerator, N.denominator) / e2
        return (e1, e2)

    def __float__(self):
        if self.y:
            raise FieldError("not a rational element")
        return _ratio_float(self.x, self.den)

    def __repr__(self):
        return f"FieldElement({self.field}, {format_element(self)})"

    def __str__(self):
        return format_element(self)


def _ratio_float(n, d):
    try:
        return n / d
    except OverflowError:
        return float(mpmath.mpf(n) / d)


# ---------------------------------------------------------------------------
# embeddings


def embed(e: FieldElement, prec: int = 53):
    """Real embeddings of ``e`` to within ``2**-prec``.

    Returns ``(values, err)`` where ``values`` holds one ``mpf`` per real
    embedding (larger root of the generator first) and ``err`` bounds the
    absolute error of each value.  The square root of D' is taken as an
    exact integer floor, so ``err`` is rigorous up to the final rounding of
    the mpf division, which is covered by the guard bits.
    """
    f = e.field
    if f.disc is None:
        with mpmath.workprec(prec + 20):
            v = mpmath.mpf(e.x) / e.den
        return (v,), mpmath.mpf(2) ** (-prec - 19)
    # value_i = (2x - eps*y +/- y*sqrt(D')) / (2 den)
    # with s = floor(sqrt(D') 2^p): |y|*2^-p/(2 den) bounds the sqrt error
    p = prec + abs(e.y).bit_length() + 2
    s = f.sqrt_disc_scaled(p)
    base = (2 * e.x - f.eps * e.y) << p
    num1 = base + e.y * s
    num2 = base - e.y * s
    scale = 2 * e.den
    work = prec + max(num1.bit_length(), num2.bit_length()) - p + 20
    with mpmath.workprec(max(work, prec + 20)):
        v1 = mpmath.ldexp(mpmath.mpf(num1), -p) / scale
        v2 = mpmath.ldexp(mpmath.mpf(num2), -p) / scale
        err = mpmath.ldexp(mpmath.mpf(abs(e.y) + 1), -p) / scale
    return (v1, v2), err


# ---------------------------------------------------------------------------
# parsing / formatting


def format_element(e: FieldElement) -> str:
    if e.y == 0:
        return str(e.x) if e.den == 1 else f"{e.x}/{e.den}"
    if e.x == 0:
        inner = _ya(e.y)
    else:
        yy = _ya(abs(e.y))
        inner = f"{e.x}{'+' if e.y > 0 else '-'}{yy}"
    if e.den == 1:
        return inner
    return f"({inner})/{e.den}"


def _ya(y):
    if y == 1:
        return "a"
    if y == -1:
        return "-a"
    return f"{y}*a"


def parse_element(text: str, field: QuadField) -> FieldElement:
    """Parse ``(x+y*a)/den``, ``-5``, ``(1-a)/2`` and similar expressions."""
    from .parsing import parse_polynomial

    poly = parse_polynomial(text, field, var=None)
    return poly.get(0, field.zero)


def parse_field(text: str) -> QuadField:
    t = text.strip().replace("’", "'").replace("′", "'")
    if t.upper() in ("Q", "QQ"):
        return RATIONALS
    for prefix in ("D'=", "D=", "D'", "D"):
        if t.startswith(prefix):
            t = t[len(prefix):]
            break
    try:
        return QuadField(int(t))
    except ValueError:
        raise FieldError(f"cannot parse field specification {text!r}") from None


# ---------------------------------------------------------------------------
# ideals


def _hnf(field: QuadField, vectors):
    """HNF ``(n, t, s)`` of the Z-span of integer coordinate vectors (x, y)."""
    if field.disc is None:
        g = 0
        for x, _ in vectors:
            g = math.gcd(g, x)
        if g == 0:
            raise FieldError("zero ideal")
        return g, 0, 1
    pivot = None  # vector with y = gcd of processed y's
    n = 0
    for x, y in vectors:
        if y == 0:
            n = math.gcd(n, x)
            continue
        if pivot is None:
            pivot = (x, y)
            continue
        px, py = pivot
        g, u, v = gmpy2.gcdext(py, y)
        g, u, v = int(g), int(u), int(v)
        # new pivot u*p + v*w has y = g; the combination (y/g)*p - (py/g)*w has y = 0
        pivot = (u * px + v * x, g)
        n = math.gcd(n, (y // g) * px - (py // g) * x)
    if pivot is None:
        raise FieldError("module is not of full rank (zero ideal?)")
    t, s = pivot
    if s < 0:
        t, s = -t, -s
    if n == 0:
        raise FieldError("module is not of full rank (zero ideal?)")
    n = abs(n)
    return n, t % n, s


class OkIdeal:
    """Nonzero ideal of Z[a]: the Z-span of ``n`` and ``t + s*a``.

    Over Q only ``n`` is meaningful (``t = 0``, ``s = 1``).
    """

    __slots__ = ("field", "n", "t", "s")

    def __init__(self, field: QuadField, n: int, t: int = 0, s: int = 1):
        self.field = field
        self.n = int(n)
        self.t = int(t)
        self.s = int(s)

    @classmethod
    def from_generators(cls, field: QuadField, gens) -> "OkIdeal":
        return ideal_from_generators(gens, field)

    @property
    def hnf(self):
        if self.field.is_rational:
            return self.n
        return ((self.n, 0), (self.t, self.s))

    def norm(self) -> int:
        return self.n * self.s

    def basis(self):
        f = self.field
        if f.is_rational:
            return [f(self.n)]
        return [f(self.n), f(self.t, self.s)]

    def gens(self):
        return self.basis()

    def is_unit(self) -> bool:
        return self.norm() == 1

    def content(self) -> int:
        """Largest integer c with the ideal contained in c*O_k."""
        return self.n if self.field.is_rational else self.s

    def contains(self, e: FieldElement) -> bool:
        if not e.is_integral():
            return False
        if self.field.is_rational:
            return e.x % self.n == 0
        if e.y % self.s:
            return False
        q = e.y // self.s
        return (e.x - q * self.t) % self.n == 0

    __contains__ = contains

    def reduce(self, e: FieldElement) -> FieldElement:
        """Canonical representative of an integral element modulo the ideal."""
        if not e.is_integral():
            raise FieldError(f"{e} is not integral")
        if self.field.is_rational:
            return FieldElement._raw(self.field, e.x % self.n, 0, 1)
        q, y = divmod(e.y, self.s)
        x = (e.x - q * self.t) % self.n
        return FieldElement._raw(self.field, x, y, 1)

    def __eq__(self, other):
        return (isinstance(other, OkIdeal) and self.field == other.field
                and self.n == other.n and self.t == other.t and self.s == other.s)

    def __hash__(self):
        return hash((self.field.disc, self.n, self.t, self.s))

    def __mul__(self, other):
        return ideal_mul(self, other)

    def __pow__(self, k):
        return ideal_pow(self, k)

    def __add__(self, other):
        return ideal_gcd(self, other)

    def __repr__(self):
        if self.field.is_rational:
            return f"OkIdeal(Q, ({self.n}))"
        return f"OkIdeal({self.field}, [[{self.n},0],[{self.t},{self.s}]])"

    def __str__(self):
        if self.field.is_rational or (self.t == 0 and self.s == self.n):
            return f"({self.n})"
        if self.s == 1:
            return f"({self.n}, a{'+' if self.t >= 0 else '-'}{abs(self.t)})" if self.t else f"({self.n}, a)"
        return f"[[{self.n},0],[{self.t},{self.s}]]"


def _vectors(gens):
    vecs = []
    for g in gens:
        if not g.is_integral():
            raise FieldError(f"generator {g} is not integral")
        vecs.append((g.x, g.y))
        if g.field.disc is not None:
            ga = g * g.field.gen
            vecs.append((ga.x, ga.y))
    return vecs


def ideal_from_generators(gens, field: QuadField | None = None) -> OkIdeal:
    """HNF of the ideal generated by integral elements ``gens``."""
    gens = list(gens)
    if field is None:
        if not gens or not isinstance(gens[0], FieldElement):
            raise FieldError("cannot infer the field of the generators")
        field = gens[0].field
    gens = [field.coerce(g) for g in gens]
    if not gens or all(g.is_zero() for g in gens):
        raise FieldError("zero ideal")
    n, t, s = _hnf(field, _vectors(gens))
    return OkIdeal(field, n, t, s)


def principal_ideal(e: FieldElement) -> OkIdeal:
    return ideal_from_generators([e], e.field)


def unit_ideal(field: QuadField) -> OkIdeal:
    return OkIdeal(field, 1, 0, 1)


def ideal_gcd(A: OkIdeal, B: OkIdeal) -> OkIdeal:
    """The sum A + B, i.e. the gcd of the two ideals."""
    return ideal_from_generators(A.basis() + B.basis(), A.field)


def ideal_mul(A: OkIdeal, B: OkIdeal) -> OkIdeal:
    if A.field.is_rational:
        return OkIdeal(A.field, A.n * B.n)
    return ideal_from_generators([x * y for x in A.basis() for y in B.basis()], A.field)


def ideal_pow(A: OkIdeal, k: int) -> OkIdeal:
    if k < 0:
        raise FieldError("negative ideal power")
    result = unit_ideal(A.field)
    base = A
    while k:
        if k & 1:
            result = ideal_mul(result, base)
        k >>= 1
        if k:
            base = ideal_mul(base, base)
    return result


def ideal_divides(A: OkIdeal, B: OkIdeal) -> bool:
    """True when A | B, i.e. B is contained in A."""
    return all(A.contains(b) for b in B.basis())


def ideal_norm(A: OkIdeal) -> int:
    return A.norm()


def ideal_conjugate(A: OkIdeal) -> OkIdeal:
    if A.field.is_rational:
        return A
    return ideal_from_generators([b.conjugate() for b in A.basis()], A.field)


def ideal_div(A: OkIdeal, B: OkIdeal) -> OkIdeal:
    """Exact quotient A / B; requires B | A."""
    if not ideal_divides(B, A):
        raise FieldError(f"{B!r} does not divide {A!r}")
    f = A.field
    if f.is_rational:
        return OkIdeal(f, A.n // B.n)
    # B * conj(B) = (N(B))
    nb = B.norm()
    prod = ideal_mul(A, ideal_conjugate(B))
    gens = []
    for g in prod.basis():
        if g.x % nb or g.y % nb:
            raise FieldError("inexact ideal quotient")
        gens.append(FieldElement._raw(f, g.x // nb, g.y // nb, 1))
    return ideal_from_generators(gens, f)


def ideal_valuation(A: OkIdeal, P: OkIdeal) -> int:
    """Exponent of the prime ideal P in A."""
    if P.is_unit():
        raise FieldError("valuation at the unit ideal")
    k = 0
    while ideal_divides(P, A):
        A = ideal_div(A, P)
        k += 1
    return k


def ideal_intersection_integer(A: OkIdeal) -> int:
    """Positive generator of A meet Z."""
    return A.n


# ---------------------------------------------------------------------------
# primes


def is_prime(p: int) -> bool:
    return p >= 2 and bool(gmpy2.is_prime(p, 40))


def _sqrt_mod(d: int, p: int) -> int:
    d %= p
    for r in range(p) if p < 64 else ():
        if r * r % p == d:
            return r
    # Tonelli-Shanks for larger odd primes
    if pow(d, (p - 1) // 2, p) != 1:
        raise FieldError(f"{d} is not a square mod {p}")
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(d, q, p), pow(d, (q + 1) // 2, p)
    while t != 1:
        i, tt = 0, t
        while tt != 1:
            tt = tt * tt % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


def generator_roots_mod(field: QuadField, p: int):
    """Roots of the generator's minimal polynomial modulo the prime p."""
    if p == 2 or p < 64:
        return [r for r in range(p) if (r * r + field.eps * r + field.c0) % p == 0]
    d = field.disc % p
    if d == 0:
        return [(-field.eps) * pow(2, -1, p) % p]
    if pow(d, (p - 1) // 2, p) != 1:
        return []
    s = _sqrt_mod(d, p)
    inv2 = pow(2, -1, p)
    return sorted({(-field.eps + s) * inv2 % p, (-field.eps - s) * inv2 % p})


def split_rational_prime(p: int, field: QuadField):
    """Factorisation of p*O_k as a list of (prime ideal, exponent)."""
    p = int(p)
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if field.is_rational:
        return [(OkIdeal(field, p), 1)]
    roots = generator_roots_mod(field, p)
    if not roots:
        return [(OkIdeal(field, p, 0, p), 1)]
    if len(roots) == 1:
        r = roots[0]
        return [(OkIdeal(field, p, (-r) % p, 1), 2)]
    return [(OkIdeal(field, p, (-r) % p, 1), 1) for r in roots]


def prime_ideals_above(p: int, field: QuadField):
    return [P for P, _ in split_rational_prime(p, field)]


def residue_characteristic(P: OkIdeal) -> int:
    return P.n


# ---------------------------------------------------------------------------
# perfect powers


def _ramified_primes(field: QuadField):
    if field.is_rational:
        return []
    d, out, p = field.disc, [], 2
    while p * p <= d:
        if d % p == 0:
            out.append(p)
            while d % p == 0:
                d //= p
        p += 1
    if d > 1:
        out.append(d)
    return out


def ideal_perfect_power_root(A: OkIdeal):
    """Return ``(B, e)`` with ``B**e == A`` and ``e`` as large as can be certified.

    The ideal is split as ``content * primitive``; ramified primes (which
    divide D' and are therefore cheap to find) are peeled off explicitly.
    On what remains, the content must be an integer e-th power and the
    primitive part's e-th root is the candidate ``primitive + m*O_k`` with
    ``m`` the integer e-th root of its norm.  Every candidate is verified
    by exponentiation, so a returned ``e > 1`` is always correct.
    """
    f = A.field
    if A.is_unit():
        return A, 1
    if f.is_rational:
        n = A.n
        for e in range(n.bit_length(), 1, -1):
            r, exact = gmpy2.iroot(n, e)
            if exact:
                return OkIdeal(f, int(r)), e
        return A, 1
    c = A.content()
    prim = ideal_div(A, OkIdeal(f, c, 0, c)) if c > 1 else A
    ram = []  # (prime ideal, exponent in A)
    for p in _ramified_primes(f):
        (P, _), = split_rational_prime(p, f)
        k = 0
        while c % p == 0:
            c //= p
            k += 1
        j = 0
        if ideal_divides(P, prim):
            prim = ideal_div(prim, P)
            j = 1
        if 2 * k + j:
            ram.append((P, 2 * k + j))
    N0 = prim.norm()
    limit = max(c.bit_length(), N0.bit_length(), *(v for _, v in ram), 1)
    for e in range(limit, 1, -1):
        if any(v % e for _, v in ram):
            continue
        rc, exact = gmpy2.iroot(c, e)
        if not exact:
            continue
        m0, exact = gmpy2.iroot(N0, e)
        if not exact:
            continue
        rc, m0 = int(rc), int(m0)
        B0 = ideal_gcd(prim, OkIdeal(f, m0, 0, m0)) if N0 > 1 else unit_ideal(f)
        if ideal_pow(B0, e) != prim:
            continue
        B = ideal_mul(B0, OkIdeal(f, rc, 0, rc))
        for P, v in ram:
            B = ideal_mul(B, ideal_pow(P, v // e))
        if ideal_pow(B, e) == A:
            return B, e
    return A, 1


# ---------------------------------------------------------------------------
# ideals of a given norm and principal generators


def ideals_of_norm(field: QuadField, m: int):
    """All ideals of norm exactly m (brute force over HNF shapes)."""
    if field.is_rational:
        return [OkIdeal(field, m)]
    out = []
    for s in range(1, m + 1):
        if m % s:
            continue
        n = m // s
        if n % s:
            continue
        for t in range(0, n, s):
            if _is_ideal(field, n, t, s):
                out.append(OkIdeal(field, n, t, s))
    return out


def _is_ideal(field, n, t, s):
    # a*n and a*(t + s a) must lie in the span of {n, t + s a}
    cand = OkIdeal(field, n, t, s)
    a = field.gen
    return cand.contains(a * n) and cand.contains(a * field(t, s))


def reduced_ideal_basis(A: OkIdeal):
    """Basis of A short in the Minkowski (sum of squared embeddings) norm."""
    f = A.field
    if f.is_rational:
        return [f(A.n)]
    a1, a2 = f.gen_embeddings(200)

    def q(e):
        v1 = e.x + e.y * a1
        v2 = e.x + e.y * a2
        return v1 * v1 + v2 * v2

    b1, b2 = A.basis()
    # Gauss reduction loop using exact integer rounding of mpf ratios
    for _ in range(200):
        if q(b1) > q(b2):
            b1, b2 = b2, b1
        n1 = q(b1)
        dot = (q(b1 + b2) - n1 - q(b2)) / 2
        m = int(mpmath.nint(dot / n1))
        if m == 0:
            break
        b2 = b2 - b1 * m
    return [b1, b2]


def principal_generator(A: OkIdeal, radius: int = 12, unit=None):
    """An element generating A, or None if none is found in the search box.

    Searches small combinations of a reduced basis; generators exist in a
    box of size governed by the regulator, which stays modest for the
    fields handled here.  Returns a generator balanced by the fundamental
    unit so that its embeddings are comparable.
    """
    f = A.field
    if f.is_rational:
        return f(A.n)
    target = A.norm()
    if target == 1:
        return f.one
    b1, b2 = reduced_ideal_basis(A)
    best = None
    for r in range(1, radius + 1):
        for i in range(-r, r + 1):
            for j in (-r, r) if abs(i) != r else range(-r, r + 1):
                e = b1 * i + b2 * j
                if e.is_zero():
                    continue
                if abs(e.norm()) == target:
                    cand = _balance(e, unit)
                    key = _gen_key(cand)
                    if best is None or key < best[0]:
                        best = (key, cand)
        if best is not None:
            return best[1]
    return None


def _gen_key(e):
    v = e.embeddings_float()
    return (max(abs(t) for t in v), abs(e.x) + abs(e.y), -e.y, -e.x)


def _balance(e: FieldElement, unit=None):
    """Multiply by a power of the fundamental unit to even out |phi_1|, |phi_2|."""
    f = e.field
    if f.is_rational:
        return e
    if unit is None:
        unit = fundamental_unit(f)
    l1, l2 = (math.log(abs(t)) for t in e.embeddings_float())
    L = math.log(abs(unit.embeddings_float()[0]))
    k = round((l1 - l2) / (2 * L))
    out = e * unit ** (-k)
    # normalise sign: positive first embedding
    if out.embeddings_float()[0] < 0:
        out = -out
    return out


def ideal_is_principal(A: OkIdeal, radius: int = 12) -> bool:
    return principal_generator(A, radius) is not None


# ---------------------------------------------------------------------------
# units


@lru_cache(maxsize=None)
def _fundamental_unit_cached(disc: int):
    field = QuadField(disc)
    # Continued fraction of w = (eps + sqrt(D'))/2 = -a_2.  A convergent h/k
    # makes h + k*a_2 small, and the first one of norm +-1 is the unit.
    P, Q = field.eps, 2
    sD = int(gmpy2.isqrt(disc))
    h0, h1 = 0, 1
    k0, k1 = 1, 0
    for _ in range(1_000_000):
        q = (P + sD) // Q
        h0, h1 = h1, q * h1 + h0
        k0, k1 = k1, q * k1 + k0
        cand = field(h1, k1)
        if abs(cand.norm()) == 1:
            u = cand
            if u.embeddings_float()[0] < 0:
                u = -u
            if u.embeddings_float()[0] < 1:
                u = u.inverse()
            return u
        P = q * Q - P
        Q = (disc - P * P) // Q
    raise FieldError(f"no unit found for D'={disc}")


def fundamental_unit(field: QuadField) -> FieldElement:
    """Fundamental unit u with phi_1(u) > 1, via the continued fraction of -a_2."""
    if field.is_rational:
        raise FieldError("trivial unit group")
    return _fundamental_unit_cached(field.disc)


def unit_log_vector(u: FieldElement):
    return tuple(math.log(abs(t)) for t in u.embeddings_float())


# ---------------------------------------------------------------------------
# extended HNF: express 1 = x*alpha + (element of B) when alpha O + B = O


def _xgcd_vectors(vectors):
    """HNF with transformation: returns (pivot, zero-y combos) bookkeeping.

    ``vectors`` is a list of ((x, y), coeffs) where coeffs is a tuple of
    integer multipliers.  Returns the reduced list spanning the same module
    in the shape [(pivot with y = gcd), (n-vector with y = 0)].
    """
    pivot = None
    zero = None
    for vec, co in vectors:
        x, y = vec
        if y == 0:
            zero = _combine_zero(zero, (x, co))
            continue
        if pivot is None:
            pivot = (x, y, co)
            continue
        px, py, pco = pivot
        g, u, v = (int(t) for t in gmpy2.gcdext(py, y))
        newp = (u * px + v * x, g, tuple(u * a + v * b for a, b in zip(pco, co)))
        kx = (y // g) * px - (py // g) * x
        kco = tuple((y // g) * a - (py // g) * b for a, b in zip(pco, co))
        pivot = newp
        zero = _combine_zero(zero, (kx, kco))
    return pivot, zero


def _combine_zero(zero, item):
    if zero is None:
        return item
    x1, c1 = zero
    x2, c2 = item
    g, u, v = (int(t) for t in gmpy2.gcdext(x1, x2))
    return (g, tuple(u * a + v * b for a, b in zip(c1, c2)))


def bezout(alpha: FieldElement, B: OkIdeal):
    """Return ``w`` integral with ``alpha*w - 1`` in B, or None if alpha O + B != O."""
    f = B.field
    if f.is_rational:
        g, u, _ = (int(t) for t in gmpy2.gcdext(alpha.x, B.n))
        if abs(g) != 1:
            return None
        return f(u * g)
    a = f.gen
    aa = alpha * a
    b1, b2 = B.basis()
    vecs = [((alpha.x, alpha.y), (1, 0, 0, 0)), ((aa.x, aa.y), (0, 1, 0, 0)),
            ((b1.x, b1.y), (0, 0, 1, 0)), ((b2.x, b2.y), (0, 0, 0, 1))]
    pivot, zero = _xgcd_vectors(vecs)
    px, py, pco = pivot
    if py != 1 or zero is None or abs(zero[0]) != 1:
        return None
    zx, zco = zero
    if zx < 0:
        zx, zco = -zx, tuple(-c for c in zco)
    # the vector (1, 0) = zero-combination (zx == 1)
    w = f(zco[0], zco[1])
    return w


def crt_idempotent(A: OkIdeal, B: OkIdeal) -> FieldElement:
    """Element e with e in A and e = 1 mod B, for coprime A and B."""
    f = A.field
    if f.is_rational:
        g, u, v = (int(t) for t in gmpy2.gcdext(A.n, B.n))
        if g != 1:
            raise FieldError("ideals are not coprime")
        return f(u * A.n)
    vecs = []
    basisA = A.basis()
    basisB = B.basis()
    for k, e in enumerate(basisA + basisB):
        co = [0, 0, 0, 0]
        co[k] = 1
        vecs.append(((e.x, e.y), tuple(co)))
    pivot, zero = _xgcd_vectors(vecs)
    if pivot[1] != 1 or zero is None or abs(zero[0]) != 1:
        raise FieldError("ideals are not coprime")
    zx, zco = zero
    if zx < 0:
        zco = tuple(-c for c in zco)
    e = basisA[0] * zco[0] + basisA[1] * zco[1]
    return e


def unit_group_signature(field: QuadField):
    """(fundamental unit, log vector) or None over Q."""
    if field.is_rational:
        return None
    u = fundamental_unit(field)
    return u, unit_log_vector(u)


def small_elements(field: QuadField, bound: int):
    """Integral elements x + y*a with |x|, |y| <= bound (for searches and tests)."""
    if field.is_rational:
        for x in range(-bound, bound + 1):
            yield field(x)
        return
    for x, y in product(range(-bound, bound + 1), repeat=2):
        yield field(x, y)

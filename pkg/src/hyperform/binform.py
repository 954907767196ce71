"""Binary forms over Q(a) and the right action of GL2(k) x k^*."""

from __future__ import annotations

from dataclasses import dataclass

from .nfield import (FieldElement, FieldError, QuadField, ideal_from_generators,
                     parse_field, principal_ideal)
from .parsing import parse_polynomial, split_top_level


class NonSeparableError(FieldError):
    pass


class InvalidTransform(FieldError):
    pass


class BinaryForm:
    """``F(X, Z) = sum_i f_i X^i Z^(n-i)`` of degree ``n >= 3``.

    The degree is part of the identity of the form: ``x^5 - 1`` read as a
    sextic has a root at infinity and differs from the quintic.
    """

    __slots__ = ("field", "coeffs", "_disc")

    def __init__(self, coeffs, field: QuadField | None = None, degree: int | None = None):
        coeffs = list(coeffs)
        if field is None:
            for c in coeffs:
                if isinstance(c, FieldElement):
                    field = c.field
                    break
            else:
                raise FieldError("cannot infer the field; pass field=")
        coeffs = [field.coerce(c) for c in coeffs]
        if degree is not None:
            if len(coeffs) > degree + 1:
                if any(not c.is_zero() for c in coeffs[degree + 1:]):
                    raise FieldError("coefficient list longer than the degree allows")
                coeffs = coeffs[:degree + 1]
            coeffs += [field.zero] * (degree + 1 - len(coeffs))
        if len(coeffs) < 4:
            raise FieldError("binary forms of degree < 3 are not supported")
        if all(c.is_zero() for c in coeffs):
            raise FieldError("zero form")
        self.field = field
        self.coeffs = tuple(coeffs)
        self._disc = None

    # basic attributes
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    n = degree

    @property
    def genus(self) -> int:
        return self.degree // 2 - 1

    g = genus

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, BinaryForm) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"BinaryForm({format_form(self)}, field={self.field})"

    def __str__(self):
        return format_form(self)

    def poly_degree(self) -> int:
        """Degree of f(x) = F(x, 1)."""
        for i in range(self.degree, -1, -1):
            if not self.coeffs[i].is_zero():
                return i
        return -1

    def is_integral(self) -> bool:
        return all(c.is_integral() for c in self.coeffs)

    def content_ideal(self):
        """Ideal generated by the coefficients (integral forms only)."""
        return ideal_from_generators([c for c in self.coeffs if not c.is_zero()], self.field)

    def is_primitive(self) -> bool:
        return self.is_integral() and self.content_ideal().is_unit()

    def scale(self, u) -> "BinaryForm":
        u = self.field.coerce(u)
        return BinaryForm([c * u for c in self.coeffs], self.field)

    def __mul__(self, u):
        return self.scale(u)

    __rmul__ = __mul__

    def __neg__(self):
        return self.scale(-1)

    def common_denominator(self) -> int:
        from math import lcm

        d = 1
        for c in self.coeffs:
            d = lcm(d, c.den)
        return d

    def evaluate(self, X, Z=1):
        acc = self.field.zero
        X = self.field.coerce(X)
        Z = self.field.coerce(Z)
        n = self.degree
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                acc = acc + c * X ** i * Z ** (n - i)
        return acc

    def embed_coeffs(self, m: int = 0):
        """Coefficients under the m-th real embedding, as floats."""
        return [c.embeddings_float()[m] for c in self.coeffs]

    def discriminant(self) -> FieldElement:
        if self._disc is None:
            self._disc = discriminant(self)
        return self._disc


# ---------------------------------------------------------------------------
# transforms


@dataclass(frozen=True)
class Transform:
    """Element ``([[a, b], [c, d]], u)`` of GL2(k) x k^*; acts on the right."""

    a: FieldElement
    b: FieldElement
    c: FieldElement
    d: FieldElement
    u: FieldElement

    @classmethod
    def make(cls, matrix, u=1, field: QuadField | None = None) -> "Transform":
        (a, b), (c, d) = matrix
        if field is None:
            for v in (a, b, c, d, u):
                if isinstance(v, FieldElement):
                    field = v.field
                    break
            else:
                from .nfield import RATIONALS

                field = RATIONALS
        co = field.coerce
        return cls(co(a), co(b), co(c), co(d), co(u))

    @classmethod
    def identity(cls, field: QuadField) -> "Transform":
        return cls(field.one, field.zero, field.zero, field.one, field.one)

    @property
    def field(self):
        return self.a.field

    @property
    def matrix(self):
        return ((self.a, self.b), (self.c, self.d))

    def det(self) -> FieldElement:
        return self.a * self.d - self.b * self.c

    def is_invertible(self) -> bool:
        return not self.det().is_zero() and not self.u.is_zero()

    def compose(self, other: "Transform") -> "Transform":
        """``self`` then ``other``: F.(self*other) == (F.self).other."""
        a = self.a * other.a + self.b * other.c
        b = self.a * other.b + self.b * other.d
        c = self.c * other.a + self.d * other.c
        d = self.c * other.b + self.d * other.d
        return Transform(a, b, c, d, self.u * other.u)

    __mul__ = compose

    def inverse(self) -> "Transform":
        det = self.det()
        if det.is_zero() or self.u.is_zero():
            raise InvalidTransform("singular transform")
        inv = det.inverse()
        return Transform(self.d * inv, -self.b * inv, -self.c * inv, self.a * inv, self.u.inverse())

    def is_identity(self) -> bool:
        return (self.a == 1 and self.d == 1 and self.b.is_zero() and self.c.is_zero()
                and self.u == 1)

    def __str__(self):
        return (f"[[{self.a}, {self.b}], [{self.c}, {self.d}]], u={self.u}")

    def to_dict(self):
        return {"matrix": [[str(self.a), str(self.b)], [str(self.c), str(self.d)]],
                "u": str(self.u)}


def _lin_powers(p, q, n):
    """Coefficient lists (index = X-degree) of (p X + q Z)^k for k = 0..n."""
    one = p.field.one
    out = [[one]]
    for _ in range(n):
        prev = out[-1]
        nxt = [None] * (len(prev) + 1)
        for k in range(len(nxt)):
            term = None
            if k < len(prev) and not q.is_zero():
                term = prev[k] * q
            if k >= 1 and not p.is_zero():
                t2 = prev[k - 1] * p
                term = t2 if term is None else term + t2
            nxt[k] = term if term is not None else p.field.zero
        out.append(nxt)
    return out


def act(F: BinaryForm, T: Transform) -> BinaryForm:
    """``u * F(a X + b Z, c X + d Z)``."""
    if not T.is_invertible():
        raise InvalidTransform("det(A) = 0 or u = 0")
    n = F.degree
    field = F.field
    L1 = _lin_powers(T.a, T.b, n)
    L2 = _lin_powers(T.c, T.d, n)
    zero = field.zero
    out = [zero] * (n + 1)
    for i, fi in enumerate(F.coeffs):
        if fi.is_zero():
            continue
        P, Q = L1[i], L2[n - i]
        for j, pj in enumerate(P):
            if pj.is_zero():
                continue
            w = fi * pj
            for k, qk in enumerate(Q):
                if not qk.is_zero():
                    out[j + k] = out[j + k] + w * qk
    if T.u != 1:
        out = [c * T.u for c in out]
    return BinaryForm(out, field)


def transform_discriminant_factor(T: Transform, n: int) -> FieldElement:
    """``u^(2(n-1)) det(A)^(n(n-1))``."""
    return T.u ** (2 * (n - 1)) * T.det() ** (n * (n - 1))


# ---------------------------------------------------------------------------
# discriminants


def _det_bareiss(M):
    """Determinant over a field by fraction-free elimination (exact)."""
    M = [row[:] for row in M]
    size = len(M)
    if size == 0:
        return None
    one = M[0][0].field.one
    sign = 1
    prev = one
    for k in range(size - 1):
        if M[k][k].is_zero():
            for r in range(k + 1, size):
                if not M[r][k].is_zero():
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return one.field.zero
        piv = M[k][k]
        inv_prev = prev.inverse() if prev != 1 else None
        for i in range(k + 1, size):
            mik = M[i][k]
            row_i, row_k = M[i], M[k]
            for j in range(k + 1, size):
                v = row_i[j] * piv - mik * row_k[j]
                row_i[j] = v * inv_prev if inv_prev is not None else v
            row_i[k] = one.field.zero
        prev = piv
    d = M[size - 1][size - 1]
    return d if sign == 1 else -d


def resultant(f, g):
    """Res(f, g) of coefficient lists (index = degree), via the Sylvester matrix."""
    m, k = len(f) - 1, len(g) - 1
    field = f[0].field
    zero = field.zero
    size = m + k
    if size == 0:
        return field.one
    rows = []
    for i in range(k):
        row = [zero] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(row)
    return _det_bareiss(rows)


def poly_discriminant(f) -> FieldElement:
    """Discriminant of a univariate polynomial (coefficient list, exact degree)."""
    m = len(f) - 1
    lc = f[-1]
    if m < 1:
        raise FieldError("discriminant of a constant")
    if m == 1:
        return lc.field.one
    df = [f[i] * i for i in range(1, m + 1)]
    res = resultant(f, df)
    sgn = -1 if (m * (m - 1) // 2) % 2 else 1
    return res * sgn / lc


def discriminant(F: BinaryForm) -> FieldElement:
    """Discriminant ``prod_{i<j} (gamma_j alpha_i - gamma_i alpha_j)^2`` of the form."""
    n = F.degree
    m = F.poly_degree()
    if m < n - 1:
        raise NonSeparableError("form has a multiple root at infinity")
    f = list(F.coeffs[:m + 1])
    d = poly_discriminant(f)
    if m == n - 1:
        d = d * f[-1] * f[-1]
    if d.is_zero():
        raise NonSeparableError("form is not separable")
    return d


def is_separable(F: BinaryForm) -> bool:
    try:
        F.discriminant()
    except NonSeparableError:
        return False
    return True


def curve_discriminant(F: BinaryForm) -> FieldElement:
    """``2^(4g) Delta(F)`` for the curve y^2 = F(x, 1); n even, n >= 6."""
    n = F.degree
    if n % 2 or n < 6:
        raise FieldError(f"degree-{n} form has no hyperelliptic interpretation")
    return F.discriminant() * (2 ** (4 * F.genus))


def discriminant_ideal(F: BinaryForm):
    return principal_ideal(F.discriminant())


# ---------------------------------------------------------------------------
# isomorphisms


@dataclass(frozen=True)
class IsomorphismMap:
    """``(x, y) -> ((a x + b)/(c x + d), v^-1 (c x + d)^(-g-1) y)``."""

    a: FieldElement
    b: FieldElement
    c: FieldElement
    d: FieldElement
    v: FieldElement
    g: int

    def __call__(self, x, y):
        den = self.c * x + self.d
        X = (self.a * x + self.b) / den
        Y = self.v.inverse() * den ** (-self.g - 1) * y
        return X, Y

    def is_identity(self) -> bool:
        return (self.a == 1 and self.d == 1 and self.b.is_zero() and self.c.is_zero()
                and self.v == 1)

    def describe(self) -> str:
        return (f"(x, y) -> (({self.a}*x + {self.b})/({self.c}*x + {self.d}), "
                f"({self.v})^-1 * ({self.c}*x + {self.d})^{-self.g - 1} * y)")


def isomorphism_witness(T: Transform, v, degree: int = 6) -> IsomorphismMap:
    """Isomorphism C_{F.T} -> C_F for ``T = (A, v^2)``."""
    field = T.field
    v = field.coerce(v)
    if v.is_zero() or v * v != T.u:
        raise InvalidTransform("twist, not isomorphism: u is not v^2")
    if degree % 2:
        raise FieldError("odd-degree forms do not define hyperelliptic curves")
    return IsomorphismMap(T.a, T.b, T.c, T.d, v, degree // 2 - 1)


# ---------------------------------------------------------------------------
# serialisation


def format_form(F: BinaryForm) -> str:
    return f"deg={F.degree}; f=[{', '.join(str(c) for c in F.coeffs)}]"


def format_poly(F: BinaryForm, var: str = "x") -> str:
    terms = []
    for i in range(F.degree, -1, -1):
        c = F.coeffs[i]
        if c.is_zero():
            continue
        mon = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        cs = str(c)
        if c.y or "/" in cs:
            cs = f"({cs})"
        if mon:
            if cs == "1":
                cs = ""
            elif cs == "-1":
                cs = "-"
            else:
                cs += "*"
        terms.append(cs + mon)
    s = " + ".join(terms).replace("+ -", "- ")
    return s


def parse_form(text: str, field: QuadField) -> BinaryForm:
    """Parse ``deg=<n>; f=[c0, ..., cn]`` or ``deg=<n>; poly=<expression>``."""
    parts = {}
    for chunk in split_top_level(text, ";"):
        if not chunk:
            continue
        if "=" not in chunk:
            raise FieldError(f"cannot parse form component {chunk!r}")
        key, val = chunk.split("=", 1)
        parts[key.strip().lower()] = val.strip()
    if "f" in parts:
        body = parts["f"].strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise FieldError("coefficient list must be bracketed")
        items = [s for s in split_top_level(body[1:-1], ",") if s]
        coeffs = []
        for s in items:
            p = parse_polynomial(s, field, var=None)
            coeffs.append(p.get(0, field.zero))
        deg = int(parts["deg"]) if "deg" in parts else len(coeffs) - 1
        return BinaryForm(coeffs, field, degree=deg)
    if "poly" in parts:
        if "deg" not in parts:
            raise FieldError("poly= requires an explicit deg=")
        p = parse_polynomial(parts["poly"], field, var="x")
        deg = int(parts["deg"])
        if p and max(p) > deg:
            raise FieldError("polynomial degree exceeds deg=")
        return BinaryForm([p.get(i, field.zero) for i in range(deg + 1)], field, degree=deg)
    raise FieldError("form needs f=[...] or poly=...")


def form_from_poly(expr: str, field: QuadField, degree: int = 6) -> BinaryForm:
    return parse_form(f"deg={degree}; poly={expr}", field)


def make_form(coeffs, field: QuadField | str | None = None, degree: int | None = None) -> BinaryForm:
    if isinstance(field, str):
        field = parse_field(field)
    return BinaryForm(coeffs, field, degree)

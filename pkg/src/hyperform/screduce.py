"""Stoll-Cremona style height reduction over Q and real quadratic fields.

The covariant of a form is the minimiser in the upper half plane of
``Phi(z) = sum_j log|gamma_j z - alpha_j|^2 - n log Im z`` over the
homogeneous roots (alpha_j : gamma_j), each root reflected into the closed
lower half plane.  It is GL2(R)-covariant, which is
all the reduction needs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

import mpmath

from . import kernels
from .binform import BinaryForm, Transform, act
from .nfield import (FieldElement, FieldError, QuadField, bezout, embed,
                     fundamental_unit, ideal_from_generators, ideals_of_norm,
                     principal_generator, principal_ideal)


class CovariantError(FieldError):
    pass


@dataclass(frozen=True)
class HPoint:
    """A point of H^d, one coordinate per real embedding."""

    coords: tuple
    err: tuple

    def __post_init__(self):
        for z, e in zip(self.coords, self.err):
            if not z.imag > e:
                raise CovariantError(f"{z} is not certified in the upper half plane")

    @property
    def d(self):
        return len(self.coords)

    def re(self):
        return tuple(z.real for z in self.coords)

    def im(self):
        return tuple(z.imag for z in self.coords)

    def norm_im(self):
        return math.prod(self.im())

    def __getitem__(self, m):
        return self.coords[m]


@dataclass(frozen=True)
class UnitLattice:
    """Fundamental unit with its log vector and the embedded basis {1, a}."""

    unit: FieldElement
    logs: tuple
    gen_embeddings: tuple

    @classmethod
    def of(cls, field: QuadField) -> "UnitLattice":
        eps = fundamental_unit(field)
        return cls(eps, tuple(math.log(abs(t)) for t in eps.embeddings_float()),
                   tuple(field.gen_float()))


# ---------------------------------------------------------------------------
# roots and the covariant


def complex_roots(F: BinaryForm, prec: int = 106, embedding: int = 0):
    """Projective roots of F under one real embedding.

    Returns a list of ``(value, err)`` where value is an mpc (None for the
    root at infinity) and err bounds the distance to a true root.
    """
    n = F.degree
    with mpmath.workprec(prec + 20):
        cs = [embed(c, prec + 20)[0][embedding] for c in F.coeffs]
        m = max(i for i, c in enumerate(cs) if c != 0)
        out = []
        for _ in range(n - m):
            out.append((None, 0.0))
        if m == 0:
            raise FieldError("form is a constant multiple of a power of Z")
        poly = list(reversed(cs[:m + 1]))
        roots = mpmath.polyroots(poly, maxsteps=400, extraprec=prec + 40)
        dpoly = [c * (m - i) for i, c in enumerate(poly[:-1])]
        for r in roots:
            fv = mpmath.polyval(poly, r)
            dv = mpmath.polyval(dpoly, r)
            err = float(m * abs(fv) / abs(dv)) if dv != 0 else float("inf")
            out.append((mpmath.mpc(r), err))
        return out


def _minimise_phi(ps, qs, n_total, scale_hint=1.0):
    """Damped Newton for Phi, started at the root barycentre."""
    k = len(ps)
    x = sum(ps) / k
    spread = math.sqrt(sum((p - x) ** 2 + q * q for p, q in zip(ps, qs)) / k)
    y = spread if spread > 0 else 1.0
    f = kernels.phi_grad_hess
    phi, gx, gy, hxx, hxy, hyy = f(ps, qs, x, y, n_total)
    last = float("inf")
    for _ in range(500):
        det = hxx * hyy - hxy * hxy
        if hxx > 0 and det > 0:
            dx = -(hyy * gx - hxy * gy) / det
            dy = -(hxx * gy - hxy * gx) / det
        else:
            # not convex here: scaled gradient step
            dx, dy = -gx * y * y, -gy * y * y
        step = 1.0
        while y + step * dy <= 0:
            step *= 0.5
        accepted = False
        for _ in range(60):
            nx, ny = x + step * dx, y + step * dy
            res = f(ps, qs, nx, ny, n_total)
            if res[0] <= phi + 1e-4 * step * (gx * dx + gy * dy) or step < 1e-12:
                accepted = True
                break
            step *= 0.5
        if not accepted:
            break
        x, y = nx, ny
        phi, gx, gy, hxx, hxy, hyy = res
        last = math.hypot(step * dx, step * dy)
        if last <= 1e-16 * (abs(x) + y + scale_hint):
            break
    gnorm = math.hypot(gx, gy) * y
    if gnorm > 1e-7:
        raise CovariantError(f"Newton did not converge (|grad| * y = {gnorm:.3g})")
    return complex(x, y), max(last, gnorm * y) + 4e-16 * (abs(x) + y)


def _polish(roots, n_total, z, prec, steps=3):
    """A few Newton steps at working precision ``prec`` from a double start."""
    with mpmath.workprec(prec):
        ps = [mpmath.mpf(r.real) for r in roots]
        qs = [-abs(mpmath.mpf(r.imag)) for r in roots]
        x, y = mpmath.mpf(z.real), mpmath.mpf(z.imag)
        n = mpmath.mpf(n_total)
        step = mpmath.mpf(0)
        for _ in range(steps):
            gx = gy = hxx = hxy = mpmath.mpf(0)
            gy = -n / y
            hyy = n / (y * y)
            for p, q in zip(ps, qs):
                dx, dy = x - p, y - q
                D = dx * dx + dy * dy
                gx += 2 * dx / D
                gy += 2 * dy / D
                hxx += 2 / D - 4 * dx * dx / (D * D)
                hxy -= 4 * dx * dy / (D * D)
                hyy += 2 / D - 4 * dy * dy / (D * D)
            det = hxx * hyy - hxy * hxy
            if det <= 0 or hxx <= 0:
                break
            sx = -(hyy * gx - hxy * gy) / det
            sy = -(hxx * gy - hxy * gx) / det
            if y + sy <= 0:
                break
            x, y = x + sx, y + sy
            step = mpmath.sqrt(sx * sx + sy * sy)
        return complex(float(x), float(y)), float(step)


def covariant(F: BinaryForm, prec: int = 106, embedding: int = 0):
    """Covariant point in the upper half plane for one real embedding."""
    z, _ = _covariant_with_err(F, prec, embedding)
    return z


def _covariant_with_err(F, prec, embedding):
    roots = complex_roots(F, prec, embedding)
    finite = [r for r, _ in roots if r is not None]
    ps = [float(r.real) for r in finite]
    # roots are taken in the closed lower half plane, which keeps Phi proper
    qs = [-abs(float(r.imag)) for r in finite]
    z, err = _minimise_phi(ps, qs, float(F.degree))
    z2, step = _polish(finite, F.degree, z, prec)
    # quadratic convergence: the last step bounds the remaining error
    err = min(err, step) + 4e-16 * (abs(z2.real) + z2.imag)
    return z2, err


def covariant_vector(F: BinaryForm, prec: int = 106) -> HPoint:
    d = F.field.degree
    zs, errs = [], []
    for m in range(d):
        z, e = _covariant_with_err(F, prec, m)
        zs.append(z)
        errs.append(e)
    return HPoint(tuple(zs), tuple(errs))


def mobius(matrix, z: complex) -> complex:
    """(a z + b)/(c z + d), folded back into the upper half plane."""
    (a, b), (c, d) = matrix
    w = (a * z + b) / (c * z + d)
    return w.conjugate() if w.imag < 0 else w


def right_action(T: Transform, z: complex, embedding: int = 0) -> complex:
    """z . A = A^{-1}(z): where the covariant of F.T lands."""
    a, b, c, d = (x.embeddings_float()[embedding] for x in (T.a, T.b, T.c, T.d))
    return mobius(((d, -b), (-c, a)), z)


# ---------------------------------------------------------------------------
# reduction over Q


@dataclass
class SCResult:
    form: BinaryForm
    transform: Transform
    z: HPoint
    flags: dict = dc_field(default_factory=dict)

    def __iter__(self):
        return iter((self.form, self.transform))


def reduce_sl2z(F: BinaryForm, prec: int = 106, tol: float = 1e-12,
                max_iter: int = 1000) -> SCResult:
    """Stoll-Cremona reduction for SL2(Z) x 1 over Q."""
    if not F.field.is_rational:
        raise FieldError("reduce_sl2z needs a form over Q")
    Q = F.field
    T = Transform.identity(Q)
    z = covariant(F, prec)
    for _ in range(max_iter):
        m = round(z.real)
        if m:
            S = Transform(Q.one, Q(m), Q.zero, Q.one, Q.one)
            F, T = act(F, S), T.compose(S)
            z = covariant(F, prec)
        if abs(z) < 1 - tol:
            S = Transform(Q.zero, Q.one, Q(-1), Q.zero, Q.one)
            F, T = act(F, S), T.compose(S)
            z = covariant(F, prec)
            continue
        break
    else:
        raise CovariantError("SL2(Z) reduction did not terminate")
    flags = {"R": abs(z.real) <= 0.5 + tol, "M": abs(z) >= 1 - tol}
    return SCResult(F, T, HPoint((z,), (tol,)), flags)


# ---------------------------------------------------------------------------
# reduction over real quadratic fields


def _embed2(e: FieldElement):
    return e.embeddings_float()


def lll_step5(z: HPoint, field: QuadField, bits: int = 50):
    """Shortest LLL vector cz + d of the lattice {cz + d}; (c, d, N) or None."""
    from sympy import Rational
    from sympy.polys.domains import ZZ
    from sympy.polys.matrices import DomainMatrix

    s1, s2 = field.gen_float()
    z1, z2 = z.coords
    scale = 2.0 ** bits / max(1.0, max(abs(z1), abs(z2), abs(s1), abs(s2)))
    rows, labels = [], []
    for cc, dd in (((1, 0), (0, 0)), ((0, 1), (0, 0)), ((0, 0), (1, 0)), ((0, 0), (0, 1))):
        c1 = cc[0] + cc[1] * s1
        c2 = cc[0] + cc[1] * s2
        d1 = dd[0] + dd[1] * s1
        d2 = dd[0] + dd[1] * s2
        w1 = c1 * z1 + d1
        w2 = c2 * z2 + d2
        rows.append([ZZ(int(round(t * scale))) for t in (w1.real, w1.imag, w2.real, w2.imag)])
        labels.append((cc, dd))
    M = DomainMatrix(rows, (4, 4), ZZ)
    _, U = M.lll_transform(delta=Rational(99, 100))
    U = U.to_Matrix()
    best = None
    for r in range(4):
        co = [int(U[r, j]) for j in range(4)]
        c = field(co[0], co[1])
        d = field(co[2], co[3])
        if c.is_zero():
            continue
        val = _norm_abs(c, d, z)
        if val < 1 and (best is None or val < best[2]):
            best = (c, d, val)
        break  # only the first reduced vector is used
    return best


def _norm_abs(c: FieldElement, d: FieldElement, z: HPoint) -> float:
    cs, ds = _embed2(c), _embed2(d)
    return math.prod(abs(cm * zm + dm) for cm, dm, zm in zip(cs, ds, z.coords))


@dataclass
class SearchStats:
    candidates: int = 0
    exhausted: bool = False


def exhaustive_step5(z: HPoint, field: QuadField, max_search: int = 5_000_000,
                     stats: SearchStats | None = None):
    """Exact argmin of N(|cz + d|) over coprime (c, d) if it is < 1.

    For two embeddings, N(|cz+d|) < 1 forces
    ``(c_m x_m + d_m)^2 < 1/(c_m' y_m')^2 - (c_m y_m)^2`` for each m, which
    bounds d in a box once c is fixed; c runs over generators of principal
    ideals of norm < 1/N(Im z) (one per unit class).
    """
    stats = stats if stats is not None else SearchStats()
    x1, x2 = z.re()
    y1, y2 = z.im()
    s1, s2 = field.gen_float()
    ny = y1 * y2
    limit = 1.0 / ny
    best = None
    m = 1
    while m < limit:
        for I in ideals_of_norm(field, m):
            c = principal_generator(I)
            if c is None:
                continue
            c1, c2 = _embed2(c)
            a1 = 1.0 / (c2 * y2) ** 2 - (c1 * y1) ** 2
            a2 = 1.0 / (c1 * y1) ** 2 - (c2 * y2) ** 2
            if a1 <= 0 or a2 <= 0:
                continue
            res, count = kernels.box_scan(c1, c2, x1, y1, x2, y2, s1, s2,
                                          math.sqrt(a1), math.sqrt(a2))
            stats.candidates += count
            if stats.candidates > max_search:
                stats.exhausted = True
                return best
            if res is None:
                continue
            # the scan returns the best d; rescan coprime-only if needed
            cand = _best_coprime(c, res, z, field, (c1, c2, x1, y1, x2, y2, s1, s2, a1, a2))
            if cand is None:
                continue
            val, d = cand
            key = (val, m, c.x, c.y, d.x, d.y)
            if best is None or key < best[0]:
                best = (key, c, d)
        m += 1
    if best is None:
        return None
    (val, *_), c, d = best
    return c, d, math.sqrt(val)


def _best_coprime(c, res, z, field, box):
    val, u, v = res
    d = field(u, v)
    if ideal_from_generators([c, d], field).is_unit():
        return val, d
    # fall back to listing the whole box and filtering on coprimality
    c1, c2, x1, y1, x2, y2, s1, s2, a1, a2 = box
    r1, r2 = math.sqrt(a1), math.sqrt(a2)
    m1, m2 = -c1 * x1, -c2 * x2
    w1, w2 = (c1 * y1) ** 2, (c2 * y2) ** 2
    ds = s1 - s2
    best = None
    for vv in range(math.ceil(((m1 - r1) - (m2 + r2)) / ds), math.floor(((m1 + r1) - (m2 - r2)) / ds) + 1):
        ulo = max(m1 - r1 - vv * s1, m2 - r2 - vv * s2)
        uhi = min(m1 + r1 - vv * s1, m2 + r2 - vv * s2)
        for uu in range(math.ceil(ulo), math.floor(uhi) + 1):
            e1 = uu + vv * s1 - m1
            e2 = uu + vv * s2 - m2
            val = (e1 * e1 + w1) * (e2 * e2 + w2)
            if val < 1 and (best is None or (val, uu, vv) < best[:3]):
                dd = field(uu, vv)
                if ideal_from_generators([c, dd], field).is_unit():
                    best = (val, uu, vv)
    if best is None:
        return None
    return best[0], field(best[1], best[2])


def step5_search(z: HPoint, field: QuadField, max_search: int = 5_000_000,
                 use_lll: bool = True, stats: SearchStats | None = None):
    """(c, d) with N(|cz + d|) < 1, or None when N(Im z) is already maximal."""
    if use_lll:
        hit = lll_step5(z, field)
        if hit is not None and ideal_from_generators([hit[0], hit[1]], field).is_unit():
            return hit
    return exhaustive_step5(z, field, max_search, stats)


def complete_matrix(c: FieldElement, d: FieldElement):
    """a, b with a d - b c = 1 for coprime c, d."""
    field = c.field
    if c.is_zero():
        if not d.is_unit():
            raise FieldError("(0, d) with d not a unit")
        return d.inverse(), field.zero
    w = bezout(d, principal_ideal(c))
    if w is None:
        raise FieldError("c and d are not coprime")
    k = (d * w - 1) / c
    return w, k


def _unit_shift(field, lat: UnitLattice, z: HPoint):
    l1, l2 = (math.log(y) for y in z.im())
    L = lat.logs[0]
    return round((l1 - l2) / (2 * L))


def _translation(field, z: HPoint):
    x1, x2 = z.re()
    s1, s2 = field.gen_float()
    t = (x1 - x2) / (s1 - s2)
    s = x1 - t * s1
    return field(round(s), round(t)), (s, t)


def unit_walk(F: BinaryForm, squares: bool = False):
    """``eps^-k F`` minimising the largest |log|phi_m(f_i)| - k log|phi_m(eps)||.

    Returns (form, k, transform).  Over Q the only freedom is the sign,
    normalised so that the top nonzero coefficient is positive.
    """
    field = F.field
    if field.is_rational:
        top = F.coeffs[F.poly_degree()]
        if top.x < 0:
            T = Transform(field.one, field.zero, field.zero, field.one, field(-1))
            return act(F, T), 0, T
        return F, 0, Transform.identity(field)
    eps = fundamental_unit(field)
    if squares:
        eps = eps * eps
    b = tuple(math.log(abs(t)) for t in eps.embeddings_float())
    pts = [tuple(math.log(abs(t)) for t in c.embeddings_float())
           for c in F.coeffs if not c.is_zero()]

    def obj(k):
        return max(abs(p[m] - k * b[m]) for p in pts for m in range(2))

    k = 0
    cur = obj(0)
    for direction in (1, -1):
        while True:
            nxt = obj(k + direction)
            if nxt < cur - 1e-12:
                k += direction
                cur = nxt
            else:
                break
    u = eps ** (-k)
    G = F.scale(u)
    # sign: first embedding of the top coefficient positive
    if G.coeffs[G.poly_degree()].embeddings_float()[0] < 0:
        u = -u
        G = -G
    T = Transform(field.one, field.zero, field.zero, field.one, u)
    return G, k, T


def reduce_gl2ok(F: BinaryForm, prec: int = 106, max_search: int = 5_000_000,
                 use_lll: bool = True, max_rounds: int = 200, squares: bool = False) -> SCResult:
    """Reduction for GL2(O_k) x O_k^* over Q or a real quadratic field."""
    field = F.field
    if field.is_rational:
        res = reduce_sl2z(F, prec)
        G, _, U = unit_walk(res.form)
        res.form, res.transform = G, res.transform.compose(U)
        return res
    lat = UnitLattice.of(field)
    one, zero = field.one, field.zero
    T = Transform.identity(field)
    m_verified = True
    z = covariant_vector(F, prec)
    for _ in range(max_rounds):
        # step 3: unit rescale so that log Im z is centred
        k = _unit_shift(field, lat, z)
        if k:
            u = lat.unit ** k
            S = Transform(u, zero, zero, one, one)
            F, T = act(F, S), T.compose(S)
            z = covariant_vector(F, prec)
        # step 4: integral translation
        b, _ = _translation(field, z)
        if not b.is_zero():
            S = Transform(one, b, zero, one, one)
            F, T = act(F, S), T.compose(S)
            z = covariant_vector(F, prec)
        # step 5: increase N(Im z)
        stats = SearchStats()
        hit = step5_search(z, field, max_search, use_lll, stats)
        if stats.exhausted:
            m_verified = False
        if hit is None:
            break
        c, d, _ = hit
        a, bb = complete_matrix(c, d)
        S = Transform(d, -bb, -c, a, one)  # M^{-1} with M = [[a, b], [c, d]]
        F, T = act(F, S), T.compose(S)
        z = covariant_vector(F, prec)
    else:
        m_verified = False
    # step 6
    G, _, U = unit_walk(F, squares)
    F, T = G, T.compose(U)
    flags = check_reduced(z, field, lat)
    flags["M"] = flags["M"] and m_verified
    return SCResult(F, T, z, flags)


def check_reduced(z: HPoint, field: QuadField, lat: UnitLattice | None = None,
                  tol: float = 1e-9) -> dict:
    lat = lat or UnitLattice.of(field)
    _, (s, t) = _translation(field, z)
    l1, l2 = (math.log(y) for y in z.im())
    L = lat.logs[0]
    r_ok = abs(s) <= 0.5 + tol and abs(t) <= 0.5 + tol
    i_ok = abs(l1 - l2) <= L + tol
    return {"R": r_ok, "I": i_ok, "M": exhaustive_step5(z, field) is None}


def im_norm_after(c, d, z: HPoint) -> float:
    """N(Im Mz) for M with bottom row (c, d) and unit determinant."""
    return z.norm_im() / _norm_abs(c, d, z) ** 2

"""Discriminant minimisation of binary forms over Q or a real quadratic field.

The local step works at a prime (or, to dodge factoring, at an arbitrary
principal ideal, in which case any inconsistency among its prime factors
surfaces as a nontrivial factor).  ``global_reduce`` orchestrates the local
steps for class number one; ``reduce_with_class_group`` handles fields
whose class group is generated by a small set S of primes.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field as dc_field

import sympy

from .binform import BinaryForm, Transform, act
from .nfield import (FieldElement, FieldError, OkIdeal, QuadField, bezout,
                     crt_idempotent, ideal_conjugate, ideal_div, ideal_divides,
                     ideal_from_generators, ideal_gcd, ideal_mul,
                     ideal_perfect_power_root, ideal_pow, ideal_valuation,
                     is_prime, principal_generator, principal_ideal,
                     reduced_ideal_basis, split_rational_prime, unit_ideal)

log = logging.getLogger(__name__)

# residue fields at most this large are searched exhaustively for roots
_BRUTE_FORCE_NORM = 64


class FoundFactor(Exception):
    """Raised inside composite-ideal arithmetic when a factor shows up."""

    def __init__(self, ideal: OkIdeal):
        super().__init__(str(ideal))
        self.ideal = ideal


class NonPrincipalError(FieldError):
    pass


@dataclass(frozen=True)
class LocalCase:
    kind: str  # Minimal | NonPrimitive | LowDegree | FoldRoot
    t: FieldElement | None = None

    def __str__(self):
        return self.kind if self.t is None else f"{self.kind}(t={self.t})"


MINIMAL = LocalCase("Minimal")
NON_PRIMITIVE = LocalCase("NonPrimitive")
LOW_DEGREE = LocalCase("LowDegree")


def FoldRoot(t) -> LocalCase:
    return LocalCase("FoldRoot", t)


@dataclass(frozen=True)
class NontrivialFactor:
    ideal: OkIdeal
    modulus: OkIdeal


@dataclass
class ReductionOutcome:
    form: BinaryForm | None
    transform: Transform | None
    factor: NontrivialFactor | None = None

    @property
    def is_factor(self) -> bool:
        return self.factor is not None


# ---------------------------------------------------------------------------
# arithmetic modulo an ideal


class _Modulus:
    """Residue arithmetic modulo A; composite moduli escape with FoundFactor."""

    def __init__(self, A: OkIdeal, composite: bool = False):
        self.A = A
        self.field = A.field
        self.composite = composite
        self._pows = [unit_ideal(A.field), A]

    def power(self, i):
        while len(self._pows) <= i:
            self._pows.append(ideal_mul(self._pows[-1], self.A))
        return self._pows[i]

    def divisible(self, b: FieldElement, j: int) -> bool:
        """Is b in A^j?  Composite moduli check each power for a split."""
        if b.is_zero() or j <= 0:
            return True
        if not self.composite:
            return self.power(j).contains(b)
        bO = principal_ideal(b)
        for i in range(1, j + 1):
            d = ideal_gcd(bO, self.power(i))
            if d == self.power(i):
                continue
            if d == self.power(i - 1):
                return False
            raise FoundFactor(ideal_div(d, self.power(i - 1)))
        return True

    def is_zero(self, c) -> bool:
        return self.divisible(c, 1)

    def reduce(self, c):
        return self.A.reduce(c)

    def inverse(self, c):
        """Inverse mod A, or None when c is zero mod A."""
        d = ideal_gcd(principal_ideal(c), self.A) if not c.is_zero() else self.A
        if d.is_unit():
            w = bezout(c, self.A)
            if w is None:
                raise FieldError("Bezout failed for a unit residue")
            return self.reduce(w)
        if d == self.A:
            return None
        raise FoundFactor(d)


def _as_ideal(m, field: QuadField | None = None) -> OkIdeal:
    if isinstance(m, OkIdeal):
        return m
    if isinstance(m, FieldElement):
        return principal_ideal(m)
    if field is None:
        raise FieldError("cannot infer field of the modulus")
    return principal_ideal(field.coerce(m))


def centered_lift(e: FieldElement, A: OkIdeal) -> FieldElement:
    """Representative of e mod A with coordinates centred around zero."""
    r = A.reduce(e)
    f = A.field
    if f.is_rational:
        x = r.x
        return f(x - A.n if x > A.n // 2 else x)
    x, y = r.x, r.y
    if y > A.s // 2:
        y -= A.s
        x -= A.t
    x %= A.n
    if x > A.n // 2:
        x -= A.n
    return f(x, y)


def residue_representatives(P: OkIdeal):
    f = P.field
    if f.is_rational:
        return [f(i) for i in range(P.n)]
    return [f(i, j) for j in range(P.s) for i in range(P.n)]


# polynomials are coefficient lists, index = degree


def _trim(p, M: _Modulus):
    p = [M.reduce(c) for c in p]
    while p and M.is_zero(p[-1]):
        p.pop()
    return p


def _poly_rem(p, q, M: _Modulus):
    inv = M.inverse(q[-1])
    if inv is None:
        raise FieldError("divisor has a zero leading coefficient")
    r = list(p)
    while len(r) >= len(q):
        c = M.reduce(r[-1] * inv)
        shift = len(r) - len(q)
        for i, qc in enumerate(q):
            r[shift + i] = M.reduce(r[shift + i] - c * qc)
        r.pop()
        r = _trim(r, M)
    return r


def _poly_gcd(p, q, M: _Modulus):
    p, q = _trim(p, M), _trim(q, M)
    while q:
        p, q = q, _poly_rem(p, q, M)
    if not p:
        return p
    inv = M.inverse(p[-1])
    return [M.reduce(c * inv) for c in p]


def _derivative(p, k=1):
    out = list(p)
    for _ in range(k):
        out = [c * i for i, c in enumerate(out)][1:]
    return out


def _gcd_root(f, g: int, M: _Modulus):
    polys = [list(f)]
    for _ in range(g + 1):
        polys.append(_derivative(polys[-1]))
    acc = _trim(polys[0], M)
    for p in polys[1:]:
        if len(acc) <= 1:
            break
        acc = _poly_gcd(acc, p, M)
    s = len(acc) - 1
    if s <= 0:
        return None
    inv = M.inverse(M.reduce(acc[-1] * s))
    if inv is None:
        # residue characteristic divides s: only possible when it divides n!
        if M.A.norm() <= _BRUTE_FORCE_NORM and _is_prime_ideal(M.A):
            return _brute_force_root(f, g, M)
        if M.composite:
            # the shortcut is unsound here; skipping keeps Delta(F') | Delta(F)
            return None
        raise FieldError(f"{s} is not invertible modulo {M.A}")
    return M.reduce(-acc[-2] * inv)


def derivative_gcd_root(f, g: int, modulus):
    """Residue t with ``gcd(f, f', ..., f^(g+1)) = a_s (x - t)^s`` or None.

    ``f`` is a coefficient list (index = degree).  ``modulus`` is a prime
    element or an ideal; for composite ideals a factor may be raised.
    """
    f = list(f)
    field = None
    for c in f:
        if isinstance(c, FieldElement):
            field = c.field
            break
    if field is None:
        from .nfield import RATIONALS

        field = modulus.field if isinstance(modulus, (OkIdeal, FieldElement)) else RATIONALS
    f = [field.coerce(c) for c in f]
    A = _as_ideal(modulus, field)
    return _gcd_root(f, g, _Modulus(A, composite=not _is_prime_ideal(A)))


def _multiplicity(f, r, M: _Modulus):
    """Multiplicity of the residue r as a root of f mod a prime."""
    p = _trim(f, M)
    k = 0
    while len(p) > 1:
        # synthetic division by (x - r)
        q = [None] * (len(p) - 1)
        acc = p[-1]
        q[-1] = acc
        for i in range(len(p) - 2, 0, -1):
            acc = M.reduce(p[i] + acc * r)
            q[i - 1] = acc
        rem = M.reduce(p[0] + acc * r)
        if not M.is_zero(rem):
            break
        k += 1
        p = _trim(q, M)
    return k


def _brute_force_root(f, g: int, M: _Modulus):
    for r in residue_representatives(M.A):
        if _multiplicity(f, r, M) >= g + 2:
            return r
    return None


def _is_prime_ideal(A: OkIdeal) -> bool:
    N = A.norm()
    if N < 2:
        return False
    if is_prime(N):
        return True
    f = A.field
    if f.is_rational:
        return False
    r = _int_sqrt(N)
    if r is None or not is_prime(r):
        return False
    return A == OkIdeal(f, r, 0, r) and len(split_rational_prime(r, f)) == 1 and \
        split_rational_prime(r, f)[0][1] == 1


def _int_sqrt(N):
    import gmpy2

    r, exact = gmpy2.iroot(N, 2)
    return int(r) if exact else None


# ---------------------------------------------------------------------------
# the local step


class _LocalContext:
    """Everything a local step needs.

    For a principal ideal (pi) both ``pi_u`` and ``pi_l`` equal pi and
    ``idem`` is 1.  On the class-group path they are the near-generators.
    """

    def __init__(self, A: OkIdeal, pi_u, pi_l=None, idem=None, composite=False):
        self.M = _Modulus(A, composite)
        self.A = A
        self.pi_u = pi_u
        self.pi_l = pi_u if pi_l is None else pi_l
        self.idem = idem
        self.composite = composite
        self.brute = (not composite and A.norm() <= _BRUTE_FORCE_NORM)

    def lift(self, tbar):
        t = centered_lift(tbar, self.A)
        if self.idem is not None:
            t = t * self.idem
        return t

    def fold_root(self, F: BinaryForm):
        if self.brute:
            return _brute_force_root(list(F.coeffs), F.genus, self.M)
        return _gcd_root(list(F.coeffs), F.genus, self.M)

    def _finish(self, numer: BinaryForm, scale: FieldElement, j: int):
        """numer * scale, checking integrality (by A^j divisibility if composite)."""
        if self.composite:
            if not all(self.M.divisible(c, j) for c in numer.coeffs):
                return None
            G = numer.scale(scale)
            return G if G.is_integral() else None
        G = numer.scale(scale)
        return G if G.is_integral() else None

    def step(self, F: BinaryForm):
        """One pass of the local algorithm: (case, new form, transform)."""
        f = F.field
        n, g = F.degree, F.genus
        M = self.M
        one, zero = f.one, f.zero
        # 1: not primitive
        if all(M.is_zero(c) for c in F.coeffs):
            T = Transform(one, zero, zero, one, self.pi_l.inverse())
            return NON_PRIMITIVE, act(F, T), T
        # 2: low degree mod pi (root at infinity of high multiplicity)
        m = n - (g + 2)
        if all(M.is_zero(F.coeffs[i]) for i in range(m + 1, n + 1)):
            if self.pi_u == self.pi_l:
                T0 = Transform(one, zero, zero, self.pi_u, one)
                G = self._finish(act(F, T0), self.pi_u ** (-(g + 2)), g + 2)
                T = Transform(one, zero, zero, self.pi_u, self.pi_u ** (-(g + 2)))
            else:
                T = Transform(self.pi_l.inverse(), zero, zero, one, self.pi_u ** m)
                G = act(F, T)
                G = G if G.is_integral() else None
            if G is not None:
                return LOW_DEGREE, G, T
        # 3: (g+2)-fold finite root
        tbar = self.fold_root(F)
        if tbar is not None:
            t = self.lift(tbar)
            T0 = Transform(self.pi_u, t, zero, one, one)
            scale = self.pi_l ** (-(g + 2))
            if self.pi_u == self.pi_l:
                G = self._finish(act(F, T0), scale, g + 2)
            else:
                G = act(F, T0).scale(scale)
                G = G if G.is_integral() else None
            if G is not None:
                return FoldRoot(t), G, Transform(self.pi_u, t, zero, one, scale)
        return MINIMAL, None, None


def _prime_context(pi) -> _LocalContext:
    P = principal_ideal(pi)
    return _LocalContext(P, pi)


def _check_integral(F: BinaryForm):
    if not F.is_integral():
        raise FieldError("form must have integral coefficients")


def classify_local(F: BinaryForm, pi) -> LocalCase:
    """Which case of the local criterion applies at the prime element pi."""
    pi = F.field.coerce(pi)
    _check_integral(F)
    case, _, _ = _prime_context(pi).step(F)
    return case


def _run_local(F: BinaryForm, ctx: _LocalContext, max_steps=10_000):
    T = Transform.identity(F.field)
    steps = []
    for _ in range(max_steps):
        case, G, S = ctx.step(F)
        if G is None:
            return F, T, steps
        steps.append(case)
        F, T = G, T.compose(S)
    raise FieldError("local reduction did not terminate")


def local_reduce(F: BinaryForm, pi):
    """Reduce at the prime element pi; returns (form, transform)."""
    pi = F.field.coerce(pi)
    _check_integral(F)
    G, T, _ = _run_local(F, _prime_context(pi))
    return G, T


def local_reduce_composite(F: BinaryForm, A, pi=None) -> ReductionOutcome:
    """Local reduction at a possibly composite principal ideal A."""
    field = F.field
    A = _as_ideal(A, field)
    _check_integral(F)
    if pi is None:
        pi = principal_generator(A)
        if pi is None:
            raise NonPrincipalError(f"{A} is not principal (no generator found)")
    else:
        pi = field.coerce(pi)
        if principal_ideal(pi) != A:
            raise FieldError("pi does not generate the ideal")
    ctx = _LocalContext(A, pi, composite=True)
    try:
        G, T, _ = _run_local(F, ctx)
    except FoundFactor as exc:
        return ReductionOutcome(None, None, NontrivialFactor(exc.ideal, A))
    return ReductionOutcome(G, T)


# ---------------------------------------------------------------------------
# trial division and factoring helpers


def trial_divide(A: OkIdeal, B: int, start: int = 2):
    """Prime ideals of residue characteristic in [start, B] dividing A.

    Returns ``(factors, cofactor)`` with factors a list of (prime, exponent).
    """
    out = []
    N = A.norm()
    for p in sympy.primerange(start, B + 1):
        if N % p:
            continue
        for P, _ in split_rational_prime(p, A.field):
            k = 0
            while ideal_divides(P, A):
                A = ideal_div(A, P)
                k += 1
            if k:
                out.append((P, k))
        N = A.norm()
        if N == 1:
            break
    return out, A


def pollard_rho_factor(N: int, max_steps: int = 20000, seed: int = 1):
    """A nontrivial factor of N by Pollard rho (sympy), or None."""
    if N < 4 or sympy.isprime(N):
        return None
    if N % 2 == 0:
        return 2
    for retry in range(3):
        d = sympy.ntheory.pollard_rho(N, s=2 + retry, a=1 + seed + retry, retries=0,
                                      max_steps=max_steps)
        if d and 1 < d < N:
            return int(d)
    return None


def primes_of(A: OkIdeal, p: int):
    return [P for P, _ in split_rational_prime(p, A.field) if ideal_divides(P, A)]


def _strip_prime(A: OkIdeal, P: OkIdeal) -> OkIdeal:
    while not A.is_unit() and ideal_divides(P, A):
        A = ideal_div(A, P)
    return A


def _split_with_integer(A: OkIdeal, m: int):
    """Split A using an integer m sharing factors with N(A)."""
    field = A.field
    d = ideal_gcd(A, OkIdeal(field, m, 0, m) if not field.is_rational else OkIdeal(field, m))
    if d.is_unit() or d == A:
        return None
    return d, ideal_div(A, d)


# ---------------------------------------------------------------------------
# the global algorithm


@dataclass
class GlobalResult:
    form: BinaryForm
    transform: Transform
    proven: bool
    events: list = dc_field(default_factory=list)
    unresolved: list = dc_field(default_factory=list)

    def __iter__(self):
        # allow ``G, T = global_reduce(...)``
        return iter((self.form, self.transform))


def make_integral(F: BinaryForm):
    """Scale F by the common denominator of its coefficients."""
    d = F.common_denominator()
    T = Transform.identity(F.field)
    if d == 1 and F.is_integral():
        return F, T
    T = Transform(T.a, T.b, T.c, T.d, F.field(d))
    G = act(F, T)
    if not G.is_integral():
        raise FieldError("could not clear denominators")
    return G, T


def starting_ideal(F: BinaryForm, use_igusa: bool = True) -> OkIdeal:
    disc = F.discriminant()
    if use_igusa and F.degree == 6:
        from .igusa import igusa_clebsch

        ic = igusa_clebsch(F)
        gens = [disc] + [x for x in (ic.I2, ic.I4, ic.I6) if not x.is_zero()]
        return ideal_from_generators(gens, F.field)
    return principal_ideal(disc)


def _ideal_key(A: OkIdeal):
    return (A.norm(), A.n, A.t, A.s)


def _generator_or_raise(P: OkIdeal):
    pi = principal_generator(P)
    if pi is None:
        raise NonPrincipalError(
            f"prime {P} looks non-principal; use reduce_with_class_group")
    return pi


def global_reduce(F: BinaryForm, factor_hook=None, *, trial_bound: int | None = None,
                  budget_seconds: float | None = None, max_rounds: int = 64,
                  use_igusa: bool = True, rho_steps: int = 20000) -> GlobalResult:
    """Globally minimise the discriminant (class number one).

    ``factor_hook(N) -> iterable of ints`` may return any factors of N; it
    is consulted once the built-in methods stall.  The result carries a
    ``proven`` flag that is False when the budget ran out first.
    """
    t0 = time.monotonic()
    F, T = make_integral(F)
    events = []
    n = F.degree
    A = [starting_ideal(F, use_igusa)]
    B = max(n, trial_bound or n)
    scanned = 1  # primes <= scanned already stripped by trial division

    def out_of_time():
        return budget_seconds is not None and time.monotonic() - t0 > budget_seconds

    def reduce_at_prime(P):
        nonlocal F, T
        pi = _generator_or_raise(P)
        G, S, steps = _run_local(F, _prime_context(pi))
        if steps:
            events.append(("local", str(P), [str(s) for s in steps]))
            F, T = G, T.compose(S)

    rounds = 0
    while True:
        # step 2 and 3: drop unit ideals, take perfect-power roots
        A = sorted({_perfect_root(a) for a in A if not a.is_unit()}, key=_ideal_key)
        if not A:
            return GlobalResult(F, T, True, events, [])
        if out_of_time() or rounds >= max_rounds:
            events.append(("budget", rounds))
            return GlobalResult(F, T, False, events, A)
        # step 4: trial division
        found = None
        for a in A:
            facs, _ = trial_divide(a, B, start=scanned + 1)
            if facs:
                found = facs[0][0]
                break
        if found is not None:
            events.append(("trial", str(found)))
            reduce_at_prime(found)
            A = [_strip_prime(a, found) for a in A]
            continue
        scanned = B
        # step 5: composite local reduction
        restart = False
        for idx, a in enumerate(A):
            if _is_prime_ideal(a):
                # prime and coprime to n!: one local run settles it
                reduce_at_prime(a)
                events.append(("prime", str(a)))
                A = A[:idx] + A[idx + 1:]
                restart = True
                break
            pi = principal_generator(a)
            if pi is None:
                raise NonPrincipalError(f"{a} looks non-principal; use reduce_with_class_group")
            res = local_reduce_composite(F, a, pi)
            if res.is_factor:
                b = res.factor.ideal
                events.append(("factor_escape", str(b), b.norm()))
                A = A[:idx] + [b, ideal_div(a, b)] + A[idx + 1:]
                restart = True
                break
            if res.form != F:
                F, T = res.form, T.compose(res.transform)
                events.append(("composite", str(a)))
                d = principal_ideal(F.discriminant())
                A = [ideal_gcd(x, d) for x in A]
                restart = True
                break
        if restart:
            continue
        # step 6: stronger factoring, then a larger trial bound
        rounds += 1
        split = _try_factor(A, factor_hook, rho_steps, events)
        if split is not None:
            A = split
            continue
        B *= 2
        events.append(("bound", B))


def _perfect_root(a: OkIdeal) -> OkIdeal:
    r, e = ideal_perfect_power_root(a)
    return r


def _try_factor(A, hook, rho_steps, events):
    for idx, a in enumerate(A):
        N = a.norm()
        cands = []
        d = pollard_rho_factor(N, max_steps=rho_steps) if rho_steps > 0 else None
        if d:
            events.append(("rho", d))
            cands.append(d)
        elif hook is not None:
            try:
                got = [int(x) for x in hook(N)]
            except Exception as exc:  # a failing hook only costs speed
                events.append(("hook_error", repr(exc)))
                got = []
            got = [x for x in got if 1 < x < N and N % x == 0]
            if got:
                events.append(("hook", got))
            cands.extend(sorted(got))
        for m in cands:
            parts = _split_with_integer(a, m)
            if parts is None and is_prime(m):
                Ps = primes_of(a, m)
                if Ps and Ps[0] != a:
                    parts = (Ps[0], ideal_div(a, Ps[0]))
            if parts is not None:
                return A[:idx] + list(parts) + A[idx + 1:]
    return None


# ---------------------------------------------------------------------------
# class number > 1


def factor_ideal(A: OkIdeal, factor_hook=None):
    """Full factorisation into prime ideals via the norm (sympy factorint)."""
    N = A.norm()
    if N == 1:
        return []
    primes = sorted(sympy.factorint(N))
    out = []
    for p in primes:
        for P, _ in split_rational_prime(p, A.field):
            k = ideal_valuation(A, P)
            if k:
                out.append((P, k))
    return out


def _supported_on(C: OkIdeal, T):
    for P in T:
        while not C.is_unit() and ideal_divides(P, C):
            C = ideal_div(C, P)
    return C.is_unit()


def near_generator(A: OkIdeal, T, max_radius: int = 40):
    """Element beta of A with (beta)/A supported on T, smallest |norm| first."""
    b1, b2 = reduced_ideal_basis(A)
    seen = set()
    for radius in (4, 8, 16, max_radius):
        cands = []
        for i in range(-radius, radius + 1):
            for j in range(0, radius + 1):
                if j == 0 and i <= 0:
                    continue
                e = b1 * i + b2 * j
                if e in seen:
                    continue
                seen.add(e)
                cands.append((abs(e.norm()), abs(e.x) + abs(e.y), e.x, e.y, e))
        cands.sort(key=lambda c: c[:4])
        for c in cands:
            e = c[-1]
            C = ideal_div(principal_ideal(e), A)
            if _supported_on(C, T):
                return e, C
    raise NonPrincipalError(
        f"no element of {A} with cofactor supported on {[str(P) for P in T]}; "
        "T may not generate the class group")


def _class_context(P: OkIdeal, T):
    pi = principal_generator(P)
    if pi is not None:
        return _LocalContext(P, pi)
    pi_u, Cu = near_generator(P, T)
    beta, _ = near_generator(ideal_conjugate(P), T)
    pi_l = P.field(P.norm()) / beta
    idem = crt_idempotent(Cu, P) if not Cu.is_unit() else None
    return _LocalContext(P, pi_u, pi_l, idem)


def default_class_group_primes(field: QuadField, bound: int = 50, exclude=()):
    """Smallest non-principal prime ideal (ordered by norm), or []."""
    for p in sympy.primerange(2, bound):
        for P, _ in split_rational_prime(p, field):
            if P in exclude:
                continue
            if principal_generator(P) is None:
                return [P]
    return []


def _s_elements(field, S, bounds):
    """Generators of principal S-ideals with exponents within bounds."""
    from itertools import product

    out = []
    for exps in product(*(range(b + 1) for b in bounds)):
        I = unit_ideal(field)
        for P, e in zip(S, exps):
            if e:
                I = ideal_mul(I, ideal_pow(P, e))
        gen = principal_generator(I)
        if gen is not None:
            out.append((exps, gen))
    return out


def reduce_with_class_group(F: BinaryForm, S=None, *, T0=None, factor_hook=None):
    """Reduce outside S, keeping the form simple at S.

    Returns a GlobalResult whose form is minimal at every prime outside S.
    """
    field = F.field
    if field.is_rational or S is not None and len(S) == 0:
        return global_reduce(F, factor_hook)
    if S is None:
        S = default_class_group_primes(field)
        if not S:
            return global_reduce(F, factor_hook)
    S = list(S)
    if T0 is None:
        T0 = default_class_group_primes(field, exclude=set(S))
        if not T0:
            raise NonPrincipalError("could not find auxiliary primes disjoint from S")
    F, T = make_integral(F)
    events = []

    def reduce_at(P, Tset):
        nonlocal F, T
        ctx = _class_context(P, Tset)
        G, U, steps = _run_local(F, ctx)
        if steps:
            events.append(("local", str(P), [str(s) for s in steps]))
            F, T = G, T.compose(U)

    # phase 1: the primes of S, worsening only at T0
    for P in S:
        if ideal_divides(P, principal_ideal(F.discriminant())):
            reduce_at(P, T0)
    # phase 2: everything outside S, worsening only at S
    for P, _ in factor_ideal(principal_ideal(F.discriminant()), factor_hook):
        if P in S:
            continue
        reduce_at(P, S)
    # cleanup at S: a^-1 b^g F(X/b, Z) with a^2 b^(n-2g) of maximal norm
    F, T = _cleanup_at_s(F, T, S, events)
    return GlobalResult(F, T, True, events, [])


def _cleanup_at_s(F, T, S, events):
    field = F.field
    n, g = F.degree, F.genus
    disc = principal_ideal(F.discriminant())
    vals = [ideal_valuation(disc, P) for P in S]
    abound = [v // (2 * (n - 1)) for v in vals]
    bbound = [v // ((n - 2 * g) * (n - 1)) for v in vals]
    A_el = _s_elements(field, S, abound)
    B_el = _s_elements(field, S, bbound)
    best = None
    for ea, a in A_el:
        for eb, b in B_el:
            if ea == tuple(0 for _ in S) and eb == ea:
                continue
            weight = sum((2 * i + (n - 2 * g) * j) * _log_norm(P)
                         for P, i, j in zip(S, ea, eb))
            if best is not None and weight <= best[0]:
                continue
            U = Transform(b.inverse(), field.zero, field.zero, field.one, b ** g / a)
            G = act(F, U)
            if G.is_integral():
                best = (weight, G, U, ea, eb)
    if best is None:
        return F, T
    _, G, U, ea, eb = best
    events.append(("cleanup", list(ea), list(eb)))
    return G, T.compose(U)


def _log_norm(P):
    import math

    return math.log(P.norm())


def is_minimal_at(F: BinaryForm, P: OkIdeal, T=()) -> bool:
    """Local minimality at a prime ideal (class-group aware)."""
    ctx = _class_context(P, T) if T else _prime_context(_generator_or_raise(P))
    case, _, _ = ctx.step(F)
    return case == MINIMAL


__all__ = [
    "FoundFactor", "LocalCase", "NontrivialFactor", "ReductionOutcome", "GlobalResult",
    "MINIMAL", "NON_PRIMITIVE", "LOW_DEGREE", "FoldRoot",
    "classify_local", "local_reduce", "local_reduce_composite", "derivative_gcd_root",
    "trial_divide", "global_reduce", "reduce_with_class_group", "pollard_rho_factor",
    "centered_lift", "make_integral", "factor_ideal", "near_generator", "is_minimal_at",
]

"""Machine-readable CM curve tables and the checks run against them.

Each record is one line of ``key=value`` fields separated by ``;``::

    table=1b; DAB=[5,15,45]; curve=1; dstable=(2)^12 * (3)^6; dratio=(2*a+1)_5^10; f=[...]

``f`` lists the coefficients of x^0 .. x^6 over Z[a]; the coefficient field
is Q for table 1a and Q(sqrt D) otherwise, with D the first DAB entry.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field as dc_field
from importlib import resources
from pathlib import Path

from .binform import BinaryForm, Transform, act, curve_discriminant, discriminant_ideal
from .igusa import absolute_igusa, igusa_clebsch, same_geometric_class
from .minimize import MINIMAL, classify_local, global_reduce
from .nfield import (
    RATIONALS,
    FieldElement,
    FieldError,
    OkIdeal,
    QuadField,
    fundamental_unit,
    ideal_mul,
    ideal_pow,
    is_prime,
    parse_element,
    principal_generator,
    principal_ideal,
    split_rational_prime,
    unit_ideal,
)
from .parsing import split_top_level
from .screduce import reduce_gl2ok

TABLE_IDS = ("1a", "1b", "2b")

# the one field whose curves are only claimed minimal away from (2, a+1)
_PARTIAL_DAB = (17, 46, 257)

_FACTOR = re.compile(r"^\((?P<gen>[^()]+)\)(?:_(?P<norm>\d+))?(?:\^(?P<exp>\d+))?$")


class TableError(FieldError):
    """Malformed dataset line."""

    def __init__(self, msg, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", field {column!r}"
            where += ": "
        super().__init__(where + msg)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class IdealFactor:
    """One factor ``generator^exponent`` of a discriminant factorisation.

    ``norm`` is the printed subscript for tokens like ``(2*a+1)_5`` and the
    rational prime itself for ``(p)``.
    """
    generator: FieldElement
    norm: int
    exponent: int
    rational: bool

    def ideal(self) -> OkIdeal:
        return ideal_pow(principal_ideal(self.generator), self.exponent)

    def element(self) -> FieldElement:
        return self.generator ** self.exponent

    def prime_ideals(self):
        if self.rational:
            return [P for P, _ in split_rational_prime(self.norm, self.generator.field)]
        return [principal_ideal(self.generator)]

    def __str__(self):
        g = str(self.generator)
        if self.rational:
            return f"({g})^{self.exponent}"
        return f"({g})_{self.norm}^{self.exponent}"


@dataclass
class TableRow:
    table_id: str
    dab: tuple
    f: list
    delta_stable: list
    delta_ratio: list
    curve: int = 1
    dab_reflex: tuple | None = None
    line: int | None = None

    @property
    def key(self) -> str:
        return f"{self.table_id}:[{','.join(map(str, self.dab))}]#{self.curve}"

    @property
    def field(self) -> QuadField:
        return RATIONALS if self.table_id == "1a" else QuadField(self.dab[0])

    def form(self) -> BinaryForm:
        return BinaryForm(self.f, self.field, 6)

    def factors(self):
        return list(self.delta_stable) + list(self.delta_ratio)


def _parse_triple(text, line, col):
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise TableError(f"expected [D,A,B], got {text!r}", line, col)
    try:
        vals = tuple(int(x) for x in t[1:-1].split(","))
    except ValueError:
        raise TableError(f"non-integer entry in {text!r}", line, col) from None
    if len(vals) != 3:
        raise TableError(f"expected three entries in {text!r}", line, col)
    return vals


def parse_factor(token: str, field: QuadField, line=None, col=None) -> IdealFactor:
    tok = token.strip().replace(" ", "")
    m = _FACTOR.match(tok)
    if not m:
        raise TableError(f"malformed factor token {token!r}", line, col)
    try:
        gen = parse_element(m.group("gen"), field)
    except FieldError as exc:
        raise TableError(f"bad generator in {token!r}: {exc}", line, col) from None
    exp = int(m.group("exp") or 1)
    if m.group("norm") is None:
        if not (gen.is_rational() and gen.is_integral() and is_prime(abs(gen.x))):
            raise TableError(f"{token!r}: a token without _n must be a rational prime", line, col)
        return IdealFactor(gen, abs(gen.x), exp, True)
    n = int(m.group("norm"))
    if not gen.is_integral():
        raise TableError(f"{token!r}: generator is not integral", line, col)
    N = gen.norm() if not field.is_rational else gen.as_fraction()
    if abs(N) != n:
        raise TableError(f"{token!r}: |N({gen})| = {abs(N)}, not {n}", line, col)
    return IdealFactor(gen, n, exp, False)


def parse_factor_list(text: str, field: QuadField, line=None, col=None):
    t = text.strip()
    if t == "1":
        return []
    return [parse_factor(tok, field, line, col) for tok in split_top_level(t, "*")]


def parse_row(text: str, line=None) -> TableRow:
    parts = {}
    for chunk in split_top_level(text, ";"):
        if not chunk:
            continue
        if "=" not in chunk:
            raise TableError(f"expected key=value, got {chunk!r}", line)
        k, v = chunk.split("=", 1)
        parts[k.strip()] = v.strip()
    for req in ("table", "DAB", "dstable", "dratio", "f"):
        if req not in parts:
            raise TableError(f"missing field {req!r}", line)
    tid = parts["table"]
    if tid not in TABLE_IDS:
        raise TableError(f"unknown table {tid!r}", line, "table")
    dab = _parse_triple(parts["DAB"], line, "DAB")
    dabr = _parse_triple(parts["DABr"], line, "DABr") if "DABr" in parts else None
    field = RATIONALS if tid == "1a" else QuadField(dab[0])
    fs = parts["f"]
    if not (fs.startswith("[") and fs.endswith("]")):
        raise TableError("f must be a bracketed list", line, "f")
    try:
        coeffs = [parse_element(c, field) for c in split_top_level(fs[1:-1])]
    except FieldError as exc:
        raise TableError(str(exc), line, "f") from None
    if len(coeffs) != 7:
        raise TableError(f"f needs 7 coefficients, got {len(coeffs)}", line, "f")
    if tid == "1a" and not all(c.is_rational() for c in coeffs):
        raise TableError("table 1a coefficients must be rational", line, "f")
    return TableRow(
        table_id=tid,
        dab=dab,
        f=coeffs,
        delta_stable=parse_factor_list(parts["dstable"], field, line, "dstable"),
        delta_ratio=parse_factor_list(parts["dratio"], field, line, "dratio"),
        curve=int(parts.get("curve", 1)),
        dab_reflex=dabr,
        line=line,
    )


def default_table_path() -> Path:
    return Path(str(resources.files("hyperform") / "data" / "tables.txt"))


def load_tables(path=None):
    """Read a dataset file (default: the bundled Tables 1a and 1b)."""
    path = Path(path) if path is not None else default_table_path()
    rows = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            text = raw.strip()
            if not text or text.startswith("#"):
                continue
            rows.append(parse_row(text, lineno))
    return rows


def select_rows(rows, spec: str | None):
    """Filter by a comma list of table ids, D values or row keys."""
    if not spec:
        return list(rows)
    # brackets keep their commas: "1b,[5,15,45]" is two filters
    wanted = re.findall(r"\[[^\]]*\]|[^,\s]+", spec)
    out = []
    for r in rows:
        for w in wanted:
            if w == r.table_id or w == r.key or w == str(r.dab[0]) \
                    or w.replace(" ", "") == f"[{','.join(map(str, r.dab))}]":
                out.append(r)
                break
    return out


# ---------------------------------------------------------------------------
# verification


@dataclass
class RowReport:
    key: str
    ok: bool = True
    checks: dict = dc_field(default_factory=dict)
    errors: list = dc_field(default_factory=list)

    def fail(self, msg):
        self.ok = False
        self.errors.append(msg)

    def to_dict(self):
        return {"row": self.key, "ok": self.ok, "checks": self.checks, "errors": self.errors}


def _prime_element(P: OkIdeal, fac: IdealFactor):
    if not fac.rational:
        return fac.generator
    if P.field.is_rational:
        return P.field(fac.norm)
    pi = principal_generator(P)
    if pi is None:
        raise FieldError(f"no generator found for {P}")
    return pi


def _outside_partial_prime(row: TableRow, P: OkIdeal) -> bool:
    if tuple(row.dab) != _PARTIAL_DAB or row.field.is_rational:
        return True
    K = row.field
    Q = OkIdeal.from_generators(K, [K(2), K(1, 1)])
    return P != Q


def verify_row(row: TableRow, max_char: int | None = None) -> RowReport:
    """Check the discriminant, minimality and field-of-moduli claims of a row."""
    rep = RowReport(row.key)
    F = row.form()
    K = row.field
    disc = curve_discriminant(F)
    # (i) discriminant
    prod_el = K.one
    prod_id = unit_ideal(K)
    for fac in row.factors():
        prod_el = prod_el * fac.element()
        prod_id = ideal_mul(prod_id, fac.ideal())
    rep.checks["disc"] = str(disc)
    if K.is_rational:
        # over Z the ideal statement is |Delta| = product; also insist on the sign
        same_ideal = disc == prod_el or disc == -prod_el
        unit_ok = disc == prod_el
        if not unit_ok and same_ideal:
            rep.checks["sign"] = "negative"
    else:
        same_ideal = principal_ideal(disc) == prod_id
        q = disc / prod_el
        unit_ok = q.is_integral() and q.is_unit()
        rep.checks["unit"] = str(q) if unit_ok else None
    rep.checks["ideal_equal"] = same_ideal
    rep.checks["element_up_to_unit"] = unit_ok or (K.is_rational and same_ideal)
    if not same_ideal:
        rep.fail(f"discriminant ideal mismatch: {disc} vs product {prod_el}")
    elif not rep.checks["element_up_to_unit"]:
        rep.fail(f"discriminant {disc} differs from {prod_el} by a non-unit")
    # (ii) minimality at every prime dividing Delta(C)
    minimal = {}
    seen = set()
    for fac in row.factors():
        if max_char is not None and (fac.norm if fac.rational else _residue_char(fac)) > max_char:
            continue
        for P in fac.prime_ideals():
            if P in seen or not _outside_partial_prime(row, P):
                continue
            seen.add(P)
            pi = _prime_element(P, fac)
            case = classify_local(F, pi)
            minimal[str(P)] = str(case)
            if case != MINIMAL:
                rep.fail(f"not minimal at {P}: {case}")
    rep.checks["minimal"] = minimal
    # (iii) no model over Q for the quadratic rows
    if row.table_id in ("1b", "2b"):
        ai = absolute_igusa(igusa_clebsch(F))
        irr = [name for name, v in zip(("i1", "i2", "i3"), ai.as_tuple())
               if v is not None and not v.is_rational()]
        rep.checks["irrational_invariants"] = irr
        if not irr:
            rep.fail("all absolute Igusa invariants are rational")
    return rep


def _residue_char(fac: IdealFactor) -> int:
    n = fac.norm
    # prime norms are p or p^2; the tables only list prime norms
    for p in range(2, int(n ** 0.5) + 2):
        if n % p == 0:
            return p
    return n


# ---------------------------------------------------------------------------
# round trips


def random_scramble(field: QuadField, rng: random.Random, height: int = 10) -> Transform:
    """Unimodular matrix with entries of height <= ``height`` and a square unit scaling.

    Over a real quadratic field the determinant is a unit and the entries are
    small elements of Z[a]; over Q it lies in SL2(Z).
    """
    one, zero = field.one, field.zero

    def small():
        if field.is_rational:
            return field(rng.randint(-3, 3))
        return field(rng.randint(-2, 2), rng.randint(-2, 2))

    while True:
        s, t = small(), small()
        M = Transform(one, s, zero, one, one).compose(Transform(one, zero, t, one, one))
        if rng.random() < 0.5:
            M = M.compose(Transform(zero, one, -one, zero, one))
        if all(_height(x) <= height for row in M.matrix for x in row):
            break
    if field.is_rational:
        u = one
    else:
        eps = fundamental_unit(field)
        u = eps ** (2 * rng.randint(-1, 1))
        # fold a unit into the determinant as well
        k = rng.randint(-1, 1)
        if k:
            M = M.compose(Transform(eps ** k, zero, zero, one, one))
    return Transform(M.a, M.b, M.c, M.d, u)


def _height(e: FieldElement) -> int:
    return max(abs(e.x), abs(e.y)) // e.den if e.den else 0


@dataclass
class RoundTrip:
    key: str
    seed: int
    ok: bool
    disc_equal: bool
    same_class: bool
    proven: bool
    form: BinaryForm | None = None
    error: str | None = None

    def to_dict(self):
        return {
            "row": self.key, "seed": self.seed, "ok": self.ok,
            "disc_equal": self.disc_equal, "same_class": self.same_class,
            "proven": self.proven, "error": self.error,
            "form": None if self.form is None else [str(c) for c in self.form.coeffs],
        }


def scramble_and_recover(row: TableRow, seed: int, transform: Transform | None = None,
                         budget_seconds: float | None = 120.0) -> RoundTrip:
    """Scramble the row's model, minimise and reduce it, compare with the original."""
    F = row.form()
    K = F.field
    T = transform if transform is not None else random_scramble(K, random.Random(seed))
    G = act(F, T)
    try:
        res = global_reduce(G, budget_seconds=budget_seconds)
        H = reduce_gl2ok(res.form).form
    except FieldError as exc:
        return RoundTrip(row.key, seed, False, False, False, False, None, str(exc))
    d_ok = discriminant_ideal(H) == discriminant_ideal(F)
    c_ok = same_geometric_class(F, H)
    return RoundTrip(row.key, seed, d_ok and c_ok, d_ok, c_ok, res.proven, H)

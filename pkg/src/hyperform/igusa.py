"""Igusa-Clebsch invariants of sextic forms and absolute invariants."""

from __future__ import annotations

from dataclasses import dataclass

from . import _igusa_coeffs as _gen
from .binform import BinaryForm, NonSeparableError
from .nfield import FieldElement, FieldError

# weights of (I2, I4, I6, I10) in units of lambda^2
_WEIGHTS = (1, 2, 3, 5)


@dataclass(frozen=True)
class IgusaClebsch:
    I2: FieldElement
    I4: FieldElement
    I6: FieldElement
    I10: FieldElement

    def as_tuple(self):
        return (self.I2, self.I4, self.I6, self.I10)

    @property
    def I6p(self) -> FieldElement:
        return i6_prime(self.I2, self.I4, self.I6)

    def to_dict(self):
        return {k: str(v) for k, v in zip(("I2", "I4", "I6", "I10"), self.as_tuple())}


@dataclass(frozen=True)
class AbsoluteIgusa:
    i1: FieldElement | None
    i2: FieldElement | None
    i3: FieldElement | None
    # True when I2 = 0 or I4 = 0, so the triple does not pin down the class
    degenerate: bool = False

    def as_tuple(self):
        return (self.i1, self.i2, self.i3)

    def to_dict(self):
        d = {k: (None if v is None else str(v))
             for k, v in zip(("i1", "i2", "i3"), self.as_tuple())}
        d["degenerate"] = self.degenerate
        return d


def _as_sextic(F: BinaryForm) -> BinaryForm:
    if F.degree == 6:
        return F
    if F.degree == 5:
        return BinaryForm(list(F.coeffs) + [F.field.zero], F.field)
    raise FieldError(f"Igusa-Clebsch invariants need a sextic, got degree {F.degree}")


def _eval(terms, coeffs):
    field = coeffs[0].field
    # cache powers; exponents never exceed the degree of the invariant
    pw = [[field.one] for _ in coeffs]
    acc = field.zero
    for c, exps in terms:
        t = field(c)
        for i, e in enumerate(exps):
            if e:
                if coeffs[i].is_zero():
                    t = None
                    break
                row = pw[i]
                while len(row) <= e:
                    row.append(row[-1] * coeffs[i])
                t = t * row[e]
        if t is not None:
            acc = acc + t
    return acc


def igusa_clebsch(F: BinaryForm) -> IgusaClebsch:
    """Invariants normalised so that ``I10 = 2^20 * Delta(F)``."""
    F = _as_sextic(F)
    disc = F.discriminant()  # raises on non-separable input
    cs = F.coeffs
    return IgusaClebsch(_eval(_gen.I2, cs), _eval(_gen.I4, cs), _eval(_gen.I6, cs),
                        disc * (1 << 20))


def i6_prime(I2, I4, I6):
    return (I2 * I4 - I6 * 3) / 2


def i6_from_prime(I2, I4, I6p):
    return (I2 * I4 - I6p * 2) / 3


def absolute_igusa(ic: IgusaClebsch) -> AbsoluteIgusa:
    if ic.I10.is_zero():
        raise NonSeparableError("I10 = 0")
    I2, I4, I10 = ic.I2, ic.I4, ic.I10
    I6p = ic.I6p
    i1 = I4 * I6p / I10
    i2 = I2 * I4 * I4 / I10
    i3 = I4 ** 5 / (I10 * I10)
    return AbsoluteIgusa(i1, i2, i3, degenerate=I2.is_zero() or I4.is_zero())


def reconstruct(I2, ai: AbsoluteIgusa) -> IgusaClebsch:
    """Weighted point from I2 and the absolute triple (needs I2 != 0, i2 != 0)."""
    if I2.is_zero() or ai.i2 is None or ai.i2.is_zero():
        raise FieldError("reconstruction needs I2 != 0 and i2 != 0")
    i1, i2, i3 = ai.i1, ai.i2, ai.i3
    I4 = I2 ** 2 * i3 / i2 ** 2
    I6p = I2 ** 3 * i1 * i3 / i2 ** 3
    I10 = I2 ** 5 * i3 ** 2 / i2 ** 5
    return IgusaClebsch(I2, I4, i6_from_prime(I2, I4, I6p), I10)


def same_weighted_point(p, q, weights=_WEIGHTS) -> bool:
    """Exact test for ``q_k = mu^{w_k} p_k`` for some nonzero mu."""
    if len(p) != len(q):
        return False
    nz = []
    for x, y, w in zip(p, q, weights):
        if x.is_zero() != y.is_zero():
            return False
        if not x.is_zero():
            nz.append((x, y, w))
    for i in range(len(nz)):
        for j in range(i + 1, len(nz)):
            (x1, y1, w1), (x2, y2, w2) = nz[i], nz[j]
            if y1 ** w2 * x2 ** w1 != y2 ** w1 * x1 ** w2:
                return False
    return True


def same_geometric_class(F: BinaryForm, G: BinaryForm) -> bool:
    """Whether C_F and C_G become isomorphic over an algebraic closure."""
    a, b = igusa_clebsch(F), igusa_clebsch(G)
    return same_weighted_point(a.as_tuple(), b.as_tuple())

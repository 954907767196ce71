"""Minimal and reduced models of genus-2 curves y^2 = f(x).

Works over Q and over real quadratic fields Q(sqrt D') with exact arithmetic
in the maximal order.  See the README for a tour.
"""

from .binform import (
    BinaryForm,
    InvalidTransform,
    NonSeparableError,
    Transform,
    act,
    curve_discriminant,
    discriminant,
    discriminant_ideal,
    form_from_poly,
    format_form,
    format_poly,
    isomorphism_witness,
    make_form,
    parse_form,
)
from .igusa import (
    AbsoluteIgusa,
    IgusaClebsch,
    absolute_igusa,
    igusa_clebsch,
    same_geometric_class,
)
from .minimize import (
    FoundFactor,
    GlobalResult,
    LocalCase,
    classify_local,
    global_reduce,
    local_reduce,
    local_reduce_composite,
    reduce_with_class_group,
)
from .nfield import (
    RATIONALS,
    FieldElement,
    FieldError,
    OkIdeal,
    QuadField,
    fundamental_unit,
    parse_field,
    principal_ideal,
)
from .screduce import covariant, covariant_vector, reduce_gl2ok, reduce_sl2z
from .tables import load_tables, scramble_and_recover, verify_row

__version__ = "0.1.0"

__all__ = [
    "BinaryForm",
    "InvalidTransform",
    "NonSeparableError",
    "Transform",
    "act",
    "curve_discriminant",
    "discriminant",
    "discriminant_ideal",
    "form_from_poly",
    "format_form",
    "format_poly",
    "isomorphism_witness",
    "make_form",
    "parse_form",
    "AbsoluteIgusa",
    "IgusaClebsch",
    "absolute_igusa",
    "igusa_clebsch",
    "same_geometric_class",
    "FoundFactor",
    "GlobalResult",
    "LocalCase",
    "classify_local",
    "global_reduce",
    "local_reduce",
    "local_reduce_composite",
    "reduce_with_class_group",
    "RATIONALS",
    "FieldElement",
    "FieldError",
    "OkIdeal",
    "QuadField",
    "fundamental_unit",
    "parse_field",
    "principal_ideal",
    "covariant",
    "covariant_vector",
    "reduce_gl2ok",
    "reduce_sl2z",
    "load_tables",
    "scramble_and_recover",
    "verify_row",
]

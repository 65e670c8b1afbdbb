"""Ternary primitive BCH and LCD BCH codes: finite-field arithmetic over
GF(3^m), cyclotomic cosets and absolute coset leaders, code families and
their weight distributions, and exact Gauss and Kloosterman sums."""

from __future__ import annotations

from .charsums import (
    EisensteinInt,
    gauss_quadratic,
    kloosterman,
    kloosterman_bound,
    kloosterman_bound_scan,
    kloosterman_sum,
    kloosterman_weight_bridge,
)
from .codes import (
    FAMILIES,
    CyclicCode,
    closed_form_distribution,
    construct_family,
    dual,
    intersection_dimension,
    is_lcd,
    verify_bch_bound,
    weight_distribution_exhaustive,
    weight_distribution_trace,
)
from .cosets import Coset, absolute_coset_leader, acl_table, coset, delta_formula, top_acl_oracle
from .errors import CapacityError, DomainError, TernbchError, UsageError, VerificationError
from .field import Element, FieldContext, field_new
from .poly import Poly3, generator_from_defining_set, minimal_polynomial

__version__ = "0.1.0"

__all__ = [
    "CapacityError", "Coset", "CyclicCode", "DomainError", "EisensteinInt", "Element",
    "FAMILIES", "FieldContext", "Poly3", "TernbchError", "UsageError", "VerificationError",
    "absolute_coset_leader", "acl_table", "closed_form_distribution", "construct_family",
    "coset", "delta_formula", "dual", "field_new", "gauss_quadratic",
    "generator_from_defining_set", "intersection_dimension", "is_lcd", "kloosterman",
    "kloosterman_bound", "kloosterman_bound_scan", "kloosterman_sum",
    "kloosterman_weight_bridge", "minimal_polynomial", "top_acl_oracle", "verify_bch_bound",
    "weight_distribution_exhaustive", "weight_distribution_trace",
]

"""Truncated ordered abelian groups."""

from ._toag import (
    MixedInstanceError,
    ParseError,
    PreconditionError,
    Structure,
    check_axioms,
    elementarily_equivalent,
    enumerate_toags,
    is_presburger,
    p_add,
    p_cancel_witness,
    run,
    truncated_valuation,
    type_signature,
    valuation_laws_hold,
    verify_extension,
)

__all__ = [
    "MixedInstanceError",
    "ParseError",
    "PreconditionError",
    "Structure",
    "check_axioms",
    "elementarily_equivalent",
    "enumerate_toags",
    "is_presburger",
    "p_add",
    "p_cancel_witness",
    "run",
    "truncated_valuation",
    "type_signature",
    "valuation_laws_hold",
    "verify_extension",
]

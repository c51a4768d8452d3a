"""Exact arithmetic for truncated big and p-typical Witt vectors."""

from .core import (
    GhostVector,
    WittVector,
    decompose,
    frobenius,
    ghost,
    ghost_vector,
    one,
    project,
    random_vector,
    reassemble,
    scalar_mul,
    teichmuller,
    teichmuller_scale,
    unghost,
    verschiebung,
    witt_add,
    witt_mul,
    witt_neg,
    witt_pow,
    witt_sub,
    witt_vector,
    zero,
)
from .errors import WittError
from .profiles import (
    DivisorStableProfile,
    full_profile,
    p_typical_profile,
    parse_profile,
    validate_profile,
)
from .rings import (
    FiniteField,
    Integers,
    IntegersMod,
    LocalizedRationals,
    PolynomialRing,
    PrimeField,
    Rationals,
    RingElement,
    parse_ring,
)
from .universal import (
    Kind,
    delta_poly,
    epsilon_poly,
    epsilon_polys,
    frobenius_poly,
    structural_poly,
    witt_polynomial,
)
from .upoly import UPoly, X, Y

__all__ = [
    "DivisorStableProfile",
    "FiniteField",
    "GhostVector",
    "Integers",
    "IntegersMod",
    "Kind",
    "LocalizedRationals",
    "PolynomialRing",
    "PrimeField",
    "Rationals",
    "RingElement",
    "UPoly",
    "WittError",
    "WittVector",
    "X",
    "Y",
    "decompose",
    "delta_poly",
    "epsilon_poly",
    "epsilon_polys",
    "frobenius",
    "frobenius_poly",
    "full_profile",
    "ghost",
    "ghost_vector",
    "one",
    "p_typical_profile",
    "parse_profile",
    "parse_ring",
    "project",
    "random_vector",
    "reassemble",
    "scalar_mul",
    "structural_poly",
    "teichmuller",
    "teichmuller_scale",
    "unghost",
    "validate_profile",
    "verschiebung",
    "witt_add",
    "witt_mul",
    "witt_neg",
    "witt_polynomial",
    "witt_pow",
    "witt_sub",
    "witt_vector",
    "zero",
]

"""Exact character computations for simple Lie groups and flag varieties."""

from ._core import (
    FeasibilityError,
    IntegerOverflowError,
    RootSystem,
    bwb_line_bundle,
    decompose_tensor,
    euler_characteristic,
    freudenthal_character,
    irreducible_character,
    polyvector_euler_decomposition,
    rho_character,
    tensor_character,
    top_polyvector_check,
    verify_kostant,
    wahl_h0,
    weyl_dimension,
)

__all__ = [
    "FeasibilityError",
    "IntegerOverflowError",
    "RootSystem",
    "bwb_line_bundle",
    "decompose_tensor",
    "euler_characteristic",
    "freudenthal_character",
    "irreducible_character",
    "polyvector_euler_decomposition",
    "rho_character",
    "tensor_character",
    "top_polyvector_check",
    "verify_kostant",
    "wahl_h0",
    "weyl_dimension",
]

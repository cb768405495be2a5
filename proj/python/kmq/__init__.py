"""Exact q-analogs of weight multiplicities for finite and affine Kac-Moody algebras."""

from ._kmq import *  # noqa: F401,F403
from ._kmq import (
    AffineWeight,
    CartanData,
    DepthExceeded,
    Inconsistent,
    InvalidInput,
    ResourceLimit,
)

__all__ = [
    "AffineWeight",
    "CartanData",
    "DepthExceeded",
    "Inconsistent",
    "InvalidInput",
    "ResourceLimit",
    "affine_data",
    "check_nakaj_identity",
    "dimension_formula",
    "duality_row",
    "energy_of_highest",
    "finite_data",
    "is_dominant",
    "kostant_partition",
    "maximal_lift",
    "nakajima_lifts",
    "parse_weight",
    "principal_filtration",
    "psi",
    "psi_inverse",
    "q_multiplicity",
    "run_cli",
    "transpose",
    "weight_multiplicity",
]

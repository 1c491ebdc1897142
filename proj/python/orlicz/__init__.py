"""Orlicz-space toolkit: norms, conjugation, growth conditions, slice geometry."""

from ._core import (
    Measure,
    OrliczFunction,
    amemiya_norm,
    classify,
    conjugate,
    construct_witness,
    fundamental_function,
    inf,
    luxemburg_norm,
    orlicz_norm_dual,
    sigma_bound,
    slice_diameter_lower_bound,
    young_gap,
)

__all__ = [
    "Measure",
    "OrliczFunction",
    "amemiya_norm",
    "classify",
    "conjugate",
    "construct_witness",
    "fundamental_function",
    "inf",
    "luxemburg_norm",
    "orlicz_norm_dual",
    "sigma_bound",
    "slice_diameter_lower_bound",
    "young_gap",
]

"""Geometry of the positive-definite cone: metrics and geodesics, the
conjugation action, finite-group unitarizers and similarity numbers,
expectation splittings, and the verification suites."""

from ._core import (
    ConegeoError,
    Expectation,
    Group,
    act,
    average_unitarizer,
    banach_mazur_delta,
    circumcenter,
    circumcenter_unitarizer,
    close_group,
    commutant_basis,
    dist,
    dist_to_fixed_cone,
    emi_residual,
    expm,
    fixed_cone_basis,
    gen_bounded_rep,
    geodesic,
    group_average_expectation,
    interpolate_family,
    logm,
    matrix_from_json,
    matrix_to_json,
    orbit,
    orbit_diameter,
    pinching_expectation,
    powm,
    run_suite,
    segal_residual,
    similarity_number,
    split_invertible,
    split_positive,
    symmetric_rescale,
)

__all__ = [
    "ConegeoError",
    "Expectation",
    "Group",
    "act",
    "average_unitarizer",
    "banach_mazur_delta",
    "circumcenter",
    "circumcenter_unitarizer",
    "close_group",
    "commutant_basis",
    "dist",
    "dist_to_fixed_cone",
    "emi_residual",
    "expm",
    "fixed_cone_basis",
    "gen_bounded_rep",
    "geodesic",
    "group_average_expectation",
    "interpolate_family",
    "logm",
    "matrix_from_json",
    "matrix_to_json",
    "orbit",
    "orbit_diameter",
    "pinching_expectation",
    "powm",
    "run_suite",
    "segal_residual",
    "similarity_number",
    "split_invertible",
    "split_positive",
    "symmetric_rescale",
]

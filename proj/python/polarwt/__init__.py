"""Exact low-weight spectra of decreasing monomial (polar / Reed-Muller) codes."""

from ._polarwt import (
    InfoSet,
    WeightSpectrum,
    brute_spectrum,
    construct_bec,
    construct_pw,
    construct_rm,
    count_min_weight,
    count_type1,
    count_type2,
    format_code_spec,
    forms_census_type1,
    forms_census_type2,
    full_spectrum,
    leq,
    monomial_from_row,
    parse_code_spec,
    q_function,
    row_from_monomial,
    sigma_from_ebn0,
    union_bound,
    weight_shape_check,
)

__all__ = [name for name in dir() if not name.startswith("_")]

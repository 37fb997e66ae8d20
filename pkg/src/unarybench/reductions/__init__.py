"""Executable reductions between the problem kinds, and their verifier."""

from .core import ManyOneReduction, TruthTableReduction, ReductionReport, verify_reduction
from .numbers import (
    uk_u2part, uk_to_u2part, u2part_to_uk, ambuk_tt, uk_to_ambuk, uk_uasubsum,
    uk_to_uasubsum, uasubsum_to_uk, shiftuk_to_variants, shiftu2part_to_shiftuk,
    ubcp_to_ambuk, uk_to_ubcp, suk_to_su2part,
)
from .graphs import (
    ewpp_eplp, eplp_to_ewpp, ewpp_to_eplp, ukexc_toewpp, ukexc_to_toewpp,
    toewpp_to_ukexc, uk_to_ecewpp,
)
from .lattices import su2part_to_ucvp_max, usvp_to_ucvp_tt
from .compiler import ncta_to_eplp
from .registry import REDUCTIONS, MUTANTS, MUTANT_TARGET, get_reduction

__all__ = [
    "ManyOneReduction", "TruthTableReduction", "ReductionReport", "verify_reduction",
    "uk_u2part", "uk_to_u2part", "u2part_to_uk", "ambuk_tt", "uk_to_ambuk", "uk_uasubsum",
    "uk_to_uasubsum", "uasubsum_to_uk", "shiftuk_to_variants", "shiftu2part_to_shiftuk",
    "ubcp_to_ambuk", "uk_to_ubcp", "suk_to_su2part", "ewpp_eplp", "eplp_to_ewpp",
    "ewpp_to_eplp", "ukexc_toewpp", "ukexc_to_toewpp", "toewpp_to_ukexc", "uk_to_ecewpp",
    "su2part_to_ucvp_max", "usvp_to_ucvp_tt", "ncta_to_eplp",
    "REDUCTIONS", "MUTANTS", "MUTANT_TARGET", "get_reduction",
]

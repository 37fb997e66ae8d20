"""Named reductions, addressable from the command line."""

from ..errors import UnknownKind
from .core import ManyOneReduction, TruthTableReduction
from . import numbers as nb, graphs as gr, lattices as la

_MANY_ONE = [
    ("uk->u2part", "UK", "U2PART", nb.uk_to_u2part),
    ("u2part->uk", "U2PART", "UK", nb.u2part_to_uk),
    ("uk->ambuk", "UK", "AmbUK", nb.uk_to_ambuk),
    ("uk->uasubsum", "UK", "UASubSum", nb.uk_to_uasubsum),
    ("uasubsum->uk", "UASubSum", "UK", nb.uasubsum_to_uk),
    ("shiftuk->shiftu2part", "ShiftUK", "ShiftU2PART", nb.shiftuk_to_shiftu2part),
    ("shiftuk->shiftambuk", "ShiftUK", "ShiftAmbUK", nb.shiftuk_to_shiftambuk),
    ("shiftuk->shiftuasubsum", "ShiftUK", "ShiftUASubSum", nb.shiftuk_to_shiftuasubsum),
    ("shiftu2part->shiftuk", "ShiftU2PART", "ShiftUK", nb.shiftu2part_to_shiftuk),
    ("ubcp->ambuk", "UBCP", "AmbUK", nb.ubcp_to_ambuk),
    ("uk->ubcp", "UK", "UBCP", nb.uk_to_ubcp),
    ("eplp->ewpp", "EPLP", "EWPP", gr.eplp_to_ewpp),
    ("ewpp->eplp", ("EWPP", "TO-EWPP", "EC-EWPP"), "EPLP", gr.ewpp_to_eplp),
    ("ukexc->toewpp", "UKEXC", "TO-EWPP", gr.ukexc_to_toewpp),
    ("toewpp->ukexc", "TO-EWPP", "UKEXC", gr.toewpp_to_ukexc),
    ("uk->ecewpp", "UK", "EC-EWPP", gr.uk_to_ecewpp),
    ("suk->su2part", "SUK", "SU2PART", nb.suk_to_su2part),
    ("su2part->ucvp", "SU2PART", "UCVP_max", la.su2part_to_ucvp_max),
]

_TRUTH_TABLE = [
    ("ambuk-tt", "AmbUK", "UK", nb.ambuk_queries),
    ("usvp-tt", "USVP_max", "UCVP_max", la.usvp_queries),
    ("usvp-tt-min", "USVP_min", "UCVP_min", la.usvp_queries),
]

REDUCTIONS = {}
for name, src, dst, f in _MANY_ONE:
    REDUCTIONS[name] = ManyOneReduction(name, src, dst, f)
for name, src, dst, f in _TRUTH_TABLE:
    REDUCTIONS[name] = TruthTableReduction(name, src, dst, f, any, "OR")

# broken variants: each must be caught by the verifier
MUTANTS = {
    "drop-gadget": ManyOneReduction("uk->u2part[drop-gadget]", "UK", "U2PART",
                                    nb.uk_to_u2part_drop_gadget),
    "leaving-edge-weights": ManyOneReduction("ukexc->toewpp[leaving-edge-weights]", "UKEXC",
                                             "TO-EWPP", gr.ukexc_to_toewpp_leaving),
    "odd-sum-unchecked": ManyOneReduction("su2part->ucvp[odd-sum-unchecked]", "SU2PART",
                                          "UCVP_max", la.su2part_to_ucvp_literal),
    # drop-dummy-tail mutates the machine compiler; see unarybench.verification
    "drop-dummy-tail": None,
}

# which reduction each mutant replaces
MUTANT_TARGET = {
    "drop-gadget": "uk->u2part",
    "leaving-edge-weights": "ukexc->toewpp",
    "odd-sum-unchecked": "su2part->ucvp",
    "drop-dummy-tail": "ncta->eplp",
}


def get_reduction(name):
    if name not in REDUCTIONS:
        raise UnknownKind(f"unknown reduction {name!r}; known: {', '.join(REDUCTIONS)}")
    return REDUCTIONS[name]

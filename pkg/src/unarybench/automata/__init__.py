"""Alternating multi-counter pushdown automata: model, runs, machines."""

from .model import (
    MachineSpec, MachineBuilder, Transition, machine_to_text, machine_from_text,
    LEFT, RIGHT, END, BOTTOM, EXISTENTIAL, UNIVERSAL, ACCEPTING, REJECTING,
)
from .run import RunResult, simulate, audit_run, trace, accepts
from .library import (
    build_problem_machine, synthetic_machine, PROBLEM_MACHINES, MACHINE_KIND,
)
from .contract import contract_counters

__all__ = [
    "MachineSpec", "MachineBuilder", "Transition", "machine_to_text", "machine_from_text",
    "LEFT", "RIGHT", "END", "BOTTOM", "EXISTENTIAL", "UNIVERSAL", "ACCEPTING", "REJECTING",
    "RunResult", "simulate", "audit_run", "trace", "accepts",
    "build_problem_machine", "synthetic_machine", "PROBLEM_MACHINES", "MACHINE_KIND",
    "contract_counters",
]

"""The full check matrix behind ``unarybench verify`` and the acceptance suite.

Every check returns a :class:`ReductionReport`: ``agree`` counts instances
that passed, ``disagree`` the failures (with counterexamples) and
``indeterminate`` the instances a budget refused to settle.
"""

from itertools import product
import random
import time

from . import families as fam
from .automata import (
    build_problem_machine, synthetic_machine, simulate, audit_run, contract_counters,
    MACHINE_KIND, PROBLEM_MACHINES,
)
from .errors import BudgetExhausted
from .instances import ALL_KINDS
from .problems import decide, decide_lattice_family, subset_sum_dp
from .reductions import REDUCTIONS, MUTANTS, verify_reduction, ReductionReport
from .reductions.compiler import ncta_to_eplp, accepting_sinks, path_depths
from .unary_codec import (
    serialize_instance, parse_instance, f_sum, ShiftUnaryValue, shift_unary_value,
    encode_general_int, decode_general_int,
)

B = fam.BOUNDS


def _independent(x):
    import numpy as np
    return np.linalg.matrix_rank(np.array(x.basis, dtype=float)) == len(x.basis)


def lattice_source_family(kind, seed=0):
    """Independent bases: dimension <= 2 exhaustively, plus seeded dimension-3 samples."""
    for x in fam.lattice_family(B["lattice"], kind):
        if _independent(x):
            yield x
    rng = random.Random(seed)
    made = 0
    while made < fam.LATTICE_DIM3_SAMPLES:
        m = rng.randint(1, 3)
        x = fam.random_lattice(rng, kind, 3, m, 2)
        if _independent(x):
            made += 1
            yield x


def graph_sources(kind="TO-EWPP", seed=0):
    yield from fam.dag_family(B["graph"], kind)
    yield from fam.wide_dag_sample(B["graph-wide"], seed, kind=kind)


def ewpp_sources(seed=0):
    """Topologically ordered graphs plus their reversed relabeling (not ordered)."""
    for g in graph_sources("EWPP", seed):
        yield g
        if g.edges:
            yield fam.reversed_labels(g)


def eplp_sources():
    for g in fam.dag_family(B["eplp"], "EPLP", weighted=False):
        yield g
        if g.edges:
            yield fam.reversed_labels(g, "EPLP")


def shift_sources():
    yield from fam.shiftuk_family(B["shift"])
    yield from fam.shiftuk_sample()


def _uk_dp_oracle(y):
    # the image can carry more items than subset enumeration allows
    return subset_sum_dp(y.items, y.b)


def _su2part_target_oracle(y):
    # last n coordinates force z in {0,1}^n, so bound 1 is exact
    return decide_lattice_family(y, coeff_bound=1)


# (reduction, family label, source iterator factory, target oracle, asserted)
REDUCTION_PLAN = [
    ("uk->u2part", "UK n<=4 a<=6 b<=sum", lambda: fam.uk_family(B["subset"]), None, True),
    ("u2part->uk", "U2PART n<=4 a<=6", lambda: fam.u2part_family(B["subset"]), None, True),
    ("ambuk-tt", "AmbUK n<=4 a<=6 m<=2", lambda: fam.ambuk_family(B["ambuk"]), None, True),
    ("uk->ambuk", "UK n<=4 a<=6", lambda: fam.uk_family(B["subset"]), None, True),
    ("uk->uasubsum", "UK n<=4 a<=6", lambda: fam.uk_family(B["subset"]), None, True),
    ("uasubsum->uk", "UASubSum n<=4 a<=6 b<=sum+1",
     lambda: fam.uasubsum_family(B["uasubsum"]), _uk_dp_oracle, True),
    ("shiftuk->shiftu2part", "ShiftUK n<=4 p*2^t<=6, t<=20 sampled", shift_sources, None, True),
    ("shiftuk->shiftambuk", "ShiftUK n<=4 p*2^t<=6, t<=20 sampled", shift_sources, None, True),
    ("shiftuk->shiftuasubsum", "ShiftUK n<=4 p*2^t<=6, t<=20 sampled", shift_sources, None, True),
    ("shiftu2part->shiftuk", "ShiftU2PART n<=4 p*2^t<=6",
     lambda: fam.shiftu2part_family(B["shift"]), None, True),
    ("ubcp->ambuk", "UBCP n<=4 lengths<=6", lambda: fam.ubcp_family(B["ubcp-reduction"]), None, True),
    ("uk->ubcp", "UK n<=4 a<=6", lambda: fam.uk_family(B["subset"]), None, True),
    ("eplp->ewpp", "EPLP <=5 vertices c<=5 (+relabeled)", eplp_sources, None, True),
    ("ewpp->eplp", "EWPP <=4 vertices w<=4, 5 vertices sampled (+relabeled)",
     ewpp_sources, None, True),
    ("ukexc->toewpp", "UKEXC n<=3 a<=6, n=4 a<=3, all EXC",
     lambda: _chain(fam.ukexc_family(B["ukexc"]), fam.ukexc_family(B["ukexc-wide"], min_n=4)),
     None, True),
    ("toewpp->ukexc", "TO-EWPP <=4 vertices w<=4, 5 vertices sampled",
     lambda: graph_sources("TO-EWPP"), None, True),
    ("uk->ecewpp", "UK n<=4 a<=6", lambda: fam.uk_family(B["subset"]), None, True),
    ("suk->su2part", "SUK m=1 n<=4 a<=6, m=2 n<=3 a<=3, b<=sum+1",
     lambda: _chain(fam.suk_family(B["suk"]), fam.suk_family(B["suk-two-row"], min_m=2)),
     None, True),
    ("su2part->ucvp", "SU2PART m=1 n<=4 a<=6, m=2 n<=3 a<=3",
     lambda: _chain(fam.su2part_family(B["su2part"]),
                    fam.su2part_family(B["su2part-two-row"], min_m=2)),
     _su2part_target_oracle, True),
    ("usvp-tt", "USVP_max dim<=2 |coord|<=2, dim 3 sampled, independent",
     lambda: lattice_source_family("USVP_max"), None, True),
    ("usvp-tt-min", "USVP_min dim<=2 |coord|<=2, dim 3 sampled, independent",
     lambda: lattice_source_family("USVP_min"), None, False),
]


def _chain(*its):
    for it in its:
        yield from it


def run_reduction_check(name, mutant=None):
    for rname, label, source, target_oracle, _ in REDUCTION_PLAN:
        if rname == name:
            r = MUTANTS[mutant] if mutant else REDUCTIONS[name]
            return verify_reduction(r, source(), label, target_oracle=target_oracle)
    raise KeyError(name)


def reduction_checks(names=None):
    for rname, *_ in REDUCTION_PLAN:
        if names is None or rname in names:
            yield rname, run_reduction_check(rname)


def asserted(name):
    return next(a for r, *_, a in REDUCTION_PLAN if r == name)


# --- machines ---------------------------------------------------------------

def machine_bounds(name):
    m = build_problem_machine(name)
    if name == "UBCP":
        return [B["machine-ubcp"], B["machine-ubcp-long"]]
    if m.mode == "two-way" or any(t == "universal" for t in m.states.values()):
        return [B["machine-two-way"]]
    return [B["machine-one-way"]]


def machine_family(name):
    kind = MACHINE_KIND[name]
    seen = set()
    for bd in machine_bounds(name):
        for x in fam.family(kind, bounds=bd):
            if x not in seen:
                seen.add(x)
                yield x


def machine_check(name, budget=None, machine=None):
    """Machine verdict against the oracle on every instance string of the family."""
    m = machine or build_problem_machine(name)
    report = ReductionReport(m.name, "machine vs oracle")
    start = time.perf_counter()
    for x in machine_family(name):
        text = serialize_instance(x)
        try:
            got = simulate(m, text, budget=budget).accepted
        except BudgetExhausted:
            report.indeterminate += 1
            continue
        if got == decide(x):
            report.agree += 1
        else:
            report.disagree += 1
            if len(report.counterexamples) < 10:
                report.counterexamples.append(f"{text}: machine {got}, oracle {not got}")
    report.seconds = time.perf_counter() - start
    return report


# claimed resource shapes: (max turns per store, max alternation blocks, must start existential)
AUDIT_CLAIMS = {
    "UK-1t1NCA": ((1,), 1, True),
    "AmbUK-1t1NCA": ((1,), 1, True),
    "UASubSum-1t1N2CA": ((1, 1), 1, True),
    "U2PART-1t1N2CA": ((1, 1), 1, True),
    "SUK-1t1Σ2PDCA": ((1, 1), 2, True),  # counter, then stack
}


def audit_check(name, budget=None):
    m = build_problem_machine(name)
    turns, blocks, existential_first = AUDIT_CLAIMS[name]
    report = ReductionReport(m.name, f"audit turns<={turns} blocks<={blocks}")
    start = time.perf_counter()
    for x in machine_family(name):
        text = serialize_instance(x)
        try:
            r = audit_run(m, text, budget=budget)
        except BudgetExhausted:
            report.indeterminate += 1
            continue
        ok = (all(a <= b for a, b in zip(r.max_turns, turns)) and r.max_alternations <= blocks
              and (r.starts_existential or not existential_first))
        if ok:
            report.agree += 1
        else:
            report.disagree += 1
            if len(report.counterexamples) < 10:
                report.counterexamples.append(
                    f"{text}: turns {r.max_turns}, blocks {r.max_alternations}, "
                    f"existential first {r.starts_existential}")
    report.seconds = time.perf_counter() - start
    return report


# --- machine compiler ---------------------------------------------------------

COMPILER_MACHINES = ("UK-1t1NCA", "EqualBlocks2-1CA")
COMPILER_MAX_LEN = 8


def all_strings(max_len, alphabet="1#"):
    for n in range(max_len + 1):
        for w in product(alphabet, repeat=n):
            yield "".join(w)


def _machine(name):
    return build_problem_machine(name) if name in PROBLEM_MACHINES else synthetic_machine(name)


def compiler_check(name, max_len=COMPILER_MAX_LEN, dummy_tail=True):
    """accepts(x) == (image in EPLP), plus the depth invariants of the image."""
    m = _machine(name)
    label = "ncta->eplp" + ("" if dummy_tail else "[drop-dummy-tail]")
    report = ReductionReport(f"{label} {m.name}", f"all strings |x|<={max_len}")
    start = time.perf_counter()
    for x in all_strings(max_len):
        g = ncta_to_eplp(m, x, dummy_tail=dummy_tail)
        accepted = simulate(m, x).accepted
        problems = []
        if g.target != len(x) + 2:
            problems.append(f"target {g.target} != |x|+2")
        if decide(g) != accepted:
            problems.append(f"machine {accepted}, image {not accepted}")
        depths = path_depths(g)
        if max((max(d) for d in depths.values() if d), default=0) > len(x) + 4:
            problems.append("path longer than |x|+4")
        acc = accepting_sinks(m, x, g)
        sinks = set(g.sinks())
        at_c = {v for v in sinks if g.target in depths[v]}
        if at_c != acc:
            problems.append(f"depth-{g.target} sinks {sorted(at_c)} != accepting {sorted(acc)}")
        if any(depths[v] != {g.target} for v in acc):
            problems.append("accepting sink off depth |x|+2")
        if problems:
            report.disagree += 1
            if len(report.counterexamples) < 10:
                report.counterexamples.append(f"{x!r}: " + "; ".join(problems))
        else:
            report.agree += 1
    report.seconds = time.perf_counter() - start
    return report


# --- counter contraction --------------------------------------------------------

CONTRACTION_MACHINES = ("U2PART-1t1N2CA", "EqualBlocks3-2CA")
CONTRACTION_MAX_LEN = 6


def contraction_check(name, max_len=CONTRACTION_MAX_LEN):
    m = _machine(name)
    c = contract_counters(m)
    report = ReductionReport(f"contract {m.name}",
                             f"{m.counters} counters -> {c.counters}"
                             f"{' + stack' if c.has_stack else ''}, |x|<={max_len}")
    start = time.perf_counter()
    for x in all_strings(max_len):
        a, b = simulate(m, x).accepted, simulate(c, x).accepted
        if a == b:
            report.agree += 1
        else:
            report.disagree += 1
            report.counterexamples.append(f"{x!r}: original {a}, contracted {b}")
    report.seconds = time.perf_counter() - start
    return report


def contraction_oracle_check(max_n=3, max_value=3):
    c = contract_counters(build_problem_machine("U2PART-1t1N2CA"))
    report = ReductionReport("contract U2PART-1t1N2CA", f"vs oracle n<={max_n} a<={max_value}")
    start = time.perf_counter()
    for x in fam.u2part_family(fam.Bounds(max_n=max_n, max_value=max_value)):
        text = serialize_instance(x)
        if simulate(c, text).accepted == decide(x):
            report.agree += 1
        else:
            report.disagree += 1
            report.counterexamples.append(text)
    report.seconds = time.perf_counter() - start
    return report


# --- encodings --------------------------------------------------------------------

def fsum_check(count=1000, seed=2024, max_p=50, max_t=20, max_len=8):
    report = ReductionReport("f_sum", f"{count} seeded lists p<={max_p} t<={max_t}")
    rng = random.Random(seed)
    for _ in range(count):
        xs = [ShiftUnaryValue(rng.randint(1, max_p), rng.randint(0, max_t))
              for _ in range(rng.randint(1, max_len))]
        total = sum(x.p * 2 ** x.t for x in xs)
        expected = bin(total)[2:][::-1]
        got = f_sum(xs)
        if got == expected and int(got[::-1], 2) == sum(shift_unary_value(x) for x in xs):
            report.agree += 1
        else:
            report.disagree += 1
            report.counterexamples.append(f"{xs}: {got} != {expected}")
    return report


def codec_check(kinds=ALL_KINDS):
    report = ReductionReport("codec round-trip", "every generated instance of every kind")
    start = time.perf_counter()
    for kind in kinds:
        for x in fam.family(kind):
            text = serialize_instance(x)
            try:
                back = parse_instance(text, kind)
            except Exception as e:  # noqa: BLE001 - recorded as a failure
                back = e
            if back == x:
                report.agree += 1
            else:
                report.disagree += 1
                if len(report.counterexamples) < 10:
                    report.counterexamples.append(f"{kind} {text}: {back!r}")
    for a in range(-100, 101):
        if decode_general_int(encode_general_int(a)) == a:
            report.agree += 1
        else:
            report.disagree += 1
            report.counterexamples.append(f"general unary {a}")
    report.seconds = time.perf_counter() - start
    return report




# --- the whole matrix ---------------------------------------------------------------

def mutant_checks(name):
    """Checks rerun with the broken variant ``name`` swapped in."""
    from .reductions import MUTANT_TARGET
    if name not in MUTANT_TARGET:
        raise KeyError(name)
    if name == "drop-dummy-tail":
        return [compiler_check(m, dummy_tail=False) for m in COMPILER_MACHINES]
    return [run_reduction_check(MUTANT_TARGET[name], mutant=name)]


SECTIONS = ("reduction", "machine", "audit", "compiler", "contraction", "encoding")


def run_matrix(budget=None, sections=SECTIONS, progress=None):
    """Yield (section, report, asserted) for every check of the default run.

    ``budget`` caps the configurations each machine run may explore; runs
    that hit it are counted as indeterminate. Report-only checks come with
    ``asserted`` False and never fail the run.
    """
    def emit(section, report, must=True):
        if progress:
            progress(section, report)
        return section, report, must

    if "reduction" in sections:
        for name, report in reduction_checks():
            yield emit("reduction", report, asserted(name))
    if "machine" in sections:
        for name in PROBLEM_MACHINES:
            yield emit("machine", machine_check(name, budget=budget))
    if "audit" in sections:
        for name in AUDIT_CLAIMS:
            yield emit("audit", audit_check(name, budget=budget))
    if "compiler" in sections:
        for name in COMPILER_MACHINES:
            yield emit("compiler", compiler_check(name))
    if "contraction" in sections:
        for name in CONTRACTION_MACHINES:
            yield emit("contraction", contraction_check(name))
        yield emit("contraction", contraction_oracle_check())
    if "encoding" in sections:
        yield emit("encoding", fsum_check())
        yield emit("encoding", codec_check())


__all__ = [
    "REDUCTION_PLAN", "run_reduction_check", "reduction_checks", "machine_check",
    "audit_check", "compiler_check", "contraction_check", "contraction_oracle_check",
    "fsum_check", "codec_check", "mutant_checks", "run_matrix", "SECTIONS",
    "AUDIT_CLAIMS", "COMPILER_MACHINES", "CONTRACTION_MACHINES",
]

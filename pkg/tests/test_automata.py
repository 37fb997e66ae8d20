from itertools import product

import pytest

from unarybench import instances as inst
from unarybench.automata import (
    MachineBuilder, build_problem_machine, synthetic_machine, simulate, audit_run, trace,
    contract_counters, machine_to_text, machine_from_text, PROBLEM_MACHINES, MACHINE_KIND,
    ACCEPTING, REJECTING, UNIVERSAL, END,
)
from unarybench.automata.run import explore, stack_symbols, push, pop, initial_config
from unarybench.errors import BudgetExhausted, InvalidMachine, ParseError, UnknownKind
from unarybench.problems import decide
from unarybench.unary_codec import serialize_instance


def run(name, x):
    return simulate(build_problem_machine(name), serialize_instance(x)).accepted


# --- simulate ------------------------------------------------------------------------

def test_uk_machine_examples():
    m = build_problem_machine("UK-1t1NCA")
    assert simulate(m, "11#11").accepted is True
    assert simulate(m, "1#11").accepted is False
    assert simulate(m, "11111#11#111#1111").accepted is True


def test_no_accepting_states_rejects():
    m = synthetic_machine("Null")
    assert all(simulate(m, x).accepted is False for x in ["", "1", "1#1", "##"])


def test_problem_machine_examples():
    assert run("UKEXC-2N3CA", inst.ukexc(5, (2, 3), [(1, 2)])) is False
    assert run("UKEXC-2N3CA", inst.ukexc(5, (2, 3))) is True
    assert run("SUK-1t1Σ2PDCA", inst.suk((2, 1), [(1, 2), (2, 1)])) is True
    assert run("UBCP", inst.ubcp([(1, 2), (2, 1)], 2)) is True
    assert run("UBCP", inst.ubcp([(1, 2), (2, 1)], 1)) is False


def test_every_machine_matches_oracle_on_small_instances():
    small = {
        "UK": [inst.uk(b, a) for a in [(1,), (2, 3), (1, 1, 2)] for b in range(1, 6)],
        "U2PART": [inst.u2part(a) for a in [(1,), (1, 1), (1, 2), (1, 2, 3), (2, 2, 3)]],
        "AmbUK": [inst.ambuk(bs, (2, 3)) for bs in [(1,), (5,), (1, 4), (1, 3)]],
        "UASubSum": [inst.uasubsum(b1, b2, (2, 3)) for b1 in range(1, 6) for b2 in range(1, 6)],
        "UKEXC": [inst.ukexc(b, (1, 2, 1), exc) for b in (2, 3, 4)
                  for exc in [(), [(1, 2)], [(2, 3)], [(1, 2), (1, 3), (2, 3)]]],
        "SUK": [inst.suk(b, [(1, 2), (2, 1)]) for b in product(range(1, 4), repeat=2)],
        "UBCP": [inst.ubcp(p, k) for p in [[(1, 2), (2, 1)], [(1, 3), (2, 1), (2, 1)]] for k in (1, 2, 3)],
    }
    for name in PROBLEM_MACHINES:
        m = build_problem_machine(name)
        for x in small[MACHINE_KIND[name]]:
            assert simulate(m, serialize_instance(x)).accepted == decide(x), (name, x)


def test_unknown_machine():
    with pytest.raises(UnknownKind):
        build_problem_machine("Foo")
    assert build_problem_machine("SUK-1t1S2PDCA").name == "SUK-1t1Σ2PDCA"


def test_budget_exhaustion_is_not_rejection():
    m = build_problem_machine("UK-1t1NCA")
    with pytest.raises(BudgetExhausted):
        simulate(m, "11#11", budget=3)
    r = simulate(m, "11#11", budget=3, strict=False)
    assert r.accepted is None and r.verdict == "indeterminate" and r.budget_exhausted


def test_simulate_is_deterministic():
    m = build_problem_machine("AmbUK-1t1NCA")
    x = serialize_instance(inst.ambuk((3, 6), (1, 2, 4)))
    assert simulate(m, x) == simulate(m, x)


def test_universal_branches_all_need_to_accept():
    b = MachineBuilder("split", 0, "one-way")
    b.state("u", UNIVERSAL, start=True)
    b.state("yes", ACCEPTING)
    b.state("go")
    b.add("u", "<", "go")
    b.add("u", "<", "yes", move=0)
    for s in "1#":
        b.add("go", s, "go")
    b.add("go", ">", "yes")
    m = b.build()
    # the stationary branch accepts too early (head not past the input)
    assert simulate(m, "11").accepted is False


def test_cycles_never_accept():
    b = MachineBuilder("loop", 1, "one-way")
    b.state("s", start=True)
    b.state("yes", ACCEPTING)
    b.add("s", "<", "s", move=0, deltas=(1,))
    b.add("s", "<", "s", move=0, guard="N", deltas=(-1,))
    m = b.build(budget=(2, 1))
    assert simulate(m, "", budget=1000, strict=False).accepted is None


# --- audits ----------------------------------------------------------------------------

def test_uk_machine_makes_one_turn():
    r = audit_run(build_problem_machine("UK-1t1NCA"), serialize_instance(inst.uk(5, (2, 3, 4))))
    assert r.accepted and r.max_turns == (1,) and r.max_alternations == 1


def test_suk_machine_alternation_shape():
    r = audit_run(build_problem_machine("SUK-1t1Σ2PDCA"),
                  serialize_instance(inst.suk((2, 1), [(1, 2), (2, 1)])))
    assert r.accepted and r.starts_existential
    assert r.max_alternations == 2 and r.max_turns == (1, 1)


def test_counter_free_machine_has_no_turns():
    r = audit_run(synthetic_machine("Null"), "1#1")
    assert r.max_turns == () and r.max_alternations == 1


def test_audit_counts_a_second_turn():
    b = MachineBuilder("zigzag", 1, "real-time")
    b.state("a", start=True)
    b.state("b")
    b.state("c")
    b.state("d")
    b.state("yes", ACCEPTING)
    b.add("a", "<", "b", deltas=(1,))
    b.add("b", "1", "c", guard="N", deltas=(-1,))
    b.add("c", "1", "d", deltas=(1,))
    b.add("d", "1", "yes", guard="N", deltas=(-1,))
    r = audit_run(b.build(), "111")
    assert r.max_turns == (2,)


# --- model and text format ------------------------------------------------------------------

def test_machine_text_roundtrip():
    for name in PROBLEM_MACHINES:
        m = build_problem_machine(name)
        assert machine_from_text(machine_to_text(m)) == m


def test_machine_text_errors():
    with pytest.raises(ParseError):
        machine_from_text("machine x\nmode one-way\nbogus\n")
    with pytest.raises(ParseError):
        machine_from_text("mode one-way\n")


@pytest.mark.parametrize("guard, deltas, mode, move, sym", [
    ("Z", (-1,), "one-way", 1, "1"),   # decrement on a zero guard
    ("*", (0,), "real-time", 0, "1"),  # stationary real-time move
    ("*", (0,), "one-way", -1, "1"),   # left move in one-way mode
    ("*", (0,), "two-way", -1, "<"),   # falls off the left endmarker
])
def test_invalid_transitions(guard, deltas, mode, move, sym):
    b = MachineBuilder("bad", 1, mode)
    b.state("s", start=True)
    b.add("s", sym, "s", move=move, guard=guard, deltas=deltas)
    with pytest.raises(InvalidMachine):
        b.build()


def test_halting_states_have_no_moves():
    b = MachineBuilder("bad", 0)
    b.state("s", REJECTING, start=True)
    b.add("s", "1", "s")
    with pytest.raises(InvalidMachine):
        b.build()


def test_end_moves_only_in_one_way_mode():
    b = MachineBuilder("bad", 0, "two-way")
    b.state("s", start=True)
    b.add("s", END, "s", move=0)
    with pytest.raises(InvalidMachine):
        b.build()


def test_run_length_stack():
    m = build_problem_machine("SUK-1t1Σ2PDCA")
    s = initial_config(m)[3]
    s = push(push(push(s, "T"), "T"), "F")
    assert stack_symbols(s) == ["Z0", "T", "T", "F"]
    assert stack_symbols(pop(pop(s))) == ["Z0", "T"]


def test_counters_and_stack_stay_valid_everywhere():
    m = build_problem_machine("SUK-1t1Σ2PDCA")
    _, nodes, _, _ = explore(m, serialize_instance(inst.suk((2, 1), [(1, 2), (2, 1)])))
    for config, _ in nodes:
        assert min(config[2]) >= 0 and config[3][0] == ("Z0", 1)


# --- trace -----------------------------------------------------------------------------------

def test_trace_accepting_path_ends_at_bottom():
    r = trace(build_problem_machine("UK-1t1NCA"), "111#1#11")
    assert r.accepted and r.path[-1].startswith("A acc") and r.path[-1].endswith("c=[0]")


def test_trace_rejection_statistics():
    r = trace(build_problem_machine("UK-1t1NCA"), "111#11")
    assert r.path[0] == "no accepting path"
    assert r.path[1] == f"configurations explored: {r.explored}"


def test_trace_shows_both_phases():
    r = trace(build_problem_machine("SUK-1t1Σ2PDCA"), serialize_instance(inst.suk((2, 1), [(1, 2), (2, 1)])))
    tags = [line.strip()[0] for line in r.path]
    first_u = tags.index("U")
    assert set(tags[:first_u]) == {"E"} and "E" not in tags[first_u:]
    assert any(line.startswith("  ") for line in r.path)


# --- contraction -------------------------------------------------------------------------------

def all_strings(n):
    for k in range(n + 1):
        for w in product("1#", repeat=k):
            yield "".join(w)


def test_single_counter_machine_unchanged():
    m = build_problem_machine("UK-1t1NCA")
    assert contract_counters(m) is m


def test_contract_equal_blocks():
    m = synthetic_machine("EqualBlocks3-2CA")
    c = contract_counters(m)
    assert c.counters == 1 and c.has_stack
    for x in all_strings(5):
        assert simulate(m, x).accepted == simulate(c, x).accepted, x


def test_contract_three_counter_machine():
    m = build_problem_machine("UBCP")
    c = contract_counters(m)
    assert c.counters == 1 and c.has_stack
    for x in ["1#11##11#1###11", "1#11##11#1###1", "1#1###1", "11#1###1"]:
        assert simulate(m, x).accepted == simulate(c, x).accepted, x


def test_contract_counters_with_stack():
    m = build_problem_machine("SUK-1t1Σ2PDCA")
    assert contract_counters(m) is m  # one counter beside the stack: nothing to do

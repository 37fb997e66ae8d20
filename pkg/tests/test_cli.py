import pytest

from unarybench import instances as inst
from unarybench.cli import main
from unarybench.unary_codec import parse_instance


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# --- generate ----------------------------------------------------------------------

def test_generate_uk_small(capsys):
    code, out, _ = run(capsys, "generate", "--kind", "UK", "--max-n", "2", "--max-value", "2")
    assert code == 0
    assert len(out.splitlines()) == 12


def test_generate_seed_is_byte_identical(capsys):
    args = ("generate", "--kind", "TO-EWPP", "--seed", "3", "--count", "7")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second and first


def test_generate_unknown_kind(capsys):
    code, _, err = run(capsys, "generate", "--kind", "FOO")
    assert code == 2 and "unknown problem kind" in err


def test_generate_bad_bounds(capsys):
    code, _, _ = run(capsys, "generate", "--kind", "UK", "--max-n", "0")
    assert code == 2


def test_generate_to_file_readable(tmp_path, capsys):
    out = tmp_path / "uk.txt"
    assert main(["generate", "--kind", "UK", "--max-n", "1", "--max-value", "2",
                 "--format", "readable", "--out", str(out)]) == 0
    assert out.read_text().count("problem: UK") == 3


# --- decide --------------------------------------------------------------------------

def test_decide_witness(capsys):
    code, out, _ = run(capsys, "decide", "--kind", "UK", "--witness", "11111#11#111")
    assert code == 0 and out.strip() == "1 yes S={1,2}"


def test_decide_machine_engine_agrees(capsys):
    xs = ["11111#11#111", "1#11", "111#1#1#1", "11#111"]
    _, oracle, _ = run(capsys, "decide", "--kind", "UK", *xs)
    _, machine, _ = run(capsys, "decide", "--kind", "UK", "--engine", "machine", *xs)
    assert oracle == machine
    assert [line.split()[1] for line in oracle.splitlines()] == ["yes", "no", "yes", "no"]


def test_decide_malformed(capsys):
    code, out, err = run(capsys, "decide", "--kind", "UK", "11#1", "1#x")
    assert code == 3
    assert out.splitlines() == ["1 no", "2 error"]
    assert "position" in err


def test_decide_from_file_with_kind_prefix(tmp_path, capsys):
    f = tmp_path / "in.wire"
    f.write_text("% mixed kinds\nUK:11#1#1\nU2PART:1#11\n")
    code, out, _ = run(capsys, "decide", "--in", str(f))
    assert code == 0 and out.splitlines() == ["1 yes", "2 no"]


def test_decide_budget_is_indeterminate(capsys):
    code, out, _ = run(capsys, "decide", "--kind", "UK", "--engine", "machine", "--budget", "2", "11#11")
    assert code == 0 and out.strip() == "1 indeterminate"
    code, _, _ = run(capsys, "decide", "--kind", "UK", "--engine", "machine", "--budget", "2",
                     "--strict", "11#11")
    assert code == 6


def test_decide_readable(tmp_path, capsys):
    f = tmp_path / "in.txt"
    f.write_text("problem: USVP_max\nv: 1 0\nv: 0 5\nb: 1\n")
    code, out, _ = run(capsys, "decide", "--format", "readable", "--witness", "--in", str(f))
    assert code == 0 and out.strip() == "1 yes z=(-1,0)"


# --- reduce --------------------------------------------------------------------------

def test_reduce_uk_to_u2part(capsys):
    code, out, _ = run(capsys, "reduce", "--reduction", "uk->u2part", "--kind", "UK", "11#1#1#1111")
    assert code == 0
    assert parse_instance(out.strip(), "U2PART") == inst.u2part((1, 1, 4, 2))


def test_reduce_arrow_spelling(capsys):
    code, out, _ = run(capsys, "reduce", "--reduction", "uk→u2part", "--kind", "UK", "11#1#1#1111")
    assert code == 0 and out.strip()


def test_reduce_kind_mismatch(capsys):
    code, _, _ = run(capsys, "reduce", "--reduction", "uk->u2part", "--kind", "U2PART", "1#1")
    assert code == 4


def test_reduce_unknown_reduction(capsys):
    code, _, _ = run(capsys, "reduce", "--reduction", "uk->nothing", "--kind", "UK", "1#1")
    assert code == 2


def test_reduce_truth_table_files(tmp_path, capsys):
    x = inst.ambuk((3, 7, 4), (1, 2))
    f = tmp_path / "in.txt"
    from unarybench.problems import to_readable
    f.write_text(to_readable(x))
    out = tmp_path / "tt"
    code = main(["reduce", "--reduction", "ambuk-tt", "--format", "readable", "--in", str(f),
                 "--out", str(out)])
    assert code == 0
    files = sorted(p.name for p in (out / "instance-1").iterdir())
    assert files == ["evaluator.txt", "query-1.txt", "query-2.txt", "query-3.txt"]
    assert "OR" in (out / "instance-1" / "evaluator.txt").read_text()


def test_reduce_ewpp_eplp_then_decide(tmp_path, capsys):
    g = inst.WeightedDag("EWPP", (1, 2, 3, 4), [(1, 2), (2, 3), (1, 4)], 1, 3, [1, 2, 1])
    from unarybench.problems import to_readable
    src = tmp_path / "g.txt"
    src.write_text(to_readable(g))
    img = tmp_path / "img.txt"
    assert main(["reduce", "--reduction", "ewpp->eplp", "--format", "readable", "--in", str(src),
                 "--out", str(img)]) == 0
    _, a, _ = run(capsys, "decide", "--format", "readable", "--in", str(src))
    _, b, _ = run(capsys, "decide", "--format", "readable", "--in", str(img))
    assert a == b == "1 yes\n"


# --- verify --------------------------------------------------------------------------

def test_verify_section(tmp_path, capsys):
    code, out, _ = run(capsys, "verify", "--section", "contraction", "--out", str(tmp_path))
    assert code == 0
    assert out.strip().endswith("0 failed, 0 with indeterminate runs")
    assert (tmp_path / "summary.txt").exists()
    assert (tmp_path / "report.tsv").read_text().startswith("check\tfamily")


def test_verify_mutant_fails(capsys):
    code, out, _ = run(capsys, "verify", "--mutate", "drop-gadget")
    assert code == 5
    assert "counterexample" in out.lower()


def test_verify_tiny_budget_lists_indeterminate(capsys):
    code, out, _ = run(capsys, "verify", "--section", "audit", "--budget", "5")
    assert "indeterminate (budget exhausted):" in out
    assert code == 0


def test_verify_unknown_mutant(capsys):
    code, _, _ = run(capsys, "verify", "--mutate", "nonsense")
    assert code == 2


# --- trace ---------------------------------------------------------------------------

def test_trace_accepting(capsys):
    code, out, _ = run(capsys, "trace", "--kind", "UK", "111#1#11")
    lines = out.strip().splitlines()
    assert code == 0 and lines[-1].startswith("A ") and lines[-1].endswith("c=[0]")


def test_trace_rejecting(capsys):
    code, out, _ = run(capsys, "trace", "--kind", "UK", "111#11")
    assert code == 0
    assert out.splitlines()[0] == "no accepting path"
    assert out.splitlines()[1].startswith("configurations explored: ")


def test_trace_strict_budget(capsys):
    code, _, _ = run(capsys, "trace", "--kind", "UK", "--budget", "2", "--strict", "11#11")
    assert code == 6


def test_trace_machine_file(tmp_path, capsys):
    from unarybench.automata import build_problem_machine, machine_to_text
    f = tmp_path / "uk.machine"
    f.write_text(machine_to_text(build_problem_machine("UK-1t1NCA")))
    code, out, _ = run(capsys, "trace", "--machine-file", str(f), "11#11")
    assert code == 0 and out.strip().splitlines()[-1].startswith("A ")


def test_no_subcommand(capsys):
    with pytest.raises(SystemExit) as e:
        main([])
    assert e.value.code == 2

from unarybench import verification as v
from unarybench.reductions import REDUCTIONS, ReductionReport


def test_plan_covers_every_reduction():
    assert {r for r, *_ in v.REDUCTION_PLAN} == set(REDUCTIONS)


def test_report_only_checks():
    assert not v.asserted("usvp-tt-min")
    assert v.asserted("uk->u2part")


def test_small_reduction_check():
    r = v.run_reduction_check("uk->u2part")
    assert r.agree > 0 and r.disagree == 0 and not r.counterexamples


def test_mutant_is_caught():
    (r,) = v.mutant_checks("drop-gadget")
    assert r.disagree > 0 and r.counterexamples


def test_dummy_tail_matters():
    r = v.compiler_check("EqualBlocks2-1CA", max_len=5, dummy_tail=False)
    assert r.disagree > 0
    assert v.compiler_check("EqualBlocks2-1CA", max_len=5).disagree == 0


def test_tiny_budget_is_indeterminate_not_wrong():
    r = v.audit_check("UK-1t1NCA", budget=5)
    assert r.indeterminate > 0 and r.disagree == 0


def test_fsum_small():
    assert v.fsum_check(count=50).disagree == 0


def test_report_rows():
    r = ReductionReport("x", "fam", agree=3, disagree=1, counterexamples=["c"])
    rows = list(r.rows())
    assert rows[0].split("\t") == ["check", "family", "agree", "disagree", "indeterminate", "seconds"]
    assert rows[-1] == "counterexample\tx\tc"
    assert not r.ok and "FAIL" in r.summary_line()


def test_run_matrix_sections():
    out = list(v.run_matrix(sections=("contraction",)))
    assert [s for s, _, _ in out] == ["contraction"] * 3
    assert all(rep.disagree == 0 for _, rep, _ in out)

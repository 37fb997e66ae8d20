from unarybench import families as fam
from unarybench.errors import UnknownKind
from unarybench.instances import ALL_KINDS
from unarybench.unary_codec import serialize_instance

import pytest


def test_uk_small_family_count():
    xs = list(fam.family("UK", max_n=2, max_value=2))
    assert len(xs) == 12
    assert {serialize_instance(x) for x in xs} >= {"1#1", "11#11", "1111#11#11"}


def test_uk_family_rule():
    # every target lies in [1, sum] and items are nondecreasing
    for x in fam.family("UK", max_n=3, max_value=3):
        assert 1 <= x.b <= sum(x.items)
        assert list(x.items) == sorted(x.items)


def test_every_kind_has_a_family():
    for kind in ALL_KINDS:
        assert next(iter(fam.family(kind, max_n=2, max_value=2)), None) is not None, kind


def test_family_is_deterministic():
    assert list(fam.family("TO-EWPP")) == list(fam.family("TO-EWPP"))


def test_sample_is_seeded():
    a = fam.sample("UK", 5, seed=7)
    assert a == fam.sample("UK", 5, seed=7)
    assert len(a) == 5
    assert a != fam.sample("UK", 5, seed=8)


def test_unknown_kind():
    with pytest.raises(UnknownKind):
        list(fam.family("KNAPSACK"))


def test_graph_family_is_acyclic_and_topological():
    from unarybench.instances import classify_graph
    for g in fam.family("TO-EWPP"):
        assert classify_graph(g).topologically_ordered


def test_shift_sample_bounds():
    xs = fam.shiftuk_sample(seed=1, count=50)
    assert len(xs) == 50
    assert all(p <= 6 and t <= 20 for x in xs for p, t in x.items)

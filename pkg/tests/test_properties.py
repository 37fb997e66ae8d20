"""Randomized invariants (hypothesis)."""

from collections import Counter
from itertools import combinations

from hypothesis import given, strategies as st

from unarybench import instances as inst
from unarybench.automata import build_problem_machine, simulate
from unarybench.instances import check_class, required_class
from unarybench.problems import decide, enumerate_paths, subset_sum_dp
from unarybench.reductions import REDUCTIONS, get_reduction
from unarybench.unary_codec import (
    ShiftUnaryValue, decode_general_int, encode_general_int, f_order, f_sum, order_indices,
    parse_instance, serialize_instance, shift_unary_value,
)

items = st.lists(st.integers(1, 30), min_size=1, max_size=12)
small_items = st.lists(st.integers(1, 6), min_size=1, max_size=4)


# --- codec ------------------------------------------------------------------------------

@given(st.integers(-10**6, 10**6))
def test_general_unary_roundtrip(a):
    u = encode_general_int(a)
    assert u.value >= 1 and decode_general_int(u) == a


@given(st.lists(st.integers(1, 20)))
def test_f_order(xs):
    out = f_order(xs)
    assert Counter(out) == Counter(xs)
    assert all(a >= b for a, b in zip(out, out[1:]))
    idx = order_indices(xs)
    # ties keep their original order
    assert all(i < j for i, j in zip(idx, idx[1:]) if xs[i - 1] == xs[j - 1])


@given(st.lists(st.tuples(st.integers(1, 50), st.integers(0, 20)), min_size=1, max_size=10))
def test_f_sum_matches_big_integers(terms):
    xs = [ShiftUnaryValue(p, t) for p, t in terms]
    total = sum(p * 2 ** t for p, t in terms)
    assert int(f_sum(xs)[::-1], 2) == total == sum(map(shift_unary_value, xs))
    assert f_sum(xs)[-1] == "1"


uk_inst = st.builds(lambda a, b: inst.uk(b, a), items, st.integers(1, 100))
ukexc_inst = st.integers(1, 5).flatmap(lambda n: st.builds(
    lambda a, b, exc: inst.ukexc(b, a, exc),
    st.lists(st.integers(1, 9), min_size=n, max_size=n), st.integers(1, 30),
    st.sets(st.sampled_from(list(combinations(range(1, n + 1), 2)) or [(1, 2)]))
    .map(lambda s: sorted(p for p in s if p[1] <= n))))
suk_inst = st.integers(1, 4).flatmap(lambda n: st.builds(
    lambda rows, bs: inst.suk(bs[:len(rows)], rows),
    st.lists(st.lists(st.integers(1, 9), min_size=n, max_size=n), min_size=1, max_size=3),
    st.lists(st.integers(1, 20), min_size=3, max_size=3)))


@given(st.one_of(uk_inst, ukexc_inst, suk_inst,
                 st.builds(inst.u2part, items),
                 st.builds(inst.ubcp, st.lists(st.tuples(st.integers(1, 9), st.integers(1, 9)), min_size=1,
                                               max_size=5), st.integers(1, 6))))
def test_codec_roundtrip(x):
    assert parse_instance(serialize_instance(x), x.kind) == x


# --- oracles ------------------------------------------------------------------------------

@given(items, st.integers(1, 200))
def test_uk_matches_dp(a, b):
    assert decide(inst.uk(b, a)) == subset_sum_dp(a, b)


@given(items)
def test_u2part_needs_even_sum(a):
    if decide(inst.u2part(a)):
        assert sum(a) % 2 == 0


@given(st.lists(st.integers(1, 30), min_size=1, max_size=10), st.integers(1, 100))
def test_uasubsum_point_interval_is_uk(a, b):
    assert decide(inst.uasubsum(b, b, a)) == decide(inst.uk(b, a))


@st.composite
def dags(draw, max_vertices=7, weighted=False):
    n = draw(st.integers(1, max_vertices))
    edges = sorted(draw(st.sets(st.sampled_from(list(combinations(range(1, n + 1), 2)) or [(1, 1)])))
                   - {(1, 1)})
    weights = [draw(st.integers(1, 4)) for _ in edges] if weighted else None
    c = draw(st.integers(1, 8))
    kind = "TO-EWPP" if weighted else "EPLP"
    return inst.WeightedDag(kind, tuple(range(1, n + 1)), edges, 1, c, weights)


@given(dags())
def test_eplp_matches_dfs(g):
    sinks = set(g.sinks())
    expected = any(len(p) - 1 == g.target and p[-1] in sinks for p in enumerate_paths(g))
    assert decide(g) == expected


@given(dags(weighted=True))
def test_ewpp_matches_dfs(g):
    w = g.weight_map()
    expected = any(sum(w[e] for e in zip(p, p[1:])) == g.target for p in enumerate_paths(g))
    assert decide(g) == expected


@given(st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), min_size=1, max_size=2),
       st.integers(1, 3))
def test_lattice_monotone_in_bound(basis, b):
    try:
        x = inst.LatticeInstance("USVP_max", tuple(basis), b)
        y = inst.LatticeInstance("USVP_max", tuple(basis), b + 1)
    except Exception:  # zero or dependent bases are rejected up front
        return
    if decide(x, coeff_bound=4):
        assert decide(y, coeff_bound=4)


@given(st.lists(st.tuples(st.integers(1, 6), st.integers(0, 3)), min_size=1, max_size=5),
       st.tuples(st.integers(1, 6), st.integers(0, 5)))
def test_shift_uk_is_uk_on_values(terms, target):
    x = inst.shift("ShiftUK", [target], terms)
    assert decide(x) == subset_sum_dp([p << t for p, t in terms], target[0] << target[1])


# --- reductions ------------------------------------------------------------------------------

SUBSET_SOURCES = {
    "UK": st.builds(lambda a, b: inst.uk(b, a), small_items, st.integers(1, 24)),
    "U2PART": st.builds(inst.u2part, small_items),
    "UASubSum": st.builds(lambda a, b, d: inst.uasubsum(b, b + d, a), small_items,
                          st.integers(1, 24), st.integers(0, 4)),
    "AmbUK": st.builds(lambda a, bs: inst.ambuk(bs, a), small_items,
                       st.lists(st.integers(1, 24), min_size=1, max_size=3)),
    "UBCP": st.builds(inst.ubcp, st.lists(st.tuples(st.integers(1, 6), st.integers(1, 6)), min_size=1,
                                          max_size=4), st.integers(1, 4)),
    "SUK": suk_inst.filter(lambda x: x.n <= 4),
}


def _reductions_from(kind):
    return [r for r in REDUCTIONS if get_reduction(r).source == kind]


@given(st.data())
def test_reduction_outputs_are_valid_and_sound(data):
    kind = data.draw(st.sampled_from(sorted(SUBSET_SOURCES)))
    name = data.draw(st.sampled_from(_reductions_from(kind)))
    x = data.draw(SUBSET_SOURCES[kind])
    r = get_reduction(name)
    ys, evaluator = r.queries(x)
    for y in ys:
        if isinstance(y, inst.WeightedDag):
            check_class(y, required_class(y.kind))
        else:
            assert parse_instance(serialize_instance(y), y.kind) == y
    bits = tuple(decide(y, coeff_bound=1) if isinstance(y, inst.LatticeInstance) else decide(y)
                 for y in ys)
    assert evaluator(bits) == decide(x)


@given(small_items, st.integers(1, 24))
def test_uk_u2part_composition_preserves_membership(a, b):
    x = inst.uk(b, a)
    there = get_reduction("uk->u2part")(x)
    back = get_reduction("u2part->uk")(there)
    assert decide(back) == decide(x)


# --- machines ------------------------------------------------------------------------------

@given(st.text(alphabet="1#", max_size=9))
def test_simulate_is_deterministic(w):
    m = build_problem_machine("UK-1t1NCA")
    assert simulate(m, w) == simulate(m, w)


@given(st.lists(st.integers(1, 5), min_size=1, max_size=4), st.integers(1, 12))
def test_uk_machine_matches_oracle(a, b):
    x = inst.uk(b, a)
    assert simulate(build_problem_machine("UK-1t1NCA"), serialize_instance(x)).accepted == decide(x)

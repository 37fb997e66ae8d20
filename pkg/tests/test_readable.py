import pytest

from unarybench import instances as inst
from unarybench.errors import ParseError, UnknownKind
from unarybench.families import family
from unarybench.problems import from_readable, to_readable

EXAMPLES = [
    inst.uk(5, (2, 3, 4)),
    inst.u2part((1, 1, 2)),
    inst.ambuk((3, 7), (1, 2)),
    inst.uasubsum(2, 4, (1, 5)),
    inst.ukexc(3, (1, 2), [(1, 2)]),
    inst.ukexc(3, (1, 2)),
    inst.shift("ShiftUK", [(3, 1)], [(1, 0), (5, 2)]),
    inst.shift("ShiftU2PART", [], [(1, 3), (1, 3)]),
    inst.suk((2, 1), [(1, 2), (2, 1)]),
    inst.su2part([(1, 1), (2, 2)]),
    inst.ubcp([(2, 1), (1, 2)], 2),
    inst.WeightedDag("TO-EWPP", (1, 2, 3), [(1, 2), (2, 3)], 1, 3, [1, 2]),
    inst.WeightedDag("EPLP", (1, 2, 3), [(1, 2), (1, 3)], 1, 1, None),
    inst.LatticeInstance("USVP_max", ((1, 0), (0, 5)), 1),
    inst.LatticeInstance("UCVP_max", ((1, 2),), 1, (2, -3)),
]


@pytest.mark.parametrize("x", EXAMPLES, ids=lambda x: x.kind)
def test_roundtrip(x):
    assert from_readable(to_readable(x)) == [x]


def test_layout():
    assert to_readable(inst.uk(5, (2, 3, 4))) == "problem: UK\nb: 5\na: 2 3 4"
    assert "exc: 1-2" in to_readable(inst.ukexc(3, (1, 2), [(1, 2)]))
    assert "a: 1*2^0 5*2^2" in to_readable(EXAMPLES[6])


def test_many_blocks_and_comments():
    text = "% two instances\nproblem: UK\nb: 3\na: 1 2\n\n\nproblem: U2PART\na: 1 1\n"
    xs = from_readable(text)
    assert [x.kind for x in xs] == ["UK", "U2PART"]


def test_kind_argument_fills_missing_header():
    assert from_readable("b: 2\na: 1 1", kind="UK") == [inst.uk(2, (1, 1))]
    with pytest.raises(ParseError):
        from_readable("problem: U2PART\na: 1", kind="UK")


def test_whole_family_roundtrips():
    for kind in ("UK", "AmbUK", "UKEXC", "ShiftUK", "SUK", "UBCP", "TO-EWPP", "USVP_max"):
        xs = list(family(kind, max_n=2, max_value=2))
        assert from_readable("\n\n".join(map(to_readable, xs))) == xs


@pytest.mark.parametrize("text, line", [
    ("problem: UK\nb: 5\na: 2 x", 3),
    ("problem: UK\nb: 5\nthis line has no colon", 3),
    ("problem: UK\na: 1", 1),
    ("problem: UASubSum\nb: 3\na: 1", 2),
    ("problem: UK\nb: 1\nb: 2\na: 1", 3),
])
def test_errors_point_at_line(text, line):
    with pytest.raises(ParseError) as e:
        from_readable(text)
    assert e.value.position == line


def test_unknown_kind():
    with pytest.raises(UnknownKind):
        from_readable("problem: KNAPSACK\na: 1")

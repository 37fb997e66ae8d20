import pytest

from unarybench import instances as inst
from unarybench.errors import DominanceViolation, ParseError
from unarybench.unary_codec import (
    UnaryValue, ShiftUnaryValue, MultiShiftUnaryValue, encode_general_int, decode_general_int,
    shift_unary_value, f_order, order_indices, f_sum, serialize_instance, parse_instance,
    parse_groups, instance_text_codec,
)


@pytest.mark.parametrize("a, code", [(0, 1), (4, 8), (-3, 7), (1, 2), (-1, 3)])
def test_general_unary_encode(a, code):
    assert encode_general_int(a) == UnaryValue(code)
    assert encode_general_int(a).text == "1" * code


@pytest.mark.parametrize("code, a", [(1, 0), (8, 4), (7, -3)])
def test_general_unary_decode(code, a):
    assert decode_general_int(UnaryValue(code)) == a


def test_general_unary_roundtrip_range():
    assert all(decode_general_int(encode_general_int(a)) == a for a in range(-100, 101))


def test_general_unary_codes_are_a_bijection():
    codes = {encode_general_int(a).value for a in range(-50, 51)}
    assert codes == set(range(1, 102))


def test_unary_value_rejects_nonpositive():
    with pytest.raises(ValueError):
        UnaryValue(0)
    with pytest.raises(ParseError):
        UnaryValue.from_text("1#1")


def test_shift_unary_values():
    assert shift_unary_value(ShiftUnaryValue(3, 2)) == 12
    assert shift_unary_value(MultiShiftUnaryValue(((1, 0),))) == 1
    assert shift_unary_value(MultiShiftUnaryValue(((1, 1), (1, 3)))) == 10
    assert ShiftUnaryValue(3, 2).text == "111#11"


def test_dominance_violation():
    # 2^2 = 4 is not above 5 * 2^0
    with pytest.raises(DominanceViolation):
        shift_unary_value(MultiShiftUnaryValue(((5, 0), (1, 2))))


def test_f_order():
    xs = (UnaryValue(2), UnaryValue(5), UnaryValue(2))
    assert f_order(xs) == (UnaryValue(5), UnaryValue(2), UnaryValue(2))
    assert order_indices(xs) == (2, 1, 3)
    assert f_order((UnaryValue(1),)) == (UnaryValue(1),)
    assert order_indices([UnaryValue(3)] * 3) == (1, 2, 3)


def test_f_sum_examples():
    assert f_sum([ShiftUnaryValue(1, 0)]) == "1"
    assert f_sum([ShiftUnaryValue(1, 1), ShiftUnaryValue(1, 0)]) == "11"
    assert f_sum([ShiftUnaryValue(3, 2)]) == "0011"
    with pytest.raises(ValueError):
        f_sum([])


def test_serialize_examples():
    assert serialize_instance(inst.uk(3, (1, 2))) == "111#1#11"
    assert parse_groups("1#11##111#1") == [[1, 2], [3, 1]]
    assert instance_text_codec("111#1#11", "UK") == inst.uk(3, (1, 2))
    assert instance_text_codec(inst.uk(3, (1, 2))) == "111#1#11"


@pytest.mark.parametrize("text", ["11#", "#11", "", "11##", "1#2", "11"])
def test_malformed_uk(text):
    with pytest.raises(ParseError):
        parse_instance(text, "UK")


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as err:
        parse_instance("11#", "UK")
    assert err.value.position == 3


def test_layouts_of_composite_kinds():
    # shift exponent zero is an empty block
    x = inst.shift("ShiftUK", [(1, 1)], [(1, 0), (3, 2)])
    assert serialize_instance(x) == "1#1" + "###" + "1#" + "##" + "111#11"
    assert parse_instance(serialize_instance(x), "ShiftUK") == x
    y = inst.ukexc(5, (2, 3), [(1, 2)])
    assert parse_instance(serialize_instance(y), "UKEXC") == y
    z = inst.LatticeInstance("UCVP_max", ((2, 0), (0, -2)), 1, (1, -1))
    assert parse_instance(serialize_instance(z), "UCVP_max") == z


def test_empty_block_only_for_exponents():
    with pytest.raises(ParseError):
        parse_instance("1##1", "UK")

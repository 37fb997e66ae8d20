"""Unary numeral encodings and the ``#``-separated instance text format.

Instance strings use the alphabet ``{1, #}``. A run of one ``#`` separates
blocks inside a tuple, ``##`` separates tuples and ``###`` separates the
top-level sections of problems with more than one series. Parsing is
grammar directed, so an empty block (allowed only for shift exponents) can
sit next to a longer separator run without ambiguity.
"""

from dataclasses import dataclass

from .errors import DominanceViolation, ParseError, InvalidInstance, UnknownKind
from . import instances as inst


@dataclass(frozen=True)
class UnaryValue:
    value: int

    def __post_init__(self):
        if not isinstance(self.value, int) or self.value < 1:
            raise ValueError(f"unary values are positive, got {self.value!r}")

    @property
    def text(self):
        return "1" * self.value

    @classmethod
    def from_text(cls, text):
        if not text or set(text) != {"1"}:
            raise ParseError(0, "a nonempty run of '1'", text)
        return cls(len(text))


@dataclass(frozen=True)
class GeneralUnaryValue:
    value: int

    @property
    def encoded(self):
        a = self.value
        if a == 0:
            return 1
        return 2 * a if a > 0 else 2 * -a + 1


@dataclass(frozen=True)
class ShiftUnaryValue:
    p: int
    t: int

    def __post_init__(self):
        if self.p < 1 or self.t < 0:
            raise ValueError("shift-unary needs p >= 1 and t >= 0")

    @property
    def text(self):
        return "1" * self.p + "#" + "1" * self.t


@dataclass(frozen=True)
class MultiShiftUnaryValue:
    terms: tuple

    def check(self):
        for (a, b), (_, b_next) in zip(self.terms, self.terms[1:]):
            if (1 << b_next) <= a << b:
                raise DominanceViolation(f"2^{b_next} <= {a}*2^{b}")


def encode_general_int(a):
    return UnaryValue(GeneralUnaryValue(a).encoded)


def decode_general_int(u):
    e = u.value if isinstance(u, UnaryValue) else int(u)
    if e < 1:
        raise ValueError("general-unary codes are positive")
    if e == 1:
        return 0
    return e // 2 if e % 2 == 0 else -(e // 2)


def shift_unary_value(s):
    if isinstance(s, ShiftUnaryValue):
        return s.p << s.t
    if isinstance(s, MultiShiftUnaryValue):
        s.check()
        return sum(a << b for a, b in s.terms)
    raise TypeError(f"not a shift-unary value: {s!r}")


def order_indices(xs):
    """1-based source indices of the nonincreasing stable ordering of ``xs``."""
    values = [x.value if isinstance(x, UnaryValue) else x for x in xs]
    return tuple(i + 1 for i in sorted(range(len(values)), key=lambda i: -values[i]))


def f_order(xs):
    xs = tuple(xs)
    return tuple(xs[i - 1] for i in order_indices(xs))


def f_sum(xs):
    """Binary form of sum p_i * 2**t_i, least significant bit first."""
    if not xs:
        raise ValueError("f_sum needs a nonempty list")
    total = sum(shift_unary_value(x) if isinstance(x, ShiftUnaryValue) else x[0] << x[1] for x in xs)
    return format(total, "b")[::-1]


# --- grammar-directed instance text ---------------------------------------

POS, NAT, GEN = "pos", "nat", "gen"


def seq(level, child, min_len=1):
    return ("seq", level, child, min_len)


def tup(level, *children, optional=0):
    return ("tup", level, children, optional)


def _can_be_empty(node):
    return node == NAT


class _Reader:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def run(self):
        end = self.pos
        while end < len(self.text) and self.text[end] == "#":
            end += 1
        return end - self.pos

    def at_end(self):
        return self.pos >= len(self.text)

    def fail(self, expected):
        raise ParseError(self.pos, expected, self.text)


def _parse(node, r):
    if node in (POS, NAT, GEN):
        start = r.pos
        while r.pos < len(r.text) and r.text[r.pos] == "1":
            r.pos += 1
        count = r.pos - start
        if r.pos < len(r.text) and r.text[r.pos] not in "1#":
            r.fail("'1' or '#'")
        if count == 0 and node != NAT:
            r.fail("'1'")
        return decode_general_int(count) if node == GEN else count
    if node[0] == "seq":
        _, level, child, min_len = node
        out = [_parse(child, r)]
        while not r.at_end():
            k = r.run()
            if k == level:
                r.pos += level
                out.append(_parse(child, r))
            elif k > level:
                break
            else:
                r.fail(f"separator of width {level}")
        if len(out) < min_len:
            r.fail(f"at least {min_len} entries")
        return out
    _, level, children, optional = node
    out = []
    for idx, child in enumerate(children):
        if idx:
            if r.at_end() and idx >= len(children) - optional:
                break
            k = r.run()
            if k < level or (k > level and not _can_be_empty(child)):
                r.fail(f"separator of width {level}")
            r.pos += level
        out.append(_parse(child, r))
    return out


def _emit(node, value):
    if node in (POS, NAT):
        return "1" * value
    if node == GEN:
        return "1" * GeneralUnaryValue(value).encoded
    if node[0] == "seq":
        _, level, child, _ = node
        return ("#" * level).join(_emit(child, v) for v in value)
    _, level, children, _ = node
    return ("#" * level).join(_emit(c, v) for c, v in zip(children, value))


PAIR = tup(1, POS, NAT)
UAL = seq(2, seq(1, POS))

LAYOUTS = {
    "UK": seq(1, POS, 2),
    "U2PART": seq(1, POS),
    "AmbUK": tup(2, seq(1, POS), seq(1, POS)),
    "UASubSum": tup(2, tup(1, POS, POS), seq(1, POS)),
    "ShiftUK": tup(3, PAIR, seq(2, PAIR)),
    "ShiftU2PART": seq(2, PAIR),
    "ShiftAmbUK": tup(3, seq(2, PAIR), seq(2, PAIR)),
    "ShiftUASubSum": tup(3, tup(2, PAIR, PAIR), seq(2, PAIR)),
    "UKEXC": tup(3, seq(1, POS, 2), seq(2, tup(1, POS, POS)), optional=1),
    "SUK": seq(2, seq(1, POS, 2)),
    "SU2PART": seq(2, seq(1, POS)),
    "UBCP": tup(3, seq(2, tup(1, POS, POS)), POS),
    "EWPP": tup(3, UAL, POS, POS, seq(1, POS), optional=1),
    "EPLP": tup(3, UAL, POS, POS),
    "UCVP": tup(3, POS, seq(2, seq(1, GEN)), seq(1, GEN)),
    "USVP": tup(3, POS, seq(2, seq(1, GEN))),
}


def layout_for(kind):
    if kind in ("TO-EWPP", "EC-EWPP"):
        return LAYOUTS["EWPP"]
    if kind in inst.LATTICE_KINDS:
        return LAYOUTS[kind.split("_")[0]]
    if kind not in LAYOUTS:
        raise UnknownKind(kind)
    return LAYOUTS[kind]


def _ual(g):
    adj = g.adjacency
    return [[v, *adj[v]] for v in g.vertices]


def _fields(x):
    """Instance -> nested value matching its layout."""
    k = x.kind
    if isinstance(x, inst.SubsetInstance):
        if k == "UK":
            return [x.b, *x.items]
        if k == "U2PART":
            return list(x.items)
        if k in ("AmbUK", "UASubSum"):
            return [list(x.targets), list(x.items)]
        if k == "ShiftUK":
            return [x.targets[0], list(x.items)]
        if k == "ShiftU2PART":
            return list(x.items)
        if k in ("ShiftAmbUK", "ShiftUASubSum"):
            return [list(x.targets), list(x.items)]
        if k == "UKEXC":
            out = [[x.b, *x.items]]
            if x.exc:
                out.append([list(p) for p in sorted(x.exc)])
            return out
        if k == "SUK":
            return [[b, *row] for b, row in zip(x.targets, x.items)]
        if k == "SU2PART":
            return [list(r) for r in x.items]
        if k == "UBCP":
            return [[list(p) for p in x.items], x.bound]
    if isinstance(x, inst.WeightedDag):
        out = [_ual(x), x.source, x.target]
        if x.weights is not None and x.edges:
            out.append(list(x.weights))
        return out
    if isinstance(x, inst.LatticeInstance):
        out = [x.bound, [list(v) for v in x.basis]]
        if x.target is not None:
            out.append(list(x.target))
        return out
    raise TypeError(f"not an instance: {x!r}")


def _build(kind, v):
    if kind == "UK":
        return inst.uk(v[0], v[1:])
    if kind == "U2PART":
        return inst.u2part(v)
    if kind == "AmbUK":
        return inst.ambuk(v[0], v[1])
    if kind == "UASubSum":
        return inst.uasubsum(v[0][0], v[0][1], v[1])
    if kind == "ShiftUK":
        return inst.shift(kind, [v[0]], v[1])
    if kind == "ShiftU2PART":
        return inst.shift(kind, [], v)
    if kind in ("ShiftAmbUK", "ShiftUASubSum"):
        return inst.shift(kind, v[0], v[1])
    if kind == "UKEXC":
        exc = v[1] if len(v) > 1 else []
        return inst.ukexc(v[0][0], v[0][1:], [tuple(p) for p in exc])
    if kind == "SUK":
        return inst.suk([r[0] for r in v], [r[1:] for r in v])
    if kind == "SU2PART":
        return inst.su2part(v)
    if kind == "UBCP":
        return inst.ubcp(v[0], v[1])
    if kind in inst.PATH_KINDS:
        ual, s, c = v[0], v[1], v[2]
        verts = [group[0] for group in ual]
        if verts != sorted(set(verts)):
            raise InvalidInstance("UAL vertices must be listed in increasing order")
        edges = []
        for group in ual:
            succ = group[1:]
            if succ != sorted(set(succ)):
                raise InvalidInstance(f"successors of {group[0]} must be strictly increasing")
            edges.extend((group[0], w) for w in succ)
        weights = v[3] if len(v) > 3 else None
        if kind != "EPLP":
            weights = weights or []
            if len(weights) != len(edges):
                raise InvalidInstance(f"{len(edges)} edges but {len(weights)} weights")
        return inst.WeightedDag(kind, tuple(verts), tuple(edges), s, c,
                                None if kind == "EPLP" else tuple(weights))
    if kind in inst.LATTICE_KINDS:
        target = v[2] if len(v) > 2 else None
        return inst.LatticeInstance(kind, tuple(tuple(r) for r in v[1]), v[0], target)
    raise UnknownKind(kind)


def serialize_instance(x):
    return _emit(layout_for(x.kind), _fields(x))


def parse_instance(text, kind):
    text = text.strip()
    r = _Reader(text)
    if not text:
        r.fail("a nonempty instance")
    value = _parse(layout_for(kind), r)
    if not r.at_end():
        r.fail("end of input")
    return _build(kind, value)


def parse_groups(text, depth=2):
    """Split raw text into nested lists of block lengths (no kind needed)."""
    node = POS
    for level in range(1, depth + 1):
        node = seq(level, node)
    r = _Reader(text)
    value = _parse(node, r)
    if not r.at_end():
        r.fail("end of input")
    return value


def instance_text_codec(x, kind=None):
    """Serialize an instance, or parse text when ``kind`` is given."""
    if isinstance(x, str):
        if kind is None:
            raise ValueError("parsing needs the problem kind")
        return parse_instance(x, kind)
    return serialize_instance(x)

"""Line-oriented human-readable instance format.

One ``key: values`` pair per line, instances separated by blank lines::

    problem: UK
    b: 5
    a: 2 3 4

Keys by kind (values are space separated):

==================  ==========================================================
UK, UKEXC           ``b`` (one value), ``a``; UKEXC adds ``exc: 1-2 2-3``
U2PART              ``a``
AmbUK               ``b`` (one or more), ``a``
UASubSum            ``b: b1 b2``, ``a``
Shift kinds         as their unary twins, each value written ``p*2^t``
SUK                 ``b`` (one per row), then one ``row:`` line per row
SU2PART             ``row:`` lines
UBCP                ``k``, ``pairs: 2/1 4/2`` (lengths of a_i / b_i)
path kinds          ``vertices``, ``edges: 1-2 2-3``, ``weights`` (not EPLP),
                    ``s``, ``c``
lattice kinds       one ``v:`` line per basis vector, ``b``, ``x`` (UCVP only)
==================  ==========================================================

Lines starting with ``%`` are comments.
"""

import re

from . import instances as inst
from .errors import ParseError, UnknownKind

_SHIFT = re.compile(r"^(\d+)(?:\*2\^(\d+))?$")


def _ints(values):
    return " ".join(str(v) for v in values)


def _shifts(values):
    return " ".join(f"{p}*2^{t}" for p, t in values)


def _pairs(pairs, sep):
    return " ".join(f"{a}{sep}{b}" for a, b in pairs)


def to_readable(x):
    kind = x.kind
    lines = [f"problem: {kind}"]
    if isinstance(x, inst.SubsetInstance):
        if kind in inst.SHIFT_KINDS:
            if x.targets:
                lines.append(f"b: {_shifts(x.targets)}")
            lines.append(f"a: {_shifts(x.items)}")
        elif kind in ("SUK", "SU2PART"):
            if x.targets:
                lines.append(f"b: {_ints(x.targets)}")
            lines += [f"row: {_ints(r)}" for r in x.items]
        elif kind == "UBCP":
            lines.append(f"k: {x.bound}")
            lines.append(f"pairs: {_pairs(x.items, '/')}")
        else:
            if x.targets:
                lines.append(f"b: {_ints(x.targets)}")
            lines.append(f"a: {_ints(x.items)}")
            if kind == "UKEXC":
                lines.append(f"exc: {_pairs(sorted(x.exc), '-')}".rstrip())
    elif isinstance(x, inst.WeightedDag):
        lines.append(f"vertices: {_ints(x.vertices)}")
        lines.append(f"edges: {_pairs(x.edges, '-')}".rstrip())
        if x.weights is not None:
            lines.append(f"weights: {_ints(x.weights)}".rstrip())
        lines.append(f"s: {x.source}")
        lines.append(f"c: {x.target}")
    else:
        lines += [f"v: {_ints(v)}" for v in x.basis]
        lines.append(f"b: {x.bound}")
        if x.target is not None:
            lines.append(f"x: {_ints(x.target)}")
    return "\n".join(lines)


class _Block:
    """Key/value lines of one instance, remembering line numbers for errors."""

    def __init__(self, lines):
        self.lines = lines  # (lineno, key, value)
        self.fields = {}
        for no, key, value in lines:
            self.fields.setdefault(key, []).append((no, value))

    def fail(self, no, expected, text):
        raise ParseError(no, expected, text)

    def _one(self, key, required=True):
        got = self.fields.get(key, [])
        if not got:
            if required:
                self.fail(self.lines[0][0], f"a '{key}:' line", "")
            return None
        if len(got) > 1:
            self.fail(got[1][0], f"a single '{key}:' line", got[1][1])
        return got[0]

    def ints(self, key, required=True, signed=False):
        got = self._one(key, required)
        return None if got is None else self._parse_ints(*got, signed=signed)

    def _parse_ints(self, no, value, signed=False):
        pattern = r"-?\d+" if signed else r"\d+"
        out = []
        for tok in value.split():
            if not re.fullmatch(pattern, tok):
                self.fail(no, "an integer", tok)
            out.append(int(tok))
        return out

    def rows(self, key, signed=False):
        return [self._parse_ints(no, v, signed) for no, v in self.fields.get(key, [])]

    def shifts(self, key, required=True):
        got = self._one(key, required)
        if got is None:
            return None
        no, value = got
        out = []
        for tok in value.split():
            m = _SHIFT.match(tok)
            if not m:
                self.fail(no, "a value p*2^t", tok)
            out.append((int(m.group(1)), int(m.group(2) or 0)))
        return out

    def pairs(self, key, sep, required=True):
        got = self._one(key, required)
        if got is None:
            return []
        no, value = got
        out = []
        for tok in value.split():
            m = re.fullmatch(rf"(\d+){re.escape(sep)}(\d+)", tok)
            if not m:
                self.fail(no, f"a pair i{sep}j", tok)
            out.append((int(m.group(1)), int(m.group(2))))
        return out


def _build(kind, blk):
    if kind in inst.SHIFT_KINDS:
        targets = blk.shifts("b", required=kind != "ShiftU2PART") or []
        return inst.shift(kind, targets, blk.shifts("a"))
    if kind in ("UK", "UKEXC"):
        b = blk.ints("b")
        if len(b) != 1:
            blk.fail(blk.fields["b"][0][0], "exactly one target", " ".join(map(str, b)))
        if kind == "UK":
            return inst.uk(b[0], blk.ints("a"))
        return inst.ukexc(b[0], blk.ints("a"), blk.pairs("exc", "-", required=False))
    if kind == "U2PART":
        return inst.u2part(blk.ints("a"))
    if kind == "AmbUK":
        return inst.ambuk(blk.ints("b"), blk.ints("a"))
    if kind == "UASubSum":
        b = blk.ints("b")
        if len(b) != 2:
            blk.fail(blk.fields["b"][0][0], "two bounds b1 b2", " ".join(map(str, b)))
        return inst.uasubsum(b[0], b[1], blk.ints("a"))
    if kind == "SUK":
        return inst.suk(blk.ints("b"), blk.rows("row"))
    if kind == "SU2PART":
        return inst.su2part(blk.rows("row"))
    if kind == "UBCP":
        return inst.ubcp(blk.pairs("pairs", "/"), blk.ints("k")[0])
    if kind in inst.PATH_KINDS:
        weights = blk.ints("weights", required=kind != "EPLP")
        return inst.WeightedDag(kind, tuple(blk.ints("vertices")), blk.pairs("edges", "-", required=False),
                                blk.ints("s")[0], blk.ints("c")[0], weights)
    if kind in inst.LATTICE_KINDS:
        x0 = blk.ints("x", required=kind.startswith("UCVP"), signed=True)
        return inst.LatticeInstance(kind, blk.rows("v", signed=True), blk.ints("b")[0],
                                    None if x0 is None else tuple(x0))
    raise UnknownKind(kind)


def _blocks(text):
    current = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("%"):
            continue
        if not line:
            if current:
                yield current
                current = []
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise ParseError(no, "'key: values'", line)
        current.append((no, key.strip(), value.strip()))
    if current:
        yield current


def from_readable(text, kind=None):
    """Parse every instance in ``text``; ``kind`` overrides missing ``problem:`` lines."""
    out = []
    for lines in _blocks(text):
        blk = _Block(lines)
        got = blk._one("problem", required=kind is None)
        k = got[1] if got else kind
        if kind is not None and k != kind:
            raise ParseError(got[0], f"problem {kind}", k)
        if k not in inst.ALL_KINDS:
            raise UnknownKind(f"unknown problem kind {k!r}")
        out.append(_build(k, blk))
    return out

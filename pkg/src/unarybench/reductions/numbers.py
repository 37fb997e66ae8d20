"""Reductions among the knapsack-style number problems."""

from .. import instances as inst
from ..instances import shift_int, canonical_shift

# fixed instances used when the answer is already known
UK_REJECT = inst.uk(1, (2,))
UK_ACCEPT = inst.uk(1, (1,))
AMBUK_REJECT = inst.ambuk((1,), (2,))
AMBUK_ACCEPT = inst.ambuk((1,), (1,))
SU2PART_REJECT = inst.su2part([(1, 2)])
SHIFTUK_REJECT = inst.shift("ShiftUK", [(1, 0)], [(1, 1)])


def _balance(b, items):
    """Partition items for target b (c = sum of items): case analysis of the UK/U2PART equivalence."""
    c = sum(items)
    if 2 * b == c:
        return list(items)
    if 2 * b > c:
        b = c - b
    return list(items) + [c - 2 * b]


def uk_to_u2part(x):
    return inst.u2part(_balance(x.b, x.items))


def u2part_to_uk(x):
    c = sum(x.items)
    if c % 2:
        return UK_REJECT
    return inst.uk(c // 2, x.items)


def uk_u2part(x, direction=None):
    """UK -> U2PART or U2PART -> UK, chosen by the kind of ``x``."""
    return uk_to_u2part(x) if x.kind == "UK" else u2part_to_uk(x)


def ambuk_queries(x):
    return [inst.uk(b, x.items) for b in x.targets]


def ambuk_tt(x):
    """Queries UK(b_j; a) for every target; the evaluator is OR."""
    return ambuk_queries(x), any


def uk_to_ambuk(x):
    return inst.ambuk((x.b,), x.items)


def uk_to_uasubsum(x):
    return inst.uasubsum(x.b, x.b, x.items)


def uasubsum_to_uk(x):
    b1, b2 = x.targets
    total = sum(x.items)
    if b1 > b2 or total < b1:
        return UK_REJECT
    if total <= b2:
        return UK_ACCEPT
    extra = [total + i - 1 for i in range(1, b2 - b1 + 2)]
    return inst.uk(b2 + total, list(x.items) + extra)


def uk_uasubsum(x, direction=None):
    return uk_to_uasubsum(x) if x.kind == "UK" else uasubsum_to_uk(x)


# --- shift-unary versions: the same arithmetic on big integers ---------------

def shiftuk_to_shiftu2part(x):
    values = [shift_int(a) for a in x.items]
    b = shift_int(x.targets[0])
    out = list(x.items)
    extra = _balance(b, values)[len(values):]
    return inst.shift("ShiftU2PART", [], out + [canonical_shift(v) for v in extra])


def shiftu2part_to_shiftuk(x):
    c = sum(shift_int(a) for a in x.items)
    if c % 2:
        return SHIFTUK_REJECT
    return inst.shift("ShiftUK", [canonical_shift(c // 2)], x.items)


def shiftuk_to_shiftambuk(x):
    return inst.shift("ShiftAmbUK", x.targets, x.items)


def shiftuk_to_shiftuasubsum(x):
    return inst.shift("ShiftUASubSum", [x.targets[0], x.targets[0]], x.items)


def shiftuk_to_variants(x, target_kind):
    table = {
        "ShiftU2PART": shiftuk_to_shiftu2part,
        "ShiftAmbUK": shiftuk_to_shiftambuk,
        "ShiftUASubSum": shiftuk_to_shiftuasubsum,
    }
    return table[target_kind](x)


# --- UBCP -----------------------------------------------------------------------

def ubcp_to_ambuk(x):
    """Pairs (k_i, l_i) -> items c_i = m - (k_i - l_i), targets j*m.

    Respects the bound k: only index sets of size 2..min(k, n-1) are encoded
    as targets; singletons and the full set are settled up front.
    """
    ks = [p[0] for p in x.items]
    ls = [p[1] for p in x.items]
    n, k = len(ks), x.bound
    if (sum(ks) == sum(ls) and n <= k) or any(a == b for a, b in zip(ks, ls)):
        return AMBUK_ACCEPT
    m = max(sum(ks), sum(ls))
    targets = [j * m for j in range(2, min(k, n - 1) + 1)]
    if not targets:
        return AMBUK_REJECT
    return inst.ambuk(targets, [m - (a - b) for a, b in zip(ks, ls)])


def uk_to_ubcp(x):
    """Pairs (2a_i, a_i) plus the anchor (1, b+1); k = n+1."""
    pairs = [(2 * a, a) for a in x.items] + [(1, x.b + 1)]
    return inst.ubcp(pairs, len(pairs))


# --- matrices -------------------------------------------------------------------

def suk_to_su2part(x):
    """Append columns 2d_i - b_i and d_i + b_i (d_i the row sum)."""
    rows = []
    for b, row in zip(x.targets, x.items):
        d = sum(row)
        if b > d:
            return SU2PART_REJECT
        rows.append(tuple(row) + (2 * d - b, d + b))
    return inst.su2part(rows)


# --- deliberately broken variants for the mutation check -----------------------

def uk_to_u2part_drop_gadget(x):
    """Forgets the extra c - 2b item."""
    return inst.u2part(x.items)

"""Exhaustive and seeded instance families.

The bounds used by ``verify`` and ``generate`` live in :data:`BOUNDS` so
both commands enumerate exactly the same instances. Enumeration rules:

* unary item lists are nondecreasing tuples of length 1..max_n over
  [1, max_value] (item order never changes membership);
* a single target b ranges over [1, sum(a)], UASubSum bounds over
  [1, sum(a)+1] (so the b1 > b2 and "too small" cases appear), AmbUK
  target lists are increasing and of length 1..max_m;
* UKEXC item tuples keep their order (EXC depends on it) and every EXC
  subset is tried;
* matrix rows (SUK, SU2PART) are arbitrary tuples, up to max_m rows;
* UBCP pair lists are nondecreasing in the pair order, k in [1, n];
* shift-unary pairs (p, t) use t in [0, max_shift] and p * 2^t <= max_value;
* topologically ordered graphs on [1, v] take every edge subset of
  {(i, j) | i < j} and every weight vector in [1, max_weight];
* lattices enumerate every basis with coordinates in [-max_coord, max_coord].
"""

from dataclasses import dataclass, replace
from itertools import combinations, combinations_with_replacement, product
import random

from . import instances as inst
from .errors import UnknownKind


@dataclass(frozen=True)
class Bounds:
    max_n: int = 4
    max_value: int = 6
    max_m: int = 2
    max_shift: int = 2
    max_vertices: int = 4
    max_weight: int = 3
    max_coord: int = 2
    max_dim: int = 2


BOUNDS = {
    # reduction soundness matrix
    "subset": Bounds(max_n=4, max_value=6),
    "ambuk": Bounds(max_n=4, max_value=6, max_m=2),
    "uasubsum": Bounds(max_n=4, max_value=6),
    "shift": Bounds(max_n=4, max_value=6, max_shift=2),
    "ukexc": Bounds(max_n=3, max_value=6),
    "ukexc-wide": Bounds(max_n=4, max_value=3),
    "suk": Bounds(max_n=4, max_value=6, max_m=1),
    "suk-two-row": Bounds(max_n=3, max_value=3, max_m=2),
    "su2part": Bounds(max_n=4, max_value=6, max_m=1),
    "su2part-two-row": Bounds(max_n=3, max_value=3, max_m=2),
    "ubcp": Bounds(max_n=3, max_value=4),
    "ubcp-reduction": Bounds(max_n=4, max_value=6),
    "graph": Bounds(max_vertices=4, max_weight=4),
    "graph-wide": Bounds(max_vertices=5, max_weight=4),
    "eplp": Bounds(max_vertices=5),
    "lattice": Bounds(max_dim=2, max_coord=2),
    # machine equivalence (one-way kinds, then two-way/alternating kinds)
    "machine-one-way": Bounds(max_n=4, max_value=6),
    "machine-two-way": Bounds(max_n=3, max_value=4),
    # UBCP: full length range for three pairs, shorter lengths for four
    "machine-ubcp": Bounds(max_n=3, max_value=6),
    "machine-ubcp-long": Bounds(max_n=4, max_value=3),
}

GRAPH_WIDE_SAMPLES = 400
LATTICE_DIM3_SAMPLES = 300
SHIFT_WIDE_SAMPLES = 500


def nondecreasing(max_n, max_value, min_n=1):
    for n in range(min_n, max_n + 1):
        yield from combinations_with_replacement(range(1, max_value + 1), n)


def tuples(max_n, max_value, min_n=1):
    for n in range(min_n, max_n + 1):
        yield from product(range(1, max_value + 1), repeat=n)


def _powerset(xs):
    xs = list(xs)
    for r in range(len(xs) + 1):
        yield from combinations(xs, r)


def uk_family(bd):
    for a in nondecreasing(bd.max_n, bd.max_value):
        for b in range(1, sum(a) + 1):
            yield inst.uk(b, a)


def u2part_family(bd):
    for a in nondecreasing(bd.max_n, bd.max_value):
        yield inst.u2part(a)


def ambuk_family(bd):
    for a in nondecreasing(bd.max_n, bd.max_value):
        for m in range(1, bd.max_m + 1):
            for bs in combinations(range(1, sum(a) + 1), m):
                yield inst.ambuk(bs, a)


def uasubsum_family(bd):
    for a in nondecreasing(bd.max_n, bd.max_value):
        top = sum(a) + 1
        for b1 in range(1, top + 1):
            for b2 in range(1, top + 1):
                yield inst.uasubsum(b1, b2, a)


def ukexc_family(bd, min_n=1):
    for a in tuples(bd.max_n, bd.max_value, min_n):
        n = len(a)
        pairs = list(combinations(range(1, n + 1), 2))
        for b in range(1, sum(a) + 1):
            for exc in _powerset(pairs):
                yield inst.ukexc(b, a, exc)


def suk_family(bd, min_m=1):
    for m in range(min_m, bd.max_m + 1):
        for n in range(1, bd.max_n + 1):
            if m > 1 and n > bd.max_n - 1:
                continue  # two-row matrices stop one column earlier
            rows_iter = product(product(range(1, bd.max_value + 1), repeat=n), repeat=m)
            for rows in rows_iter:
                for bs in product(*[range(1, sum(r) + 2) for r in rows]):
                    yield inst.suk(bs, rows)


def su2part_family(bd, min_m=1):
    for m in range(min_m, bd.max_m + 1):
        for n in range(1, bd.max_n + 1):
            for rows in product(product(range(1, bd.max_value + 1), repeat=n), repeat=m):
                yield inst.su2part(rows)


def ubcp_family(bd):
    pair_values = list(product(range(1, bd.max_value + 1), repeat=2))
    for n in range(1, bd.max_n + 1):
        for pairs in combinations_with_replacement(pair_values, n):
            for k in range(1, n + 1):
                yield inst.ubcp(pairs, k)


def _shift_values(bd):
    """Pairs (p, t) with t <= max_shift whose value p * 2^t is at most max_value."""
    return [(p, t) for p in range(1, bd.max_value + 1) for t in range(bd.max_shift + 1)
            if p << t <= bd.max_value]


def shiftuk_family(bd):
    vals = _shift_values(bd)
    for n in range(1, bd.max_n + 1):
        for items in combinations_with_replacement(vals, n):
            total = sum(inst.shift_int(x) for x in items)
            for b in range(1, total + 1):
                yield inst.shift("ShiftUK", [inst.canonical_shift(b)], items)


def shiftu2part_family(bd):
    vals = _shift_values(bd)
    for n in range(1, bd.max_n + 1):
        for items in combinations_with_replacement(vals, n):
            yield inst.shift("ShiftU2PART", [], items)


def shiftuk_sample(seed=0, count=SHIFT_WIDE_SAMPLES, max_n=4, max_p=6, max_t=20):
    """Seeded ShiftUK instances with large shifts; half the targets are reachable sums."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        items = [(rng.randint(1, max_p), rng.randint(0, max_t)) for _ in range(rng.randint(1, max_n))]
        values = [inst.shift_int(x) for x in items]
        if rng.random() < 0.5:
            b = sum(v for v in values if rng.random() < 0.5) or values[0]
        else:
            b = rng.randint(1, sum(values))
        out.append(inst.shift("ShiftUK", [inst.canonical_shift(b)], items))
    return out


def _dag_edges(nv):
    return [(i, j) for i in range(1, nv + 1) for j in range(i + 1, nv + 1)]


def dag_family(bd, kind="TO-EWPP", weighted=True, max_c=None):
    """Topologically ordered graphs with source 1 and every target c up to the total weight."""
    for nv in range(1, bd.max_vertices + 1):
        verts = tuple(range(1, nv + 1))
        for es in _powerset(_dag_edges(nv)):
            if not weighted:
                top = max_c or nv
                for c in range(1, top + 1):
                    yield inst.WeightedDag(kind, verts, es, 1, c)
                continue
            for ws in product(range(1, bd.max_weight + 1), repeat=len(es)):
                for c in range(1, sum(ws) + 2):
                    yield inst.WeightedDag(kind, verts, es, 1, c, ws)


def relabel(g, perm, kind=None):
    """Rename vertices by ``perm`` (a dict), keeping weights attached to their edges."""
    es = [(perm[u], perm[v]) for u, v in g.edges]
    return inst.WeightedDag(kind or g.kind, tuple(perm[v] for v in g.vertices), es,
                            perm[g.source], g.target, g.weights)


def reversed_labels(g, kind="EWPP"):
    n = max(g.vertices)
    return relabel(g, {v: n + 1 - v for v in g.vertices}, kind)


def random_dag(rng, nv, max_weight, kind="TO-EWPP", p=0.5):
    verts = tuple(range(1, nv + 1))
    es = [e for e in _dag_edges(nv) if rng.random() < p]
    ws = [rng.randint(1, max_weight) for _ in es]
    c = rng.randint(1, max(1, sum(ws)))
    return inst.WeightedDag(kind, verts, es, 1, c, ws)


def wide_dag_sample(bd, seed=0, count=GRAPH_WIDE_SAMPLES, kind="TO-EWPP"):
    rng = random.Random(seed)
    return [random_dag(rng, bd.max_vertices, bd.max_weight, kind) for _ in range(count)]


def lattice_bases(dim, m, max_coord):
    coords = range(-max_coord, max_coord + 1)
    vectors = [v for v in product(coords, repeat=dim) if any(v)]
    yield from combinations(vectors, m)


def lattice_family(bd, kind, max_b=2):
    coords = range(-bd.max_coord, bd.max_coord + 1)
    for dim in range(1, bd.max_dim + 1):
        for m in range(1, dim + 1):
            for basis in lattice_bases(dim, m, bd.max_coord):
                for b in range(1, max_b + 1):
                    if kind.startswith("UCVP"):
                        for x0 in product(coords, repeat=dim):
                            yield inst.LatticeInstance(kind, basis, b, x0)
                    else:
                        yield inst.LatticeInstance(kind, basis, b)


def random_lattice(rng, kind, dim, m, max_coord, max_b=2):
    while True:
        basis = tuple(tuple(rng.randint(-max_coord, max_coord) for _ in range(dim)) for _ in range(m))
        if all(any(v) for v in basis):
            break
    b = rng.randint(1, max_b)
    x0 = tuple(rng.randint(-max_coord, max_coord) for _ in range(dim)) if kind.startswith("UCVP") else None
    return inst.LatticeInstance(kind, basis, b, x0)


# --- one entry point per kind, used by ``generate`` -------------------------

def _kind_family(kind, bd):
    if kind == "UK":
        return uk_family(bd)
    if kind == "U2PART":
        return u2part_family(bd)
    if kind == "AmbUK":
        return ambuk_family(bd)
    if kind == "UASubSum":
        return uasubsum_family(bd)
    if kind == "UKEXC":
        return ukexc_family(bd)
    if kind == "SUK":
        return suk_family(bd)
    if kind == "SU2PART":
        return su2part_family(bd)
    if kind == "UBCP":
        return ubcp_family(bd)
    if kind == "ShiftUK":
        return shiftuk_family(bd)
    if kind == "ShiftU2PART":
        return shiftu2part_family(bd)
    if kind == "ShiftAmbUK":
        return (inst.shift("ShiftAmbUK", x.targets, x.items) for x in shiftuk_family(bd))
    if kind == "ShiftUASubSum":
        return (inst.shift("ShiftUASubSum", [b, b], x.items)
                for x in shiftuk_family(bd) for b in x.targets)
    if kind in ("TO-EWPP", "EWPP"):
        return dag_family(bd, kind)
    if kind == "EC-EWPP":
        return (inst.WeightedDag("EC-EWPP", g.vertices, g.edges, g.source, g.target, g.weights)
                for g in dag_family(bd, "TO-EWPP") if inst.classify_graph(g).edge_closed)
    if kind == "EPLP":
        return dag_family(bd, "EPLP", weighted=False)
    if kind in inst.LATTICE_KINDS:
        return lattice_family(bd, kind)
    raise UnknownKind(kind)


def default_bounds(kind):
    if kind in ("UKEXC",):
        return BOUNDS["ukexc"]
    if kind == "SUK":
        return BOUNDS["suk-two-row"]
    if kind == "SU2PART":
        return BOUNDS["su2part-two-row"]
    if kind == "UBCP":
        return BOUNDS["ubcp"]
    if kind in inst.SHIFT_KINDS:
        return BOUNDS["shift"]
    if kind in inst.PATH_KINDS:
        return BOUNDS["eplp"] if kind == "EPLP" else BOUNDS["graph"]
    if kind in inst.LATTICE_KINDS:
        return BOUNDS["lattice"]
    return BOUNDS["subset"]


def family(kind, max_n=None, max_value=None, bounds=None):
    """Exhaustive family for ``kind``; ``max_n``/``max_value`` override the defaults."""
    if kind not in inst.ALL_KINDS:
        raise UnknownKind(kind)
    bd = bounds or default_bounds(kind)
    if max_n is not None:
        bd = replace(bd, max_n=max_n, max_vertices=max_n, max_dim=max_n)
    if max_value is not None:
        bd = replace(bd, max_value=max_value, max_weight=max_value, max_coord=max_value)
    return _kind_family(kind, bd)


def sample(kind, count, seed, max_n=None, max_value=None):
    """Seeded random subset of the exhaustive family (reservoir sampling, deterministic)."""
    rng = random.Random(seed)
    chosen = []
    for k, x in enumerate(family(kind, max_n, max_value)):
        if k < count:
            chosen.append(x)
        else:
            j = rng.randint(0, k)
            if j < count:
                chosen[j] = x
    return chosen

"""Exhaustive ground-truth deciders for every problem kind.

The subset oracle enumerates index sets in shortlex order (by size, then
lexicographically), so the reported witness is the smallest one. A NO answer
is only returned after the enumeration finished; oversized instances raise
:class:`InstanceTooLarge` instead.
"""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement
import math

import numpy as np

from .errors import InstanceTooLarge, NotAcyclic
from .instances import (
    SubsetInstance, WeightedDag, LatticeInstance, GraphClassTag,
    SHIFT_KINDS, shift_int, topological_order, check_class, required_class,
    classify_graph,
)
from .readable import to_readable, from_readable

DEFAULT_SUBSET_BUDGET = 24
DEFAULT_LATTICE_BUDGET = 2_000_000


def _subsets(n):
    for r in range(n + 1):
        yield from combinations(range(1, n + 1), r)


def _values(x):
    if x.kind in SHIFT_KINDS:
        return [shift_int(a) for a in x.items], [shift_int(b) for b in x.targets]
    return list(x.items), list(x.targets)


def _check(x, S, seq_mode):
    kind = x.kind
    items, targets = _values(x)
    if kind in ("UK", "ShiftUK"):
        return sum(items[i - 1] for i in S) == targets[0]
    if kind in ("U2PART", "ShiftU2PART"):
        return 2 * sum(items[i - 1] for i in S) == sum(items)
    if kind in ("UASubSum", "ShiftUASubSum"):
        return targets[0] <= sum(items[i - 1] for i in S) <= targets[1]
    if kind == "UKEXC":
        return (bool(S) and sum(items[i - 1] for i in S) == targets[0]
                and not any((i, j) in x.exc for i, j in zip(S, S[1:])))
    if kind == "SUK":
        return all(sum(row[i - 1] for i in S) == b for b, row in zip(x.targets, x.items))
    if kind == "SU2PART":
        return all(2 * sum(row[i - 1] for i in S) == sum(row) for row in x.items)
    if kind == "UBCP":
        if not S or len(S) > x.bound:
            return False
        return sum(x.items[i - 1][0] for i in S) == sum(x.items[i - 1][1] for i in S)
    raise ValueError(kind)


def decide_subset_family(x, witness=False, budget=DEFAULT_SUBSET_BUDGET, sequence_mode=False):
    """Decide a number problem by enumeration.

    AmbUK witnesses are ``(j, S)``; UBCP in ``sequence_mode`` enumerates
    index multisets of size at most k (the order of a unary correspondence
    sequence never matters).
    """
    if not isinstance(x, SubsetInstance):
        raise TypeError("decide_subset_family needs a SubsetInstance")
    n = x.n
    if n > budget:
        raise InstanceTooLarge(f"2^{n} subsets exceed the budget 2^{budget}")
    found = None
    if x.kind in ("AmbUK", "ShiftAmbUK"):
        items, targets = _values(x)
        sums = {}
        for S in _subsets(n):
            sums.setdefault(sum(items[i - 1] for i in S), S)
        for j, b in enumerate(targets, start=1):
            if b in sums:
                found = (j, sums[b])
                break
    elif x.kind == "UBCP" and sequence_mode:
        for t in range(1, x.bound + 1):
            if math.comb(n + t - 1, t) > 1 << budget:
                raise InstanceTooLarge("too many index multisets")
            for S in combinations_with_replacement(range(1, n + 1), t):
                if sum(x.items[i - 1][0] - x.items[i - 1][1] for i in S) == 0:
                    found = S
                    break
            if found:
                break
    else:
        for S in _subsets(n):
            if _check(x, S, sequence_mode):
                found = S
                break
    if witness:
        return found is not None, found
    return found is not None


def subset_sum_dp(items, b):
    """Pseudo-polynomial reachability table; an independent second oracle for UK."""
    reach = 1
    for a in items:
        reach |= reach << a
    return b >= 0 and bool(reach >> b & 1)


def _reach_sets(g, cap):
    """Bitmask of attainable path weights (< 2**(cap+1)) for each vertex."""
    order = topological_order(g)
    if order is None:
        raise NotAcyclic("graph contains a directed cycle")
    w = g.weight_map()
    adj = g.adjacency
    mask = (1 << (cap + 1)) - 1
    reach = {v: 0 for v in g.vertices}
    reach[g.source] = 1
    for u in order:
        if not reach[u]:
            continue
        for v in adj[u]:
            reach[v] |= (reach[u] << w[(u, v)]) & mask
    return reach


def decide_path_family(x, class_requirement=None, witness=False):
    """EWPP: some vertex at path weight exactly c; EPLP: some sink at path length exactly c."""
    if not isinstance(x, WeightedDag):
        raise TypeError("decide_path_family needs a WeightedDag")
    check_class(x, class_requirement or required_class(x.kind))
    c = x.target
    reach = _reach_sets(x, c)
    candidates = x.sinks() if x.kind == "EPLP" else x.vertices
    hit = next((v for v in candidates if reach[v] >> c & 1), None)
    if witness:
        return hit is not None, hit
    return hit is not None


def enumerate_paths(g):
    """All directed paths starting at the source (DFS), as vertex tuples."""
    adj = g.adjacency
    out = []

    def walk(path):
        out.append(tuple(path))
        for v in adj[path[-1]]:
            walk(path + [v])

    walk([g.source])
    return out


def _norm(rows, which):
    a = np.abs(rows)
    return a.max(axis=1) if which == "max" else a.min(axis=1)


def default_coeff_bound(x):
    """b + ||x0||_inf + sum_i ||v_i||_inf."""
    t = max((abs(c) for c in x.target), default=0) if x.target is not None else 0
    return x.bound + t + sum(max(abs(c) for c in v) for v in x.basis)


def _rank(basis):
    return int(np.linalg.matrix_rank(np.array(basis, dtype=float)))


def exact_coeff_bound(x):
    """Coefficient box that provably contains every witness, or None.

    Only available for max-norm kinds with linearly independent bases: any
    witness w has ||w||_inf <= b + ||x0||_inf, and z = B^+ w is bounded
    row-wise by the absolute row sums of the exact pseudo-inverse.
    """
    if x.norm != "max" or _rank(x.basis) < len(x.basis):
        return None
    B = [[Fraction(c) for c in v] for v in x.basis]  # rows are basis vectors
    m = len(B)
    gram = [[sum(a * b for a, b in zip(B[i], B[j])) for j in range(m)] for i in range(m)]
    inv = _invert(gram)
    pinv = [[sum(inv[i][k] * B[k][d] for k in range(m)) for d in range(len(B[0]))] for i in range(m)]
    radius = x.bound + (max(abs(c) for c in x.target) if x.target is not None else 0)
    return max(math.floor(sum(abs(p) for p in row) * radius) for row in pinv)


def _invert(a):
    n = len(a)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def decide_lattice_family(x, coeff_bound=None, witness=False, budget=DEFAULT_LATTICE_BUDGET):
    """Search z in [-bound, bound]^m for a lattice vector meeting the norm condition.

    YES answers are always verified; NO answers are exact only when the
    bound covers every possible witness (see :func:`exact_coeff_bound`).
    """
    if not isinstance(x, LatticeInstance):
        raise TypeError("decide_lattice_family needs a LatticeInstance")
    if coeff_bound is None:
        coeff_bound = default_coeff_bound(x)
    m = len(x.basis)
    if (2 * coeff_bound + 1) ** m > budget:
        raise InstanceTooLarge(f"(2*{coeff_bound}+1)^{m} coefficient vectors exceed the budget")
    rng = np.arange(-coeff_bound, coeff_bound + 1)
    Z = np.array(np.meshgrid(*([rng] * m), indexing="ij")).reshape(m, -1).T
    W = Z @ np.array(x.basis, dtype=np.int64)
    if x.kind.startswith("UCVP"):
        ok = _norm(W - np.array(x.target, dtype=np.int64), x.norm) <= x.bound
    else:
        ok = (_norm(W, x.norm) <= x.bound) & np.any(W != 0, axis=1)
    hits = np.nonzero(ok)[0]
    if witness:
        if len(hits) == 0:
            return False, None
        # smallest coefficient vector by (max |z|, lexicographic) for readable witnesses
        best = min(hits, key=lambda k: (int(np.abs(Z[k]).max()), tuple(int(v) for v in Z[k])))
        return True, tuple(int(v) for v in Z[best])
    return bool(len(hits))


def decide(x, **kw):
    """Dispatch to the family oracle for any instance type."""
    if isinstance(x, SubsetInstance):
        return decide_subset_family(x, **kw)
    if isinstance(x, WeightedDag):
        return decide_path_family(x, **kw)
    if isinstance(x, LatticeInstance):
        if "coeff_bound" not in kw:
            kw["coeff_bound"] = exact_coeff_bound(x)
        return decide_lattice_family(x, **kw)
    raise TypeError(f"not an instance: {x!r}")


__all__ = [
    "decide", "decide_subset_family", "decide_path_family", "decide_lattice_family",
    "classify_graph", "subset_sum_dp", "enumerate_paths", "exact_coeff_bound",
    "default_coeff_bound", "GraphClassTag", "to_readable", "from_readable",
]

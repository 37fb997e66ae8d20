"""Immutable instance types for every problem kind the workbench handles.

Three families share the ``kind`` tag convention:

* :class:`SubsetInstance` covers the knapsack-like number problems,
* :class:`WeightedDag` covers the path problems (the graph is stored in
  unary-adjacency-list form, successors sorted ascending),
* :class:`LatticeInstance` covers the closest/shortest vector variants.

Shift-unary numbers are stored as plain ``(p, t)`` tuples meaning ``p * 2**t``.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidInstance, NotAcyclic, ClassViolation

UNARY_KINDS = ("UK", "U2PART", "AmbUK", "UASubSum")
SHIFT_KINDS = ("ShiftUK", "ShiftU2PART", "ShiftAmbUK", "ShiftUASubSum")
SUBSET_KINDS = UNARY_KINDS + SHIFT_KINDS + ("UKEXC", "SUK", "SU2PART", "UBCP")
PATH_KINDS = ("EWPP", "EPLP", "TO-EWPP", "EC-EWPP")
LATTICE_KINDS = ("UCVP_max", "UCVP_min", "USVP_max", "USVP_min")
ALL_KINDS = SUBSET_KINDS + PATH_KINDS + LATTICE_KINDS


def _positive(values, what):
    for v in values:
        if not isinstance(v, int) or v < 1:
            raise InvalidInstance(f"{what} must be positive integers, got {v!r}")


def _shift_pairs(pairs, what):
    for pair in pairs:
        if len(pair) != 2:
            raise InvalidInstance(f"{what}: shift-unary value must be a (p, t) pair, got {pair!r}")
        p, t = pair
        if not isinstance(p, int) or p < 1 or not isinstance(t, int) or t < 0:
            raise InvalidInstance(f"{what}: need p >= 1 and t >= 0, got {pair!r}")


def shift_int(pair):
    p, t = pair
    return p << t


def canonical_shift(v):
    """Shift pair (p, t) of a positive integer with p odd (t = trailing zero bits)."""
    if v < 1:
        raise ValueError("shift-unary values are positive")
    t = (v & -v).bit_length() - 1
    return (v >> t, t)


@dataclass(frozen=True)
class SubsetInstance:
    """A number problem instance.

    ``targets`` holds b (UK, UKEXC), b_1..b_m (AmbUK, SUK), (b_1, b_2)
    (UASubSum) or their shift-unary pairs; it is empty for the partition
    kinds and UBCP. ``items`` holds a_1..a_n, shift pairs, matrix rows
    (SUK, SU2PART) or (|a_i|, |b_i|) length pairs (UBCP). ``exc`` is only
    used by UKEXC and ``bound`` (k) only by UBCP.
    """

    kind: str
    targets: tuple = ()
    items: tuple = ()
    exc: frozenset = frozenset()
    bound: int = 0

    def __post_init__(self):
        object.__setattr__(self, "targets", tuple(tuple(t) if isinstance(t, (list, tuple)) else t
                                                  for t in self.targets))
        object.__setattr__(self, "items", tuple(tuple(a) if isinstance(a, (list, tuple)) else a
                                                for a in self.items))
        object.__setattr__(self, "exc", frozenset(tuple(p) for p in self.exc))
        self._validate()

    def _validate(self):
        kind = self.kind
        if kind not in SUBSET_KINDS:
            raise InvalidInstance(f"unknown subset kind {kind!r}")
        if not self.items:
            raise InvalidInstance(f"{kind}: at least one item required")
        if kind in ("UK", "UKEXC"):
            if len(self.targets) != 1:
                raise InvalidInstance(f"{kind}: exactly one target b")
            _positive(self.targets + self.items, kind)
        elif kind == "U2PART":
            if self.targets:
                raise InvalidInstance("U2PART has no target")
            _positive(self.items, kind)
        elif kind == "AmbUK":
            if not self.targets:
                raise InvalidInstance("AmbUK: at least one target")
            _positive(self.targets + self.items, kind)
        elif kind == "UASubSum":
            if len(self.targets) != 2:
                raise InvalidInstance("UASubSum: targets are (b1, b2)")
            _positive(self.targets + self.items, kind)
        elif kind in SHIFT_KINDS:
            expected = {"ShiftUK": 1, "ShiftU2PART": 0, "ShiftUASubSum": 2}.get(kind)
            if expected is not None and len(self.targets) != expected:
                raise InvalidInstance(f"{kind}: expected {expected} targets")
            if kind == "ShiftAmbUK" and not self.targets:
                raise InvalidInstance("ShiftAmbUK: at least one target")
            _shift_pairs(self.targets + self.items, kind)
        elif kind in ("SUK", "SU2PART"):
            width = len(self.items[0])
            if width == 0:
                raise InvalidInstance(f"{kind}: empty row")
            for row in self.items:
                if len(row) != width:
                    raise InvalidInstance(f"{kind}: matrix must be rectangular")
                _positive(row, kind)
            if kind == "SUK":
                if len(self.targets) != len(self.items):
                    raise InvalidInstance("SUK: one target per row")
                _positive(self.targets, kind)
            elif self.targets:
                raise InvalidInstance("SU2PART has no targets")
        elif kind == "UBCP":
            for pair in self.items:
                if len(pair) != 2:
                    raise InvalidInstance("UBCP: items are (|a_i|, |b_i|) pairs")
                _positive(pair, kind)
            if not isinstance(self.bound, int) or self.bound < 1:
                raise InvalidInstance("UBCP: bound k must be positive")
        if self.exc and kind != "UKEXC":
            raise InvalidInstance(f"{kind}: EXC only allowed for UKEXC")
        n = len(self.items)
        for i, j in self.exc:
            if not (1 <= i < j <= n):
                raise InvalidInstance(f"UKEXC: EXC pair {(i, j)} outside {{(i,j) | 1<=i<j<={n}}}")

    @property
    def n(self):
        if self.kind in ("SUK", "SU2PART"):
            return len(self.items[0])
        return len(self.items)

    @property
    def b(self):
        return self.targets[0]


def uk(b, items):
    return SubsetInstance("UK", (b,), tuple(items))


def u2part(items):
    return SubsetInstance("U2PART", (), tuple(items))


def ambuk(targets, items):
    return SubsetInstance("AmbUK", tuple(targets), tuple(items))


def uasubsum(b1, b2, items):
    return SubsetInstance("UASubSum", (b1, b2), tuple(items))


def ukexc(b, items, exc=()):
    return SubsetInstance("UKEXC", (b,), tuple(items), frozenset(exc))


def suk(targets, rows):
    return SubsetInstance("SUK", tuple(targets), tuple(tuple(r) for r in rows))


def su2part(rows):
    return SubsetInstance("SU2PART", (), tuple(tuple(r) for r in rows))


def ubcp(pairs, k):
    return SubsetInstance("UBCP", (), tuple(tuple(p) for p in pairs), bound=k)


def shift(kind, targets, items):
    return SubsetInstance(kind, tuple(tuple(t) for t in targets), tuple(tuple(a) for a in items))


@dataclass(frozen=True)
class GraphClassTag:
    topologically_ordered: bool
    edge_closed: bool


@dataclass(frozen=True)
class WeightedDag:
    """Directed acyclic graph over positive-integer vertices.

    ``edges`` is kept sorted in the lexicographic pair order and ``weights``
    (absent for EPLP) is aligned with it.
    """

    kind: str
    vertices: tuple
    edges: tuple
    source: int
    target: int
    weights: tuple = None

    def __post_init__(self):
        if self.kind not in PATH_KINDS:
            raise InvalidInstance(f"unknown path kind {self.kind!r}")
        verts = tuple(sorted(set(self.vertices)))
        _positive(verts, f"{self.kind} vertices")
        if not verts:
            raise InvalidInstance("graph needs at least one vertex")
        pairs = [tuple(e) for e in self.edges]
        weights = None if self.weights is None else tuple(self.weights)
        if weights is not None and len(weights) != len(pairs):
            raise InvalidInstance("one weight per edge required")
        if weights is not None:
            order = sorted(range(len(pairs)), key=lambda k: pairs[k])
            pairs = [pairs[k] for k in order]
            weights = tuple(weights[k] for k in order)
        else:
            pairs.sort()
        if len(set(pairs)) != len(pairs):
            raise InvalidInstance("duplicate edge")
        vset = set(verts)
        for u, v in pairs:
            if u not in vset or v not in vset:
                raise InvalidInstance(f"edge {(u, v)} uses an unknown vertex")
            if u == v:
                raise NotAcyclic(f"self-loop at {u}")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(pairs))
        object.__setattr__(self, "weights", weights)
        if self.kind == "EPLP":
            if weights is not None:
                raise InvalidInstance("EPLP instances carry no weights")
        elif weights is None:
            raise InvalidInstance(f"{self.kind} needs edge weights")
        else:
            _positive(weights, "edge weights")
        if self.source not in vset:
            raise InvalidInstance(f"source {self.source} is not a vertex")
        _positive((self.target,), "target c")
        if topological_order(self) is None:
            raise NotAcyclic("graph contains a directed cycle")

    @property
    def adjacency(self):
        adj = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
        return {v: tuple(sorted(succ)) for v, succ in adj.items()}

    def weight_map(self):
        if self.weights is None:
            return {e: 1 for e in self.edges}
        return dict(zip(self.edges, self.weights))

    def sinks(self):
        return tuple(v for v, succ in self.adjacency.items() if not succ)


def topological_order(g):
    """Kahn's algorithm; None when the graph has a cycle."""
    indeg = {v: 0 for v in g.vertices}
    adj = {v: [] for v in g.vertices}
    for u, v in g.edges:
        indeg[v] += 1
        adj[u].append(v)
    ready = sorted(v for v, d in indeg.items() if d == 0)
    order = []
    while ready:
        u = ready.pop()
        order.append(u)
        for v in adj[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                ready.append(v)
    return order if len(order) == len(g.vertices) else None


def classify_graph(g):
    """Compute the topological-order and edge-closure flags by direct quantifier checks."""
    es = set(g.edges)
    to = all(u < v for u, v in es)
    ec = True
    verts = g.vertices
    for u in verts:
        for v in verts:
            for w in verts:
                if (u, v) in es and (v, w) in es and (u, w) not in es:
                    ec = False
                if u != v and (u, w) in es and (v, w) in es and (u, v) not in es and (v, u) not in es:
                    ec = False
    return GraphClassTag(to, ec)


def class_violation(g, requirement):
    """Return a description of the first failed clause, or None."""
    es = set(g.edges)
    if requirement.topologically_ordered:
        for u, v in sorted(es):
            if not u < v:
                return f"topological order: edge ({u},{v}) has {u} >= {v}"
    if requirement.edge_closed:
        for u, v in sorted(es):
            for w in g.adjacency[v]:
                if (u, w) not in es:
                    return f"edge closure (1): ({u},{v}),({v},{w}) in E but ({u},{w}) not"
        preds = {}
        for u, w in es:
            preds.setdefault(w, []).append(u)
        for w, us in sorted(preds.items()):
            for u, v in combinations(sorted(us), 2):
                if (u, v) not in es and (v, u) not in es:
                    return f"edge closure (2): ({u},{w}),({v},{w}) in E but {u},{v} unconnected"
    return None


def required_class(kind):
    if kind == "TO-EWPP":
        return GraphClassTag(True, False)
    if kind == "EC-EWPP":
        return GraphClassTag(True, True)
    return None


def check_class(g, requirement=None):
    requirement = requirement or required_class(g.kind)
    if requirement is None:
        return
    problem = class_violation(g, requirement)
    if problem:
        raise ClassViolation(problem)


@dataclass(frozen=True)
class LatticeInstance:
    kind: str
    basis: tuple
    bound: int
    target: tuple = None

    def __post_init__(self):
        if self.kind not in LATTICE_KINDS:
            raise InvalidInstance(f"unknown lattice kind {self.kind!r}")
        basis = tuple(tuple(int(c) for c in v) for v in self.basis)
        if not basis:
            raise InvalidInstance("lattice needs at least one basis vector")
        dim = len(basis[0])
        if dim == 0 or any(len(v) != dim for v in basis):
            raise InvalidInstance("basis vectors must share a positive dimension")
        object.__setattr__(self, "basis", basis)
        _positive((self.bound,), "bound b")
        if self.kind.startswith("UCVP"):
            if self.target is None or len(self.target) != dim:
                raise InvalidInstance("CVP target must match the basis dimension")
            object.__setattr__(self, "target", tuple(int(c) for c in self.target))
        elif self.target is not None:
            raise InvalidInstance("SVP instances carry no target")

    @property
    def dimension(self):
        return len(self.basis[0])

    @property
    def norm(self):
        return self.kind.split("_")[1]

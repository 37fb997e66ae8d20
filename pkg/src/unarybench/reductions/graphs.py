"""Reductions among the weighted-path problems and from UKEXC."""

from .. import instances as inst
from ..errors import NotAcyclic, ClassViolation
from ..instances import WeightedDag, topological_order, check_class, GraphClassTag


def _require_dag(g):
    if topological_order(g) is None:
        raise NotAcyclic("graph contains a directed cycle")


def eplp_to_ewpp(g):
    """Hang a heavy edge of weight |V'|+1 below every sink; c' = c + |V'| + 1."""
    _require_dag(g)
    sinks = g.sinks()
    nxt = max(g.vertices) + 1
    bars = {v: nxt + k for k, v in enumerate(sinks)}
    n = len(g.vertices) + len(sinks)
    edges = list(g.edges) + [(v, bars[v]) for v in sinks]
    weights = [1] * len(g.edges) + [n + 1] * len(sinks)
    return WeightedDag("EWPP", g.vertices + tuple(bars.values()), edges, g.source,
                       g.target + n + 1, weights)


def ewpp_to_eplp(g):
    """Replace an edge of weight k by a k-edge chain to v plus a k-edge branch to a new sink."""
    _require_dag(g)
    nxt = max(g.vertices) + 1
    verts = list(g.vertices)
    edges = []
    for (u, v), k in zip(g.edges, g.weights):
        chain = list(range(nxt, nxt + k - 1))
        bar = nxt + k - 1
        nxt = bar + 1
        verts += chain + [bar]
        last = u
        for w in chain:
            edges.append((last, w))
            last = w
        edges += [(last, v), (last, bar)]
    return WeightedDag("EPLP", verts, edges, g.source, g.target)


def ewpp_eplp(x, direction=None):
    return eplp_to_ewpp(x) if x.kind == "EPLP" else ewpp_to_eplp(x)


def ukexc_to_toewpp(x, kind="TO-EWPP", leaving=False):
    """Vertex 1 is s, vertex i+1 stands for item i; c = b + 1.

    Edge weights count the item being entered: w(s, v_j) = 1 + a_j and
    w(v_i, v_j) = a_j, so a path s, v_i1, ..., v_it weighs 1 + sum a_ij.
    ``leaving=True`` is the leaving-edge variant kept for the mutation check.
    """
    n = len(x.items)
    a = x.items
    edges, weights = [], []
    for j in range(1, n + 1):
        edges.append((1, j + 1))
        weights.append(1 if leaving else 1 + a[j - 1])
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i, j) not in x.exc:
                edges.append((i + 1, j + 1))
                weights.append(a[i - 1] if leaving else a[j - 1])
    return WeightedDag(kind, tuple(range(1, n + 2)), edges, 1, x.b + 1, weights)


def uk_to_ecewpp(x):
    """UK is UKEXC with EXC empty; the image is the complete DAG, which is edge-closed."""
    return ukexc_to_toewpp(inst.ukexc(x.b, x.items), kind="EC-EWPP")


def toewpp_to_ukexc(g):
    """One item per edge, ordered by <i,j> = (i-1)n + j after relabeling.

    Vertices are renamed order-preservingly to 2..n and a new vertex 1 gets
    a single edge to s of weight w* + 1 (w* the total weight). Every chosen
    sequence must use that edge, hence start at s; EXC forbids consecutive
    items whose edges do not chain. Target b = c + w* + 1.
    """
    check_class(g, GraphClassTag(True, False))
    rename = {v: k + 2 for k, v in enumerate(g.vertices)}
    n = len(g.vertices) + 1
    w_star = sum(g.weights)
    edges = [(1, rename[g.source], w_star + 1)]
    edges += [(rename[u], rename[v], w) for (u, v), w in zip(g.edges, g.weights)]
    edges.sort(key=lambda e: (e[0] - 1) * n + e[1])
    items = [w for _, _, w in edges]
    exc = [(p + 1, q + 1) for p in range(len(edges)) for q in range(p + 1, len(edges))
           if edges[p][1] != edges[q][0]]
    return inst.ukexc(g.target + w_star + 1, items, exc)


def ukexc_toewpp(x, direction=None):
    if x.kind == "UKEXC":
        return ukexc_to_toewpp(x)
    if x.kind == "TO-EWPP":
        return toewpp_to_ukexc(x)
    raise ClassViolation(f"no UKEXC/TO-EWPP reduction for {x.kind}")


def ukexc_to_toewpp_leaving(x):
    return ukexc_to_toewpp(x, leaving=True)

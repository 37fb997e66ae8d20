"""Compile a real-time counter automaton run into an EPLP instance.

Vertices are the configurations reachable from the initial one, numbered
in breadth-first order (the initial configuration is 1). Since the machine
reads one symbol per step, a configuration at depth d has its head on cell
d, and accepting halts sit at depth |x| + 2. Every other configuration
without successors is linked into a shared dummy chain that ends at depth
|x| + 4, so no spurious sink appears at depth |x| + 2.
"""

from collections import deque

from ..automata.model import UNIVERSAL
from ..automata.run import tape_of, initial_config, successors, halting_value
from ..errors import NotRealTime, InvalidMachine, CounterBoundExceeded
from ..instances import WeightedDag, topological_order


def ncta_to_eplp(m, x, dummy_tail=True):
    if m.mode != "real-time" or m.has_stack:
        raise NotRealTime(f"{m.name} is not a real-time stackless counter automaton")
    if any(tag == UNIVERSAL for tag in m.states.values()):
        raise InvalidMachine(f"{m.name} has universal states")
    tape = tape_of(x)
    depth = len(x) + 2
    bound = depth
    start = initial_config(m)
    ids = {start: 1}
    order = [start]
    edges = []
    dead = []
    queue = deque([start])
    while queue:
        conf = queue.popleft()
        if max(conf[2], default=0) > bound:
            raise CounterBoundExceeded(f"counter above {bound} in {conf}")
        val = halting_value(m, tape, conf)
        if val:
            continue
        nexts = [] if val is False else [c for _, c in successors(m, tape, conf)]
        if not nexts:
            dead.append(conf)
            continue
        for c in dict.fromkeys(nexts):
            if c not in ids:
                ids[c] = len(order) + 1
                order.append(c)
                queue.append(c)
            edges.append((ids[conf], ids[c]))
    verts = list(range(1, len(order) + 1))
    if dummy_tail and dead:
        # D_j sits at depth j; a dead end at head h continues at D_{h+1}
        first = min(conf[1] for conf in dead) + 1
        chain = {j: len(order) + 1 + (j - first) for j in range(first, depth + 3)}
        verts += list(chain.values())
        for j in range(first, depth + 2):
            edges.append((chain[j], chain[j + 1]))
        for conf in dead:
            edges.append((ids[conf], chain[conf[1] + 1]))
    return WeightedDag("EPLP", verts, sorted(set(edges)), 1, depth)


def accepting_sinks(m, x, g):
    """Vertex ids of accepting halts in the image (for the depth invariant)."""
    tape = tape_of(x)
    start = initial_config(m)
    ids = {start: 1}
    order = [start]
    queue = deque([start])
    acc = set()
    while queue:
        conf = queue.popleft()
        val = halting_value(m, tape, conf)
        if val:
            acc.add(ids[conf])
            continue
        if val is False:
            continue
        for _, c in successors(m, tape, conf):
            if c not in ids:
                ids[c] = len(order) + 1
                order.append(c)
                queue.append(c)
    return acc


def path_depths(g):
    """All path lengths from the source to each vertex."""
    depths = {v: set() for v in g.vertices}
    depths[g.source].add(0)
    adj = g.adjacency
    for u in topological_order(g):
        for v in adj[u]:
            depths[v] |= {d + 1 for d in depths[u]}
    return depths


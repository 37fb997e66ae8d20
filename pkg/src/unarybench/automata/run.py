"""Exhaustive evaluation of machine runs.

The reachable configuration graph is explored breadth first (bounded by the
machine's exploration budget) and acceptance is computed as a least fixed
point: accepting halts win, an existential configuration wins when some
successor wins, a universal one when it has successors and all of them win.
Infinite or cyclic computations therefore never accept.
"""

from collections import deque
from dataclasses import dataclass, field

from ..errors import BudgetExhausted
from .model import (LEFT, RIGHT, END, BOTTOM, EXISTENTIAL, UNIVERSAL, ACCEPTING, REJECTING)

TURN_CAP = 3
ALTERNATION_CAP = 4


@dataclass
class RunResult:
    accepted: object  # True, False, or None when the budget ran out
    explored: int
    budget_exhausted: bool = False
    max_turns: tuple = ()
    max_alternations: int = 0
    starts_existential: bool = True
    path: list = field(default_factory=list)

    @property
    def verdict(self):
        if self.accepted is None:
            return "indeterminate"
        return "yes" if self.accepted else "no"


def tape_of(x):
    return (LEFT,) + tuple(x) + (RIGHT,)


def initial_config(m):
    # stacks are run-length encoded, bottom first: ((symbol, count), ...)
    return (m.start, 0, (0,) * m.counters, ((BOTTOM, 1),) if m.has_stack else ())


def push(stack, sym):
    if stack[-1][0] == sym:
        return stack[:-1] + ((sym, stack[-1][1] + 1),)
    return stack + ((sym, 1),)


def pop(stack):
    sym, n = stack[-1]
    return stack[:-1] + ((sym, n - 1),) if n > 1 else stack[:-1]


def stack_symbols(stack):
    """Expanded stack content, bottom first."""
    return [sym for sym, n in stack for _ in range(n)]


def successors(m, tape, config):
    """Enabled moves from ``config`` as (transition, next configuration) pairs."""
    state, head, counters, stack = config
    sym = tape[head] if head < len(tape) else END
    top = stack[-1][0] if stack else None
    out = []
    for t in m.index.get((state, sym), ()):
        if not t.enabled(counters, top):
            continue
        new_head = head + t.move
        if new_head < 0 or new_head > len(tape):
            continue
        new_counters = tuple(c + d for c, d in zip(counters, t.deltas))
        if t.stack:
            new_stack = pop(stack) if t.stack[0] == "pop" else push(stack, t.stack[1])
        else:
            new_stack = stack
        assert min(new_counters, default=0) >= 0, "counter went negative"
        assert not m.has_stack or (new_stack and new_stack[0] == (BOTTOM, 1)), "stack bottom removed"
        out.append((t, (t.target, new_head, new_counters, new_stack)))
    return out


def halting_value(m, tape, config):
    """True/False for halting states, None otherwise."""
    tag = m.tag(config[0])
    if tag == ACCEPTING:
        return m.mode == "two-way" or config[1] == len(tape)
    if tag == REJECTING:
        return False
    return None


def explore(m, x, budget=None, extend=None, initial_extra=None):
    """BFS over (configuration, extra) nodes; ``extend`` updates the extra audit state."""
    tape = tape_of(x)
    if budget is None:
        budget = m.step_budget(len(x))
    root = (initial_config(m), initial_extra)
    ids = {root: 0}
    nodes = [root]
    succ = [None]
    queue = deque([0])
    exhausted = False
    while queue:
        k = queue.popleft()
        config, extra = nodes[k]
        if halting_value(m, tape, config) is not None:
            succ[k] = []
            continue
        out = []
        for t, nxt in successors(m, tape, config):
            node = (nxt, extend(extra, config, t, nxt) if extend else None)
            j = ids.get(node)
            if j is None:
                if len(nodes) >= budget:
                    exhausted = True
                    break
                j = ids[node] = len(nodes)
                nodes.append(node)
                succ.append(None)
                queue.append(j)
            out.append(j)
        succ[k] = out
        if exhausted:
            break
    return tape, nodes, succ, exhausted


def solve(m, tape, nodes, succ):
    """Least-fixed-point winning ranks: rank[k] is the round in which node k became winning."""
    n = len(nodes)
    rank = [None] * n
    preds = [[] for _ in range(n)]
    need = [0] * n
    queue = deque()
    for k, (config, _) in enumerate(nodes):
        val = halting_value(m, tape, config)
        if val is not None:
            if val:
                rank[k] = 0
                queue.append(k)
            continue
        targets = set(succ[k] or ())
        for j in targets:
            preds[j].append(k)
        tag = m.tag(config[0])
        need[k] = (1 if targets else -1) if tag == EXISTENTIAL else (len(targets) or -1)
    while queue:
        j = queue.popleft()
        for k in preds[j]:
            if rank[k] is not None or need[k] <= 0:
                continue
            need[k] -= 1
            if need[k] == 0:
                rank[k] = rank[j] + 1
                queue.append(k)
    return rank


def simulate(m, x, budget=None, strict=True):
    tape, nodes, succ, exhausted = explore(m, x, budget)
    if exhausted:
        if strict:
            raise BudgetExhausted(len(nodes), budget or m.step_budget(len(x)))
        return RunResult(None, len(nodes), True)
    rank = solve(m, tape, nodes, succ)
    return RunResult(rank[0] is not None, len(nodes))


def accepts(m, x, budget=None):
    return simulate(m, x, budget).accepted


def _stores(m):
    return m.counters + (1 if m.has_stack else 0)


def _audit_extend(m):
    def extend(extra, config, t, nxt):
        turns, falling, switches, last = extra
        heights = list(t.deltas)
        if m.has_stack:
            heights.append(0 if not t.stack else (-1 if t.stack[0] == "pop" else 1))
        turns, falling = list(turns), list(falling)
        for i, d in enumerate(heights):
            if d > 0:
                falling[i] = False
            elif d < 0 and not falling[i]:
                falling[i] = True
                turns[i] = min(turns[i] + 1, TURN_CAP)
        tag = m.tag(nxt[0])
        if tag in (EXISTENTIAL, UNIVERSAL) and tag != last:
            switches = min(switches + 1, ALTERNATION_CAP)
            last = tag
        return tuple(turns), tuple(falling), switches, last
    return extend


def audit_run(m, x, budget=None, accepting_only=False, strict=True):
    """Maximum turns per store and alternation blocks over all reachable paths.

    Stores are the counters followed by the stack (when present). Counts are
    capped at small constants, which is enough to check "at most one turn"
    and "at most two alternation blocks" claims.
    """
    k = _stores(m)
    first = m.tag(m.start)
    extra0 = ((0,) * k, (False,) * k, 0, first)
    if budget is None:
        budget = 4 * m.step_budget(len(x))
    tape, nodes, succ, exhausted = explore(m, x, budget, _audit_extend(m), extra0)
    if exhausted:
        if strict:
            raise BudgetExhausted(len(nodes), budget)
        return RunResult(None, len(nodes), True)
    rank = solve(m, tape, nodes, succ)
    live = range(len(nodes))
    if accepting_only:
        live = _coreachable(m, tape, nodes, succ)
    max_turns = [0] * k
    max_switch = 0
    for i in live:
        turns, _, switches, _ = nodes[i][1]
        max_turns = [max(a, b) for a, b in zip(max_turns, turns)]
        max_switch = max(max_switch, switches)
    return RunResult(rank[0] is not None, len(nodes), False, tuple(max_turns), max_switch + 1,
                     first != UNIVERSAL)


def _coreachable(m, tape, nodes, succ):
    preds = [[] for _ in nodes]
    for k, out in enumerate(succ):
        for j in out or ():
            preds[j].append(k)
    seen = {k for k, (c, _) in enumerate(nodes) if halting_value(m, tape, c)}
    stack = list(seen)
    while stack:
        j = stack.pop()
        for k in preds[j]:
            if k not in seen:
                seen.add(k)
                stack.append(k)
    return sorted(seen)


def format_config(config, tape):
    state, head, counters, stack = config
    sym = tape[head] if head < len(tape) else "END"
    text = f"{state} @{head}[{sym}] c={list(counters)}"
    if stack:
        text += " stack=" + "".join(stack_symbols(stack)[1:])
    return text


def trace(m, x, budget=None, strict=False):
    """Accepting computation tree as indented lines, or frontier statistics.

    Existential configurations show one winning successor, universal ones all
    of their successors.
    """
    tape, nodes, succ, exhausted = explore(m, x, budget)
    if exhausted:
        if strict:
            raise BudgetExhausted(len(nodes), budget or m.step_budget(len(x)))
        return RunResult(None, len(nodes), True,
                         path=[f"budget exhausted after {len(nodes)} configurations"])
    rank = solve(m, tape, nodes, succ)
    if rank[0] is None:
        halted = sum(1 for c, _ in nodes if halting_value(m, tape, c) is not None)
        return RunResult(False, len(nodes), path=[
            "no accepting path",
            f"configurations explored: {len(nodes)}",
            f"halting configurations: {halted}",
        ])
    lines = []

    def walk(k, depth):
        config = nodes[k][0]
        tag = m.tag(config[0])
        lines.append("  " * depth + f"{tag[0].upper()} " + format_config(config, tape))
        if rank[k] == 0:
            return
        winners = sorted({j for j in succ[k] if rank[j] is not None and rank[j] < rank[k]})
        if tag == UNIVERSAL and len(set(succ[k])) > 1:
            for j in sorted(set(succ[k])):
                walk(j, depth + 1)
        else:
            walk(min(winners, key=lambda j: rank[j]), depth)

    walk(0, 0)
    return RunResult(True, len(nodes), path=lines)

"""Counter contraction by prime-exponent encoding.

All counters c_1..c_k are kept in one counter C = 2^c_1 * 3^c_2 * 5^c_3 ...
An auxiliary store A (the stack when the machine has none, otherwise an
extra counter) is used to test divisibility and to multiply or divide C by a
prime. Each original move becomes a run of stationary micro-moves followed
by the original head move, so the result recognizes the same language but
is slower by a factor exponential in the counter values.
"""

from .model import MachineSpec, Transition, LEFT, BOTTOM, KEEP

PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)


class _Aux:
    """Guards and actions on C and the auxiliary store, for either layout."""

    def __init__(self, on_stack):
        self.on_stack = on_stack
        self.counters = 1 if on_stack else 2

    def guard(self, c="*", a="*"):
        if self.on_stack:
            top = {"*": "*", "Z": BOTTOM, "N": "A"}[a]
            return (c,), top
        return (c, a), "*"

    def action(self, dc=0, da=0):
        if self.on_stack:
            stack = KEEP if da == 0 else (("push", "A") if da > 0 else ("pop",))
            return (dc,), stack
        return (dc, da), KEEP


def contract_counters(m, budget=None):
    """Return an equivalent machine with fewer counters.

    No stack: k >= 2 counters become 1 counter plus a stack. With a stack:
    k >= 3 counters become 2 counters plus the original stack. Anything
    smaller is returned unchanged.
    """
    if m.counters < 2 or (m.has_stack and m.counters < 3):
        return m
    if m.counters > len(PRIMES):
        raise ValueError("too many counters to encode")
    aux = _Aux(on_stack=not m.has_stack)
    states = {}
    trans = []
    primes = PRIMES[:m.counters]

    def st(name, tag):
        states.setdefault(name, tag)
        return name

    def add(src, sym, dst, move=0, c="*", a="*", dc=0, da=0, top=None, stack=None):
        guard, gtop = aux.guard(c, a)
        deltas, astack = aux.action(dc, da)
        trans.append(Transition(src, sym, guard, top or gtop, dst, move, deltas,
                                astack if stack is None else stack))

    for s, tag in m.states.items():
        st(s, tag)
    start = st("_init", m.tag(m.start))
    add(start, LEFT, m.start, dc=1)

    for (q, sym), moves in sorted(m.index.items(), key=lambda kv: (kv[0][0], kv[0][1])):
        tag = m.tag(q)
        base = f"{q}|{sym or 'END'}"

        # zero tests, one counter at a time; the flags so far live in the state name
        pending = [((), 0)]
        seen = set()
        while pending:
            flags, i = pending.pop()
            if (flags, i) in seen:
                continue
            seen.add((flags, i))
            p = primes[i]
            # move C into A, counting modulo p
            for r in range(p):
                cur = st(f"{base}|t{i}|{''.join(flags)}|m{r}", tag)
                add(cur, sym, st(f"{base}|t{i}|{''.join(flags)}|m{(r + 1) % p}", tag),
                    c="N", dc=-1, da=1)
                flag = "N" if r == 0 else "Z"
                add(cur, sym, st(f"{base}|t{i}|{''.join(flags)}|b{flag}", tag), c="Z")
            for flag in "NZ":
                back = st(f"{base}|t{i}|{''.join(flags)}|b{flag}", tag)
                add(back, sym, back, a="N", dc=1, da=-1)
                nflags = flags + (flag,)
                if i + 1 < m.counters:
                    nxt = st(f"{base}|t{i + 1}|{''.join(nflags)}|m0", tag)
                    pending.append((nflags, i + 1))
                else:
                    nxt = st(f"{base}|x|{''.join(nflags)}", tag)
                add(back, sym, nxt, a="Z")
        add(q, sym, st(f"{base}|t0||m0", tag))
        # the choice step: every original move whose guard fits the flags
        for k, t in enumerate(moves):
            first_apply = _apply_chain(st, add, base, k, t, primes, tag, sym)
            for fl in _flag_vectors(m.counters):
                if any(g != "*" and g != f for g, f in zip(t.guard, fl)):
                    continue
                choose = st(f"{base}|x|{''.join(fl)}", tag)
                add(choose, sym, first_apply, top=t.top if t.top != "*" else None)
    return MachineSpec(m.name + "-contracted", states, start, tuple(trans), m.alphabet,
                       "one-way" if m.mode == "real-time" else m.mode, aux.counters,
                       m.stack_alphabet if m.has_stack else ("A",),
                       budget or (64, 4), f"counters of {m.name} encoded as prime powers")


def _flag_vectors(k):
    out = [()]
    for _ in range(k):
        out = [f + (c,) for f in out for c in "NZ"]
    return out


def _apply_chain(st, add, base, k, t, primes, tag, sym):
    """States that apply t's counter deltas to C, then make t's real move."""
    name = f"{base}|d{k}"
    final = st(f"{name}|final", tag)
    add(final, sym, t.target, move=t.move,
        top=t.top if t.stack and t.stack[0] == "pop" else None,
        stack=t.stack if t.stack else None)
    entry = final
    # build the chain back to front so each step knows its successor
    for i in reversed(range(len(t.deltas))):
        d = t.deltas[i]
        if d == 0:
            continue
        p = primes[i]
        unload = st(f"{name}|c{i}|u", tag)
        load = [st(f"{name}|c{i}|l{j}", tag) for j in range(p)]
        add(unload, sym, unload, c="N", dc=-1, da=1)
        add(unload, sym, load[0], c="Z")
        add(load[0], sym, entry, a="Z")
        if d > 0:
            # each unit of A becomes p units of C
            add(load[0], sym, load[1 % p] if p > 1 else load[0], a="N", dc=1, da=-1)
            for j in range(1, p):
                add(load[j], sym, load[(j + 1) % p], dc=1)
        else:
            # every p units of A become one unit of C
            for j in range(p):
                if j + 1 < p:
                    add(load[j], sym, load[j + 1], a="N", da=-1)
                else:
                    add(load[j], sym, load[0], a="N", dc=1, da=-1)
        entry = unload
    return entry

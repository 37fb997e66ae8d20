"""Machine description for alternating multi-counter pushdown automata."""

from dataclasses import dataclass
from functools import cached_property

from ..errors import InvalidMachine, ParseError

LEFT, RIGHT, END = "<", ">", ""
BOTTOM = "Z0"
EXISTENTIAL, UNIVERSAL, ACCEPTING, REJECTING = "existential", "universal", "accepting", "rejecting"
TAGS = (EXISTENTIAL, UNIVERSAL, ACCEPTING, REJECTING)
MODES = ("real-time", "one-way", "two-way")
KEEP = ()


@dataclass(frozen=True)
class Transition:
    state: str
    symbol: str
    guard: tuple
    top: str
    target: str
    move: int
    deltas: tuple
    stack: tuple = KEEP  # (), ("pop",) or ("push", symbol)

    def enabled(self, counters, stack_top):
        for g, c in zip(self.guard, counters):
            if (g == "Z" and c) or (g == "N" and not c):
                return False
        return self.top == "*" or self.top == stack_top


@dataclass(frozen=True)
class MachineSpec:
    """States are tagged existential, universal, accepting or rejecting.

    Accepting and rejecting states halt. A non-halting configuration without
    an enabled transition rejects whatever its polarity. In one-way and
    real-time mode the machine accepts only once the head has moved past the
    right endmarker; after that it may keep making stationary moves on the
    ``END`` pseudo-symbol (one-way mode only).
    """

    name: str
    states: dict
    start: str
    transitions: tuple
    alphabet: tuple = ("1", "#")
    mode: str = "one-way"
    counters: int = 1
    stack_alphabet: tuple = None
    budget: tuple = (8, 2)
    notes: str = ""

    def __post_init__(self):
        object.__setattr__(self, "transitions", tuple(self.transitions))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        if self.stack_alphabet is not None:
            object.__setattr__(self, "stack_alphabet", tuple(self.stack_alphabet))
        self.validate()

    @property
    def has_stack(self):
        return self.stack_alphabet is not None

    def tag(self, state):
        return self.states[state]

    def validate(self):
        if self.mode not in MODES:
            raise InvalidMachine(f"unknown head mode {self.mode!r}")
        if self.start not in self.states:
            raise InvalidMachine(f"start state {self.start!r} undeclared")
        for s, t in self.states.items():
            if t not in TAGS:
                raise InvalidMachine(f"state {s!r} has unknown tag {t!r}")
        symbols = set(self.alphabet) | {LEFT, RIGHT, END}
        tops = {"*", BOTTOM} | set(self.stack_alphabet or ())
        for t in self.transitions:
            where = f"transition {t}"
            if t.state not in self.states or t.target not in self.states:
                raise InvalidMachine(f"{where}: undeclared state")
            if self.states[t.state] in (ACCEPTING, REJECTING):
                raise InvalidMachine(f"{where}: halting states have no moves")
            if t.symbol not in symbols:
                raise InvalidMachine(f"{where}: symbol outside the alphabet")
            if len(t.guard) != self.counters or len(t.deltas) != self.counters:
                raise InvalidMachine(f"{where}: expected {self.counters} counter guards/deltas")
            for g, d in zip(t.guard, t.deltas):
                if g not in "ZN*" or d not in (-1, 0, 1):
                    raise InvalidMachine(f"{where}: bad guard or delta")
                if d == -1 and g != "N":
                    raise InvalidMachine(f"{where}: decrement needs a nonzero guard")
            if t.move not in (-1, 0, 1):
                raise InvalidMachine(f"{where}: bad head move")
            if self.mode == "real-time" and (t.move != 1 or t.symbol == END):
                raise InvalidMachine(f"{where}: real-time machines move right on every step")
            if self.mode == "one-way" and t.move == -1:
                raise InvalidMachine(f"{where}: one-way head cannot move left")
            if t.symbol == END and (self.mode != "one-way" or t.move != 0):
                raise InvalidMachine(f"{where}: only stationary one-way moves past the input")
            if self.mode == "two-way" and ((t.symbol == LEFT and t.move == -1) or
                                           (t.symbol == RIGHT and t.move == 1)):
                raise InvalidMachine(f"{where}: two-way head must stay between the endmarkers")
            if t.top not in tops or (t.top != "*" and not self.has_stack):
                raise InvalidMachine(f"{where}: bad stack top")
            if t.stack:
                if not self.has_stack:
                    raise InvalidMachine(f"{where}: stack action without a stack")
                if t.stack[0] == "pop" and t.top in ("*", BOTTOM):
                    raise InvalidMachine(f"{where}: pop must name a non-bottom top symbol")
                if t.stack[0] == "push" and t.stack[1] not in self.stack_alphabet:
                    raise InvalidMachine(f"{where}: push of unknown symbol")

    @cached_property
    def index(self):
        table = {}
        for t in self.transitions:
            table.setdefault((t.state, t.symbol), []).append(t)
        return table

    def step_budget(self, n):
        coef, degree = self.budget
        return coef * (n + 2) ** degree


class MachineBuilder:
    """Small helper for writing transition tables by hand."""

    def __init__(self, name, counters, mode="one-way", alphabet=("1", "#"), stack_alphabet=None):
        self.name = name
        self.counters = counters
        self.mode = mode
        self.alphabet = tuple(alphabet)
        self.stack_alphabet = stack_alphabet
        self.states = {}
        self.start = None
        self.transitions = []

    def state(self, name, tag=EXISTENTIAL, start=False):
        self.states[name] = tag
        if start:
            self.start = name
        return name

    def add(self, state, symbols, target, move=1, guard=None, deltas=None, top="*", stack=KEEP):
        guard = tuple(guard or "*" * self.counters)
        deltas = tuple(deltas or (0,) * self.counters)
        if isinstance(symbols, str) and len(symbols) <= 1:
            symbols = [symbols]
        for sym in symbols:
            self.transitions.append(Transition(state, sym, guard, top, target, move, deltas, stack))

    def build(self, budget=(8, 2), notes=""):
        return MachineSpec(self.name, dict(self.states), self.start, tuple(self.transitions),
                           self.alphabet, self.mode, self.counters, self.stack_alphabet,
                           budget, notes)


# --- text format --------------------------------------------------------------

_SYM_OUT = {END: "END"}
_SYM_IN = {"END": END}


def _deltas_text(deltas):
    return "".join({-1: "-", 0: "0", 1: "+"}[d] for d in deltas) or "."


def _deltas_parse(tok, k, lineno):
    if tok == ".":
        tok = ""
    if len(tok) != k or set(tok) - set("+-0"):
        raise ParseError(lineno, f"{k} deltas over '+-0'")
    return tuple({"-": -1, "0": 0, "+": 1}[c] for c in tok)


def machine_to_text(m):
    """Line-oriented machine description; see docs/formats.md for the grammar."""
    lines = [f"machine {m.name}", f"mode {m.mode}", f"counters {m.counters}",
             f"alphabet {' '.join(m.alphabet)}", f"budget {m.budget[0]} {m.budget[1]}"]
    if m.has_stack:
        lines.append(f"stack {' '.join(m.stack_alphabet)}")
    lines.append(f"start {m.start}")
    if m.notes:
        lines.append(f"notes {m.notes}")
    for s, tag in m.states.items():
        lines.append(f"state {s} {tag}")
    for t in m.transitions:
        op = "keep" if not t.stack else ("pop" if t.stack[0] == "pop" else f"push:{t.stack[1]}")
        guard = "".join(t.guard) or "."
        lines.append(f"trans {t.state} {_SYM_OUT.get(t.symbol, t.symbol)} {guard} {t.top} -> "
                     f"{t.target} {t.move:+d} {_deltas_text(t.deltas)} {op}")
    return "\n".join(lines) + "\n"


def machine_from_text(text):
    fields = {"alphabet": (), "stack": None, "budget": (8, 2)}
    states, trans = {}, []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        head, *rest = line.split()
        if head == "notes":
            fields["notes"] = line[len("notes"):].strip()
        elif head in ("machine", "mode", "start"):
            fields[head] = rest[0]
        elif head == "counters":
            fields["counters"] = int(rest[0])
        elif head == "alphabet":
            fields["alphabet"] = tuple(rest)
        elif head == "budget":
            fields["budget"] = (int(rest[0]), int(rest[1]))
        elif head == "stack":
            fields["stack"] = tuple(rest)
        elif head == "state":
            states[rest[0]] = rest[1]
        elif head == "trans":
            if len(rest) != 9 or rest[4] != "->":
                raise ParseError(lineno, "trans <state> <sym> <guards> <top> -> <next> <move> <deltas> <op>")
            state, sym, guard, top, _, target, move, deltas, op = rest
            k = fields.get("counters", 0)
            guard = () if guard == "." else tuple(guard)
            if op == "keep":
                stack = KEEP
            elif op == "pop":
                stack = ("pop",)
            elif op.startswith("push:"):
                stack = ("push", op[5:])
            else:
                raise ParseError(lineno, "stack op keep|pop|push:<symbol>")
            trans.append(Transition(state, _SYM_IN.get(sym, sym), guard, top, target, int(move),
                                    _deltas_parse(deltas, k, lineno), stack))
        else:
            raise ParseError(lineno, f"a known directive, got {head!r}")
    for key in ("machine", "mode", "start", "counters"):
        if key not in fields:
            raise ParseError(0, f"'{key}' directive")
    return MachineSpec(fields["machine"], states, fields["start"], tuple(trans), fields["alphabet"],
                       fields["mode"], fields["counters"], fields["stack"], fields["budget"],
                       fields.get("notes", ""))

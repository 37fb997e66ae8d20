"""Concrete machines for the knapsack-style problems.

Every machine reads the instance string between the endmarkers exactly as
:func:`unarybench.unary_codec.serialize_instance` writes it. Languages are
only claimed on well-formed instance strings; malformed inputs may go either
way.
"""

from ..errors import UnknownKind
from .model import MachineBuilder, UNIVERSAL, ACCEPTING, REJECTING, END

PROBLEM_MACHINES = (
    "UK-1t1NCA", "U2PART-1NCA", "U2PART-1t1N2CA", "AmbUK-1t1NCA",
    "UASubSum-1t1N2CA", "UKEXC-2N3CA", "SUK-1t1Σ2PDCA", "UBCP",
)

# problem kind parsed by each machine
MACHINE_KIND = {
    "UK-1t1NCA": "UK", "U2PART-1NCA": "U2PART", "U2PART-1t1N2CA": "U2PART",
    "AmbUK-1t1NCA": "AmbUK", "UASubSum-1t1N2CA": "UASubSum", "UKEXC-2N3CA": "UKEXC",
    "SUK-1t1Σ2PDCA": "SUK", "UBCP": "UBCP",
}


def _uk():
    b = MachineBuilder("UK-1t1NCA", 1, "real-time")
    b.state("start", start=True)
    for s in ("load", "sep", "take", "skip"):
        b.state(s)
    b.state("acc", ACCEPTING)
    b.add("start", "<", "load")
    b.add("load", "1", "load", deltas=(1,))
    b.add("load", "#", "sep")
    # the first symbol of each item decides whether it is taken
    b.add("sep", "1", "take", guard="N", deltas=(-1,))
    b.add("sep", "1", "skip")
    b.add("take", "1", "take", guard="N", deltas=(-1,))
    b.add("skip", "1", "skip")
    for s in ("take", "skip"):
        b.add(s, "#", "sep")
        b.add(s, ">", "acc", guard="Z")
    return b.build((16, 2), "loads b, then subtracts the chosen items")


def _u2part_1nca():
    """The counter holds |left - right|; the state remembers which side leads."""
    b = MachineBuilder("U2PART-1NCA", 1, "real-time")
    b.state("start", start=True)
    b.state("acc", ACCEPTING)
    for sign in "+-":
        b.state(f"choose{sign}")
        for side in "LR":
            b.state(f"in{sign}{side}")
    b.add("start", "<", "choose+")

    def add_one(src, sign, side):
        grow = "+" if side == "L" else "-"
        if sign == grow:
            b.add(src, "1", f"in{sign}{side}", deltas=(1,))
        else:
            b.add(src, "1", f"in{sign}{side}", guard="N", deltas=(-1,))
            b.add(src, "1", f"in{grow}{side}", guard="Z", deltas=(1,))

    for sign in "+-":
        for side in "LR":
            add_one(f"choose{sign}", sign, side)
            add_one(f"in{sign}{side}", sign, side)
            b.add(f"in{sign}{side}", "#", f"choose{sign}")
            b.add(f"in{sign}{side}", ">", "acc", guard="Z")
    return b.build((16, 2), "balance counter with the leading side in the state")


def _u2part_2ca():
    b = MachineBuilder("U2PART-1t1N2CA", 2, "one-way")
    b.state("start", start=True)
    for s in ("choose", "L", "R", "cmp"):
        b.state(s)
    b.state("acc", ACCEPTING)
    b.add("start", "<", "choose")
    for side, d in (("L", (1, 0)), ("R", (0, 1))):
        b.add("choose", "1", side, deltas=d)
        b.add(side, "1", side, deltas=d)
        b.add(side, "#", "choose")
        b.add(side, ">", "cmp")
    b.add("cmp", END, "cmp", 0, guard="NN", deltas=(-1, -1))
    b.add("cmp", END, "acc", 0, guard="ZZ")
    return b.build((16, 2), "one counter per side, compared after the input")


def _ambuk():
    b = MachineBuilder("AmbUK-1t1NCA", 1, "real-time")
    b.state("start", start=True)
    for s in ("tstart", "pre", "load", "lsep", "post", "isep", "take", "skip"):
        b.state(s)
    b.state("acc", ACCEPTING)
    b.add("start", "<", "tstart")
    # guess the target index j: skip earlier targets, load b_j, skip the rest
    b.add("tstart", "1", "load", deltas=(1,))
    b.add("tstart", "1", "pre")
    b.add("pre", "1", "pre")
    b.add("pre", "#", "tstart")
    b.add("load", "1", "load", deltas=(1,))
    b.add("load", "#", "lsep")
    b.add("lsep", "1", "post")
    b.add("lsep", "#", "isep")
    b.add("post", "1", "post")
    b.add("post", "#", "lsep")
    b.add("isep", "1", "take", guard="N", deltas=(-1,))
    b.add("isep", "1", "skip")
    b.add("take", "1", "take", guard="N", deltas=(-1,))
    b.add("skip", "1", "skip")
    for s in ("take", "skip"):
        b.add(s, "#", "isep")
        b.add(s, ">", "acc", guard="Z")
    return b.build((16, 2), "guesses the target, then runs the UK machine")


def _uasubsum():
    """c1 holds b1 and may run dry; c2 holds b2 and must never underflow."""
    b = MachineBuilder("UASubSum-1t1N2CA", 2, "real-time")
    b.state("start", start=True)
    for s in ("l1", "l2", "l2h", "isep", "take", "skip"):
        b.state(s)
    b.state("acc", ACCEPTING)
    b.add("start", "<", "l1")
    b.add("l1", "1", "l1", deltas=(1, 0))
    b.add("l1", "#", "l2")
    b.add("l2", "1", "l2", deltas=(0, 1))
    b.add("l2", "#", "l2h")
    b.add("l2h", "#", "isep")
    for src in ("isep", "take"):
        b.add(src, "1", "take", guard="NN", deltas=(-1, -1))
        b.add(src, "1", "take", guard="ZN", deltas=(0, -1))
    b.add("isep", "1", "skip")
    b.add("skip", "1", "skip")
    for s in ("take", "skip"):
        b.add(s, "#", "isep")
        b.add(s, ">", "acc", guard="Z*")
    return b.build((16, 2), "sum must drain c1 without draining past c2")


def _ukexc():
    """Two-way machine; c1 = last chosen index, c2 = scratch index, c3 = remaining b.

    Taking item j: count the '#'s to its left into c2, compare every EXC pair
    (p, q) with (c1, c2) without destroying either counter, then move c2 into
    c1 while walking back to item j and subtract the item from c3.
    """
    b = MachineBuilder("UKEXC-2N3CA", 3, "two-way")
    b.state("start", start=True)
    states = ["loadb", "isep", "skip", "take", "cl", "r0", "r1", "r2", "cp", "cq", "rq",
              "fq", "qskip", "sep1", "drain", "back", "seek", "seekchk"]
    for outcome in ("m", "x"):  # p block matched / mismatched
        states += [f"rp_{outcome}", f"fp_{outcome}"]
    for s in states:
        b.state(s)
    b.state("acc", ACCEPTING)
    L, S, R = -1, 0, 1
    b.add("start", "<", "loadb")
    b.add("loadb", "1", "loadb", deltas=(0, 0, 1))
    b.add("loadb", "#", "isep")
    # item boundary: skip the item or start the take procedure
    b.add("isep", "1", "skip", S)
    b.add("isep", "1", "cl", S)
    b.add("isep", "#", "acc", S, guard="N*Z")
    b.add("skip", "1", "skip")
    b.add("skip", "#", "isep")
    b.add("skip", ">", "acc", S, guard="N*Z")
    # count '#'s left of the item into c2
    b.add("cl", "1", "cl", L)
    b.add("cl", "#", "cl", L, deltas=(0, 1, 0))
    b.add("cl", "<", "r0", R)
    # run right to the EXC section (after '###') or the right endmarker
    b.add("r0", "1", "r0")
    b.add("r0", "#", "r1")
    b.add("r0", ">", "drain", S)
    b.add("r1", "1", "r0")
    b.add("r1", "#", "r2")
    b.add("r2", "#", "cp")
    # compare the p block with c1
    b.add("cp", "1", "cp", guard="N**", deltas=(-1, 0, 0))
    b.add("cp", "1", "rp_x", L, guard="Z**")
    b.add("cp", "#", "rp_m", L, guard="Z**")
    b.add("cp", "#", "rp_x", L, guard="N**")
    for o in ("m", "x"):
        b.add(f"rp_{o}", "1", f"rp_{o}", L, deltas=(1, 0, 0))
        b.add(f"rp_{o}", "#", f"fp_{o}")
        b.add(f"fp_{o}", "1", f"fp_{o}")
    b.add("fp_m", "#", "cq")
    b.add("fp_x", "#", "qskip")
    # p matched: compare the q block with c2; a full match kills the branch
    b.add("cq", "1", "cq", guard="*N*", deltas=(0, -1, 0))
    b.add("cq", "1", "rq", L, guard="*Z*")
    b.add("cq", "#", "rq", L, guard="*N*")
    b.add("cq", ">", "rq", L, guard="*N*")
    b.add("rq", "1", "rq", L, deltas=(0, 1, 0))
    b.add("rq", "#", "fq")
    b.add("fq", "1", "fq")
    b.add("qskip", "1", "qskip")
    for s in ("fq", "qskip"):
        b.add(s, "#", "sep1")
        b.add(s, ">", "drain", S)
    b.add("sep1", "#", "cp")
    # forget the previous index, then walk back to item j moving c2 into c1
    b.add("drain", ">", "drain", S, guard="N**", deltas=(-1, 0, 0))
    b.add("drain", ">", "back", L, guard="Z**")
    b.add("back", ["1", "#"], "back", L)
    b.add("back", "<", "seek", R)
    b.add("seek", "1", "seek")
    b.add("seek", "#", "seekchk", R, guard="*N*", deltas=(1, -1, 0))
    b.add("seekchk", "1", "seek", S, guard="*N*")
    b.add("seekchk", "1", "take", S, guard="*Z*")
    b.add("take", "1", "take", guard="**N", deltas=(0, 0, -1))
    b.add("take", "#", "isep")
    b.add("take", ">", "acc", S, guard="N*Z")
    return b.build((16, 3), "two index counters plus the remaining target")


def _suk():
    """Existential phase guesses one bit per item onto the stack; the
    universal phase sends one branch per row, each popping the bits in row
    order (so item i pairs with the (n+1-i)-th guessed bit)."""
    b = MachineBuilder("SUK-1t1Σ2PDCA", 1, "two-way", stack_alphabet=("T", "F"))
    b.state("start", start=True)
    for s in ("eb", "eitem", "ein", "esep", "rw"):
        b.state(s)
    for s in ("ub", "skp", "skp1", "chk", "citem", "ctake", "cskip", "cend"):
        b.state(s, UNIVERSAL)
    b.state("acc", ACCEPTING)
    L, S, R = -1, 0, 1
    b.add("start", "<", "eb")
    b.add("eb", "1", "eb")
    b.add("eb", "#", "eitem")
    for bit in "TF":
        b.add("eitem", "1", "ein", stack=("push", bit))
    b.add("ein", "1", "ein")
    b.add("ein", "#", "esep")
    b.add("ein", ">", "rw", L)
    for bit in "TF":
        b.add("esep", "1", "ein", stack=("push", bit))
    b.add("esep", "#", "rw", L)
    b.add("rw", ["1", "#"], "rw", L)
    b.add("rw", "<", "ub", R)
    # universal choice at every row: check this row or move on
    b.add("ub", "1", "chk", S)
    b.add("ub", "1", "skp", S)
    b.add("skp", "1", "skp")
    b.add("skp", "#", "skp1")
    b.add("skp", ">", "acc", S)
    b.add("skp1", "1", "skp")
    b.add("skp1", "#", "ub")
    b.add("chk", "1", "chk", deltas=(1,))
    b.add("chk", "#", "citem")
    b.add("citem", "1", "ctake", S, top="T", stack=("pop",))
    b.add("citem", "1", "cskip", S, top="F", stack=("pop",))
    b.add("citem", "#", "cend", S)
    b.add("ctake", "1", "ctake", guard="N", deltas=(-1,))
    b.add("cskip", "1", "cskip")
    for s in ("ctake", "cskip"):
        b.add(s, "#", "citem")
        b.add(s, ">", "cend", S)
    b.add("cend", ["#", ">"], "acc", S, guard="Z", top="Z0")
    return b.build((16, 3), "existential guess, universal per-row check")


def _ubcp():
    """c1 = sum of chosen k_i, c2 = sum of chosen l_i, c3 = number chosen (<= k)."""
    b = MachineBuilder("UBCP", 3, "one-way")
    b.state("start", start=True)
    for f in "01":
        for s in ("pstart", "sk", "sl", "psep", "psep2"):
            b.state(f"{s}{f}")
    for s in ("tk", "tl", "kread", "cmp"):
        b.state(s)
    b.state("acc", ACCEPTING)
    b.add("start", "<", "pstart0")
    for f in "01":
        b.add(f"pstart{f}", "1", "tk", deltas=(1, 0, 1))
        b.add(f"pstart{f}", "1", f"sk{f}")
        b.add(f"sk{f}", "1", f"sk{f}")
        b.add(f"sk{f}", "#", f"sl{f}")
        b.add(f"sl{f}", "1", f"sl{f}")
        b.add(f"sl{f}", "#", f"psep{f}")
        b.add(f"psep{f}", "#", f"psep2{f}")
        b.add(f"psep2{f}", "1", f"pstart{f}", 0)
    b.add("tk", "1", "tk", deltas=(1, 0, 0))
    b.add("tk", "#", "tl")
    b.add("tl", "1", "tl", deltas=(0, 1, 0))
    b.add("tl", "#", "psep1")
    b.add("psep21", "#", "kread")
    # at most k pairs: the bound block must absorb c3
    b.add("kread", "1", "kread", guard="**N", deltas=(0, 0, -1))
    b.add("kread", "1", "kread", guard="**Z")
    b.add("kread", ">", "cmp", guard="**Z")
    b.add("cmp", END, "cmp", 0, guard="NN*", deltas=(-1, -1, 0))
    b.add("cmp", END, "acc", 0, guard="ZZ*")
    return b.build((16, 3), "three counters; see the notes on the bound k")


def _equal_blocks3():
    b = MachineBuilder("EqualBlocks3-2CA", 2, "real-time")
    b.state("start", start=True)
    for s in ("a", "b", "c"):
        b.state(s)
    b.state("acc", ACCEPTING)
    b.add("start", "<", "a")
    b.add("a", "1", "a", deltas=(1, 1))
    b.add("a", "#", "b")
    b.add("b", "1", "b", guard="N*", deltas=(-1, 0))
    b.add("b", "#", "c", guard="Z*")
    b.add("c", "1", "c", guard="*N", deltas=(0, -1))
    b.add("c", ">", "acc", guard="*Z")
    return b.build((16, 2), "{1^n#1^n#1^n}")


def _equal_blocks2():
    b = MachineBuilder("EqualBlocks2-1CA", 1, "real-time")
    b.state("start", start=True)
    b.state("a")
    b.state("b")
    b.state("acc", ACCEPTING)
    b.state("rej", REJECTING)
    b.add("start", "<", "a")
    b.add("a", "1", "a", deltas=(1,))
    b.add("a", "#", "b")
    b.add("b", "1", "b", guard="N", deltas=(-1,))
    b.add("b", ">", "acc", guard="Z")
    # an explicit rejecting halt after the endmarker (first block too long)
    b.add("b", ">", "rej", guard="N")
    return b.build((16, 2), "{1^n#1^n}")


def _null_machine():
    b = MachineBuilder("Null", 0, "real-time")
    b.state("start", start=True)
    b.state("rej", REJECTING)
    return b.build((16, 2), "empty transition relation")


_BUILDERS = {
    "UK-1t1NCA": _uk, "U2PART-1NCA": _u2part_1nca, "U2PART-1t1N2CA": _u2part_2ca,
    "AmbUK-1t1NCA": _ambuk, "UASubSum-1t1N2CA": _uasubsum, "UKEXC-2N3CA": _ukexc,
    "SUK-1t1Σ2PDCA": _suk, "UBCP": _ubcp,
}

_SYNTHETIC = {
    "EqualBlocks3-2CA": _equal_blocks3, "EqualBlocks2-1CA": _equal_blocks2, "Null": _null_machine,
}

# ASCII spelling accepted on the command line
ALIASES = {"SUK-1t1S2PDCA": "SUK-1t1Σ2PDCA"}


def build_problem_machine(kind):
    kind = ALIASES.get(kind, kind)
    if kind not in _BUILDERS:
        raise UnknownKind(f"no machine for {kind!r}; known: {', '.join(PROBLEM_MACHINES)}")
    return _BUILDERS[kind]()


def synthetic_machine(name):
    if name not in _SYNTHETIC:
        raise UnknownKind(f"no synthetic machine {name!r}")
    return _SYNTHETIC[name]()

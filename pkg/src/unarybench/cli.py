"""Command-line front end: generate, decide, reduce, verify, trace.

Exit codes: 0 success, 2 invalid configuration (unknown kind, reduction or
machine, bad flags), 3 malformed instance text, 4 kind mismatch for a
reduction, 5 verification found a counterexample, 6 exploration budget
exhausted under ``--strict``.
"""

import argparse
from pathlib import Path
import sys

from . import families
from .automata import (
    build_problem_machine, synthetic_machine, machine_from_text, simulate, trace,
    PROBLEM_MACHINES, MACHINE_KIND,
)
from .errors import (
    UnaryBenchError, ParseError, InvalidInstance, InstanceTooLarge, KindMismatch,
    UnknownKind, BudgetExhausted,
)
from .instances import ALL_KINDS, SubsetInstance, WeightedDag
from .problems import decide
from .readable import to_readable, from_readable
from .reductions import REDUCTIONS, MUTANT_TARGET, TruthTableReduction, get_reduction
from .unary_codec import serialize_instance, parse_instance
from . import verification

EXIT_CONFIG, EXIT_PARSE, EXIT_KIND, EXIT_VERIFY, EXIT_BUDGET = 2, 3, 4, 5, 6


class CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _kind(name):
    if name is not None and name not in ALL_KINDS:
        raise CliError(EXIT_CONFIG, f"unknown problem kind {name!r}; known: {', '.join(ALL_KINDS)}")
    return name


# --- instance input and output ---------------------------------------------------

def format_instance(x, fmt, with_kind=False):
    if fmt == "readable":
        return to_readable(x)
    text = serialize_instance(x)
    return f"{x.kind}:{text}" if with_kind else text


def write_instances(xs, fmt, out, with_kind=False):
    sep = "\n\n" if fmt == "readable" else "\n"
    body = sep.join(format_instance(x, fmt, with_kind) for x in xs)
    _write(body + "\n" if body else "", out)


def _write(text, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as e:
        raise CliError(EXIT_CONFIG, f"cannot read {path}: {e}") from e


def wire_entries(texts, kind):
    """(text, kind) for every non-comment line; ``KIND:`` prefixes override --kind."""
    for raw in texts:
        for line in raw.splitlines():
            line = line.strip()
            if not line or line.startswith("%"):
                continue
            k, sep, body = line.rpartition(":")
            if sep:
                yield body.strip(), _kind(k.strip())
            else:
                yield line, kind


def read_instances(args, kind):
    """List of instances or ParseError/InvalidInstance placeholders, in input order."""
    texts = list(args.instances)
    if args.infile:
        texts.append(_read_text(args.infile))
    if not texts:
        raise CliError(EXIT_CONFIG, "no input: give instances or --in FILE")
    if args.format == "readable":
        out = []
        for t in texts:
            try:
                out.extend(from_readable(t, kind))
            except UnknownKind as e:
                raise CliError(EXIT_CONFIG, str(e)) from e
            except (ParseError, InvalidInstance) as e:
                out.append(e)
        return out
    out = []
    for text, k in wire_entries(texts, kind):
        if k is None:
            raise CliError(EXIT_CONFIG, "--kind is required for wire input without KIND: prefixes")
        try:
            out.append(parse_instance(text, k))
        except (ParseError, InvalidInstance) as e:
            out.append(e)
    return out


# --- generate ----------------------------------------------------------------------

def cmd_generate(args):
    kind = _kind(args.kind)
    if kind is None:
        raise CliError(EXIT_CONFIG, "generate needs --kind")
    for flag in ("max_n", "max_value", "count"):
        v = getattr(args, flag)
        if v is not None and v < 1:
            raise CliError(EXIT_CONFIG, f"--{flag.replace('_', '-')} must be positive")
    if args.seed is not None or args.count is not None:
        xs = families.sample(kind, args.count or 10, args.seed or 0, args.max_n, args.max_value)
    else:
        xs = list(families.family(kind, args.max_n, args.max_value))
    write_instances(xs, args.format, args.out)
    return 0


# --- decide ------------------------------------------------------------------------

def format_witness(x, w):
    if w is None:
        return ""
    if isinstance(x, SubsetInstance):
        if x.kind in ("AmbUK", "ShiftAmbUK"):
            j, S = w
            return f"j={j} S={{{','.join(map(str, S))}}}"
        return f"S={{{','.join(map(str, w))}}}"
    if isinstance(x, WeightedDag):
        return f"v={w}"
    return f"z=({','.join(map(str, w))})"


def default_machine(kind):
    for name in PROBLEM_MACHINES:
        if MACHINE_KIND[name] == kind:
            return name
    return None


def _load_machine(args, kind=None):
    if getattr(args, "machine_file", None):
        try:
            return machine_from_text(_read_text(args.machine_file))
        except ParseError as e:
            raise CliError(EXIT_PARSE, f"{args.machine_file}: {e}") from e
    name = args.machine or (default_machine(kind) if kind else None)
    if name is None:
        raise CliError(EXIT_CONFIG, f"no machine for kind {kind!r}" if kind else "give --machine or --kind")
    try:
        return build_problem_machine(name)
    except UnknownKind:
        try:
            return synthetic_machine(name)
        except UnknownKind as e:
            raise CliError(EXIT_CONFIG, f"unknown machine {name!r}; known: "
                           f"{', '.join(PROBLEM_MACHINES)}") from e


def _decide_one(x, args, machines):
    if args.engine == "oracle":
        try:
            if args.witness:
                ok, w = decide(x, witness=True)
                return ("yes" if ok else "no"), format_witness(x, w)
            return ("yes" if decide(x) else "no"), ""
        except InstanceTooLarge:
            return "indeterminate", ""
    if x.kind not in machines:
        machines[x.kind] = _load_machine(args, x.kind)
    r = simulate(machines[x.kind], serialize_instance(x), budget=args.budget, strict=args.strict)
    return r.verdict, ""


def cmd_decide(args):
    kind = _kind(args.kind)
    if args.budget is not None and args.budget < 1:
        raise CliError(EXIT_CONFIG, "--budget must be positive")
    xs = read_instances(args, kind)
    lines, code, machines = [], 0, {}
    for i, x in enumerate(xs, start=1):
        if isinstance(x, Exception):
            print(f"{i}: {x}", file=sys.stderr)
            lines.append(f"{i} error")
            code = EXIT_PARSE
            continue
        verdict, witness = _decide_one(x, args, machines)
        lines.append(f"{i} {verdict}" + (f" {witness}" if witness else ""))
    _write("\n".join(lines) + "\n", args.out)
    return code


# --- reduce ------------------------------------------------------------------------

def reduction_name(name):
    return name.replace("→", "->").replace("_", "-").lower() if name else name


def _find_reduction(name):
    key = reduction_name(name)
    for r in REDUCTIONS:
        if r.lower() == key:
            return get_reduction(r)
    raise CliError(EXIT_CONFIG, f"unknown reduction {name!r}; known: {', '.join(REDUCTIONS)}")


def _sources(r):
    return r.source if isinstance(r.source, tuple) else (r.source,)


def cmd_reduce(args):
    if not args.reduction:
        raise CliError(EXIT_CONFIG, "reduce needs --reduction")
    r = _find_reduction(args.reduction)
    kind = _kind(args.kind) or _sources(r)[0]
    if kind not in _sources(r):
        raise CliError(EXIT_KIND, f"{r.name} reduces {'/'.join(_sources(r))}, not {kind}")
    xs = read_instances(args, kind)
    for i, x in enumerate(xs, start=1):
        if isinstance(x, Exception):
            raise CliError(EXIT_PARSE, f"instance {i}: {x}")
    try:
        images = [r.queries(x)[0] for x in xs]
    except KindMismatch as e:
        raise CliError(EXIT_KIND, str(e)) from e
    if not isinstance(r, TruthTableReduction):
        write_instances([ys[0] for ys in images], args.format, args.out)
        return 0
    if args.out in (None, "-"):
        blocks = []
        for i, ys in enumerate(images, start=1):
            head = f"% instance {i}: {r.evaluator_name} over {len(ys)} {r.target} queries"
            sep = "\n\n" if args.format == "readable" else "\n"
            blocks.append(head + "\n" + sep.join(format_instance(y, args.format) for y in ys))
        _write("\n\n".join(blocks) + "\n", None)
        return 0
    out = Path(args.out)
    ext = "txt" if args.format == "readable" else "wire"
    for i, ys in enumerate(images, start=1):
        d = out / f"instance-{i}"
        d.mkdir(parents=True, exist_ok=True)
        names = []
        for j, y in enumerate(ys, start=1):
            names.append(f"query-{j}.{ext}")
            (d / names[-1]).write_text(format_instance(y, args.format) + "\n")
        (d / "evaluator.txt").write_text(
            f"reduction: {r.name}\nevaluator: {r.evaluator_name}\nkind: {r.target}\n"
            f"queries: {' '.join(names)}\n")
    return 0


# --- verify ------------------------------------------------------------------------

def cmd_verify(args):
    if args.budget is not None and args.budget < 1:
        raise CliError(EXIT_CONFIG, "--budget must be positive")
    if args.mutate:
        if args.mutate not in MUTANT_TARGET:
            raise CliError(EXIT_CONFIG, f"unknown mutant {args.mutate!r}; known: {', '.join(MUTANT_TARGET)}")
        results = [("mutant", rep, True) for rep in verification.mutant_checks(args.mutate)]
    else:
        sections = args.section or verification.SECTIONS

        def progress(section, rep):
            if args.verbose:
                print(f"[{section}] {rep.summary_line()}", file=sys.stderr, flush=True)

        results = list(verification.run_matrix(args.budget, sections, progress))
    failed = [rep for _, rep, must in results if must and rep.disagree]
    lines = []
    for section, rep, must in results:
        lines.append(f"{section:<12} {rep.summary_line()}" + ("" if must else "  (report only)"))
    indeterminate = [rep for _, rep, _ in results if rep.indeterminate]
    if indeterminate:
        lines.append("")
        lines.append("indeterminate (budget exhausted):")
        lines += [f"  {rep.name}: {rep.indeterminate}" for rep in indeterminate]
    for rep in failed:
        lines.append("")
        lines.append(f"counterexamples for {rep.name}:")
        lines += [f"  {c}" for c in rep.counterexamples]
    lines.append("")
    lines.append(f"{len(results)} checks, {len(failed)} failed, {len(indeterminate)} with indeterminate runs")
    summary = "\n".join(lines) + "\n"
    sys.stdout.write(summary)
    if args.out and args.out != "-":
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "summary.txt").write_text(summary)
        rows = []
        for k, (_, rep, _) in enumerate(results):
            rows += list(rep.rows())[0 if k == 0 else 1:]
        (out / "report.tsv").write_text("\n".join(rows) + "\n")
    return EXIT_VERIFY if failed else 0


# --- trace -------------------------------------------------------------------------

def cmd_trace(args):
    kind = _kind(args.kind)
    m = _load_machine(args, kind)
    texts = list(args.instances)
    if args.infile:
        texts += [t for t, _ in wire_entries([_read_text(args.infile)], kind)]
    if len(texts) != 1:
        raise CliError(EXIT_CONFIG, "trace needs exactly one input string")
    try:
        r = trace(m, texts[0], budget=args.budget, strict=args.strict)
    except BudgetExhausted as e:
        print(str(e), file=sys.stderr)
        return EXIT_BUDGET
    _write("\n".join(r.path) + "\n", args.out)
    return 0


# --- argument parsing ----------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--kind", help="problem kind, e.g. UK, U2PART, TO-EWPP")
    common.add_argument("--format", choices=("wire", "readable"), default="wire")
    common.add_argument("--in", dest="infile", metavar="FILE", help="input file ('-' for stdin)")
    common.add_argument("--out", metavar="PATH", help="output file or directory")

    p = argparse.ArgumentParser(prog="unarybench", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", parents=[common], help="emit an instance family")
    g.add_argument("--max-n", type=int)
    g.add_argument("--max-value", type=int)
    g.add_argument("--seed", type=int, help="emit a seeded random sample instead of the whole family")
    g.add_argument("--count", type=int, help="sample size (default 10)")
    g.set_defaults(func=cmd_generate)

    d = sub.add_parser("decide", parents=[common], help="decide instances")
    d.add_argument("instances", nargs="*", help="instance strings")
    d.add_argument("--engine", choices=("oracle", "machine"), default="oracle")
    d.add_argument("--machine", help="machine name for --engine machine")
    d.add_argument("--machine-file", help="machine description file for --engine machine")
    d.add_argument("--budget", type=int, help="configuration budget per machine run")
    d.add_argument("--strict", action="store_true", help="exit 6 when a budget runs out")
    d.add_argument("--witness", action="store_true", help="print a witness for yes instances")
    d.set_defaults(func=cmd_decide)

    r = sub.add_parser("reduce", parents=[common], help="apply a named reduction")
    r.add_argument("instances", nargs="*", help="instance strings")
    r.add_argument("--reduction", help=f"one of {', '.join(REDUCTIONS)}")
    r.set_defaults(func=cmd_reduce)

    v = sub.add_parser("verify", help="run the verification matrix")
    v.add_argument("--budget", type=int, help="configuration budget per machine run")
    v.add_argument("--mutate", metavar="NAME", help=f"run one broken variant: {', '.join(MUTANT_TARGET)}")
    v.add_argument("--section", action="append", choices=verification.SECTIONS,
                   help="restrict to a section (repeatable)")
    v.add_argument("--out", metavar="DIR", help="write summary.txt and report.tsv here")
    v.add_argument("--verbose", action="store_true", help="report progress on stderr")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("trace", parents=[common], help="print an accepting computation")
    t.add_argument("instances", nargs="*", help="input string")
    t.add_argument("--machine", help="machine name (default: the machine for --kind)")
    t.add_argument("--machine-file", help="machine description file")
    t.add_argument("--budget", type=int)
    t.add_argument("--strict", action="store_true", help="exit 6 when the budget runs out")
    t.set_defaults(func=cmd_trace)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print(f"unarybench: {e}", file=sys.stderr)
        return e.code
    except BudgetExhausted as e:
        print(f"unarybench: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except UnknownKind as e:
        print(f"unarybench: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except KindMismatch as e:
        print(f"unarybench: {e}", file=sys.stderr)
        return EXIT_KIND
    except UnaryBenchError as e:
        print(f"unarybench: {e}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())

"""Reduction objects and the exhaustive agreement checker."""

from dataclasses import dataclass, field
import time

from ..errors import KindMismatch, InstanceTooLarge
from ..problems import decide
from ..unary_codec import serialize_instance


def _kind_of(x):
    return getattr(x, "kind", None)


def _matches(kind, accepted):
    return kind in accepted if isinstance(accepted, tuple) else kind == accepted


@dataclass(frozen=True)
class ManyOneReduction:
    name: str
    source: object  # kind or tuple of kinds
    target: str
    transform: object
    notes: str = ""

    def __call__(self, x):
        if not _matches(_kind_of(x), self.source):
            raise KindMismatch(f"{self.name} expects {self.source}, got {_kind_of(x)}")
        y = self.transform(x)
        if not _matches(y.kind, self.target):
            raise KindMismatch(f"{self.name} produced {y.kind}, expected {self.target}")
        return y

    def queries(self, x):
        return [self(x)], any_of


@dataclass(frozen=True)
class TruthTableReduction:
    name: str
    source: object
    target: str
    generate: object  # instance -> list of target instances
    evaluator: object  # tuple of booleans -> boolean
    evaluator_name: str = "OR"
    notes: str = ""

    def __call__(self, x):
        return self.queries(x)

    def queries(self, x):
        if not _matches(_kind_of(x), self.source):
            raise KindMismatch(f"{self.name} expects {self.source}, got {_kind_of(x)}")
        ys = list(self.generate(x))
        for y in ys:
            if not _matches(y.kind, self.target):
                raise KindMismatch(f"{self.name} produced {y.kind}, expected {self.target}")
        return ys, self.evaluator


def any_of(bits):
    return any(bits)


@dataclass
class ReductionReport:
    name: str
    family: str
    agree: int = 0
    disagree: int = 0
    indeterminate: int = 0
    counterexamples: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self):
        return self.disagree == 0

    def summary_line(self):
        status = "ok" if self.ok else "FAIL"
        return (f"{self.name:<28} {self.family:<34} agree={self.agree:<7} "
                f"disagree={self.disagree:<4} indeterminate={self.indeterminate:<4} {status}")

    def rows(self):
        """Tab-separated rows for the machine-readable report."""
        yield "\t".join(("check", "family", "agree", "disagree", "indeterminate", "seconds"))
        yield "\t".join((self.name, self.family, str(self.agree), str(self.disagree),
                         str(self.indeterminate), f"{self.seconds:.2f}"))
        for ce in self.counterexamples:
            yield "\t".join(("counterexample", self.name, ce))


def describe(x):
    try:
        return f"{x.kind}:{serialize_instance(x)}"
    except Exception:  # noqa: BLE001 - a debugging aid only
        return repr(x)


def verify_reduction(r, instances, family="", source_oracle=None, target_oracle=None,
                     max_counterexamples=10):
    """Compare source membership with the evaluator over query memberships.

    ``instances`` is any iterable of source instances. Oracles default to
    :func:`unarybench.problems.decide`; instances whose oracle refuses
    (enumeration budget) are counted as indeterminate, never as agreement.
    """
    source_oracle = source_oracle or decide
    target_oracle = target_oracle or decide
    report = ReductionReport(r.name, family)
    start = time.perf_counter()
    for x in instances:
        try:
            ys, evaluate = r.queries(x)
            expected = source_oracle(x)
            got = evaluate(tuple(bool(target_oracle(y)) for y in ys))
        except InstanceTooLarge:
            report.indeterminate += 1
            continue
        if expected == got:
            report.agree += 1
        else:
            report.disagree += 1
            if len(report.counterexamples) < max_counterexamples:
                report.counterexamples.append(
                    f"{describe(x)} is {'yes' if expected else 'no'} but image "
                    f"{' | '.join(describe(y) for y in ys)} gives {'yes' if got else 'no'}")
    report.seconds = time.perf_counter() - start
    return report

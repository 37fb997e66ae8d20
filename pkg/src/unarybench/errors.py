"""Exception hierarchy shared by every module of the workbench."""


class UnaryBenchError(Exception):
    pass


class ParseError(UnaryBenchError):
    """Malformed instance or machine text."""

    def __init__(self, position, expected, text=None):
        self.position = position
        self.expected = expected
        self.text = text
        super().__init__(f"parse error at position {position}: expected {expected}")


class DominanceViolation(UnaryBenchError):
    pass


class InvalidInstance(UnaryBenchError):
    pass


class InstanceTooLarge(UnaryBenchError):
    pass


class NotAcyclic(InvalidInstance):
    pass


class ClassViolation(InvalidInstance):
    """A graph does not belong to the required class (topological order, edge closure)."""

    def __init__(self, clause):
        self.clause = clause
        super().__init__(f"graph class violation: {clause}")


class InvalidMachine(UnaryBenchError):
    pass


class NotRealTime(InvalidMachine):
    pass


class BudgetExhausted(UnaryBenchError):
    def __init__(self, explored, budget):
        self.explored = explored
        self.budget = budget
        super().__init__(f"exploration budget exhausted after {explored} configurations (budget {budget})")


class UnknownKind(UnaryBenchError):
    pass


class KindMismatch(UnaryBenchError):
    pass


class CounterBoundExceeded(InvalidMachine):
    pass

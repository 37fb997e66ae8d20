"""Workbench for unary-encoded knapsack, path and lattice problems.

Subpackages and modules:

* :mod:`unarybench.unary_codec` - unary, general-unary and shift-unary codecs
  and the ``#``-separated instance strings,
* :mod:`unarybench.problems` - exhaustive oracles and the readable format,
* :mod:`unarybench.reductions` - executable reductions and their verifier,
* :mod:`unarybench.automata` - alternating counter/pushdown automata,
* :mod:`unarybench.cli` - the ``unarybench`` command.
"""

from .instances import SubsetInstance, WeightedDag, LatticeInstance, ALL_KINDS
from .problems import decide
from .unary_codec import serialize_instance, parse_instance

__version__ = "0.1.0"

__all__ = [
    "SubsetInstance", "WeightedDag", "LatticeInstance", "ALL_KINDS", "decide",
    "serialize_instance", "parse_instance",
]

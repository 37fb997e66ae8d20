"""Reductions into the lattice problems."""

from ..instances import LatticeInstance

UCVP_MAX_REJECT = LatticeInstance("UCVP_max", ((4,),), 1, (2,))


def su2part_to_ucvp_max(x, check_parity=True):
    """Column i of the scaled matrix on top of 2e_i; x0 = (d'_j // 2 ..., 1 ...), b = 1.

    Rows with an odd sum make the instance a NO; they are mapped to a fixed
    NO instance because floor(d'_j / 2) would otherwise admit a spurious
    lattice point (row (1, 2) is the smallest example). ``check_parity=False``
    gives the literal construction, kept for the mutation check.
    """
    rows = x.items
    n = len(rows[0])
    sums = [sum(r) for r in rows]
    if check_parity and any(d % 2 for d in sums):
        return UCVP_MAX_REJECT
    d_max = max(sums)
    basis = []
    for i in range(n):
        top = tuple(d_max * r[i] for r in rows)
        unit = tuple(2 if k == i else 0 for k in range(n))
        basis.append(top + unit)
    x0 = tuple((d_max * d) // 2 for d in sums) + (1,) * n
    return LatticeInstance("UCVP_max", tuple(basis), 1, x0)


def usvp_queries(x):
    """Query i doubles basis vector i and asks for a point within b of v_i."""
    kind = "UCVP_" + x.norm
    out = []
    for i, v in enumerate(x.basis):
        basis = tuple(tuple(2 * c for c in u) if k == i else u for k, u in enumerate(x.basis))
        out.append(LatticeInstance(kind, basis, x.bound, v))
    return out


def usvp_to_ucvp_tt(x):
    """m queries combined by OR; sound for linearly independent bases."""
    return usvp_queries(x), any


def su2part_to_ucvp_literal(x):
    return su2part_to_ucvp_max(x, check_parity=False)

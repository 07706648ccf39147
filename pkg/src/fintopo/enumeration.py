"""Exhaustive enumeration of all topologies on n labeled points.

Main path: finite topologies correspond exactly to preorders, so the
enumerator walks reflexive relation matrices row by row, pruning partial
assignments that already violate transitivity, and converts each preorder
to its up-set topology.  Two independent routes exist for cross-checks:
a naive filter over all candidate open-set families (small n ground
truth) and a vectorized transitive-relation counter.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExceeded
from .space import Preorder, build_topology, full_mask, topology_from_preorder


@dataclass(frozen=True)
class EnumerationBudget:
    """Hard caps for sweep loops.  All fields must be positive."""

    max_n: int = 4
    max_spaces: int = 1_000_000
    max_maps: int = 5_000_000

    def __post_init__(self):
        if self.max_n < 0 or self.max_spaces <= 0 or self.max_maps <= 0:
            raise ValueError("budget fields must be positive")


def _preorder_rows(n: int):
    """Yield every reflexive transitive row assignment on n points.

    rows[i] is the up-set mask of point i.  Pairwise containment checks
    on decided rows enforce transitivity incrementally: once every
    decided pair (a, b) with b in rows[a] satisfies rows[a] >= rows[b],
    chains through decided points compose automatically.
    """
    if n == 0:
        yield ()
        return
    rows = [0] * n

    def extend(i):
        if i == n:
            yield tuple(rows)
            return
        base = 1 << i
        for extra in range(1 << n):
            if extra & base:
                continue
            candidate = base | extra
            ok = True
            for j in range(i):
                if candidate >> j & 1 and candidate & rows[j] != rows[j]:
                    ok = False
                    break
                if rows[j] >> i & 1 and rows[j] & candidate != candidate:
                    ok = False
                    break
            if ok:
                rows[i] = candidate
                yield from extend(i + 1)
        rows[i] = 0

    yield from extend(0)


def enumerate_topologies(n: int, budget: EnumerationBudget | None = None):
    """Every topology on {0..n-1} exactly once, in canonical order.

    Canonical order sorts by the opens list (count first, then the
    numeric tuple), so the stream is reproducible across runs and
    backends.
    """
    budget = budget or EnumerationBudget(max_n=max(n, 4))
    if n > budget.max_n:
        raise BudgetExceeded(f"n={n} exceeds budget max_n={budget.max_n}")
    found = []
    for rows in _preorder_rows(n):
        found.append(topology_from_preorder(Preorder(rows)))
        if len(found) > budget.max_spaces:
            raise BudgetExceeded(
                f"more than {budget.max_spaces} topologies at n={n}"
            )
    found.sort(key=lambda t: t.canonical_key())
    yield from found


def enumerate_topologies_naive(n: int, budget: EnumerationBudget | None = None):
    """Ground-truth oracle: filter all candidate families for the axioms.

    Tries every subset of the proper nonempty masks joined with {empty,
    full}; keeps families closed under union and intersection.  Cost is
    2^(2^n - 2) candidates, so n <= 4 is enforced.
    """
    if n > 4:
        raise BudgetExceeded("naive family filter is capped at n=4")
    if budget is not None and n > budget.max_n:
        raise BudgetExceeded(f"n={n} exceeds budget max_n={budget.max_n}")
    full = full_mask(n)
    proper = [m for m in range(1, full)]
    found = []
    for r in range(len(proper) + 1):
        for chosen in combinations(proper, r):
            family = {0, full} | set(chosen)
            if _closed_under_ops(family):
                opens = tuple(
                    sorted(family, key=lambda m: (m.bit_count(), m))
                )
                found.append(build_topology(n, opens))
    found.sort(key=lambda t: t.canonical_key())
    yield from found


def _closed_under_ops(family) -> bool:
    for u in family:
        for v in family:
            if u & v not in family or u | v not in family:
                return False
    return True


def count_topologies(n: int, budget: EnumerationBudget | None = None) -> int:
    return sum(1 for _ in enumerate_topologies(n, budget))


def count_reflexive_transitive_relations(n: int, chunk: int = 1 << 16) -> int:
    """Count preorders on n points by brute transitivity filtering.

    Independent cross-check for enumerate_topologies: materializes every
    reflexive relation matrix in vectorized chunks and keeps those with
    R composed with R inside R.  Intended for n <= 5 (2^20 relations).
    """
    import numpy as np

    if n == 0:
        return 1
    cells = [(i, j) for i in range(n) for j in range(n) if i != j]
    bits = len(cells)
    if bits > 24:
        raise BudgetExceeded("relation filter is sized for n <= 5")
    total = 0
    shifts = np.arange(bits, dtype=np.uint32)
    for start in range(0, 1 << bits, chunk):
        stop = min(start + chunk, 1 << bits)
        idx = np.arange(start, stop, dtype=np.uint32)
        flags = (idx[:, None] >> shifts) & 1
        rel = np.zeros((stop - start, n, n), dtype=bool)
        rel[:, np.arange(n), np.arange(n)] = True
        for b, (i, j) in enumerate(cells):
            rel[:, i, j] = flags[:, b]
        comp = np.einsum("bij,bjk->bik", rel, rel)
        total += int(np.all(comp <= rel, axis=(1, 2)).sum())
    return total

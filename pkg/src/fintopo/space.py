"""Finite topological spaces over ground sets of indexed points.

A subset of the ground set {0, .., n-1} is a plain int used as a bit
vector: bit x set means point x is in the subset.  One machine word per
subset keeps all the set algebra branch-free; named points exist only at
the document/CLI layer.
"""

from .errors import (
    GroundSetTooLarge,
    MissingEmptyOrFull,
    NotAPreorder,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
)

# Bit-vector subsets of the ground set.
SubsetMask = int

# Hard cap on ground-set size so masks stay one word wide.  Enumeration
# workloads target n <= 6; this is only a representation guardrail.
MAX_POINTS = 32


def full_mask(n: int) -> SubsetMask:
    """The whole ground set on n points."""
    return (1 << n) - 1


def complement(mask: SubsetMask, n: int) -> SubsetMask:
    return ~mask & full_mask(n)


def iter_points(mask: SubsetMask):
    """Indices of the points in the subset, ascending."""
    x = 0
    while mask:
        if mask & 1:
            yield x
        mask >>= 1
        x += 1


def subset_key(mask: SubsetMask) -> tuple:
    """Canonical sort key for opens: popcount first, then numeric value."""
    return (mask.bit_count(), mask)


def _check_fits(n: int, masks) -> None:
    if not 0 <= n <= MAX_POINTS:
        raise GroundSetTooLarge(f"ground set size {n} outside 0..{MAX_POINTS}")
    for m in masks:
        if m < 0 or m >> n:
            raise ValueError(f"mask {m:#b} does not fit in {n} bits")


class Topology:
    """A validated family of open subsets of {0, .., n-1}.

    `opens` is kept sorted by (popcount, value) and deduplicated, so two
    equal topologies compare equal structurally.  `min_nbhd[x]` is the
    intersection of all opens containing x, which in a finite space is
    itself the smallest open neighbourhood of x.  Instances are immutable
    after construction and safe to share across workers.
    """

    __slots__ = ("n", "opens", "min_nbhd", "_open_set")

    def __init__(self, n: int, opens, min_nbhd):
        self.n = n
        self.opens = tuple(opens)
        self.min_nbhd = tuple(min_nbhd)
        self._open_set = frozenset(self.opens)

    def is_open(self, mask: SubsetMask) -> bool:
        return mask in self._open_set

    def is_closed(self, mask: SubsetMask) -> bool:
        return complement(mask, self.n) in self._open_set

    @property
    def full(self) -> SubsetMask:
        return full_mask(self.n)

    def subsets(self):
        """All 2^n subset masks in numeric order."""
        return range(1 << self.n)

    def canonical_key(self):
        return (len(self.opens), self.opens)

    def __eq__(self, other):
        return (
            isinstance(other, Topology)
            and self.n == other.n
            and self.opens == other.opens
        )

    def __hash__(self):
        return hash((self.n, self.opens))

    def __repr__(self):
        shown = ",".join(format(m, "b").zfill(max(self.n, 1)) for m in self.opens)
        return f"Topology(n={self.n}, opens=[{shown}])"


def _sorted_opens(opens) -> tuple:
    return tuple(sorted(set(opens), key=subset_key))


def _min_nbhd_table(n: int, opens) -> list:
    full = full_mask(n)
    table = []
    for x in range(n):
        bit = 1 << x
        acc = full
        for u in opens:
            if u & bit:
                acc &= u
        table.append(acc)
    return table


def build_topology(n: int, opens) -> Topology:
    """Validate an open family and derive the minimal-neighbourhood table.

    Input order and duplicates are irrelevant.  Closure is checked
    pairwise only: in a finite space closure under pairwise union and
    intersection already gives closure under arbitrary ones.
    """
    opens = list(opens)
    _check_fits(n, opens)
    fam = _sorted_opens(opens)
    members = frozenset(fam)
    if 0 not in members or full_mask(n) not in members:
        raise MissingEmptyOrFull(f"open family must contain 0 and {full_mask(n):#b}")
    for i, u in enumerate(fam):
        for v in fam[i + 1 :]:
            if u | v not in members:
                raise NotClosedUnderUnion(u, v)
            if u & v not in members:
                raise NotClosedUnderIntersection(u, v)
    return Topology(n, fam, _min_nbhd_table(n, fam))


def generate_from_subbasis(n: int, sets) -> Topology:
    """Smallest topology containing the given sets.

    Closes under finite intersection, then arbitrary union, then adds the
    empty and full sets.
    """
    sets = list(sets)
    _check_fits(n, sets)
    full = full_mask(n)
    base = {full}
    frontier = set(sets)
    while frontier:
        base |= frontier
        frontier = {
            u & v for u in base for v in base if u & v not in base
        }
    opens = {0}
    frontier = set(base)
    while frontier:
        opens |= frontier
        frontier = {
            u | v for u in opens for v in opens if u | v not in opens
        }
    return build_topology(n, opens)


def interior(t: Topology, a: SubsetMask) -> SubsetMask:
    """Largest open subset of a: the points whose minimal neighbourhood fits."""
    res = 0
    for x in range(t.n):
        if t.min_nbhd[x] & ~a == 0:
            res |= 1 << x
    return res


def closure(t: Topology, a: SubsetMask) -> SubsetMask:
    """Smallest closed superset of a, via the complement of an interior."""
    return t.full ^ interior(t, t.full ^ a)


class Preorder:
    """Reflexive transitive relation on {0, .., n-1}, one row mask per point.

    Row x holds the mask {y : x <= y}, where x <= y is read as "x lies in
    the closure of {y}".
    """

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        self.rows = tuple(rows)
        self.n = len(self.rows)

    def leq(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)

    def validate(self) -> None:
        _check_fits(self.n, self.rows)
        for x in range(self.n):
            if not self.rows[x] >> x & 1:
                raise NotAPreorder(f"relation is not reflexive at {x}")
        for x in range(self.n):
            row = self.rows[x]
            for y in iter_points(row):
                if self.rows[y] & ~row:
                    raise NotAPreorder(
                        f"relation is not transitive through {x} <= {y}"
                    )

    def __eq__(self, other):
        return isinstance(other, Preorder) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Preorder(rows={list(self.rows)})"


def specialization_preorder(t: Topology) -> Preorder:
    """x <= y iff x lies in the closure of the singleton {y}.

    Computed from the closure operator itself, not read off min_nbhd, so
    the two routes can be checked against each other.
    """
    rows = [0] * t.n
    for y in range(t.n):
        cl = closure(t, 1 << y)
        for x in iter_points(cl):
            rows[x] |= 1 << y
    return Preorder(rows)


def topology_from_preorder(p: Preorder) -> Topology:
    """The topology whose opens are the up-sets of the preorder.

    A set is open iff it contains the whole row of each of its points.
    Inverse of specialization_preorder: the round trip through both is the
    identity on finite topologies.
    """
    p.validate()
    n = p.n
    opens = []
    for u in range(1 << n):
        rest = u
        ok = True
        while rest:
            x = (rest & -rest).bit_length() - 1
            if p.rows[x] & ~u:
                ok = False
                break
            rest &= rest - 1
        if ok:
            opens.append(u)
    # rows double as the minimal neighbourhoods: row x is the smallest
    # up-set containing x.
    return Topology(n, _sorted_opens(opens), list(p.rows))

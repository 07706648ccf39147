"""Maps between finite spaces and the generalized continuity hierarchy.

Every continuity notion except strong irresoluteness is an instance of
one scheme: f is c-continuous when the preimage of every open set of the
codomain lies in set class c of the domain.  The binding table below is
the only per-class data; no continuity predicate is hand-written.
"""

from enum import Enum
from itertools import product

from .errors import BudgetExceeded
from .setclasses import SetClass, is_in_class, is_semi_regular, semi_closure
from .space import SubsetMask, Topology

DEFAULT_MAP_BUDGET = 1 << 22


class ContinuityClass(Enum):
    CONTINUOUS = "continuous"
    SEMI_CONTINUOUS = "semi-continuous"
    BETA_CONTINUOUS = "beta-continuous"
    PRE_CONTINUOUS = "precontinuous"
    LC_CONTINUOUS = "LC-continuous"
    A_CONTINUOUS = "A-continuous"
    B_CONTINUOUS = "B-continuous"
    AB_CONTINUOUS = "AB-continuous"
    IC_CONTINUOUS = "ic-continuous"
    STRONGLY_IRRESOLUTE = "strongly-irresolute"


# preimage-of-open must land in this domain class
CONTINUITY_BINDING = {
    ContinuityClass.CONTINUOUS: SetClass.OPEN,
    ContinuityClass.SEMI_CONTINUOUS: SetClass.SEMI_OPEN,
    ContinuityClass.BETA_CONTINUOUS: SetClass.BETA_OPEN,
    ContinuityClass.PRE_CONTINUOUS: SetClass.PREOPEN,
    ContinuityClass.LC_CONTINUOUS: SetClass.LOCALLY_CLOSED,
    ContinuityClass.A_CONTINUOUS: SetClass.A_SET,
    ContinuityClass.B_CONTINUOUS: SetClass.B_SET,
    ContinuityClass.AB_CONTINUOUS: SetClass.AB_SET,
    ContinuityClass.IC_CONTINUOUS: SetClass.IC_SET,
}


class SpaceMap:
    """A total function between the ground sets of two finite spaces."""

    __slots__ = ("domain", "codomain", "assignment", "fibers")

    def __init__(self, domain: Topology, codomain: Topology, assignment):
        assignment = tuple(assignment)
        if len(assignment) != domain.n:
            raise ValueError(
                f"assignment length {len(assignment)} != domain size {domain.n}"
            )
        for x, y in enumerate(assignment):
            if not 0 <= y < codomain.n:
                raise ValueError(f"assignment[{x}] = {y} outside codomain")
        self.domain = domain
        self.codomain = codomain
        self.assignment = assignment
        fibers = [0] * codomain.n
        for x, y in enumerate(assignment):
            fibers[y] |= 1 << x
        self.fibers = tuple(fibers)

    def __repr__(self):
        return f"SpaceMap({self.assignment!r})"

    def __eq__(self, other):
        if not isinstance(other, SpaceMap):
            return NotImplemented
        return (self.domain, self.codomain, self.assignment) == (
            other.domain, other.codomain, other.assignment
        )

    def __hash__(self):
        return hash((self.domain, self.codomain, self.assignment))


def preimage(f: SpaceMap, b: SubsetMask) -> SubsetMask:
    acc = 0
    for y in range(f.codomain.n):
        if b >> y & 1:
            acc |= f.fibers[y]
    return acc


def image(f: SpaceMap, a: SubsetMask) -> SubsetMask:
    acc = 0
    for x in range(f.domain.n):
        if a >> x & 1:
            acc |= 1 << f.assignment[x]
    return acc


def is_class_continuous(f: SpaceMap, c: SetClass) -> bool:
    """Preimage of every codomain open belongs to class c of the domain."""
    return all(
        is_in_class(f.domain, preimage(f, v), c) for v in f.codomain.opens
    )


def is_continuous_in(f: SpaceMap, cc: ContinuityClass) -> bool:
    if cc is ContinuityClass.STRONGLY_IRRESOLUTE:
        return is_strongly_irresolute(f)
    return is_class_continuous(f, CONTINUITY_BINDING[cc])


def is_strongly_irresolute(f: SpaceMap) -> bool:
    """Preimage of every codomain subset is semi-regular in the domain.

    This preimage form is the operative definition; the semi-closure form
    below is kept as an independent implementation.
    """
    return all(
        is_semi_regular(f.domain, preimage(f, b))
        for b in f.codomain.subsets()
    )


def strongly_irresolute_scl(f: SpaceMap) -> bool:
    """f(sCl A) is contained in f(A) for every domain subset A."""
    return all(
        image(f, semi_closure(f.domain, a)) & ~image(f, a) == 0
        for a in f.domain.subsets()
    )


def continuity_profile(f: SpaceMap):
    """Verdict for every continuity class, in declaration order."""
    return {cc: is_continuous_in(f, cc) for cc in ContinuityClass}


def enumerate_maps(tx: Topology, ty: Topology, budget: int = DEFAULT_MAP_BUDGET):
    """All assignments from tx's points to ty's, lexicographically.

    n_x = 0 yields exactly the empty map.  Raises BudgetExceeded before
    yielding anything if ty.n ** tx.n is over budget.
    """
    count = ty.n ** tx.n if tx.n else 1
    if count > budget:
        raise BudgetExceeded(
            f"{count} maps exceed the enumeration budget of {budget}"
        )
    if tx.n and ty.n == 0:
        return
    for assignment in product(range(ty.n), repeat=tx.n):
        yield SpaceMap(tx, ty, assignment)

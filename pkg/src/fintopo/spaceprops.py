"""Global properties of a finite space, decided from their definitions.

Each predicate quantifies over opens or subsets literally.  The AB-set
characterizations of these properties live in the theorem registry, which
verifies them against these definitional forms; using a characterization
here would make those checks circular.
"""

from enum import Enum

from .setclasses import is_semi_open
from .space import Topology, closure


class SpaceProperty(Enum):
    EXTREMALLY_DISCONNECTED = "extremally-disconnected"
    SUBMAXIMAL = "submaximal"
    PARTITION = "partition"
    DISCRETE = "discrete"
    INDISCRETE = "indiscrete"
    HYPERCONNECTED = "hyperconnected"
    SEMI_CONNECTED = "semi-connected"


def is_extremally_disconnected(t: Topology) -> bool:
    """Every open set has open closure."""
    return all(t.is_open(closure(t, u)) for u in t.opens)


def is_submaximal(t: Topology) -> bool:
    """Every dense subset is open."""
    return all(
        t.is_open(a) for a in t.subsets() if closure(t, a) == t.full
    )


def is_partition(t: Topology) -> bool:
    """Every open set is closed."""
    return all(t.is_closed(u) for u in t.opens)


def is_discrete(t: Topology) -> bool:
    return len(t.opens) == 1 << t.n


def is_indiscrete(t: Topology) -> bool:
    # n <= 1 has a single topology, both discrete and indiscrete.
    return len(t.opens) <= 2


def is_hyperconnected(t: Topology) -> bool:
    """Every nonempty open set is dense.  Vacuously true for n <= 1."""
    return all(closure(t, u) == t.full for u in t.opens if u != 0)


def is_semi_connected(t: Topology) -> bool:
    """No split of the space into two nonempty semi-open halves.

    Vacuously true for n <= 1.  Only complementary pairs need checking:
    a disjoint semi-open cover by two sets is exactly such a pair.
    """
    full = t.full
    for a in range(1, full):
        if is_semi_open(t, a) and is_semi_open(t, full ^ a):
            return False
    return True


PROPERTY_PREDICATES = {
    SpaceProperty.EXTREMALLY_DISCONNECTED: is_extremally_disconnected,
    SpaceProperty.SUBMAXIMAL: is_submaximal,
    SpaceProperty.PARTITION: is_partition,
    SpaceProperty.DISCRETE: is_discrete,
    SpaceProperty.INDISCRETE: is_indiscrete,
    SpaceProperty.HYPERCONNECTED: is_hyperconnected,
    SpaceProperty.SEMI_CONNECTED: is_semi_connected,
}


def has_property(t: Topology, prop: SpaceProperty) -> bool:
    return PROPERTY_PREDICATES[prop](t)


def space_profile(t: Topology):
    """Verdict for every property, in declaration order."""
    return {prop: fn(t) for prop, fn in PROPERTY_PREDICATES.items()}

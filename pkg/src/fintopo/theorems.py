"""Checkable propositions over finite spaces, with exhaustive sweeps.

Every proposition is either universal (checked on every instance in
budget; a failing instance is reported as a counterexample) or
existential (the sweep must find a witness).  Sweeps never stop early:
the full budget is always traversed and the canonically first hit is
reported, so sequential and parallel runs produce identical reports.

The instance order fixing "first" is: ground-set size ascending,
topology canonical order, subset numeric order, map order by
(domain size, codomain size, domain topology, codomain topology,
assignment lexicographic).
"""

import json
from dataclasses import dataclass, field
from multiprocessing import Pool

from .documents import (
    decode_map,
    decode_space,
    default_point_names,
    encode_map,
    encode_space,
    mask_to_names,
    names_to_mask,
)
from .enumeration import EnumerationBudget, enumerate_topologies
from .errors import BudgetExceeded
from .maps import (
    CONTINUITY_BINDING,
    ContinuityClass,
    SpaceMap,
    enumerate_maps,
    image,
    preimage,
)
from .setclasses import (
    SetClass,
    class_table,
    is_b_set_via_semi_closure,
    is_ic_set_subspace,
    is_semi_regular_sandwich,
    semi_closure_closed_form,
)
from .space import Topology
from .spaceprops import SpaceProperty, space_profile

HOLDS = "holds-exhaustively"
FOUND = "witness-found"
EXHAUSTED = "budget-exhausted"

COUNTEREXAMPLE = "counterexample-to-universal"
EXAMPLE = "example-for-existential"

KIND_EQ_SPACE = "equivalence-per-space"
KIND_EQ_SET = "equivalence-per-set"
KIND_IMP_SET = "implication-per-set"
KIND_IMP_MAP = "implication-per-map"
KIND_EQ_MAP = "equivalence-per-map"
KIND_EXISTS = "existence-of-witness"

_EXISTENTIAL = {KIND_EXISTS}


@dataclass(frozen=True)
class Proposition:
    """One checkable claim.

    scope fixes quantification: "space" evaluates once per topology,
    "set" once per (topology, subset), "map" once per map between a pair
    of topologies.  For universal kinds the evaluator must return True on
    every instance; for existence-of-witness it marks witnesses.
    exploratory propositions are swept and reported but never gate an
    overall verdict.
    """

    id: str
    kind: str
    scope: str
    description: str
    evaluate: callable = field(repr=False, compare=False)
    exploratory: bool = False

    @property
    def existential(self) -> bool:
        return self.kind in _EXISTENTIAL


class SpaceFacts:
    """Per-topology context handed to space- and set-scope evaluators."""

    __slots__ = ("t", "table", "_profile")

    def __init__(self, t: Topology):
        self.t = t
        self.table = class_table(t)
        self._profile = None

    def profile(self):
        if self._profile is None:
            self._profile = space_profile(self.t)
        return self._profile

    def has(self, a, cls: SetClass) -> bool:
        return self.table.contains(a, cls)

    def scl(self, a):
        return self.table.semi_closure_table[a]


# ---------------------------------------------------------------------------
# set-scope evaluators


def _ev_l00(fx, a):
    # the semi-closure of every beta-open set is semi-regular
    if not fx.has(a, SetClass.BETA_OPEN):
        return True
    return fx.has(fx.scl(a), SetClass.SEMI_REGULAR)


def _ev_t00(fx, a):
    # AB-set <=> semi-open B-set <=> beta-open B-set
    x = fx.has(a, SetClass.AB_SET)
    y = fx.has(a, SetClass.SEMI_OPEN) and fx.has(a, SetClass.B_SET)
    z = fx.has(a, SetClass.BETA_OPEN) and fx.has(a, SetClass.B_SET)
    return x == y == z


def _ev_t0(fx, a):
    # semi-regular <=> semi-closed AB-set <=> beta-closed AB-set
    x = fx.has(a, SetClass.SEMI_REGULAR)
    y = fx.has(a, SetClass.SEMI_CLOSED) and fx.has(a, SetClass.AB_SET)
    z = fx.has(a, SetClass.BETA_CLOSED) and fx.has(a, SetClass.AB_SET)
    return x == y == z


def _ev_t0a(fx, a):
    # open <=> AB-set that is preopen or an ic-set
    x = fx.has(a, SetClass.OPEN)
    y = fx.has(a, SetClass.AB_SET) and (
        fx.has(a, SetClass.PREOPEN) or fx.has(a, SetClass.IC_SET)
    )
    return x == y


def _ev_cor_submax(fx, a):
    # in a submaximal space the AB-sets are exactly the beta-open sets
    if not fx.profile()[SpaceProperty.SUBMAXIMAL]:
        return True
    return fx.has(a, SetClass.AB_SET) == fx.has(a, SetClass.BETA_OPEN)


def _chain(f_from: SetClass, f_to: SetClass):
    def ev(fx, a):
        return not fx.has(a, f_from) or fx.has(a, f_to)
    return ev


def _ev_equiv_tset(fx, a):
    return fx.has(a, SetClass.SEMI_CLOSED) == fx.has(a, SetClass.T_SET)


def _ev_equiv_sr_sandwich(fx, a):
    return fx.has(a, SetClass.SEMI_REGULAR) == is_semi_regular_sandwich(
        fx.t, a
    )


def _ev_equiv_bset_scl(fx, a):
    return fx.has(a, SetClass.B_SET) == is_b_set_via_semi_closure(fx.t, a)


def _ev_equiv_scl_form(fx, a):
    return fx.scl(a) == semi_closure_closed_form(fx.t, a)


def _ev_equiv_ic_subspace(fx, a):
    return fx.has(a, SetClass.IC_SET) == is_ic_set_subspace(fx.t, a)


def _exists(in_class: SetClass, not_in: SetClass):
    def ev(fx, a):
        return fx.has(a, in_class) and not fx.has(a, not_in)
    return ev


# ---------------------------------------------------------------------------
# space-scope evaluators


def _ev_t1(fx):
    # extremally disconnected <=> AB family equals the opens
    # <=> every AB-set is open
    ab = fx.table.family_bitmap(SetClass.AB_SET)
    op = fx.table.family_bitmap(SetClass.OPEN)
    e1 = fx.profile()[SpaceProperty.EXTREMALLY_DISCONNECTED]
    e2 = ab == op
    e3 = ab & ~op == 0
    return e1 == e2 == e3


def _ev_t2(fx):
    # submaximal <=> every preopen set is AB <=> every dense set is AB
    ab = fx.table.family_bitmap(SetClass.AB_SET)
    e1 = fx.profile()[SpaceProperty.SUBMAXIMAL]
    e2 = fx.table.family_bitmap(SetClass.PREOPEN) & ~ab == 0
    e3 = fx.table.family_bitmap(SetClass.DENSE) & ~ab == 0
    return e1 == e2 == e3


def _ev_t3(fx):
    # partition <=> every AB-set is clopen <=> every AB-set is preclosed
    ab = fx.table.family_bitmap(SetClass.AB_SET)
    e1 = fx.profile()[SpaceProperty.PARTITION]
    e2 = ab & ~fx.table.family_bitmap(SetClass.CLOPEN) == 0
    e3 = ab & ~fx.table.family_bitmap(SetClass.PRECLOSED) == 0
    return e1 == e2 == e3


def _ev_t4(fx):
    # indiscrete <=> the only AB-sets are empty and full
    ab = fx.table.family_bitmap(SetClass.AB_SET)
    e1 = fx.profile()[SpaceProperty.INDISCRETE]
    e2 = ab == 1 | 1 << fx.t.full
    return e1 == e2


def _ev_t5(fx):
    # discrete <=> every subset is AB <=> every singleton is AB
    ab = fx.table.family_bitmap(SetClass.AB_SET)
    e1 = fx.profile()[SpaceProperty.DISCRETE]
    e2 = ab == (1 << (1 << fx.t.n)) - 1
    e3 = all(ab >> (1 << x) & 1 for x in range(fx.t.n))
    return e1 == e2 == e3


def _ev_t6(fx):
    # hyperconnected <=> every nonempty AB-set is dense.  The empty set
    # is an AB-set in every space and is never dense for n >= 1, so the
    # claim is read with the same nonemptiness convention as
    # hyperconnectedness itself.
    ab = fx.table.family_bitmap(SetClass.AB_SET)
    dense = fx.table.family_bitmap(SetClass.DENSE)
    e1 = fx.profile()[SpaceProperty.HYPERCONNECTED]
    e2 = ab & ~dense & ~1 == 0
    return e1 == e2


def _ev_t7(fx):
    # semi-connected <=> no split into two disjoint nonempty AB-sets
    ab = fx.table.family_bitmap(SetClass.AB_SET)
    full = fx.t.full
    e1 = fx.profile()[SpaceProperty.SEMI_CONNECTED]
    e2 = not any(
        ab >> a & 1 and ab >> (full ^ a) & 1 for a in range(1, full)
    )
    return e1 == e2


# ---------------------------------------------------------------------------
# map-scope evaluators: receive the continuity verdict vector


def _imp_map(cc_from: ContinuityClass, cc_to: ContinuityClass):
    def ev(cont, scl):
        return not cont[cc_from] or cont[cc_to]
    return ev


def _ev_s42(cont, scl):
    x = cont[ContinuityClass.AB_CONTINUOUS]
    y = cont[ContinuityClass.SEMI_CONTINUOUS] and cont[ContinuityClass.B_CONTINUOUS]
    z = cont[ContinuityClass.BETA_CONTINUOUS] and cont[ContinuityClass.B_CONTINUOUS]
    return x == y == z


def _ev_s42a(cont, scl):
    x = cont[ContinuityClass.A_CONTINUOUS]
    y = cont[ContinuityClass.BETA_CONTINUOUS] and cont[ContinuityClass.LC_CONTINUOUS]
    return x == y


def _ev_s43(cont, scl):
    x = cont[ContinuityClass.CONTINUOUS]
    y = cont[ContinuityClass.AB_CONTINUOUS] and (
        cont[ContinuityClass.PRE_CONTINUOUS] or cont[ContinuityClass.IC_CONTINUOUS]
    )
    return x == y


def _ev_equiv_strirr_scl(cont, scl):
    return cont[ContinuityClass.STRONGLY_IRRESOLUTE] == scl


def _exists_map(cc_in: ContinuityClass, cc_not: ContinuityClass):
    def ev(cont, scl):
        return cont[cc_in] and not cont[cc_not]
    return ev


# ---------------------------------------------------------------------------
# registry


def _build_registry():
    P = Proposition
    so, ab = SetClass.SEMI_OPEN, SetClass.AB_SET
    a_s, b_s, lc = SetClass.A_SET, SetClass.B_SET, SetClass.LOCALLY_CLOSED
    cc = ContinuityClass
    return (
        # generalized-set claims
        P("l00", KIND_IMP_SET, "set",
          "the semi-closure of every beta-open set is semi-regular",
          _ev_l00),
        P("t00", KIND_EQ_SET, "set",
          "AB-set iff semi-open B-set iff beta-open B-set", _ev_t00),
        P("cor-submax", KIND_IMP_SET, "set",
          "in a submaximal space the AB-sets are exactly the beta-open sets",
          _ev_cor_submax),
        P("t0", KIND_EQ_SET, "set",
          "semi-regular iff semi-closed AB-set iff beta-closed AB-set",
          _ev_t0),
        P("t0a", KIND_EQ_SET, "set",
          "open iff an AB-set that is preopen or an ic-set", _ev_t0a),
        # inclusion chain around AB-sets
        P("chain-a-ab", KIND_IMP_SET, "set",
          "every A-set is an AB-set", _chain(a_s, ab)),
        P("chain-ab-b", KIND_IMP_SET, "set",
          "every AB-set is a B-set", _chain(ab, b_s)),
        P("chain-ab-so", KIND_IMP_SET, "set",
          "every AB-set is semi-open", _chain(ab, so)),
        P("chain-a-lc", KIND_IMP_SET, "set",
          "every A-set is locally closed", _chain(a_s, lc)),
        P("chain-lc-b", KIND_IMP_SET, "set",
          "every locally closed set is a B-set", _chain(lc, b_s)),
        # agreement of independent formulations
        P("equiv-tset", KIND_EQ_SET, "set",
          "semi-closed agrees with the t-set equation int A = int cl A",
          _ev_equiv_tset),
        P("equiv-sr-sandwich", KIND_EQ_SET, "set",
          "semi-regular agrees with the regular-open sandwich form",
          _ev_equiv_sr_sandwich),
        P("equiv-bset-scl", KIND_EQ_SET, "set",
          "B-set scan agrees with the single-open semi-closure form",
          _ev_equiv_bset_scl),
        P("equiv-scl-form", KIND_EQ_SET, "set",
          "semi-closure scan agrees with the closed form A union int cl A",
          _ev_equiv_scl_form),
        P("equiv-ic-subspace", KIND_EQ_SET, "set",
          "ic-set closed form agrees with the literal subspace check",
          _ev_equiv_ic_subspace),
        # space characterizations
        P("t1", KIND_EQ_SPACE, "space",
          "extremally disconnected iff the AB-sets are exactly the opens",
          _ev_t1),
        P("t2", KIND_EQ_SPACE, "space",
          "submaximal iff every preopen set is AB iff every dense set is AB",
          _ev_t2),
        P("t3", KIND_EQ_SPACE, "space",
          "partition space iff every AB-set is clopen iff preclosed",
          _ev_t3),
        P("t4", KIND_EQ_SPACE, "space",
          "indiscrete iff the only AB-sets are the empty and full sets",
          _ev_t4),
        P("t5", KIND_EQ_SPACE, "space",
          "discrete iff every subset is AB iff every singleton is AB",
          _ev_t5),
        P("t6", KIND_EQ_SPACE, "space",
          "hyperconnected iff every nonempty AB-set is dense", _ev_t6),
        P("t7", KIND_EQ_SPACE, "space",
          "semi-connected iff the space never splits into two disjoint "
          "nonempty AB-sets", _ev_t7),
        # set-level witnesses: strictness and independence
        P("nonrev-ab-a", KIND_EXISTS, "set",
          "some AB-set is not an A-set", _exists(ab, a_s)),
        P("nonrev-ab-b", KIND_EXISTS, "set",
          "some B-set is not an AB-set", _exists(b_s, ab)),
        P("nonrev-ab-so", KIND_EXISTS, "set",
          "some semi-open set is not an AB-set", _exists(so, ab)),
        P("indep-ab-lc", KIND_EXISTS, "set",
          "some AB-set is not locally closed", _exists(ab, lc)),
        P("indep-lc-ab", KIND_EXISTS, "set",
          "some locally closed set is not an AB-set", _exists(lc, ab)),
        # continuity hierarchy
        P("s41-i", KIND_IMP_MAP, "map",
          "every A-continuous function is AB-continuous",
          _imp_map(cc.A_CONTINUOUS, cc.AB_CONTINUOUS)),
        P("s41-ii", KIND_IMP_MAP, "map",
          "every strongly irresolute function is AB-continuous",
          _imp_map(cc.STRONGLY_IRRESOLUTE, cc.AB_CONTINUOUS)),
        P("s41-iii", KIND_IMP_MAP, "map",
          "every AB-continuous function is B-continuous",
          _imp_map(cc.AB_CONTINUOUS, cc.B_CONTINUOUS)),
        P("s41-iv", KIND_IMP_MAP, "map",
          "every AB-continuous function is semi-continuous",
          _imp_map(cc.AB_CONTINUOUS, cc.SEMI_CONTINUOUS)),
        P("s42", KIND_EQ_MAP, "map",
          "AB-continuous iff semi- and B-continuous iff beta- and "
          "B-continuous", _ev_s42),
        P("s42a", KIND_EQ_MAP, "map",
          "A-continuous iff beta-continuous and LC-continuous", _ev_s42a),
        P("s43", KIND_EQ_MAP, "map",
          "continuous iff AB-continuous and precontinuous or ic-continuous",
          _ev_s43),
        P("equiv-strirr-scl", KIND_EQ_MAP, "map",
          "preimage form of strong irresoluteness agrees with the "
          "semi-closure image form (recorded, not asserted)",
          _ev_equiv_strirr_scl, exploratory=True),
        # map-level witnesses: the hierarchy implications are strict
        P("nonrev-s41-i", KIND_EXISTS, "map",
          "some AB-continuous function is not A-continuous",
          _exists_map(cc.AB_CONTINUOUS, cc.A_CONTINUOUS)),
        P("nonrev-s41-ii", KIND_EXISTS, "map",
          "some AB-continuous function is not strongly irresolute",
          _exists_map(cc.AB_CONTINUOUS, cc.STRONGLY_IRRESOLUTE)),
        P("nonrev-s41-iii", KIND_EXISTS, "map",
          "some B-continuous function is not AB-continuous",
          _exists_map(cc.B_CONTINUOUS, cc.AB_CONTINUOUS)),
        P("nonrev-s41-iv", KIND_EXISTS, "map",
          "some semi-continuous function is not AB-continuous",
          _exists_map(cc.SEMI_CONTINUOUS, cc.AB_CONTINUOUS)),
    )


_REGISTRY = _build_registry()
_BY_ID = {p.id: p for p in _REGISTRY}


def registry():
    """All propositions, in sweep order."""
    return list(_REGISTRY)


def proposition(pid: str) -> Proposition:
    if pid not in _BY_ID:
        raise KeyError(f"unknown proposition id {pid!r}")
    return _BY_ID[pid]


# ---------------------------------------------------------------------------
# witnesses and reports


@dataclass
class Witness:
    proposition_id: str
    polarity: str
    topology: Topology
    subset: int | None = None
    codomain: Topology | None = None
    assignment: tuple | None = None

    def to_document(self) -> dict:
        doc = {"proposition": self.proposition_id, "polarity": self.polarity}
        if self.assignment is not None:
            doc["map"] = encode_map(
                SpaceMap(self.topology, self.codomain, self.assignment)
            )
        else:
            doc["space"] = encode_space(self.topology)
            if self.subset is not None:
                doc["subset"] = mask_to_names(
                    self.subset, default_point_names(self.topology.n)
                )
        return doc


@dataclass
class SweepReport:
    proposition_id: str
    kind: str
    description: str
    budget: EnumerationBudget
    spaces_checked: int
    sets_checked: int
    maps_checked: int
    hits: int
    verdict: str
    witnesses: list

    def to_document(self) -> dict:
        return {
            "proposition": self.proposition_id,
            "kind": self.kind,
            "description": self.description,
            "budget": {
                "max_n": self.budget.max_n,
                "max_spaces": self.budget.max_spaces,
                "max_maps": self.budget.max_maps,
            },
            "n_range": [0, self.budget.max_n],
            "spaces_checked": self.spaces_checked,
            "sets_checked": self.sets_checked,
            "maps_checked": self.maps_checked,
            "hits": self.hits,
            "verdict": self.verdict,
            "witnesses": [w.to_document() for w in self.witnesses],
        }


def serialize_report(report) -> str:
    """Canonical text form; byte-identical across equivalent runs."""
    if isinstance(report, list):
        doc = [r.to_document() for r in report]
    else:
        doc = report.to_document()
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def default_budget(scope: str) -> EnumerationBudget:
    # map sweeps quantify over pairs of spaces, so their default size cap
    # is one lower than the set/space sweeps
    return EnumerationBudget(max_n=3 if scope == "map" else 4)


# ---------------------------------------------------------------------------
# sweep drivers


def _report(p, budget, spaces, sets_, maps_, hits, best, exhausted):
    witnesses = [best] if best is not None else []
    if p.existential:
        verdict = FOUND if best is not None else EXHAUSTED
    elif best is not None:
        verdict = FOUND
    elif exhausted:
        verdict = EXHAUSTED
    else:
        verdict = HOLDS
    return SweepReport(
        proposition_id=p.id,
        kind=p.kind,
        description=p.description,
        budget=budget,
        spaces_checked=spaces,
        sets_checked=sets_,
        maps_checked=maps_,
        hits=hits,
        verdict=verdict,
        witnesses=witnesses,
    )


def _verify_spaces(p, budget):
    spaces = sets_ = hits = 0
    best = None
    exhausted = False
    try:
        for n in range(budget.max_n + 1):
            for t in enumerate_topologies(n, budget):
                fx = SpaceFacts(t)
                spaces += 1
                if p.scope == "space":
                    ok = p.evaluate(fx)
                    if not ok:
                        hits += 1
                        if best is None:
                            best = Witness(p.id, COUNTEREXAMPLE, t)
                    continue
                for a in t.subsets():
                    sets_ += 1
                    val = p.evaluate(fx, a)
                    if p.existential:
                        if val:
                            hits += 1
                            if best is None:
                                best = Witness(p.id, EXAMPLE, t, subset=a)
                    elif not val:
                        hits += 1
                        if best is None:
                            best = Witness(p.id, COUNTEREXAMPLE, t, subset=a)
    except BudgetExceeded:
        exhausted = True
    return _report(p, budget, spaces, sets_, 0, hits, best, exhausted)


def _map_count(tx: Topology, ty: Topology) -> int:
    return ty.n ** tx.n if tx.n else 1


def _pair_facts(tx: Topology, ty: Topology):
    """Continuity verdicts for every map tx -> ty.

    Returns [(assignment, cont, scl_ok)] in lexicographic assignment
    order, where cont maps each ContinuityClass to its verdict and
    scl_ok is the image form of strong irresoluteness.
    """
    table = class_table(tx)
    bitmaps = {
        cc: table.family_bitmap(sc) for cc, sc in CONTINUITY_BINDING.items()
    }
    sr_bm = table.family_bitmap(SetClass.SEMI_REGULAR)
    scl_tab = table.semi_closure_table
    nx_size = 1 << tx.n
    ny_size = 1 << ty.n
    out = []
    for f in enumerate_maps(tx, ty):
        pre = [preimage(f, b) for b in range(ny_size)]
        cont = {
            cc: all(bm >> pre[v] & 1 for v in ty.opens)
            for cc, bm in bitmaps.items()
        }
        cont[ContinuityClass.STRONGLY_IRRESOLUTE] = all(
            sr_bm >> q & 1 for q in pre
        )
        img = [image(f, a) for a in range(nx_size)]
        scl_ok = all(
            img[scl_tab[a]] & ~img[a] == 0 for a in range(nx_size)
        )
        out.append((f.assignment, cont, scl_ok))
    return out


_PAIR_FACTS_CACHE = {}


def _pair_facts_cached(tx, ty):
    if tx.n > 3 or ty.n > 3:
        return _pair_facts(tx, ty)
    key = (tx, ty)
    got = _PAIR_FACTS_CACHE.get(key)
    if got is None:
        got = _PAIR_FACTS_CACHE[key] = _pair_facts(tx, ty)
    return got


def _scan_pair(p, tx, ty):
    """(maps, hits, first witness) for one topology pair."""
    maps_ = hits = 0
    best = None
    for assignment, cont, scl_ok in _pair_facts_cached(tx, ty):
        maps_ += 1
        val = p.evaluate(cont, scl_ok)
        hit = val if p.existential else not val
        if hit:
            hits += 1
            if best is None:
                polarity = EXAMPLE if p.existential else COUNTEREXAMPLE
                best = Witness(
                    p.id, polarity, tx, codomain=ty, assignment=assignment
                )
    return maps_, hits, best


def _map_chunk_worker(args):
    pid, pairs = args
    p = proposition(pid)
    maps_ = hits = 0
    best = None
    for tx, ty in pairs:
        m, h, w = _scan_pair(p, tx, ty)
        maps_ += m
        hits += h
        if best is None:
            best = w
    return maps_, hits, best


def _verify_maps(p, budget, parallel=False, workers=None):
    try:
        topos = {
            n: list(enumerate_topologies(n, budget))
            for n in range(budget.max_n + 1)
        }
    except BudgetExceeded:
        return _report(p, budget, 0, 0, 0, 0, None, True)
    spaces = sum(len(v) for v in topos.values())
    pairs = [
        (tx, ty)
        for nx in range(budget.max_n + 1)
        for ny in range(budget.max_n + 1)
        for tx in topos[nx]
        for ty in topos[ny]
    ]
    total = sum(_map_count(tx, ty) for tx, ty in pairs)
    if total > budget.max_maps:
        return _report(p, budget, spaces, 0, 0, 0, None, True)
    maps_ = hits = 0
    best = None
    if parallel:
        chunk_size = 32
        chunks = [
            (p.id, pairs[i:i + chunk_size])
            for i in range(0, len(pairs), chunk_size)
        ]
        with Pool(processes=workers) as pool:
            for m, h, w in pool.imap(_map_chunk_worker, chunks):
                maps_ += m
                hits += h
                if best is None:
                    best = w
    else:
        for tx, ty in pairs:
            m, h, w = _scan_pair(p, tx, ty)
            maps_ += m
            hits += h
            if best is None:
                best = w
    return _report(p, budget, spaces, 0, maps_, hits, best, False)


def verify(p, budget: EnumerationBudget | None = None, parallel: bool = False,
           workers: int | None = None) -> SweepReport:
    """Exhaustively evaluate one proposition within the budget.

    Budget overruns surface as a budget-exhausted verdict, never as an
    exception.  parallel distributes map sweeps over worker processes;
    the report is byte-identical to the sequential one.
    """
    if isinstance(p, str):
        p = proposition(p)
    if budget is None:
        budget = default_budget(p.scope)
    if p.scope == "map":
        return _verify_maps(p, budget, parallel, workers)
    return _verify_spaces(p, budget)


def verify_all(ids=None, budget: EnumerationBudget | None = None,
               parallel: bool = False, workers: int | None = None):
    """Sweep the requested propositions (default: the whole registry)."""
    props = registry() if ids is None else [proposition(i) for i in ids]
    return [verify(p, budget, parallel, workers) for p in props]


def acceptable(p, report: SweepReport) -> bool:
    """Did this sweep outcome meet the proposition's expectation?

    Universal claims must hold exhaustively.  Existential claims must
    find a witness; running out of budget without one is inconclusive
    rather than failed, so it stays acceptable.  Exploratory claims are
    recorded, never gating.
    """
    if isinstance(p, str):
        p = proposition(p)
    if p.exploratory:
        return True
    if p.existential:
        return report.verdict in (FOUND, EXHAUSTED)
    return report.verdict == HOLDS


# ---------------------------------------------------------------------------
# directed counterexample search and witness replay


_KNOWN_GAPS = {
    (SetClass.AB_SET, SetClass.A_SET): "nonrev-ab-a",
    (SetClass.B_SET, SetClass.AB_SET): "nonrev-ab-b",
    (SetClass.SEMI_OPEN, SetClass.AB_SET): "nonrev-ab-so",
    (SetClass.AB_SET, SetClass.LOCALLY_CLOSED): "indep-ab-lc",
    (SetClass.LOCALLY_CLOSED, SetClass.AB_SET): "indep-lc-ab",
}


def find_counterexample(class_from: SetClass, class_to: SetClass,
                        budget: EnumerationBudget | None = None):
    """First set in class_from but not class_to, in canonical order.

    Returns None when the inclusion holds everywhere within budget.  The
    witness reuses the registered proposition id when the gap is one the
    registry tracks, so replay goes through the same evaluator.
    """
    budget = budget or default_budget("set")
    key = _KNOWN_GAPS.get((class_from, class_to))
    pid = key or f"counterexample-{class_from.value}-to-{class_to.value}"
    polarity = EXAMPLE if key else COUNTEREXAMPLE
    for n in range(budget.max_n + 1):
        for t in enumerate_topologies(n, budget):
            table = class_table(t)
            gap = table.family_bitmap(class_from) & ~table.family_bitmap(
                class_to
            )
            if gap:
                a = (gap & -gap).bit_length() - 1
                return Witness(pid, polarity, t, subset=a)
    return None


def _decode_witness(doc):
    if "map" in doc:
        f, _, _ = decode_map(doc["map"])
        return Witness(
            doc["proposition"], doc["polarity"], f.domain,
            codomain=f.codomain, assignment=f.assignment,
        )
    t, points = decode_space(doc["space"])
    subset = None
    if "subset" in doc:
        index = {name: x for x, name in enumerate(points)}
        subset = names_to_mask(doc["subset"], index)
    return Witness(doc["proposition"], doc["polarity"], t, subset=subset)


def _evaluate_witness(w: Witness) -> bool:
    pid = w.proposition_id
    if pid in _BY_ID:
        p = _BY_ID[pid]
        if p.scope == "map":
            facts = _pair_facts_cached(w.topology, w.codomain)
            for assignment, cont, scl_ok in facts:
                if assignment == tuple(w.assignment):
                    return p.evaluate(cont, scl_ok)
            raise ValueError("witness map not found in its own pair")
        fx = SpaceFacts(w.topology)
        if p.scope == "space":
            return p.evaluate(fx)
        if w.subset is None:
            raise ValueError(f"witness for {pid!r} needs a subset")
        return p.evaluate(fx, w.subset)
    if pid.startswith("counterexample-") and "-to-" in pid:
        frm, to = pid[len("counterexample-"):].split("-to-", 1)
        cf, ct = SetClass(frm), SetClass(to)
        table = class_table(w.topology)
        return not table.contains(w.subset, cf) or table.contains(
            w.subset, ct
        )
    raise KeyError(f"cannot replay unknown proposition {pid!r}")


def replay_witness(doc) -> bool:
    """Re-evaluate a (possibly serialized) witness.

    True when the evaluation reproduces the recorded polarity: True for
    an existential example, False for a counterexample.
    """
    w = doc if isinstance(doc, Witness) else _decode_witness(doc)
    val = _evaluate_witness(w)
    if w.polarity == EXAMPLE:
        return val is True
    return val is False

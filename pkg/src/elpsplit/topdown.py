"""Top-down epistemic splitting.

The top of a splitting is solved once, on its own, with every subjective
literal that looks into the bottom replaced by a fresh atom (``kp`` for
``K p``, ``nkp`` for ``not K p``) plus a disjunction ``kp | nkp``.  Each
resulting interface world view carries the epistemic assumptions it was
built on (its requisite set); bottom world views that fulfil those
assumptions are merged with it.

Two composition rules are provided.  ``tdespb_candidates`` merges whole
bottom world views.  ``tdesp_candidates`` first rewrites ``K L`` to ``L`` in
the bottom for the assumptions the top's constraints depend on, and may
keep only part of a bottom world view.
"""
from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .errors import NotHomogeneous
from .semantics import DEFAULT_MAX_SUBJECTIVE, Semantics, WorldView, world_views, wv_satisfies
from .splitting import Splitting, esp_world_views, split, wbt
from .syntax import Atom, ObjectiveLiteral, Program, Rule, SubjectiveLiteral, canonical_world_views

__all__ = [
    "DetachedTop",
    "RequisiteSets",
    "InterfaceWorldView",
    "EquivalenceReport",
    "interface_literals",
    "detach",
    "interface_world_views",
    "requisite_sets",
    "strip_fresh",
    "fulfills",
    "top_down_influence",
    "tdespb_candidates",
    "tdesp_candidates",
    "check_equivalence",
]


@dataclass(frozen=True)
class InterfacePair:
    literal: ObjectiveLiteral
    known: Atom
    unknown: Atom

    @property
    def positive(self) -> SubjectiveLiteral:
        return SubjectiveLiteral(self.literal)

    @property
    def negative(self) -> SubjectiveLiteral:
        return SubjectiveLiteral(self.literal, True)


@dataclass(frozen=True)
class DetachedTop:
    program: Program
    pairs: tuple[InterfacePair, ...]
    splitting: Splitting = field(repr=False)

    @property
    def interface(self) -> dict[SubjectiveLiteral, Atom]:
        mapping = {}
        for pair in self.pairs:
            mapping[pair.positive] = pair.known
            mapping[pair.negative] = pair.unknown
        return mapping

    @property
    def fresh_atoms(self) -> frozenset[Atom]:
        return frozenset(a for p in self.pairs for a in (p.known, p.unknown))

    @property
    def constrained_pairs(self) -> tuple[InterfacePair, ...]:
        """Pairs with either fresh atom inside a constraint of the detached top."""
        in_constraints = {
            a for r in self.program if r.is_constraint for a in r.obj_atoms
        }
        return tuple(
            p for p in self.pairs if p.known in in_constraints or p.unknown in in_constraints
        )


@dataclass(frozen=True)
class RequisiteSets:
    es: frozenset[SubjectiveLiteral]
    ec: frozenset[SubjectiveLiteral]
    rq: frozenset[SubjectiveLiteral]

    @staticmethod
    def positive_part(literals: Iterable[SubjectiveLiteral]) -> frozenset[SubjectiveLiteral]:
        """Only the literals required to be true (the ``K L`` ones)."""
        return frozenset(l for l in literals if not l.epistemically_negated)


@dataclass(frozen=True)
class InterfaceWorldView:
    detached: WorldView
    world_view: WorldView
    requisites: RequisiteSets


def interface_literals(sp: Splitting) -> frozenset[SubjectiveLiteral]:
    """Subjective literals of the top whose atom lives only in the bottom, plus negations."""
    top_atoms = frozenset().union(*(r.head | r.obj_atoms for r in sp.top))
    bottom_atoms = sp.bottom.atoms
    found = set()
    for rule in sp.top:
        for lit in rule.body_subj:
            if lit.atom in bottom_atoms and lit.atom not in top_atoms:
                found.add(lit.positive)
                found.add(lit.positive.complement())
    return frozenset(found)


def _fresh_names(literal: ObjectiveLiteral, taken: set[Atom]) -> tuple[Atom, Atom]:
    atom = literal.atom
    base = ("not_" if literal.default_negated else "") + atom.predicate
    suffix = ""
    n = 0
    while True:
        known = Atom(f"k{base}{suffix}", atom.args)
        unknown = Atom(f"nk{base}{suffix}", atom.args)
        if known not in taken and unknown not in taken:
            taken.update((known, unknown))
            return known, unknown
        n += 1
        suffix = f"_{n}"


def detach(sp: Splitting) -> DetachedTop:
    """Replace interface literals of the top by fresh atoms and add ``kl | nkl`` facts."""
    cores = sorted({l.inner for l in interface_literals(sp)}, key=str)
    taken = set(sp.bottom.atoms | sp.top.atoms)
    pairs = tuple(InterfacePair(c, *_fresh_names(c, taken)) for c in cores)
    mapping = {}
    for pair in pairs:
        mapping[pair.positive] = pair.known
        mapping[pair.negative] = pair.unknown
    rules = []
    for rule in sp.top:
        moved = {l for l in rule.body_subj if l in mapping}
        rules.append(
            Rule(
                rule.head,
                rule.body_obj | {ObjectiveLiteral(mapping[l]) for l in moved},
                rule.body_subj - moved,
            )
        )
    rules.extend(Rule(frozenset((p.known, p.unknown))) for p in pairs)
    return DetachedTop(Program(tuple(rules)), pairs, sp)


def _split_on_pairs(world_view: WorldView, pairs: Sequence[InterfacePair]) -> list[WorldView]:
    fragments = [world_view]
    for pair in pairs:
        next_fragments = []
        for w in fragments:
            for atom in (pair.known, pair.unknown):
                part = frozenset(s for s in w if atom in s)
                if part:
                    next_fragments.append(part)
        fragments = next_fragments
    return fragments


def interface_world_views(
    dt: DetachedTop,
    semantics: Semantics | str,
    *,
    strategy: str = "fixed",
    max_subjective: int = DEFAULT_MAX_SUBJECTIVE,
) -> list[WorldView]:
    """World views of the detached top, each homogeneous on every pair.

    ``strategy="split"`` solves the detached top as one program and then
    splits each world view on every ``kl | nkl`` pair.  ``"fixed"`` (the
    default) solves it once per choice of one atom from every pair, so the
    top's own subjective literals are evaluated under a single interface
    assumption.  The two agree whenever the top has no subjective literals
    of its own.
    """
    semantics = Semantics.parse(semantics)
    if strategy == "split":
        found = set()
        for w in world_views(dt.program, semantics, max_subjective=max_subjective):
            found.update(_split_on_pairs(w, dt.pairs))
        return canonical_world_views(found)
    if strategy != "fixed":
        raise ValueError(f"unknown strategy: {strategy!r}")
    choice_facts = {Rule(frozenset((p.known, p.unknown))) for p in dt.pairs}
    body = tuple(r for r in dt.program if r not in choice_facts)
    found = set()
    for choice in itertools.product(*((p.known, p.unknown) for p in dt.pairs)):
        facts = tuple(Rule(frozenset((a,))) for a in choice)
        found.update(world_views(Program(body + facts), semantics, max_subjective=max_subjective))
    return canonical_world_views(found)


def requisite_sets(w_prime: WorldView, dt: DetachedTop) -> RequisiteSets:
    es = set()
    for pair in dt.pairs:
        with_known = sum(1 for s in w_prime if pair.known in s)
        if 0 < with_known < len(w_prime):
            raise NotHomogeneous(f"world view mixes {pair.known} and {pair.unknown}")
        es.add(pair.positive if with_known == len(w_prime) else pair.negative)
    constrained = {p.literal for p in dt.constrained_pairs}
    ec = frozenset(l for l in es if l.inner in constrained)
    return RequisiteSets(frozenset(es), ec, frozenset(es) - ec)


def strip_fresh(w_prime: WorldView, dt: DetachedTop) -> WorldView:
    fresh = dt.fresh_atoms
    return frozenset(s - fresh for s in w_prime)


def fulfills(world_view: Iterable[frozenset[Atom]], literals: Iterable[SubjectiveLiteral]) -> bool:
    world_view = list(world_view)
    return all(wv_satisfies(world_view, l) for l in literals)


def top_down_influence(bottom: Program, ec: Iterable[SubjectiveLiteral]) -> Program:
    """Rewrite each body occurrence of ``K L`` in ``ec`` to the objective ``L``."""
    required = {l for l in ec if not l.epistemically_negated}
    if not required:
        return bottom
    rules = []
    for rule in bottom:
        hit = rule.body_subj & required
        if hit:
            rule = Rule(rule.head, rule.body_obj | {l.inner for l in hit}, rule.body_subj - hit)
        rules.append(rule)
    return Program(tuple(rules))


def _interface(
    sp: Splitting, semantics: Semantics, strategy: str, max_subjective: int
) -> tuple[DetachedTop, list[InterfaceWorldView]]:
    dt = detach(sp)
    entries = [
        InterfaceWorldView(w, strip_fresh(w, dt), requisite_sets(w, dt))
        for w in interface_world_views(
            dt, semantics, strategy=strategy, max_subjective=max_subjective
        )
    ]
    return dt, entries


def tdespb_candidates(
    program: Program,
    u: Iterable[Atom],
    semantics: Semantics | str,
    *,
    inner: Sequence[Iterable[Atom]] = (),
    strategy: str = "fixed",
    max_subjective: int = DEFAULT_MAX_SUBJECTIVE,
) -> list[WorldView]:
    """Whole bottom world views fulfilling a top world view's requisite set, merged with it.

    ``inner`` holds splitting sets for the bottom (innermost first); the
    bottom's world views are then themselves composed top-down.
    """
    semantics = Semantics.parse(semantics)
    sp = split(u, program)
    if inner:
        bottoms = tdespb_candidates(
            sp.bottom,
            inner[-1],
            semantics,
            inner=inner[:-1],
            strategy=strategy,
            max_subjective=max_subjective,
        )
    else:
        bottoms = world_views(sp.bottom, semantics, max_subjective=max_subjective)
    _, entries = _interface(sp, semantics, strategy, max_subjective)
    found = set()
    for entry in entries:
        for wb in bottoms:
            if fulfills(wb, entry.requisites.es):
                found.add(wbt(wb, entry.world_view))
    return canonical_world_views(found)


def _fulfilling_subsets(
    world_view: WorldView, required: Iterable[SubjectiveLiteral], mode: str
) -> list[WorldView]:
    required = list(required)
    # 'K L' parts are closed under subsets, 'not K L' parts under supersets,
    # so every fulfilling subset sits inside the largest candidate below
    keep = frozenset(
        s
        for s in world_view
        if all(l.inner.holds(s) for l in required if not l.epistemically_negated)
    )
    negatives = [l for l in required if l.epistemically_negated]
    if not keep or not fulfills(keep, negatives):
        return []
    if mode == "maximal":
        return [keep]
    if mode != "all":
        raise ValueError(f"unknown subset mode: {mode!r}")
    members = sorted(keep, key=lambda s: sorted(map(str, s)))
    found = []
    for size in range(1, len(members) + 1):
        for combo in itertools.combinations(members, size):
            if fulfills(combo, negatives):
                found.append(frozenset(combo))
    return found


def tdesp_candidates(
    program: Program,
    u: Iterable[Atom],
    semantics: Semantics | str,
    mode: str = "maximal",
    *,
    inner: Sequence[Iterable[Atom]] = (),
    strategy: str = "fixed",
    max_subjective: int = DEFAULT_MAX_SUBJECTIVE,
) -> list[WorldView]:
    """Candidates allowing part of a bottom world view after top-down influence.

    When a top world view's constraint set is empty the whole bottom world
    view must fulfil its requisite set.  Otherwise any non-empty subset that
    fulfils it may be used: ``mode="maximal"`` keeps the largest such
    subsets, ``mode="all"`` keeps every one.
    """
    semantics = Semantics.parse(semantics)
    sp = split(u, program)
    _, entries = _interface(sp, semantics, strategy, max_subjective)
    bottoms_by_ec: dict[frozenset[SubjectiveLiteral], list[WorldView]] = {}
    found = set()
    for entry in entries:
        ec = entry.requisites.ec
        if ec not in bottoms_by_ec:
            influenced = top_down_influence(sp.bottom, ec)
            if inner:
                bottoms_by_ec[ec] = tdesp_candidates(
                    influenced,
                    inner[-1],
                    semantics,
                    mode,
                    inner=inner[:-1],
                    strategy=strategy,
                    max_subjective=max_subjective,
                )
            else:
                bottoms_by_ec[ec] = world_views(
                    influenced, semantics, max_subjective=max_subjective
                )
        for wb in bottoms_by_ec[ec]:
            if not ec:
                chosen = [wb] if fulfills(wb, entry.requisites.es) else []
            else:
                chosen = _fulfilling_subsets(wb, entry.requisites.es, mode)
            for part in chosen:
                found.add(wbt(part, entry.world_view))
    return canonical_world_views(found)


@dataclass(frozen=True)
class EquivalenceReport:
    program: str
    semantics: Semantics
    splitting_set: frozenset[Atom]
    direct: list[WorldView]
    esp: list[WorldView]
    tdespb: list[WorldView]
    tdesp: list[WorldView]
    traces: list[InterfaceWorldView]
    degenerate: bool = False

    @property
    def verdicts(self) -> dict[str, bool]:
        direct = set(self.direct)
        return {
            "esp_eq_direct": set(self.esp) == direct,
            "tdespb_eq_direct": set(self.tdespb) == direct,
            "tdesp_eq_direct": set(self.tdesp) == direct,
            "tdespb_eq_esp": set(self.tdespb) == set(self.esp),
        }


def check_equivalence(
    program: Program,
    u: Iterable[Atom],
    semantics: Semantics | str,
    *,
    name: str = "<program>",
    mode: str = "maximal",
    inner: Sequence[Iterable[Atom]] = (),
    strategy: str = "fixed",
    max_subjective: int = DEFAULT_MAX_SUBJECTIVE,
) -> EquivalenceReport:
    """Compute the direct and the three composed world-view collections side by side."""
    semantics = Semantics.parse(semantics)
    sp = split(u, program)
    _, entries = _interface(sp, semantics, strategy, max_subjective)
    opts = {"inner": inner, "max_subjective": max_subjective}
    return EquivalenceReport(
        program=name,
        semantics=semantics,
        splitting_set=sp.u,
        direct=world_views(program, semantics, max_subjective=max_subjective),
        esp=esp_world_views(program, sp.u, semantics, **opts),
        tdespb=tdespb_candidates(program, sp.u, semantics, strategy=strategy, **opts),
        tdesp=tdesp_candidates(program, sp.u, semantics, mode, strategy=strategy, **opts),
        traces=entries,
        degenerate=not sp.bottom.rules or not sp.top.rules,
    )

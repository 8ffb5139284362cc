"""Epistemic splitting sets and bottom-up world-view composition."""
from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import CapExceeded, InvalidSplittingSet
from .semantics import DEFAULT_MAX_SUBJECTIVE, Semantics, WorldView, world_views, wv_satisfies
from .syntax import BOTTOM, TOP, Atom, ObjectiveLiteral, Program, Rule, canonical_world_views

DEFAULT_MAX_ATOMS = 16

__all__ = [
    "Splitting",
    "is_splitting_set",
    "split",
    "enumerate_splitting_sets",
    "subjective_reduct",
    "wbt",
    "esp_world_views",
    "DEFAULT_MAX_ATOMS",
]


@dataclass(frozen=True)
class Splitting:
    u: frozenset[Atom]
    bottom: Program
    top: Program


def _in_bottom(rule: Rule, u: frozenset[Atom]) -> bool:
    return rule.atoms <= u


def _in_top(rule: Rule, u: frozenset[Atom]) -> bool:
    return not ((rule.obj_atoms | rule.head) & u)


def is_splitting_set(u: Iterable[Atom], program: Program) -> bool:
    u = frozenset(u)
    return all(_in_bottom(r, u) or _in_top(r, u) for r in program)


def split(u: Iterable[Atom], program: Program) -> Splitting:
    """Partition ``program`` along the epistemic splitting set ``u``.

    Every rule that may go to the top does, so subjective rules over
    non-``u`` heads and pure subjective constraints always end up there.
    """
    u = frozenset(u)
    bottom, top = [], []
    for rule in program:
        if _in_top(rule, u):
            top.append(rule)
        elif _in_bottom(rule, u):
            bottom.append(rule)
        else:
            raise InvalidSplittingSet(f"rule '{rule}' violates both splitting conditions")
    return Splitting(u, Program(tuple(bottom)), Program(tuple(top)))


def enumerate_splitting_sets(
    program: Program, *, max_atoms: int = DEFAULT_MAX_ATOMS
) -> list[frozenset[Atom]]:
    """All splitting sets, ordered by size then by sorted atom names."""
    atoms = sorted(program.atoms)
    if len(atoms) > max_atoms:
        raise CapExceeded(f"{len(atoms)} atoms exceed the cap of {max_atoms}")
    index = {a: i for i, a in enumerate(atoms)}

    def mask(items: Iterable[Atom]) -> int:
        m = 0
        for a in items:
            m |= 1 << index[a]
        return m

    rules = [(mask(r.atoms), mask(r.head | r.obj_atoms)) for r in program]
    found = []
    for size in range(len(atoms) + 1):
        for combo in itertools.combinations(range(len(atoms)), size):
            u = sum(1 << i for i in combo)
            if all(every & ~u == 0 or not (anchored & u) for every, anchored in rules):
                found.append(frozenset(atoms[i] for i in combo))
    return found


def subjective_reduct(top: Program, u: Iterable[Atom], world_view: WorldView) -> Program:
    """Evaluate the top's subjective literals over ``u`` in a bottom world view."""
    u = frozenset(u)
    rules = []
    for rule in top:
        touched = {l for l in rule.body_subj if l.atom in u}
        if not touched:
            rules.append(rule)
            continue
        body = set(rule.body_obj)
        for lit in touched:
            body.add(ObjectiveLiteral(TOP if wv_satisfies(world_view, lit) else BOTTOM))
        rules.append(Rule(rule.head, frozenset(body), rule.body_subj - touched))
    return Program(tuple(rules))


def wbt(bottom: Iterable[frozenset[Atom]], top: Iterable[frozenset[Atom]]) -> WorldView:
    """Pairwise unions of bottom and top belief sets."""
    top = list(top)
    return frozenset(b | t for b in bottom for t in top)


def esp_world_views(
    program: Program,
    u: Iterable[Atom],
    semantics: Semantics | str,
    *,
    inner: Sequence[Iterable[Atom]] = (),
    max_subjective: int = DEFAULT_MAX_SUBJECTIVE,
) -> list[WorldView]:
    """World views built bottom-up from solutions of the bottom and the reduced top.

    ``inner`` lists further splitting sets for the bottom, innermost first;
    the bottom is then composed the same way before the top is attached.
    """
    semantics = Semantics.parse(semantics)
    sp = split(u, program)
    if inner:
        bottoms = esp_world_views(
            sp.bottom, inner[-1], semantics, inner=inner[:-1], max_subjective=max_subjective
        )
    else:
        bottoms = world_views(sp.bottom, semantics, max_subjective=max_subjective)
    found = set()
    for wb in bottoms:
        for wt in world_views(
            subjective_reduct(sp.top, sp.u, wb), semantics, max_subjective=max_subjective
        ):
            found.add(wbt(wb, wt))
    return canonical_world_views(found)

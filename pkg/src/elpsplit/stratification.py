"""Epistemic stratification: levels where subjective bodies sit strictly below."""
from __future__ import annotations

import graphlib
from dataclasses import dataclass

from .syntax import Atom, Program

__all__ = ["StratificationResult", "stratify", "check_levels"]


@dataclass(frozen=True)
class StratificationResult:
    stratified: bool
    levels: dict[Atom, int] | None = None
    violation: list[Atom] | None = None


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # smaller representative wins so results do not depend on rule order
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def check_levels(program: Program, levels: dict[Atom, int]) -> bool:
    """Re-check both stratification conditions for a given level map."""
    for rule in program:
        objective = rule.head | rule.obj_atoms
        if len({levels[a] for a in objective}) > 1:
            return False
        if any(levels[a] <= levels[b] for a in objective for b in rule.subj_atoms):
            return False
    return True


def stratify(program: Program) -> StratificationResult:
    """Find the least level map, or a cycle of strict level constraints.

    Atoms sharing a rule outside its subjective body are merged; each
    subjective-body atom must then lie strictly below its rule's class.
    Levels are longest-path depths in the resulting class graph.
    """
    atoms = sorted(program.atoms)
    uf = _UnionFind(atoms)
    for rule in program:
        objective = sorted(rule.head | rule.obj_atoms)
        for a in objective[1:]:
            uf.union(objective[0], a)
    below: dict[Atom, set[Atom]] = {uf.find(a): set() for a in atoms}
    for rule in program:
        objective = rule.head | rule.obj_atoms
        if not objective:
            continue
        upper = uf.find(next(iter(objective)))
        below[upper].update(uf.find(b) for b in rule.subj_atoms)

    sorter = graphlib.TopologicalSorter({c: sorted(lower) for c, lower in below.items()})
    try:
        order = list(sorter.static_order())
    except graphlib.CycleError as exc:
        cycle = exc.args[1]
        members = sorted({a for a in atoms if uf.find(a) in set(cycle)})
        return StratificationResult(False, violation=members)

    depth: dict[Atom, int] = {}
    for cls in order:
        depth[cls] = max((depth[b] + 1 for b in below[cls]), default=0)
    return StratificationResult(True, levels={a: depth[uf.find(a)] for a in atoms})

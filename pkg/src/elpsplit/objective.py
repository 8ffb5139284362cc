"""Answer sets of ground objective programs.

Candidates are enumerated by ascending cardinality; a candidate ``I`` is an
answer set iff it is a minimal model of the GL-reduct of the program
w.r.t. ``I``.  Interpretations are packed into bitmasks over the program's
atom universe so the subset checks stay cheap at desk scale.
"""
from __future__ import annotations

import itertools
from collections.abc import Iterable
from typing import NamedTuple

from .errors import InconsistentProgram, NotObjectiveError
from .syntax import BOTTOM, TOP, Atom, Program, Rule, canonical_interpretations

Interpretation = frozenset[Atom]

__all__ = [
    "Interpretation",
    "gl_reduct",
    "least_model",
    "answer_sets",
    "is_classical_model",
    "gamma",
]


def _require_objective(program: Program) -> None:
    if not program.is_objective:
        raise NotObjectiveError("program contains subjective literals")


def gl_reduct(program: Program, interpretation: Iterable[Atom]) -> Program:
    """The Gelfond-Lifschitz reduct ``program^I``."""
    _require_objective(program)
    interpretation = frozenset(interpretation)
    rules = []
    for rule in program:
        body = []
        for lit in rule.body_obj:
            if not lit.default_negated:
                body.append(lit)
            elif not lit.holds(interpretation):
                break
        else:
            rules.append(Rule(rule.head, frozenset(body)))
    return Program(tuple(rules))


def least_model(program: Program) -> Interpretation:
    """Least model of a positive program with at most one head atom per rule.

    Constraints are ignored by the fixpoint and checked afterwards.
    """
    for rule in program:
        if rule.body_subj or any(l.default_negated for l in rule.body_obj):
            raise ValueError(f"rule is not positive: {rule}")
        if rule.is_disjunctive:
            raise ValueError(f"disjunctive head: {rule}")
    model: set[Atom] = set()
    pending = [r for r in program if r.head]
    changed = True
    while changed:
        changed = False
        remaining = []
        for rule in pending:
            if all(l.holds(model) for l in rule.body_obj):
                model |= rule.head
                changed = True
            else:
                remaining.append(rule)
        pending = remaining
    for rule in program:
        if not rule.head and all(l.holds(model) for l in rule.body_obj):
            raise InconsistentProgram(f"constraint violated by least model: {rule}")
    return frozenset(model)


def gamma(program: Program, interpretation: Iterable[Atom]) -> Interpretation | None:
    """``Γ(I)``: least model of the reduct, or None if a constraint fires."""
    try:
        return least_model(gl_reduct(program, interpretation))
    except InconsistentProgram:
        return None


def is_classical_model(program: Program, interpretation: Iterable[Atom]) -> bool:
    _require_objective(program)
    interpretation = frozenset(interpretation)
    for rule in program:
        if all(l.holds(interpretation) for l in rule.body_obj) and not (rule.head & interpretation):
            return False
    return True


class _Compiled(NamedTuple):
    head: int
    pos: int
    neg: int
    dneg: int


def _compile(program: Program, index: dict[Atom, int]) -> list[_Compiled]:
    compiled = []
    for rule in program:
        pos = neg = dneg = 0
        never = False
        for lit in rule.body_obj:
            # truth constants either vanish or make the body unsatisfiable
            if lit.atom in (TOP, BOTTOM):
                if lit.holds(()) is False:
                    never = True
                continue
            bit = 1 << index[lit.atom]
            if lit.doubly_negated:
                dneg |= bit
            elif lit.default_negated:
                neg |= bit
            else:
                pos |= bit
        if never:
            continue
        head = 0
        for atom in rule.head:
            head |= 1 << index[atom]
        compiled.append(_Compiled(head, pos, neg, dneg))
    return compiled


def _is_model(reduct: list[tuple[int, int]], mask: int) -> bool:
    for head, pos in reduct:
        if pos & mask == pos and not head & mask:
            return False
    return True


def _is_answer_set(rules: list[_Compiled], mask: int) -> bool:
    reduct = [
        (r.head, r.pos)
        for r in rules
        if not r.neg & mask and r.dneg & mask == r.dneg
    ]
    if not _is_model(reduct, mask):
        return False
    # every atom needs a rule that supports it alone, else dropping it keeps a model
    supported = 0
    for head, pos in reduct:
        if pos & mask == pos:
            h = head & mask
            if h & (h - 1) == 0:
                supported |= h
    if supported != mask:
        return False
    if mask == 0:
        return True
    sub = (mask - 1) & mask
    while True:
        if _is_model(reduct, sub):
            return False
        if sub == 0:
            return True
        sub = (sub - 1) & mask


def answer_sets(program: Program) -> list[Interpretation]:
    """All answer sets, sorted as lists of atom strings."""
    _require_objective(program)
    atoms = sorted(program.atoms)
    index = {a: i for i, a in enumerate(atoms)}
    rules = _compile(program, index)
    # with 'not not a' answer sets need not form an anti-chain
    prune = not any(r.dneg for r in rules)
    found: list[int] = []
    for size in range(len(atoms) + 1):
        for combo in itertools.combinations(range(len(atoms)), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if prune and any(f & mask == f for f in found):
                continue
            if _is_answer_set(rules, mask):
                found.append(mask)
    return canonical_interpretations(
        frozenset(atoms[i] for i in range(len(atoms)) if mask >> i & 1) for mask in found
    )


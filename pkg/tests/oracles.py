"""Brute-force reference implementations, written against plain strings and sets.

Nothing here calls the solver code under test; programs are read only
through their public rule fields and then handled as tuples of str sets.
"""
from __future__ import annotations

import itertools

from elpsplit.syntax import Program


def _subsets(items):
    items = sorted(items)
    for n in range(len(items) + 1):
        for combo in itertools.combinations(items, n):
            yield frozenset(combo)


def flatten(program: Program):
    """Rules as (head, pos, neg, subj); subj holds (atom, inner_negated, k_negated)."""
    rules = []
    for r in program:
        head = {str(a) for a in r.head}
        pos = {str(l.atom) for l in r.body_obj if not l.default_negated}
        neg = {str(l.atom) for l in r.body_obj if l.default_negated}
        subj = {
            (str(l.inner.atom), l.inner.default_negated, l.epistemically_negated)
            for l in r.body_subj
        }
        rules.append((head, pos, neg, subj))
    return rules


def atoms_of(rules):
    found = set()
    for head, pos, neg, subj in rules:
        found |= head | pos | neg | {a for a, _, _ in subj}
    return found


def is_model(rules, interpretation) -> bool:
    for head, pos, neg, _ in rules:
        if pos <= interpretation and not (neg & interpretation) and not (head & interpretation):
            return False
    return True


def oracle_answer_sets(rules, universe=None) -> set[frozenset[str]]:
    """Every I that is a minimal model of its own GL-reduct, by exhaustive search."""
    universe = atoms_of(rules) if universe is None else universe
    found = set()
    for candidate in _subsets(universe):
        reduct = [(h, p, set(), s) for h, p, n, s in rules if not (n & candidate)]
        if not is_model(reduct, candidate):
            continue
        if any(is_model(reduct, smaller) for smaller in _subsets(candidate) if smaller != candidate):
            continue
        found.add(candidate)
    return found


def _literal_true(atom, inner_negated, interpretation) -> bool:
    return (atom in interpretation) != inner_negated


def _known(world_view, atom, inner_negated) -> bool:
    return all(_literal_true(atom, inner_negated, s) for s in world_view)


def oracle_world_views(program: Program, semantics: str) -> set[frozenset[frozenset[str]]]:
    """World views under 'g91' or 'k15' by guessing the truth of every K-core.

    Subjective literals are folded into fresh objective atoms so the
    exhaustive answer-set oracle can solve each reduct.
    """
    rules = flatten(program)
    universe = atoms_of(rules)
    cores = sorted({(a, n) for _, _, _, subj in rules for a, n, _ in subj})
    found = set()
    for guess in itertools.product((True, False), repeat=len(cores)):
        known = dict(zip(cores, guess))
        reduct = []
        for head, pos, neg, subj in rules:
            pos, neg = set(pos), set(neg)
            blocked = False
            for atom, inner_negated, k_negated in subj:
                holds = known[(atom, inner_negated)] != k_negated
                if not holds:
                    blocked = True
                elif semantics == "k15" and not k_negated:
                    (neg if inner_negated else pos).add(atom)
            if not blocked:
                reduct.append((head, pos, neg, set()))
        candidate = frozenset(oracle_answer_sets(reduct, universe))
        if candidate and all(_known(candidate, a, n) == v for (a, n), v in known.items()):
            found.add(candidate)
    return found


def oracle_stratified(program: Program) -> bool:
    """Search for any level map with at most |At| levels by backtracking."""
    rules = flatten(program)
    atoms = sorted(atoms_of(rules))
    groups = [(h | p | n, {a for a, _, _ in s}) for h, p, n, s in rules]
    levels: dict[str, int] = {}

    def consistent() -> bool:
        for objective, subjective in groups:
            assigned = {levels[a] for a in objective if a in levels}
            if len(assigned) > 1:
                return False
            for a in objective:
                for b in subjective:
                    if a in levels and b in levels and levels[a] <= levels[b]:
                        return False
        return True

    def search(i: int) -> bool:
        if i == len(atoms):
            return True
        for level in range(len(atoms)):
            levels[atoms[i]] = level
            if consistent() and search(i + 1):
                return True
            del levels[atoms[i]]
        return False

    return search(0)


def as_strings(collection) -> set[frozenset[frozenset[str]]]:
    """Library world views converted to the oracle's string form."""
    return {frozenset(frozenset(map(str, s)) for s in w) for w in collection}

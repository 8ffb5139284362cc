"""World views of ground epistemic programs.

Every supported semantics defines world views as fixpoints: ``W`` is a world
view iff ``W`` is non-empty and equals the answer sets of some reduct of the
program w.r.t. ``W``.  The reducts only look at which subjective literals
``W`` satisfies, so the search guesses a truth value for each distinct
``K L`` of the program, builds the reduct for that guess, and keeps the
resulting answer sets when they reproduce the guess.
"""
from __future__ import annotations

import enum
import itertools
from collections.abc import Callable, Iterable

from .errors import CapExceeded
from .objective import Interpretation, answer_sets
from .syntax import (
    BOTTOM,
    TOP,
    ObjectiveLiteral,
    Program,
    Rule,
    SubjectiveLiteral,
    canonical_world_views,
)

WorldView = frozenset[Interpretation]

DEFAULT_MAX_SUBJECTIVE = 10

__all__ = [
    "WorldView",
    "Semantics",
    "wv_satisfies",
    "wv_satisfies_rule",
    "g91_reduct",
    "k15_reduct",
    "reduct",
    "world_views",
    "is_world_view",
    "s16_filter",
    "unknown_literals",
    "DEFAULT_MAX_SUBJECTIVE",
]


class Semantics(enum.Enum):
    G91 = "g91"
    K15 = "k15"
    K15_CLASSIC = "k15-classic"
    # satisfied 'not K L' becomes 'not L'; kept for comparison only
    K15_INNER = "k15-inner"
    S16 = "s16"

    @classmethod
    def parse(cls, name: str | Semantics) -> Semantics:
        if isinstance(name, Semantics):
            return name
        try:
            return cls(name.lower())
        except ValueError:
            try:
                return cls[name.upper().replace("-", "_")]
            except KeyError:
                raise ValueError(f"unknown semantics: {name!r}") from None

    def __str__(self) -> str:
        return self.value


def wv_satisfies(world_view: Iterable[Interpretation], literal: SubjectiveLiteral) -> bool:
    """``W |= K L`` iff ``L`` holds in every belief set; ``not K L`` is the complement."""
    known = all(literal.inner.holds(s) for s in world_view)
    return not known if literal.epistemically_negated else known


def wv_satisfies_rule(world_view: WorldView, rule: Rule) -> bool:
    """Whether ``rule`` holds in every belief set of ``world_view``.

    Objective literals are read in each belief set, subjective ones in the
    whole world view.
    """
    if not all(wv_satisfies(world_view, l) for l in rule.body_subj):
        return True
    return all(
        rule.head & s or not all(l.holds(s) for l in rule.body_obj) for s in world_view
    )


def _rewrite(
    program: Program,
    truth: Callable[[SubjectiveLiteral], bool],
    semantics: Semantics,
) -> Program:
    rules = []
    for rule in program:
        if not rule.body_subj:
            rules.append(rule)
            continue
        body = set(rule.body_obj)
        for lit in rule.body_subj:
            if not truth(lit):
                body.add(ObjectiveLiteral(BOTTOM))
            elif semantics is Semantics.G91:
                body.add(ObjectiveLiteral(TOP))
            elif not lit.epistemically_negated:
                body.add(lit.inner)
            elif semantics is Semantics.K15_INNER:
                body.add(lit.inner.negation())
            else:
                body.add(ObjectiveLiteral(TOP))
        rules.append(Rule(rule.head, frozenset(body)))
    return Program(tuple(rules))


def g91_reduct(program: Program, world_view: WorldView) -> Program:
    """Replace satisfied subjective literals by ``#true`` and the rest by ``#false``."""
    return _rewrite(program, lambda l: wv_satisfies(world_view, l), Semantics.G91)


def k15_reduct(
    program: Program, world_view: WorldView, variant: Semantics = Semantics.K15
) -> Program:
    """Unsatisfied subjective literals become ``#false``, satisfied ``K L`` becomes ``L``.

    A satisfied ``not K L`` becomes ``#true``, except under ``K15_INNER``
    where it becomes ``not L``.
    """
    if variant not in (Semantics.K15, Semantics.K15_CLASSIC, Semantics.K15_INNER):
        raise ValueError(f"not a K15 variant: {variant}")
    return _rewrite(program, lambda l: wv_satisfies(world_view, l), variant)


def reduct(program: Program, world_view: WorldView, semantics: Semantics) -> Program:
    """The reduct a semantics checks world views against (S16 uses K15's)."""
    semantics = Semantics.parse(semantics)
    if semantics is Semantics.G91:
        return g91_reduct(program, world_view)
    if semantics is Semantics.S16:
        semantics = Semantics.K15
    return k15_reduct(program, world_view, semantics)


def _check_cap(program: Program, max_subjective: int) -> list[ObjectiveLiteral]:
    literals = program.subjective_literals
    if len(literals) > max_subjective:
        raise CapExceeded(
            f"{len(literals)} distinct subjective literals exceed the cap of {max_subjective}"
        )
    return sorted({l.inner for l in literals}, key=str)


def world_views(
    program: Program,
    semantics: Semantics | str = Semantics.G91,
    *,
    max_subjective: int = DEFAULT_MAX_SUBJECTIVE,
) -> list[WorldView]:
    semantics = Semantics.parse(semantics)
    if semantics is Semantics.S16:
        candidates = world_views(program, Semantics.K15, max_subjective=max_subjective)
        return s16_filter(candidates, program)
    known = _check_cap(program, max_subjective)
    found = set()
    for guess in itertools.product((True, False), repeat=len(known)):
        assumed = dict(zip(known, guess))

        def truth(lit: SubjectiveLiteral) -> bool:
            return assumed[lit.inner] != lit.epistemically_negated

        candidate = frozenset(answer_sets(_rewrite(program, truth, semantics)))
        if candidate and all(
            wv_satisfies(candidate, SubjectiveLiteral(inner)) == value
            for inner, value in assumed.items()
        ):
            found.add(candidate)
    return canonical_world_views(found)


def is_world_view(program: Program, world_view: WorldView, semantics: Semantics | str) -> bool:
    """Direct fixpoint test: ``W`` equals the answer sets of its own reduct."""
    semantics = Semantics.parse(semantics)
    if not world_view:
        return False
    if semantics is Semantics.S16:
        return world_view in world_views(program, Semantics.S16)
    return frozenset(answer_sets(reduct(program, world_view, semantics))) == world_view


def unknown_literals(world_view: WorldView, program: Program) -> frozenset[SubjectiveLiteral]:
    """The ``K L`` of the program (from either polarity) that ``world_view`` does not satisfy."""
    return frozenset(
        lit.positive
        for lit in program.subjective_literals
        if not wv_satisfies(world_view, lit.positive)
    )


def s16_filter(candidates: Iterable[WorldView], program: Program) -> list[WorldView]:
    """Keep candidates whose unknown set is not strictly contained in another's."""
    candidates = list(candidates)
    unknown = {w: unknown_literals(w, program) for w in candidates}
    return canonical_world_views(
        w for w in candidates if not any(unknown[w] < unknown[other] for other in candidates)
    )

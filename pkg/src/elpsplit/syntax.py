"""Abstract syntax, parser, printer and naive grounder for epistemic logic programs.

Surface syntax::

    a | b.                      % disjunctive fact
    p :- q, not r.              % normal rule
    e :- not K f.               % subjective literal
    :- not K p.                 % constraint (also ``bot :- ...``)

Inside bodies ``#true`` / ``#false`` (or ``⊤`` / ``⊥``) denote the truth
constants; they only show up in reducts but are accepted so printed
reducts can be read back.
"""
from __future__ import annotations

import itertools
import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import total_ordering

from .errors import GroundingError, ParseError

__all__ = [
    "Atom",
    "ObjectiveLiteral",
    "SubjectiveLiteral",
    "Rule",
    "Program",
    "Diagnostic",
    "TOP",
    "BOTTOM",
    "parse_program",
    "parse_atom",
    "parse_atoms",
    "parse_interpretation",
    "parse_world_view",
    "parse_literal",
    "format_program",
    "format_interpretation",
    "format_world_view",
    "interpretation_key",
    "world_view_key",
    "canonical_interpretations",
    "canonical_world_views",
    "ground",
    "validate_elp",
]


@total_ordering
@dataclass(frozen=True)
class Atom:
    predicate: str
    args: tuple[str, ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.predicate
        return f"{self.predicate}({','.join(self.args)})"

    def __lt__(self, other: Atom) -> bool:
        if not isinstance(other, Atom):
            return NotImplemented
        return str(self) < str(other)

    @property
    def is_ground(self) -> bool:
        return not any(_is_variable(t) for t in self.args)

    @property
    def is_constant(self) -> bool:
        """True for the reserved truth constants ``#true`` and ``#false``."""
        return self.predicate.startswith("#")

    def substitute(self, binding: dict[str, str]) -> Atom:
        if not binding:
            return self
        return Atom(self.predicate, tuple(binding.get(t, t) for t in self.args))


TOP = Atom("#true")
BOTTOM = Atom("#false")


def _is_variable(term: str) -> bool:
    return term[:1].isupper()


@dataclass(frozen=True)
class ObjectiveLiteral:
    """``a``, ``not a``, or (only produced by some reducts) ``not not a``."""

    atom: Atom
    default_negated: bool = False
    doubly_negated: bool = False

    def __str__(self) -> str:
        if self.doubly_negated:
            return f"not not {self.atom}"
        return f"not {self.atom}" if self.default_negated else str(self.atom)

    def holds(self, interpretation: Iterable[Atom] | frozenset[Atom]) -> bool:
        if self.atom == TOP:
            value = True
        elif self.atom == BOTTOM:
            value = False
        else:
            value = self.atom in interpretation
        if self.doubly_negated:
            return value
        return not value if self.default_negated else value

    def negation(self) -> ObjectiveLiteral:
        """The literal ``not L``; negating ``not a`` yields ``not not a``."""
        if self.doubly_negated:
            return ObjectiveLiteral(self.atom, default_negated=True)
        if self.default_negated:
            return ObjectiveLiteral(self.atom, default_negated=True, doubly_negated=True)
        return ObjectiveLiteral(self.atom, default_negated=True)

    def substitute(self, binding: dict[str, str]) -> ObjectiveLiteral:
        return ObjectiveLiteral(self.atom.substitute(binding), self.default_negated, self.doubly_negated)


@dataclass(frozen=True)
class SubjectiveLiteral:
    """``K L`` or, with ``epistemically_negated``, ``not K L``."""

    inner: ObjectiveLiteral
    epistemically_negated: bool = False

    def __str__(self) -> str:
        prefix = "not K" if self.epistemically_negated else "K"
        return f"{prefix} {self.inner}"

    @property
    def atom(self) -> Atom:
        return self.inner.atom

    @property
    def positive(self) -> SubjectiveLiteral:
        """The ``K L`` form of this literal."""
        return SubjectiveLiteral(self.inner) if self.epistemically_negated else self

    def complement(self) -> SubjectiveLiteral:
        return SubjectiveLiteral(self.inner, not self.epistemically_negated)

    def substitute(self, binding: dict[str, str]) -> SubjectiveLiteral:
        return SubjectiveLiteral(self.inner.substitute(binding), self.epistemically_negated)


def _frozen(items: Iterable) -> frozenset:
    return items if isinstance(items, frozenset) else frozenset(items)


@dataclass(frozen=True)
class Rule:
    head: frozenset[Atom] = frozenset()
    body_obj: frozenset[ObjectiveLiteral] = frozenset()
    body_subj: frozenset[SubjectiveLiteral] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "head", _frozen(self.head))
        object.__setattr__(self, "body_obj", _frozen(self.body_obj))
        object.__setattr__(self, "body_subj", _frozen(self.body_subj))

    def __str__(self) -> str:
        return format_rule(self)

    @property
    def is_fact(self) -> bool:
        return not self.body_obj and not self.body_subj

    @property
    def is_constraint(self) -> bool:
        return not self.head

    @property
    def is_subjective_rule(self) -> bool:
        return not self.body_obj and bool(self.body_subj)

    @property
    def is_subjective_constraint(self) -> bool:
        return not self.head and bool(self.body_subj)

    @property
    def is_disjunctive(self) -> bool:
        return len(self.head) > 1

    @property
    def head_atoms(self) -> frozenset[Atom]:
        return self.head

    @property
    def obj_atoms(self) -> frozenset[Atom]:
        return frozenset(l.atom for l in self.body_obj if not l.atom.is_constant)

    @property
    def subj_atoms(self) -> frozenset[Atom]:
        return frozenset(l.atom for l in self.body_subj if not l.atom.is_constant)

    @property
    def atoms(self) -> frozenset[Atom]:
        return self.head | self.obj_atoms | self.subj_atoms

    @property
    def variables(self) -> frozenset[str]:
        terms = itertools.chain(
            (t for a in self.head for t in a.args),
            (t for l in self.body_obj for t in l.atom.args),
            (t for l in self.body_subj for t in l.atom.args),
        )
        return frozenset(t for t in terms if _is_variable(t))

    def substitute(self, binding: dict[str, str]) -> Rule:
        return Rule(
            frozenset(a.substitute(binding) for a in self.head),
            frozenset(l.substitute(binding) for l in self.body_obj),
            frozenset(l.substitute(binding) for l in self.body_subj),
        )


@dataclass(frozen=True)
class Program:
    rules: tuple[Rule, ...] = ()
    atoms: frozenset[Atom] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "rules", tuple(self.rules))
        atoms: set[Atom] = set()
        for rule in self.rules:
            atoms |= rule.atoms
        object.__setattr__(self, "atoms", frozenset(atoms))

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def __str__(self) -> str:
        return format_program(self)

    @property
    def is_objective(self) -> bool:
        return not any(r.body_subj for r in self.rules)

    @property
    def is_ground(self) -> bool:
        return not any(r.variables for r in self.rules)

    @property
    def subjective_literals(self) -> list[SubjectiveLiteral]:
        """Distinct subjective literals in order of first occurrence."""
        seen: dict[SubjectiveLiteral, None] = {}
        for rule in self.rules:
            for lit in sorted(rule.body_subj, key=str):
                seen.setdefault(lit)
        return list(seen)

    def rule_set(self) -> frozenset[Rule]:
        return frozenset(self.rules)


# -- printing ---------------------------------------------------------------

def format_rule(rule: Rule) -> str:
    head = " | ".join(sorted(map(str, rule.head)))
    body = ", ".join(sorted([str(l) for l in rule.body_obj] + [str(l) for l in rule.body_subj]))
    if not body:
        return f"{head}." if head else "bot."
    return f"{head} :- {body}." if head else f":- {body}."


def format_program(program: Program | Iterable[Rule]) -> str:
    return "".join(format_rule(r) + "\n" for r in program)


def interpretation_key(interpretation: Iterable[Atom]) -> tuple[str, ...]:
    return tuple(sorted(str(a) for a in interpretation))


def world_view_key(world_view: Iterable[Iterable[Atom]]) -> tuple[tuple[str, ...], ...]:
    return tuple(sorted(interpretation_key(i) for i in world_view))


def canonical_interpretations(items: Iterable[frozenset[Atom]]) -> list[frozenset[Atom]]:
    return sorted(set(items), key=interpretation_key)


def canonical_world_views(items: Iterable[frozenset[frozenset[Atom]]]) -> list[frozenset[frozenset[Atom]]]:
    return sorted(set(items), key=world_view_key)


def format_interpretation(interpretation: Iterable[Atom]) -> str:
    return "{" + ",".join(interpretation_key(interpretation)) + "}"


def format_world_view(world_view: Iterable[Iterable[Atom]]) -> str:
    sets = ["{" + ",".join(k) + "}" for k in world_view_key(world_view)]
    return "[ " + " ".join(sets) + " ]" if sets else "[ ]"


# -- parsing ----------------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<newline>\n)
  | (?P<space>[ \t\r]+)
  | (?P<comment>%[^\n]*)
  | (?P<if>:-|←|<-)
  | (?P<dot>\.)
  | (?P<comma>,)
  | (?P<bar>\|)
  | (?P<lpar>\()
  | (?P<rpar>\))
  | (?P<top>\#true|⊤)
  | (?P<bot>\#false|⊥)
  | (?P<ident>[A-Za-z][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "newline":
            line, line_start = line + 1, m.end()
        elif kind not in ("space", "comment"):
            tokens.append(_Token(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    tokens.append(_Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.pos]

    def peek(self, offset: int = 1) -> _Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> _Token:
        tok = self.tok
        self.pos += 1
        return tok

    def error(self, message: str, tok: _Token | None = None):
        tok = tok or self.tok
        return ParseError(message, tok.line, tok.column)

    def expect(self, kind: str, what: str) -> _Token:
        if self.tok.kind != kind:
            found = self.tok.text or "end of input"
            raise self.error(f"expected {what}, found {found!r}")
        return self.advance()

    def is_keyword(self, word: str, tok: _Token | None = None) -> bool:
        tok = tok or self.tok
        return tok.kind == "ident" and tok.text == word

    def program(self) -> Program:
        rules = []
        while self.tok.kind != "eof":
            rules.append(self.rule())
        return Program(tuple(rules))

    def rule(self) -> Rule:
        head: list[Atom] = []
        if self.tok.kind == "bot" or (
            self.is_keyword("bot") and self.peek().kind in ("if", "dot")
        ):
            self.advance()
        elif self.tok.kind != "if":
            if self.is_keyword("K"):
                raise self.error("epistemic operator K is not allowed in rule heads")
            if self.is_keyword("not"):
                raise self.error("default negation is not allowed in rule heads")
            head.append(self.atom())
            while self.tok.kind == "bar":
                self.advance()
                if self.is_keyword("K"):
                    raise self.error("epistemic operator K is not allowed in rule heads")
                head.append(self.atom())
        obj: list[ObjectiveLiteral] = []
        subj: list[SubjectiveLiteral] = []
        if self.tok.kind == "if":
            self.advance()
            self.literal(obj, subj)
            while self.tok.kind == "comma":
                self.advance()
                self.literal(obj, subj)
        self.expect("dot", "'.'")
        return Rule(frozenset(head), frozenset(obj), frozenset(subj))

    def literal(self, obj: list, subj: list) -> None:
        outer_not = False
        if self.is_keyword("not"):
            self.advance()
            outer_not = True
        if self.is_keyword("K"):
            self.advance()
            if self.is_keyword("K"):
                raise self.error("nested subjective literals are not supported")
            inner_not = False
            if self.is_keyword("not"):
                self.advance()
                inner_not = True
                if self.is_keyword("not"):
                    raise self.error("'not not' is not allowed")
            if self.is_keyword("K"):
                raise self.error("nested subjective literals are not supported")
            atom = self.atom()
            subj.append(SubjectiveLiteral(ObjectiveLiteral(atom, inner_not), outer_not))
            return
        if self.is_keyword("not"):
            raise self.error("'not not' is only allowed as 'not K not a'")
        if self.tok.kind in ("top", "bot"):
            atom = TOP if self.advance().kind == "top" else BOTTOM
        else:
            atom = self.atom()
        obj.append(ObjectiveLiteral(atom, outer_not))

    def atom(self) -> Atom:
        tok = self.tok
        if tok.kind != "ident":
            raise self.error(f"expected an atom, found {tok.text or 'end of input'!r}")
        if not tok.text[0].islower():
            raise self.error(f"predicate names must start lowercase: {tok.text!r}")
        if tok.text == "not":
            raise self.error("'not' cannot be used as a predicate")
        self.advance()
        args: list[str] = []
        if self.tok.kind == "lpar":
            self.advance()
            args.append(self.expect("ident", "a term").text)
            while self.tok.kind == "comma":
                self.advance()
                args.append(self.expect("ident", "a term").text)
            self.expect("rpar", "')'")
        return Atom(tok.text, tuple(args))


def parse_program(text: str) -> Program:
    """Parse program text; rules keep source order, duplicates included."""
    return _Parser(text).program()


def parse_atom(text: str) -> Atom:
    parser = _Parser(text)
    atom = parser.atom()
    parser.expect("eof", "end of atom")
    return atom


def parse_literal(text: str) -> SubjectiveLiteral | ObjectiveLiteral:
    """Parse one body literal such as ``K p`` or ``not K not a``."""
    parser = _Parser(text)
    obj: list = []
    subj: list = []
    parser.literal(obj, subj)
    parser.expect("eof", "end of literal")
    return (obj or subj)[0]


_ATOM_TEXT = re.compile(r"[a-z][A-Za-z0-9_]*(?:\([^()]*\))?")


def parse_atoms(text: str) -> frozenset[Atom]:
    """Atoms listed with any separators, e.g. ``"p,q"`` or ``"f(a,b) g"``."""
    return frozenset(parse_atom(m.group()) for m in _ATOM_TEXT.finditer(text))


def parse_interpretation(text: str) -> frozenset[Atom]:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError(f"not an interpretation: {text!r}")
    return parse_atoms(text[1:-1])


def parse_world_view(text: str) -> frozenset[frozenset[Atom]]:
    """Read the ``[ {a,b} {c} ]`` notation used by the printer."""
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"not a world view: {text!r}")
    return frozenset(parse_interpretation(m.group()) for m in re.finditer(r"\{[^{}]*\}", text))


# -- grounding --------------------------------------------------------------

def ground(program: Program) -> Program:
    """Substitute program constants for variables in every possible way.

    Rules are deduplicated, keeping first occurrences in order.
    """
    constants = sorted(
        {
            t
            for rule in program
            for atom in rule.atoms
            for t in atom.args
            if not _is_variable(t)
        }
    )
    out: dict[Rule, None] = {}
    for rule in program:
        variables = sorted(rule.variables)
        if not variables:
            out.setdefault(rule)
            continue
        if not constants:
            raise GroundingError(f"no constants to ground rule: {rule}")
        for values in itertools.product(constants, repeat=len(variables)):
            out.setdefault(rule.substitute(dict(zip(variables, values))))
    return Program(tuple(out))


# -- validation -------------------------------------------------------------

@dataclass(frozen=True)
class Diagnostic:
    rule: Rule
    atom: Atom
    source: Rule

    @property
    def message(self) -> str:
        return (
            f"constraint '{self.rule}' depends indirectly on subjective literals "
            f"through '{self.atom}' (rule '{self.source}')"
        )

    def __str__(self) -> str:
        return self.message


def validate_elp(program: Program) -> list[Diagnostic]:
    """Flag constraints that reach subjective literals through objective atoms."""
    defining: dict[Atom, list[Rule]] = {}
    for rule in program:
        for atom in rule.head:
            defining.setdefault(atom, []).append(rule)
    diagnostics = []
    for rule in program:
        if rule.head or not rule.obj_atoms:
            continue
        seen: set[Atom] = set()
        stack = sorted(rule.obj_atoms)
        reported: set[Rule] = set()
        while stack:
            atom = stack.pop()
            if atom in seen:
                continue
            seen.add(atom)
            for source in defining.get(atom, ()):
                if source.body_subj and source not in reported:
                    reported.add(source)
                    diagnostics.append(Diagnostic(rule, atom, source))
                stack.extend(sorted(source.obj_atoms - seen))
    return diagnostics

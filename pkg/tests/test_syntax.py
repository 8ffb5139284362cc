import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from elpsplit.errors import GroundingError, ParseError
from elpsplit.syntax import (
    BOTTOM,
    Atom,
    ObjectiveLiteral,
    Program,
    Rule,
    SubjectiveLiteral,
    format_program,
    format_world_view,
    ground,
    parse_atom,
    parse_atoms,
    parse_literal,
    parse_program,
    parse_world_view,
    validate_elp,
)

names = st.sampled_from(["a", "b", "p", "q", "in", "ne", "f1"])
constants = st.sampled_from(["mike", "x", "y1"])
ground_atoms = st.builds(
    Atom, names, st.one_of(st.just(()), st.tuples(constants), st.tuples(constants, constants))
)
objective_literals = st.builds(ObjectiveLiteral, ground_atoms, st.booleans())
subjective_literals = st.builds(SubjectiveLiteral, objective_literals, st.booleans())
rules = st.builds(
    Rule,
    st.frozensets(ground_atoms, max_size=3),
    st.frozensets(objective_literals, max_size=3),
    st.frozensets(subjective_literals, max_size=2),
)
programs = st.lists(rules, max_size=6).map(lambda rs: Program(tuple(rs)))


def test_disjunctive_fact():
    (rule,) = parse_program("a | b.")
    assert rule.head == {Atom("a"), Atom("b")}
    assert rule.is_fact and rule.is_disjunctive


def test_subjective_body():
    (rule,) = parse_program("p :- not K q.")
    assert rule.head == {Atom("p")}
    assert rule.body_subj == {SubjectiveLiteral(ObjectiveLiteral(Atom("q")), True)}
    assert rule.is_subjective_rule


@pytest.mark.parametrize(
    "text, inner_negated, k_negated",
    [("K a", False, False), ("K not a", True, False), ("not K a", False, True), ("not K not a", True, True)],
)
def test_four_subjective_forms(text, inner_negated, k_negated):
    lit = parse_literal(text)
    assert lit == SubjectiveLiteral(ObjectiveLiteral(Atom("a"), inner_negated), k_negated)
    assert str(lit) == text


@pytest.mark.parametrize(
    "text",
    ["a :- K K b.", "K a :- b.", "a :- b", "a :- not not b.", "A :- b.", "a :- b,.", "a(X :- b."],
)
def test_rejected_syntax(text):
    with pytest.raises(ParseError):
        parse_program(text)


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse_program("a.\nb :- K K c.")
    assert info.value.line == 2


def test_constraint_spellings_agree():
    expected = Rule(frozenset(), frozenset({ObjectiveLiteral(Atom("a"))}))
    for text in (":- a.", "bot :- a.", "⊥ :- a.", "#false :- a.", "⊥ ← a."):
        assert parse_program(text).rules == (expected,)


def test_comments_and_duplicates_kept():
    p = parse_program("% heading\na. a. % again\n")
    assert len(p) == 2
    assert len(ground(p)) == 1


def test_subjective_constraint_flags():
    (rule,) = parse_program(":- not K p.")
    assert rule.is_constraint and rule.is_subjective_constraint
    # the body alone decides: a subjective constraint is also a subjective rule
    assert rule.is_subjective_rule
    assert not parse_program(":- a, K p.").rules[0].is_subjective_rule


def test_atom_universe_excludes_truth_constants():
    p = Program((Rule(frozenset({Atom("a")}), frozenset({ObjectiveLiteral(BOTTOM)})),))
    assert p.atoms == {Atom("a")}


def test_ground_single_substitution():
    assert ground(parse_program("q(a). p(X) :- q(X).")) == parse_program("q(a). p(a) :- q(a).")


def test_ground_without_variables_is_identity():
    p = parse_program("a :- not K b. b | c.")
    assert ground(p) == p


def test_ground_eligibility_program():
    p = parse_program(
        """
        eligible(X) :- high(X).
        eligible(X) :- minority(X), fair(X).
        noeligible(X) :- not fair(X), not high(X).
        fair(mike) | high(mike).
        interview(X) :- not K eligible(X), not K noeligible(X).
        appointment(X) :- K interview(X).
        """
    )
    expected = parse_program(
        """
        eligible(mike) :- high(mike).
        eligible(mike) :- minority(mike), fair(mike).
        noeligible(mike) :- not fair(mike), not high(mike).
        fair(mike) | high(mike).
        interview(mike) :- not K eligible(mike), not K noeligible(mike).
        appointment(mike) :- K interview(mike).
        """
    )
    assert ground(p) == expected


def test_ground_needs_constants():
    with pytest.raises(GroundingError):
        ground(parse_program("p(X) :- q(X)."))


def test_ground_all_combinations():
    p = ground(parse_program("e(a). e(b). r(X, Y) :- e(X), e(Y)."))
    assert len(p) == 2 + 4


def test_indirect_subjective_dependency_diagnosed():
    diagnostics = validate_elp(parse_program(":- a. a :- K p."))
    assert len(diagnostics) == 1
    assert diagnostics[0].atom == Atom("a")


def test_indirect_dependency_through_chain():
    assert len(validate_elp(parse_program(":- a. a :- b. b :- not K c."))) == 1


def test_plain_constraint_is_fine():
    assert validate_elp(parse_program(":- not K p. p | q.")) == []
    assert validate_elp(parse_program("a :- not b. b :- not a. :- a.")) == []


def test_parse_atoms_keeps_arguments():
    assert parse_atoms("f(a,b), g") == {parse_atom("f(a,b)"), Atom("g")}


def test_world_view_text_round_trip():
    w = parse_world_view("[ {b,a} {c} ]")
    assert format_world_view(w) == "[ {a,b} {c} ]"
    assert parse_world_view("[ ]") == frozenset()
    assert parse_world_view("[ {} ]") == frozenset({frozenset()})


@settings(max_examples=150)
@given(programs)
def test_print_parse_round_trip(program):
    text = format_program(program)
    reparsed = parse_program(text)
    assert reparsed == program
    assert parse_program(format_program(reparsed)) == reparsed


@settings(max_examples=100)
@given(programs)
def test_atom_universe_is_union_of_rule_atoms(program):
    union = frozenset().union(*(r.atoms for r in program)) if len(program) else frozenset()
    assert program.atoms == union


@settings(max_examples=60)
@given(
    st.lists(
        st.sampled_from(
            ["p(X) :- q(X).", "q(a).", "r(X, Y) :- p(X), not K q(Y).", "s(b) | t.", ":- s(X), t."]
        ),
        min_size=1,
        max_size=5,
    )
)
def test_ground_is_idempotent(lines):
    once = ground(parse_program("\n".join(lines) + "\nq(c)."))
    assert once.is_ground
    assert ground(once) == once

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from goedelkit.errors import (
    ArityError,
    BadJustificationRefError,
    EmptyProofError,
    FormulaSyntaxError,
    GoedelkitError,
    ProofSyntaxError,
)
from goedelkit.reader import (
    AxiomSchema,
    Gen,
    MP,
    Premise,
    ProofLine,
    ProofScript,
    parse_formula,
    parse_formula_file,
    parse_proof,
    parse_term,
    render,
    render_formula_file,
    render_proof,
)
from goedelkit.syntax import (
    Atom,
    Constant,
    Forall,
    FuncApp,
    FuncLetter,
    Implies,
    Not,
    Placeholder,
    PredLetter,
    Variable,
)

from strategies import formulas, random_formula

B = Placeholder(51)


def test_parse_double_negation_implication():
    got = parse_formula("(!(!B51) -> B51)")
    assert got == Implies(Not(Not(B)), B)


def test_parse_relational_function_atom():
    got = parse_formula("f2_3(f0_1(), f0_1())")
    t = FuncApp(FuncLetter(0, 1), ())
    assert got == Atom(FuncLetter(2, 3), (t, t))


def test_parse_unbalanced_paren_fails_with_position():
    with pytest.raises(FormulaSyntaxError) as err:
        parse_formula("(B51")
    assert err.value.position == 4


def test_parse_arity_mismatch():
    with pytest.raises(ArityError):
        parse_formula("f2_3(x1)")


def test_parse_forall_and_bang():
    got = parse_formula("forall x2 !A2_1(x2, a1)")
    assert got == Forall(Variable(2), Not(Atom(PredLetter(2, 1), (Variable(2), Constant(1)))))


def test_parse_term_forms():
    assert parse_term("x3") == Variable(3)
    assert parse_term("a2") == Constant(2)
    assert parse_term("f0_1") == FuncApp(FuncLetter(0, 1), ())
    assert parse_term("f1_1(f0_1())") == FuncApp(FuncLetter(1, 1), (FuncApp(FuncLetter(0, 1), ()),))


def test_render_examples():
    assert render(B) == "B51"
    assert render(Not(B)) == "(!B51)"
    assert render(Implies(B, Not(B))) == "(B51 -> (!B51))"


def test_render_parse_round_trip_bulk():
    rng = random.Random(17)
    for _ in range(1000):
        f = random_formula(rng, max_size=24)
        assert parse_formula(render(f)) == f


@settings(max_examples=150)
@given(formulas())
def test_render_parse_round_trip_property(phi):
    assert parse_formula(render(phi)) == phi


@settings(max_examples=200)
@given(st.text(max_size=60))
def test_parsing_is_total(text):
    try:
        parse_formula(text)
    except GoedelkitError:
        pass


PROOF_TEXT = """#v1
1. (B51 -> (B53 -> B51)) ; axiom A1
2. raw: 3 9 51 5 ; premise
3. (B53 -> B51) ; mp 1 1
"""


def test_parse_proof_structure():
    script = parse_proof(PROOF_TEXT)
    assert len(script) == 3
    assert script.lines[0].justification == AxiomSchema("A1")
    assert script.lines[1].spelling == (3, 9, 51, 5)
    assert script.lines[1].formula is None
    assert script.lines[2].justification == MP(1, 1)
    assert script.has_premises


def test_parse_proof_forward_reference():
    text = "#v1\n1. B51 ; premise\n2. B51 ; mp 3 1\n"
    with pytest.raises(BadJustificationRefError):
        parse_proof(text)


def test_parse_proof_empty():
    with pytest.raises(EmptyProofError):
        parse_proof("#v1\n")


def test_parse_proof_requires_header():
    with pytest.raises(ProofSyntaxError):
        parse_proof("1. B51 ; premise\n")


def test_parse_proof_index_gap():
    text = "#v1\n1. B51 ; premise\n3. B51 ; premise\n"
    with pytest.raises(ProofSyntaxError):
        parse_proof(text)


def test_render_proof_round_trip():
    script = parse_proof(PROOF_TEXT)
    assert parse_proof(render_proof(script)) == script


def test_gen_justification_round_trip():
    text = "#v1\n1. A2_1(x1, x1) ; premise\n2. forall x1 A2_1(x1, x1) ; gen 1 x1\n"
    script = parse_proof(text)
    assert script.lines[1].justification == Gen(1, Variable(1))
    assert parse_proof(render_proof(script)) == script


def test_formula_file_round_trip():
    f = parse_formula("(!(!B51) -> B51)")
    assert parse_formula_file(render_formula_file(f)) == f


def test_formula_file_raw_body():
    got = parse_formula_file("#v1\nraw: 3 9 51 11 9 51 5\n")
    assert got == (3, 9, 51, 11, 9, 51, 5)

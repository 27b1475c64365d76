import pytest
from hypothesis import given

from goedelkit.syntax import (
    Atom,
    Constant,
    Forall,
    FORALL_SYM,
    FuncApp,
    FuncLetter,
    IMPLIES_SYM,
    Implies,
    LPAREN,
    Not,
    NOT_SYM,
    Placeholder,
    PredLetter,
    RPAREN,
    Variable,
    flatten,
    free_for,
    free_vars,
    size,
    substitute,
    well_formed,
)

from strategies import formulas, random_formula
import random

B = Placeholder(51)


def test_flatten_single_placeholder():
    assert flatten(B) == [B]


def test_flatten_negation_is_parenthesized():
    assert flatten(Not(B)) == [LPAREN, NOT_SYM, B, RPAREN]


def test_flatten_implication_wraps_operands():
    got = flatten(Implies(Not(B), Not(B)))
    assert got == [
        LPAREN,
        LPAREN, NOT_SYM, B, RPAREN,
        IMPLIES_SYM,
        LPAREN, NOT_SYM, B, RPAREN,
        RPAREN,
    ]


def test_flatten_forall_template():
    x1 = Variable(1)
    assert flatten(Forall(x1, B)) == [LPAREN, LPAREN, FORALL_SYM, x1, RPAREN, B, RPAREN]


def test_flatten_zero_ary_function_is_bare():
    t = FuncApp(FuncLetter(0, 1), ())
    assert flatten(t) == [FuncLetter(0, 1)]


def test_flatten_atom_with_arguments():
    eq = PredLetter(2, 1)
    x1 = Variable(1)
    a1 = Constant(1)
    got = flatten(Atom(eq, (x1, a1)))
    assert got == [eq, LPAREN, x1, RPAREN][:2] + [x1] + [got[3]] + [a1, RPAREN]
    # spelled: letter ( t1 , t2 )
    from goedelkit.syntax import COMMA

    assert got == [eq, LPAREN, x1, COMMA, a1, RPAREN]


@given(formulas())
def test_negation_flatten_mirrors_template(phi):
    assert flatten(Not(phi)) == [LPAREN, NOT_SYM] + flatten(phi) + [RPAREN]


@given(formulas(), formulas())
def test_implication_flatten_mirrors_template(p, q):
    assert flatten(Implies(p, q)) == [LPAREN] + flatten(p) + [IMPLIES_SYM] + flatten(q) + [RPAREN]


def test_flatten_injective_on_generated_corpus():
    rng = random.Random(7)
    seen = {}
    for _ in range(500):
        f = random_formula(rng, max_size=25)
        key = tuple(flatten(f))
        if key in seen:
            assert seen[key] == f
        seen[key] = f


def test_well_formed_placeholder():
    assert well_formed(B)


def test_well_formed_rejects_arity_mismatch():
    bad = Atom(PredLetter(2, 1), (Variable(1),))
    assert not well_formed(bad)


def test_well_formed_quantified_implication():
    f = Forall(Variable(1), Implies(B, B))
    assert well_formed(f)


def test_placeholder_codes_must_be_odd_and_unreserved():
    with pytest.raises(ValueError):
        Placeholder(4)
    with pytest.raises(ValueError):
        Placeholder(9)
    with pytest.raises(ValueError):
        Placeholder(0)


def test_variable_index_positive():
    with pytest.raises(ValueError):
        Variable(0)


def test_size_counts_symbols():
    assert size(B) == 1
    assert size(Not(B)) == 4


def test_free_vars_and_substitution():
    x1, x2 = Variable(1), Variable(2)
    eq = PredLetter(2, 1)
    f = Forall(x1, Atom(eq, (x1, x2)))
    assert free_vars(f) == {x2}
    g = substitute(f, x2, Constant(1))
    assert free_vars(g) == frozenset()
    # bound occurrences are untouched
    assert substitute(f, x1, Constant(1)) == f


def test_free_for_detects_capture():
    x1, x2 = Variable(1), Variable(2)
    eq = PredLetter(2, 1)
    # substituting x2 for x1 under a binder for x2 would capture
    f = Forall(x2, Atom(eq, (x1, x2)))
    assert not free_for(x2, x1, f)
    assert free_for(Constant(1), x1, f)
    assert free_for(x2, x1, Atom(eq, (x1, x1)))

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from goedelkit import codec
from goedelkit.codec import (
    CANONICAL_TABLE,
    Leaf,
    Seq,
    as_sequence,
    component,
    concat,
    decode,
    encode_expression,
    encode_sequence,
    encode_symbols,
    factorize,
    lh,
    load_table,
    materialize,
    neg_code,
    normalize,
    nth_prime,
    parse_factored,
    render_factored,
    seq_of_codes,
)
from goedelkit.errors import (
    CapExceededError,
    EmptySequenceError,
    IndexOutOfRangeError,
    NotACodeError,
    NotASequenceError,
    TooLargeError,
)
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
)

from strategies import formulas, random_formula, random_tower

B = Placeholder(51)

# verbatim golden data for the five-line sketch of (!(!B) -> B), as published
SKETCH = [
    [3, 9, 51, 11, 9, 9, 51, 5, 11, 3, 3, 9, 51, 11, 9, 51, 5, 11, 51, 5],
    [3, 9, 51, 11, 9, 51, 5],
    [3, 9, 51, 11, 9, 9, 51, 5, 11, 5],
    [9, 9, 51, 11, 3, 9, 51, 11, 9, 9, 51, 5],
    [3, 9, 9, 51, 11, 51, 5],
]


def int_value(g):
    """Independent oracle: the denoted integer by direct arithmetic."""
    if isinstance(g, Leaf):
        return g.value
    out = 1
    for i, c in enumerate(g.components):
        out *= nth_prime(i) ** int_value(c)
    return out


# -- symbol table ------------------------------------------------------


def test_canonical_punctuation_codes():
    t = CANONICAL_TABLE
    assert [t.code_of(s) for s in (LPAREN, RPAREN, NOT_SYM, IMPLIES_SYM, FORALL_SYM)] == [
        3, 5, 9, 11, 13,
    ]


def test_canonical_letter_codes():
    t = CANONICAL_TABLE
    assert t.code_of(Variable(1)) == 21
    assert t.code_of(Variable(2)) == 29
    assert t.code_of(Constant(1)) == 15
    assert t.code_of(FuncLetter(0, 1)) == 25
    assert t.code_of(FuncLetter(1, 1)) == 49
    assert t.code_of(FuncLetter(2, 1)) == 97
    assert t.code_of(FuncLetter(2, 3)) == 865
    assert t.code_of(PredLetter(2, 1)) == 99
    assert t.code_of(Placeholder(51)) == 51


def test_classification_round_trip():
    t = CANONICAL_TABLE
    for sym in [
        Variable(1), Variable(7), Constant(3), FuncLetter(0, 1), FuncLetter(2, 3),
        PredLetter(2, 1), PredLetter(1, 1),
    ]:
        assert t.classify(t.code_of(sym)) == sym


def test_classification_rejects_zero_index_letters():
    # 33 = 1 + 8*4 would be a function letter of arity 2 and index 0
    assert CANONICAL_TABLE.classify(33) is None
    assert CANONICAL_TABLE.classify(4) is None


def test_table_config_overrides():
    t = load_table("forall = 15\nx1 = 903\n# comment\n")
    assert t.code_of(FORALL_SYM) == 15
    assert t.code_of(Variable(1)) == 903
    assert t.classify(15) == FORALL_SYM
    assert t.classify(903) == Variable(1)
    # canonical home of x1 is freed, canonical constant slot of 15 is shadowed
    assert t.classify(21) == Variable(1) or t.classify(21) is None


def test_table_config_rejects_even_codes():
    with pytest.raises(ValueError):
        load_table("x1 = 20")


# -- tower equality and normalization ----------------------------------


def test_leaf_equals_equivalent_sequence():
    assert Leaf(4) == Seq((Leaf(2),))
    assert Leaf(2) == Seq((Leaf(1),))
    assert Leaf(12) == Seq((Leaf(2), Leaf(1)))
    assert hash(Leaf(4)) == hash(Seq((Leaf(2),)))


def test_nested_exponent_normalization():
    assert Seq((Leaf(2),)) == Seq((Seq((Leaf(1),)),))


def test_unequal_towers():
    assert Leaf(3) != Leaf(5)
    assert Seq((Leaf(3),)) != Seq((Leaf(3), Leaf(1)))
    assert Leaf(3) != Seq((Leaf(3),))  # 3 vs 8


def test_normalize_reconstructs_canonical_form():
    g = Seq((Leaf(4), Seq((Leaf(1),))))
    n = normalize(g)
    assert n == g
    assert int_value(n) == int_value(g)


def test_as_sequence_factorizes_leaves():
    assert as_sequence(Leaf(12)) == Seq((Leaf(2), Leaf(1)))
    assert as_sequence(Leaf(5)) is None  # gap at 2
    assert as_sequence(Leaf(1)) is None


# -- encoding ----------------------------------------------------------


def test_encode_single_placeholder():
    assert encode_expression(B) == Seq((Leaf(51),))


def test_encode_negation_codes():
    assert encode_expression(Not(B)) == seq_of_codes([3, 9, 51, 5])


def test_encode_fully_parenthesized_implication():
    got = encode_expression(Implies(Not(B), Not(B)))
    assert got == seq_of_codes([3, 3, 9, 51, 5, 11, 3, 9, 51, 5, 5])


def test_encode_sequence_of_sketch_lines():
    gs = [seq_of_codes(c) for c in SKETCH]
    x = Seq(tuple(gs))
    assert lh(x) == 5
    assert component(x, 4) == gs[4]


def test_encode_sequence_singleton_and_empty():
    assert encode_sequence([B]) == Seq((Seq((Leaf(51),)),))
    with pytest.raises(EmptySequenceError):
        encode_sequence([])


def test_sketch_line_two_is_the_published_string():
    # lenient spelling: inner negations unparenthesized
    assert decode(seq_of_codes(SKETCH[1])) == Implies(Not(B), Not(B))


# -- sequence algebra --------------------------------------------------


def test_concat_basic():
    x = seq_of_codes([3])
    y = seq_of_codes([9])
    got = concat(x, y)
    assert got == seq_of_codes([3, 9])
    assert int_value(got) == 2 ** 3 * 3 ** 9


def test_concat_chain_matches_negation_encoding():
    parts = [seq_of_codes([c]) for c in (3, 9, 51, 5)]
    out = parts[0]
    for p in parts[1:]:
        out = concat(out, p)
    assert out == encode_expression(Not(B))


def test_concat_requires_sequences():
    with pytest.raises(NotASequenceError):
        concat(Leaf(3), seq_of_codes([3]))


@settings(max_examples=60)
@given(st.data())
def test_concat_length_additivity(data):
    rng = random.Random(data.draw(st.integers(0, 10 ** 6)))
    x = seq_of_codes([rng.randint(1, 99) for _ in range(rng.randint(1, 8))])
    y = seq_of_codes([rng.randint(1, 99) for _ in range(rng.randint(1, 8))])
    z = concat(x, y)
    assert lh(z) == lh(x) + lh(y)
    for i in range(lh(x)):
        assert component(z, i) == component(x, i)
    for j in range(lh(y)):
        assert component(z, lh(x) + j) == component(y, j)


def test_lh_of_sketch_line_two():
    assert lh(seq_of_codes(SKETCH[1])) == 7


def test_component_out_of_range():
    x = seq_of_codes([3, 9])
    with pytest.raises(IndexOutOfRangeError):
        component(x, 2)


def test_neg_code_template():
    assert neg_code(encode_expression(B)) == seq_of_codes([3, 9, 51, 5])
    twice = neg_code(neg_code(encode_expression(B)))
    assert twice == seq_of_codes([3, 9, 3, 9, 51, 5, 5])


def test_neg_code_equals_concat_definition():
    v = encode_expression(Implies(B, B))
    lhs = neg_code(v)
    rhs = concat(concat(concat(seq_of_codes([3]), seq_of_codes([9])), v), seq_of_codes([5]))
    assert lhs == rhs


def test_neg_code_round_trip_on_random_formulas():
    rng = random.Random(11)
    for _ in range(500):
        f = random_formula(rng, max_size=18)
        assert decode(neg_code(encode_expression(f))) == Not(f)


def test_neg_code_rejects_leaves():
    with pytest.raises(NotASequenceError):
        neg_code(Leaf(51))


# -- decode ------------------------------------------------------------


def test_decode_single_placeholder():
    assert decode(Seq((Leaf(51),))) == B


def test_decode_even_exponent_fails():
    with pytest.raises(NotACodeError):
        decode(Seq((Leaf(4),)))


def test_decode_round_trip_bulk():
    rng = random.Random(23)
    for _ in range(1000):
        f = random_formula(rng, max_size=24)
        assert decode(encode_expression(f)) == f


def test_decode_sequence_of_formulas():
    fs = [B, Not(B), Implies(B, B)]
    assert decode(encode_sequence(fs)) == fs


def test_decode_mixed_components_rejected():
    with pytest.raises(NotACodeError):
        decode(Seq((Leaf(51), Seq((Leaf(51),)))))


def test_decode_lenient_bare_negation_chain():
    # !!B -> (!B -> !!B) without outer parentheses, negations bare
    ast = decode(seq_of_codes(SKETCH[3]))
    expected = Implies(Not(Not(B)), Implies(Not(B), Not(Not(B))))
    assert ast == expected


def test_decode_rejects_sketch_line_three_typo():
    with pytest.raises(NotACodeError):
        decode(seq_of_codes(SKETCH[2]))


def test_decode_atom_and_terms():
    eq = PredLetter(2, 1)
    f = Atom(eq, (Variable(1), FuncApp(FuncLetter(1, 1), (Constant(1),))))
    assert decode(encode_expression(f)) == f


def test_function_application_string_decodes_as_term():
    # an application headed by a function letter reads as a term when
    # it stands alone, and as an atom inside a formula context
    lt = FuncLetter(2, 3)
    t = FuncApp(FuncLetter(0, 1), ())
    atom = Atom(lt, (t, t))
    assert decode(encode_expression(atom)) == FuncApp(lt, (t, t))
    assert decode(encode_expression(Not(atom))) == Not(atom)


def test_decode_term_expression():
    t = FuncApp(FuncLetter(2, 1), (Variable(1), Constant(1)))
    assert decode(encode_expression(t)) == t


def test_infix_relational_string_is_not_a_code():
    with pytest.raises(NotACodeError):
        decode(seq_of_codes([25, 865, 25]))


# -- materialize / factorize -------------------------------------------


def test_materialize_small_product():
    g = seq_of_codes([33, 865, 33])
    n = materialize(g, 10 ** 6)
    assert n == 2 ** 33 * 3 ** 865 * 5 ** 33


def test_materialize_leaf():
    assert materialize(Leaf(3), 10) == 3


def test_materialize_proof_number_exceeds_cap():
    x = Seq(tuple(seq_of_codes(c) for c in SKETCH))
    with pytest.raises(CapExceededError):
        materialize(x, 10 ** 6)


def test_materialize_exact_boundary():
    g = seq_of_codes([10])  # 1024, four digits
    assert materialize(g, 4) == 1024
    with pytest.raises(CapExceededError):
        materialize(g, 3)


def test_factorize_basic():
    assert factorize(2 ** 3 * 3 ** 9) == Seq((Leaf(3), Leaf(9)))


def test_factorize_gap():
    with pytest.raises(NotASequenceError):
        factorize(2 ** 3 * 5 ** 9)


def test_factorize_rejects_tiny_and_huge():
    with pytest.raises(ValueError):
        factorize(1)
    with pytest.raises(TooLargeError):
        factorize(2 ** 40, digit_cap=5)


def test_factorize_materialize_round_trip():
    # sequence codes only: a bare leaf may denote a gapped integer
    rng = random.Random(5)
    checked = 0
    for _ in range(1200):
        g = random_tower(rng, max_depth=2, max_width=4)
        if not isinstance(g, Seq):
            continue
        try:
            n = materialize(g, 10 ** 4)
        except CapExceededError:
            continue
        assert factorize(n) == normalize(g)
        assert factorize(n) == g
        checked += 1
    assert checked > 100


def test_concat_value_consistency_small_scale():
    rng = random.Random(9)
    for _ in range(50):
        x = seq_of_codes([rng.randint(1, 6) for _ in range(rng.randint(1, 3))])
        y = seq_of_codes([rng.randint(1, 6) for _ in range(rng.randint(1, 3))])
        shifted = 1
        for j in range(lh(y)):
            shifted *= nth_prime(lh(x) + j) ** int_value(component(y, j))
        assert materialize(concat(x, y), 10 ** 4) == materialize(x, 10 ** 4) * shifted


# -- factored rendering ------------------------------------------------


def test_render_factored_flat():
    assert render_factored(seq_of_codes([3, 9, 51, 5])) == "2^3 * 3^9 * 5^51 * 7^5"


def test_render_factored_nested():
    g = Seq((Seq((Leaf(3), Leaf(9))), Leaf(5)))
    assert render_factored(g) == "2^[2^3 * 3^9] * 3^5"


def test_render_factored_leaf():
    assert render_factored(Leaf(7)) == "7"


def test_parse_factored_round_trip():
    rng = random.Random(31)
    for _ in range(300):
        g = random_tower(rng, max_depth=3, max_width=4)
        assert parse_factored(render_factored(g)) == g


def test_parse_factored_requires_consecutive_primes():
    with pytest.raises(NotASequenceError):
        parse_factored("2^3 * 5^9")


def test_parse_factored_bare_integer():
    assert parse_factored("12") == Leaf(12)


# -- round trip at scale (acceptance support) ---------------------------


@settings(max_examples=150, deadline=None)
@given(formulas())
def test_decode_encode_identity_property(phi):
    assert decode(encode_expression(phi)) == phi

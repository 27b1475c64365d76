"""Shared generators: hypothesis strategies and seeded bulk generators."""

import random

from hypothesis import strategies as st

from goedelkit.codec import Leaf, Seq
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

PLACEHOLDER_CODES = [51, 53, 15, 105]


def terms(max_leaves=4):
    base = st.one_of(
        st.integers(1, 3).map(Variable),
        st.integers(1, 2).map(Constant),
        st.just(FuncApp(FuncLetter(0, 1), ())),
    )
    return st.recursive(
        base,
        lambda inner: st.one_of(
            st.tuples(inner).map(lambda a: FuncApp(FuncLetter(1, 1), a)),
            st.tuples(inner, inner).map(lambda a: FuncApp(FuncLetter(2, 1), a)),
            st.tuples(inner, inner).map(lambda a: FuncApp(FuncLetter(2, 2), a)),
        ),
        max_leaves=max_leaves,
    )


def formulas(max_leaves=6):
    base = st.one_of(
        st.sampled_from(PLACEHOLDER_CODES).map(Placeholder),
        st.tuples(terms(3), terms(3)).map(lambda a: Atom(PredLetter(2, 1), a)),
    )
    return st.recursive(
        base,
        lambda inner: st.one_of(
            inner.map(Not),
            st.tuples(inner, inner).map(lambda p: Implies(*p)),
            st.tuples(st.integers(1, 3).map(Variable), inner).map(lambda p: Forall(*p)),
        ),
        max_leaves=max_leaves,
    )


def random_term(rng: random.Random, max_size=8):
    if max_size <= 1:
        return rng.choice(
            [Variable(rng.randint(1, 3)), Constant(1), FuncApp(FuncLetter(0, 1), ())]
        )
    pick = rng.random()
    if pick < 0.4:
        return random_term(rng, 1)
    if pick < 0.6:
        return FuncApp(FuncLetter(1, 1), (random_term(rng, max_size - 2),))
    letter = FuncLetter(2, rng.randint(1, 2))
    half = max(1, (max_size - 3) // 2)
    return FuncApp(letter, (random_term(rng, half), random_term(rng, half)))


def random_formula(rng: random.Random, max_size=20):
    if max_size <= 2:
        return Placeholder(rng.choice(PLACEHOLDER_CODES))
    pick = rng.random()
    if pick < 0.25:
        return Placeholder(rng.choice(PLACEHOLDER_CODES))
    if pick < 0.40:
        return Atom(
            PredLetter(2, 1),
            (random_term(rng, (max_size - 4) // 2 + 1), random_term(rng, (max_size - 4) // 2 + 1)),
        )
    if pick < 0.60:
        return Not(random_formula(rng, max_size - 3))
    if pick < 0.85:
        half = max(2, (max_size - 3) // 2)
        return Implies(random_formula(rng, half), random_formula(rng, half))
    return Forall(Variable(rng.randint(1, 3)), random_formula(rng, max_size - 6))


def random_tower(rng: random.Random, max_depth=3, max_width=6):
    """Arbitrary sparse towers, mostly junk rather than valid codes."""
    if max_depth <= 0 or rng.random() < 0.4:
        return Leaf(rng.choice([1, 2, 3, 4, 5, 9, 11, 21, 51, rng.randint(1, 2000)]))
    width = rng.randint(1, max_width)
    return Seq(tuple(random_tower(rng, max_depth - 1, max_width) for _ in range(width)))

"""Axiom schemas of the first-order arithmetic system.

Logical schemas A1..A3 (propositional), A4..A5 (quantifier) and proper
schemas S1..S8 (equality, successor, addition, multiplication) plus the
induction schema S9. Recognizers work on ASTs; the registry is an
ordered list so the proper-axiom set can be swapped out.

Concrete signature: zero is ``a1``, successor ``f1_1``, addition
``f2_1``, multiplication ``f2_2`` and equality ``A2_1``.
"""

from __future__ import annotations

from .syntax import (
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
    free_for,
    free_vars,
    is_formula,
    is_term,
    substitute,
)

ZERO = Constant(1)
SUCC = FuncLetter(1, 1)
PLUS = FuncLetter(2, 1)
TIMES = FuncLetter(2, 2)
EQ = PredLetter(2, 1)


def succ(t):
    return FuncApp(SUCC, (t,))


def plus(a, b):
    return FuncApp(PLUS, (a, b))


def times(a, b):
    return FuncApp(TIMES, (a, b))


def eq(a, b):
    return Atom(EQ, (a, b))


# -- instance builders ---------------------------------------------------


def a1(b, c):
    return Implies(b, Implies(c, b))


def a2(b, c, d):
    return Implies(Implies(b, Implies(c, d)), Implies(Implies(b, c), Implies(b, d)))


def a3(b, c):
    return Implies(
        Implies(Not(c), Not(b)),
        Implies(Implies(Not(c), b), c),
    )


def a4(var, body, term):
    return Implies(Forall(var, body), substitute(body, var, term))


def a5(var, b, c):
    return Implies(Forall(var, Implies(b, c)), Implies(b, Forall(var, c)))


def s1(t1, t2, t3):
    return Implies(eq(t1, t2), Implies(eq(t1, t3), eq(t2, t3)))


def s2(t1, t2):
    return Implies(eq(t1, t2), eq(succ(t1), succ(t2)))


def s3(t):
    return Not(eq(ZERO, succ(t)))


def s4(t1, t2):
    return Implies(eq(succ(t1), succ(t2)), eq(t1, t2))


def s5(t):
    return eq(plus(t, ZERO), t)


def s6(t1, t2):
    return eq(plus(t1, succ(t2)), succ(plus(t1, t2)))


def s7(t):
    return eq(times(t, ZERO), ZERO)


def s8(t1, t2):
    return eq(times(t1, succ(t2)), plus(times(t1, t2), t1))


def s9(var, body):
    return Implies(
        substitute(body, var, ZERO),
        Implies(
            Forall(var, Implies(body, substitute(body, var, succ(var)))),
            Forall(var, body),
        ),
    )


# -- recognizers ---------------------------------------------------------


def _is_a1(f):
    return (
        isinstance(f, Implies)
        and isinstance(f.consequent, Implies)
        and f.antecedent == f.consequent.consequent
    )


def _is_a2(f):
    if not (isinstance(f, Implies) and isinstance(f.antecedent, Implies)):
        return False
    left, right = f.antecedent, f.consequent
    if not isinstance(left.consequent, Implies):
        return False
    b, c, d = left.antecedent, left.consequent.antecedent, left.consequent.consequent
    return right == Implies(Implies(b, c), Implies(b, d))


def _is_a3(f):
    if not isinstance(f, Implies):
        return False
    left = f.antecedent
    if not (isinstance(left, Implies) and isinstance(left.antecedent, Not) and isinstance(left.consequent, Not)):
        return False
    c, b = left.antecedent.body, left.consequent.body
    return f.consequent == Implies(Implies(Not(c), b), c)


def _instance_term(body, inst, var):
    """The term t with inst == body[var := t], or None.

    Positions where var is bound must match exactly; all free
    occurrences must map to the same term.
    """
    found = []

    def walk(b, i, bound):
        if isinstance(b, Variable):
            if b == var and var not in bound:
                if not is_term(i):
                    return False
                found.append(i)
                return True
            return b == i
        if type(b) is not type(i):
            return False
        if isinstance(b, (Constant, Placeholder)):
            return b == i
        if isinstance(b, (FuncApp, Atom)):
            return (
                b.letter == i.letter
                and len(b.args) == len(i.args)
                and all(walk(x, y, bound) for x, y in zip(b.args, i.args))
            )
        if isinstance(b, Not):
            return walk(b.body, i.body, bound)
        if isinstance(b, Implies):
            return walk(b.antecedent, i.antecedent, bound) and walk(
                b.consequent, i.consequent, bound
            )
        if isinstance(b, Forall):
            return b.var == i.var and walk(b.body, i.body, bound | {b.var})
        return False

    if not walk(body, inst, frozenset()):
        return None
    if not found:
        return var
    t0 = found[0]
    if any(t != t0 for t in found[1:]):
        return None
    return t0


def _is_a4(f):
    if not (isinstance(f, Implies) and isinstance(f.antecedent, Forall)):
        return False
    var, body = f.antecedent.var, f.antecedent.body
    t = _instance_term(body, f.consequent, var)
    return t is not None and free_for(t, var, body)


def _is_a5(f):
    if not (
        isinstance(f, Implies)
        and isinstance(f.antecedent, Forall)
        and isinstance(f.antecedent.body, Implies)
        and isinstance(f.consequent, Implies)
        and isinstance(f.consequent.consequent, Forall)
    ):
        return False
    var = f.antecedent.var
    b, c = f.antecedent.body.antecedent, f.antecedent.body.consequent
    return (
        f.consequent.antecedent == b
        and f.consequent.consequent == Forall(var, c)
        and var not in free_vars(b)
    )


def _eq_parts(f):
    if isinstance(f, Atom) and f.letter == EQ:
        return f.args
    return None


def _is_s1(f):
    if not (isinstance(f, Implies) and isinstance(f.consequent, Implies)):
        return False
    p1, p2, p3 = _eq_parts(f.antecedent), _eq_parts(f.consequent.antecedent), _eq_parts(f.consequent.consequent)
    if not (p1 and p2 and p3):
        return False
    return p1[0] == p2[0] and p1[1] == p3[0] and p2[1] == p3[1]


def _is_s2(f):
    if not isinstance(f, Implies):
        return False
    p1, p2 = _eq_parts(f.antecedent), _eq_parts(f.consequent)
    return bool(p1 and p2) and p2[0] == succ(p1[0]) and p2[1] == succ(p1[1])


def _is_s3(f):
    if not isinstance(f, Not):
        return False
    p = _eq_parts(f.body)
    return bool(p) and p[0] == ZERO and isinstance(p[1], FuncApp) and p[1].letter == SUCC


def _is_s4(f):
    if not isinstance(f, Implies):
        return False
    p1, p2 = _eq_parts(f.antecedent), _eq_parts(f.consequent)
    return bool(p1 and p2) and p1[0] == succ(p2[0]) and p1[1] == succ(p2[1])


def _is_s5(f):
    p = _eq_parts(f)
    return bool(p) and p[0] == plus(p[1], ZERO)


def _is_s6(f):
    p = _eq_parts(f)
    if not p:
        return False
    left, right = p
    return (
        isinstance(left, FuncApp)
        and left.letter == PLUS
        and isinstance(left.args[1], FuncApp)
        and left.args[1].letter == SUCC
        and right == succ(plus(left.args[0], left.args[1].args[0]))
    )


def _is_s7(f):
    p = _eq_parts(f)
    return bool(p) and p[1] == ZERO and isinstance(p[0], FuncApp) and p[0].letter == TIMES and p[0].args[1] == ZERO


def _is_s8(f):
    p = _eq_parts(f)
    if not p:
        return False
    left, right = p
    return (
        isinstance(left, FuncApp)
        and left.letter == TIMES
        and isinstance(left.args[1], FuncApp)
        and left.args[1].letter == SUCC
        and right == plus(times(left.args[0], left.args[1].args[0]), left.args[0])
    )


def _is_s9(f):
    if not (
        isinstance(f, Implies)
        and isinstance(f.consequent, Implies)
        and isinstance(f.consequent.antecedent, Forall)
        and isinstance(f.consequent.consequent, Forall)
    ):
        return False
    step, conclusion = f.consequent.antecedent, f.consequent.consequent
    var, body = conclusion.var, conclusion.body
    if step.var != var or not isinstance(step.body, Implies):
        return False
    return (
        step.body.antecedent == body
        and step.body.consequent == substitute(body, var, succ(var))
        and f.antecedent == substitute(body, var, ZERO)
    )


LOGICAL_SCHEMAS = [
    ("A1", _is_a1),
    ("A2", _is_a2),
    ("A3", _is_a3),
    ("A4", _is_a4),
    ("A5", _is_a5),
]

PROPER_SCHEMAS = [
    ("S1", _is_s1),
    ("S2", _is_s2),
    ("S3", _is_s3),
    ("S4", _is_s4),
    ("S5", _is_s5),
    ("S6", _is_s6),
    ("S7", _is_s7),
    ("S8", _is_s8),
    ("S9", _is_s9),
]

AXIOM_SCHEMAS = LOGICAL_SCHEMAS + PROPER_SCHEMAS

_BY_ID = dict(AXIOM_SCHEMAS)


def recognize(formula):
    """First matching schema id in registry order, or None."""
    if not is_formula(formula):
        return None
    for schema_id, matcher in AXIOM_SCHEMAS:
        if matcher(formula):
            return schema_id
    return None


def matches(formula, schema_id: str) -> bool:
    matcher = _BY_ID.get(schema_id)
    return matcher is not None and is_formula(formula) and matcher(formula)


def is_logical_axiom(formula) -> bool:
    return is_formula(formula) and any(m(formula) for _, m in LOGICAL_SCHEMAS)


def is_proper_axiom(formula) -> bool:
    return is_formula(formula) and any(m(formula) for _, m in PROPER_SCHEMAS)

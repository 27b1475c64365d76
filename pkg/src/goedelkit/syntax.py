"""Abstract syntax for the first-order language of arithmetic.

Values are immutable after construction and safe to share between
threads. The linear spelling produced by :func:`flatten` is the fully
parenthesized form fixed by the numeric templates of the modus-ponens,
generalization and negation operators: negation is spelled ``( ! p )``,
implication ``( p -> q )`` and quantification ``( ( forall v ) p )``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class Punct:
    """One of the six fixed punctuation/connective symbols."""

    name: str


LPAREN = Punct("(")
RPAREN = Punct(")")
COMMA = Punct(",")
NOT_SYM = Punct("!")
IMPLIES_SYM = Punct("->")
FORALL_SYM = Punct("forall")


@dataclass(frozen=True)
class Variable:
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("variable index must be >= 1")


@dataclass(frozen=True)
class Constant:
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("constant index must be >= 1")


@dataclass(frozen=True)
class FuncLetter:
    arity: int
    index: int

    def __post_init__(self):
        if self.arity < 0 or self.index < 1:
            raise ValueError("function letter needs arity >= 0 and index >= 1")


@dataclass(frozen=True)
class PredLetter:
    arity: int
    index: int

    def __post_init__(self):
        if self.arity < 1 or self.index < 1:
            raise ValueError("predicate letter needs arity >= 1 and index >= 1")


@dataclass(frozen=True)
class Placeholder:
    """A schematic sentence letter carrying its own odd code."""

    code: int

    def __post_init__(self):
        if self.code < 1 or self.code % 2 == 0:
            raise ValueError("placeholder codes must be odd naturals")
        if self.code in (3, 5, 7, 9, 11, 13):
            raise ValueError("placeholder codes must not collide with punctuation")


@dataclass(frozen=True)
class FuncApp:
    letter: FuncLetter
    args: tuple

    def __init__(self, letter, args=()):
        object.__setattr__(self, "letter", letter)
        object.__setattr__(self, "args", tuple(args))


@dataclass(frozen=True)
class Atom:
    """Atomic formula.

    The letter is normally a predicate letter; function letters are
    also accepted in atom position so that relation-like uses of
    function symbols remain expressible.
    """

    letter: Union[PredLetter, FuncLetter]
    args: tuple

    def __init__(self, letter, args=()):
        object.__setattr__(self, "letter", letter)
        object.__setattr__(self, "args", tuple(args))


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class Implies:
    antecedent: "Formula"
    consequent: "Formula"


@dataclass(frozen=True)
class Forall:
    var: Variable
    body: "Formula"


Term = Union[Variable, Constant, FuncApp]
Formula = Union[Placeholder, Atom, Not, Implies, Forall]
Expression = Union[Term, Formula]
Symbol = Union[Punct, Variable, Constant, FuncLetter, PredLetter, Placeholder]


def is_term(expr) -> bool:
    return isinstance(expr, (Variable, Constant, FuncApp))


def is_formula(expr) -> bool:
    return isinstance(expr, (Placeholder, Atom, Not, Implies, Forall))


def well_formed(expr) -> bool:
    """Check arity and shape invariants recursively."""
    if isinstance(expr, (Variable, Constant, Placeholder)):
        return True
    if isinstance(expr, FuncApp):
        return len(expr.args) == expr.letter.arity and all(
            is_term(a) and well_formed(a) for a in expr.args
        )
    if isinstance(expr, Atom):
        return len(expr.args) == expr.letter.arity and all(
            is_term(a) and well_formed(a) for a in expr.args
        )
    if isinstance(expr, Not):
        return is_formula(expr.body) and well_formed(expr.body)
    if isinstance(expr, Implies):
        return (
            is_formula(expr.antecedent)
            and is_formula(expr.consequent)
            and well_formed(expr.antecedent)
            and well_formed(expr.consequent)
        )
    if isinstance(expr, Forall):
        return isinstance(expr.var, Variable) and is_formula(expr.body) and well_formed(expr.body)
    return False


def flatten(expr) -> list:
    """Linear primitive-symbol spelling used for numbering.

    Deterministic and fully parenthesized; injective on well-formed
    expressions.
    """
    out = []
    _flatten_into(expr, out)
    return out


def _flatten_into(expr, out):
    if isinstance(expr, (Variable, Constant, Placeholder)):
        out.append(expr)
    elif isinstance(expr, FuncApp):
        _flatten_application(expr.letter, expr.args, out)
    elif isinstance(expr, Atom):
        _flatten_application(expr.letter, expr.args, out)
    elif isinstance(expr, Not):
        out.append(LPAREN)
        out.append(NOT_SYM)
        _flatten_into(expr.body, out)
        out.append(RPAREN)
    elif isinstance(expr, Implies):
        out.append(LPAREN)
        _flatten_into(expr.antecedent, out)
        out.append(IMPLIES_SYM)
        _flatten_into(expr.consequent, out)
        out.append(RPAREN)
    elif isinstance(expr, Forall):
        out.append(LPAREN)
        out.append(LPAREN)
        out.append(FORALL_SYM)
        out.append(expr.var)
        out.append(RPAREN)
        _flatten_into(expr.body, out)
        out.append(RPAREN)
    else:
        raise TypeError(f"not an expression: {expr!r}")


def _flatten_application(letter, args, out):
    out.append(letter)
    if args:
        out.append(LPAREN)
        for i, arg in enumerate(args):
            if i:
                out.append(COMMA)
            _flatten_into(arg, out)
        out.append(RPAREN)


def size(expr) -> int:
    """Number of primitive symbols in the spelling of ``expr``."""
    return len(flatten(expr))


def free_vars(expr) -> frozenset:
    if isinstance(expr, Variable):
        return frozenset((expr,))
    if isinstance(expr, (Constant, Placeholder)):
        return frozenset()
    if isinstance(expr, (FuncApp, Atom)):
        out = frozenset()
        for a in expr.args:
            out |= free_vars(a)
        return out
    if isinstance(expr, Not):
        return free_vars(expr.body)
    if isinstance(expr, Implies):
        return free_vars(expr.antecedent) | free_vars(expr.consequent)
    if isinstance(expr, Forall):
        return free_vars(expr.body) - {expr.var}
    raise TypeError(f"not an expression: {expr!r}")


def variables_of(term) -> frozenset:
    """All variables occurring in a term (terms bind nothing)."""
    return free_vars(term)


def substitute(formula, var: Variable, term):
    """Replace free occurrences of ``var`` by ``term``.

    Plain textual substitution; callers must ensure the term is free
    for the variable when capture matters (see :func:`free_for`).
    """
    if isinstance(formula, Variable):
        return term if formula == var else formula
    if isinstance(formula, (Constant, Placeholder)):
        return formula
    if isinstance(formula, FuncApp):
        return FuncApp(formula.letter, tuple(substitute(a, var, term) for a in formula.args))
    if isinstance(formula, Atom):
        return Atom(formula.letter, tuple(substitute(a, var, term) for a in formula.args))
    if isinstance(formula, Not):
        return Not(substitute(formula.body, var, term))
    if isinstance(formula, Implies):
        return Implies(
            substitute(formula.antecedent, var, term),
            substitute(formula.consequent, var, term),
        )
    if isinstance(formula, Forall):
        if formula.var == var:
            return formula
        return Forall(formula.var, substitute(formula.body, var, term))
    raise TypeError(f"not an expression: {formula!r}")


def free_for(term, var: Variable, formula) -> bool:
    """True when substituting ``term`` for free ``var`` captures nothing."""
    term_vars = variables_of(term)

    def walk(f, bound):
        if isinstance(f, Variable):
            return not (f == var and f not in bound and (term_vars & bound))
        if isinstance(f, (Constant, Placeholder)):
            return True
        if isinstance(f, (FuncApp, Atom)):
            return all(walk(a, bound) for a in f.args)
        if isinstance(f, Not):
            return walk(f.body, bound)
        if isinstance(f, Implies):
            return walk(f.antecedent, bound) and walk(f.consequent, bound)
        if isinstance(f, Forall):
            if f.var == var:
                return True
            return walk(f.body, bound | {f.var})
        raise TypeError(f"not an expression: {f!r}")

    return walk(formula, frozenset())

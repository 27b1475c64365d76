"""Textual formats for formulas and proof scripts.

Formula grammar (whitespace-insensitive):

    formula := '!' formula
             | 'forall' VAR formula
             | '(' formula [ '->' formula ] ')'
             | 'B' DIGITS                       placeholder with its code
             | LETTER '(' term , ... ')'        atom
    term    := 'x' DIGITS | 'a' DIGITS
             | 'f' N '_' K [ '(' term , ... ')' ]
    LETTER  := 'f' N '_' K | 'A' N '_' K

Proof scripts (``.paproof``) are line oriented::

    #v1
    1. (B51 -> (B53 -> B51)) ; axiom A1
    2. raw: 3 9 51 5 ; premise

with justifications ``axiom [ID]``, ``mp I J`` (antecedent line I,
implication line J), ``gen I xK`` and ``premise``. A ``raw:`` body
gives the symbol codes of a line verbatim instead of a formula.
Single-formula files (``.pafml``) hold the ``#v1`` header and one
formula line (or one ``raw:`` line). Parsing is total: any input
yields a value or a positioned error.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Union

from .errors import (
    ArityError,
    BadJustificationRefError,
    EmptyProofError,
    FormulaSyntaxError,
    ProofSyntaxError,
)
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
    is_formula,
)

FORMAT_VERSION = "#v1"


# -- justifications and scripts -----------------------------------------


@dataclass(frozen=True)
class AxiomSchema:
    """Axiom line; ``schema_id`` None means any recognized schema."""

    schema_id: Optional[str] = None


@dataclass(frozen=True)
class MP:
    antecedent: int
    implication: int


@dataclass(frozen=True)
class Gen:
    premise: int
    var: Variable


@dataclass(frozen=True)
class Premise:
    pass


Justification = Union[AxiomSchema, MP, Gen, Premise]


@dataclass(frozen=True)
class ProofLine:
    index: int
    formula: object  # Formula, or None for raw lines
    justification: Justification
    spelling: Optional[tuple] = None  # verbatim symbol codes for raw lines


@dataclass(frozen=True)
class ProofScript:
    lines: tuple

    def __init__(self, lines):
        object.__setattr__(self, "lines", tuple(lines))

    def __len__(self):
        return len(self.lines)

    @property
    def has_premises(self):
        return any(isinstance(l.justification, Premise) for l in self.lines)


# -- formula lexer/parser ------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(->|[()!,]|[A-Za-z][A-Za-z0-9_]*|\S)")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            break
        tok = m.group(1)
        tok_pos = m.start(1)
        if tok not in "()!," and tok != "->" and not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", tok):
            raise FormulaSyntaxError(tok_pos, "a formula token", tok)
        tokens.append((tok, tok_pos))
        pos = m.end()
    return tokens


_NAME_RE = re.compile(r"([A-Za-z])(\d*)(?:_(\d+))?$")


class _FormulaParser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def here(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][1]
        return len(self.text)

    def take(self, expected=None):
        if self.pos >= len(self.tokens):
            raise FormulaSyntaxError(len(self.text), expected or "more input", "end of input")
        tok, tok_pos = self.tokens[self.pos]
        if expected is not None and tok != expected:
            raise FormulaSyntaxError(tok_pos, repr(expected), tok)
        self.pos += 1
        return tok, tok_pos

    def parse_formula(self):
        tok = self.peek()
        if tok == "!":
            self.take()
            return Not(self.parse_formula())
        if tok == "forall":
            self.take()
            var = self.parse_variable()
            return Forall(var, self.parse_formula())
        if tok == "(":
            self.take()
            left = self.parse_formula()
            if self.peek() == "->":
                self.take()
                right = self.parse_formula()
                self.take(")")
                return Implies(left, right)
            self.take(")")
            return left
        return self.parse_atom()

    def parse_variable(self):
        tok, tok_pos = self.take()
        m = _NAME_RE.match(tok)
        if not (m and m.group(1) == "x" and m.group(2) and m.group(3) is None):
            raise FormulaSyntaxError(tok_pos, "a variable like x1", tok)
        return Variable(int(m.group(2)))

    def parse_atom(self):
        tok, tok_pos = self.take()
        m = _NAME_RE.match(tok)
        if not m:
            raise FormulaSyntaxError(tok_pos, "a formula", tok)
        head, num, sub = m.group(1), m.group(2), m.group(3)
        if head == "B" and num and sub is None:
            try:
                return Placeholder(int(num))
            except ValueError as exc:
                raise FormulaSyntaxError(tok_pos, "an odd unreserved placeholder code", tok) from exc
        if head in ("A", "f") and num and sub is not None:
            arity, index = int(num), int(sub)
            letter = (PredLetter if head == "A" else FuncLetter)(arity, index)
            args = self.parse_args(tok_pos, arity)
            return Atom(letter, args)
        raise FormulaSyntaxError(tok_pos, "a formula", tok)

    def parse_args(self, head_pos, arity):
        args = []
        self.take("(")
        if self.peek() != ")":
            args.append(self.parse_term())
            while self.peek() == ",":
                self.take()
                args.append(self.parse_term())
        self.take(")")
        if len(args) != arity:
            raise ArityError(f"letter of arity {arity} applied to {len(args)} arguments")
        return tuple(args)

    def parse_term(self):
        tok, tok_pos = self.take()
        m = _NAME_RE.match(tok)
        if not m:
            raise FormulaSyntaxError(tok_pos, "a term", tok)
        head, num, sub = m.group(1), m.group(2), m.group(3)
        if head == "x" and num and sub is None:
            return Variable(int(num))
        if head == "a" and num and sub is None:
            return Constant(int(num))
        if head == "f" and num and sub is not None:
            arity, index = int(num), int(sub)
            letter = FuncLetter(arity, index)
            if self.peek() == "(":
                return FuncApp(letter, self.parse_args(tok_pos, arity))
            if arity == 0:
                return FuncApp(letter, ())
            raise FormulaSyntaxError(self.here(), "'(' with arguments", self.peek())
        raise FormulaSyntaxError(tok_pos, "a term", tok)


def parse_formula(text: str):
    """Parse the surface syntax into a well-formed formula."""
    parser = _FormulaParser(text)
    formula = parser.parse_formula()
    if parser.pos != len(parser.tokens):
        raise FormulaSyntaxError(parser.here(), "end of input", parser.peek())
    return formula


def parse_term(text: str):
    parser = _FormulaParser(text)
    term = parser.parse_term()
    if parser.pos != len(parser.tokens):
        raise FormulaSyntaxError(parser.here(), "end of input", parser.peek())
    return term


# -- rendering -----------------------------------------------------------


def render(value) -> str:
    """Inverse of parsing: parse(render(x)) == x."""
    if isinstance(value, ProofScript):
        return render_proof(value)
    return _render_expr(value)


def _render_expr(e):
    if isinstance(e, Placeholder):
        return f"B{e.code}"
    if isinstance(e, Variable):
        return f"x{e.index}"
    if isinstance(e, Constant):
        return f"a{e.index}"
    if isinstance(e, FuncApp):
        return _render_app("f", e.letter, e.args)
    if isinstance(e, Atom):
        head = "A" if isinstance(e.letter, PredLetter) else "f"
        return _render_app(head, e.letter, e.args)
    if isinstance(e, Not):
        return f"(!{_render_expr(e.body)})"
    if isinstance(e, Implies):
        return f"({_render_expr(e.antecedent)} -> {_render_expr(e.consequent)})"
    if isinstance(e, Forall):
        return f"forall x{e.var.index} {_render_expr(e.body)}"
    raise TypeError(f"not renderable: {e!r}")


def _render_app(head, letter, args):
    inner = ", ".join(_render_expr(a) for a in args)
    return f"{head}{letter.arity}_{letter.index}({inner})"


def render_justification(j) -> str:
    if isinstance(j, AxiomSchema):
        return "axiom" if j.schema_id is None else f"axiom {j.schema_id}"
    if isinstance(j, MP):
        return f"mp {j.antecedent} {j.implication}"
    if isinstance(j, Gen):
        return f"gen {j.premise} x{j.var.index}"
    if isinstance(j, Premise):
        return "premise"
    raise TypeError(f"not a justification: {j!r}")


def render_proof(script: ProofScript) -> str:
    out = [FORMAT_VERSION]
    for line in script.lines:
        if line.spelling is not None:
            body = "raw: " + " ".join(str(c) for c in line.spelling)
        else:
            body = _render_expr(line.formula)
        out.append(f"{line.index}. {body} ; {render_justification(line.justification)}")
    return "\n".join(out) + "\n"


def render_formula_file(formula) -> str:
    return f"{FORMAT_VERSION}\n{_render_expr(formula)}\n"


# -- proof parsing -------------------------------------------------------

_LINE_RE = re.compile(r"^(\d+)\.\s*(.*?)\s*;\s*(.*?)\s*$")
_JUST_RES = {
    "axiom": re.compile(r"^axiom(?:\s+([A-Za-z0-9]+))?$"),
    "mp": re.compile(r"^mp\s+(\d+)\s+(\d+)$"),
    "gen": re.compile(r"^gen\s+(\d+)\s+x(\d+)$"),
    "premise": re.compile(r"^premise$"),
}


def _parse_justification(text, line_no, index):
    for kind, rx in _JUST_RES.items():
        m = rx.match(text)
        if not m:
            continue
        if kind == "axiom":
            return AxiomSchema(m.group(1))
        if kind == "premise":
            return Premise()
        if kind == "mp":
            i, j = int(m.group(1)), int(m.group(2))
            if i >= index or j >= index or i < 1 or j < 1:
                raise BadJustificationRefError(
                    line_no, f"mp cites lines {i},{j} from line {index}"
                )
            return MP(i, j)
        i, k = int(m.group(1)), int(m.group(2))
        if i >= index or i < 1:
            raise BadJustificationRefError(line_no, f"gen cites line {i} from line {index}")
        return Gen(i, Variable(k))
    raise ProofSyntaxError(line_no, f"unreadable justification {text!r}")


def _check_header(lines, what):
    if not lines or lines[0].strip() != FORMAT_VERSION:
        raise ProofSyntaxError(1, f"{what} must start with the {FORMAT_VERSION} header")


def parse_proof(text: str) -> ProofScript:
    """Parse a proof script; the first error wins, with its line number."""
    raw_lines = text.splitlines()
    _check_header(raw_lines, "proof scripts")
    lines = []
    next_index = 1
    for line_no, raw in enumerate(raw_lines[1:], start=2):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        m = _LINE_RE.match(stripped)
        if not m:
            raise ProofSyntaxError(line_no, "expected '<n>. <formula> ; <justification>'")
        index = int(m.group(1))
        if index != next_index:
            raise ProofSyntaxError(line_no, f"expected line index {next_index}, found {index}")
        body, just_text = m.group(2), m.group(3)
        justification = _parse_justification(just_text, line_no, index)
        if body.startswith("raw:"):
            try:
                spelling = tuple(int(c) for c in body[4:].split())
            except ValueError as exc:
                raise ProofSyntaxError(line_no, f"bad raw spelling: {exc}") from exc
            if not spelling:
                raise ProofSyntaxError(line_no, "raw spelling needs at least one code")
            lines.append(ProofLine(index, None, justification, spelling))
        else:
            try:
                formula = parse_formula(body)
            except (FormulaSyntaxError, ArityError) as exc:
                raise ProofSyntaxError(line_no, str(exc)) from exc
            if not is_formula(formula):
                raise ProofSyntaxError(line_no, "proof lines must be formulas")
            lines.append(ProofLine(index, formula, justification))
        next_index += 1
    if not lines:
        raise EmptyProofError("proof script has no lines")
    return ProofScript(lines)


def parse_formula_file(text: str):
    """Parse a single-formula file: the header plus one body line."""
    raw_lines = text.splitlines()
    _check_header(raw_lines, "formula files")
    bodies = [l.strip() for l in raw_lines[1:] if l.strip() and not l.strip().startswith("#")]
    if len(bodies) != 1:
        raise ProofSyntaxError(2, f"expected exactly one formula line, found {len(bodies)}")
    body = bodies[0]
    if body.startswith("raw:"):
        try:
            spelling = tuple(int(c) for c in body[4:].split())
        except ValueError as exc:
            raise ProofSyntaxError(2, f"bad raw spelling: {exc}") from exc
        if not spelling:
            raise ProofSyntaxError(2, "raw spelling needs at least one code")
        return spelling
    return parse_formula(body)

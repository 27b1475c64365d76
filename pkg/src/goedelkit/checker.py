"""AST-level Hilbert proof verification and compilation to numbers.

``check_proof`` validates each line against its claimed justification;
``compile_proof`` numbers the line sequence. The two sides are kept in
exact agreement with the arithmetized predicates: a premiseless script
checks out here if and only if its compiled number satisfies the proof
predicate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import codec, schemas
from .codec import CANONICAL_TABLE, Seq, seq_of_codes
from .errors import EmptySequenceError, NotACodeError
from .reader import AxiomSchema, Gen, MP, Premise, ProofScript
from .syntax import Forall, Implies, flatten


@dataclass(frozen=True)
class LineStatus:
    index: int
    accepted: bool
    detail: str

    def render(self) -> str:
        verdict = "ACCEPT" if self.accepted else "REJECT"
        return f"{self.index}: {verdict} {self.detail}"


@dataclass(frozen=True)
class CheckReport:
    ok: bool
    lines: tuple
    theorem: object  # last line's formula when ok, else None

    def render(self) -> str:
        return "\n".join(status.render() for status in self.lines)


def recognize_axiom(formula) -> Optional[str]:
    """First matching schema id in fixed order A1..A5, S1..S9."""
    return schemas.recognize(formula)


def _line_formula(line, table):
    """AST of a script line; raw spellings are decoded leniently."""
    if line.formula is not None:
        return line.formula
    try:
        decoded = codec.decode_symbol_string(list(line.spelling), table)
    except NotACodeError:
        return None
    from .syntax import is_formula

    return decoded if is_formula(decoded) else None


def check_proof(script: ProofScript, table=CANONICAL_TABLE) -> CheckReport:
    """Validate every line; failures land in the report, never raise."""
    formulas = [_line_formula(line, table) for line in script.lines]
    statuses = []
    all_ok = True
    for pos, line in enumerate(script.lines):
        status = _check_line(line, pos, formulas)
        statuses.append(status)
        all_ok = all_ok and status.accepted
    theorem = formulas[-1] if all_ok else None
    return CheckReport(all_ok and theorem is not None, tuple(statuses), theorem)


def _check_line(line, pos, formulas) -> LineStatus:
    current = formulas[pos]
    if current is None:
        return LineStatus(line.index, False, "malformed formula")
    just = line.justification
    if isinstance(just, Premise):
        return LineStatus(line.index, True, "premise")
    if isinstance(just, AxiomSchema):
        if just.schema_id is None:
            found = recognize_axiom(current)
            if found is None:
                return LineStatus(line.index, False, "not an axiom instance")
            return LineStatus(line.index, True, f"axiom {found}")
        if schemas.matches(current, just.schema_id):
            return LineStatus(line.index, True, f"axiom {just.schema_id}")
        return LineStatus(line.index, False, f"not an {just.schema_id} instance")
    if isinstance(just, MP):
        antecedent = formulas[just.antecedent - 1]
        implication = formulas[just.implication - 1]
        if antecedent is None or implication is None:
            return LineStatus(line.index, False, "mp cites a malformed line")
        if implication == Implies(antecedent, current):
            return LineStatus(line.index, True, f"mp {just.antecedent} {just.implication}")
        return LineStatus(line.index, False, "mp shape mismatch")
    if isinstance(just, Gen):
        premise = formulas[just.premise - 1]
        if premise is None:
            return LineStatus(line.index, False, "gen cites a malformed line")
        if current == Forall(just.var, premise):
            return LineStatus(line.index, True, f"gen {just.premise} x{just.var.index}")
        return LineStatus(line.index, False, "gen shape mismatch")
    return LineStatus(line.index, False, f"unknown justification {just!r}")


def compile_proof(script: ProofScript, table=CANONICAL_TABLE) -> Seq:
    """Number the line sequence: one component per line, in order.

    Raw lines keep their verbatim spelling; formula lines use the
    canonical flattening. Validity is not required.
    """
    if not script.lines:
        raise EmptySequenceError("cannot compile an empty script")
    components = []
    for line in script.lines:
        if line.spelling is not None:
            components.append(seq_of_codes(line.spelling))
        else:
            components.append(codec.encode_symbols(flatten(line.formula), table))
    return Seq(tuple(components))

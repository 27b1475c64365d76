"""Arithmetized predicates over Goedel numbers, as decision procedures.

Every predicate is total: malformed towers (prime gaps, even symbol
codes, wrong shapes) make it false rather than raising. Bounded
quantifiers of the classical definitions are realized by iterating
over sequence components, never by numeric search, so each call halts
in time polynomial in the tower size of its arguments.

All functions are pure and reentrant; evaluation can be data-parallel.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import codec, schemas, syntax
from .codec import (
    CANONICAL_TABLE,
    Leaf,
    Seq,
    as_sequence,
    render_factored,
)
from .errors import NotACodeError
from .syntax import IMPLIES_SYM, LPAREN, NOT_SYM, RPAREN, FORALL_SYM, Variable


@dataclass(frozen=True)
class CharValue:
    """Characteristic value: 0 means the relation holds, 1 means not."""

    value: int

    def __post_init__(self):
        if self.value not in (0, 1):
            raise ValueError("characteristic values are 0 or 1")


@dataclass(frozen=True)
class PredicateRecord:
    """Loggable record of one predicate evaluation."""

    predicate: str
    args: tuple
    result: object
    steps: int

    def render(self) -> str:
        rendered = ", ".join(self.args)
        return f"{self.predicate}({rendered}) = {self.result} [{self.steps} steps]"


class _Ctx:
    """Per-call bookkeeping: table, step counter, decode caches."""

    __slots__ = ("table", "steps", "_formula_cache", "_expr_cache")

    def __init__(self, table):
        self.table = table
        self.steps = 0
        self._formula_cache = {}
        self._expr_cache = {}

    def bump(self, n=1):
        self.steps += n

    def leaf_codes(self, g):
        """Codes of an all-leaf sequence, else None."""
        seq = as_sequence(g)
        if seq is None:
            return None
        codes = []
        for c in seq.components:
            if not isinstance(c, Leaf):
                return None
            codes.append(c.value)
        return tuple(codes)

    def formula_of(self, g):
        """Formula reading of a code, or None."""
        key = id(g)
        if key in self._formula_cache:
            return self._formula_cache[key]
        result = None
        codes = self.leaf_codes(g)
        if codes is not None:
            self.bump(len(codes))
            try:
                items = codec._group_items(codes, self.table)
                result = codec._read_formula(items, self.table)
            except NotACodeError:
                result = None
        self._formula_cache[key] = result
        return result

    def expression_of(self, g):
        """Formula-or-term reading of a code, or None."""
        key = id(g)
        if key in self._expr_cache:
            return self._expr_cache[key]
        result = None
        codes = self.leaf_codes(g)
        if codes is not None:
            self.bump(len(codes))
            try:
                result = codec.decode_symbol_string(codes, self.table)
            except NotACodeError:
                result = None
        self._expr_cache[key] = result
        return result


def _gd(g, ctx) -> bool:
    return ctx.expression_of(g) is not None


def _fml(g, ctx) -> bool:
    return ctx.formula_of(g) is not None


def _evbl(g, ctx) -> bool:
    ctx.bump()
    seq = as_sequence(g)
    if seq is None or len(seq.components) != 1:
        return False
    only = seq.components[0]
    if not isinstance(only, Leaf):
        return False
    return isinstance(ctx.table.classify(only.value), Variable)


def _lax(g, ctx) -> bool:
    f = ctx.formula_of(g)
    return f is not None and schemas.is_logical_axiom(f)


def _prax(g, ctx) -> bool:
    f = ctx.formula_of(g)
    return f is not None and schemas.is_proper_axiom(f)


def _ax(g, ctx) -> bool:
    return _lax(g, ctx) or _prax(g, ctx)


def _mp(x, y, z, ctx) -> bool:
    """y spells ( x -> z ), and x, z are expression codes."""
    xs, ys, zs = ctx.leaf_codes(x), ctx.leaf_codes(y), ctx.leaf_codes(z)
    if xs is None or ys is None or zs is None:
        return False
    ctx.bump(len(ys))
    t = ctx.table
    template = (
        (t.punct_code(LPAREN),)
        + xs
        + (t.punct_code(IMPLIES_SYM),)
        + zs
        + (t.punct_code(RPAREN),)
    )
    return ys == template and _gd(x, ctx) and _gd(z, ctx)


def _gen(x, y, ctx) -> bool:
    """y spells ( ( forall v ) x ) for the variable read at position 3."""
    xs, ys = ctx.leaf_codes(x), ctx.leaf_codes(y)
    if xs is None or ys is None or len(ys) < 7:
        return False
    ctx.bump(len(ys))
    t = ctx.table
    lp, rp = t.punct_code(LPAREN), t.punct_code(RPAREN)
    var_code = ys[3]
    template = (lp, lp, t.punct_code(FORALL_SYM), var_code, rp) + xs + (rp,)
    if ys != template:
        return False
    if not isinstance(t.classify(var_code), Variable):
        return False
    return _gd(x, ctx)


def _prf(x, ctx) -> bool:
    """x is a sequence of formula codes, each an axiom or derived from
    earlier components by generalization or modus ponens."""
    seq = as_sequence(x)
    if seq is None or not seq.components:
        return False
    t = ctx.table
    lp, rp = t.punct_code(LPAREN), t.punct_code(RPAREN)
    imp, fa = t.punct_code(IMPLIES_SYM), t.punct_code(FORALL_SYM)
    earlier = {}
    comps = seq.components
    spelled = []
    for comp in comps:
        spelled.append(ctx.leaf_codes(comp))
    for i, v in enumerate(comps):
        ctx.bump()
        if not _line_ok(v, spelled[i], i, comps, spelled, earlier, ctx, lp, rp, imp, fa):
            return False
        earlier.setdefault(v, i)
    return True


def _line_ok(v, vs, i, comps, spelled, earlier, ctx, lp, rp, imp, fa):
    if vs is None:
        return False
    if _ax(v, ctx):
        return True
    # generalization of an earlier component
    if (
        len(vs) >= 7
        and vs[0] == lp
        and vs[1] == lp
        and vs[2] == fa
        and vs[4] == rp
        and vs[-1] == rp
        and isinstance(ctx.table.classify(vs[3]), Variable)
    ):
        ctx.bump(len(vs))
        inner = Seq(tuple(Leaf(c) for c in vs[5:-1]))
        if inner in earlier and _fml(inner, ctx) and _gd(inner, ctx):
            return True
    # modus ponens from two earlier components
    for j in range(i):
        w, ws = comps[j], spelled[j]
        if ws is None:
            continue
        k = len(ws) - len(vs) - 3
        if k < 1:
            continue
        ctx.bump(len(ws))
        if (
            ws[0] == lp
            and ws[-1] == rp
            and ws[1 + k] == imp
            and ws[k + 2 : -1] == vs
        ):
            z = Seq(tuple(Leaf(c) for c in ws[1 : 1 + k]))
            if (
                z in earlier
                and _fml(z, ctx)
                and _fml(w, ctx)
                and _gd(z, ctx)
                and _gd(v, ctx)
            ):
                return True
    return False


def _pf(x, v, ctx) -> bool:
    seq = as_sequence(x)
    if seq is None:
        return False
    ctx.bump()
    if not _prf(x, ctx):
        return False
    vseq = as_sequence(v)
    if vseq is None:
        return False
    return seq.components[-1] == vseq


def _rf(x, v, ctx) -> bool:
    vseq = as_sequence(v)
    if vseq is None:
        return False
    return _pf(x, codec.neg_code(vseq, ctx.table), ctx)


# -- public API ----------------------------------------------------------


def gd(x, table=CANONICAL_TABLE) -> bool:
    """x numbers a well-formed expression string (formula or term)."""
    return _gd(x, _Ctx(table))


def evbl(v, table=CANONICAL_TABLE) -> bool:
    """v numbers a single-symbol string consisting of one variable."""
    return _evbl(v, _Ctx(table))


def fml(x, table=CANONICAL_TABLE) -> bool:
    """x numbers a well-formed formula string."""
    return _fml(x, _Ctx(table))


def lax(y, table=CANONICAL_TABLE) -> bool:
    """y numbers an instance of a logical axiom schema."""
    return _lax(y, _Ctx(table))


def prax(y, table=CANONICAL_TABLE) -> bool:
    """y numbers an instance of a proper arithmetic axiom schema."""
    return _prax(y, _Ctx(table))


def ax(y, table=CANONICAL_TABLE) -> bool:
    """y numbers an axiom: logical or proper."""
    return _ax(y, _Ctx(table))


def mp(x, y, z, table=CANONICAL_TABLE) -> bool:
    """z follows from x and y by modus ponens: y = ( x -> z )."""
    return _mp(x, y, z, _Ctx(table))


def gen(x, y, table=CANONICAL_TABLE) -> bool:
    """y follows from x by generalization over some variable."""
    return _gen(x, y, _Ctx(table))


def prf(x, table=CANONICAL_TABLE) -> bool:
    """x numbers a valid proof sequence."""
    return _prf(x, _Ctx(table))


def pf(x, v, table=CANONICAL_TABLE) -> bool:
    """x numbers a proof whose last formula has number v."""
    return _pf(x, v, _Ctx(table))


def rf(x, v, table=CANONICAL_TABLE) -> bool:
    """x numbers a refutation of the formula numbered v.

    Definitionally pf(x, z) with z the negation code of v.
    """
    return _rf(x, v, _Ctx(table))


def c_pf(x, v, table=CANONICAL_TABLE) -> CharValue:
    """Characteristic function of pf: 0 when it holds, 1 otherwise."""
    return CharValue(0 if pf(x, v, table) else 1)


def c_rf(x, v, table=CANONICAL_TABLE) -> CharValue:
    """Characteristic function of rf: 0 when it holds, 1 otherwise."""
    return CharValue(0 if rf(x, v, table) else 1)


_DISPATCH = {
    "gd": (_gd, 1),
    "evbl": (_evbl, 1),
    "fml": (_fml, 1),
    "lax": (_lax, 1),
    "prax": (_prax, 1),
    "ax": (_ax, 1),
    "mp": (_mp, 3),
    "gen": (_gen, 2),
    "prf": (_prf, 1),
    "pf": (_pf, 2),
    "rf": (_rf, 2),
}


def evaluate(predicate: str, *args, table=CANONICAL_TABLE) -> PredicateRecord:
    """Run a predicate and return a structured record with step count."""
    if predicate in ("c_pf", "c_rf"):
        ctx = _Ctx(table)
        inner = _pf if predicate == "c_pf" else _rf
        result = CharValue(0 if inner(*args, ctx) else 1)
    else:
        fn, arity = _DISPATCH[predicate]
        if len(args) != arity:
            raise TypeError(f"{predicate} takes {arity} arguments, got {len(args)}")
        ctx = _Ctx(table)
        result = fn(*args, ctx)
    rendered = tuple(render_factored(a) for a in args)
    return PredicateRecord(predicate, rendered, result, ctx.steps)

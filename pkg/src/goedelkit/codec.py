"""Goedel numbering over consecutive prime powers.

An expression spelled ``X0 X1 ... Xn`` is numbered ``p0^c0 * ... *
pn^cn`` where ``ci`` is the code of symbol ``Xi`` and ``p0 = 2``. A
sequence of expressions is numbered the same way one level up, with
each exponent the number of a whole expression.

Numbers are kept as sparse exponent towers (:class:`Leaf` /
:class:`Seq`); the denoted integers are astronomically large for
anything beyond toy cases and only exist behind :func:`materialize`,
which enforces a decimal digit cap. Two towers are equal exactly when
they denote the same integer; the comparison never materializes a
sequence, it factorizes leaf values instead (cheap direction).

All values are immutable and all operations pure; everything here is
safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    CapExceededError,
    EmptySequenceError,
    FormulaSyntaxError,
    IndexOutOfRangeError,
    NotACodeError,
    NotASequenceError,
    TooLargeError,
    UnmappedSymbolError,
)
from . import syntax
from .syntax import (
    Atom,
    Constant,
    Forall,
    FORALL_SYM,
    FuncApp,
    FuncLetter,
    IMPLIES_SYM,
    COMMA,
    Implies,
    LPAREN,
    Not,
    NOT_SYM,
    Placeholder,
    PredLetter,
    Punct,
    RPAREN,
    Variable,
)

DEFAULT_DIGIT_CAP = 100_000

# -- primes ------------------------------------------------------------

_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def nth_prime(i: int) -> int:
    """The i-th prime, 0-indexed (p0 = 2)."""
    while len(_PRIMES) <= i:
        c = _PRIMES[-1] + 2
        while any(c % p == 0 for p in _PRIMES if p * p <= c):
            c += 2
        _PRIMES.append(c)
    return _PRIMES[i]


def decimal_digits(n: int) -> int:
    """Decimal length of a positive integer without str() conversion."""
    if n < 10:
        return 1
    d = (n.bit_length() - 1) * 30103 // 100000 + 1
    while n >= 10 ** d:
        d += 1
    return d


# -- symbol table ------------------------------------------------------

_PUNCT_CODES = {LPAREN: 3, RPAREN: 5, COMMA: 7, NOT_SYM: 9, IMPLIES_SYM: 11, FORALL_SYM: 13}


def _canonical_code(symbol) -> int:
    if isinstance(symbol, Punct):
        return _PUNCT_CODES[symbol]
    if isinstance(symbol, Variable):
        return 13 + 8 * symbol.index
    if isinstance(symbol, Constant):
        return 7 + 8 * symbol.index
    if isinstance(symbol, FuncLetter):
        return 1 + 8 * (2 ** symbol.arity * 3 ** symbol.index)
    if isinstance(symbol, PredLetter):
        return 3 + 8 * (2 ** symbol.arity * 3 ** symbol.index)
    if isinstance(symbol, Placeholder):
        return symbol.code
    raise UnmappedSymbolError(f"not a primitive symbol: {symbol!r}")


def _split_pow23(m: int):
    """m = 2^n * 3^k exactly, or None."""
    if m < 1:
        return None
    n = 0
    while m % 2 == 0:
        m //= 2
        n += 1
    k = 0
    while m % 3 == 0:
        m //= 3
        k += 1
    if m != 1:
        return None
    return n, k


class SymbolTable:
    """Maps primitive symbols to odd codes.

    The canonical completion is ``( ) , ! -> forall`` = 3 5 7 9 11 13,
    variables ``13+8k``, constants ``7+8k``, function letters
    ``1+8*(2^n*3^k)`` and predicate letters ``3+8*(2^n*3^k)``.
    Placeholders always map to their own code. A config file with
    ``symbol = code`` lines may override individual symbols.
    """

    def __init__(self, overrides=None):
        self._overrides = dict(overrides or {})
        for sym, code in self._overrides.items():
            if isinstance(sym, Placeholder):
                raise ValueError("placeholder codes cannot be overridden")
            if code < 1 or code % 2 == 0:
                raise ValueError(f"override for {sym!r} must be an odd natural")
        values = list(self._overrides.values())
        if len(set(values)) != len(values):
            raise ValueError("override codes must be pairwise distinct")
        self._reverse = {code: sym for sym, code in self._overrides.items()}
        self._shadowed = {
            _canonical_code(sym) for sym in self._overrides if not isinstance(sym, Placeholder)
        }

    def code_of(self, symbol) -> int:
        if isinstance(symbol, Placeholder):
            return symbol.code
        if symbol in self._overrides:
            return self._overrides[symbol]
        code = _canonical_code(symbol)
        if code in self._reverse and self._reverse[code] != symbol:
            raise UnmappedSymbolError(f"code {code} reassigned away from {symbol!r}")
        return code

    def classify(self, code: int):
        """Structural symbol for a code, or None.

        Placeholders are never returned here: whether a standalone odd
        code reads as a placeholder is decided by position during
        decoding.
        """
        if code in self._reverse:
            return self._reverse[code]
        if code in self._shadowed or code < 1 or code % 2 == 0:
            return None
        for sym, punct_code in _PUNCT_CODES.items():
            if code == punct_code and sym not in self._overrides:
                return sym
        r = code % 8
        if r == 5 and code >= 21:
            return Variable((code - 13) // 8)
        if r == 7 and code >= 15:
            return Constant((code - 7) // 8)
        if r == 1 and code > 1:
            nk = _split_pow23((code - 1) // 8)
            if nk and nk[1] >= 1:
                return FuncLetter(nk[0], nk[1])
        if r == 3 and code > 3:
            nk = _split_pow23((code - 3) // 8)
            if nk and nk[0] >= 1 and nk[1] >= 1:
                return PredLetter(nk[0], nk[1])
        return None

    def placeholder_ok(self, code: int) -> bool:
        sym = self.classify(code)
        return code % 2 == 1 and code >= 1 and not isinstance(sym, Punct)

    def punct_code(self, punct: Punct) -> int:
        return self.code_of(punct)


CANONICAL_TABLE = SymbolTable()

_CONFIG_FIXED = {
    "lparen": LPAREN,
    "rparen": RPAREN,
    "comma": COMMA,
    "not": NOT_SYM,
    "implies": IMPLIES_SYM,
    "forall": FORALL_SYM,
}


def _config_symbol(name: str):
    if name in _CONFIG_FIXED:
        return _CONFIG_FIXED[name]
    if name.startswith("x") and name[1:].isdigit():
        return Variable(int(name[1:]))
    if name.startswith("a") and name[1:].isdigit():
        return Constant(int(name[1:]))
    if name[:1] in ("f", "A") and "_" in name:
        arity, _, index = name[1:].partition("_")
        if arity.isdigit() and index.isdigit():
            cls = FuncLetter if name[0] == "f" else PredLetter
            return cls(int(arity), int(index))
    raise ValueError(f"unknown symbol name in table config: {name!r}")


def load_table(text: str) -> SymbolTable:
    """Parse a ``symbol = code`` config, overriding the canonical table."""
    overrides = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"table config line {line_no}: expected 'symbol = code'")
        name, _, value = line.partition("=")
        try:
            overrides[_config_symbol(name.strip())] = int(value.strip())
        except ValueError as exc:
            raise ValueError(f"table config line {line_no}: {exc}") from exc
    return SymbolTable(overrides)


# -- exponent towers ---------------------------------------------------


@dataclass(frozen=True, eq=False)
class Leaf:
    """A literal natural number >= 1."""

    value: int

    def __post_init__(self):
        if not isinstance(self.value, int) or self.value < 1:
            raise ValueError("leaf values are naturals >= 1")

    def canon(self):
        cached = getattr(self, "_canon", None)
        if cached is None:
            cached = _canon_int(self.value)
            object.__setattr__(self, "_canon", cached)
        return cached

    def __eq__(self, other):
        if not isinstance(other, (Leaf, Seq)):
            return NotImplemented
        return self.canon() == other.canon()

    def __hash__(self):
        return hash(self.canon())

    def __repr__(self):
        return f"Leaf({self.value})"


@dataclass(frozen=True, eq=False)
class Seq:
    """A nonempty product p0^e0 * ... * pn^en of consecutive primes."""

    components: tuple

    def __init__(self, components):
        components = tuple(components)
        if not components:
            raise EmptySequenceError("sequences need at least one component")
        for c in components:
            if not isinstance(c, (Leaf, Seq)):
                raise TypeError(f"component is not a GoedelNumber: {c!r}")
        object.__setattr__(self, "components", components)

    def canon(self):
        cached = getattr(self, "_canon", None)
        if cached is None:
            cached = ("s",) + tuple(c.canon() for c in self.components)
            object.__setattr__(self, "_canon", cached)
        return cached

    def __eq__(self, other):
        if not isinstance(other, (Leaf, Seq)):
            return NotImplemented
        return self.canon() == other.canon()

    def __hash__(self):
        return hash(self.canon())

    def __repr__(self):
        return f"Seq({list(self.components)!r})"


GoedelNumber = (Leaf, Seq)

_CANON_FACTOR_DIGITS = 10_000


@lru_cache(maxsize=65536)
def _canon_int(n: int):
    """Canonical form of the integer n as an exponent tower.

    ``("l", n)`` when n is 1, has a prime gap, or is too large to
    factorize; otherwise ``("s", ...)`` over its consecutive-prime
    exponents, canonicalized recursively.
    """
    if n == 1 or (n % 2 and n != 1):
        # odd n > 1 has no factor 2, hence a gap at p0
        return ("l", n)
    if decimal_digits(n) > _CANON_FACTOR_DIGITS:
        return ("l", n)
    exps = _consecutive_exponents(n)
    if exps is None:
        return ("l", n)
    return ("s",) + tuple(_canon_int(e) for e in exps)


def _consecutive_exponents(n: int):
    """Exponents of n over consecutive primes from 2, or None on a gap."""
    if n < 2:
        return None
    exps = []
    i = 0
    while n > 1:
        p = nth_prime(i)
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e == 0:
            return None
        exps.append(e)
        i += 1
    return exps


def normalize(g):
    """Rebuild g in canonical form (leaf values factorized where possible)."""
    return _from_canon(g.canon())


def _from_canon(c):
    if c[0] == "l":
        return Leaf(c[1])
    return Seq(tuple(_from_canon(x) for x in c[1:]))


def seq_of_codes(codes) -> Seq:
    """Seq of plain leaf exponents, e.g. a flattened symbol spelling."""
    return Seq(tuple(Leaf(c) for c in codes))


def as_sequence(g):
    """View g as a Seq; leaf values are factorized. None when impossible."""
    if isinstance(g, Seq):
        return g
    if isinstance(g, Leaf):
        if g.value < 2 or decimal_digits(g.value) > _CANON_FACTOR_DIGITS:
            return None
        exps = _consecutive_exponents(g.value)
        if exps is None:
            return None
        return seq_of_codes(exps)
    return None


def tower_size(g) -> int:
    """Total node count of the sparse representation."""
    if isinstance(g, Leaf):
        return 1
    return 1 + sum(tower_size(c) for c in g.components)


# -- sequence algebra --------------------------------------------------


def concat(x, y) -> Seq:
    """The ``*`` operator: exponent-sequence concatenation."""
    if not isinstance(x, Seq) or not isinstance(y, Seq):
        raise NotASequenceError("both operands of * must be sequences")
    return Seq(x.components + y.components)


def lh(x) -> int:
    """Number of components of a sequence."""
    if not isinstance(x, Seq):
        raise NotASequenceError("lh applies to sequences")
    return len(x.components)


def component(x, j: int):
    """The j-th component (x)_j, 0-indexed."""
    if not isinstance(x, Seq):
        raise NotASequenceError("component applies to sequences")
    if not 0 <= j < len(x.components):
        raise IndexOutOfRangeError(f"component {j} of a sequence of length {len(x.components)}")
    return x.components[j]


def neg_code(v, table: SymbolTable = CANONICAL_TABLE) -> Seq:
    """Code of (!a) given the code v of a: lparen, not, v, rparen."""
    if not isinstance(v, Seq):
        raise NotASequenceError("negation applies to formula codes (sequences)")
    head = (Leaf(table.punct_code(LPAREN)), Leaf(table.punct_code(NOT_SYM)))
    return Seq(head + v.components + (Leaf(table.punct_code(RPAREN)),))


# -- encoding ----------------------------------------------------------


def encode_symbols(symbols, table: SymbolTable = CANONICAL_TABLE) -> Seq:
    if not symbols:
        raise EmptySequenceError("cannot encode an empty symbol string")
    return seq_of_codes(table.code_of(s) for s in symbols)


def encode_expression(expr, table: SymbolTable = CANONICAL_TABLE) -> Seq:
    """Number an expression by its flattened spelling."""
    return encode_symbols(syntax.flatten(expr), table)


def encode_sequence(exprs, table: SymbolTable = CANONICAL_TABLE) -> Seq:
    """Number a list of expressions, one component per expression."""
    exprs = list(exprs)
    if not exprs:
        raise EmptySequenceError("cannot encode an empty expression sequence")
    return Seq(tuple(encode_expression(e, table) for e in exprs))


# -- materialization ---------------------------------------------------


def materialize(g, digit_cap: int = DEFAULT_DIGIT_CAP) -> int:
    """The denoted integer, if its decimal length fits the cap."""
    if digit_cap < 1:
        raise ValueError("digit cap must be positive")
    return _materialize(g, digit_cap)


def _materialize(g, cap: int) -> int:
    if isinstance(g, Leaf):
        if decimal_digits(g.value) > cap:
            raise CapExceededError(f"leaf exceeds {cap} decimal digits")
        return g.value
    exps = [_materialize(c, cap) for c in g.components]
    log_total = 0.0
    for i, e in enumerate(exps):
        if e > 4 * cap:
            raise CapExceededError(f"exponent alone exceeds {cap} decimal digits")
        log_total += e * math.log10(nth_prime(i))
        if log_total > cap + 1:
            raise CapExceededError(f"product exceeds {cap} decimal digits")
    n = 1
    for i, e in enumerate(exps):
        n *= nth_prime(i) ** e
    if decimal_digits(n) > cap:
        raise CapExceededError(f"product exceeds {cap} decimal digits")
    return n


def factorize(n: int, digit_cap: int = DEFAULT_DIGIT_CAP) -> Seq:
    """Inverse of materialize for gap-free naturals >= 2."""
    if not isinstance(n, int) or n < 2:
        raise ValueError("factorize applies to naturals >= 2")
    if decimal_digits(n) > digit_cap:
        raise TooLargeError(f"input exceeds {digit_cap} decimal digits")
    exps = _consecutive_exponents(n)
    if exps is None:
        raise NotASequenceError("prime gap: not a consecutive-prime product")
    return seq_of_codes(exps)


# -- factored rendering ------------------------------------------------


def render_factored(g) -> str:
    """Bit-exact text form: ascending primes, single spaces, carets.

    Nested sequence exponents render recursively in brackets, e.g.
    ``2^[2^3 * 3^9] * 3^5``.
    """
    if isinstance(g, Leaf):
        return str(g.value)
    parts = []
    for i, c in enumerate(g.components):
        if isinstance(c, Leaf):
            parts.append(f"{nth_prime(i)}^{c.value}")
        else:
            parts.append(f"{nth_prime(i)}^[{render_factored(c)}]")
    return " * ".join(parts)


def parse_factored(text: str):
    """Parse the factored rendering back into a GoedelNumber."""
    tokens = _factored_tokens(text)
    g, pos = _parse_product(tokens, 0)
    if pos != len(tokens):
        raise FormulaSyntaxError(tokens[pos][1], "end of input", tokens[pos][0])
    return g


def _factored_tokens(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append((text[i:j], i))
            i = j
        elif ch in "^*[]":
            tokens.append((ch, i))
            i += 1
        else:
            raise FormulaSyntaxError(i, "digit, '^', '*', '[' or ']'", ch)
    if not tokens:
        raise FormulaSyntaxError(0, "a factored number", "end of input")
    return tokens


def _parse_product(tokens, pos):
    factors = []
    while True:
        pos, base = _expect_int(tokens, pos)
        if pos < len(tokens) and tokens[pos][0] == "^":
            pos += 1
            if pos < len(tokens) and tokens[pos][0] == "[":
                sub, pos = _parse_product(tokens, pos + 1)
                if pos >= len(tokens) or tokens[pos][0] != "]":
                    raise FormulaSyntaxError(_pos_at(tokens, pos), "']'")
                pos += 1
                factors.append((base, sub))
            else:
                pos, e = _expect_int(tokens, pos)
                factors.append((base, Leaf(e)))
        else:
            if factors:
                raise FormulaSyntaxError(_pos_at(tokens, pos), "'^'")
            return Leaf(base), pos
        if pos < len(tokens) and tokens[pos][0] == "*":
            pos += 1
            continue
        break
    for i, (base, _) in enumerate(factors):
        if base != nth_prime(i):
            raise NotASequenceError(
                f"expected prime {nth_prime(i)} in position {i}, found {base}"
            )
    return Seq(tuple(exp for _, exp in factors)), pos


def _expect_int(tokens, pos):
    if pos >= len(tokens) or not tokens[pos][0].isdigit():
        raise FormulaSyntaxError(_pos_at(tokens, pos), "an integer")
    return pos + 1, int(tokens[pos][0])


def _pos_at(tokens, pos):
    return tokens[pos][1] if pos < len(tokens) else (tokens[-1][1] + len(tokens[-1][0]))


# -- decoding ----------------------------------------------------------


class _Group:
    __slots__ = ("items",)

    def __init__(self, items):
        self.items = items


def decode(g, table: SymbolTable = CANONICAL_TABLE):
    """The unique expression (or expression list) encoded by g.

    Uniqueness comes from prime factorization; the symbol-level reader
    also accepts conventionally abbreviated spellings (bare negations,
    dropped outer parentheses) which decode to the same expressions as
    their fully parenthesized forms. A single-symbol string that could
    read as either a bare term or a schematic letter decodes as the
    formula reading.
    """
    seq = as_sequence(g)
    if seq is None:
        raise NotACodeError("not a sequence number")
    kinds = {isinstance(c, Seq) for c in seq.components}
    if kinds == {False}:
        codes = [c.value for c in seq.components]
        return decode_symbol_string(codes, table)
    if kinds == {True}:
        return [decode(c, table) for c in seq.components]
    raise NotACodeError("mixed leaf and sequence components")


def _decode_expression(items, single, table):
    # Multi-symbol application strings prefer the term reading; a
    # standalone odd code prefers the schematic-letter reading.
    if not single:
        try:
            return _read_term(items, table)
        except NotACodeError:
            pass
    return _read_formula(items, table)


def decode_formula(g, table: SymbolTable = CANONICAL_TABLE):
    result = decode(g, table)
    if not syntax.is_formula(result):
        raise NotACodeError("not a formula code")
    return result


def decode_symbol_string(codes, table: SymbolTable = CANONICAL_TABLE):
    """Parse a string of symbol codes into a formula or term."""
    if not codes:
        raise NotACodeError("empty symbol string")
    items = _group_items(codes, table)
    return _decode_expression(items, len(codes) == 1, table)


def _group_items(codes, table):
    lparen = table.punct_code(LPAREN)
    rparen = table.punct_code(RPAREN)
    stack = [[]]
    for code in codes:
        if not isinstance(code, int) or code < 1:
            raise NotACodeError(f"invalid symbol code {code!r}")
        if code == lparen:
            stack.append([])
        elif code == rparen:
            if len(stack) == 1:
                raise NotACodeError("unbalanced closing parenthesis")
            grp = _Group(stack.pop())
            stack[-1].append(grp)
        else:
            stack[-1].append(code)
    if len(stack) != 1:
        raise NotACodeError("unbalanced opening parenthesis")
    return stack[0]


def _read_formula(items, table):
    implies = table.punct_code(IMPLIES_SYM)
    not_code = table.punct_code(NOT_SYM)
    forall = table.punct_code(FORALL_SYM)
    if not items:
        raise NotACodeError("empty formula")
    arrows = [i for i, it in enumerate(items) if it == implies]
    if len(arrows) > 1:
        raise NotACodeError("ambiguous implication chain")
    if len(arrows) == 1:
        i = arrows[0]
        return Implies(
            _read_formula(items[:i], table), _read_formula(items[i + 1 :], table)
        )
    head = items[0]
    if head == not_code:
        return Not(_read_formula(items[1:], table))
    if isinstance(head, _Group):
        quant = _quantifier_prefix(head, forall, table)
        if quant is not None:
            return Forall(quant, _read_formula(items[1:], table))
        if len(items) == 1:
            return _read_formula(head.items, table)
        raise NotACodeError("unexpected group in formula position")
    if len(items) == 1:
        if table.placeholder_ok(head):
            return Placeholder(head)
        raise NotACodeError(f"code {head} is not a formula on its own")
    letter = table.classify(head)
    if isinstance(letter, (PredLetter, FuncLetter)):
        if len(items) == 2 and isinstance(items[1], _Group):
            args = _read_term_list(items[1].items, table)
            if len(args) != letter.arity:
                raise NotACodeError(f"letter arity {letter.arity} with {len(args)} arguments")
            return Atom(letter, tuple(args))
    raise NotACodeError("unreadable formula string")


def _quantifier_prefix(group, forall, table):
    if len(group.items) == 2 and group.items[0] == forall:
        var_code = group.items[1]
        if isinstance(var_code, int):
            sym = table.classify(var_code)
            if isinstance(sym, Variable):
                return sym
    return None


def _read_term_list(items, table):
    comma = table.punct_code(COMMA)
    if not items:
        return []
    parts = [[]]
    for it in items:
        if it == comma:
            parts.append([])
        else:
            parts[-1].append(it)
    return [_read_term(p, table) for p in parts]


def _read_term(items, table):
    if not items:
        raise NotACodeError("empty term")
    head = items[0]
    if isinstance(head, _Group):
        raise NotACodeError("unexpected group in term position")
    sym = table.classify(head)
    if isinstance(sym, (Variable, Constant)):
        if len(items) != 1:
            raise NotACodeError("trailing symbols after a term")
        return sym
    if isinstance(sym, FuncLetter):
        if len(items) == 1:
            if sym.arity == 0:
                return FuncApp(sym, ())
            raise NotACodeError(f"function letter of arity {sym.arity} without arguments")
        if len(items) == 2 and isinstance(items[1], _Group):
            args = _read_term_list(items[1].items, table)
            if len(args) != sym.arity:
                raise NotACodeError(f"function arity {sym.arity} with {len(args)} arguments")
            return FuncApp(sym, tuple(args))
    raise NotACodeError("unreadable term string")

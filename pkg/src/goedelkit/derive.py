"""Mechanical construction of strict Hilbert derivations.

A :class:`Derivation` is a growing list of lines, each an axiom
instance, a hypothesis, or a modus-ponens / generalization step over
earlier lines. Hypotheses are discharged by the standard deduction
transformation (hypothesis-independent lines pass through verbatim,
dependent lines are rebuilt under the implication). Generalization is
only permitted on lines that depend on no open hypothesis, which keeps
the transformation purely propositional.

On top of the builder sit closed theorem constructors: identity,
double-negation introduction and elimination, contraposition, equality
reflexivity/symmetry/transitivity, and an induction-based refutation
of self-strict-inequality (no positive witness w with w + s = s).
"""

from __future__ import annotations

from . import schemas
from .errors import DerivationError
from .reader import AxiomSchema, Gen, MP, ProofLine, ProofScript
from .schemas import ZERO, eq, plus, succ
from .syntax import Forall, Implies, Not, Variable, free_vars, is_formula, variables_of


class Derivation:
    """A Hilbert derivation under construction, with dedup of lines."""

    def __init__(self, hypotheses=()):
        self.hypotheses = list(hypotheses)
        self.lines = []  # (formula, just) with just ("ax",id)|("hyp",)|("mp",i,j)|("gen",i,var)
        self._deps = []  # per line: frozenset of hypotheses it depends on
        self._index = {}

    @property
    def theorem(self):
        if not self.lines:
            raise DerivationError("empty derivation")
        return self.lines[-1][0]

    def __len__(self):
        return len(self.lines)

    def formula_at(self, i):
        return self.lines[i][0]

    def _add(self, formula, just, deps):
        existing = self._index.get(formula)
        if existing is not None:
            return existing
        self.lines.append((formula, just))
        self._deps.append(deps)
        idx = len(self.lines) - 1
        self._index[formula] = idx
        return idx

    def ensure_last(self, idx):
        """Make line ``idx`` the final line, duplicating it if needed.

        Line dedup can leave the intended theorem in the middle of the
        list; a verbatim re-justified copy at the end is still valid.
        """
        if idx == len(self.lines) - 1:
            return idx
        formula, just = self.lines[idx]
        self.lines.append((formula, just))
        self._deps.append(self._deps[idx])
        return len(self.lines) - 1

    def ax(self, formula, schema_id=None):
        if schema_id is not None:
            if not schemas.matches(formula, schema_id):
                raise DerivationError(f"not an {schema_id} instance: {formula!r}")
        else:
            schema_id = schemas.recognize(formula)
            if schema_id is None:
                raise DerivationError(f"not an axiom instance: {formula!r}")
        return self._add(formula, ("ax", schema_id), frozenset())

    def hyp(self, formula):
        if formula not in self.hypotheses:
            raise DerivationError("hypothesis not declared")
        return self._add(formula, ("hyp",), frozenset((formula,)))

    def mp(self, antecedent_idx, implication_idx):
        fi = self.lines[antecedent_idx][0]
        fj = self.lines[implication_idx][0]
        if not (isinstance(fj, Implies) and fj.antecedent == fi):
            raise DerivationError("modus ponens shape mismatch")
        deps = self._deps[antecedent_idx] | self._deps[implication_idx]
        return self._add(fj.consequent, ("mp", antecedent_idx, implication_idx), deps)

    def gen(self, premise_idx, var: Variable):
        if self._deps[premise_idx]:
            raise DerivationError("generalization over a hypothesis-dependent line")
        f = self.lines[premise_idx][0]
        return self._add(Forall(var, f), ("gen", premise_idx, var), frozenset())

    def include(self, other: "Derivation"):
        """Splice a closed derivation; returns the index of its theorem."""
        if other.hypotheses:
            raise DerivationError("only closed derivations can be included")
        mapping = {}
        for i, (formula, just) in enumerate(other.lines):
            kind = just[0]
            if kind == "ax":
                mapping[i] = self.ax(formula, just[1])
            elif kind == "mp":
                mapping[i] = self.mp(mapping[just[1]], mapping[just[2]])
            elif kind == "gen":
                mapping[i] = self.gen(mapping[just[1]], just[2])
            else:
                raise DerivationError("closed derivations cannot contain hypotheses")
        return mapping[len(other.lines) - 1]

    def discharge(self, hypothesis) -> "Derivation":
        """Deduction transformation: turn ``G, h |- C`` into ``G |- h -> C``."""
        if hypothesis not in self.hypotheses:
            raise DerivationError("cannot discharge an undeclared hypothesis")
        h = hypothesis
        new = Derivation([g for g in self.hypotheses if g != h])
        mapped = {}
        weak = {}
        for i, (formula, just) in enumerate(self.lines):
            kind = just[0]
            if h not in self._deps[i]:
                if kind == "ax":
                    mapped[i] = new.ax(formula, just[1])
                elif kind == "hyp":
                    mapped[i] = new.hyp(formula)
                elif kind == "mp":
                    mapped[i] = new.mp(mapped[just[1]], mapped[just[2]])
                else:
                    mapped[i] = new.gen(mapped[just[1]], just[2])
                weak[i] = False
                continue
            if kind == "hyp":
                mapped[i] = identity_into(new, h)
            elif kind == "mp":
                ia, ij = just[1], just[2]
                di = self.lines[ia][0]
                if weak[ia] and weak[ij]:
                    a2 = new.ax(schemas.a2(h, di, formula), "A2")
                    m = new.mp(mapped[ij], a2)
                    mapped[i] = new.mp(mapped[ia], m)
                elif weak[ia]:
                    mapped[i] = imp_trans_into(new, mapped[ia], mapped[ij])
                else:
                    a2 = new.ax(schemas.a2(h, di, formula), "A2")
                    m = new.mp(mapped[ij], a2)
                    a1 = new.ax(schemas.a1(di, h), "A1")
                    m2 = new.mp(mapped[ia], a1)
                    mapped[i] = new.mp(m2, m)
            else:
                raise DerivationError("generalization under the discharged hypothesis")
            weak[i] = True
        last = len(self.lines) - 1
        if weak[last]:
            target = mapped[last]
        else:
            formula = self.lines[last][0]
            a1 = new.ax(schemas.a1(formula, h), "A1")
            target = new.mp(mapped[last], a1)
        new.ensure_last(target)
        return new

    def to_script(self) -> ProofScript:
        if self.hypotheses:
            raise DerivationError("open hypotheses remain")
        out = []
        for i, (formula, just) in enumerate(self.lines):
            kind = just[0]
            if kind == "ax":
                j = AxiomSchema(just[1])
            elif kind == "mp":
                j = MP(just[1] + 1, just[2] + 1)
            elif kind == "gen":
                j = Gen(just[1] + 1, just[2])
            else:
                raise DerivationError("hypothesis line in a closed derivation")
            out.append(ProofLine(i + 1, formula, j))
        return ProofScript(out)


# -- small building blocks ------------------------------------------------


def identity_into(d: Derivation, phi) -> int:
    """Append a derivation of phi -> phi; returns its line index."""
    phi_phi = Implies(phi, phi)
    a1a = d.ax(schemas.a1(phi, phi_phi), "A1")
    a2 = d.ax(schemas.a2(phi, phi_phi, phi), "A2")
    m1 = d.mp(a1a, a2)
    a1b = d.ax(schemas.a1(phi, phi), "A1")
    return d.mp(a1b, m1)


def imp_trans_into(d: Derivation, i: int, j: int) -> int:
    """From lines X->Y and Y->Z, append X->Z."""
    fi, fj = d.formula_at(i), d.formula_at(j)
    if not (isinstance(fi, Implies) and isinstance(fj, Implies) and fj.antecedent == fi.consequent):
        raise DerivationError("implication chaining shape mismatch")
    x, y, z = fi.antecedent, fi.consequent, fj.consequent
    a1 = d.ax(schemas.a1(fj, x), "A1")
    m1 = d.mp(j, a1)
    a2 = d.ax(schemas.a2(x, y, z), "A2")
    m2 = d.mp(m1, a2)
    return d.mp(i, m2)


def refl_into(d: Derivation, term) -> int:
    """Append a derivation of term = term."""
    s5 = d.ax(schemas.s5(term), "S5")
    s1 = d.ax(schemas.s1(plus(term, ZERO), term, term), "S1")
    m = d.mp(s5, s1)
    return d.mp(s5, m)


def _eq_args(formula):
    if not (hasattr(formula, "letter") and formula.letter == schemas.EQ):
        raise DerivationError("not an equality line")
    return formula.args


def symm_into(d: Derivation, i: int) -> int:
    """From line a = b, append b = a."""
    a, b = _eq_args(d.formula_at(i))
    s1 = d.ax(schemas.s1(a, b, a), "S1")
    m = d.mp(i, s1)
    r = refl_into(d, a)
    return d.mp(r, m)


def trans_into(d: Derivation, i: int, j: int) -> int:
    """From lines a = b and b = c, append a = c."""
    a, b = _eq_args(d.formula_at(i))
    b2, c = _eq_args(d.formula_at(j))
    if b != b2:
        raise DerivationError("transitivity middle terms differ")
    k = symm_into(d, i)
    s1 = d.ax(schemas.s1(b, a, c), "S1")
    m = d.mp(k, s1)
    return d.mp(j, m)


# -- closed theorem constructors ------------------------------------------


def identity(phi) -> Derivation:
    """|- phi -> phi"""
    d = Derivation()
    d.ensure_last(identity_into(d, phi))
    return d


def dneg_elim(phi) -> Derivation:
    """|- !!phi -> phi"""
    nn = Not(Not(phi))
    d = Derivation([nn])
    h = d.hyp(nn)
    a1 = d.ax(schemas.a1(nn, Not(phi)), "A1")
    m1 = d.mp(h, a1)
    a3 = d.ax(schemas.a3(Not(phi), phi), "A3")
    m2 = d.mp(m1, a3)
    idn = d.include(identity(Not(phi)))
    d.ensure_last(d.mp(idn, m2))
    return d.discharge(nn)


def dneg_intro(phi) -> Derivation:
    """|- phi -> !!phi"""
    d = Derivation()
    dd = d.include(dneg_elim(Not(phi)))
    a3 = d.ax(schemas.a3(phi, Not(Not(phi))), "A3")
    m1 = d.mp(dd, a3)
    a1 = d.ax(schemas.a1(phi, Not(Not(Not(phi)))), "A1")
    d.ensure_last(imp_trans_into(d, a1, m1))
    return d


def contraposition(a, b) -> Derivation:
    """|- (a -> b) -> (!b -> !a)"""
    impl = Implies(a, b)
    sc = Derivation([impl, Not(b)])
    ih = sc.hyp(impl)
    dne = sc.include(dneg_elim(a))
    t1 = imp_trans_into(sc, dne, ih)
    hn = sc.hyp(Not(b))
    a1 = sc.ax(schemas.a1(Not(b), Not(Not(a))), "A1")
    m1 = sc.mp(hn, a1)
    a3 = sc.ax(schemas.a3(b, Not(a)), "A3")
    m2 = sc.mp(m1, a3)
    sc.ensure_last(sc.mp(t1, m2))
    return sc.discharge(Not(b)).discharge(impl)


def contrapose(premise: Derivation) -> Derivation:
    """From a closed derivation of a -> b, derive !b -> !a."""
    impl = premise.theorem
    if not isinstance(impl, Implies):
        raise DerivationError("contraposition needs an implication")
    a, b = impl.antecedent, impl.consequent
    sc = Derivation([Not(b)])
    il = sc.include(premise)
    dne = sc.include(dneg_elim(a))
    t1 = imp_trans_into(sc, dne, il)
    hn = sc.hyp(Not(b))
    a1 = sc.ax(schemas.a1(Not(b), Not(Not(a))), "A1")
    m1 = sc.mp(hn, a1)
    a3 = sc.ax(schemas.a3(b, Not(a)), "A3")
    m2 = sc.mp(m1, a3)
    sc.ensure_last(sc.mp(t1, m2))
    return sc.discharge(Not(b))


def refl_theorem(term) -> Derivation:
    """|- term = term"""
    d = Derivation()
    d.ensure_last(refl_into(d, term))
    return d


# -- arithmetic refutation -------------------------------------------------


def self_less_formula(var: Variable, term):
    """The unfolded strict self-inequality: some nonzero w has w + s = s.

    Spelled with primitive connectives only: the existential is
    not-forall-not and the conjunction p & q is !(p -> !q).
    """
    conj = Not(Implies(Not(eq(var, ZERO)), Not(eq(plus(var, term), term))))
    return Not(Forall(var, Not(conj)))


def _witness_chain(var: Variable, term) -> Derivation:
    """|- (var + term = term) -> (var = 0), by induction on a fresh variable."""
    banned = variables_of(term) | {var}
    z = Variable(1)
    while z in banned:
        z = Variable(z.index + 1)
    psi = Implies(eq(plus(var, z), z), eq(var, ZERO))

    base_hyp = eq(plus(var, ZERO), ZERO)
    b = Derivation([base_hyp])
    h = b.hyp(base_hyp)
    s5 = b.ax(schemas.s5(var), "S5")
    sym = symm_into(b, s5)
    b.ensure_last(trans_into(b, sym, h))
    base = b.discharge(base_hyp)

    step_hyp = eq(plus(var, succ(z)), succ(z))
    st = Derivation([psi, step_hyp])
    hp = st.hyp(psi)
    h2 = st.hyp(step_hyp)
    s6 = st.ax(schemas.s6(var, z), "S6")
    sym6 = symm_into(st, s6)
    tr = trans_into(st, sym6, h2)
    s4 = st.ax(schemas.s4(plus(var, z), z), "S4")
    m = st.mp(tr, s4)
    st.ensure_last(st.mp(m, hp))
    step = st.discharge(step_hyp).discharge(psi)

    d = Derivation()
    i0 = d.include(base)
    istep = d.include(step)
    ig = d.gen(istep, z)
    s9 = d.ax(schemas.s9(z, psi), "S9")
    m1 = d.mp(i0, s9)
    iall = d.mp(ig, m1)
    a4 = d.ax(schemas.a4(z, psi, term), "A4")
    d.ensure_last(d.mp(iall, a4))
    return d


def refute_self_less(var: Variable, term) -> Derivation:
    """Closed derivation of the negation of ``self_less_formula(var, term)``.

    The term must not contain the witness variable.
    """
    if var in variables_of(term):
        raise DerivationError("subject term must not contain the witness variable")
    chain = _witness_chain(var, term)
    chi_der = contrapose(chain)
    chi = chi_der.theorem  # !(var = 0) -> !(var + term = term)

    d = Derivation()
    ichi = d.include(chi_der)
    dni = d.include(dneg_intro(chi))
    inc = d.mp(ichi, dni)
    itheta = d.gen(inc, var)
    theta = d.formula_at(itheta)
    dni2 = d.include(dneg_intro(theta))
    d.ensure_last(d.mp(itheta, dni2))
    if d.theorem != Not(self_less_formula(var, term)):
        raise DerivationError("refutation built an unexpected theorem")
    return d


def dneg_elim_script(phi) -> ProofScript:
    """Strict proof script of !!phi -> phi."""
    return dneg_elim(phi).to_script()

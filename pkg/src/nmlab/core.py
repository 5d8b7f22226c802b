"""Finite propositional language, semantics, and the classical closure Cn.

Everything downstream is built on two finite encodings:

* a valuation is an int bitmask over the atoms (bit i = atom i is true);
* a set of valuations ("model set") is an int bitmask over the 2^n
  valuations (bit v = valuation v belongs to the set).

A theory is identified with its model set.  The empty model set is the
inconsistent theory (every formula), the full model set is Cn(emptyset).
Formula membership in a theory is an entailment query, so theories are
Cn-closed by construction and never materialized as formula lists.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce

MAX_ATOMS = 5

_ATOM_RE = re.compile(r"[a-z][a-z0-9_]*")
_RESERVED = ("top", "bot")


class NmlabError(Exception):
    """Base class for errors raised by this package."""


class FormulaSyntaxError(NmlabError):
    def __init__(self, message, position):
        super().__init__(f"{message} at offset {position}")
        self.position = position


class UnknownAtomError(NmlabError):
    def __init__(self, name, position):
        super().__init__(f"unknown atom {name!r} at offset {position}")
        self.name = name
        self.position = position


@dataclass(frozen=True)
class Language:
    """An ordered tuple of atom names, 1 <= n <= MAX_ATOMS."""

    atoms: tuple

    def __post_init__(self):
        if not (1 <= len(self.atoms) <= MAX_ATOMS):
            raise ValueError(f"atom count must be between 1 and {MAX_ATOMS}")
        if len(set(self.atoms)) != len(self.atoms):
            raise ValueError("atom names must be unique")
        for name in self.atoms:
            if not _ATOM_RE.fullmatch(name) or name in _RESERVED:
                raise ValueError(f"bad atom name {name!r}")

    @property
    def n(self):
        return len(self.atoms)

    @property
    def valuation_count(self):
        return 1 << self.n

    @property
    def full_models(self):
        """Bitmask with every valuation present (the model set of top)."""
        return (1 << self.valuation_count) - 1

    def atom_index(self, name):
        return self.atoms.index(name)

    def all_model_sets(self):
        """Every model set over this language; 2^(2^n) of them."""
        return range(self.full_models + 1)


def language(*atoms):
    return Language(tuple(atoms))


# --- formulas -------------------------------------------------------------

class Formula:
    __slots__ = ()


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class TopF(Formula):
    pass


@dataclass(frozen=True)
class BotF(Formula):
    pass


@dataclass(frozen=True)
class Not(Formula):
    sub: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


TOP = TopF()
BOT = BotF()


# --- parser ---------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(->|[!&|()]|[a-z][a-z0-9_]*)")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise FormulaSyntaxError(
                f"unexpected character {stripped[0]!r}",
                len(text) - len(stripped))
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    tokens.append((None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, lang):
        self.tokens = _tokenize(text)
        self.lang = lang
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0]

    def pos(self):
        return self.tokens[self.i][1]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self):
        phi = self.implication()
        if self.peek() is not None:
            raise FormulaSyntaxError(f"unexpected token {self.peek()!r}", self.pos())
        return phi

    def implication(self):
        left = self.disjunction()
        if self.peek() == "->":
            self.advance()
            return Implies(left, self.implication())
        return left

    def disjunction(self):
        phi = self.conjunction()
        while self.peek() == "|":
            self.advance()
            phi = Or(phi, self.conjunction())
        return phi

    def conjunction(self):
        phi = self.unary()
        while self.peek() == "&":
            self.advance()
            phi = And(phi, self.unary())
        return phi

    def unary(self):
        tok, pos = self.tokens[self.i]
        if tok == "!":
            self.advance()
            return Not(self.unary())
        if tok == "(":
            self.advance()
            phi = self.implication()
            if self.peek() != ")":
                raise FormulaSyntaxError("expected ')'", self.pos())
            self.advance()
            return phi
        if tok == "top":
            self.advance()
            return TOP
        if tok == "bot":
            self.advance()
            return BOT
        if tok is not None and _ATOM_RE.fullmatch(tok):
            self.advance()
            if tok not in self.lang.atoms:
                raise UnknownAtomError(tok, pos)
            return Atom(tok)
        raise FormulaSyntaxError("expected a formula", pos)


def parse_formula(text, lang):
    """Parse `text` into a Formula over `lang`; round-trips with format_formula."""
    return _Parser(text, lang).parse()


# --- printer --------------------------------------------------------------

_PREC_IMPLIES, _PREC_OR, _PREC_AND, _PREC_UNARY = 1, 2, 3, 4


def _fmt(phi, parent_prec, right_of_implies=False):
    if isinstance(phi, Atom):
        return phi.name
    if isinstance(phi, TopF):
        return "top"
    if isinstance(phi, BotF):
        return "bot"
    if isinstance(phi, Not):
        return "!" + _fmt(phi.sub, _PREC_UNARY)
    if isinstance(phi, And):
        text = _fmt(phi.left, _PREC_AND) + " & " + _fmt(phi.right, _PREC_AND + 1)
        prec = _PREC_AND
    elif isinstance(phi, Or):
        text = _fmt(phi.left, _PREC_OR) + " | " + _fmt(phi.right, _PREC_OR + 1)
        prec = _PREC_OR
    elif isinstance(phi, Implies):
        # right-associative: no parens needed on a right-nested implication
        text = _fmt(phi.left, _PREC_IMPLIES + 1) + " -> " + _fmt(phi.right, _PREC_IMPLIES)
        prec = _PREC_IMPLIES
    else:
        raise TypeError(f"not a formula: {phi!r}")
    if prec < parent_prec:
        return "(" + text + ")"
    return text


def format_formula(phi):
    """Minimal-parentheses ASCII rendering; inverse of parse_formula."""
    return _fmt(phi, 0)


# --- semantics ------------------------------------------------------------

_MODELS_CACHE = {}


def models_of(phi, lang):
    """Bitmask of the valuations satisfying `phi` over `lang`."""
    key = (lang, phi)
    cached = _MODELS_CACHE.get(key)
    if cached is not None:
        return cached
    full = lang.full_models
    if isinstance(phi, Atom):
        i = lang.atom_index(phi.name)
        bits = 0
        for v in range(lang.valuation_count):
            if v >> i & 1:
                bits |= 1 << v
    elif isinstance(phi, TopF):
        bits = full
    elif isinstance(phi, BotF):
        bits = 0
    elif isinstance(phi, Not):
        bits = full & ~models_of(phi.sub, lang)
    elif isinstance(phi, And):
        bits = models_of(phi.left, lang) & models_of(phi.right, lang)
    elif isinstance(phi, Or):
        bits = models_of(phi.left, lang) | models_of(phi.right, lang)
    elif isinstance(phi, Implies):
        bits = (full & ~models_of(phi.left, lang)) | models_of(phi.right, lang)
    else:
        raise TypeError(f"not a formula: {phi!r}")
    _MODELS_CACHE[key] = bits
    return bits


def fset(*formulas):
    """Duplicate-free formula tuple, preserving first-occurrence order."""
    out = []
    for phi in formulas:
        if phi not in out:
            out.append(phi)
    return tuple(out)


@dataclass(frozen=True)
class Theory:
    """A Cn-closed set of formulas, identified with its model set."""

    lang: Language
    models: int

    def __post_init__(self):
        if not 0 <= self.models <= self.lang.full_models:
            raise ValueError("model bitmask out of range")

    @property
    def is_consistent(self):
        return self.models != 0

    def contains(self, phi):
        return entails(self, phi)

    def subset_of(self, other):
        """Containment as formula sets: self subset-of other iff
        models(other) subset-of models(self)."""
        return other.models & ~self.models == 0

    def axiom(self):
        return canonical_axiom(self.models, self.lang)


def cn(X, lang):
    """Tarskian closure of the formula set X, as a Theory."""
    bits = lang.full_models
    for phi in X:
        bits &= models_of(phi, lang)
    return Theory(lang, bits)


def entails(theory, phi):
    """True iff every model of the theory satisfies phi."""
    return theory.models & ~models_of(phi, theory.lang) == 0


def conjoin(formulas):
    """Left-to-right conjunction in the given order; top for the empty tuple."""
    if not formulas:
        return TOP
    return reduce(And, formulas)


def arrow_set(A, Y):
    """{chi_A -> y : y in Y}, with chi_A the ordered conjunction of A.

    Defining equivalence: arrow_set(A, Y) subset-of Cn(X) iff
    Y subset-of Cn(X union A), for every X.
    """
    chi = conjoin(A)
    return tuple(Implies(chi, y) for y in Y)


def verify_admissibility(X, Y, Z, lang):
    """Cn(X,Y) intersect Cn(X,Z) = Cn(X, Cn(Y) intersect Cn(Z)), as theories."""
    mx = cn(X, lang).models
    my = cn(Y, lang).models
    mz = cn(Z, lang).models
    left = (mx & my) | (mx & mz)
    right = mx & (my | mz)
    return left == right


def verify_strong_admissibility(A, family, lang):
    """Cn(A, intersection_i Cn(Y_i)) = intersection_i Cn(A, Y_i), as theories.

    The family must be nonempty; the empty-intersection convention is owned
    by the representation layer, not here.
    """
    if not family:
        raise ValueError("family must be nonempty")
    ma = cn(A, lang).models
    union = 0
    left_parts = 0
    for Y in family:
        my = cn(Y, lang).models
        union |= my
        left_parts |= ma & my
    return (ma & union) == left_parts


def canonical_axiom(model_bits, lang):
    """The unique minterm-disjunction formula whose model set is `model_bits`.

    bot for the empty set, top for the full set; minterms are emitted in
    ascending valuation order with literals in atom order, so the output is
    deterministic.
    """
    if model_bits == 0:
        return BOT
    if model_bits == lang.full_models:
        return TOP
    minterms = []
    for v in range(lang.valuation_count):
        if model_bits >> v & 1:
            literals = tuple(
                Atom(a) if v >> i & 1 else Not(Atom(a))
                for i, a in enumerate(lang.atoms))
            minterms.append(conjoin(literals))
    return reduce(Or, minterms)

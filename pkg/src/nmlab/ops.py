"""Inference operations: the monotone baseline, closed-world variants,
Poole-style default systems, lookup-table operations, and operations built
from an assumption function.

An InferenceOp maps a finite formula set to a Theory.  Operations that
factor through Cn (their output depends only on the closure of the input)
carry the RIGHT_ABSORBING flag and are cached per closure, which is what
makes the exhaustive property sweeps cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    NmlabError,
    Theory,
    cn,
    entails,
    fset,
    models_of,
)

RIGHT_ABSORBING = "right_absorbing_by_construction"
TOTAL = "total"


class OpConfigError(NmlabError):
    """Bad operation configuration document."""


@dataclass
class InferenceOp:
    """A named finitary operation: FormulaSet -> Theory.

    apply is deterministic.  If RIGHT_ABSORBING is in flags, the result
    depends only on cn(X), and _closure_fn (model bitmask of cn(X) ->
    model bitmask of C(X)) is the implementation.
    """

    name: str
    lang: object
    flags: frozenset = frozenset({TOTAL})
    _set_fn: object = None
    _closure_fn: object = None
    _cache: dict = field(default_factory=dict)

    def apply(self, X):
        if RIGHT_ABSORBING in self.flags:
            key = cn(X, self.lang).models
            hit = self._cache.get(key)
            if hit is None:
                hit = Theory(self.lang, self._closure_fn(key))
                self._cache[key] = hit
            return hit
        key = frozenset(X)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._set_fn(tuple(X))
            self._cache[key] = hit
        return hit

    def apply_closure(self, model_bits):
        """Value at a Cn-closed input given by its model set (right-absorbing
        operations only)."""
        if RIGHT_ABSORBING not in self.flags:
            raise NmlabError(f"{self.name} is not flagged right-absorbing")
        hit = self._cache.get(model_bits)
        if hit is None:
            hit = Theory(self.lang, self._closure_fn(model_bits))
            self._cache[model_bits] = hit
        return hit

    @property
    def is_right_absorbing(self):
        return RIGHT_ABSORBING in self.flags


def theory_op(name, lang, closure_fn):
    return InferenceOp(
        name=name, lang=lang,
        flags=frozenset({RIGHT_ABSORBING, TOTAL}),
        _closure_fn=closure_fn)


def set_op(name, lang, set_fn):
    return InferenceOp(
        name=name, lang=lang, flags=frozenset({TOTAL}), _set_fn=set_fn)


# --- concrete systems -----------------------------------------------------

def op_cn(lang):
    """The monotone baseline: C(X) = Cn(X)."""
    return theory_op("cn", lang, lambda bits: bits)


def _true_atoms(valuation):
    return valuation  # the valuation bitmask is its own true-atom set


def op_cwa(lang):
    """Closed world assumption: add the negation of every atom that is not
    provable from X.  Explodes (empty model set) on inputs like {p | q}."""
    def closure(bits):
        out = bits
        for i in range(lang.n):
            atom_models = 0
            for v in range(lang.valuation_count):
                if v >> i & 1:
                    atom_models |= 1 << v
            provable = bits & ~atom_models == 0
            if not provable:
                out &= ~atom_models
        return out
    return theory_op("cwa", lang, closure)


def minimal_valuations(bits, lang):
    """Valuations in `bits` minimal under inclusion of their true-atom sets."""
    vals = [v for v in range(lang.valuation_count) if bits >> v & 1]
    out = []
    for v in vals:
        dominated = any(w != v and w & v == w for w in vals)
        if not dominated:
            out.append(v)
    return out


def op_gcwa(lang):
    """Generalized closed world assumption: add the negation of every atom
    that is false in all inclusion-minimal models of X.  Inconsistent inputs
    stay inconsistent."""
    def closure(bits):
        if bits == 0:
            return 0
        out = bits
        minimal = minimal_valuations(bits, lang)
        for i in range(lang.n):
            if all(not (v >> i & 1) for v in minimal):
                atom_models = 0
                for v in range(lang.valuation_count):
                    if v >> i & 1:
                        atom_models |= 1 << v
                out &= ~atom_models
        return out
    return theory_op("gcwa", lang, closure)


@dataclass(frozen=True)
class PooleSystem:
    """A finite duplicate-free set of default formulas."""

    defaults: tuple

    def __post_init__(self):
        if len(set(self.defaults)) != len(self.defaults):
            raise ValueError("defaults must be duplicate-free")


def poole_basis(sys, X, lang):
    """All B subset-of D consistent with X and maximal for that property.

    Empty list iff X itself is inconsistent.
    """
    base = cn(X, lang).models
    D = sys.defaults
    consistent = []
    for mask in range(1 << len(D)):
        bits = base
        for j in range(len(D)):
            if mask >> j & 1:
                bits &= models_of(D[j], lang)
        if bits != 0:
            consistent.append(mask)
    maximal = [
        m for m in consistent
        if not any(m2 != m and m2 & m == m for m2 in consistent)]
    return [fset(*(D[j] for j in range(len(D)) if m >> j & 1)) for m in maximal]


def op_poole(sys, lang):
    """C(X) = Cn(X, intersection over the basis of Cn(B)).  An empty basis
    (inconsistent X) yields the inconsistent theory, by the convention that
    an empty intersection is the whole language."""
    D = sys.defaults
    def closure(bits):
        if bits == 0:
            return 0
        consistent = []
        for mask in range(1 << len(D)):
            b = bits
            for j in range(len(D)):
                if mask >> j & 1:
                    b &= models_of(D[j], lang)
            if b != 0:
                consistent.append(mask)
        union = 0
        for m in consistent:
            if any(m2 != m and m2 & m == m for m2 in consistent):
                continue
            b = lang.full_models
            for j in range(len(D)):
                if m >> j & 1:
                    b &= models_of(D[j], lang)
            union |= b
        return bits & union
    name = "poole(" + ",".join(_short(d) for d in D) + ")"
    return theory_op(name, lang, closure)


def _short(phi):
    from .core import format_formula
    return format_formula(phi)


def op_from_table(lang, entries, default_identity=True, enforce_supraclassical=False):
    """Operation defined by a lookup table: model set of cn(X) -> model set
    of C(X).  Missing keys fall back to the identity (plain closure) when
    default_identity is set, otherwise they are an error."""
    for key, value in entries.items():
        if not (0 <= key <= lang.full_models and 0 <= value <= lang.full_models):
            raise OpConfigError("table entry out of range")
        if enforce_supraclassical and value & ~key:
            raise OpConfigError(
                f"table entry {key:#x} -> {value:#x} is not supraclassical")
    def closure(bits):
        if bits in entries:
            return entries[bits]
        if default_identity:
            return bits
        raise OpConfigError(f"no table entry for model set {bits:#x}")
    return theory_op("table", lang, closure)


@dataclass
class AssumptionFn:
    """A named assumption function X -> FormulaSet or Theory."""

    name: str
    lang: object
    fn: object
    right_absorbing: bool = False

    def apply(self, X):
        return self.fn(tuple(X))

    def models_at(self, X):
        """Model set of Cn(S(X)) (of S(X) itself when it is a Theory)."""
        out = self.apply(X)
        if isinstance(out, Theory):
            return out.models
        return cn(out, self.lang).models


def op_from_assumptions(S):
    """C(X) = Cn(X union S(X)).  Right-absorbing iff S is declared so."""
    lang = S.lang
    if S.right_absorbing:
        def closure(bits):
            from .core import canonical_axiom
            X = (canonical_axiom(bits, lang),)
            return bits & S.models_at(X)
        return theory_op(f"assume({S.name})", lang, closure)
    def set_fn(X):
        return Theory(lang, cn(X, lang).models & S.models_at(X))
    return set_op(f"assume({S.name})", lang, set_fn)


def two_variable_separation_op(lang):
    """The two-atom separating example: S(X) = Cn(first atom) when
    Cn(X) = Cn(emptyset), and the tautologies otherwise."""
    from .core import Atom
    p_models = models_of(Atom(lang.atoms[0]), lang)
    def fn(X):
        if cn(X, lang).models == lang.full_models:
            return Theory(lang, p_models)
        return Theory(lang, lang.full_models)
    S = AssumptionFn("two-variable", lang, fn, right_absorbing=True)
    return op_from_assumptions(S)


def poole_natural_assumptions(sys, lang):
    """The non-antitonic 'natural' assumption function of a Poole system:
    S(X) = intersection over the basis of Cn(B)."""
    def fn(X):
        # empty basis: the empty intersection is the whole language,
        # i.e. the inconsistent theory (model set 0), which is what an
        # empty union over the basis already yields
        union = 0
        for B in poole_basis(sys, X, lang):
            union |= cn(B, lang).models
        return Theory(lang, union)
    return AssumptionFn("poole-natural", lang, fn, right_absorbing=True)


def cwa_assumptions(lang):
    """CWA's defining assumption function: the negated unprovable atoms."""
    from .core import Atom, Not
    def fn(X):
        T = cn(X, lang)
        out = []
        for a in lang.atoms:
            if not entails(T, Atom(a)):
                out.append(Not(Atom(a)))
        return fset(*out)
    return AssumptionFn("cwa-literals", lang, fn, right_absorbing=True)


# --- configuration documents ---------------------------------------------

def op_from_config(doc, lang):
    """Build an operation from a config mapping.

    {"type": "cn" | "cwa" | "gcwa" | "poole" | "table" | "assumptions",
     "defaults": [formula, ...]                      for poole,
     "entries": [{"theory": f, "result": f}, ...]    for table,
     "entries": [{"theory": f, "assume": [f, ...]}]  for assumptions}

    Theories in configs are single canonical formulas.
    """
    from .core import parse_formula
    if not isinstance(doc, dict) or "type" not in doc:
        raise OpConfigError("config must be a mapping with a 'type' key")
    kind = doc["type"]
    if kind == "cn":
        return op_cn(lang)
    if kind == "cwa":
        return op_cwa(lang)
    if kind == "gcwa":
        return op_gcwa(lang)
    if kind == "poole":
        defaults = doc.get("defaults")
        if not isinstance(defaults, list):
            raise OpConfigError("poole config needs a 'defaults' list")
        D = fset(*(parse_formula(s, lang) for s in defaults))
        return op_poole(PooleSystem(D), lang)
    if kind == "table":
        entries = doc.get("entries")
        if not isinstance(entries, list):
            raise OpConfigError("table config needs an 'entries' list")
        table = {}
        for item in entries:
            key = models_of(parse_formula(item["theory"], lang), lang)
            table[key] = models_of(parse_formula(item["result"], lang), lang)
        return op_from_table(lang, table)
    if kind == "assumptions":
        entries = doc.get("entries", [])
        rules = []
        for item in entries:
            key = models_of(parse_formula(item["theory"], lang), lang)
            added = lang.full_models
            for s in item.get("assume", []):
                added &= models_of(parse_formula(s, lang), lang)
            rules.append((key, added))
        table = dict(rules)
        def fn(X):
            bits = cn(X, lang).models
            return Theory(lang, table.get(bits, lang.full_models))
        S = AssumptionFn("config", lang, fn, right_absorbing=True)
        return op_from_assumptions(S)
    raise OpConfigError(f"unknown operation type {kind!r}")

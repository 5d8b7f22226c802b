"""Bounded checkers for the eight structural properties of inference
operations, over a finite universe of test sets.

A Universe fixes a formula pool and a maximum set size; test sets are all
duplicate-free subsets of the pool up to that size, enumerated by (size,
lexicographic index) so the first counterexample found is deterministic.
Each check returns a PropertyVerdict: a replayable witness, or an
exhaustion certificate for the universe.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from .core import (
    And,
    Atom,
    Implies,
    NmlabError,
    Not,
    Or,
    canonical_axiom,
    cn,
    entails,
    fset,
    format_formula,
)

COUNTEREXAMPLE = "counterexample"
NO_COUNTEREXAMPLE = "no_counterexample_in_universe"
PRECONDITION_FAILED = "precondition_failed"


class UniverseCapError(NmlabError):
    """The check would exceed the instantiation cap; shrink pool or k."""


class PropertyKind(enum.Enum):
    SUPRACLASSICALITY = "supraclassicality"
    LEFT_ABSORPTION = "left_absorption"
    RIGHT_ABSORPTION = "right_absorption"
    DEDUCTIVITY = "deductivity"
    CUMULATIVITY = "cumulativity"
    ANTITONICITY = "antitonicity"
    COMPACTNESS = "compactness"
    SUPRACOMPACTNESS = "supracompactness"


def default_pool(lang):
    """Atoms, negated atoms, and all pairwise or/and/implies over distinct
    literals, deduplicated syntactically."""
    atoms = tuple(Atom(a) for a in lang.atoms)
    literals = atoms + tuple(Not(a) for a in atoms)
    pool = list(literals)
    for a, b in itertools.permutations(literals, 2):
        pool.extend((Or(a, b), And(a, b), Implies(a, b)))
    return fset(*pool)


@dataclass(frozen=True)
class Universe:
    """The bounded test space all quantifiers run over."""

    lang: object
    pool: tuple
    max_set_size: int
    cap: int = 10 ** 6

    def sets(self):
        """All subsets of the pool of size <= max_set_size, by (size, lex)."""
        out = [()]
        for size in range(1, self.max_set_size + 1):
            for idx in itertools.combinations(range(len(self.pool)), size):
                out.append(tuple(self.pool[i] for i in idx))
        return out

    def subsets_of(self, X):
        """All subsequences of X, by (size, lex); includes () and X."""
        out = [()]
        for size in range(1, len(X) + 1):
            for idx in itertools.combinations(range(len(X)), size):
                out.append(tuple(X[i] for i in idx))
        return out

    def describe(self):
        return {
            "atoms": list(self.lang.atoms),
            "pool": [format_formula(f) for f in self.pool],
            "max_set_size": self.max_set_size,
        }


def make_universe(lang, pool=None, max_set_size=2, cap=10 ** 6):
    if pool is None:
        pool = default_pool(lang)
    return Universe(lang=lang, pool=fset(*pool), max_set_size=max_set_size, cap=cap)


@dataclass(frozen=True)
class Witness:
    X: tuple
    Y: tuple = None
    formula: object = None


@dataclass(frozen=True)
class PropertyVerdict:
    property: str
    op_name: str
    outcome: str
    universe: dict
    witness: Witness = None
    triviality_flags: tuple = ()
    notes: str = ""

    @property
    def passed(self):
        return self.outcome == NO_COUNTEREXAMPLE


class _Budget:
    def __init__(self, cap):
        self.cap = cap
        self.used = 0

    def spend(self, n=1):
        self.used += n
        if self.used > self.cap:
            raise UniverseCapError(
                f"instantiation cap {self.cap} exceeded; shrink the pool or "
                "max_set_size")


def _pool_witness_formula(U, in_theory, not_in_theory):
    """First pool formula in the first theory but not the second; falls back
    to the canonical axiom of the first theory."""
    for x in U.pool:
        if entails(in_theory, x) and not entails(not_in_theory, x):
            return x
    return canonical_axiom(in_theory.models, U.lang)


def supersets(bits, lang):
    """All model sets containing `bits`, ascending."""
    mask = lang.full_models
    free = mask & ~bits
    out = []
    sub = 0
    while True:
        out.append(bits | sub)
        if sub == free:
            break
        sub = (sub - free) & free
    return sorted(out)


def check_property(op, prop, U):
    """Bounded check of a single property; deterministic first witness."""
    checker = _CHECKERS[prop]
    budget = _Budget(U.cap)
    return checker(op, U, budget)


def check_all(op, U):
    """One verdict per property, in declaration order."""
    return [check_property(op, prop, U) for prop in PropertyKind]


def _verdict(prop, op, U, witness=None, flags=(), notes=""):
    outcome = COUNTEREXAMPLE if witness is not None else NO_COUNTEREXAMPLE
    return PropertyVerdict(
        property=prop.value, op_name=op.name, outcome=outcome,
        universe=U.describe(), witness=witness,
        triviality_flags=tuple(flags), notes=notes)


def _check_supraclassicality(op, U, budget):
    lang = U.lang
    for X in U.sets():
        budget.spend()
        M = cn(X, lang)
        R = op.apply(X)
        if R.models & ~M.models:
            phi = _pool_witness_formula(U, M, R)
            w = Witness(X=X, formula=phi)
            assert entails(M, phi) and not entails(R, phi)
            return _verdict(PropertyKind.SUPRACLASSICALITY, op, U, w)
    return _verdict(PropertyKind.SUPRACLASSICALITY, op, U)


def _check_left_absorption(op, U, budget):
    # Theories are model sets, so closure of the output is the output;
    # checked as self-consistency of the representation.
    lang = U.lang
    for X in U.sets():
        budget.spend()
        R = op.apply(X)
        reclosed = cn((R.axiom(),), lang)
        if reclosed.models != R.models:
            w = Witness(X=X, formula=R.axiom())
            return _verdict(PropertyKind.LEFT_ABSORPTION, op, U, w)
    return _verdict(
        PropertyKind.LEFT_ABSORPTION, op, U,
        flags=("structural_under_theory_representation",))


def _check_right_absorption(op, U, budget):
    lang = U.lang
    groups = {}
    for X in U.sets():
        budget.spend()
        M = cn(X, lang).models
        # pair every set with a canonical-axiom variant of its theory
        variant = (canonical_axiom(M, lang),)
        for Y in (X, variant):
            if M in groups:
                X0, R0 = groups[M]
                R = op.apply(Y)
                if R.models != R0.models:
                    # the theory with the smaller model set holds the extra formula
                    bigger, smaller = (R, R0) if R0.models & ~R.models else (R0, R)
                    phi = _pool_witness_formula(U, bigger, smaller)
                    w = Witness(X=X0, Y=Y, formula=phi)
                    return _verdict(PropertyKind.RIGHT_ABSORPTION, op, U, w)
            else:
                groups[M] = (Y, op.apply(Y))
    return _verdict(PropertyKind.RIGHT_ABSORPTION, op, U)


def _check_deductivity(op, U, budget):
    lang = U.lang
    for X in U.sets():
        Mx = cn(X, lang).models
        Rx = op.apply(X)
        for Y in U.subsets_of(X):
            budget.spend()
            Ry = op.apply(Y)
            rhs_models = Mx & Ry.models
            if rhs_models & ~Rx.models:
                from .core import Theory
                rhs = Theory(lang, rhs_models)
                phi = _pool_witness_formula(U, Rx, rhs)
                w = Witness(X=X, Y=Y, formula=phi)
                assert entails(Rx, phi) and not entails(rhs, phi)
                return _verdict(PropertyKind.DEDUCTIVITY, op, U, w)
    return _verdict(PropertyKind.DEDUCTIVITY, op, U)


def _cumulativity_candidates(op, U, Rx):
    """Sets Y with Y subset-of Cn(C(X)), i.e. every member entailed by C(X).

    Canonical-axiom singletons of every theory weaker than C(X) are always
    included; for operations that do not factor through Cn, the pool subsets
    satisfying the hypothesis are enumerated as well.
    """
    lang = U.lang
    for K in supersets(Rx.models, lang):
        yield (canonical_axiom(K, lang),)
    if not op.is_right_absorbing:
        for Y in U.sets():
            if all(entails(Rx, y) for y in Y):
                yield Y


def _check_cumulativity(op, U, budget):
    for X in U.sets():
        Rx = op.apply(X)
        for Y in _cumulativity_candidates(op, U, Rx):
            budget.spend()
            Rxy = op.apply(fset(*X, *Y))
            if Rxy.models != Rx.models:
                bigger, smaller = (Rxy, Rx) if Rx.models & ~Rxy.models else (Rx, Rxy)
                phi = _pool_witness_formula(U, bigger, smaller)
                w = Witness(X=X, Y=Y, formula=phi)
                return _verdict(PropertyKind.CUMULATIVITY, op, U, w)
    return _verdict(PropertyKind.CUMULATIVITY, op, U)


def _check_antitonicity(op, U, budget):
    for Y in U.sets():
        Ry = op.apply(Y)
        for X in U.subsets_of(Y):
            budget.spend()
            Rx = op.apply(X)
            if Rx.models & ~Ry.models:
                phi = _pool_witness_formula(U, Ry, Rx)
                w = Witness(X=X, Y=Y, formula=phi)
                assert entails(Ry, phi) and not entails(Rx, phi)
                return _verdict(PropertyKind.ANTITONICITY, op, U, w)
    return _verdict(PropertyKind.ANTITONICITY, op, U)


def _between(A_idx, X):
    """All Y with A subset-of Y subset-of X, given A as an index tuple into X."""
    rest = [i for i in range(len(X)) if i not in A_idx]
    for size in range(len(rest) + 1):
        for extra in itertools.combinations(rest, size):
            idx = sorted(A_idx + extra)
            yield tuple(X[i] for i in idx)


def _check_compactness(op, U, budget):
    # Over finite X the witness A = X always works, so the verdict is
    # trivially clean; flagged so reports are honest about the collapse.
    flags = ("finite_language_trivial",)
    for X in U.sets():
        Rx = op.apply(X)
        for x in U.pool:
            if not entails(Rx, x):
                continue
            found = False
            for size in range(len(X) + 1):
                for A_idx in itertools.combinations(range(len(X)), size):
                    ok = True
                    for Y in _between(A_idx, X):
                        budget.spend()
                        if not entails(op.apply(Y), x):
                            ok = False
                            break
                    if ok:
                        found = True
                        break
                if found:
                    break
            if not found:
                w = Witness(X=X, formula=x)
                return _verdict(PropertyKind.COMPACTNESS, op, U, w, flags=flags)
    return _verdict(PropertyKind.COMPACTNESS, op, U, flags=flags)


def _check_supracompactness(op, U, budget):
    """Witness-set search for: x in C(X) implies some finite A subset-of X
    has x in C(Y) for every Y with A subset-of Y subset-of C(X).

    The Y quantifier is reduced to A plus one canonical axiom of each theory
    weaker than C(X); complete for operations factoring through Cn.  An A
    not contained in C(X) satisfies the condition vacuously.
    """
    lang = U.lang
    flags = ("finite_language_trivial", "superset_axiom_quantifier")
    for X in U.sets():
        Rx = op.apply(X)
        for x in U.pool:
            if not entails(Rx, x):
                continue
            # try A = X first (the common witness), then ascending size
            candidates = [tuple(range(len(X)))]
            for size in range(len(X)):
                candidates.extend(itertools.combinations(range(len(X)), size))
            found = False
            for A_idx in candidates:
                A = tuple(X[i] for i in A_idx)
                if not all(entails(Rx, a) for a in A):
                    found = True  # no Y between A and C(X): vacuous
                    break
                ok = True
                for K in supersets(Rx.models, lang):
                    budget.spend()
                    Y = fset(*A, canonical_axiom(K, lang))
                    if not entails(op.apply(Y), x):
                        ok = False
                        break
                if ok:
                    found = True
                    break
            if not found:
                w = Witness(X=X, formula=x)
                return _verdict(PropertyKind.SUPRACOMPACTNESS, op, U, w, flags=flags)
    return _verdict(PropertyKind.SUPRACOMPACTNESS, op, U, flags=flags)


_CHECKERS = {
    PropertyKind.SUPRACLASSICALITY: _check_supraclassicality,
    PropertyKind.LEFT_ABSORPTION: _check_left_absorption,
    PropertyKind.RIGHT_ABSORPTION: _check_right_absorption,
    PropertyKind.DEDUCTIVITY: _check_deductivity,
    PropertyKind.CUMULATIVITY: _check_cumulativity,
    PropertyKind.ANTITONICITY: _check_antitonicity,
    PropertyKind.COMPACTNESS: _check_compactness,
    PropertyKind.SUPRACOMPACTNESS: _check_supracompactness,
}

"""Canonical extension of finitary operations and co-compactness checks.

A finitary operation is extended by adjoining the intersection of its
values over subsets of the input:

* plain:           C(X) = Cn(X union intersection over B subset-of X of F(B));
* right-absorbing: the subset quantifier runs over finite subsets of Cn(X),
  reduced to one canonical axiom per theory entailed by X (complete when F
  factors through Cn).

In a finite language both extensions are total, so extension checks are
pointwise-agreement checks plus property preservation; the verdicts carry a
"bounded evidence" note because uniqueness over all infinitary extensions
is not machine-checkable here.
"""

from __future__ import annotations

import enum
import itertools

from .core import NmlabError, Theory, canonical_axiom, cn, entails, fset
from .ops import InferenceOp, set_op, theory_op
from .properties import (
    NO_COUNTEREXAMPLE,
    PRECONDITION_FAILED,
    PropertyKind,
    PropertyVerdict,
    Witness,
    check_property,
    supersets,
)

BOUNDED_EVIDENCE = "uniqueness is bounded evidence, not an infinitary proof"


class ExtensionKind(enum.Enum):
    PLAIN = "plain"
    RIGHT_ABSORBING = "right_absorbing"


class CoCompactKind(enum.Enum):
    STRONG = "strong"
    WEAK = "weak"


def extend(F, kind):
    """The canonical extension of F as a new InferenceOp."""
    lang = F.lang
    if kind is ExtensionKind.PLAIN:
        def set_fn(X):
            union = 0  # intersection of theories: union of their model sets
            for size in range(len(X) + 1):
                for idx in itertools.combinations(range(len(X)), size):
                    B = tuple(X[i] for i in idx)
                    union |= F.apply(B).models
            return Theory(lang, cn(X, lang).models & union)
        return set_op(f"extend_plain({F.name})", lang, set_fn)
    if kind is ExtensionKind.RIGHT_ABSORBING:
        if not F.is_right_absorbing:
            raise NmlabError(
                f"right-absorbing extension needs a right-absorbing base, got {F.name}")
        def closure(bits):
            union = 0
            for K in supersets(bits, lang):
                union |= F.apply_closure(K).models
            return bits & union
        return theory_op(f"extend_ra({F.name})", lang, closure)
    raise ValueError(kind)


def _verdict(name, op, U, witness=None, flags=(), notes=""):
    outcome = "counterexample" if witness is not None else NO_COUNTEREXAMPLE
    return PropertyVerdict(
        property=name, op_name=op.name, outcome=outcome,
        universe=U.describe(), witness=witness,
        triviality_flags=tuple(flags), notes=notes)


def _precondition_verdict(name, op, U, failed):
    return PropertyVerdict(
        property=name, op_name=op.name, outcome=PRECONDITION_FAILED,
        universe=U.describe(),
        notes="precondition failed: " + ", ".join(failed))


def check_cocompact(op, kind, U):
    """Co-compactness witness search.

    strong: for x outside C(X), some syntactic subset A of X keeps x out;
    weak:   some finite A entailed by X keeps x out (A runs over X itself
            and the canonical axioms of the theories entailed by X).
    """
    lang = U.lang
    name = f"cocompactness_{kind.value}"
    flags = ("finite_language_trivial",) if kind is CoCompactKind.STRONG else ()
    for X in U.sets():
        Rx = op.apply(X)
        for x in U.pool:
            if entails(Rx, x):
                continue
            if kind is CoCompactKind.STRONG:
                candidates = U.subsets_of(X)
            else:
                candidates = [X] + [
                    (canonical_axiom(K, lang),)
                    for K in supersets(cn(X, lang).models, lang)]
            if not any(not entails(op.apply(A), x) for A in candidates):
                return _verdict(name, op, U, Witness(X=X, formula=x), flags=flags)
    return _verdict(name, op, U, flags=flags)


_CORE_PROPS = (
    PropertyKind.SUPRACLASSICALITY,
    PropertyKind.LEFT_ABSORPTION,
    PropertyKind.DEDUCTIVITY,
)


def verify_lemma_rep(F, U):
    """F(A) = Cn(A union intersection over B subset-of A of F(B)), for all A."""
    lang = U.lang
    name = "finitary_representation_identity"
    for A in U.sets():
        union = 0
        for B in U.subsets_of(A):
            union |= F.apply(B).models
        rhs = cn(A, lang).models & union
        if rhs != F.apply(A).models:
            return _verdict(name, F, U, Witness(X=A))
    return _verdict(name, F, U)


def verify_unique_extension(F, U):
    """Bounded consequences of the unique-extension theorems: the canonical
    extension agrees with F, preserves the property suite, and the finitary
    representation identity holds."""
    name = "unique_extension"
    props = list(_CORE_PROPS)
    kinds = [ExtensionKind.PLAIN]
    if F.is_right_absorbing:
        props.append(PropertyKind.RIGHT_ABSORPTION)
        kinds.append(ExtensionKind.RIGHT_ABSORBING)
    failed = [p.value for p in props if not check_property(F, p, U).passed]
    if failed:
        return _precondition_verdict(name, F, U, failed)
    for kind in kinds:
        ext = extend(F, kind)
        for X in U.sets():
            if ext.apply(X).models != F.apply(X).models:
                return _verdict(
                    name, F, U, Witness(X=X),
                    notes=f"{kind.value} extension disagrees with base")
        for p in props + [PropertyKind.COMPACTNESS]:
            verdict = check_property(ext, p, U)
            if not verdict.passed:
                return _verdict(
                    name, F, U, verdict.witness,
                    notes=f"{kind.value} extension loses {p.value}")
    rep = verify_lemma_rep(F, U)
    if not rep.passed:
        return _verdict(name, F, U, rep.witness, notes="representation identity fails")
    return _verdict(name, F, U, notes=BOUNDED_EVIDENCE)


def verify_cumuni(F, U):
    """The right-absorbing canonical extension of a cumulative operation is
    cumulative."""
    name = "cumulative_extension"
    props = list(_CORE_PROPS) + [
        PropertyKind.RIGHT_ABSORPTION, PropertyKind.CUMULATIVITY]
    failed = [p.value for p in props if not check_property(F, p, U).passed]
    if not F.is_right_absorbing:
        failed.append("right_absorbing_flag")
    if failed:
        return _precondition_verdict(name, F, U, failed)
    ext = extend(F, ExtensionKind.RIGHT_ABSORBING)
    verdict = check_property(ext, PropertyKind.CUMULATIVITY, U)
    if not verdict.passed:
        return _verdict(name, F, U, verdict.witness, notes="extension not cumulative")
    return _verdict(name, F, U, notes=BOUNDED_EVIDENCE)


def verify_weak_after_strong(op, U):
    """If the operation composed with Cn has a strongly co-compact core, the
    composition is co-compact; checked as: strong passing implies weak
    passing for the closure composition."""
    name = "cocompactness_ladder"
    strong = check_cocompact(op, CoCompactKind.STRONG, U)
    if not strong.passed:
        return _precondition_verdict(name, op, U, ["strong_cocompactness"])
    lang = op.lang
    if op.is_right_absorbing:
        composed = op
    else:
        def set_fn(X):
            return op.apply((canonical_axiom(cn(X, lang).models, lang),))
        composed = set_op(f"compose_cn({op.name})", lang, set_fn)
    weak = check_cocompact(composed, CoCompactKind.WEAK, U)
    if not weak.passed:
        return _verdict(name, op, U, weak.witness, notes="weak co-compactness fails")
    return _verdict(name, op, U, flags=strong.triviality_flags)

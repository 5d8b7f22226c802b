"""Antitonic representation constructions and the checks tying an
operation's structural properties to the representation equations.

Three assumption operators are built by intersecting operation values:

* largest:          intersection of C(Y) over syntactic subsets Y of X;
* trace:            intersection of C(Y) over all Y entailed by X;
* cumulative trace: intersection of C(Y) over all Y contained in C(X).

The last two quantify over theories (via canonical axioms) and therefore
require the operation to factor through Cn.
"""

from __future__ import annotations

import enum

from .core import NmlabError, Theory, canonical_axiom, cn, entails, fset
from .properties import (
    NO_COUNTEREXAMPLE,
    PRECONDITION_FAILED,
    PropertyKind,
    PropertyVerdict,
    Witness,
    check_property,
    supersets,
)


class ReprKind(enum.Enum):
    LARGEST = "largest"
    TRACE = "trace"
    CUMULATIVE_TRACE = "cumulative_trace"


class RepresentationError(NmlabError):
    """Theory-level representation requested for an operation that does not
    factor through Cn."""


def represent(op, X, kind, U):
    """The assumption theory S(X) of the requested kind, as a Theory.

    Intersections of Cn-closed theories are Cn-closed, so the result is a
    Theory: its model set is the union of the intersected values' models.
    """
    lang = U.lang
    if kind is ReprKind.LARGEST:
        union = 0
        for Y in U.subsets_of(X):
            union |= op.apply(Y).models
        return Theory(lang, union)
    if not op.is_right_absorbing:
        raise RepresentationError(
            f"{kind.value} representation needs a right-absorbing operation, "
            f"got {op.name}")
    if kind is ReprKind.TRACE:
        base = cn(X, lang).models
    elif kind is ReprKind.CUMULATIVE_TRACE:
        base = op.apply(X).models
    else:
        raise ValueError(kind)
    union = 0
    for K in supersets(base, lang):
        union |= op.apply_closure(K).models
    return Theory(lang, union)


def _equation_verdict(name, op, U, witness=None, notes=""):
    outcome = "counterexample" if witness is not None else NO_COUNTEREXAMPLE
    return PropertyVerdict(
        property=name, op_name=op.name, outcome=outcome,
        universe=U.describe(), witness=witness, notes=notes)


def verify_representation(op, kind, U):
    """Check C(X) = Cn(X union S(X)) for every X in the universe."""
    lang = U.lang
    name = f"representation_{kind.value}"
    for X in U.sets():
        S = represent(op, X, kind, U)
        rhs = cn(X, lang).models & S.models
        lhs = op.apply(X).models
        if rhs != lhs:
            return _equation_verdict(name, op, U, Witness(X=X))
    return _equation_verdict(name, op, U)


def _precondition_verdict(name, op, U, failed):
    return PropertyVerdict(
        property=name, op_name=op.name, outcome=PRECONDITION_FAILED,
        universe=U.describe(),
        notes="precondition failed: " + ", ".join(failed))


def _check_preconditions(op, U, props):
    failed = []
    for prop in props:
        if not check_property(op, prop, U).passed:
            failed.append(prop.value)
    return failed


def check_maximality(S, op, kind, U):
    """Verify that any antitonic representation S is contained in the
    constructed one: S(X) subset-of represent(op, X, kind) for all X.

    Validated first: S actually represents op on the universe, and S is
    antitonic (plus right-absorbing for the trace kind).
    """
    lang = U.lang
    name = f"maximality_{kind.value}"
    failed = []
    sets = U.sets()
    values = {}
    for X in sets:
        values[X] = S.models_at(X)
        if cn(X, lang).models & values[X] != op.apply(X).models:
            failed.append("S_represents_op")
            break
    if not failed:
        for Y in sets:
            for X in U.subsets_of(Y):
                # antitonic: S(Y) subset-of S(X), i.e. models(X-side) subset-of models(Y-side)
                if values[X] & ~values[Y]:
                    failed.append("S_antitonic")
                    break
            if failed:
                break
    if not failed and kind is not ReprKind.LARGEST:
        for X in sets:
            variant = (canonical_axiom(cn(X, lang).models, lang),)
            if S.models_at(variant) != values[X]:
                failed.append("S_right_absorbing")
                break
    if failed:
        return _precondition_verdict(name, op, U, failed)
    for X in sets:
        R = represent(op, X, kind, U)
        # S(X) subset-of R(X) as formula sets: models(R) subset-of models(S)
        if R.models & ~values[X]:
            return _equation_verdict(name, op, U, Witness(X=X))
    return _equation_verdict(name, op, U)


def verify_cuminters(op, U):
    """For cumulative deductive operations the intersections over theories
    above Cn(X) and above C(X) coincide; checked for every X."""
    lang = U.lang
    name = "closure_level_intersections"
    needed = (
        PropertyKind.SUPRACLASSICALITY, PropertyKind.LEFT_ABSORPTION,
        PropertyKind.DEDUCTIVITY, PropertyKind.CUMULATIVITY)
    failed = _check_preconditions(op, U, needed)
    if failed:
        return _precondition_verdict(name, op, U, failed)
    if not op.is_right_absorbing:
        return _precondition_verdict(name, op, U, ["right_absorbing_flag"])
    for X in U.sets():
        lower = 0
        for K in supersets(cn(X, lang).models, lang):
            lower |= op.apply_closure(K).models
        upper = 0
        for K in supersets(op.apply(X).models, lang):
            upper |= op.apply_closure(K).models
        if lower != upper:
            return _equation_verdict(name, op, U, Witness(X=X))
    return _equation_verdict(name, op, U)


def check_supracompact_equiv(op, U):
    """For supraclassical, left-absorbing, deductive, cumulative operations
    the compactness and supracompactness verdicts must agree."""
    name = "compactness_equivalence"
    needed = (
        PropertyKind.SUPRACLASSICALITY, PropertyKind.LEFT_ABSORPTION,
        PropertyKind.DEDUCTIVITY, PropertyKind.CUMULATIVITY)
    failed = _check_preconditions(op, U, needed)
    if failed:
        return _precondition_verdict(name, op, U, failed)
    compact = check_property(op, PropertyKind.COMPACTNESS, U)
    supracompact = check_property(op, PropertyKind.SUPRACOMPACTNESS, U)
    flags = tuple(sorted(set(compact.triviality_flags) | set(supracompact.triviality_flags)))
    if compact.outcome != supracompact.outcome:
        witness = compact.witness or supracompact.witness
        return PropertyVerdict(
            property=name, op_name=op.name, outcome="counterexample",
            universe=U.describe(), witness=witness, triviality_flags=flags,
            notes=f"compactness={compact.outcome}, supracompactness={supracompact.outcome}")
    return PropertyVerdict(
        property=name, op_name=op.name, outcome=NO_COUNTEREXAMPLE,
        universe=U.describe(), triviality_flags=flags)

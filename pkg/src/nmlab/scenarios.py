"""Scenario registry: named, reproducible check bundles, each with an
expected report fragment, plus the seeded fuzz run over random
right-absorbing table operations."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .core import (
    canonical_axiom,
    cn,
    entails,
    fset,
    format_formula,
    language,
    parse_formula,
)
from .extension import (
    CoCompactKind,
    ExtensionKind,
    check_cocompact,
    extend,
    verify_lemma_rep,
    verify_unique_extension,
    verify_cumuni,
    verify_weak_after_strong,
)
from .ops import (
    PooleSystem,
    cwa_assumptions,
    op_cn,
    op_cwa,
    op_from_table,
    op_gcwa,
    op_poole,
    poole_natural_assumptions,
    two_variable_separation_op,
)
from .properties import (
    COUNTEREXAMPLE,
    NO_COUNTEREXAMPLE,
    PropertyKind,
    check_all,
    check_property,
    make_universe,
)
from .reporting import run_report, verdict_to_dict
from .representations import (
    ReprKind,
    check_maximality,
    check_supracompact_equiv,
    represent,
    verify_cuminters,
    verify_representation,
)

LANG2 = language("p", "q")


def _F(text, lang=LANG2):
    return parse_formula(text, lang)


def _judgment(name, op_name, ok, universe, notes=""):
    """A single membership/containment judgment rendered as a verdict dict."""
    return {
        "property": name,
        "operation": op_name,
        "universe": universe,
        "outcome": NO_COUNTEREXAMPLE if ok else COUNTEREXAMPLE,
        "witness": None,
        "triviality_flags": [],
        "notes": notes,
    }


@dataclass(frozen=True)
class Scenario:
    id: str
    title: str
    covers: tuple
    build: object  # () -> (verdict_dicts, expected_fragments)

    def summary(self):
        return {"id": self.id, "title": self.title, "covers": list(self.covers)}


def _fragment_matches(fragment, verdict):
    for key, value in fragment.items():
        if verdict.get(key) != value:
            return False
    return True


_REGISTRY = {}


def _scenario(id, title, covers):
    def wrap(fn):
        _REGISTRY[id] = Scenario(id=id, title=title, covers=tuple(covers), build=fn)
        return fn
    return wrap


# --- GCWA ----------------------------------------------------------------

@_scenario(
    "paper-gcwa-deductivity",
    "GCWA fails deductivity: concludes !q from {p, p|q} but not p -> !q from {p|q}",
    ("gcwa", "deductivity"))
def _gcwa_deductivity():
    op = op_gcwa(LANG2)
    pool = fset(_F("p"), _F("p | q"), _F("q"), _F("!q"))
    U = make_universe(LANG2, pool=pool, max_set_size=2)
    verdicts = [verdict_to_dict(check_property(op, PropertyKind.DEDUCTIVITY, U))]
    desc = U.describe()
    verdicts.append(_judgment(
        "gcwa_concludes_negq_from_p_and_por_q", op.name,
        entails(op.apply(fset(_F("p"), _F("p | q"))), _F("!q")), desc))
    verdicts.append(_judgment(
        "gcwa_withholds_impl_from_por_q", op.name,
        not entails(op.apply(fset(_F("p | q"))), _F("p -> !q")), desc))
    verdicts.append(_judgment(
        "gcwa_withholds_negdisj_from_por_q", op.name,
        not entails(op.apply(fset(_F("p | q"))), _F("!p | !q")), desc))
    verdicts.append(_judgment(
        "gcwa_concludes_negq_from_p", op.name,
        entails(op.apply(fset(_F("p"))), _F("!q")), desc))
    verdicts.append(_judgment(
        "gcwa_concludes_negp_from_q", op.name,
        entails(op.apply(fset(_F("q"))), _F("!p")), desc))
    expected = [{
        "outcome": COUNTEREXAMPLE,
        "witness": {"X": ["p", "p | q"], "Y": ["p | q"], "formula": "!q"},
    }] + [{"outcome": NO_COUNTEREXAMPLE}] * 5
    return verdicts, expected


@_scenario(
    "gcwa-representation-failure",
    "GCWA has no antitonic representation; the subset-intersection equation "
    "breaks at {p, p|q}, while GCWA stays within CWA on consistent inputs",
    ("gcwa", "cwa", "antitonic-representation"))
def _gcwa_representation():
    gcwa = op_gcwa(LANG2)
    cwa = op_cwa(LANG2)
    pool = fset(_F("p"), _F("p | q"), _F("q"), _F("!q"))
    U = make_universe(LANG2, pool=pool, max_set_size=2)
    verdicts = [
        verdict_to_dict(verify_representation(gcwa, ReprKind.LARGEST, U)),
        verdict_to_dict(check_property(gcwa, PropertyKind.SUPRACLASSICALITY, U)),
    ]
    cautious = all(
        cwa.apply(X).models & ~gcwa.apply(X).models == 0
        for X in U.sets() if cn(X, LANG2).is_consistent)
    verdicts.append(_judgment(
        "gcwa_within_cwa_on_consistent_inputs", gcwa.name, cautious, U.describe()))
    expected = [
        {"outcome": COUNTEREXAMPLE, "witness": {"X": ["p", "p | q"]}},
        {"outcome": NO_COUNTEREXAMPLE},
        {"outcome": NO_COUNTEREXAMPLE},
    ]
    return verdicts, expected


# --- the two-variable separating example ---------------------------------

@_scenario(
    "paper-two-variable-separation",
    "Two-variable example separating the subset intersection from the trace: "
    "p is in the former but not the latter at X={p}",
    ("trace-representation", "antitonic-representation"))
def _two_variable_separation():
    op = two_variable_separation_op(LANG2)
    U = make_universe(LANG2, pool=fset(_F("p"), _F("q"), _F("q -> p")), max_set_size=2)
    X = fset(_F("p"))
    largest = represent(op, X, ReprKind.LARGEST, U)
    trace = represent(op, X, ReprKind.TRACE, U)
    desc = U.describe()
    verdicts = [
        _judgment("p_in_largest_representation_at_p", op.name,
                  entails(largest, _F("p")), desc),
        _judgment("p_not_in_trace_representation_at_p", op.name,
                  not entails(trace, _F("p")), desc),
        verdict_to_dict(check_maximality(
            # the defining assumption function of the example
            _two_variable_assumptions(), op, ReprKind.TRACE, U)),
    ]
    expected = [{"outcome": NO_COUNTEREXAMPLE}] * 3
    return verdicts, expected


def _two_variable_assumptions():
    from .core import Atom, Theory
    from .ops import AssumptionFn, models_of
    p_models = models_of(Atom("p"), LANG2)
    def fn(X):
        if cn(X, LANG2).models == LANG2.full_models:
            return Theory(LANG2, p_models)
        return Theory(LANG2, LANG2.full_models)
    return AssumptionFn("two-variable", LANG2, fn, right_absorbing=True)


# --- CWA -----------------------------------------------------------------

@_scenario(
    "paper-cwa-representation",
    "CWA is supraclassical and deductive and satisfies the antitonic "
    "representation equation exhaustively",
    ("cwa", "antitonic-representation"))
def _cwa_representation():
    op = op_cwa(LANG2)
    U = make_universe(LANG2, max_set_size=3)
    verdicts = [
        verdict_to_dict(check_property(op, PropertyKind.SUPRACLASSICALITY, U)),
        verdict_to_dict(check_property(op, PropertyKind.DEDUCTIVITY, U)),
        verdict_to_dict(verify_representation(op, ReprKind.LARGEST, U)),
    ]
    expected = [{"outcome": NO_COUNTEREXAMPLE}] * 3
    return verdicts, expected


@_scenario(
    "cwa-trace-maximality",
    "CWA's literal-negation assumptions are contained in both maximal "
    "representations, and the trace equation holds",
    ("cwa", "trace-representation", "maximality"))
def _cwa_trace():
    op = op_cwa(LANG2)
    S = cwa_assumptions(LANG2)
    U = make_universe(LANG2, max_set_size=2)
    verdicts = [
        verdict_to_dict(verify_representation(op, ReprKind.TRACE, U)),
        verdict_to_dict(check_maximality(S, op, ReprKind.LARGEST, U)),
        verdict_to_dict(check_maximality(S, op, ReprKind.TRACE, U)),
    ]
    expected = [{"outcome": NO_COUNTEREXAMPLE}] * 3
    return verdicts, expected


@_scenario(
    "cwa-extension-agreement",
    "Both canonical extensions of CWA agree with it pointwise on every "
    "closed input, and the finitary representation identity holds",
    ("cwa", "unique-extension", "right-absorbing-extension"))
def _cwa_extension():
    op = op_cwa(LANG2)
    U = make_universe(LANG2, max_set_size=2)
    plain = extend(op, ExtensionKind.PLAIN)
    ra = extend(op, ExtensionKind.RIGHT_ABSORBING)
    agree = True
    for M in LANG2.all_model_sets():
        X = fset(canonical_axiom(M, LANG2))
        want = op.apply(X).models
        if plain.apply(X).models != want or ra.apply(X).models != want:
            agree = False
            break
    verdicts = [
        _judgment("extensions_agree_on_all_closed_inputs", op.name, agree,
                  U.describe()),
        verdict_to_dict(verify_lemma_rep(op, U)),
        verdict_to_dict(verify_unique_extension(op, U)),
    ]
    expected = [{"outcome": NO_COUNTEREXAMPLE}] * 3
    return verdicts, expected


@_scenario(
    "cwa-cocompactness",
    "CWA is strongly co-compact on finite inputs (trivially) and stays "
    "co-compact after composing with Cn",
    ("cwa", "co-compactness"))
def _cwa_cocompact():
    op = op_cwa(LANG2)
    U = make_universe(LANG2, max_set_size=2)
    verdicts = [
        verdict_to_dict(check_cocompact(op, CoCompactKind.STRONG, U)),
        verdict_to_dict(check_cocompact(op, CoCompactKind.WEAK, U)),
        verdict_to_dict(verify_weak_after_strong(op, U)),
    ]
    expected = [{"outcome": NO_COUNTEREXAMPLE}] * 3
    return verdicts, expected


# --- Poole systems -------------------------------------------------------

def _poole_pq():
    return op_poole(PooleSystem(fset(_F("p"), _F("!p"))), LANG2)


@_scenario(
    "poole-property-suite",
    "The {p, !p} Poole system is supraclassical, left-absorbing, deductive "
    "and cumulative, and satisfies the cumulative-trace equation",
    ("poole", "cumulative-representation"))
def _poole_suite():
    op = _poole_pq()
    U = make_universe(LANG2, max_set_size=3)
    verdicts = [
        verdict_to_dict(check_property(op, PropertyKind.SUPRACLASSICALITY, U)),
        verdict_to_dict(check_property(op, PropertyKind.LEFT_ABSORPTION, U)),
        verdict_to_dict(check_property(op, PropertyKind.DEDUCTIVITY, U)),
        verdict_to_dict(check_property(op, PropertyKind.CUMULATIVITY, U)),
        verdict_to_dict(verify_representation(op, ReprKind.CUMULATIVE_TRACE, U)),
    ]
    expected = [{"outcome": NO_COUNTEREXAMPLE}] * 5
    return verdicts, expected


@_scenario(
    "poole-natural-not-antitonic",
    "The natural basis-intersection assumptions of the {p, !p} Poole system "
    "are not antitonic: p enters the assumptions when p is asserted",
    ("poole", "antitonic-representation"))
def _poole_natural():
    sys = PooleSystem(fset(_F("p"), _F("!p")))
    S = poole_natural_assumptions(sys, LANG2)
    U = make_universe(LANG2, pool=fset(_F("p")), max_set_size=1)
    empty_bits = S.models_at(())
    p_bits = S.models_at(fset(_F("p")))
    # antitonic would need models(S(empty)) subset-of models(S({p}))
    broken = empty_bits & ~p_bits != 0
    verdict = {
        "property": "natural_representation_antitonicity",
        "operation": S.name,
        "universe": U.describe(),
        "outcome": COUNTEREXAMPLE if broken else NO_COUNTEREXAMPLE,
        "witness": {"X": [], "Y": ["p"], "formula": "p"} if broken else None,
        "triviality_flags": [],
        "notes": "assumptions at {p} are not contained in assumptions at the empty set",
    }
    expected = [{
        "outcome": COUNTEREXAMPLE,
        "witness": {"X": [], "Y": ["p"], "formula": "p"},
    }]
    return [verdict], expected


@_scenario(
    "poole-cumulative-extension",
    "The right-absorbing canonical extension of the {p, !p} Poole system "
    "stays cumulative",
    ("poole", "cumulative-extension"))
def _poole_cumuni():
    op = _poole_pq()
    U = make_universe(LANG2, max_set_size=2)
    verdicts = [verdict_to_dict(verify_cumuni(op, U))]
    expected = [{"outcome": NO_COUNTEREXAMPLE}]
    return verdicts, expected


@_scenario(
    "poole-closure-intersections",
    "For the {p, !p} Poole system the intersections over theories above "
    "Cn(X) and above C(X) coincide, and compactness agrees with "
    "supracompactness",
    ("poole", "closure-level-intersections", "compactness-equivalence"))
def _poole_cuminters():
    op = _poole_pq()
    U = make_universe(LANG2, max_set_size=2)
    verdicts = [
        verdict_to_dict(verify_cuminters(op, U)),
        verdict_to_dict(check_supracompact_equiv(op, U)),
    ]
    expected = [{"outcome": NO_COUNTEREXAMPLE}] * 2
    return verdicts, expected


# --- baseline and kernel sweeps ------------------------------------------

@_scenario(
    "cn-baseline",
    "The monotone baseline passes every property except antitonicity",
    ("baseline",))
def _cn_baseline():
    op = op_cn(LANG2)
    U = make_universe(LANG2, max_set_size=2)
    verdicts = [verdict_to_dict(v) for v in check_all(op, U)]
    expected = []
    for v in verdicts:
        if v["property"] == PropertyKind.ANTITONICITY.value:
            expected.append({
                "outcome": COUNTEREXAMPLE,
                "witness": {"X": [], "Y": ["p"], "formula": "p"},
            })
        else:
            expected.append({"outcome": NO_COUNTEREXAMPLE})
    return verdicts, expected


@_scenario(
    "kernel-admissibility",
    "Closure distributes over intersections of theories: the two "
    "admissibility identities and the arrow-set equivalence hold on a "
    "three-atom sweep",
    ("kernel",))
def _kernel_admissibility():
    from .core import arrow_set, verify_admissibility, verify_strong_admissibility
    lang = language("p", "q", "r")
    pool = fset(*(parse_formula(s, lang) for s in
                  ("p", "q", "r", "!p", "p | q", "q -> r", "p & r", "!r")))
    U = make_universe(lang, pool=pool, max_set_size=1)
    small = U.sets()
    adm = all(
        verify_admissibility(X, Y, Z, lang)
        for X in small for Y in small for Z in small)
    families = [
        [small[i], small[j]] for i in range(len(small)) for j in range(i, len(small))]
    strong = all(
        verify_strong_admissibility(A, fam, lang)
        for A in small for fam in families)
    arrows_ok = True
    for A in small:
        for Y in small:
            arrows = arrow_set(A, Y)
            for X in small:
                T = cn(X, lang)
                lhs = all(entails(T, f) for f in arrows)
                rhs_theory = cn(X + A, lang)
                rhs = all(entails(rhs_theory, y) for y in Y)
                if lhs != rhs:
                    arrows_ok = False
    desc = U.describe()
    verdicts = [
        _judgment("admissibility_identity", "cn", adm, desc),
        _judgment("strong_admissibility_identity", "cn", strong, desc),
        _judgment("arrow_set_equivalence", "cn", arrows_ok, desc),
    ]
    expected = [{"outcome": NO_COUNTEREXAMPLE}] * 3
    return verdicts, expected


# --- public API ----------------------------------------------------------

def list_scenarios():
    return [s.summary() for s in sorted(_REGISTRY.values(), key=lambda s: s.id)]


def get_scenario(scenario_id):
    try:
        return _REGISTRY[scenario_id]
    except KeyError:
        raise KeyError(f"unknown scenario {scenario_id!r}") from None


def run_scenario(scenario_id):
    scenario = get_scenario(scenario_id)
    start = time.perf_counter()
    verdicts, expected = scenario.build()
    elapsed = time.perf_counter() - start
    mismatches = []
    for i, fragment in enumerate(expected):
        if i >= len(verdicts) or not _fragment_matches(fragment, verdicts[i]):
            mismatches.append(i)
    report = run_report(scenario_id, verdicts, elapsed, as_expected=not mismatches)
    if mismatches:
        report["expectation_mismatches"] = mismatches
    return report


def _random_supraclassical_table(rng, lang):
    full = lang.full_models
    entries = {}
    for M in lang.all_model_sets():
        entries[M] = rng.getrandbits(lang.valuation_count) & M
    return op_from_table(lang, entries, enforce_supraclassical=True)


def run_fuzz(seed, count, lang=None, enforce=()):
    """Seeded fuzz over random supraclassical right-absorbing table
    operations: for each, the three representation equations must hold on
    the universe exactly when their property sets do."""
    if lang is None:
        lang = LANG2
    if lang.n > 2:
        raise ValueError("full-theory table fuzzing is capped at 2 atoms")
    rng = random.Random(seed)
    pool = fset(*(canonical_axiom(M, lang) for M in lang.all_model_sets()))
    U = make_universe(lang, pool=pool, max_set_size=2)
    enforce = set(enforce)
    start = time.perf_counter()
    violations = []
    checked = 0
    for i in range(count):
        op = _random_supraclassical_table(rng, lang)
        op.name = f"table[{seed}:{i}]"
        props = {
            p: check_property(op, p, U).passed
            for p in (
                PropertyKind.SUPRACLASSICALITY, PropertyKind.LEFT_ABSORPTION,
                PropertyKind.RIGHT_ABSORPTION, PropertyKind.DEDUCTIVITY,
                PropertyKind.CUMULATIVITY, PropertyKind.COMPACTNESS)}
        if enforce and not all(props[p] for p in enforce):
            continue
        checked += 1
        equations = {
            "largest": (
                verify_representation(op, ReprKind.LARGEST, U).passed,
                (PropertyKind.SUPRACLASSICALITY, PropertyKind.LEFT_ABSORPTION,
                 PropertyKind.DEDUCTIVITY, PropertyKind.COMPACTNESS)),
            "trace": (
                verify_representation(op, ReprKind.TRACE, U).passed,
                (PropertyKind.SUPRACLASSICALITY, PropertyKind.LEFT_ABSORPTION,
                 PropertyKind.RIGHT_ABSORPTION, PropertyKind.DEDUCTIVITY,
                 PropertyKind.COMPACTNESS)),
            "cumulative_trace": (
                verify_representation(op, ReprKind.CUMULATIVE_TRACE, U).passed,
                (PropertyKind.SUPRACLASSICALITY, PropertyKind.LEFT_ABSORPTION,
                 PropertyKind.DEDUCTIVITY, PropertyKind.CUMULATIVITY,
                 PropertyKind.COMPACTNESS)),
        }
        for label, (eq_holds, needed) in equations.items():
            props_hold = all(props[p] for p in needed)
            if eq_holds != props_hold:
                violations.append({
                    "op": op.name,
                    "equation": label,
                    "equation_holds": eq_holds,
                    "properties_hold": props_hold,
                })
    elapsed = time.perf_counter() - start
    report = run_report(
        f"fuzz[seed={seed},count={count}]",
        violations, elapsed, as_expected=not violations)
    report["ops_checked"] = checked
    report["violations"] = len(violations)
    return report

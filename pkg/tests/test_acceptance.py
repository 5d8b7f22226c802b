"""Acceptance suite: the eight headline checks, each with a wall-clock
budget.  Every test prints a single pass/fail line so the suite doubles as
a human-readable scorecard under `pytest -s`."""

import itertools
import time

import pytest

from nmlab.core import (
    arrow_set,
    canonical_axiom,
    cn,
    entails,
    fset,
    language,
    parse_formula,
    verify_admissibility,
    verify_strong_admissibility,
)
from nmlab.extension import ExtensionKind, extend, verify_cumuni, verify_lemma_rep
from nmlab.ops import (
    PooleSystem,
    op_cwa,
    op_poole,
    poole_natural_assumptions,
    two_variable_separation_op,
)
from nmlab.properties import (
    COUNTEREXAMPLE,
    NO_COUNTEREXAMPLE,
    PropertyKind,
    check_property,
    make_universe,
)
from nmlab.representations import (
    ReprKind,
    check_supracompact_equiv,
    represent,
    verify_cuminters,
    verify_representation,
)
from nmlab.scenarios import run_scenario, run_fuzz

LANG2 = language("p", "q")


class _Clock:
    def __init__(self, label, budget_s):
        self.label = label
        self.budget = budget_s

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        status = "FAIL" if exc_type else "pass"
        print(f"[{status}] {self.label}  ({elapsed:.2f}s / budget {self.budget}s)")
        assert elapsed < self.budget, f"{self.label} exceeded {self.budget}s"
        return False


def test_1_gcwa_deductivity_failure():
    with _Clock("1 GCWA deductivity failure with exact witness", 1):
        report = run_scenario("paper-gcwa-deductivity")
        assert report["as_expected"]
        head = report["verdicts"][0]
        assert head["outcome"] == COUNTEREXAMPLE
        assert head["witness"] == {
            "X": ["p", "p | q"], "Y": ["p | q"], "formula": "!q"}
        # the accompanying judgments: !q concluded from {p} and !p from {q},
        # while {p | q} alone licenses neither negative conclusion
        assert all(v["outcome"] == NO_COUNTEREXAMPLE
                   for v in report["verdicts"][1:])


def test_2_two_variable_separation():
    with _Clock("2 two-variable largest/trace separation", 1):
        op = two_variable_separation_op(LANG2)
        U = make_universe(LANG2, max_set_size=2)
        X = fset(parse_formula("p", LANG2))
        p = parse_formula("p", LANG2)
        assert entails(represent(op, X, ReprKind.LARGEST, U), p)
        assert not entails(represent(op, X, ReprKind.TRACE, U), p)
        report = run_scenario("paper-two-variable-separation")
        assert report["as_expected"]


def test_3_cwa_representability():
    with _Clock("3 CWA representability, exhaustive at k=3", 10):
        op = op_cwa(LANG2)
        U = make_universe(LANG2, max_set_size=3)
        for prop in (PropertyKind.SUPRACLASSICALITY, PropertyKind.DEDUCTIVITY):
            v = check_property(op, prop, U)
            assert v.outcome == NO_COUNTEREXAMPLE, prop
        assert verify_representation(op, ReprKind.LARGEST, U).passed


def test_4_poole_suite():
    with _Clock("4 Poole suite, exhaustive at k=3", 30):
        op = op_poole(PooleSystem(fset(parse_formula("p", LANG2),
                                       parse_formula("!p", LANG2))), LANG2)
        U = make_universe(LANG2, max_set_size=3)
        for prop in (PropertyKind.SUPRACLASSICALITY, PropertyKind.LEFT_ABSORPTION,
                     PropertyKind.DEDUCTIVITY, PropertyKind.CUMULATIVITY):
            assert check_property(op, prop, U).passed, prop
        assert verify_representation(op, ReprKind.CUMULATIVE_TRACE, U).passed
        # the natural basis-intersection assumptions are not antitonic
        sys = PooleSystem(fset(parse_formula("p", LANG2),
                               parse_formula("!p", LANG2)))
        S = poole_natural_assumptions(sys, LANG2)
        at_empty = S.models_at(())
        at_p = S.models_at(fset(parse_formula("p", LANG2)))
        assert at_empty & ~at_p != 0
        assert verify_cumuni(op, make_universe(LANG2, max_set_size=2)).passed


def test_5_admissibility_identities():
    with _Clock("5 admissibility identities, three-atom sweep", 60):
        lang = language("p", "q", "r")
        pool = [parse_formula(s, lang) for s in (
            "p", "q", "r", "!p", "!q", "p | q", "q -> r", "p & r", "!r",
            "p -> q")]
        assert len(pool) <= 10
        singles = [()] + [(f,) for f in pool]
        for X in singles:
            for Y in singles:
                for Z in singles:
                    assert verify_admissibility(X, Y, Z, lang)
        families = [list(fam) for k in (1, 2, 3, 4)
                    for fam in itertools.combinations(singles[:8], k)]
        assert all(len(fam) <= 4 for fam in families)
        for A in singles[:6]:
            for fam in families:
                assert verify_strong_admissibility(A, fam, lang)
        small = singles[:8]
        for A in small:
            for Y in small:
                arrows = arrow_set(A, Y)
                for X in small:
                    lhs = all(entails(cn(X, lang), f) for f in arrows)
                    rhs = all(entails(cn(fset(*X, *A), lang), y) for y in Y)
                    assert lhs == rhs


def test_6_biconditional_fuzz():
    with _Clock("6 representation-equation biconditional fuzz, 100 ops", 120):
        report = run_fuzz(seed=2024, count=100)
        assert report["ops_checked"] == 100
        assert report["violations"] == 0
        assert report["as_expected"]


def test_7_extension_agreement():
    with _Clock("7 extension agreement on all 16 closed theories", 10):
        op = op_cwa(LANG2)
        plain = extend(op, ExtensionKind.PLAIN)
        ra = extend(op, ExtensionKind.RIGHT_ABSORBING)
        count = 0
        for M in LANG2.all_model_sets():
            X = fset(canonical_axiom(M, LANG2))
            want = op.apply(X).models
            assert plain.apply(X).models == want
            assert ra.apply(X).models == want
            count += 1
        assert count == 16
        U = make_universe(LANG2, max_set_size=2)
        assert verify_lemma_rep(op, U).passed


def test_8_closure_intersections_and_compactness_equivalence():
    with _Clock("8 closure-level intersections + compactness equivalence", 30):
        op = op_poole(PooleSystem(fset(parse_formula("p", LANG2),
                                       parse_formula("!p", LANG2))), LANG2)
        U = make_universe(LANG2, max_set_size=2)
        inters = verify_cuminters(op, U)
        assert inters.outcome == NO_COUNTEREXAMPLE
        equiv = check_supracompact_equiv(op, U)
        assert equiv.outcome == NO_COUNTEREXAMPLE
        assert "finite_language_trivial" in equiv.triviality_flags

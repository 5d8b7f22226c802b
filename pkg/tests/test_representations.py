import pytest

from nmlab.core import Atom, Not, cn, entails, fset, parse_formula
from nmlab.ops import (
    AssumptionFn,
    PooleSystem,
    op_cn,
    op_cwa,
    op_from_assumptions,
    op_gcwa,
    op_poole,
    two_variable_separation_op,
)
from nmlab.properties import (
    NO_COUNTEREXAMPLE,
    PRECONDITION_FAILED,
    make_universe,
)
from nmlab.representations import (
    ReprKind,
    RepresentationError,
    check_maximality,
    check_supracompact_equiv,
    represent,
    verify_cuminters,
    verify_representation,
)


def scenario_universe(lang, k=2):
    pool = [parse_formula(s, lang) for s in ("p", "p | q", "q", "!q")]
    return make_universe(lang, pool=pool, max_set_size=k)


class TestRepresent:
    def test_largest_at_empty_is_value(self, lang2):
        U = make_universe(lang2, max_set_size=2)
        S = represent(op_cwa(lang2), (), ReprKind.LARGEST, U)
        assert S.models == op_cwa(lang2).apply(()).models

    def test_largest_union_of_subset_values(self, lang2):
        U = make_universe(lang2, max_set_size=2)
        op = op_cwa(lang2)
        X = fset(Atom("p"), Atom("q"))
        expected = 0
        for Y in U.subsets_of(X):
            expected |= op.apply(Y).models
        assert represent(op, X, ReprKind.LARGEST, U).models == expected

    def test_trace_requires_right_absorbing(self, lang2):
        U = make_universe(lang2, max_set_size=1)
        S = AssumptionFn("syntactic", lang2,
                         lambda X: (Atom("p"),) if len(X) == 0 else ())
        op = op_from_assumptions(S)
        with pytest.raises(RepresentationError):
            represent(op, (), ReprKind.TRACE, U)

    def test_trace_weaker_than_largest(self, lang2):
        # the trace intersects over more theories, so it assumes less:
        # its model set contains the largest representation's
        U = make_universe(lang2, max_set_size=2)
        op = op_cwa(lang2)
        for X in U.sets():
            largest = represent(op, X, ReprKind.LARGEST, U)
            trace = represent(op, X, ReprKind.TRACE, U)
            assert largest.models & ~trace.models == 0

    def test_cumulative_trace_base(self, lang2):
        sys = PooleSystem(fset(Atom("p"), Not(Atom("p"))))
        op = op_poole(sys, lang2)
        U = make_universe(lang2, max_set_size=2)
        S = represent(op, (Atom("p"),), ReprKind.CUMULATIVE_TRACE, U)
        assert entails(cn((Atom("p"),), lang2), S.axiom()) or S.models


class TestVerifyRepresentation:
    def test_cwa_largest_and_trace_hold(self, lang2):
        op = op_cwa(lang2)
        U = make_universe(lang2, max_set_size=2)
        for kind in (ReprKind.LARGEST, ReprKind.TRACE):
            v = verify_representation(op, kind, U)
            assert v.outcome == NO_COUNTEREXAMPLE, kind

    def test_cwa_cumulative_trace_fails(self, lang2):
        # CWA is not cumulative, so intersecting above C(X) over-assumes
        op = op_cwa(lang2)
        U = make_universe(lang2, max_set_size=2)
        v = verify_representation(op, ReprKind.CUMULATIVE_TRACE, U)
        assert v.outcome == "counterexample"

    def test_gcwa_largest_fails(self, lang2):
        # the largest candidate over-assumes at X = {p, p | q}
        op = op_gcwa(lang2)
        U = scenario_universe(lang2)
        v = verify_representation(op, ReprKind.LARGEST, U)
        assert v.outcome == "counterexample"
        names = [parse_formula(s, lang2) for s in ("p", "p | q")]
        assert v.witness.X == tuple(names)

    def test_poole_cumulative_trace_holds(self, lang2):
        sys = PooleSystem(fset(Atom("p"), Not(Atom("p"))))
        op = op_poole(sys, lang2)
        U = make_universe(lang2, max_set_size=2)
        v = verify_representation(op, ReprKind.CUMULATIVE_TRACE, U)
        assert v.outcome == NO_COUNTEREXAMPLE

    def test_two_variable_split(self, lang2):
        # largest equation holds but p escapes the trace at X = {p}
        op = two_variable_separation_op(lang2)
        U = make_universe(lang2, max_set_size=2)
        assert verify_representation(op, ReprKind.LARGEST, U).passed
        largest = represent(op, (Atom("p"),), ReprKind.LARGEST, U)
        trace = represent(op, (Atom("p"),), ReprKind.TRACE, U)
        assert entails(largest, Atom("p"))
        assert not entails(trace, Atom("p"))


class TestMaximality:
    def test_largest_dominates_trace_for_cwa(self, lang2):
        op = op_cwa(lang2)
        U = make_universe(lang2, max_set_size=2)
        trace_S = AssumptionFn(
            "cwa-trace", lang2,
            lambda X: (represent(op, X, ReprKind.TRACE, U).axiom(),),
            right_absorbing=True)
        v = check_maximality(trace_S, op, ReprKind.LARGEST, U)
        assert v.outcome == NO_COUNTEREXAMPLE

    def test_rejects_non_representation(self, lang2):
        op = op_cwa(lang2)
        U = make_universe(lang2, max_set_size=1)
        bogus = AssumptionFn("bogus", lang2, lambda X: (Atom("q"),),
                             right_absorbing=True)
        v = check_maximality(bogus, op, ReprKind.LARGEST, U)
        assert v.outcome == PRECONDITION_FAILED
        assert "S_represents_op" in v.notes

    def test_rejects_non_antitonic(self, lang2):
        op = op_cn(lang2)
        U = make_universe(lang2, max_set_size=1)
        S = AssumptionFn("growing", lang2,
                         lambda X: tuple(X), right_absorbing=True)
        v = check_maximality(S, op, ReprKind.LARGEST, U)
        assert v.outcome == PRECONDITION_FAILED
        assert "S_antitonic" in v.notes


class TestCuminters:
    def test_poole_passes(self, lang2):
        sys = PooleSystem(fset(Atom("p"), Not(Atom("p"))))
        op = op_poole(sys, lang2)
        U = make_universe(lang2, max_set_size=2)
        v = verify_cuminters(op, U)
        assert v.outcome == NO_COUNTEREXAMPLE

    def test_gcwa_precondition_fails(self, lang2):
        U = scenario_universe(lang2)
        v = verify_cuminters(op_gcwa(lang2), U)
        assert v.outcome == PRECONDITION_FAILED
        assert "deductivity" in v.notes


class TestSupracompactEquiv:
    def test_poole_agreement(self, lang2):
        sys = PooleSystem(fset(Atom("p"), Not(Atom("p"))))
        op = op_poole(sys, lang2)
        U = make_universe(lang2, max_set_size=2)
        v = check_supracompact_equiv(op, U)
        assert v.outcome == NO_COUNTEREXAMPLE
        assert "finite_language_trivial" in v.triviality_flags

    def test_cwa_precondition_fails_on_cumulativity(self, lang2):
        U = make_universe(lang2, max_set_size=2)
        v = check_supracompact_equiv(op_cwa(lang2), U)
        assert v.outcome == PRECONDITION_FAILED
        assert "cumulativity" in v.notes

import pytest

from nmlab.core import Atom, NmlabError, Not, cn, entails, fset, parse_formula
from nmlab.ops import (
    AssumptionFn,
    PooleSystem,
    op_cn,
    op_cwa,
    op_from_assumptions,
    op_gcwa,
    op_poole,
)
from nmlab.extension import (
    BOUNDED_EVIDENCE,
    CoCompactKind,
    ExtensionKind,
    check_cocompact,
    extend,
    verify_cumuni,
    verify_lemma_rep,
    verify_unique_extension,
    verify_weak_after_strong,
)
from nmlab.properties import (
    NO_COUNTEREXAMPLE,
    PRECONDITION_FAILED,
    make_universe,
)


class TestExtend:
    def test_plain_agrees_with_cwa_everywhere(self, lang2):
        op = op_cwa(lang2)
        ext = extend(op, ExtensionKind.PLAIN)
        U = make_universe(lang2, max_set_size=2)
        for X in U.sets():
            assert ext.apply(X).models == op.apply(X).models

    def test_ra_agrees_with_cwa_everywhere(self, lang2):
        op = op_cwa(lang2)
        ext = extend(op, ExtensionKind.RIGHT_ABSORBING)
        U = make_universe(lang2, max_set_size=2)
        for X in U.sets():
            assert ext.apply(X).models == op.apply(X).models

    def test_ra_extension_is_right_absorbing(self, lang2):
        ext = extend(op_cwa(lang2), ExtensionKind.RIGHT_ABSORBING)
        assert ext.is_right_absorbing

    def test_ra_rejects_syntactic_base(self, lang2):
        S = AssumptionFn("syntactic", lang2,
                         lambda X: (Atom("p"),) if len(X) == 0 else ())
        op = op_from_assumptions(S)
        with pytest.raises(NmlabError):
            extend(op, ExtensionKind.RIGHT_ABSORBING)

    def test_plain_extension_supraclassical_by_construction(self, lang2):
        # even for a base that over-concludes, the extension is capped by Cn
        table_like = AssumptionFn("wild", lang2, lambda X: (Atom("p"),))
        op = op_from_assumptions(table_like)
        ext = extend(op, ExtensionKind.PLAIN)
        U = make_universe(lang2, max_set_size=2)
        for X in U.sets():
            assert ext.apply(X).models & ~cn(X, lang2).models == 0


class TestCoCompact:
    def test_cwa_strong(self, lang2):
        U = make_universe(lang2, max_set_size=2)
        v = check_cocompact(op_cwa(lang2), CoCompactKind.STRONG, U)
        assert v.outcome == NO_COUNTEREXAMPLE
        assert "finite_language_trivial" in v.triviality_flags

    def test_cwa_weak(self, lang2):
        U = make_universe(lang2, max_set_size=2)
        v = check_cocompact(op_cwa(lang2), CoCompactKind.WEAK, U)
        assert v.outcome == NO_COUNTEREXAMPLE

    def test_gcwa_both(self, lang2):
        U = make_universe(lang2, max_set_size=2)
        for kind in CoCompactKind:
            assert check_cocompact(op_gcwa(lang2), kind, U).passed


class TestLemmaRep:
    def test_holds_for_deductive_ops(self, lang2):
        U = make_universe(lang2, max_set_size=2)
        for op in (op_cn(lang2), op_cwa(lang2)):
            assert verify_lemma_rep(op, U).passed

    def test_fails_for_gcwa(self, lang2):
        pool = [parse_formula(s, lang2) for s in ("p", "p | q", "q", "!q")]
        U = make_universe(lang2, pool=pool, max_set_size=2)
        v = verify_lemma_rep(op_gcwa(lang2), U)
        assert v.outcome == "counterexample"


class TestUniqueExtension:
    def test_cwa(self, lang2):
        U = make_universe(lang2, max_set_size=2)
        v = verify_unique_extension(op_cwa(lang2), U)
        assert v.outcome == NO_COUNTEREXAMPLE
        assert v.notes == BOUNDED_EVIDENCE

    def test_gcwa_precondition_fails(self, lang2):
        pool = [parse_formula(s, lang2) for s in ("p", "p | q", "q", "!q")]
        U = make_universe(lang2, pool=pool, max_set_size=2)
        v = verify_unique_extension(op_gcwa(lang2), U)
        assert v.outcome == PRECONDITION_FAILED
        assert "deductivity" in v.notes


class TestCumulativeExtension:
    def test_poole(self, lang2):
        sys = PooleSystem(fset(Atom("p"), Not(Atom("p"))))
        op = op_poole(sys, lang2)
        U = make_universe(lang2, max_set_size=2)
        v = verify_cumuni(op, U)
        assert v.outcome == NO_COUNTEREXAMPLE

    def test_cwa_precondition_fails(self, lang2):
        U = make_universe(lang2, max_set_size=2)
        v = verify_cumuni(op_cwa(lang2), U)
        assert v.outcome == PRECONDITION_FAILED
        assert "cumulativity" in v.notes


def test_cocompactness_ladder(lang2):
    U = make_universe(lang2, max_set_size=2)
    for op in (op_cn(lang2), op_cwa(lang2), op_gcwa(lang2)):
        v = verify_weak_after_strong(op, U)
        assert v.passed, op.name

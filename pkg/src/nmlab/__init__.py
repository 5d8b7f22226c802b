"""nmlab: a bounded verification lab for nonmonotonic inference operations
over small propositional languages."""

from .core import (
    And,
    Atom,
    BOT,
    BotF,
    Formula,
    FormulaSyntaxError,
    Implies,
    Language,
    NmlabError,
    Not,
    Or,
    TOP,
    Theory,
    TopF,
    UnknownAtomError,
    arrow_set,
    canonical_axiom,
    cn,
    entails,
    format_formula,
    fset,
    language,
    models_of,
    parse_formula,
    verify_admissibility,
    verify_strong_admissibility,
)
from .ops import (
    AssumptionFn,
    InferenceOp,
    PooleSystem,
    cwa_assumptions,
    op_cn,
    op_cwa,
    op_from_assumptions,
    op_from_config,
    op_from_table,
    op_gcwa,
    op_poole,
    poole_basis,
    poole_natural_assumptions,
    two_variable_separation_op,
)
from .properties import (
    PropertyKind,
    PropertyVerdict,
    Universe,
    Witness,
    check_all,
    check_property,
    default_pool,
    make_universe,
)
from .representations import (
    ReprKind,
    check_maximality,
    check_supracompact_equiv,
    represent,
    verify_cuminters,
    verify_representation,
)
from .extension import (
    CoCompactKind,
    ExtensionKind,
    check_cocompact,
    extend,
    verify_cumuni,
    verify_lemma_rep,
    verify_unique_extension,
)
from .scenarios import list_scenarios, run_fuzz, run_scenario

__version__ = "0.1.0"

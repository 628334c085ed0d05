"""Resolution theorem proving over linguistic truth values.

Truth values are terms of a linear symmetrical hedge algebra such as
``VMTrue`` or ``LFalse``; clauses carry a reliability that degrades with
every resolution step.
"""

from .algebra import (
    AlgebraConfig,
    Order,
    TruthTerm,
    canonicalize,
    compare,
    enumerate_terms,
    iff,
    implies,
    join,
    meet,
    negate,
    parse_algebra,
    sign,
)
from .errors import (
    ArityError,
    ConfigError,
    EnumerationLimitExceeded,
    EvaluationError,
    HedgeresError,
    ParseError,
    ReplayError,
)
from .ground_oracle import (
    HerbrandLevel,
    Interpretation,
    Satisfiable,
    Unsatisfiable,
    check_sat,
    entails,
    eval_formula,
    eval_literal,
    find_model,
    ground_instances,
    herbrand_base,
    herbrand_universe,
)
from .normalize import clausify, clausify_problem, skolemize, to_cnf, to_nnf
from .saturate import (
    BudgetExhausted,
    ProofTree,
    Refuted,
    Saturated,
    SearchBudget,
    Strategy,
    combine_reliability,
    factor,
    is_variant,
    replay,
    resolve,
    saturate,
    set_reliability,
)
from .syntax import (
    AnnotatedClause,
    Atom,
    Clause,
    Literal,
    Problem,
    free_vars,
    parse_clause,
    parse_formula,
    parse_problem,
    read_problem,
    to_text,
)
from .unify import Substitution, apply, compose, mgu

__version__ = "0.1.0"

from .errors import (
    WorkbenchError,
    ParseError,
    ShapeError,
    PreconditionError,
    InvalidRedexError,
    UnknownSuiteError,
)
from .names import Name, Supply, var, special
from .context import ContextPath, HOLE
from .terms import (
    Var,
    Lam,
    App,
    Sub,
    Term,
    Value,
    FreshNames,
    free_vars,
    names,
    alpha_key,
    alpha_eq,
    rename,
    meta_subst,
    unfold,
    uniquify_binders,
    fresh_copy,
    size,
    subterms,
    is_value,
    values_of,
    is_pure,
    is_vker,
    validate_vker,
    vapp,
    print_term,
    canonical_form,
    canonical_print,
)
from .parser import parse_term, parse_vterm
from .trace import Trace, TraceStep
from .cbn import (
    CbnRedex,
    CbnStep,
    decompose_cbn,
    classify_normal,
    cbn_redex_count,
    cbn_step,
    cbn_trace,
    whr_oracle_step,
    whr_trace,
    check_subterm_property,
    check_projection,
)
from .cbv import (
    CbvRedex,
    ReductionGraph,
    enumerate_cbv_redexes,
    cbv_step,
    step_all,
    cbv_trace,
    explore_cbv,
    check_diamond,
    check_equal_lengths,
    check_v_subterm,
)

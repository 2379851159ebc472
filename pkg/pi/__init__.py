from .process import (
    Nil,
    OutU,
    OutB,
    Nu,
    InB,
    RepIn,
    Par,
    Process,
    NIL,
    par,
    nus,
    ParLeft,
    ParRight,
    NuBody,
    free_names,
    names,
    alpha_key,
    alpha_eq_process,
    rename,
    rename_free,
    size,
    subprocesses,
    check_encoding_discipline,
    print_process,
)
from .parser import parse_process
from .congruence import (
    canonicalize,
    canonical_key,
    canonical_print,
    congruent,
    split_canonical,
    nb_positions,
    rewrites,
    congruence_ball,
    congruence_oracle,
    derived_rule_checks,
)
from .reduction import (
    KINDS,
    PiRedex,
    enumerate_pi_redexes,
    apply_pi_redex,
    pi_successors,
    classic_step_oracle,
    harmony_check,
    successor_classes,
    check_congruence_bisimulation,
)
from .reports import DerivedRuleReport, HarmonyReport, KindComparison

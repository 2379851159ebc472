from .generators import (
    enumerate_terms,
    enumerate_up_to,
    brute_force_count,
    random_term,
    random_process,
    random_congruent_variant,
)
from .shrink import shrink_term, shrink_process, smaller_terms, smaller_processes
from .quadratic import (
    QuadraticRow,
    OmegaRow,
    QuadraticReport,
    church,
    default_corpus,
    measure,
    omega_table,
    quadratic_experiment,
)
from .suites import SUITES, Suite, SuiteBounds, SuiteReport, run_suite

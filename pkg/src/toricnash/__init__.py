"""Iterated Nash modification of toric curves, as combinatorics on integer sets."""
from .bounds import (BoundReport, bound_report, check_fib_lower, delta_upper_digits,
                     delta_upper_fib, eta_upper_bound, fibonacci, v_of)
from .curve import (DivisionRow, DivisionSummary, ResolutionTrace, TraceReport,
                    division_summary, min_drop_steps, nash_step, resolve, trace_invariants)
from .errors import *  # noqa: F401,F403
from .semigroup import (CurveGenerators, MembershipWitness, embedding_dimension, is_member,
                        make, minimal_generators, multiplicity, normalize)
from .toric import (BinomialRelation, Chart, ChartTree, LatticeConfig, MonomialIdeal,
                    all_charts, chart, is_smooth, iterate_multidim, kernel_binomials,
                    log_jacobian, validate, verify_binomial)

__version__ = "0.1.0"

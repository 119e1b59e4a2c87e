"""partineq: partition families, q-series surplus positivity, verified injections.

The flat namespace re-exports the everyday surface: partition values and
families, the truncated series constructors, the closed-form thresholds,
the injection registry helpers, and the verifier report builders.  The
heavier machinery (the compiled exhaustive sweeps in ``partineq.fastcheck``,
the individual map classes under ``partineq.injections``) stays behind its
module path.
"""

from partineq.injections import (
    MAP_IDS,
    CodomainViolationError,
    NotApplicableError,
    SolverPreconditionError,
    apply_map,
    case_signature,
    classify,
    get_map,
    witness,
)
from partineq.partitions import (
    EMPTY,
    NegativeFrequencyError,
    Partition,
    PartitionFamily,
    count_family,
    count_family_upto,
    enumerate_family,
    make_partition,
    member,
    parse_partition,
)
from partineq.series import (
    TruncatedSeries,
    bounded_gap_surplus_series,
    exclusion_shift_series,
    pochhammer_poly,
    presence_surplus_series,
    surplus_series,
    surplus_shift_identity,
)
from partineq.thresholds import (
    Thresholds,
    bounded_gap_floor,
    coverage_bound,
    high_part_floor,
    thresholds,
)
from partineq.verifier import (
    reproduce_table,
    run_conjecture_suite,
    scan_positivity,
    verify_inequality,
    verify_injection,
)

__version__ = "0.1.0"

__all__ = [
    "EMPTY",
    "MAP_IDS",
    "CodomainViolationError",
    "NegativeFrequencyError",
    "NotApplicableError",
    "Partition",
    "PartitionFamily",
    "SolverPreconditionError",
    "Thresholds",
    "TruncatedSeries",
    "apply_map",
    "bounded_gap_floor",
    "bounded_gap_surplus_series",
    "case_signature",
    "classify",
    "count_family",
    "count_family_upto",
    "coverage_bound",
    "enumerate_family",
    "exclusion_shift_series",
    "get_map",
    "high_part_floor",
    "make_partition",
    "member",
    "parse_partition",
    "pochhammer_poly",
    "presence_surplus_series",
    "reproduce_table",
    "run_conjecture_suite",
    "scan_positivity",
    "surplus_series",
    "surplus_shift_identity",
    "thresholds",
    "verify_inequality",
    "verify_injection",
    "witness",
    "__version__",
]

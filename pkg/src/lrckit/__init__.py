"""Locally repairable codes over finite fields.

Construct block parity-check designs whose repair groups can be one or two
symbols longer than the field order allows with plain Vandermonde blocks,
certify their parameters ([n, k, d], locality, Singleton-type optimality) by
independent brute-force oracles, and repair erasures locally or globally.
"""

__version__ = "0.1.0"

from .analysis import (
    CodeReport,
    LocalityCertificate,
    RepairGroup,
    certify_locality,
    dimension,
    full_report,
    min_distance,
    min_distance_by_codewords,
    singleton_rd_bound,
    smallest_repair_group,
)
from .constructions import (
    FPolynomial,
    LrcDesign,
    build_g1,
    build_g2,
    build_g3_g4,
    build_general,
    build_h1,
    build_h2,
    build_h3,
    check_f_conditions,
)
from .errors import BudgetExceededError, LocalRepairError, LrcError, MdsPropertyError
from .fqmatrix import FqMatrix, LinearSolution, hstack, vandermonde, vstack
from .gf import FieldElement, FieldSpec, field_make
from .repair import (
    ErasurePattern,
    RepairResult,
    SweepOutcome,
    encode,
    generator_matrix,
    information_set,
    repair_auto,
    repair_global,
    repair_local,
    sweep,
)

__all__ = [
    "BudgetExceededError",
    "CodeReport",
    "ErasurePattern",
    "FPolynomial",
    "FieldElement",
    "FieldSpec",
    "FqMatrix",
    "LinearSolution",
    "LocalRepairError",
    "LocalityCertificate",
    "LrcDesign",
    "LrcError",
    "MdsPropertyError",
    "RepairGroup",
    "RepairResult",
    "SweepOutcome",
    "build_g1",
    "build_g2",
    "build_g3_g4",
    "build_general",
    "build_h1",
    "build_h2",
    "build_h3",
    "certify_locality",
    "check_f_conditions",
    "dimension",
    "encode",
    "field_make",
    "full_report",
    "generator_matrix",
    "hstack",
    "information_set",
    "min_distance",
    "min_distance_by_codewords",
    "repair_auto",
    "repair_global",
    "repair_local",
    "singleton_rd_bound",
    "smallest_repair_group",
    "sweep",
    "vandermonde",
    "vstack",
]

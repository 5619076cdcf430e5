"""Localization sets and exact enumeration for the symmetric EiCP.

The eigenvalue complementarity problem EiCP(A, B) asks for lambda and a
nonzero x >= 0 with (A - lambda B) x >= 0 and x^T (A - lambda B) x = 0.
This package certifies the matrix classes involved (strict diagonal
dominance, positive definiteness, copositivity), computes interval
localization sets for the complementarity spectrum from row sums and
from the generalized eigenvalues, enumerates the exact spectrum of
small instances by support scanning, and verifies the containment
relations between all of these.
"""

from .certify import (
    ClassCertificate,
    CopositivityResult,
    MatrixPair,
    check_copositive,
    check_pd,
    check_sdd,
    certify_matrix,
    make_pair,
    shift_pair,
    simplex_minimum,
    suggest_shift,
)
from .errors import (
    DimensionError,
    DimensionMismatch,
    DimensionTooLarge,
    EicpError,
    HypothesisViolation,
    NegativeDiscriminant,
    NegativeShift,
    NoRealRoot,
    NonConvergence,
    NotCommuting,
    NotPositiveDefinite,
    ParamOutOfRange,
    ParseError,
)
from .families import FamilyInstance, commuting_ratio_check, prop4_instance, prop5_instance
from .instance_io import load_instance, parse_report, save_instance, serialize_report
from .intervals import Interval, IntervalUnion
from .linalg import EigenDecomposition, as_symmetric, cholesky, generalized_eig, sym_eig
from .localize import (
    Assumptions,
    LocalizationReport,
    QuadraticPoly,
    build_quadratics,
    gamma_interval,
    hull_bounds_k1,
    hull_bounds_k2,
    k1_cop_intervals,
    k1_cop_set,
    k1_intervals,
    k1_set,
    k2_intervals,
    k2_set,
    localization_report,
    multi_row_polys,
    multi_row_roots,
    pair_vertex_and_caps,
    quad_roots,
)
from .rowstats import PairStats, RowStats, pair_stats, row_stats
from .spectrum import (
    EicpSolution,
    SolutionCheck,
    Spectrum,
    SpectrumReport,
    enumerate_spectrum,
    spectrum_report,
    verify_solution,
)

__version__ = "0.1.0"

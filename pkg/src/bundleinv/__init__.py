"""Exact invariants of holomorphic vector bundles on local threefolds."""

from .cech import INF, Certificate, DimResult, h0_neighborhood, h1_formal, h1_neighborhood, is_infinite
from .errors import (
    BoxUnstable,
    BundleInvError,
    InternalMismatch,
    NotSpanned,
    PolynomialSyntaxError,
    UndecidedFiniteness,
    UnsupportedRestriction,
    VariableOutOfRange,
    WindowUnstable,
)
from .geometry import (
    ExtensionBundle,
    FormalLineBundle,
    SplitBundle,
    TotalSpace,
    reduce_extension_class,
    splitting_type,
    transition_matrix,
)
from .invariants import chi, gamma_closed, gamma_formal, h_prime, invariant_report, split_formulas, w_prime
from .laurent import LaurentPoly, LaurentVector, chart_substitute, parse_poly, truncate_u

__version__ = "0.1.0"

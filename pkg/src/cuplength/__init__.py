"""Exact cup-length and category bounds for oriented Grassmann manifolds over GF(2)."""

from .bounds import (
    BoundReport,
    NilpotencyData,
    OrientedSummary,
    PoincareProfile,
    RationalBounds,
    check_a2,
    full_report,
    grossman_upper,
    lower_a3,
    prop_b_certificate,
    prop_b_lower,
    prop_d_upper,
    rational_bounds,
    summarize_oriented,
    upper_a1,
    upper_b1,
)
from .gf2poly import Gf2Polynomial, Monomial, ideal_gens_k3, inverse_series_components, parse_polynomial
from .gf2linalg import BitMatrix, EchelonBasis, Eliminator, echelonize, kernel_basis, rank
from .grassmann import (
    DEFAULT_CAPS,
    GradedQuotient,
    GrassmannPresentation,
    OrientedContext,
    SizeCapExceeded,
    SizeCaps,
)
from .heights import (
    HeightRecord,
    ZeroClassError,
    closed_form_w2_height,
    decompose_n,
    height_direct,
    rational_p1_height,
    tabulated_w2_height,
)

__version__ = "0.1.0"

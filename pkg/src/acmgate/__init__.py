"""Exact bookkeeping for rank-2 ACM bundles on hypersurfaces in P^4."""

from .exact import Poly, binom4, binom4_poly, hdim, parse_poly
from .bundle_rr import BundleInvariants, HypersurfaceContext, chi_rank2, chi_rank2_sextic, twist
from .gorenstein import (
    CurveInvariants,
    GorensteinResolution,
    flag_gate,
    h0_curve,
    h0_ideal,
    hilbert_constraints,
    km_h0_normal,
)
from .liaison import CIType, GradedComplex, cancel_pair, degree_genus, koszul_resolution, link

__version__ = "0.1.0"

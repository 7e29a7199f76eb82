"""Exact Chern-character calculus on C x S and C x T.

Cohomology ring and Hilbert polynomials, the cohomological Fourier-Mukai
transform, slope functions, asymptotic Gieseker comparisons, positivity
constraints, Harder-Narasimhan filtrations on finite lattices, and
exhaustive verifiers for the identities relating them.
"""

from .errors import GeometryMismatch, InvalidFixture, MalformedInput, PreconditionError
from .fm import Wit, fm_inverse, fm_transform, wit_sign_check
from .gieseker import (
    SurfaceCase,
    Verdict,
    VerdictKind,
    destabilizes_2d,
    destabilizes_3d,
    lex_vector_3d,
    surface_compare,
)
from .hn import (
    HNFiltration,
    KClass,
    SubobjectLattice,
    b01_part,
    hn_by_exhaustion,
    hn_filtration,
    maximal_destabilizer,
    mu_max,
    mu_min,
    p_compare,
    slope,
    torsion_part,
    validate_lattice,
)
from .lattice import (
    ChernCharacter,
    CohClass,
    DivisorClass,
    Surface,
    Threefold,
    cup,
    euler_characteristic,
    hilbert_polynomial,
    integrate,
    is_ample,
    pairings,
    restrict_to_fiber,
    restrict_to_section,
)
from .poly import Order, RationalPoly, poly_compare_large_param
from .positivity import admissible_subcharacters, classify_pattern, serre_closure_check
from .slopes import (
    PLUS_INFINITY,
    SlopeValue,
    mu_f,
    mu_H,
    mu_H_of_transform,
    mu_lower_star,
    mu_upper_star,
    slope_trichotomy,
)

__version__ = "0.1.0"

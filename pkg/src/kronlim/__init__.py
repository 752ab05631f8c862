"""kronlim: Eisenstein series on the generalized upper half-plane.

Evaluates the maximal parabolic Eisenstein series by direct lattice sums,
by a recursive Poisson/Bessel expansion valid past s = 1, and by
closed-form Laurent data at s = 1 built from a generalized eta function.
"""

from .errors import (
    ConvergenceError,
    DomainError,
    KronlimError,
    PoleError,
    ShapeError,
)
from .halfplane import (
    HalfPlanePoint,
    TermGeometry,
    det_tau,
    make_point,
    squared_row_norm,
    term_geometry,
    truncate,
    z_to_point,
)
from .specfun import (
    DEFAULT_QUADRATURE,
    EULER_GAMMA,
    QuadratureSpec,
    euler_gamma,
    gamma_integral_check,
    gamma_real,
    k_integral,
    riemann_zeta,
)
from .eisenstein import (
    DEFAULT_TRUNCATION,
    LaurentData,
    SeriesTag,
    TruncationSpec,
    completion_prefactor,
    direct_tail_bound,
    e_prime_direct,
    e_prime_fast,
    e_primitive_direct,
    e_star_direct,
    e_star_fast,
    g_of_tau,
    laurent_at_1,
)
from .oracle import (
    Signature,
    dedekind_eta_abs,
    hecke_scaling_check,
    poisson_check,
)
from .verify import SUITES, run_suite

__version__ = "0.1.0"

__all__ = [
    "KronlimError",
    "DomainError",
    "ShapeError",
    "PoleError",
    "ConvergenceError",
    "HalfPlanePoint",
    "TermGeometry",
    "make_point",
    "z_to_point",
    "squared_row_norm",
    "term_geometry",
    "truncate",
    "det_tau",
    "QuadratureSpec",
    "DEFAULT_QUADRATURE",
    "EULER_GAMMA",
    "euler_gamma",
    "gamma_real",
    "riemann_zeta",
    "k_integral",
    "gamma_integral_check",
    "TruncationSpec",
    "DEFAULT_TRUNCATION",
    "LaurentData",
    "SeriesTag",
    "completion_prefactor",
    "direct_tail_bound",
    "e_prime_direct",
    "e_primitive_direct",
    "e_star_direct",
    "e_star_fast",
    "e_prime_fast",
    "g_of_tau",
    "laurent_at_1",
    "Signature",
    "dedekind_eta_abs",
    "poisson_check",
    "hecke_scaling_check",
    "SUITES",
    "run_suite",
    "__version__",
]

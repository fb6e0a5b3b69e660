"""Sharp starlikeness radii for products of starlike functions with
non-vanishing polynomials, with independent numerical verification."""

from .analytic import (
    ExtremalSpec,
    PoleHitError,
    disc_bound,
    extremal_w,
    general_w,
    log_derivative_Q,
    psi_lower_bound,
)
from .params import (
    Branch,
    CaseDiagnostics,
    ClassParams,
    Disc,
    OutOfRangeError,
    PolynomialSpec,
    RadiusResult,
    WitnessSign,
    ZeroInsideDiscError,
    validate_params,
    validate_polynomial,
)
from .oracle import (
    DiscBoundViolations,
    OracleConfig,
    SharpnessReport,
    WitnessPoleError,
    containment_profile,
    numeric_radius,
    random_extremal_specs,
    target_domain,
    verify_disc_bound,
    verify_sharpness,
)
from .radii import (
    ClassKind,
    ConsistencyError,
    NoRootInUnitIntervalError,
    NotApplicableError,
    TargetClass,
    case_polynomial,
    case_selector,
    radius,
    radius_cardioid,
    radius_exp,
    radius_nephroid,
    radius_rational,
    radius_sigmoid,
    radius_starlike_order,
    solve_smallest_root,
)
from .regions import (
    CenterOutsideDiameterError,
    DomainKind,
    NonFiniteError,
    TargetDomain,
    UnboundedBoundaryError,
    boundary_point,
    boundary_polyline,
    contains,
    contains_by_winding,
    contains_many,
    inscribed_radius,
    winding_number,
)

__version__ = "0.1.0"

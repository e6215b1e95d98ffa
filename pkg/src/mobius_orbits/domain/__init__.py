"""Domain layer: pure numerics with no I/O dependencies."""

from mobius_orbits.domain.bridge import (
    ParamPair,
    check_cq_equals_mhat,
    check_homomorphism,
    gamma,
    gamma_inv,
    quaternion_of,
)
from mobius_orbits.domain.exceptions import (
    ConfigurationError,
    DegenerateOrbitError,
    IdentityTransformError,
    IndeterminateFormError,
    MobiusOrbitsError,
    NotQuaternionicError,
    PolarAxisDegenerateError,
    ReportError,
    ZeroQuaternionError,
)
from mobius_orbits.domain.extplane import (
    INFINITY,
    ExtComplex,
    SpherePoint,
    chordal_distance,
    ext_eq,
    stereo,
    stereo_inv,
)
from mobius_orbits.domain.lie import (
    CounterexampleReport,
    TangentMobius,
    counterexample_report,
    expm_so3,
    so3_generator,
    t_prime_zero,
)
from mobius_orbits.domain.mobius import (
    GeneralMobius,
    QuatMobius,
    as_quat_mobius,
    compose,
    evaluate,
    fixed_points,
    induced_rotation,
    induced_sphere_map,
    inverse,
    maps_equal,
    qcompose,
    star,
)
from mobius_orbits.domain.models import (
    CheckSettings,
    LieSettings,
    OrbitSettings,
    Rotation3,
    SkewMatrix3,
    ToleranceSettings,
)
from mobius_orbits.domain.orbits import (
    OrbitSample,
    d_tau,
    g_family,
    lambda_family,
    phi_family,
    sample_invariant_curve,
    t_orbit,
    u_phi_lambda,
    w_phi,
)
from mobius_orbits.domain.polar import (
    Decomposition,
    PolarData,
    angles_to_params,
    decompose,
    extract_polar,
)
from mobius_orbits.domain.quaternion import (
    Quaternion,
    UnitPureQuaternion,
    adapted_frame,
    conj,
    conjugate_by,
    inner,
    left_matrix,
    norm,
    qexp,
    qmul,
    right_matrix,
    rotation_matrix_cq,
    to_polar,
)
from mobius_orbits.domain.verification import SuiteReport, run_invariant_suite

__all__ = [
    "INFINITY",
    "CheckSettings",
    "ConfigurationError",
    "CounterexampleReport",
    "Decomposition",
    "DegenerateOrbitError",
    "ExtComplex",
    "GeneralMobius",
    "IdentityTransformError",
    "IndeterminateFormError",
    "LieSettings",
    "MobiusOrbitsError",
    "NotQuaternionicError",
    "OrbitSample",
    "OrbitSettings",
    "ParamPair",
    "PolarAxisDegenerateError",
    "PolarData",
    "QuatMobius",
    "Quaternion",
    "ReportError",
    "Rotation3",
    "SkewMatrix3",
    "SpherePoint",
    "SuiteReport",
    "TangentMobius",
    "ToleranceSettings",
    "UnitPureQuaternion",
    "ZeroQuaternionError",
    "adapted_frame",
    "angles_to_params",
    "as_quat_mobius",
    "check_cq_equals_mhat",
    "check_homomorphism",
    "chordal_distance",
    "compose",
    "conj",
    "conjugate_by",
    "counterexample_report",
    "d_tau",
    "decompose",
    "evaluate",
    "expm_so3",
    "ext_eq",
    "extract_polar",
    "fixed_points",
    "g_family",
    "gamma",
    "gamma_inv",
    "induced_rotation",
    "induced_sphere_map",
    "inner",
    "inverse",
    "lambda_family",
    "left_matrix",
    "maps_equal",
    "norm",
    "phi_family",
    "qcompose",
    "qexp",
    "qmul",
    "quaternion_of",
    "right_matrix",
    "rotation_matrix_cq",
    "run_invariant_suite",
    "sample_invariant_curve",
    "so3_generator",
    "star",
    "stereo",
    "stereo_inv",
    "t_orbit",
    "t_prime_zero",
    "to_polar",
    "u_phi_lambda",
    "w_phi",
]

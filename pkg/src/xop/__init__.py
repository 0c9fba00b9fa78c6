"""xop: exceptional (X1) orthogonal polynomials, rationally extended
isospectral potentials, and the numerical machinery to verify both."""

from .calculus import Jet2
from .errors import (
    AccuracyError,
    ConsistencyError,
    DomainError,
    NumericError,
    ParameterError,
    SingularityError,
    UsageError,
    XopError,
)
from .exceptional import (
    ClassicalJacobi,
    ClassicalLaguerre,
    EigenPair,
    FamilySpec,
    X1Jacobi,
    X1Laguerre,
    degree0_eigenfunction_exists,
    family_domain,
    family_eigenvalue,
    family_from_dict,
    family_members,
    family_to_dict,
    gram_matrix,
    max_offdiag_ratio,
    ode_residual,
    weight,
    x1_eigenpairs,
    x1_jacobi_alpha_beta,
    x1_jacobi_from_classical,
    x1_polynomial,
)
from .polynomials import (
    Polynomial,
    eval_jacobi,
    eval_laguerre,
    jacobi_polynomial,
    laguerre_polynomial,
    polynomial_from_json,
)
from .quadrature import QuadratureRule, finite_rule, semi_infinite_rule
from .spectral import (
    Grid,
    SpectrumResult,
    TridiagonalOperator,
    apply_coordinate_weight,
    discretize,
    eigen_lowest,
    extrapolate,
    residual_on_operator,
)
from .systems import (
    DiracOscillator,
    HartmannAngularI,
    HartmannAngularII,
    HartmannRadial,
    HydrogenLike,
    Interval,
    PotentialFn,
    ReducedSystem,
    SystemParams,
    analytic_energy,
    dirac_oscillator_potential_printed,
    hydrogen_s_parameter,
    hydrogen_standard_energy,
    potential_hartmann_angular_i_printed,
    reduce_dirac_oscillator,
    reduce_hartmann_radial,
    reduce_hydrogen,
    reduce_system,
    system_from_dict,
    system_from_json,
    system_to_dict,
    ve_dirac_oscillator,
    ve_hartmann_angular_i,
    ve_hartmann_angular_ii,
    ve_hartmann_radial,
    ve_hydrogen,
    wavefunction,
)
from .verify import (
    DEFAULT_TOLERANCES,
    Tolerances,
    VerificationReport,
    isospectral_compare,
    solve_variant,
)

__version__ = "0.1.0"

"""Ground-state energetics of one non-relativistic electron coupled to a photon field."""

from .field_kernels import (
    ConstraintError,
    FieldParams,
    InequalityKind,
    ProfileKind,
    RadialProfile,
    dd_commutator,
    e_field_integral,
    gh_cross_integral,
    operator_inequality_ratio,
    profile_value,
)
from .hydrogen import (
    CorrectionMode,
    DipoleSpectrum,
    HydrogenModel,
    binding_gain_upper,
    dipole_coefficient,
    excitation_integral,
    level_energy,
    radiative_correction,
    sum_rule_partial,
)
from .numerics import BracketError, Interval, QuadResult, QuadratureError, find_root, integrate
from .self_energy import (
    SelfEnergyReport,
    apriori_bounds,
    err_envelope,
    self_energy_report,
    sigma_leading,
    sigma_secular,
    sigma_upper_bound,
)
from .threshold import (
    Branch,
    Certificate,
    ThresholdReport,
    alpha_max,
    coefficient_scan,
    enhancement_certificate,
    z_min,
)

__version__ = "0.1.0"

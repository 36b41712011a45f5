"""Relativistic dipole model of the solenoid fringe-shift effect."""

from ._core import (
    BeamConfig,
    BeamSide,
    ConsistencyError,
    DomainError,
    ElectronKinematics,
    FringePrediction,
    FringeProfile,
    MomentumBreakdown,
    PhysConsts,
    QuadResult,
    RegimeError,
    SidePair,
    SolenoidConfig,
    canonical_unit_field,
    cg_offsets,
    coil_current,
    deflection_angle,
    drift_speed_for_field,
    effective_charge_approx,
    effective_charge_exact,
    effective_impact_parameters,
    fringe_order_shift,
    fringe_profile,
    kinematics_from_energy,
    kinematics_from_speed,
    lorentz_factor,
    mean_parallel_speed,
    model_to_canonical_ratio,
    momentum_kernel,
    oracle_cg,
    oracle_half_circle_weight,
    oracle_phi_resolved_charge,
    oracle_winding_integral,
    predict_fringes,
    shifted_lorentz_factors,
    side_momentum,
    total_transverse_momentum,
    unit_shift_field,
    winding_integrated_charge,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

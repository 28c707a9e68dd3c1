"""Massage-robot admittance simulator: techniques, closed loop, analysis."""

from ._core import (
    AdmittanceParams,
    AdmittanceState,
    BeatParams,
    ComparisonReport,
    ConfigError,
    FieldCheck,
    ForceSample,
    ForceTrace,
    NonFiniteInputError,
    Pose,
    PressParams,
    PushParams,
    ReferenceKinematics,
    ReferenceSource,
    RunConfig,
    SimConfig,
    SimResult,
    SkinModel,
    Technique,
    TechniqueSpec,
    Tolerances,
    TraceParseError,
    TraceStats,
    UnstableSimulationError,
    VibrateParams,
    Window,
    compare_to_reference,
    contact_force,
    dominant_frequency,
    export_trace,
    load_run_config,
    magnitude_spectrum,
    press_desired_force,
    read_trace_csv,
    reference_stats,
    run_simulation,
    step,
    technique_cycle,
    technique_from_name,
    technique_name,
    trace_stats,
    update_compensation,
    validate_sim_config,
    validate_trace,
    write_trace_csv,
)

__all__ = [name for name in dir() if not name.startswith("_")]

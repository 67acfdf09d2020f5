"""Relativistic Schrodinger-type spectra for particle-field systems.

Closed-form oscillator and hydrogen-like spectra, terminating radial series
solutions, independent shooting-method eigenvalue oracles, and the joint
particle-field trajectory machinery, all in rest-energy / Compton units.
"""

from .dynamics import (
    EnergyDecomposition,
    PFKinematics,
    QdotResult,
    boost_consistency_diagnostic,
    energy_split,
    field_force,
    interval_check,
    relativistic_qdot,
    trajectory_q,
)
from .hydrogen import (
    QuantumState,
    RadialCoefficients,
    RadialSeries,
    RadialWavefunction,
    assemble,
    composed_expanded_energy,
    energy_from_termination,
    exact_binding_energy,
    exact_energy,
    expanded_energy,
    radial_wavefunction,
    series_solve,
    shifted_orbital_index,
    spherical_harmonic,
)
from .oracle import (
    BracketError,
    EigenResult,
    ShootingProblem,
    SpectrumOrderingError,
    bracketed_root,
    dense_oscillator_anchor,
    grid_residual,
    hydrogen_radial_problem,
    mass_dependent_oscillator_problem,
    mass_independent_oscillator_problem,
    shoot_eigenvalue,
    textbook_oscillator_problem,
)
from .oscillator import (
    OscillatorLevel,
    OscillatorVariant,
    eigenfunction,
    energy_mass_dependent,
    energy_mass_independent,
    hermite_polynomial,
    level_eigenfunction,
    mass_independent_secular_root,
    reduced_equation_coefficients,
)
from .units import (
    CouplingG,
    OscillatorCoupling,
    UnitScheme,
    electron_scheme,
    hydrogen_coupling,
    load_config,
    make_unit_scheme,
    non_rel_hydrogen_level,
)

__version__ = "0.1.0"

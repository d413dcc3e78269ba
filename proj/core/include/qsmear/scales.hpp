#pragma once

#include <qsmear/constants.hpp>

namespace qsmear {

struct LengthMass {
    double length;
    double mass;
};

struct SmearingWidths {
    double sigma_g;        ///< position-space width, length units
    double sigma_g_tilde;  ///< momentum-space width, momentum units
};

/// The geometry Fourier scale beta computed along its two independent routes.
struct BetaScale {
    double value;          ///< adopted value (the width product route)
    double via_widths;     ///< 2 * sigma_g * sigma_g_tilde
    double via_densities;  ///< 2^{(d+1)/(2(d-1))} * hbar * sqrt(rho_Lambda / rho_Pl)
};

/// Intermediate length/mass scales with a density cross-check.
struct OptimalScales {
    double length;             ///< l = 2^{1/4} sqrt(l_Pl * l_dS)
    double mass;               ///< m = 2^{-1/4} sqrt(m_Pl * m_dS)
    double density_crosscheck; ///< (3/4pi) m / l^3, should reproduce the dark energy density (d=3)
};

/// Finite-universe window for the generalized position and momentum spreads.
struct UncertaintyBounds {
    double x_min;
    double x_max;
    double p_min;
    double p_max;
};

/// Everything derived from one set of constants.
struct PhysicalScales {
    PhysicalConstants constants;
    double planck_length;
    double planck_mass;
    double desitter_length;
    double desitter_mass;
    double sigma_g;
    double sigma_g_tilde;
    double beta;
    double beta_over_hbar;
    double dark_energy_density;
    double planck_density;
    double optimal_length;
    double optimal_mass;
};

/// Volume coefficient of the unit d-ball, pi^{d/2} / Gamma(d/2 + 1),
/// evaluated through lgamma so large d stays finite.
double ball_volume_coefficient(int d);

/// l_Pl = (hbar G / c^3)^{1/(d-1)}, m_Pl = (hbar^{d-2} c^{4-d} / G)^{1/(d-1)}.
LengthMass planck_scales(const PhysicalConstants& consts);

/// l_dS = sqrt(d / Lambda), m_dS = (hbar/c) sqrt(Lambda / d).
LengthMass desitter_scales(const PhysicalConstants& consts);

/// sigma_g = 2^{1/(d-1)} l_Pl, sigma_g_tilde = m_dS c / 2.
SmearingWidths smearing_widths(const PhysicalConstants& consts);

/// beta via the width product and via the density ratio; the two expressions
/// are algebraically identical and are required to agree to 1e-12 relative.
BetaScale beta_scale(const PhysicalConstants& consts);

/// rho_Lambda = Lambda c^2 / (2 d Omega_d G); reduces to Lambda c^2/(8 pi G)
/// for d = 3.
double dark_energy_density(const PhysicalConstants& consts);

/// rho_Pl = m_Pl / (Omega_d l_Pl^d); (3/4pi) m_Pl / l_Pl^3 for d = 3.
double planck_density(const PhysicalConstants& consts);

/// Geometric means of the Planck and de Sitter scales, with the density
/// cross-check (3/4pi) m / l^3 (meaningful for d = 3, where it reproduces
/// the dark energy density exactly).
OptimalScales optimal_scales(const PhysicalConstants& consts);

/// Zero-point mode sum between the infrared cutoff 2pi/l_dS and the
/// ultraviolet cutoff 2pi/l_Lambda with effective mass scale 2pi/l_Lambda:
///   rho = (hbar/c) Int d^3k/(2pi)^3 sqrt(k^2 + (2pi/l_Lambda)^2)
/// evaluated by adaptive quadrature. For the default constants this lands
/// within a factor ~6 of Lambda c^2 / G. Defined for d = 3.
double vacuum_density_estimate(const PhysicalConstants& consts);

/// The bare quadrature Int_{k_min}^{k_max} k^2 sqrt(k^2 + k_mass^2) dk,
/// exposed so tests can pin it against an independent oracle.
double vacuum_mode_integral(double k_min, double k_max, double k_mass);

/// Mass scale associated with a horizon length: m_H = hbar / (l_H c).
double horizon_mass(double hubble_length, const PhysicalConstants& consts);

/// Optimal momentum spread when the horizon sits at l_H:
/// sqrt(m_Pl * m_H) * c. Interpolates from m_dS c (l_H = l_dS) to m_Pl c
/// (l_H = l_Pl).
double horizon_momentum_spread(double hubble_length, const PhysicalConstants& consts);

/// Allowed windows for the generalized spreads in a finite universe:
///   2 l_Pl          <= DX <= sqrt(l_dS^2 + 2 l_Pl^2)
///   m_dS c/sqrt(2)  <= DP <= (c/2) sqrt(m_Pl^2/2 + m_dS^2)
UncertaintyBounds finite_universe_bounds(const PhysicalConstants& consts);

/// All scales at once.
PhysicalScales compute_scales(const PhysicalConstants& consts);

}  // namespace qsmear

#pragma once

#include <qsmear/constants.hpp>

#include <vector>

namespace qsmear {

enum class MassRegime { particle, planckian, black_hole };

struct MassRadiusRow {
    double mass;
    double compton;
    double schwarzschild;
    double unified;
    MassRegime regime;
};

struct HoopResult {
    bool satisfied;
    double margin;  ///< bound side minus packet side; positive when satisfied
};

struct RadiusMinimum {
    double mass;
    double radius;
};

const char* to_string(MassRegime regime);

/// Reduced Compton wavelength hbar / (m c).
double compton(double mass, const PhysicalConstants& consts);

/// Horizon radius (2 G m / c^2)^{1/(d-1)}; the familiar 2 G m / c^2 in d = 3.
double schwarzschild(double mass, const PhysicalConstants& consts);

/// Two-term curve hbar/(2 m c) + 2 G m / c^2 covering particles and black
/// holes in one expression (d = 3 only). Approaches half the Compton
/// wavelength far below the Planck mass and the horizon radius far above it.
double unified_radius(double mass, const PhysicalConstants& consts);

/// particle below m_Pl/4 (the heaviest emission product), black hole above
/// m_Pl, planckian in between.
MassRegime classify_mass(double mass, const PhysicalConstants& consts);

/// Collapse criterion for a wave packet with generalized spreads:
/// sqrt(dx^2 + 2 l_Pl^2) <= (2G/c^3) dp + hbar/(2 dp).
HoopResult hoop_condition(double delta_x, double delta_p, const PhysicalConstants& consts);

/// The same comparison with the inequality reversed (the two orientations
/// bracket the conjectured collapse threshold).
HoopResult hoop_condition_reversed(double delta_x, double delta_p,
                                   const PhysicalConstants& consts);

/// Typical mass of a particle emitted by a black hole of mass M >= m_Pl:
/// m = m_Pl^2 / (4 M).
double emission_mass(double hole_mass, const PhysicalConstants& consts);

/// Partner mass m_Pl^2 / (4 m); the unified radius takes the same value at a
/// mass and its partner, with the two terms exchanged.
double dual_mass(double mass, const PhysicalConstants& consts);

/// Mass where the Compton and Schwarzschild curves cross, m_Pl / sqrt(2).
double compton_schwarzschild_intersection_mass(const PhysicalConstants& consts);

std::vector<MassRadiusRow> mass_radius_table(const std::vector<double>& masses,
                                             const PhysicalConstants& consts);

/// Golden-section minimum of the unified curve; lands on mass m_Pl / 2 and
/// radius 2 l_Pl.
RadiusMinimum minimize_unified_radius(const PhysicalConstants& consts);

}  // namespace qsmear

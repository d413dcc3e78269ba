#pragma once

#include <string>
#include <vector>

#include "run_config.hpp"
#include "table.hpp"

namespace qsmear::cli {

/// Characteristic lengths, masses, and densities from the physical
/// constants block. Requires mode=physical.
Table cmd_scales(const RunConfig& cfg);

struct UncertaintyOptions {
    std::vector<double> betas;       ///< overrides the single configured beta
    std::vector<double> widths;      ///< explicit unsmeared packet widths
    int random_widths = 0;           ///< draw this many widths instead, seeded
};

/// Sweep of the generalized width product over packet widths and beta
/// values, one row per (beta, width) pair.
Table cmd_uncertainty(const RunConfig& cfg, const UncertaintyOptions& opt);

struct MeasureOptions {
    double psi_mean = 0.0;
    double psi_width = 1.0;
    std::vector<double> outcomes;  ///< recorded positions fed to the chain
    int samples = 0;               ///< additionally drawn outcomes, seeded
};

/// Conditions a smeared packet on a chain of position outcomes and reports
/// the post-measurement moments.
Table cmd_measure(const RunConfig& cfg, const MeasureOptions& opt);

struct EvolveOptions {
    double mass = 1.0;
    double time = 1.0;
    int steps = 0;  ///< 0 reports the initial state without stepping
    double psi_mean = 0.0;
    double psi_width = 1.0;
    double wavenumber = 0.0;
    std::string potential = "free";  ///< free or harmonic
    double omega = 1.0;
    double center = 0.0;
};

/// Evolves a smeared packet under the chosen potential and reports moments,
/// energy, norm drift, and (for free motion) the packet velocity.
Table cmd_evolve(const RunConfig& cfg, const EvolveOptions& opt);

struct EntangleOptions {
    std::string kernel = "product-gaussian";  ///< product-gaussian, radial-exponential, point
    double psi_width = 1.0;
    double separation = 0.0;  ///< distance between the two packet centers
    int pair_n = 32;          ///< per-axis points for the four-axis state
    double pair_extent = 12.0;
    int offset_n = 48;
    double offset_extent = 8.0;
};

/// Builds a two-particle smeared state and reports the geometry-induced
/// entanglement entropy and Schmidt data.
Table cmd_entangle(const RunConfig& cfg, const EntangleOptions& opt);

struct PovmOptions {
    double sigma_x = -1.0;  ///< negative uses sigma_g from the run config
    double sigma_p = -1.0;  ///< negative uses beta / (2 sigma_x)
    double psi_mean = 0.0;
    double psi_width = 1.0;
};

/// Compares unsharp-detector statistics against the smeared-space moments
/// for the same test packet and reports the completeness residuals.
Table cmd_povm_compare(const RunConfig& cfg, const PovmOptions& opt);

struct MassRadiusOptions {
    double mass_min = 0.0;  ///< grams; 0 means 1e-3 Planck masses
    double mass_max = 0.0;  ///< grams; 0 means 1e+3 Planck masses
    int rows = 49;
};

/// Log-spaced mass-radius table with the regime label per row, closed by
/// the minimum of the combined radius curve. Requires mode=physical.
Table cmd_massradius(const RunConfig& cfg, const MassRadiusOptions& opt);

}  // namespace qsmear::cli

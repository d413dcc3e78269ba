#pragma once

#include <string>

#include <qsmear/constants.hpp>

namespace CLI {
class App;
}

namespace qsmear::cli {

enum class Mode { dimensionless, physical };

/// Settings shared by every subcommand: the active unit system, the smearing
/// parameters (dimensionless mode) or the cgs constants block (physical
/// mode), the grid shape, the RNG seed, and the output sink. Values come
/// from an optional flat key=value config file with command-line flags
/// taking precedence.
struct RunConfig {
    Mode mode = Mode::dimensionless;

    // dimensionless block
    SmearParams params;           ///< hbar, beta, sigma_g
    double sigma_g_tilde = -1.0;  ///< optional override; negative means derive from beta

    // physical block (cgs)
    PhysicalConstants constants;

    int grid_n = 256;
    double grid_extent = 24.0;
    unsigned long long seed = 0;

    std::string out_path;  ///< empty writes to stdout
    std::string format = "csv";

    // set during parsing so validate() can enforce the one-block rule
    bool saw_dimensionless = false;
    bool saw_physical = false;

    /// Throws DomainError when the two mode blocks are mixed, when an
    /// explicit sigma_g_tilde contradicts beta = 2 sigma_g sigma_g_tilde,
    /// or when the active block fails its own validation.
    void validate() const;

    /// True when the physical constants block is the active one.
    bool physical() const { return mode == Mode::physical; }
};

/// Registers the shared flags on the app and binds them to the config. The
/// config file accepts the same key names as the long flags.
void attach_options(CLI::App& app, RunConfig& cfg);

}  // namespace qsmear::cli

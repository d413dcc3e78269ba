#include "run_config.hpp"

#include <cmath>
#include <map>

#include <CLI11.hpp>

#include <qsmear/errors.hpp>

namespace qsmear::cli {

void RunConfig::validate() const {
    if (mode == Mode::physical && saw_dimensionless) {
        throw DomainError(
            "hbar/beta/sigma-g keys belong to mode=dimensionless; "
            "mode=physical takes the constants block instead");
    }
    if (mode == Mode::dimensionless && saw_physical) {
        throw DomainError(
            "constants-block keys (hbar-cgs, c-cgs, G-cgs, lambda-cgs, dimension) "
            "require mode=physical");
    }
    if (grid_extent <= 0.0) {
        throw DomainError("grid-extent must be positive");
    }
    if (mode == Mode::dimensionless) {
        params.validate();
        if (sigma_g_tilde >= 0.0) {
            const double product = 2.0 * params.sigma_g * sigma_g_tilde;
            if (std::abs(product - params.beta) > 1e-9 * params.beta) {
                throw DomainError(
                    "sigma-g-tilde contradicts beta: the widths must satisfy "
                    "2 * sigma_g * sigma_g_tilde = beta");
            }
        }
    } else {
        constants.validate();
    }
}

void attach_options(CLI::App& app, RunConfig& cfg) {
    const std::map<std::string, Mode> modes{{"dimensionless", Mode::dimensionless},
                                            {"physical", Mode::physical}};
    app.add_option("--mode", cfg.mode, "unit system, dimensionless or physical")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case))
        ->capture_default_str();

    const auto saw_dimensionless = [&cfg](const std::string&) { cfg.saw_dimensionless = true; };
    app.add_option("--hbar", cfg.params.hbar, "matter Fourier scale (dimensionless mode)")
        ->each(saw_dimensionless)
        ->capture_default_str();
    app.add_option("--beta", cfg.params.beta, "geometry Fourier scale (dimensionless mode)")
        ->each(saw_dimensionless)
        ->capture_default_str();
    app.add_option("--sigma-g", cfg.params.sigma_g, "smearing kernel position width")
        ->each(saw_dimensionless)
        ->capture_default_str();
    app.add_option("--sigma-g-tilde", cfg.sigma_g_tilde,
                   "kernel momentum width; must equal beta / (2 sigma_g)")
        ->each(saw_dimensionless);

    const auto saw_physical = [&cfg](const std::string&) { cfg.saw_physical = true; };
    app.add_option("--hbar-cgs", cfg.constants.hbar, "Planck constant, erg s (physical mode)")
        ->each(saw_physical)
        ->capture_default_str();
    app.add_option("--c-cgs", cfg.constants.c, "speed of light, cm/s (physical mode)")
        ->each(saw_physical)
        ->capture_default_str();
    app.add_option("--G-cgs", cfg.constants.G, "Newton constant, cgs (physical mode)")
        ->each(saw_physical)
        ->capture_default_str();
    app.add_option("--lambda-cgs", cfg.constants.Lambda,
                   "cosmological constant, cm^-2 (physical mode)")
        ->each(saw_physical)
        ->capture_default_str();
    app.add_option("--dimension", cfg.constants.d, "spatial dimensions (physical mode)")
        ->each(saw_physical)
        ->capture_default_str();

    app.add_option("--grid-n", cfg.grid_n, "lattice points per axis, a power of two")
        ->capture_default_str();
    app.add_option("--grid-extent", cfg.grid_extent, "lattice window length")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "RNG seed for sampling commands")->capture_default_str();
    app.add_option("--out", cfg.out_path, "output file; omit to write to stdout");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

}  // namespace qsmear::cli

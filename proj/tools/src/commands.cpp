#include "commands.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <qsmear/dynamics.hpp>
#include <qsmear/errors.hpp>
#include <qsmear/grid.hpp>
#include <qsmear/kernel.hpp>
#include <qsmear/massradius.hpp>
#include <qsmear/measurement.hpp>
#include <qsmear/multiparticle.hpp>
#include <qsmear/povm.hpp>
#include <qsmear/scales.hpp>
#include <qsmear/smearing.hpp>
#include <qsmear/state.hpp>
#include <qsmear/uncertainty.hpp>

namespace qsmear::cli {

namespace {

void require_physical(const RunConfig& cfg, const char* command) {
    if (!cfg.physical()) {
        throw DomainError(std::string(command) + " works on physical constants; run with mode=physical");
    }
}

void require_dimensionless(const RunConfig& cfg, const char* command) {
    if (cfg.physical()) {
        throw DomainError(std::string(command) +
                          " works on lattice simulations; run with mode=dimensionless");
    }
}

Grid simulation_grid(const RunConfig& cfg) { return Grid(cfg.grid_n, 0.0, cfg.grid_extent); }

/// Gaussian smearing kernel on a window sized for the configured sigma_g.
SmearingKernel config_kernel(const RunConfig& cfg, const Grid& u_grid) {
    const Grid v_grid = auto_kernel_grid(u_grid, cfg.params.sigma_g);
    return SmearingKernel::gaussian(cfg.params.sigma_g, cfg.params.beta, v_grid);
}

std::string to_label(bool flag) { return flag ? "true" : "false"; }

void quantity_row(Table& table, const std::string& name, Cell value) {
    table.add_row({name, std::move(value)});
}

}  // namespace

Table cmd_scales(const RunConfig& cfg) {
    require_physical(cfg, "scales");
    const PhysicalScales scales = compute_scales(cfg.constants);
    const UncertaintyBounds bounds = finite_universe_bounds(cfg.constants);

    Table table;
    table.command = "scales";
    table.columns = {"quantity", "value", "unit"};
    const auto row = [&table](const std::string& name, double value, const std::string& unit) {
        table.add_row({name, value, unit});
    };
    row("planck_length", scales.planck_length, "cm");
    row("planck_mass", scales.planck_mass, "g");
    row("desitter_length", scales.desitter_length, "cm");
    row("desitter_mass", scales.desitter_mass, "g");
    row("sigma_g", scales.sigma_g, "cm");
    row("sigma_g_tilde", scales.sigma_g_tilde, "g cm/s");
    row("beta", scales.beta, "erg s");
    row("beta_over_hbar", scales.beta_over_hbar, "1");
    row("dark_energy_density", scales.dark_energy_density, "g/cm^3");
    row("planck_density", scales.planck_density, "g/cm^3");
    row("optimal_length", scales.optimal_length, "cm");
    row("optimal_mass", scales.optimal_mass, "g");
    row("horizon_mass_at_desitter", horizon_mass(scales.desitter_length, cfg.constants), "g");
    if (cfg.constants.d == 3) {
        row("vacuum_density_estimate", vacuum_density_estimate(cfg.constants), "g/cm^3");
    }
    row("delta_x_min", bounds.x_min, "cm");
    row("delta_x_max", bounds.x_max, "cm");
    row("delta_p_min", bounds.p_min, "g cm/s");
    row("delta_p_max", bounds.p_max, "g cm/s");
    return table;
}

Table cmd_uncertainty(const RunConfig& cfg, const UncertaintyOptions& opt) {
    require_dimensionless(cfg, "uncertainty");
    const Grid grid = simulation_grid(cfg);

    std::vector<double> betas = opt.betas;
    if (betas.empty()) betas.push_back(cfg.params.beta);

    std::vector<double> widths = opt.widths;
    if (opt.random_widths > 0) {
        // Log-uniform packet widths in [1/4, 4]; the seed makes reruns
        // byte-identical.
        std::mt19937_64 rng(cfg.seed);
        const double lo = std::log(0.25);
        const double hi = std::log(4.0);
        for (int i = 0; i < opt.random_widths; ++i) {
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            widths.push_back(std::exp(lo + u * (hi - lo)));
        }
    }
    if (widths.empty()) {
        for (int k = 0; k <= 4; ++k) widths.push_back(0.5 * std::pow(2.0, 0.5 * k));
    }

    Table table;
    table.command = "uncertainty";
    table.columns = {"beta", "dx_psi", "DX", "DP", "product", "bound", "slack"};
    for (const SweepRow& row : sweep_products(betas, widths, cfg.params.sigma_g, grid)) {
        table.add_row({row.beta, row.delta_psi_x, row.delta_X, row.delta_P, row.product, row.bound,
                       row.slack});
    }
    return table;
}

Table cmd_measure(const RunConfig& cfg, const MeasureOptions& opt) {
    require_dimensionless(cfg, "measure");
    const Grid grid = simulation_grid(cfg);
    const SmearingKernel kernel = config_kernel(cfg, grid);
    const Field psi = gaussian_wavepacket(grid, opt.psi_mean, opt.psi_width);

    OutcomeHistory history;
    for (int i = 0; i < opt.samples; ++i) {
        const SmearedState conditioned = sequential_measure(psi, kernel, cfg.params, history);
        const double drawn = sample_outcome(conditioned, Axis::position, cfg.seed + i);
        history.push_back({Axis::position, drawn});
    }
    for (double r : opt.outcomes) history.push_back({Axis::position, r});

    const SmearedState final_state = sequential_measure(psi, kernel, cfg.params, history);

    Table table;
    table.command = "measure";
    table.columns = {"quantity", "value"};
    quantity_row(table, "outcome_count", static_cast<long long>(history.size()));
    for (std::size_t i = 0; i < history.size(); ++i) {
        quantity_row(table, "outcome_" + std::to_string(i + 1), history[i].value);
    }
    quantity_row(table, "position_mean", generalized_mean(final_state, Axis::position));
    quantity_row(table, "position_variance", generalized_variance(final_state, Axis::position));
    quantity_row(table, "momentum_mean", generalized_mean(final_state, Axis::momentum));
    quantity_row(table, "momentum_variance", generalized_variance(final_state, Axis::momentum));
    quantity_row(table, "norm", final_state.norm_squared());
    return table;
}

Table cmd_evolve(const RunConfig& cfg, const EvolveOptions& opt) {
    require_dimensionless(cfg, "evolve");
    const Grid grid = simulation_grid(cfg);
    const SmearingKernel kernel = config_kernel(cfg, grid);
    const Field psi = gaussian_wavepacket(grid, opt.psi_mean, opt.psi_width, opt.wavenumber);
    const SmearedState initial = smear(psi, kernel, cfg.params);

    Hamiltonian h;
    if (opt.potential == "free") {
        h = free_hamiltonian(opt.mass, cfg.params, grid);
    } else if (opt.potential == "harmonic") {
        h = harmonic_hamiltonian(opt.mass, opt.omega, opt.center, cfg.params, grid);
    } else {
        throw DomainError("potential must be free or harmonic");
    }

    Table table;
    table.command = "evolve";
    table.columns = {"quantity", "value"};

    const double x0 = observable_expectation(initial, ObservableKind::X);
    const double u0 = unprimed_position_mean(initial);
    const double p0 = observable_expectation(initial, ObservableKind::P);
    quantity_row(table, "initial_position_mean", x0);
    quantity_row(table, "initial_position_variance", generalized_variance(initial, Axis::position));
    quantity_row(table, "initial_momentum_mean", p0);
    quantity_row(table, "initial_energy", energy_expectation(initial, h));

    if (opt.steps == 0) {
        quantity_row(table, "time", 0.0);
        quantity_row(table, "norm", initial.norm_squared());
        return table;
    }
    if (opt.time <= 0.0) throw DomainError("time must be positive when steps > 0");

    EvolutionConfig config;
    config.dt = opt.time / opt.steps;
    config.steps = opt.steps;
    const SmearedState evolved = evolve(initial, h, config);

    const double x1 = observable_expectation(evolved, ObservableKind::X);
    const double u1 = unprimed_position_mean(evolved);
    quantity_row(table, "time", opt.time);
    quantity_row(table, "final_position_mean", x1);
    quantity_row(table, "final_position_variance", generalized_variance(evolved, Axis::position));
    quantity_row(table, "final_momentum_mean", observable_expectation(evolved, ObservableKind::P));
    quantity_row(table, "final_energy", energy_expectation(evolved, h));
    quantity_row(table, "norm_drift", std::abs(evolved.norm_squared() - 1.0));
    quantity_row(table, "packet_velocity", (x1 - x0) / opt.time);
    quantity_row(table, "matter_velocity", (u1 - u0) / opt.time);
    if (opt.potential == "free") {
        // The packet center moves at <P>/m; the matter coordinate lags it
        // by hbar / (hbar + beta), the modified-dispersion group velocity.
        quantity_row(table, "packet_velocity_predicted", p0 / opt.mass);
        quantity_row(table, "matter_velocity_predicted",
                     cfg.params.hbar * p0 / (opt.mass * cfg.params.effective_hbar()));
    }
    return table;
}

Table cmd_entangle(const RunConfig& cfg, const EntangleOptions& opt) {
    require_dimensionless(cfg, "entangle");
    const PairAxis u_grid(opt.pair_n, 0.0, opt.pair_extent);
    const PairAxis v_grid(opt.offset_n, 0.0, opt.offset_extent);

    KernelTwoBody kernel;
    if (opt.kernel == "product-gaussian") {
        kernel = KernelTwoBody::product_gaussian(cfg.params.sigma_g, v_grid);
    } else if (opt.kernel == "radial-exponential") {
        kernel = KernelTwoBody::radial_exponential(cfg.params.sigma_g, v_grid);
    } else if (opt.kernel == "point") {
        kernel = KernelTwoBody::point(v_grid);
    } else {
        throw DomainError("kernel must be product-gaussian, radial-exponential, or point");
    }

    const auto packet = [&](double x, double mean) {
        const double arg = (x - mean) / (2.0 * opt.psi_width);
        return std::exp(-arg * arg);
    };
    Field2 psi12(u_grid, u_grid);
    for (int i = 0; i < u_grid.n; ++i) {
        const double a = packet(u_grid.coord(i), -0.5 * opt.separation);
        for (int j = 0; j < u_grid.n; ++j) {
            psi12.at(i, j) = a * packet(u_grid.coord(j), 0.5 * opt.separation);
        }
    }
    psi12.normalize();

    const TwoParticleState state = smear_two(psi12, kernel, cfg.params.hbar, cfg.params.beta);
    const std::vector<double> weights = schmidt_spectrum(state);

    Table table;
    table.command = "entangle";
    table.columns = {"quantity", "value"};
    quantity_row(table, "input_entropy", entanglement_entropy(psi12));
    quantity_row(table, "entropy", entanglement_entropy(state));
    quantity_row(table, "factorization_residual", factorization_residual(state));
    for (std::size_t k = 0; k < 4 && k < weights.size(); ++k) {
        quantity_row(table, "schmidt_weight_" + std::to_string(k + 1), weights[k]);
    }
    quantity_row(table, "norm", state.norm_squared());
    return table;
}

Table cmd_povm_compare(const RunConfig& cfg, const PovmOptions& opt) {
    require_dimensionless(cfg, "povm-compare");
    const Grid grid = simulation_grid(cfg);
    const double hbar = cfg.params.hbar;
    const double beta = cfg.params.beta;
    const double sigma_x = opt.sigma_x > 0.0 ? opt.sigma_x : cfg.params.sigma_g;
    const double sigma_p = opt.sigma_p > 0.0 ? opt.sigma_p : beta / (2.0 * sigma_x);

    // Offsets lattice for a detector of the given width: halve the base
    // spacing until the profile is resolved, then widen to twelve widths.
    // Power-of-two refinement keeps the spacings lattice-compatible for the
    // completeness sums.
    const auto detector_offsets = [](const Grid& base, double sigma) {
        double sub = base.spacing();
        while (sub > sigma / 3.0) sub *= 0.5;
        int n = 8;
        while (n * sub < 12.0 * sigma) n *= 2;
        return Grid(n, 0.0, n * sub);
    };

    const Grid conjugate = ConjugateGrid(grid, hbar).lattice();
    const ResolutionKernel kernel_x =
        ResolutionKernel::gaussian(sigma_x, detector_offsets(grid, sigma_x));
    const ResolutionKernel kernel_p =
        ResolutionKernel::gaussian(sigma_p, detector_offsets(conjugate, sigma_p));

    const Field psi = gaussian_wavepacket(grid, opt.psi_mean, opt.psi_width);
    const PovmStatistics stats_x = povm_statistics(psi, kernel_x, Axis::position, hbar);
    const PovmStatistics stats_p = povm_statistics(psi, kernel_p, Axis::momentum, hbar);

    // The same packet through the smearing route, with the kernel width
    // matched to the position detector.
    const Grid v_grid = auto_kernel_grid(grid, sigma_x);
    const SmearingKernel smearing = SmearingKernel::gaussian(sigma_x, beta, v_grid);
    SmearParams params = cfg.params;
    params.sigma_g = sigma_x;
    const SmearedState state = smear(psi, smearing, params);

    const IndependenceReport report = povm_independence_demo(kernel_x, kernel_p, beta);

    Table table;
    table.command = "povm-compare";
    table.columns = {"quantity", "value"};
    quantity_row(table, "sigma_x", report.sigma_x);
    quantity_row(table, "sigma_p", report.sigma_p);
    quantity_row(table, "width_product", report.width_product);
    quantity_row(table, "beta_half", 0.5 * beta);
    quantity_row(table, "povm_position_mean", stats_x.mean);
    quantity_row(table, "povm_position_variance", stats_x.variance);
    quantity_row(table, "smeared_position_variance", generalized_variance(state, Axis::position));
    quantity_row(table, "povm_momentum_mean", stats_p.mean);
    quantity_row(table, "povm_momentum_variance", stats_p.variance);
    quantity_row(table, "smeared_momentum_variance", generalized_variance(state, Axis::momentum));
    quantity_row(table, "completeness_residual_x", report.completeness_x);
    quantity_row(table, "completeness_residual_p", report.completeness_p);
    quantity_row(table, "povm_accepts", to_label(report.povm_accepts));
    quantity_row(table, "smearing_accepts", to_label(report.smearing_accepts));
    return table;
}

Table cmd_massradius(const RunConfig& cfg, const MassRadiusOptions& opt) {
    require_physical(cfg, "massradius");
    if (opt.rows < 2) throw DomainError("rows must be at least 2");

    const double planck_mass = planck_scales(cfg.constants).mass;
    const double lo = opt.mass_min > 0.0 ? opt.mass_min : 1e-3 * planck_mass;
    const double hi = opt.mass_max > 0.0 ? opt.mass_max : 1e+3 * planck_mass;
    if (hi <= lo) throw DomainError("mass-max must exceed mass-min");

    std::vector<double> masses(opt.rows);
    const double log_lo = std::log(lo);
    const double step = (std::log(hi) - log_lo) / (opt.rows - 1);
    for (int i = 0; i < opt.rows; ++i) masses[i] = std::exp(log_lo + i * step);

    Table table;
    table.command = "massradius";
    table.columns = {"mass_g", "compton_cm", "schwarzschild_cm", "unified_cm", "regime"};
    for (const MassRadiusRow& row : mass_radius_table(masses, cfg.constants)) {
        table.add_row({row.mass, row.compton, row.schwarzschild, row.unified,
                       std::string(to_string(row.regime))});
    }

    // Close with the curve minimum so the table pins the turning point.
    const RadiusMinimum minimum = minimize_unified_radius(cfg.constants);
    table.add_row({minimum.mass, compton(minimum.mass, cfg.constants),
                   schwarzschild(minimum.mass, cfg.constants), minimum.radius,
                   std::string(to_string(classify_mass(minimum.mass, cfg.constants)))});
    return table;
}

}  // namespace qsmear::cli

#include <qsmear/measurement.hpp>

#include <qsmear/errors.hpp>
#include <qsmear/smearing.hpp>

#include "state.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace qsmear {

namespace {

void require_normalized(const SmearedState& state) {
    const double nsq = state.norm_squared();
    if (std::abs(nsq - 1.0) > 1e-6) {
        std::ostringstream msg;
        msg << "state has squared norm " << nsq << ", expected 1 within 1e-6";
        throw DomainError(msg.str());
    }
}

double binomial(int n, int k) {
    double result = 1.0;
    for (int i = 1; i <= k; ++i) {
        result *= static_cast<double>(n - k + i) / i;
    }
    return result;
}

/// Mean and variance of the primed momentum, exact lattice sums in the double
/// momentum representation.
DensityStats primed_momentum_stats(const SmearedState& state) {
    const MomentumRep rep = momentum_representation(state);
    const double meas = rep.measure();
    double mass = 0.0;
    double mean = 0.0;
    for (int j = 0; j < rep.p_lattice.n; ++j) {
        const double p = rep.p_lattice.coord(j);
        for (int k = 0; k < rep.w_lattice.n; ++k) {
            const double weight = std::norm(rep.values[static_cast<std::size_t>(j) * rep.w_lattice.n + k]) * meas;
            mass += weight;
            mean += (p + rep.w_lattice.coord(k)) * weight;
        }
    }
    mean /= mass;
    double var = 0.0;
    for (int j = 0; j < rep.p_lattice.n; ++j) {
        const double p = rep.p_lattice.coord(j);
        for (int k = 0; k < rep.w_lattice.n; ++k) {
            const double weight = std::norm(rep.values[static_cast<std::size_t>(j) * rep.w_lattice.n + k]) * meas;
            const double dev = p + rep.w_lattice.coord(k) - mean;
            var += dev * dev * weight;
        }
    }
    var /= mass;
    return DensityStats{mean, var, std::abs(mass - 1.0) <= 1e-6};
}

Grid momentum_output_grid(const SmearedState& state, double mean, double stddev) {
    const double dp = 2.0 * M_PI * state.params().hbar / state.u_grid().extent;
    const double dw = 2.0 * M_PI * state.params().beta / state.v_grid().extent;
    const double extent = std::max({20.0 * stddev, 8.0 * dp, 8.0 * dw});
    return Grid(state.nu(), mean, extent);
}

/// |psi~|^2 on an arbitrary lattice by the semidiscrete transform
/// (2 pi hbar)^{-1/2} sum_j psi_j exp(-i p u_j / hbar) du. The semidiscrete
/// spectrum is periodic with period 2 pi scale / dx; only the central period
/// carries the state's actual content, so points outside it are zeroed
/// rather than filled with aliased copies.
std::vector<double> semidiscrete_density(const Field& psi, double scale, const Grid& out) {
    const Grid& g = psi.grid;
    const double pref = g.spacing() / std::sqrt(2.0 * M_PI * scale);
    const double half_period = M_PI * scale / g.spacing();
    std::vector<double> result(out.n, 0.0);
    for (int l = 0; l < out.n; ++l) {
        const double q = out.coord(l);
        if (q < -half_period || q >= half_period) continue;
        cdouble sum = 0.0;
        for (int j = 0; j < g.n; ++j) {
            sum += psi.values[j] * std::polar(1.0, -q * g.coord(j) / scale);
        }
        result[l] = std::norm(sum * pref);
    }
    return result;
}

Density momentum_density_product(const SmearedState& state) {
    const SmearingKernel& kernel = state.kernel();
    const Field psi_t = transform(state.unprimed_factor(), state.params().hbar);
    const DensityStats psi_stats = [&] {
        std::vector<double> dens(psi_t.grid.n);
        for (int j = 0; j < psi_t.grid.n; ++j) {
            dens[j] = std::norm(psi_t.values[j]);
        }
        return density_stats(psi_t.grid, dens);
    }();
    const double g_mean = kernel.momentum_moment(1);
    const double g_var = kernel.momentum_moment(2) - g_mean * g_mean;
    const double mean = psi_stats.mean + g_mean;
    const Grid out = momentum_output_grid(state, mean, std::sqrt(psi_stats.variance + g_var));
    const double h = out.spacing();

    const std::vector<double> s_psi =
        semidiscrete_density(state.unprimed_factor(), state.params().hbar, out);
    // The kernel spectrum is likewise periodic, with period 2 pi beta / dv;
    // sample one period and leave the rest at zero.
    const double half_period_w = M_PI * state.params().beta / kernel.v_grid().spacing();
    std::vector<double> s_g(out.n, 0.0);
    for (int m = 0; m < out.n; ++m) {
        const double w = (m - out.n / 2) * h;
        if (w < -half_period_w || w >= half_period_w) continue;
        s_g[m] = std::norm(kernel.momentum_amplitude_at(w));
    }

    Density dens{out, std::vector<double>(out.n, 0.0)};
    for (int l = 0; l < out.n; ++l) {
        double sum = 0.0;
        for (int m = 0; m < out.n; ++m) {
            const int idx = l - m + out.n / 2;
            if (idx >= 0 && idx < out.n) {
                sum += s_g[m] * s_psi[idx];
            }
        }
        dens.values[l] = sum * h;
    }
    return dens;
}

Density momentum_density_general(const SmearedState& state) {
    const DensityStats stats = primed_momentum_stats(state);
    const Grid out = momentum_output_grid(state, stats.mean, std::sqrt(stats.variance));

    // Half transform: u axis to the p lattice, v axis kept in position.
    std::vector<cdouble> theta = state.values();
    detail::scaled_transform_axis(theta, state.nu(), state.nv(), 0, state.u_grid(),
                                  state.params().hbar, true);
    const Grid p_lattice = ConjugateGrid{state.u_grid(), state.params().hbar}.lattice();
    const Grid& vg = state.v_grid();
    const double beta = state.params().beta;
    const double pref = vg.spacing() / std::sqrt(2.0 * M_PI * beta);
    const double dp = p_lattice.spacing();
    // As in the separable path, the semidiscrete w spectrum repeats with
    // period 2 pi beta / dv; offsets outside the central period would be
    // aliased copies, so they are skipped.
    const double half_period_w = M_PI * beta / vg.spacing();

    Density dens{out, std::vector<double>(out.n, 0.0)};
    for (int j = 0; j < p_lattice.n; ++j) {
        const double p = p_lattice.coord(j);
        const cdouble* row = theta.data() + static_cast<std::size_t>(j) * vg.n;
        for (int l = 0; l < out.n; ++l) {
            const double w = out.coord(l) - p;
            if (w < -half_period_w || w >= half_period_w) continue;
            cdouble sum = 0.0;
            for (int k = 0; k < vg.n; ++k) {
                sum += row[k] * std::polar(1.0, -w * vg.coord(k) / beta);
            }
            dens.values[l] += std::norm(sum * pref) * dp;
        }
    }
    return dens;
}

int snapped_index(const Density& dens, double outcome, const char* what) {
    const Grid& g = dens.grid;
    const double lo = g.coord(0) - 0.5 * g.spacing();
    const double hi = g.coord(g.n - 1) + 0.5 * g.spacing();
    if (outcome < lo || outcome > hi) {
        std::ostringstream msg;
        msg << what << " outcome " << outcome << " lies outside the density window [" << lo
            << ", " << hi << "]";
        throw DomainError(msg.str());
    }
    const int idx = g.nearest_index(outcome);
    if (dens.values[idx] < 1e-12 * dens.max_value()) {
        std::ostringstream msg;
        msg << what << " outcome " << g.coord(idx) << " has vanishing probability";
        throw DomainError(msg.str());
    }
    return idx;
}

}  // namespace

double Density::integral() const {
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    return sum * grid.spacing();
}

double Density::max_value() const {
    return *std::max_element(values.begin(), values.end());
}

DensityStats Density::stats() const { return density_stats(grid, values); }

Density position_density(const SmearedState& state) {
    require_normalized(state);
    const Grid& ug = state.u_grid();
    const int nu = state.nu();
    const int nv = state.nv();
    const double dv = state.v_grid().spacing();
    Density dens{ug, std::vector<double>(nu, 0.0)};
    // x' = u_j + v_k lands on u lattice index (j + k - nv/2) mod nu because
    // both lattices share one spacing and the v window is centered on zero.
    for (int j = 0; j < nu; ++j) {
        for (int k = 0; k < nv; ++k) {
            const int l = ((j + k - nv / 2) % nu + nu) % nu;
            dens.values[l] += std::norm(state.at(j, k)) * dv;
        }
    }
    return dens;
}

Density momentum_density(const SmearedState& state) {
    require_normalized(state);
    if (state.separable()) {
        return momentum_density_product(state);
    }
    return momentum_density_general(state);
}

double generalized_mean(const SmearedState& state, Axis axis) {
    const Density dens =
        (axis == Axis::position) ? position_density(state) : momentum_density(state);
    return dens.stats().mean;
}

double generalized_variance(const SmearedState& state, Axis axis) {
    const Density dens =
        (axis == Axis::position) ? position_density(state) : momentum_density(state);
    return dens.stats().variance;
}

SmearedState collapse_position(const SmearedState& state, double r) {
    require_normalized(state);
    const SmearingKernel& kernel = state.kernel();
    const Density dens = position_density(state);
    const int idx = snapped_index(dens, r, "position");
    const double snapped = dens.grid.coord(idx);

    Field collapsed = state.unprimed_factor();
    const Grid& ug = collapsed.grid;
    for (int j = 0; j < ug.n; ++j) {
        collapsed.values[j] *= kernel.amplitude_at(snapped - ug.coord(j));
    }
    collapsed.normalize();
    return smear(collapsed, kernel, state.params());
}

SmearedState collapse_momentum(const SmearedState& state, double s) {
    require_normalized(state);
    const SmearingKernel& kernel = state.kernel();
    const Density dens = momentum_density(state);
    const int idx = snapped_index(dens, s, "momentum");
    const double snapped = dens.grid.coord(idx);

    Field psi_t = transform(state.unprimed_factor(), state.params().hbar);
    const Grid& pg = psi_t.grid;
    for (int j = 0; j < pg.n; ++j) {
        psi_t.values[j] *= kernel.momentum_amplitude_at(snapped - pg.coord(j));
    }
    Field collapsed =
        inverse_transform(psi_t, state.params().hbar, state.unprimed_factor().grid);
    collapsed.normalize();
    return smear(collapsed, kernel, state.params());
}

double sample_outcome(const SmearedState& state, Axis axis, std::uint64_t seed) {
    const Density dens =
        (axis == Axis::position) ? position_density(state) : momentum_density(state);
    double total = 0.0;
    for (double v : dens.values) {
        total += v;
    }
    std::mt19937_64 rng(seed);
    const double u = (rng() >> 11) * 0x1.0p-53 * total;
    double cumulative = 0.0;
    for (int k = 0; k < dens.grid.n; ++k) {
        cumulative += dens.values[k];
        if (cumulative >= u) {
            return dens.grid.coord(k);
        }
    }
    return dens.grid.coord(dens.grid.n - 1);
}

double smeared_operator_moment(const Field& psi, const SmearingKernel& kernel,
                               const SmearParams& params, Axis axis, int order) {
    if (order < 0) {
        throw DomainError("moment order must be nonnegative");
    }
    const double nsq = psi.norm_squared();
    if (std::abs(nsq - 1.0) > 1e-6) {
        throw DomainError("operator moments need a normalized wavefunction");
    }
    Field transformed;
    if (axis == Axis::momentum) {
        transformed = transform(psi, params.hbar);
    }
    double total = 0.0;
    for (int i = 0; i <= order; ++i) {
        const double psi_moment = (axis == Axis::position)
                                      ? field_moment(psi, i).value
                                      : field_moment(transformed, i).value;
        const double kernel_moment = (axis == Axis::position)
                                         ? kernel.moment(order - i)
                                         : kernel.momentum_moment(order - i);
        total += binomial(order, i) * psi_moment * kernel_moment;
    }
    return total;
}

double smeared_state_moment(const SmearedState& state, Axis axis, int order) {
    if (order < 0) {
        throw DomainError("moment order must be nonnegative");
    }
    require_normalized(state);
    double total = 0.0;
    if (axis == Axis::position) {
        const double meas = state.measure();
        for (int j = 0; j < state.nu(); ++j) {
            const double u = state.u_grid().coord(j);
            for (int k = 0; k < state.nv(); ++k) {
                total += std::pow(u + state.v_grid().coord(k), order) *
                         std::norm(state.at(j, k)) * meas;
            }
        }
    } else {
        const MomentumRep rep = momentum_representation(state);
        const double meas = rep.measure();
        for (int j = 0; j < rep.p_lattice.n; ++j) {
            const double p = rep.p_lattice.coord(j);
            for (int k = 0; k < rep.w_lattice.n; ++k) {
                total += std::pow(p + rep.w_lattice.coord(k), order) *
                         std::norm(rep.values[static_cast<std::size_t>(j) * rep.w_lattice.n + k]) *
                         meas;
            }
        }
    }
    return total;
}

SmearedState sequential_measure(const Field& psi, const SmearingKernel& kernel,
                                const SmearParams& params, const OutcomeHistory& outcomes) {
    for (const Outcome& outcome : outcomes) {
        if (outcome.axis != Axis::position) {
            throw DomainError(
                "the measurement chain is defined for position outcomes only; collapse "
                "momentum outcomes one at a time instead");
        }
    }
    SmearedState initial = smear(psi, kernel, params);
    if (outcomes.empty()) {
        return initial;
    }
    Field chain = psi;
    const Grid& ug = chain.grid;
    for (const Outcome& outcome : outcomes) {
        const double snapped = ug.coord(ug.nearest_index(outcome.value));
        for (int j = 0; j < ug.n; ++j) {
            chain.values[j] *= kernel.amplitude_at(snapped - ug.coord(j));
        }
    }
    if (!(chain.norm_squared() > 0.0)) {
        throw DomainError("measurement chain annihilates the state (outcomes too improbable)");
    }
    chain.normalize();
    return smear(chain, kernel, params);
}

}  // namespace qsmear

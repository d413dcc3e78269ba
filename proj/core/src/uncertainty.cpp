#include <qsmear/uncertainty.hpp>

#include <qsmear/dynamics.hpp>
#include <qsmear/errors.hpp>
#include <qsmear/measurement.hpp>
#include <qsmear/smearing.hpp>

#include <cmath>

namespace qsmear {

namespace {

cdouble inner_product(const SmearedState& a, const SmearedState& b) {
    cdouble sum = 0.0;
    const std::vector<cdouble>& av = a.values();
    const std::vector<cdouble>& bv = b.values();
    for (std::size_t i = 0; i < av.size(); ++i) {
        sum += std::conj(av[i]) * bv[i];
    }
    return sum * a.measure();
}

void check_scales(const SmearParams& scales) {
    scales.validate();
    if (!(scales.sigma_g > 0.0)) {
        throw DomainError("kernel width must be positive");
    }
}

}  // namespace

UncertaintyReport unified_relation(const SmearedState& state) {
    UncertaintyReport report;
    report.delta_X = std::sqrt(generalized_variance(state, Axis::position));
    report.delta_P = std::sqrt(generalized_variance(state, Axis::momentum));
    report.product = report.delta_X * report.delta_P;
    report.bound = 0.5 * state.params().effective_hbar();
    report.slack = report.product - report.bound;
    return report;
}

CommutatorResult commutator_expectation(const SmearedState& state) {
    const SmearedState px = apply_P(apply_X(state));
    const SmearedState xp = apply_X(apply_P(state));
    CommutatorResult result;
    result.value = inner_product(state, xp) - inner_product(state, px);
    result.spectral_tail = spectral_tail_fraction(state);
    result.accurate = result.spectral_tail < 1e-6;
    return result;
}

OptimalWidths optimal_widths(double hbar, double sigma_g, double sigma_g_tilde) {
    if (!(hbar > 0.0) || !(sigma_g > 0.0) || !(sigma_g_tilde > 0.0)) {
        throw DomainError("optimal widths need positive hbar and kernel widths");
    }
    OptimalWidths w;
    w.dx_opt = std::sqrt(hbar * sigma_g / (2.0 * sigma_g_tilde));
    w.dp_opt = 0.5 * hbar / w.dx_opt;  // so the product is hbar/2 exactly
    return w;
}

ExpandedBound gup_bound(double dp, const SmearParams& scales) {
    check_scales(scales);
    if (!(dp > 0.0)) {
        throw DomainError("momentum spread must be positive");
    }
    const double sigma = scales.sigma_g;
    const double ratio = 2.0 * sigma * dp / scales.hbar;
    ExpandedBound bound;
    bound.first_order = 0.5 * scales.hbar / dp + sigma * sigma / scales.hbar * dp;
    bound.exact = 0.5 * scales.hbar / dp * std::sqrt(1.0 + ratio * ratio);
    bound.within_validity = dp >= scales.sigma_g_tilde() && ratio * ratio <= 0.01;
    return bound;
}

ExpandedBound eup_bound(double dx, const SmearParams& scales) {
    check_scales(scales);
    if (!(dx > 0.0)) {
        throw DomainError("position spread must be positive");
    }
    const double sigma_t = scales.sigma_g_tilde();
    const double ratio = 2.0 * sigma_t * dx / scales.hbar;
    ExpandedBound bound;
    bound.first_order = 0.5 * scales.hbar / dx + sigma_t * sigma_t / scales.hbar * dx;
    bound.exact = 0.5 * scales.hbar / dx * std::sqrt(1.0 + ratio * ratio);
    bound.within_validity = dx >= scales.sigma_g && ratio * ratio <= 0.01;
    return bound;
}

double egup_product_bound(double dx, double dp, const SmearParams& scales) {
    check_scales(scales);
    if (!(dx > 0.0) || !(dp > 0.0)) {
        throw DomainError("spreads must be positive");
    }
    const double sigma = scales.sigma_g;
    const double sigma_t = scales.sigma_g_tilde();
    return dx * dp + 0.5 * sigma * sigma * dp / dx + 0.5 * sigma_t * sigma_t * dx / dp;
}

WidthPair symmetry_transform(double dx, double dp, const SmearParams& scales) {
    check_scales(scales);
    if (!(dx > 0.0) || !(dp > 0.0)) {
        throw DomainError("spreads must be positive");
    }
    const double sigma = scales.sigma_g;
    const double sigma_t = scales.sigma_g_tilde();
    return WidthPair{sigma / sigma_t * dp, sigma_t / sigma * dx};
}

std::vector<SweepRow> sweep_products(const std::vector<double>& beta_list,
                                     const std::vector<double>& width_list, double sigma_g,
                                     const Grid& grid) {
    if (beta_list.empty() || width_list.empty()) {
        throw DomainError("sweep needs at least one beta and one width");
    }
    std::vector<SweepRow> rows;
    rows.reserve(beta_list.size() * width_list.size());
    for (double beta : beta_list) {
        const SmearParams params{1.0, beta, sigma_g};
        const Grid v_grid = auto_kernel_grid(grid, sigma_g);
        const SmearingKernel kernel = SmearingKernel::gaussian(sigma_g, beta, v_grid);
        for (double width : width_list) {
            const Field psi = gaussian_wavepacket(grid, grid.center, width);
            const SmearedState state = smear(psi, kernel, params);
            const UncertaintyReport report = unified_relation(state);
            rows.push_back(SweepRow{beta, width, report.delta_X, report.delta_P, report.product,
                                    report.bound, report.slack});
        }
    }
    return rows;
}

}  // namespace qsmear

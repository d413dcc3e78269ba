#include <qsmear/povm.hpp>

#include <qsmear/errors.hpp>

#include <cmath>
#include <sstream>

namespace qsmear {

namespace {

/// Normalizes the sampled density to unit area. `sigma` records the nominal
/// width when the caller has one (factory parameter); a negative value falls
/// back to the discrete standard deviation.
ResolutionKernel finalize(const Grid& offsets, std::vector<double> density, double sigma = -1.0) {
    double area = 0.0;
    for (double v : density) {
        if (v < 0.0 || !std::isfinite(v)) {
            throw DomainError("resolution density must be finite and nonnegative");
        }
        area += v;
    }
    area *= offsets.spacing();
    if (!(area > 0.0)) {
        throw DomainError("resolution density vanishes identically");
    }
    for (double& v : density) {
        v /= area;
    }
    ResolutionKernel kernel{offsets, std::move(density), 0.0, false};
    const DensityStats stats = density_stats(offsets, kernel.density);
    kernel.sigma = sigma >= 0.0 ? sigma : std::sqrt(stats.variance);
    kernel.centered = std::abs(stats.mean) <= 1e-9 * offsets.spacing();
    return kernel;
}

}  // namespace

ResolutionKernel ResolutionKernel::gaussian(double sigma, const Grid& offsets) {
    if (!(sigma > 0.0)) {
        throw DomainError("resolution width must be positive");
    }
    std::vector<double> density(offsets.n);
    for (int k = 0; k < offsets.n; ++k) {
        const double v = offsets.coord(k);
        density[k] = std::exp(-v * v / (2.0 * sigma * sigma));
    }
    return finalize(offsets, std::move(density), sigma);
}

ResolutionKernel ResolutionKernel::exponential(double sigma, const Grid& offsets) {
    if (!(sigma > 0.0)) {
        throw DomainError("resolution width must be positive");
    }
    const double lam = sigma / std::sqrt(2.0);
    std::vector<double> density(offsets.n);
    for (int k = 0; k < offsets.n; ++k) {
        density[k] = std::exp(-std::abs(offsets.coord(k)) / lam);
    }
    return finalize(offsets, std::move(density), sigma);
}

ResolutionKernel ResolutionKernel::point(const Grid& offsets) {
    std::vector<double> density(offsets.n, 0.0);
    density[offsets.n / 2] = 1.0;
    return finalize(offsets, std::move(density), 0.0);
}

ResolutionKernel ResolutionKernel::custom(const Grid& offsets, std::vector<double> density) {
    if (static_cast<int>(density.size()) != offsets.n) {
        throw DomainError("density sample count does not match the offset lattice");
    }
    return finalize(offsets, std::move(density));
}

ResolutionKernel ResolutionKernel::from_smearing(const SmearingKernel& kernel, Axis axis) {
    if (axis == Axis::position) {
        const Field& amp = kernel.amplitude();
        std::vector<double> density(amp.grid.n);
        for (int k = 0; k < amp.grid.n; ++k) {
            density[k] = std::norm(amp.values[k]);
        }
        return finalize(amp.grid, std::move(density));
    }
    const Field& amp = kernel.momentum_amplitude();
    std::vector<double> density(amp.grid.n);
    for (int k = 0; k < amp.grid.n; ++k) {
        density[k] = std::norm(amp.values[k]);
    }
    return finalize(amp.grid, std::move(density));
}

double ResolutionKernel::mean() const { return density_stats(offsets, density).mean; }

double ResolutionKernel::variance() const { return density_stats(offsets, density).variance; }

double povm_completeness_residual(const ResolutionKernel& kernel, const Grid& grid) {
    const double area = [&] {
        double sum = 0.0;
        for (double v : kernel.density) {
            sum += v;
        }
        return sum * kernel.offsets.spacing();
    }();
    if (std::abs(area - 1.0) > 1e-9) {
        throw DomainError("resolution density must integrate to 1");
    }
    if (!grid.compatible_spacing(kernel.offsets)) {
        throw DomainError("kernel and measurement lattices must share one spacing");
    }
    if (kernel.offsets.n > grid.n) {
        throw DomainError("kernel window exceeds the measurement lattice");
    }
    // The effect at recorded value x_l weights the true position x_j by the
    // offset density; summing the recorded lattice against a fixed x_j visits
    // every offset exactly once (periodic wrap), so the diagonal operator
    // sum_l E_l * dx has entries equal to the kernel area.
    const double dx = grid.spacing();
    double worst = 0.0;
    for (int j = 0; j < grid.n; ++j) {
        double total = 0.0;
        for (int m = 0; m < kernel.offsets.n; ++m) {
            total += kernel.density[m] * dx;
        }
        worst = std::max(worst, std::abs(total - 1.0));
    }
    return worst;
}

PovmStatistics povm_statistics(const Field& psi, const ResolutionKernel& kernel, Axis axis,
                               double hbar) {
    const double nsq = psi.norm_squared();
    if (std::abs(nsq - 1.0) > 1e-6) {
        throw DomainError("statistics need a normalized wavefunction");
    }
    DensityStats base;
    if (axis == Axis::position) {
        std::vector<double> density(psi.grid.n);
        for (int j = 0; j < psi.grid.n; ++j) {
            density[j] = std::norm(psi.values[j]);
        }
        base = density_stats(psi.grid, density);
    } else {
        if (!(hbar > 0.0)) {
            throw DomainError("hbar must be positive");
        }
        const Field psi_t = transform(psi, hbar);
        std::vector<double> density(psi_t.grid.n);
        for (int j = 0; j < psi_t.grid.n; ++j) {
            density[j] = std::norm(psi_t.values[j]);
        }
        base = density_stats(psi_t.grid, density);
    }
    const DensityStats blur = density_stats(kernel.offsets, kernel.density);
    // The outcome density is the convolution of the offset density with the
    // canonical density, so its cumulants through second order add.
    PovmStatistics stats;
    stats.kernel_mean_shift = kernel.centered ? 0.0 : blur.mean;
    stats.mean = base.mean + blur.mean;
    stats.variance = base.variance + blur.variance;
    return stats;
}

IndependenceReport povm_independence_demo(const ResolutionKernel& kernel_x,
                                          const ResolutionKernel& kernel_p, double beta) {
    if (!(beta > 0.0)) {
        throw DomainError("beta must be positive");
    }
    IndependenceReport report;
    report.sigma_x = kernel_x.sigma;
    report.sigma_p = kernel_p.sigma;
    report.width_product = kernel_x.sigma * kernel_p.sigma;
    report.beta = beta;
    report.required_product = 0.5 * beta;
    report.completeness_x = povm_completeness_residual(kernel_x, kernel_x.offsets);
    report.completeness_p = povm_completeness_residual(kernel_p, kernel_p.offsets);
    report.povm_accepts = report.completeness_x < 1e-6 && report.completeness_p < 1e-6;
    report.smearing_accepts =
        std::abs(report.width_product - report.required_product) <= 1e-9 * report.required_product;
    return report;
}

}  // namespace qsmear

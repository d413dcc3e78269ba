#include <qsmear/kernel.hpp>

#include <qsmear/errors.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace qsmear {

namespace {

void check_resolution(double sigma, const Grid& v_grid) {
    const double dv = v_grid.spacing();
    if (sigma < 3.0 * dv) {
        std::ostringstream msg;
        msg << "kernel width " << sigma << " is below 3 lattice spacings (" << 3.0 * dv
            << "); refine the v lattice";
        throw ResolutionError(msg.str());
    }
    if (v_grid.extent < 12.0 * sigma) {
        std::ostringstream msg;
        msg << "v window " << v_grid.extent << " does not cover 12 kernel widths ("
            << 12.0 * sigma << "); enlarge the window";
        throw ResolutionError(msg.str());
    }
}

Field normalized_amplitude(const Grid& v_grid, const std::vector<double>& samples) {
    Field amp(v_grid);
    for (int k = 0; k < v_grid.n; ++k) {
        amp.values[k] = samples[k];
    }
    const double nsq = amp.norm_squared();
    if (!(nsq > 0.0)) {
        throw DomainError("kernel amplitude vanishes identically");
    }
    amp.normalize();
    return amp;
}

}  // namespace

SmearingKernel::SmearingKernel(KernelKind kind, double sigma, double beta, Field amp)
    : kind_(kind),
      sigma_(sigma),
      beta_(beta),
      amp_(std::move(amp)),
      amp_w_(transform(amp_, beta_)) {}

SmearingKernel SmearingKernel::gaussian(double sigma, double beta, const Grid& v_grid) {
    if (!(sigma > 0.0) || !(beta > 0.0)) {
        throw DomainError("gaussian kernel needs sigma > 0 and beta > 0");
    }
    check_resolution(sigma, v_grid);
    std::vector<double> samples(v_grid.n);
    for (int k = 0; k < v_grid.n; ++k) {
        const double v = v_grid.coord(k);
        samples[k] = std::exp(-v * v / (4.0 * sigma * sigma));
    }
    return SmearingKernel(KernelKind::gaussian, sigma, beta,
                          normalized_amplitude(v_grid, samples));
}

SmearingKernel SmearingKernel::exponential(double sigma, double beta, const Grid& v_grid) {
    if (!(sigma > 0.0) || !(beta > 0.0)) {
        throw DomainError("exponential kernel needs sigma > 0 and beta > 0");
    }
    check_resolution(sigma, v_grid);
    const double lam = sigma / std::sqrt(2.0);
    std::vector<double> samples(v_grid.n);
    for (int k = 0; k < v_grid.n; ++k) {
        samples[k] = std::exp(-std::abs(v_grid.coord(k)) / (2.0 * lam));
    }
    return SmearingKernel(KernelKind::exponential, sigma, beta,
                          normalized_amplitude(v_grid, samples));
}

SmearingKernel SmearingKernel::custom(const Grid& v_grid, const std::vector<double>& amplitude,
                                      double beta) {
    if (!(beta > 0.0)) {
        throw DomainError("custom kernel needs beta > 0");
    }
    if (static_cast<int>(amplitude.size()) != v_grid.n) {
        throw DomainError("custom kernel sample count does not match the v lattice");
    }
    for (double a : amplitude) {
        if (a < 0.0 || !std::isfinite(a)) {
            throw DomainError("custom kernel amplitude must be finite and nonnegative");
        }
    }
    Field amp = normalized_amplitude(v_grid, amplitude);
    const DensityStats stats = [&] {
        std::vector<double> density(v_grid.n);
        for (int k = 0; k < v_grid.n; ++k) {
            density[k] = std::norm(amp.values[k]);
        }
        return density_stats(v_grid, density);
    }();
    const double sigma = std::sqrt(stats.variance);
    check_resolution(sigma, v_grid);
    return SmearingKernel(KernelKind::custom, sigma, beta, std::move(amp));
}

double SmearingKernel::position_width() const {
    const double m1 = moment(1);
    const double m2 = moment(2);
    return std::sqrt(std::max(0.0, m2 - m1 * m1));
}

double SmearingKernel::momentum_width() const {
    const double m1 = momentum_moment(1);
    const double m2 = momentum_moment(2);
    return std::sqrt(std::max(0.0, m2 - m1 * m1));
}

double SmearingKernel::moment(int order) const {
    std::vector<double> density(amp_.grid.n);
    for (int k = 0; k < amp_.grid.n; ++k) {
        density[k] = std::norm(amp_.values[k]);
    }
    return density_moment(amp_.grid, density, order).value;
}

double SmearingKernel::momentum_moment(int order) const {
    std::vector<double> density(amp_w_.grid.n);
    for (int k = 0; k < amp_w_.grid.n; ++k) {
        density[k] = std::norm(amp_w_.values[k]);
    }
    return density_moment(amp_w_.grid, density, order).value;
}

double SmearingKernel::amplitude_at(double v) const {
    const Grid& g = amp_.grid;
    const double dv = g.spacing();
    const double pos = (v - g.coord(0)) / dv;
    const double rounded = std::round(pos);
    if (std::abs(pos - rounded) > 1e-6) {
        std::ostringstream msg;
        msg << "offset " << v << " is not on the kernel lattice";
        throw DomainError(msg.str());
    }
    const long idx = static_cast<long>(rounded);
    if (idx < 0 || idx >= g.n) {
        return 0.0;
    }
    return amp_.values[static_cast<std::size_t>(idx)].real();
}

cdouble SmearingKernel::momentum_amplitude_at(double w) const {
    const Grid& g = amp_.grid;
    const double dv = g.spacing();
    cdouble sum = 0.0;
    for (int k = 0; k < g.n; ++k) {
        sum += amp_.values[k] * std::polar(1.0, -w * g.coord(k) / beta_);
    }
    return sum * (dv / std::sqrt(2.0 * M_PI * beta_));
}

SmearingKernel make_kernel(KernelKind kind, double sigma_g, double beta, const Grid& v_grid) {
    switch (kind) {
        case KernelKind::gaussian:
            return SmearingKernel::gaussian(sigma_g, beta, v_grid);
        case KernelKind::exponential:
            return SmearingKernel::exponential(sigma_g, beta, v_grid);
        default:
            throw DomainError("custom kernels need explicit amplitude samples");
    }
}

Grid auto_kernel_grid(const Grid& u_grid, double sigma_g) {
    if (!(sigma_g > 0.0)) {
        throw DomainError("kernel width must be positive");
    }
    const double du = u_grid.spacing();
    int n = 8;
    while (n * du < 12.0 * sigma_g && n < u_grid.n) {
        n *= 2;
    }
    if (n * du < 12.0 * sigma_g) {
        std::ostringstream msg;
        msg << "kernel width " << sigma_g << " needs a window above the full u extent "
            << u_grid.extent;
        throw ResolutionError(msg.str());
    }
    return Grid(n, 0.0, n * du);
}

}  // namespace qsmear

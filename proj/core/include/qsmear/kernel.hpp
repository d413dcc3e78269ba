#pragma once

#include <qsmear/grid.hpp>

namespace qsmear {

enum class KernelKind { gaussian, exponential, custom };

/// Smearing amplitude g over the relative coordinate v = x' - x.
/// g is real and nonnegative (the square root of a probability density) with
/// sum |g|^2 dv = 1, held together with its transform at scale beta over the
/// conjugate w lattice.
///
/// Width conventions: `sigma` is the standard deviation of |g|^2. The
/// exponential kernel is the Laplace density |g|^2 = exp(-|v|/lam)/(2 lam)
/// with lam = sigma/sqrt(2), the reference non-Gaussian shape; its
/// width product strictly exceeds the Gaussian minimum beta/2.
class SmearingKernel {
public:
    static SmearingKernel gaussian(double sigma, double beta, const Grid& v_grid);
    static SmearingKernel exponential(double sigma, double beta, const Grid& v_grid);
    /// Arbitrary nonnegative amplitude samples; renormalized internally.
    static SmearingKernel custom(const Grid& v_grid, const std::vector<double>& amplitude,
                                 double beta);

    KernelKind kind() const { return kind_; }
    double beta() const { return beta_; }
    /// The width the kernel was requested with (discrete width for custom).
    double nominal_sigma() const { return sigma_; }

    const Field& amplitude() const { return amp_; }
    const Field& momentum_amplitude() const { return amp_w_; }
    const Grid& v_grid() const { return amp_.grid; }
    const Grid& w_lattice() const { return amp_w_.grid; }

    /// Discrete standard deviation of |g|^2 over v.
    double position_width() const;
    /// Discrete standard deviation of |g~|^2 over w.
    double momentum_width() const;

    /// Raw moments of |g|^2 (about zero) and of |g~|^2.
    double moment(int order) const;
    double momentum_moment(int order) const;

    /// g at an offset that must lie on the v lattice (within 1e-6 spacing);
    /// returns 0 outside the window, throws on off-lattice queries.
    double amplitude_at(double v) const;

    /// g~ at arbitrary w by direct semidiscrete transform (exact, O(n_v)).
    cdouble momentum_amplitude_at(double w) const;

private:
    SmearingKernel(KernelKind kind, double sigma, double beta, Field amp);

    KernelKind kind_;
    double sigma_;
    double beta_;
    Field amp_;
    Field amp_w_;
};

/// Factory switching on kind; `custom` is not constructible this way.
SmearingKernel make_kernel(KernelKind kind, double sigma_g, double beta, const Grid& v_grid);

/// Smallest power-of-two window on the spacing of `u_grid` whose extent covers
/// at least 12 * sigma_g, centered on zero. Throws when no such window fits
/// inside the u extent.
Grid auto_kernel_grid(const Grid& u_grid, double sigma_g);

}  // namespace qsmear

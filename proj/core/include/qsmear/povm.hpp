#pragma once

#include <qsmear/kernel.hpp>
#include <qsmear/measurement.hpp>

#include <vector>

namespace qsmear {

/// Finite-resolution measurement kernel in canonical quantum mechanics: a
/// probability density of offsets between the true and the recorded value.
/// Unlike the smearing kernels, nothing ties a position resolution to a
/// momentum resolution; the two scales are independent dials.
struct ResolutionKernel {
    Grid offsets;
    std::vector<double> density;  ///< nonnegative, sum density * spacing = 1
    double sigma;  ///< nominal width for factory-built kernels, else the discrete deviation
    bool centered;  ///< mean offset zero (within 1e-9 * spacing)

    static ResolutionKernel gaussian(double sigma, const Grid& offsets);
    static ResolutionKernel exponential(double sigma, const Grid& offsets);
    /// Single-site density: the projective (infinite-precision) limit.
    static ResolutionKernel point(const Grid& offsets);
    static ResolutionKernel custom(const Grid& offsets, std::vector<double> density);
    /// The squared smearing amplitude over v (position) or its conjugate
    /// squared amplitude over w (momentum).
    static ResolutionKernel from_smearing(const SmearingKernel& kernel, Axis axis);

    double mean() const;
    double variance() const;
};

/// Sup-norm deviation from the identity of the lattice sum of all measurement
/// effects over a position lattice sharing the kernel spacing. Zero up to
/// roundoff whenever the kernel window fits the lattice, for any width pair;
/// this is the sense in which the canonical model accepts arbitrary
/// resolutions.
double povm_completeness_residual(const ResolutionKernel& kernel, const Grid& grid);

struct PovmStatistics {
    double mean;               ///< <outcome> = kernel mean + wavefunction mean
    double variance;           ///< kernel variance + wavefunction variance
    double kernel_mean_shift;  ///< nonzero only for non-centered kernels
};

/// Outcome statistics of the finite-resolution measurement on the bare
/// wavefunction. The momentum axis measures the hbar-conjugate density.
PovmStatistics povm_statistics(const Field& psi, const ResolutionKernel& kernel, Axis axis,
                               double hbar = 1.0);

struct IndependenceReport {
    double sigma_x;
    double sigma_p;
    double width_product;       ///< sigma_x * sigma_p
    double beta;
    double required_product;    ///< beta / 2, what the smeared model forces
    bool povm_accepts;          ///< always true: no constraint exists
    bool smearing_accepts;      ///< true only when the widths saturate beta
    double completeness_x;
    double completeness_p;
};

/// Contrast the two models on one width pair: the canonical finite-resolution
/// model takes any (sigma_x, sigma_p), while the smeared model fixes
/// 2 sigma_x sigma_p = beta. Each kernel's completeness residual is taken on
/// an outcome lattice sharing its own offsets spacing, so any resolved pair
/// passes regardless of the width product.
IndependenceReport povm_independence_demo(const ResolutionKernel& kernel_x,
                                          const ResolutionKernel& kernel_p, double beta);

}  // namespace qsmear

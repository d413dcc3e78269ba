#pragma once

#include <qsmear/state.hpp>

#include <vector>

namespace qsmear {

/// Generalized widths of one state and their distance from the lower bound
/// (hbar + beta)/2.
struct UncertaintyReport {
    double delta_X;  ///< generalized position standard deviation
    double delta_P;  ///< generalized momentum standard deviation
    double product;
    double bound;  ///< (hbar + beta)/2
    double slack;  ///< product - bound, nonnegative up to 1e-6 * bound
};

struct CommutatorResult {
    cdouble value;         ///< expectation of [X, P], ideally i (hbar + beta)
    double spectral_tail;  ///< norm fraction in the outer half of the mode window
    bool accurate;         ///< tail below 1e-6
};

struct OptimalWidths {
    double dx_opt;
    double dp_opt;  ///< dx_opt * dp_opt = hbar / 2 exactly
};

/// First-order uncertainty bound together with its unexpanded parent value.
struct ExpandedBound {
    double first_order;
    double exact;
    bool within_validity;  ///< input inside the window where the expansion holds to 1%
};

struct WidthPair {
    double dx;
    double dp;
};

struct SweepRow {
    double beta;
    double delta_psi_x;
    double delta_X;
    double delta_P;
    double product;
    double bound;
    double slack;
};

/// Generalized widths of the state and the product bound (hbar + beta)/2.
UncertaintyReport unified_relation(const SmearedState& state);

/// Expectation of the commutator of the generalized position and momentum
/// operators, evaluated by applying them spectrally in both orders. Equals
/// i (hbar + beta) for any state up to spectral-tail contamination, which the
/// result reports.
CommutatorResult commutator_expectation(const SmearedState& state);

/// Wavefunction widths that saturate the product bound:
/// dx_opt = sqrt(hbar sigma_g / (2 sigma_g_tilde)) and its conjugate.
OptimalWidths optimal_widths(double hbar, double sigma_g, double sigma_g_tilde);

/// Minimum position uncertainty at momentum spread dp: the canonical
/// hbar/(2 dp) plus the gravitational correction (sigma_g^2/hbar) dp.
/// The exact form is hbar/(2 dp) sqrt(1 + (2 sigma_g dp / hbar)^2).
/// Valid for sigma_g_tilde <= dp and (2 sigma_g dp / hbar)^2 <= 0.01.
ExpandedBound gup_bound(double dp, const SmearParams& scales);

/// Minimum momentum uncertainty at position spread dx: hbar/(2 dx) plus the
/// horizon correction (sigma_g_tilde^2/hbar) dx. Valid for sigma_g <= dx and
/// (2 sigma_g_tilde dx / hbar)^2 <= 0.01.
ExpandedBound eup_bound(double dx, const SmearParams& scales);

/// Uncertainty product expanded to first order in both correction terms:
/// dx dp + (sigma_g^2/2)(dp/dx) + (sigma_g_tilde^2/2)(dx/dp).
double egup_product_bound(double dx, double dp, const SmearParams& scales);

/// Width exchange dx -> (sigma_g/sigma_g_tilde) dp, dp -> (sigma_g_tilde/
/// sigma_g) dx. Leaves the unified product invariant and is an involution;
/// the optimal widths are its fixed point.
WidthPair symmetry_transform(double dx, double dp, const SmearParams& scales);

/// One Gaussian state per (beta, width) pair, reported against the bound.
/// The kernel width sigma_g is shared across rows; the kernel window is sized
/// automatically on the spacing of `grid`.
std::vector<SweepRow> sweep_products(const std::vector<double>& beta_list,
                                     const std::vector<double>& width_list, double sigma_g,
                                     const Grid& grid);

}  // namespace qsmear

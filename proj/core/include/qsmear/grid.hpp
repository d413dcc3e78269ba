#pragma once

#include <complex>
#include <vector>

namespace qsmear {

using cdouble = std::complex<double>;

/// Uniform periodic lattice of n samples covering [center - extent/2,
/// center + extent/2), sample j at center - extent/2 + j * spacing.
/// n must be a power of two and at least 8.
struct Grid {
    int n = 0;
    double center = 0.0;
    double extent = 0.0;

    Grid() = default;
    Grid(int n_, double center_, double extent_);

    double spacing() const { return extent / n; }
    double coord(int j) const { return center - 0.5 * extent + j * spacing(); }
    std::vector<double> coords() const;

    /// Index of the lattice point nearest to x under periodic wrap.
    int nearest_index(double x) const;

    bool same_lattice(const Grid& other, double rel_tol = 1e-9) const;
    bool compatible_spacing(const Grid& other, double rel_tol = 1e-9) const;
};

/// Conjugate lattice of `base` under the scaled unitary transform
///   F(q) = (2 pi s)^{-1/2} Int f(x) exp(-i q x / s) dx.
/// Samples sit at q_m = 2 pi s m / extent for m in [-n/2, n/2): n points
/// centered on zero with spacing 2 pi s / extent, so that
/// spacing(x) * spacing(q) = 2 pi s / n.
struct ConjugateGrid {
    Grid base;
    double scale = 1.0;

    ConjugateGrid(const Grid& base_, double scale_);
    Grid lattice() const;
};

/// Complex samples over a Grid.
struct Field {
    Grid grid;
    std::vector<cdouble> values;

    Field() = default;
    Field(const Grid& g, std::vector<cdouble> v);
    explicit Field(const Grid& g);  // zero-filled

    /// Discrete squared L2 norm, sum |f|^2 * spacing.
    double norm_squared() const;

    /// Scales so norm_squared() == 1; throws on (numerically) zero norm.
    Field& normalize();
};

/// Forward scaled transform onto the conjugate lattice of f.grid.
/// Unitary in the discrete norm: norm_squared is preserved exactly.
Field transform(const Field& f, double scale);

/// Inverse of transform: takes samples over the conjugate lattice back to
/// `target`, which must be conjugate-consistent with F.grid at this scale.
Field inverse_transform(const Field& F, double scale, const Grid& target);

/// Periodic convolution with the continuum normalization,
/// h_j = sum_k f_k g_{j-k} * spacing. Preserves integrals:
/// Int h = Int f * Int g.
Field convolve(const Field& f, const Field& g);

/// Spectral derivative d^order/dx^order. The unmatched Nyquist bin is zeroed
/// for odd orders.
Field spectral_derivative(const Field& f, int order = 1);

struct MomentResult {
    double value;
    bool normalized;  ///< false if the density integral was off 1 by > 1e-6
};

/// n-th raw moment of a real lattice density about `center`:
/// sum (x_j - center)^n rho_j * spacing. Does not require normalization but
/// reports whether the density integrates to 1.
MomentResult density_moment(const Grid& g, const std::vector<double>& density,
                            int order, double center = 0.0);

/// Mean and central variance of a lattice density.
struct DensityStats {
    double mean;
    double variance;
    bool normalized;
};
DensityStats density_stats(const Grid& g, const std::vector<double>& density);

/// Moment of |f|^2, same conventions as density_moment.
MomentResult field_moment(const Field& f, int order, double center = 0.0);

/// Normalized Gaussian wave packet: |psi|^2 has standard deviation `width`
/// about `mean`, with an optional plane-wave factor exp(i wavenumber x).
/// Discretely renormalized so norm_squared() == 1.
Field gaussian_wavepacket(const Grid& g, double mean, double width,
                          double wavenumber = 0.0);

}  // namespace qsmear

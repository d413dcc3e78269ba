#pragma once

#include <qsmear/grid.hpp>

#include <cstddef>
#include <vector>

namespace qsmear {

/// One axis of the four-axis two-particle lattice. Nothing here is ever
/// Fourier-transformed, so unlike Grid any even point count from 8 up is
/// allowed; 48 per axis is a typical working size.
struct PairAxis {
    int n = 0;
    double center = 0.0;
    double extent = 0.0;

    PairAxis() = default;
    PairAxis(int n_, double center_, double extent_);
    PairAxis(const Grid& g) : n(g.n), center(g.center), extent(g.extent) {}

    double spacing() const { return extent / n; }
    double coord(int j) const { return center - 0.5 * extent + j * spacing(); }
    bool same_lattice(const PairAxis& other) const;
};

/// Complex field over a pair of axes, values row-major [grid1][grid2].
struct Field2 {
    PairAxis grid1;
    PairAxis grid2;
    std::vector<cdouble> values;

    Field2() = default;
    Field2(const PairAxis& g1, const PairAxis& g2);

    cdouble& at(int i, int j) { return values[static_cast<std::size_t>(i) * grid2.n + j]; }
    const cdouble& at(int i, int j) const {
        return values[static_cast<std::size_t>(i) * grid2.n + j];
    }
    double measure() const { return grid1.spacing() * grid2.spacing(); }
    double norm_squared() const;
    Field2& normalize();
};

enum class TwoBodyKind { product_gaussian, radial_exponential, point };

/// Two-body smearing amplitude g(v1, v2), unit norm. The product-Gaussian
/// kernel factorizes between the particles; the radial-exponential kernel
/// |g|^2 proportional to exp(-sqrt(v1^2+v2^2)/lam) depends only on the radial
/// offset and does not factorize. lam = sigma/sqrt(3) makes sigma the
/// per-axis standard deviation in both cases. The point kernel concentrates
/// all weight on v1 = v2 = 0 (projective limit).
struct KernelTwoBody {
    TwoBodyKind kind;
    double sigma;
    Field2 amplitude;

    static KernelTwoBody product_gaussian(double sigma, const PairAxis& v_grid);
    static KernelTwoBody radial_exponential(double sigma, const PairAxis& v_grid);
    static KernelTwoBody point(const PairAxis& v_grid);
};

/// Two particles on a line with their geometry offsets: amplitudes over
/// (u1, u2, v1, v2), row-major in that axis order. Both particles share the
/// u lattice and both offsets the v lattice. Construction enforces a memory
/// budget on the n^2 * m^2 storage.
class TwoParticleState {
public:
    TwoParticleState(const PairAxis& u_grid, const PairAxis& v_grid, double hbar, double beta,
                     std::size_t max_bytes = default_max_bytes);

    static constexpr std::size_t default_max_bytes = std::size_t(1) << 30;

    const PairAxis& u_grid() const { return u_; }
    const PairAxis& v_grid() const { return v_; }
    double hbar() const { return hbar_; }
    double beta() const { return beta_; }
    int nu() const { return u_.n; }
    int nv() const { return v_.n; }

    cdouble& at(int u1, int u2, int v1, int v2);
    const cdouble& at(int u1, int u2, int v1, int v2) const;
    std::vector<cdouble>& values() { return values_; }
    const std::vector<cdouble>& values() const { return values_; }

    double measure() const;
    double norm_squared() const;
    TwoParticleState& normalize();

private:
    PairAxis u_;
    PairAxis v_;
    double hbar_;
    double beta_;
    std::vector<cdouble> values_;
};

/// Attach the two-body kernel: Psi12 = g(v1, v2) psi12(u1, u2), norm 1.
TwoParticleState smear_two(const Field2& psi12, const KernelTwoBody& kernel, double hbar,
                           double beta, std::size_t max_bytes = TwoParticleState::default_max_bytes);

enum class ParticleCut { first, second };

/// Von Neumann entropy (natural log) of one particle's reduced state across
/// the cut (u1, v1) | (u2, v2), from the eigenvalues of the Gram matrix of
/// the reshaped amplitude. Identical for either side of the cut.
double entanglement_entropy(const TwoParticleState& state, ParticleCut cut = ParticleCut::first);

/// Entropy of a plain two-particle wavefunction across u1 | u2, used to
/// compare entanglement before and after smearing.
double entanglement_entropy(const Field2& psi12, ParticleCut cut = ParticleCut::first);

/// Distance to the nearest product state across the particle cut:
/// sqrt(1 - lambda_1^2) with lambda_1 the leading Schmidt coefficient.
double factorization_residual(const TwoParticleState& state);

/// Normalized Schmidt weights (squared coefficients, descending, sum 1).
std::vector<double> schmidt_spectrum(const TwoParticleState& state);

}  // namespace qsmear

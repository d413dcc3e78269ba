#include <qsmear/multiparticle.hpp>

#include <qsmear/errors.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qsmear {

namespace {

void check_kernel_resolution(double sigma, const PairAxis& v_grid) {
    if (!(sigma > 0.0)) {
        throw DomainError("kernel width must be positive");
    }
    if (sigma < 3.0 * v_grid.spacing()) {
        throw ResolutionError("two-body kernel width is below 3 lattice spacings");
    }
    if (v_grid.extent < 8.0 * sigma) {
        throw DomainError("v window does not cover 8 two-body kernel widths");
    }
}

/// Schmidt weights across the particle cut: eigenvalues of A A^dagger where
/// A is the measure-weighted reshape with rows (u1, v1) and columns (u2, v2).
std::vector<double> schmidt_weights(const TwoParticleState& state, ParticleCut cut) {
    const int nu = state.nu();
    const int nv = state.nv();
    const int dim = nu * nv;
    const double cell = state.u_grid().spacing() * state.v_grid().spacing();
    Eigen::MatrixXcd a(dim, dim);
    for (int u1 = 0; u1 < nu; ++u1) {
        for (int v1 = 0; v1 < nv; ++v1) {
            const int row = u1 * nv + v1;
            for (int u2 = 0; u2 < nu; ++u2) {
                for (int v2 = 0; v2 < nv; ++v2) {
                    a(row, u2 * nv + v2) = state.at(u1, u2, v1, v2) * cell;
                }
            }
        }
    }
    if (cut == ParticleCut::second) {
        a.transposeInPlace();
    }
    const Eigen::MatrixXcd gram = a * a.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error("eigenvalue decomposition failed");
    }
    std::vector<double> weights(solver.eigenvalues().data(),
                                solver.eigenvalues().data() + dim);
    for (double& w : weights) {
        w = std::max(w, 0.0);
    }
    std::sort(weights.rbegin(), weights.rend());
    double total = 0.0;
    for (double w : weights) {
        total += w;
    }
    if (!(total > 0.0)) {
        throw DomainError("state has vanishing norm");
    }
    for (double& w : weights) {
        w /= total;
    }
    return weights;
}

double entropy_of_weights(const std::vector<double>& weights) {
    double s = 0.0;
    for (double w : weights) {
        if (w > 1e-300) {
            s -= w * std::log(w);
        }
    }
    return s;
}

}  // namespace

PairAxis::PairAxis(int n_, double center_, double extent_) : n(n_), center(center_), extent(extent_) {
    if (n < 8 || n % 2 != 0) {
        throw DomainError("axis point count must be an even number of at least 8");
    }
    if (!(extent > 0.0) || !std::isfinite(extent) || !std::isfinite(center)) {
        throw DomainError("axis window must have a positive finite length");
    }
}

bool PairAxis::same_lattice(const PairAxis& other) const {
    const double tol = 1e-9 * std::max(1.0, extent);
    return n == other.n && std::abs(center - other.center) <= tol &&
           std::abs(extent - other.extent) <= tol;
}

Field2::Field2(const PairAxis& g1, const PairAxis& g2) : grid1(g1), grid2(g2) {
    values.assign(static_cast<std::size_t>(g1.n) * g2.n, cdouble(0.0));
}

double Field2::norm_squared() const {
    double sum = 0.0;
    for (const cdouble& z : values) {
        sum += std::norm(z);
    }
    return sum * measure();
}

Field2& Field2::normalize() {
    const double nsq = norm_squared();
    if (!(nsq > 0.0) || !std::isfinite(nsq)) {
        throw DomainError("cannot normalize a field with vanishing norm");
    }
    const double inv = 1.0 / std::sqrt(nsq);
    for (cdouble& z : values) {
        z *= inv;
    }
    return *this;
}

KernelTwoBody KernelTwoBody::product_gaussian(double sigma, const PairAxis& v_grid) {
    check_kernel_resolution(sigma, v_grid);
    KernelTwoBody kernel{TwoBodyKind::product_gaussian, sigma, Field2(v_grid, v_grid)};
    for (int i = 0; i < v_grid.n; ++i) {
        const double v1 = v_grid.coord(i);
        for (int j = 0; j < v_grid.n; ++j) {
            const double v2 = v_grid.coord(j);
            kernel.amplitude.at(i, j) = std::exp(-(v1 * v1 + v2 * v2) / (4.0 * sigma * sigma));
        }
    }
    kernel.amplitude.normalize();
    return kernel;
}

KernelTwoBody KernelTwoBody::radial_exponential(double sigma, const PairAxis& v_grid) {
    check_kernel_resolution(sigma, v_grid);
    const double lam = sigma / std::sqrt(3.0);
    KernelTwoBody kernel{TwoBodyKind::radial_exponential, sigma, Field2(v_grid, v_grid)};
    for (int i = 0; i < v_grid.n; ++i) {
        const double v1 = v_grid.coord(i);
        for (int j = 0; j < v_grid.n; ++j) {
            const double v2 = v_grid.coord(j);
            kernel.amplitude.at(i, j) = std::exp(-std::sqrt(v1 * v1 + v2 * v2) / (2.0 * lam));
        }
    }
    kernel.amplitude.normalize();
    return kernel;
}

KernelTwoBody KernelTwoBody::point(const PairAxis& v_grid) {
    KernelTwoBody kernel{TwoBodyKind::point, 0.0, Field2(v_grid, v_grid)};
    kernel.amplitude.at(v_grid.n / 2, v_grid.n / 2) = 1.0;
    kernel.amplitude.normalize();
    return kernel;
}

TwoParticleState::TwoParticleState(const PairAxis& u_grid, const PairAxis& v_grid, double hbar,
                                   double beta, std::size_t max_bytes)
    : u_(u_grid), v_(v_grid), hbar_(hbar), beta_(beta) {
    if (!(hbar_ > 0.0) || !(beta_ > 0.0)) {
        throw DomainError("actions must be positive");
    }
    const std::size_t count = static_cast<std::size_t>(u_.n) * u_.n * v_.n * v_.n;
    const std::size_t bytes = count * sizeof(cdouble);
    if (bytes > max_bytes) {
        std::ostringstream msg;
        msg << "two-particle state needs " << bytes << " bytes, over the budget of " << max_bytes
            << "; shrink the lattices";
        throw Error(msg.str());
    }
    values_.assign(count, cdouble(0.0));
}

cdouble& TwoParticleState::at(int u1, int u2, int v1, int v2) {
    return values_[((static_cast<std::size_t>(u1) * u_.n + u2) * v_.n + v1) * v_.n + v2];
}

const cdouble& TwoParticleState::at(int u1, int u2, int v1, int v2) const {
    return values_[((static_cast<std::size_t>(u1) * u_.n + u2) * v_.n + v1) * v_.n + v2];
}

double TwoParticleState::measure() const {
    const double du = u_.spacing();
    const double dv = v_.spacing();
    return du * du * dv * dv;
}

double TwoParticleState::norm_squared() const {
    double sum = 0.0;
    for (const cdouble& z : values_) {
        sum += std::norm(z);
    }
    return sum * measure();
}

TwoParticleState& TwoParticleState::normalize() {
    const double nsq = norm_squared();
    if (!(nsq > 0.0) || !std::isfinite(nsq)) {
        throw DomainError("cannot normalize a state with vanishing norm");
    }
    const double inv = 1.0 / std::sqrt(nsq);
    for (cdouble& z : values_) {
        z *= inv;
    }
    return *this;
}

TwoParticleState smear_two(const Field2& psi12, const KernelTwoBody& kernel, double hbar,
                           double beta, std::size_t max_bytes) {
    const double nsq = psi12.norm_squared();
    if (std::abs(nsq - 1.0) > 1e-6) {
        throw DomainError("two-particle wavefunction must be normalized");
    }
    if (psi12.grid1.n != psi12.grid2.n || !psi12.grid1.same_lattice(psi12.grid2)) {
        throw DomainError("both particles must live on one lattice");
    }
    TwoParticleState state(psi12.grid1, kernel.amplitude.grid1, hbar, beta, max_bytes);
    const int nu = state.nu();
    const int nv = state.nv();
    for (int u1 = 0; u1 < nu; ++u1) {
        for (int u2 = 0; u2 < nu; ++u2) {
            const cdouble psi = psi12.at(u1, u2);
            for (int v1 = 0; v1 < nv; ++v1) {
                for (int v2 = 0; v2 < nv; ++v2) {
                    state.at(u1, u2, v1, v2) = psi * kernel.amplitude.at(v1, v2);
                }
            }
        }
    }
    return state;
}

double entanglement_entropy(const TwoParticleState& state, ParticleCut cut) {
    return entropy_of_weights(schmidt_weights(state, cut));
}

double entanglement_entropy(const Field2& psi12, ParticleCut cut) {
    const int n1 = psi12.grid1.n;
    const int n2 = psi12.grid2.n;
    Eigen::MatrixXcd a(n1, n2);
    const double cell = std::sqrt(psi12.grid1.spacing() * psi12.grid2.spacing());
    for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n2; ++j) {
            a(i, j) = psi12.at(i, j) * cell;
        }
    }
    if (cut == ParticleCut::second) {
        a.transposeInPlace();
    }
    const Eigen::MatrixXcd gram = a * a.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error("eigenvalue decomposition failed");
    }
    std::vector<double> weights(solver.eigenvalues().data(),
                                solver.eigenvalues().data() + solver.eigenvalues().size());
    double total = 0.0;
    for (double& w : weights) {
        w = std::max(w, 0.0);
        total += w;
    }
    if (!(total > 0.0)) {
        throw DomainError("wavefunction has vanishing norm");
    }
    for (double& w : weights) {
        w /= total;
    }
    return entropy_of_weights(weights);
}

double factorization_residual(const TwoParticleState& state) {
    const std::vector<double> weights = schmidt_weights(state, ParticleCut::first);
    return std::sqrt(std::max(0.0, 1.0 - weights.front()));
}

std::vector<double> schmidt_spectrum(const TwoParticleState& state) {
    return schmidt_weights(state, ParticleCut::first);
}

}  // namespace qsmear

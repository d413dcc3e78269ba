// Split-step propagation under the rescaled Schrodinger equation: unitarity,
// the two observable routes, free and harmonic closed forms, the modified
// dispersion relation, and the stability guards.

#include <doctest.h>

#include <qsmear/dynamics.hpp>
#include <qsmear/errors.hpp>
#include <qsmear/measurement.hpp>
#include <qsmear/smearing.hpp>

#include <cmath>
#include <vector>

using namespace qsmear;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

const SmearParams kParams{1.0, 0.1, 0.5};
const Grid kUGrid(128, 0.0, 16.0);

SmearingKernel default_kernel() {
    return SmearingKernel::gaussian(kParams.sigma_g, kParams.beta,
                                    auto_kernel_grid(kUGrid, kParams.sigma_g));
}

SmearedState packet(double mean, double width, double wavenumber = 0.0) {
    return smear(gaussian_wavepacket(kUGrid, mean, width, wavenumber), default_kernel(),
                 kParams);
}

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("evolution is unitary and zero steps are the identity") {
    const SmearedState state = packet(0.0, 1.0, 1.0);
    const Hamiltonian h = harmonic_hamiltonian(1.0, 1.0, 0.0, kParams, kUGrid);

    const SmearedState same = evolve(state, h, {0.05, 0});
    double worst = 0.0;
    for (std::size_t i = 0; i < same.values().size(); ++i) {
        worst = std::max(worst, std::abs(same.values()[i] - state.values()[i]));
    }
    CHECK(worst == 0.0);

    const SmearedState later = evolve(state, h, {0.004, 500});
    CHECK(std::abs(later.norm_squared() - 1.0) < 1e-12);
}

TEST_CASE("free packets drift at two distinct velocities") {
    // The observed position <X> = <u + v> advances at <P>/m. The matter
    // coordinate <u> advances slower by hbar / (hbar + beta): the group
    // velocity of the modified dispersion relation.
    const double k0 = 2.0;
    const Grid roomy(256, 0.0, 32.0);  // keeps the drifted tails far off the edge
    const SmearingKernel g = SmearingKernel::gaussian(kParams.sigma_g, kParams.beta,
                                                      auto_kernel_grid(roomy, kParams.sigma_g));
    const SmearedState state =
        smear(gaussian_wavepacket(roomy, -2.0, 1.0, k0), g, kParams);
    const Hamiltonian h = free_hamiltonian(1.0, kParams, roomy);
    const double t = 1.5;
    const SmearedState later = evolve(state, h, {t / 300.0, 300});

    const double p0 = observable_expectation(state, ObservableKind::P);
    const double packet_velocity =
        (observable_expectation(later, ObservableKind::X) -
         observable_expectation(state, ObservableKind::X)) / t;
    const double matter_velocity =
        (unprimed_position_mean(later) - unprimed_position_mean(state)) / t;

    CHECK(rel(p0, kParams.hbar * k0) < 1e-9);
    CHECK(rel(packet_velocity, p0 / 1.0) < 1e-9);
    CHECK(rel(matter_velocity, kParams.hbar / kParams.effective_hbar() * p0) < 1e-9);
    // Momentum is conserved.
    CHECK(rel(observable_expectation(later, ObservableKind::P), p0) < 1e-9);
}

TEST_CASE("free evolution is exact at any step size") {
    const SmearedState state = packet(0.0, 1.0, 1.5);
    const Hamiltonian h = free_hamiltonian(1.0, kParams, kUGrid);
    const SmearedState coarse = evolve(state, h, {1.0, 1});
    const SmearedState fine = evolve(state, h, {0.01, 100});
    double worst = 0.0;
    for (std::size_t i = 0; i < coarse.values().size(); ++i) {
        worst = std::max(worst, std::abs(coarse.values()[i] - fine.values()[i]));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("energy is conserved for free and harmonic motion") {
    for (bool harmonic : {false, true}) {
        const Hamiltonian h = harmonic
                                  ? harmonic_hamiltonian(1.0, 1.0, 0.0, kParams, kUGrid)
                                  : free_hamiltonian(1.0, kParams, kUGrid);
        const SmearedState state = packet(1.0, 0.9, 0.8);
        const double e0 = energy_expectation(state, h);
        const SmearedState later = evolve(state, h, {0.002, 500});
        CHECK(rel(energy_expectation(later, h), e0) < 1e-7);
    }
}

TEST_CASE("harmonic motion mirrors at half period and revives at full period") {
    const double omega = 1.0, x0 = 1.5;
    const Hamiltonian h = harmonic_hamiltonian(1.0, omega, 0.0, kParams, kUGrid);
    const SmearedState state = packet(x0, 0.8);
    const int steps = 2048;
    const double half_period = M_PI / omega;

    const SmearedState mirrored = evolve(state, h, {half_period / steps, steps});
    CHECK(rel(observable_expectation(mirrored, ObservableKind::X), -x0) < 1e-4);
    // Width oscillation also has period T/2, so the variance returns already.
    CHECK(rel(generalized_variance(mirrored, Axis::position),
              generalized_variance(state, Axis::position)) < 1e-4);

    const SmearedState revived = evolve(mirrored, h, {half_period / steps, steps});
    CHECK(rel(observable_expectation(revived, ObservableKind::X), x0) < 1e-4);
}

TEST_CASE("position applied in momentum space agrees with the direct product") {
    const SmearedState state = packet(0.6, 1.1, 0.9);
    // <X> two ways.
    const SmearedState xs = apply_X(state);
    double direct = 0.0;
    for (std::size_t i = 0; i < xs.values().size(); ++i) {
        direct += (std::conj(state.values()[i]) * xs.values()[i]).real();
    }
    direct *= state.measure();

    const MomentumRep rep = momentum_representation(state);
    const MomentumRep xrep = apply_X_momentum(rep);
    double spectral = 0.0;
    for (std::size_t i = 0; i < rep.values.size(); ++i) {
        spectral += (std::conj(rep.values[i]) * xrep.values[i]).real();
    }
    spectral *= rep.measure();
    CHECK(std::abs(direct - spectral) < 1e-6);
    CHECK(rel(direct, observable_expectation(state, ObservableKind::X)) < 1e-9);
}

TEST_CASE("polynomials in the observables agree between the two routes") {
    const SmearedState state = packet(0.4, 1.0, 0.7);
    const MomentumRep rep = momentum_representation(state);

    // <X^2> and <X^3> by repeated application on each side.
    SmearedState xk = apply_X(state);
    MomentumRep xk_rep = apply_X_momentum(rep);
    for (int power = 2; power <= 3; ++power) {
        xk = apply_X(xk);
        xk_rep = apply_X_momentum(xk_rep);
        double direct = 0.0;
        for (std::size_t i = 0; i < xk.values().size(); ++i) {
            direct += (std::conj(state.values()[i]) * xk.values()[i]).real();
        }
        direct *= state.measure();
        double spectral = 0.0;
        for (std::size_t i = 0; i < rep.values.size(); ++i) {
            spectral += (std::conj(rep.values[i]) * xk_rep.values[i]).real();
        }
        spectral *= rep.measure();
        CHECK(std::abs(direct - spectral) / std::max(1.0, std::abs(direct)) < 1e-6);
    }
}

TEST_CASE("generalized momentum squared reproduces the kinetic energy") {
    const SmearedState state = packet(0.0, 1.0, 1.2);
    const Hamiltonian h = free_hamiltonian(1.0, kParams, kUGrid);
    const SmearedState p1 = apply_P(state);
    const SmearedState p2 = apply_P(p1);
    double p2_mean = 0.0;
    for (std::size_t i = 0; i < p2.values().size(); ++i) {
        p2_mean += (std::conj(state.values()[i]) * p2.values()[i]).real();
    }
    p2_mean *= state.measure();
    CHECK(rel(p2_mean / (2.0 * h.mass), energy_expectation(state, h)) < 1e-9);
}

TEST_CASE("plane waves advance at the modified dispersion frequency") {
    const Grid v = auto_kernel_grid(kUGrid, kParams.sigma_g);
    const double dp = 2.0 * M_PI * kParams.hbar / kUGrid.extent;
    const double dw = 2.0 * M_PI * kParams.beta / v.extent;
    const double p = 5.0 * dp, w = -2.0 * dw;
    SmearedState mode = eigenstate_sample(p, p + w, kUGrid, v, kParams);
    mode.normalize();

    const double mass = 1.3, dt = 0.21;
    const Hamiltonian h = free_hamiltonian(mass, kParams, kUGrid);
    const SmearedState later = evolve(mode, h, {dt, 1});

    const cdouble ratio = later.at(7, 3) / mode.at(7, 3);
    const double k = p / kParams.hbar;
    const double k_prime = k + w / kParams.beta;
    const double omega = dispersion(k, k_prime, mass, kParams.hbar, kParams.beta);
    // One kinetic step multiplies the mode by exp(-i omega dt).
    CHECK(std::abs(ratio - std::polar(1.0, -omega * dt)) < 1e-9);
    // The frequency is the energy (p + w)^2 / 2m read at the rescaled hbar.
    const double energy = (p + w) * (p + w) / (2.0 * mass);
    CHECK(rel(omega, energy_frequency(energy, kParams.hbar, kParams.beta)) < 1e-12);
}

TEST_CASE("heisenberg residuals vanish for both observables") {
    const Hamiltonian h = harmonic_hamiltonian(1.0, 1.0, 0.0, kParams, kUGrid);
    const SmearedState state = packet(1.0, 0.9, 0.5);
    CHECK(heisenberg_residual(state, h, ObservableKind::X) < 1e-5);
    CHECK(heisenberg_residual(state, h, ObservableKind::P) < 1e-5);
}

TEST_CASE("finite-difference velocity converges at second order in the step") {
    // Propagate to t0 and then measure d<X>/dt with a centered difference of
    // total width 2 dt, halving dt: the log-log slope of the residual against
    // <P>/m must be at least 2 (Strang splitting is second order).
    const Hamiltonian h = harmonic_hamiltonian(1.0, 1.0, 0.0, kParams, kUGrid);
    const SmearedState start = packet(1.2, 0.9);
    const double t0 = 0.2;
    const SmearedState at_t0 = evolve(start, h, {t0 / 128, 128});

    std::vector<double> log_dt, log_res;
    for (double dt : {0.008, 0.004, 0.002, 0.001}) {
        const SmearedState mid = evolve(at_t0, h, {dt, 1});
        const SmearedState far = evolve(at_t0, h, {dt, 2});
        const double rate = (observable_expectation(far, ObservableKind::X) -
                             observable_expectation(at_t0, ObservableKind::X)) /
                            (2.0 * dt);
        const double expected = observable_expectation(mid, ObservableKind::P) / h.mass;
        log_dt.push_back(std::log(dt));
        log_res.push_back(std::log(std::abs(rate - expected)));
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int n = static_cast<int>(log_dt.size());
    for (int i = 0; i < n; ++i) {
        sx += log_dt[i];
        sy += log_res[i];
        sxx += log_dt[i] * log_dt[i];
        sxy += log_dt[i] * log_res[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    CHECK(slope >= 2.0);
}

TEST_CASE("spectral tails separate smooth from rough states") {
    const SmearedState smooth = packet(0.0, 1.0);
    CHECK(spectral_tail_fraction(smooth) < 1e-12);
    SmearedState rough = packet(0.0, 1.0);
    for (int j = 0; j < rough.nu(); ++j) {
        for (int k = 0; k < rough.nv(); ++k) {
            if (j % 2) rough.at(j, k) *= -1.0;
        }
    }
    rough.clear_factors();
    CHECK(spectral_tail_fraction(rough) > 0.5);
}

TEST_CASE("default timestep respects the stability guards") {
    const Hamiltonian h = harmonic_hamiltonian(1.0, 2.0, 0.0, kParams, kUGrid);
    const SmearedState state = packet(1.0, 1.0);
    const double dt = default_timestep(state, h);
    CHECK(dt > 0.0);
    CHECK_NOTHROW(evolve(state, h, {dt, 3}));
}

TEST_CASE("oversized steps and bad configs are rejected") {
    const Hamiltonian h = harmonic_hamiltonian(1.0, 1.0, 0.0, kParams, kUGrid);
    const SmearedState state = packet(1.0, 1.0);
    // The potential corner advances far beyond pi/4 per step at dt = 1.
    CHECK_THROWS_AS(evolve(state, h, {1.0, 4}), Error);
    CHECK_THROWS_AS(evolve(state, h, {-0.01, 4}), DomainError);
    CHECK_THROWS_AS(evolve(state, h, {0.01, -1}), DomainError);

    Hamiltonian mismatched = h;
    mismatched.beta = 0.25;  // state carries beta = 0.1
    CHECK_THROWS_AS(evolve(state, mismatched, {0.001, 1}), DomainError);

    Hamiltonian short_potential = h;
    short_potential.potential.resize(17);
    CHECK_THROWS_AS(evolve(state, short_potential, {0.001, 1}), DomainError);
}

}  // TEST_SUITE

// Outcome densities, generalized moments, collapse, sampling, and the two
// equivalent measurement pictures.

#include <doctest.h>

#include <qsmear/errors.hpp>
#include <qsmear/measurement.hpp>
#include <qsmear/smearing.hpp>

#include <cmath>
#include <random>

using namespace qsmear;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

const SmearParams kParams{1.0, 0.1, 0.5};
const Grid kUGrid(512, 0.0, 16.0);  // spacing 1/32 puts r = 1 on the lattice

SmearingKernel default_kernel() {
    return SmearingKernel::gaussian(kParams.sigma_g, kParams.beta,
                                    auto_kernel_grid(kUGrid, kParams.sigma_g));
}

SmearedState product_state(double mean, double width, double wavenumber = 0.0) {
    return smear(gaussian_wavepacket(kUGrid, mean, width, wavenumber), default_kernel(),
                 kParams);
}

Field random_packet(std::uint64_t seed) {
    // Ranges keep twelve packet widths inside the box so periodic tails stay
    // under the tolerances below.
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> pos(-1.0, 1.0);
    std::uniform_real_distribution<double> width(0.6, 1.0);
    std::uniform_real_distribution<double> wave(-1.0, 1.0);
    const Field a = gaussian_wavepacket(kUGrid, pos(rng), width(rng), wave(rng));
    const Field b = gaussian_wavepacket(kUGrid, pos(rng), width(rng), wave(rng));
    Field sum(kUGrid);
    for (int j = 0; j < kUGrid.n; ++j) {
        sum.values[j] = a.values[j] + cdouble(0.35, 0.2) * b.values[j];
    }
    return sum.normalize();
}

double sup_distance(const SmearedState& a, const SmearedState& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.values().size(); ++i) {
        worst = std::max(worst, std::abs(a.values()[i] - b.values()[i]));
    }
    return worst;
}

}  // namespace

TEST_SUITE("measurement") {

TEST_CASE("position density adds the kernel variance to the packet variance") {
    const SmearedState state = product_state(0.0, 1.0);
    const Density dens = position_density(state);
    CHECK(rel(dens.integral(), 1.0) < 1e-9);
    const DensityStats st = dens.stats();
    CHECK(std::abs(st.mean) < 1e-9);
    CHECK(rel(st.variance, 1.0 + 0.25) < 1e-6);
}

TEST_CASE("momentum density adds the conjugate kernel variance") {
    const SmearedState state = product_state(0.0, 1.0);
    const Density dens = momentum_density(state);
    CHECK(rel(dens.integral(), 1.0) < 1e-9);
    const DensityStats st = dens.stats();
    CHECK(std::abs(st.mean) < 1e-9);
    // Delta p^2 = hbar^2 / (4 w^2) + (beta / 2 sigma)^2 = 0.25 + 0.01.
    CHECK(rel(st.variance, 0.26) < 1e-8);
}

TEST_CASE("generalized moments follow the packet placement") {
    const SmearedState state = product_state(2.0, 0.8, 1.5);
    CHECK(rel(generalized_mean(state, Axis::position), 2.0) < 1e-6);
    CHECK(rel(generalized_mean(state, Axis::momentum), kParams.hbar * 1.5) < 1e-6);
    CHECK(rel(generalized_variance(state, Axis::position), 0.64 + 0.25) < 1e-6);
    CHECK(rel(generalized_variance(state, Axis::momentum),
              1.0 / (4.0 * 0.64) + 0.01) < 1e-6);
}

TEST_CASE("variances are additive on separable states for random packets") {
    const SmearingKernel g = default_kernel();
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const Field psi = random_packet(seed);
        const SmearedState state = smear(psi, g, kParams);

        const double mean_x = field_moment(psi, 1).value;
        const double var_x = field_moment(psi, 2, mean_x).value;
        CHECK(std::abs(generalized_variance(state, Axis::position) - var_x - 0.25) < 1e-6);

        const Field psi_p = transform(psi, kParams.hbar);
        const double mean_p = field_moment(psi_p, 1).value;
        const double var_p = field_moment(psi_p, 2, mean_p).value;
        CHECK(std::abs(generalized_variance(state, Axis::momentum) - var_p - 0.01) < 1e-6);
    }
}

TEST_CASE("generalized widths dominate the kernel widths") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const SmearedState state = smear(random_packet(seed), default_kernel(), kParams);
        CHECK(std::sqrt(generalized_variance(state, Axis::position)) >= kParams.sigma_g);
        CHECK(std::sqrt(generalized_variance(state, Axis::momentum)) >=
              kParams.sigma_g_tilde());
    }
}

TEST_CASE("momentum density of a non-product state matches the representation sums") {
    SmearedState state = product_state(0.3, 1.1);
    // Twist the phases so the state no longer factorizes.
    for (int j = 0; j < state.nu(); ++j) {
        for (int k = 0; k < state.nv(); ++k) {
            const double u = state.u_grid().coord(j);
            const double v = state.v_grid().coord(k);
            state.at(j, k) *= std::polar(1.0, 0.4 * u * v);
        }
    }
    state.clear_factors();
    state.normalize();

    const Density dens = momentum_density(state);
    CHECK(rel(dens.integral(), 1.0) < 1e-9);
    const DensityStats st = dens.stats();

    // Independent route: moments of p + w straight off the double momentum
    // lattice (smooth state, no weight near the mode cutoffs).
    const MomentumRep rep = momentum_representation(state);
    double mean = 0.0, second = 0.0;
    for (int j = 0; j < rep.p_lattice.n; ++j) {
        for (int k = 0; k < rep.w_lattice.n; ++k) {
            const double s = rep.p_lattice.coord(j) + rep.w_lattice.coord(k);
            const double weight =
                std::norm(rep.values[static_cast<std::size_t>(j) * rep.w_lattice.n + k]) *
                rep.measure();
            mean += s * weight;
            second += s * s * weight;
        }
    }
    CHECK(std::abs(st.mean - mean) < 1e-6);
    CHECK(std::abs(st.variance - (second - mean * mean)) < 1e-6);
}

TEST_CASE("position collapse reproduces the gaussian posterior closed form") {
    const SmearedState state = product_state(0.0, 1.0);
    const SmearedState after = collapse_position(state, 1.0);
    CHECK(rel(after.norm_squared(), 1.0) < 1e-9);

    // Posterior factor psi'(u) ~ psi(u) g(r - u): a gaussian product with
    // mean r sigma_psi^2 / (sigma_psi^2 + sigma_g^2) = 0.8 and variance
    // (sigma_psi^-2 + sigma_g^-2)^-1 = 0.2 at r = 1, width 1, sigma_g = 1/2.
    const Field& posterior = after.unprimed_factor();
    const double mean = field_moment(posterior, 1).value;
    const double var = field_moment(posterior, 2, mean).value;
    CHECK(rel(mean, 0.8) < 1e-6);
    CHECK(rel(var, 0.2) < 1e-6);

    // The observable density of the collapsed state carries the kernel width
    // on top of the posterior width.
    const DensityStats st = position_density(after).stats();
    CHECK(rel(st.mean, 0.8) < 1e-6);
    CHECK(rel(st.variance, 0.2 + 0.25) < 1e-6);
}

TEST_CASE("momentum collapse reproduces the conjugate gaussian posterior") {
    // A wide geometry width (beta = 1, sigma_g_tilde = 1) keeps the posterior
    // momentum width resolvable on the conjugate lattice.
    const SmearParams wide{1.0, 1.0, 0.5};
    const SmearingKernel g = SmearingKernel::gaussian(wide.sigma_g, wide.beta,
                                                      auto_kernel_grid(kUGrid, wide.sigma_g));
    const SmearedState state = smear(gaussian_wavepacket(kUGrid, 0.0, 1.0), g, wide);
    const double before = generalized_variance(state, Axis::momentum);
    CHECK(rel(before, 0.25 + 1.0) < 1e-6);

    const SmearedState after = collapse_momentum(state, 0.0);
    CHECK(rel(after.norm_squared(), 1.0) < 1e-9);
    // Packet momentum width 1/2, kernel momentum width 1, outcome 0:
    // posterior variance (4 + 1)^-1 = 0.2, observable variance 0.2 + 1.
    const DensityStats st = momentum_density(after).stats();
    CHECK(std::abs(st.mean) < 1e-6);
    CHECK(rel(st.variance, 0.2 + 1.0) < 1e-3);
    CHECK(generalized_variance(after, Axis::momentum) < before);
}

TEST_CASE("collapse rejects hopeless outcomes") {
    const SmearedState state = product_state(0.0, 0.5);
    // In the window but below the probability floor.
    CHECK_THROWS_AS(collapse_position(state, 6.0), DomainError);
    CHECK_THROWS_AS(collapse_momentum(state, 9.0), DomainError);
    // Outside the density window entirely.
    CHECK_THROWS_AS(collapse_position(state, 30.0), DomainError);
    CHECK_THROWS_AS(collapse_momentum(state, 30.0), DomainError);
}

TEST_CASE("outcome sampling is seeded and statistically sound") {
    const SmearedState state = product_state(0.0, 1.0);
    CHECK(sample_outcome(state, Axis::position, 42) ==
          sample_outcome(state, Axis::position, 42));

    const int draws = 400;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < draws; ++i) {
        const double x = sample_outcome(state, Axis::position, 1000 + i);
        sum += x;
        sum2 += x * x;
    }
    const double mean = sum / draws;
    const double var = sum2 / draws - mean * mean;
    // Four-sigma bands around the exact outcome statistics (variance 1.25).
    CHECK(std::abs(mean) < 4.0 * std::sqrt(1.25 / draws));
    CHECK(var > 1.25 * 0.7);
    CHECK(var < 1.25 * 1.3);
}

TEST_CASE("operator and state pictures give identical moments") {
    const SmearingKernel g = default_kernel();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Field psi = random_packet(seed);
        const SmearedState state = smear(psi, g, kParams);
        for (Axis axis : {Axis::position, Axis::momentum}) {
            for (int order = 0; order <= 4; ++order) {
                const double op = smeared_operator_moment(psi, g, kParams, axis, order);
                const double st = smeared_state_moment(state, axis, order);
                CHECK(std::abs(op - st) / std::max(1.0, std::abs(st)) < 1e-9);
            }
        }
    }
}

TEST_CASE("sequential measurement equals iterated collapse and keeps memory") {
    const SmearingKernel g = default_kernel();
    const Field psi = gaussian_wavepacket(kUGrid, 0.0, 1.0);
    const OutcomeHistory history{{Axis::position, 0.5}, {Axis::position, -0.25}};

    // Dual pipeline: one-shot operator chain vs outcome-by-outcome collapse.
    const SmearedState chained = sequential_measure(psi, g, kParams, history);
    SmearedState stepped = smear(psi, g, kParams);
    for (const Outcome& o : history) {
        stepped = collapse_position(stepped, o.value);
    }
    CHECK(sup_distance(chained, stepped) < 1e-9);

    // The factors commute, so the order of outcomes cannot matter.
    const OutcomeHistory swapped{{Axis::position, -0.25}, {Axis::position, 0.5}};
    CHECK(sup_distance(chained, sequential_measure(psi, g, kParams, swapped)) < 1e-12);

    // But the chain remembers every outcome: dropping one changes the state.
    const OutcomeHistory shorter{{Axis::position, -0.25}};
    CHECK(sup_distance(chained, sequential_measure(psi, g, kParams, shorter)) > 1e-3);

    // Empty history is plain smearing.
    CHECK(sup_distance(sequential_measure(psi, g, kParams, {}), smear(psi, g, kParams)) <
          1e-12);
}

TEST_CASE("sequential measurement rejects momentum outcomes") {
    const OutcomeHistory bad{{Axis::momentum, 0.0}};
    CHECK_THROWS_AS(
        sequential_measure(gaussian_wavepacket(kUGrid, 0.0, 1.0), default_kernel(), kParams, bad),
        DomainError);
}

TEST_CASE("collapse requires product factors") {
    SmearedState state = product_state(0.0, 1.0);
    state.clear_factors();
    CHECK_THROWS_AS(collapse_position(state, 0.5), DomainError);
    CHECK_THROWS_AS(state.unprimed_factor(), DomainError);
}

}  // TEST_SUITE

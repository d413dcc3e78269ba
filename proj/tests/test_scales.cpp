// Physical-scale oracles. The frozen numbers below were computed separately
// (double precision, CGS) from the closed forms:
//   l_Pl = sqrt(hbar G / c^3)       m_Pl = sqrt(hbar c / G)
//   l_dS = sqrt(3 / Lambda)         m_dS = hbar / (c l_dS)
//   sigma_g = sqrt(2) l_Pl          sigma_g_tilde = m_dS c / 2
//   beta = 2 sigma_g sigma_g_tilde
//   rho_Lambda = Lambda c^2 / (8 pi G)
//   rho_Pl = (3 / 4 pi) m_Pl / l_Pl^3
//   l_opt = 2^{1/4} sqrt(l_Pl l_dS) m_opt = 2^{-1/4} sqrt(m_Pl m_dS)
// with hbar = 1.054571817e-27 erg s, c = 2.99792458e10 cm/s,
// G = 6.674e-8 cm^3/(g s^2), Lambda = 1.1e-56 cm^-2.

#include <doctest.h>

#include <qsmear/errors.hpp>
#include <qsmear/scales.hpp>

#include <cmath>

using namespace qsmear;

namespace {

constexpr double kPlanckLength = 1.61621869937347153e-33;    // cm
constexpr double kPlanckMass = 2.17648325746657350e-05;      // g
constexpr double kDeSitterLength = 1.65144564768954099e+28;  // cm
constexpr double kDeSitterMass = 2.13005674423022647e-66;    // g
constexpr double kSigmaG = 2.28567840441496772e-33;          // cm
constexpr double kSigmaGTilde = 3.19287473516128453e-56;     // g cm/s
constexpr double kBeta = 1.45957696603206149e-88;            // erg s
constexpr double kBetaOverHbar = 1.38404700609599305e-61;
constexpr double kDarkEnergyDensity = 5.89397146606026784e-30;  // g/cm^3
constexpr double kPlanckDensity = 1.23074006846286168e+93;      // g/cm^3
constexpr double kOptimalLength = 6.14383728055119694e-03;      // cm
constexpr double kOptimalMass = 5.72553077003883761e-36;        // g

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_SUITE("scales") {

TEST_CASE("planck and de sitter scales match the frozen CGS oracles") {
    const PhysicalConstants consts;
    const LengthMass pl = planck_scales(consts);
    const LengthMass ds = desitter_scales(consts);
    CHECK(rel(pl.length, kPlanckLength) < 1e-12);
    CHECK(rel(pl.mass, kPlanckMass) < 1e-12);
    CHECK(rel(ds.length, kDeSitterLength) < 1e-12);
    CHECK(rel(ds.mass, kDeSitterMass) < 1e-12);
}

TEST_CASE("planck scales in d = 4 natural units follow the 1/(d-1) exponents") {
    // hbar = G = c = 2 makes every ratio inside the roots nontrivial:
    // l_Pl = (hbar G / c^3)^{1/3} = 0.5^{1/3}, m_Pl = (hbar^2 / G)^{1/3} = 2^{1/3}.
    PhysicalConstants consts{2.0, 2.0, 2.0, 3.0, 4};
    const LengthMass pl = planck_scales(consts);
    CHECK(rel(pl.length, 7.93700525984099792e-01) < 1e-14);
    CHECK(rel(pl.mass, 1.25992104989487319e+00) < 1e-14);
}

TEST_CASE("smearing widths and beta match the frozen oracles") {
    const PhysicalConstants consts;
    const SmearingWidths w = smearing_widths(consts);
    const BetaScale b = beta_scale(consts);
    CHECK(rel(w.sigma_g, kSigmaG) < 1e-12);
    CHECK(rel(w.sigma_g_tilde, kSigmaGTilde) < 1e-12);
    CHECK(rel(b.value, kBeta) < 1e-12);
    CHECK(rel(b.value / consts.hbar, kBetaOverHbar) < 1e-12);
}

TEST_CASE("the width-product and density routes to beta agree") {
    SUBCASE("observed constants") {
        const BetaScale b = beta_scale(PhysicalConstants{});
        CHECK(rel(b.via_widths, b.via_densities) < 1e-12);
        CHECK(b.value == b.via_widths);
    }
    SUBCASE("skewed constants and higher dimension") {
        PhysicalConstants consts{0.7, 1.9, 2.3e-4, 6.1e-3, 5};
        const BetaScale b = beta_scale(consts);
        CHECK(rel(b.via_widths, b.via_densities) < 1e-12);
    }
}

TEST_CASE("energy densities match the frozen oracles") {
    const PhysicalConstants consts;
    CHECK(rel(dark_energy_density(consts), kDarkEnergyDensity) < 1e-12);
    CHECK(rel(planck_density(consts), kPlanckDensity) < 1e-12);
}

TEST_CASE("optimal scales sit at the geometric means and pass the density crosscheck") {
    const PhysicalConstants consts;
    const OptimalScales opt = optimal_scales(consts);
    CHECK(rel(opt.length, kOptimalLength) < 1e-12);
    CHECK(rel(opt.mass, kOptimalMass) < 1e-12);
    // (3/4pi) m / l^3 reproduces the dark energy density in d = 3.
    CHECK(rel(opt.density_crosscheck, dark_energy_density(consts)) < 1e-12);
    // Index-free product identity: l m = sqrt(l_Pl l_dS m_Pl m_dS).
    const LengthMass pl = planck_scales(consts);
    const LengthMass ds = desitter_scales(consts);
    CHECK(rel(opt.length * opt.mass,
              std::sqrt(pl.length * ds.length * pl.mass * ds.mass)) < 1e-12);
}

TEST_CASE("compute_scales bundles consistent values") {
    const PhysicalScales s = compute_scales(PhysicalConstants{});
    CHECK(rel(2.0 * s.sigma_g * s.sigma_g_tilde, s.beta) < 1e-15);
    CHECK(s.planck_length < s.optimal_length);
    CHECK(s.optimal_length < s.desitter_length);
    CHECK(s.desitter_mass < s.optimal_mass);
    CHECK(s.optimal_mass < s.planck_mass);
    CHECK(rel(s.beta_over_hbar, s.beta / s.constants.hbar) < 1e-15);
    CHECK(s.beta < s.constants.hbar);
}

TEST_CASE("ball volume coefficients take the known low-dimension values") {
    CHECK(rel(ball_volume_coefficient(1), 2.0) < 1e-14);
    CHECK(rel(ball_volume_coefficient(2), M_PI) < 1e-14);
    CHECK(rel(ball_volume_coefficient(3), 4.0 * M_PI / 3.0) < 1e-14);
    CHECK(rel(ball_volume_coefficient(4), M_PI * M_PI / 2.0) < 1e-14);
    // lgamma keeps huge dimensions finite and positive.
    CHECK(ball_volume_coefficient(400) > 0.0);
    CHECK(std::isfinite(ball_volume_coefficient(400)));
}

TEST_CASE("vacuum mode integral matches the closed-form antiderivative") {
    // Int k^2 sqrt(k^2 + m^2) dk
    //   = k (m^2 + 2 k^2) sqrt(k^2 + m^2) / 8 - (m^4 / 8) asinh(k / m) + C.
    auto antiderivative = [](double k, double m) {
        const double r = std::sqrt(k * k + m * m);
        return k * r * (m * m + 2.0 * k * k) / 8.0 - std::pow(m, 4) / 8.0 * std::asinh(k / m);
    };
    struct Case {
        double k_min, k_max, mass;
    };
    for (const Case& c : {Case{1e-3, 7.0, 2.0}, Case{0.5, 120.0, 0.25}, Case{2.0, 3.0, 5.0}}) {
        const double exact = antiderivative(c.k_max, c.mass) - antiderivative(c.k_min, c.mass);
        CHECK(rel(vacuum_mode_integral(c.k_min, c.k_max, c.mass), exact) < 1e-10);
    }
}

TEST_CASE("vacuum density estimate lands near Lambda c^2 / G") {
    const PhysicalConstants consts;
    const double rho = vacuum_density_estimate(consts);
    const double target = consts.Lambda * consts.c * consts.c / consts.G;
    // The mode sum over [2 pi / l_dS, 2 pi / l_opt] overshoots the target by a
    // factor of roughly 5.5; the point is the order of magnitude.
    CHECK(rho / target > 2.0);
    CHECK(rho / target < 15.0);
}

TEST_CASE("horizon mass interpolates between the de sitter and planck masses") {
    const PhysicalConstants consts;
    const LengthMass pl = planck_scales(consts);
    const LengthMass ds = desitter_scales(consts);
    CHECK(rel(horizon_mass(ds.length, consts), ds.mass) < 1e-12);
    CHECK(rel(horizon_mass(pl.length, consts), pl.mass) < 1e-12);
    CHECK(rel(horizon_momentum_spread(pl.length, consts), pl.mass * consts.c) < 1e-12);
    CHECK(rel(horizon_momentum_spread(ds.length, consts),
              std::sqrt(pl.mass * ds.mass) * consts.c) < 1e-12);
}

TEST_CASE("finite-universe bounds reduce to the planck and de sitter scales") {
    const PhysicalConstants consts;
    const UncertaintyBounds b = finite_universe_bounds(consts);
    const LengthMass pl = planck_scales(consts);
    const LengthMass ds = desitter_scales(consts);
    CHECK(rel(b.x_min, 2.0 * pl.length) < 1e-12);
    CHECK(rel(b.x_max, std::sqrt(ds.length * ds.length + 2.0 * pl.length * pl.length)) < 1e-12);
    CHECK(rel(b.p_min, ds.mass * consts.c / std::sqrt(2.0)) < 1e-12);
    CHECK(rel(b.p_max, 0.5 * consts.c *
                           std::sqrt(0.5 * pl.mass * pl.mass + ds.mass * ds.mass)) < 1e-12);
    CHECK(b.x_min < b.x_max);
    CHECK(b.p_min < b.p_max);
}

TEST_CASE("every d = 3 scale lands within a factor ten of its quoted magnitude") {
    const PhysicalScales s = compute_scales(PhysicalConstants{});
    auto within_decade = [](double value, double quoted) {
        const double r = value / quoted;
        return r > 0.1 && r < 10.0;
    };
    CHECK(within_decade(s.planck_length, 1.6e-33));
    CHECK(within_decade(s.planck_mass, 2.2e-5));
    CHECK(within_decade(s.desitter_length, 1e28));
    CHECK(within_decade(s.desitter_mass, 1e-66));
    CHECK(within_decade(s.beta_over_hbar, 1e-61));
    CHECK(within_decade(s.dark_energy_density, 1e-30));
    CHECK(within_decade(s.optimal_length, 1e-2));
    CHECK(within_decade(s.optimal_mass, 1e-35));
}

TEST_CASE("invalid constants are rejected") {
    PhysicalConstants bad;
    bad.hbar = -1.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = PhysicalConstants{};
    bad.Lambda = 0.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = PhysicalConstants{};
    bad.d = 1;  // the 1/(d-1) exponents degenerate
    CHECK_THROWS_AS(planck_scales(bad), DomainError);
    CHECK_THROWS_AS(vacuum_density_estimate(PhysicalConstants::natural(3.0, 4)), DomainError);
}

}  // TEST_SUITE

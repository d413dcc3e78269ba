#include <qsmear/scales.hpp>

#include <qsmear/errors.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <string>

namespace qsmear {

void PhysicalConstants::validate() const {
    if (d < 2)
        throw DomainError("spatial dimension must be >= 2, got " + std::to_string(d));
    if (!(hbar > 0.0) || !(c > 0.0) || !(G > 0.0))
        throw DomainError("hbar, c and G must all be positive");
    if (!(Lambda > 0.0))
        throw DomainError("Lambda must be positive (de Sitter background)");
}

void SmearParams::validate() const {
    if (!(hbar > 0.0))
        throw DomainError("hbar must be positive");
    if (!(beta > 0.0))
        throw DomainError("beta must be positive");
    if (!(sigma_g > 0.0))
        throw DomainError("sigma_g must be positive");
}

double ball_volume_coefficient(int d) {
    if (d < 1)
        throw DomainError("ball volume coefficient needs d >= 1");
    const double x = 0.5 * d;
    return std::exp(x * std::log(M_PI) - std::lgamma(x + 1.0));
}

LengthMass planck_scales(const PhysicalConstants& consts) {
    consts.validate();
    const double e = 1.0 / (consts.d - 1);
    const double length = std::pow(consts.hbar * consts.G / std::pow(consts.c, 3), e);
    const double mass =
        std::pow(std::pow(consts.hbar, consts.d - 2) * std::pow(consts.c, 4 - consts.d) / consts.G, e);
    return {length, mass};
}

LengthMass desitter_scales(const PhysicalConstants& consts) {
    consts.validate();
    const double length = std::sqrt(consts.d / consts.Lambda);
    const double mass = consts.hbar / (consts.c * length);
    return {length, mass};
}

SmearingWidths smearing_widths(const PhysicalConstants& consts) {
    const auto pl = planck_scales(consts);
    const auto ds = desitter_scales(consts);
    const double sigma = std::pow(2.0, 1.0 / (consts.d - 1)) * pl.length;
    const double sigma_tilde = 0.5 * ds.mass * consts.c;
    return {sigma, sigma_tilde};
}

BetaScale beta_scale(const PhysicalConstants& consts) {
    const auto w = smearing_widths(consts);
    const double via_widths = 2.0 * w.sigma_g * w.sigma_g_tilde;

    const double rho_ratio = dark_energy_density(consts) / planck_density(consts);
    const double exponent = (consts.d + 1.0) / (2.0 * (consts.d - 1.0));
    const double via_densities = std::pow(2.0, exponent) * consts.hbar * std::sqrt(rho_ratio);

    if (std::abs(via_widths - via_densities) > 1e-12 * via_widths)
        throw Error("beta route mismatch: width product and density ratio disagree");
    return {via_widths, via_widths, via_densities};
}

double dark_energy_density(const PhysicalConstants& consts) {
    consts.validate();
    const double omega = ball_volume_coefficient(consts.d);
    return consts.Lambda * consts.c * consts.c / (2.0 * consts.d * omega * consts.G);
}

double planck_density(const PhysicalConstants& consts) {
    const auto pl = planck_scales(consts);
    const double omega = ball_volume_coefficient(consts.d);
    return pl.mass / (omega * std::pow(pl.length, consts.d));
}

OptimalScales optimal_scales(const PhysicalConstants& consts) {
    const auto pl = planck_scales(consts);
    const auto ds = desitter_scales(consts);
    const double length = std::pow(2.0, 0.25) * std::sqrt(pl.length * ds.length);
    const double mass = std::pow(2.0, -0.25) * std::sqrt(pl.mass * ds.mass);
    const double density = (3.0 / (4.0 * M_PI)) * mass / std::pow(length, 3);
    return {length, mass, density};
}

double vacuum_mode_integral(double k_min, double k_max, double k_mass) {
    if (!(k_min >= 0.0) || !(k_max > k_min))
        throw DomainError("vacuum mode integral needs 0 <= k_min < k_max");
    const auto integrand = [k_mass](double k) {
        return k * k * std::sqrt(k * k + k_mass * k_mass);
    };
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        integrand, k_min, k_max, 10, 1e-12);
}

double vacuum_density_estimate(const PhysicalConstants& consts) {
    if (consts.d != 3)
        throw DomainError("vacuum density estimate is defined for d = 3");
    const auto opt = optimal_scales(consts);
    const auto ds = desitter_scales(consts);
    const double k_uv = 2.0 * M_PI / opt.length;
    const double k_ir = 2.0 * M_PI / ds.length;
    // Mode counting measure d^3k/(2pi)^3 = 4 pi k^2 dk / (2 pi)^3.
    const double measure = 4.0 * M_PI / std::pow(2.0 * M_PI, 3);
    return (consts.hbar / consts.c) * measure * vacuum_mode_integral(k_ir, k_uv, k_uv);
}

double horizon_mass(double hubble_length, const PhysicalConstants& consts) {
    consts.validate();
    if (!(hubble_length > 0.0))
        throw DomainError("horizon length must be positive");
    return consts.hbar / (hubble_length * consts.c);
}

double horizon_momentum_spread(double hubble_length, const PhysicalConstants& consts) {
    const double m_h = horizon_mass(hubble_length, consts);
    const auto pl = planck_scales(consts);
    return std::sqrt(pl.mass * m_h) * consts.c;
}

UncertaintyBounds finite_universe_bounds(const PhysicalConstants& consts) {
    const auto pl = planck_scales(consts);
    const auto ds = desitter_scales(consts);
    UncertaintyBounds b;
    b.x_min = 2.0 * pl.length;
    b.x_max = std::sqrt(ds.length * ds.length + 2.0 * pl.length * pl.length);
    b.p_min = ds.mass * consts.c / std::sqrt(2.0);
    b.p_max = 0.5 * consts.c * std::sqrt(0.5 * pl.mass * pl.mass + ds.mass * ds.mass);
    return b;
}

PhysicalScales compute_scales(const PhysicalConstants& consts) {
    PhysicalScales s;
    s.constants = consts;
    const auto pl = planck_scales(consts);
    const auto ds = desitter_scales(consts);
    const auto w = smearing_widths(consts);
    const auto b = beta_scale(consts);
    const auto opt = optimal_scales(consts);
    s.planck_length = pl.length;
    s.planck_mass = pl.mass;
    s.desitter_length = ds.length;
    s.desitter_mass = ds.mass;
    s.sigma_g = w.sigma_g;
    s.sigma_g_tilde = w.sigma_g_tilde;
    s.beta = b.value;
    s.beta_over_hbar = b.value / consts.hbar;
    s.dark_energy_density = dark_energy_density(consts);
    s.planck_density = planck_density(consts);
    s.optimal_length = opt.length;
    s.optimal_mass = opt.mass;
    return s;
}

}  // namespace qsmear

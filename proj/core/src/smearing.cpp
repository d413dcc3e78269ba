#include <qsmear/smearing.hpp>

#include <qsmear/errors.hpp>

#include <cmath>
#include <sstream>

namespace qsmear {

namespace {

void check_kernel_matches(const SmearingKernel& kernel, const SmearParams& params) {
    const double rel = std::abs(kernel.beta() - params.beta) / params.beta;
    if (rel > 1e-12) {
        std::ostringstream msg;
        msg << "kernel was built for beta " << kernel.beta() << " but the parameters carry "
            << params.beta;
        throw DomainError(msg.str());
    }
}

}  // namespace

SmearedState smear(const Field& psi, const SmearingKernel& kernel, const SmearParams& params) {
    params.validate();
    check_kernel_matches(kernel, params);
    const double nsq = psi.norm_squared();
    if (std::abs(nsq - 1.0) > 1e-6) {
        std::ostringstream msg;
        msg << "input wavefunction has squared norm " << nsq << ", expected 1 within 1e-6";
        throw DomainError(msg.str());
    }
    return SmearedState::product(psi, kernel, params);
}

double naive_smear_norm(const Field& psi, const SmearingKernel& kernel) {
    const Grid& ug = psi.grid;
    if (!ug.compatible_spacing(kernel.v_grid())) {
        throw DomainError("kernel and wavefunction lattices must share one spacing");
    }
    if (kernel.v_grid().n > ug.n) {
        throw DomainError("kernel window exceeds the wavefunction lattice");
    }
    // Embed g as a function of the periodic offset j - k, then divide by its
    // area so the blur is a classical average of displaced amplitudes.
    Field g_offset(ug);
    const double du = ug.spacing();
    double area = 0.0;
    for (int m = 0; m < ug.n; ++m) {
        const int signed_off = (m < ug.n / 2) ? m : m - ug.n;
        const double value = kernel.amplitude_at(signed_off * du);
        g_offset.values[m] = value;
        area += value * du;
    }
    for (cdouble& z : g_offset.values) {
        z /= area;
    }
    const Field blurred = convolve(psi, g_offset);
    return blurred.norm_squared();
}

SmearedState eigenstate_sample(double p, double p_prime, const Grid& u_grid, const Grid& v_grid,
                               const SmearParams& params) {
    params.validate();
    const double dp = 2.0 * M_PI * params.hbar / u_grid.extent;
    const double dw = 2.0 * M_PI * params.beta / v_grid.extent;
    const double w = p_prime - p;
    const double mode_p = p / dp;
    const double mode_w = w / dw;
    if (std::abs(mode_p - std::round(mode_p)) > 1e-9) {
        std::ostringstream msg;
        msg << "p = " << p << " is not a lattice momentum (spacing " << dp << ")";
        throw DomainError(msg.str());
    }
    if (std::abs(mode_w - std::round(mode_w)) > 1e-9) {
        std::ostringstream msg;
        msg << "p' - p = " << w << " is not on the geometry momentum lattice (spacing " << dw
            << ")";
        throw DomainError(msg.str());
    }
    SmearedState state(u_grid, v_grid, params);
    const double amp = 1.0 / (2.0 * M_PI * std::sqrt(params.hbar * params.beta));
    for (int j = 0; j < state.nu(); ++j) {
        const cdouble phase_u = std::polar(amp, p * u_grid.coord(j) / params.hbar);
        for (int k = 0; k < state.nv(); ++k) {
            state.at(j, k) = phase_u * std::polar(1.0, w * v_grid.coord(k) / params.beta);
        }
    }
    return state;
}

}  // namespace qsmear

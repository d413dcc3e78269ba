#include <qsmear/dynamics.hpp>

#include <qsmear/errors.hpp>

#include "fft.hpp"
#include "state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qsmear {

namespace {

void check_params_match(const Hamiltonian& h, const SmearParams& params) {
    if (std::abs(h.hbar - params.hbar) > 1e-12 * params.hbar ||
        std::abs(h.beta - params.beta) > 1e-12 * params.beta) {
        throw DomainError("Hamiltonian and state disagree on hbar or beta");
    }
}

/// Signed mode number of a raw DFT index.
int raw_mode(int k, int n) { return (k < n / 2) ? k : k - n; }

/// Largest magnitudes of the conjugate coordinates on the current lattices.
double max_generalized_momentum(const SmearedState& state) {
    const double p_max = M_PI * state.params().hbar * state.nu() / state.u_grid().extent;
    const double w_max = M_PI * state.params().beta * state.nv() / state.v_grid().extent;
    return p_max + w_max;
}

double max_abs(const std::vector<double>& values) {
    double m = 0.0;
    for (double v : values) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

/// x' lattice index for the (j, k) cell: u_j + v_k lands on index
/// (j + k - nv/2) mod nu since both lattices share one spacing.
inline int xprime_index(int j, int k, int nu, int nv) {
    return ((j + k - nv / 2) % nu + nu) % nu;
}

/// One Strang-split run with a step of either sign. Kinetic factors are exact
/// lattice phases, so the scheme is unitary to roundoff at any dt.
SmearedState evolve_signed(const SmearedState& state, const Hamiltonian& h, double dt,
                           int steps) {
    const int nu = state.nu();
    const int nv = state.nv();
    const double hbar = state.params().hbar;
    const double beta = state.params().beta;
    const double total_action = hbar + beta;

    std::vector<double> p_axis(nu);
    for (int j = 0; j < nu; ++j) {
        p_axis[j] = 2.0 * M_PI * hbar * raw_mode(j, nu) / state.u_grid().extent;
    }
    std::vector<double> w_axis(nv);
    for (int k = 0; k < nv; ++k) {
        w_axis[k] = 2.0 * M_PI * beta * raw_mode(k, nv) / state.v_grid().extent;
    }

    std::vector<cdouble> half_kin(static_cast<std::size_t>(nu) * nv);
    std::vector<cdouble> full_kin(half_kin.size());
    for (int j = 0; j < nu; ++j) {
        for (int k = 0; k < nv; ++k) {
            const double q = p_axis[j] + w_axis[k];
            const double theta = q * q / (2.0 * h.mass) * dt / total_action;
            half_kin[static_cast<std::size_t>(j) * nv + k] = std::polar(1.0, -0.5 * theta);
            full_kin[static_cast<std::size_t>(j) * nv + k] = std::polar(1.0, -theta);
        }
    }
    std::vector<cdouble> pot_phase(nu);
    for (int l = 0; l < nu; ++l) {
        pot_phase[l] = std::polar(1.0, -h.potential[l] * dt / total_action);
    }

    SmearedState result = state;
    result.clear_factors();
    std::vector<cdouble>& a = result.values();
    const double inv_count = 1.0 / (static_cast<double>(nu) * nv);

    auto kinetic = [&](const std::vector<cdouble>& table) {
        detail::dft_2d(a, nu, nv, -1);
        for (std::size_t i = 0; i < a.size(); ++i) {
            a[i] *= table[i] * inv_count;
        }
        detail::dft_2d(a, nu, nv, 1);
    };
    auto potential = [&] {
        for (int j = 0; j < nu; ++j) {
            const int l0 = ((j - nv / 2) % nu + nu) % nu;
            cdouble* row = a.data() + static_cast<std::size_t>(j) * nv;
            for (int k = 0; k < nv; ++k) {
                row[k] *= pot_phase[(l0 + k) % nu];
            }
        }
    };

    kinetic(half_kin);
    potential();
    for (int step = 1; step < steps; ++step) {
        kinetic(full_kin);
        potential();
    }
    kinetic(half_kin);
    return result;
}

}  // namespace

void Hamiltonian::validate(const Grid& u_grid) const {
    if (!(mass > 0.0)) {
        throw DomainError("mass must be positive");
    }
    if (!(hbar > 0.0) || beta < 0.0) {
        throw DomainError("actions must satisfy hbar > 0 and beta >= 0");
    }
    if (static_cast<int>(potential.size()) != u_grid.n ||
        static_cast<int>(potential_derivative.size()) != u_grid.n) {
        throw DomainError("potential samples do not match the x' lattice");
    }
    for (double v : potential) {
        if (!std::isfinite(v)) {
            throw DomainError("potential must be finite and real");
        }
    }
}

bool Hamiltonian::free() const {
    return std::all_of(potential.begin(), potential.end(), [](double v) { return v == 0.0; });
}

Hamiltonian free_hamiltonian(double mass, const SmearParams& params, const Grid& u_grid) {
    Hamiltonian h;
    h.mass = mass;
    h.hbar = params.hbar;
    h.beta = params.beta;
    h.potential.assign(u_grid.n, 0.0);
    h.potential_derivative.assign(u_grid.n, 0.0);
    h.validate(u_grid);
    return h;
}

Hamiltonian harmonic_hamiltonian(double mass, double omega, double center,
                                 const SmearParams& params, const Grid& u_grid) {
    Hamiltonian h;
    h.mass = mass;
    h.hbar = params.hbar;
    h.beta = params.beta;
    h.potential.resize(u_grid.n);
    h.potential_derivative.resize(u_grid.n);
    for (int j = 0; j < u_grid.n; ++j) {
        const double x = u_grid.coord(j) - center;
        h.potential[j] = 0.5 * mass * omega * omega * x * x;
        h.potential_derivative[j] = mass * omega * omega * x;
    }
    h.validate(u_grid);
    return h;
}

SmearedState apply_P(const SmearedState& state) {
    MomentumRep rep = momentum_representation(state);
    for (int j = 0; j < rep.p_lattice.n; ++j) {
        const double p = rep.p_lattice.coord(j);
        cdouble* row = rep.values.data() + static_cast<std::size_t>(j) * rep.w_lattice.n;
        for (int k = 0; k < rep.w_lattice.n; ++k) {
            row[k] *= p + rep.w_lattice.coord(k);
        }
    }
    return position_representation(rep, state.u_grid(), state.v_grid(), state.params());
}

SmearedState apply_X(const SmearedState& state) {
    SmearedState result = state;
    result.clear_factors();
    for (int j = 0; j < result.nu(); ++j) {
        const double u = result.u_grid().coord(j);
        for (int k = 0; k < result.nv(); ++k) {
            result.at(j, k) *= u + result.v_grid().coord(k);
        }
    }
    return result;
}

MomentumRep apply_X_momentum(const MomentumRep& rep) {
    const int np = rep.p_lattice.n;
    const int nw = rep.w_lattice.n;
    const double hbar = rep.params.hbar;
    const double beta = rep.params.beta;

    // i * scale * d/dq along one axis, treating the rep as periodic over the
    // conjugate window; the mode conjugate to q at scale s has wavenumber
    // 2 pi m / extent regardless of s, so the derivative needs no scale in
    // its phase, only the i*s prefactor.
    auto derivative_term = [&](int axis, double scale) {
        std::vector<cdouble> work = rep.values;
        detail::dft_axis(work, np, nw, axis, -1);
        const Grid& g = (axis == 0) ? rep.p_lattice : rep.w_lattice;
        const int n = g.n;
        for (int j = 0; j < np; ++j) {
            for (int k = 0; k < nw; ++k) {
                const int idx = (axis == 0) ? j : k;
                const int m = raw_mode(idx, n);
                cdouble factor(0.0, 2.0 * M_PI * m / g.extent);
                if (m == -n / 2) {
                    factor = 0.0;  // unpaired mode has no odd-derivative partner
                }
                work[static_cast<std::size_t>(j) * nw + k] *=
                    factor * cdouble(0.0, scale) / static_cast<double>(n);
            }
        }
        detail::dft_axis(work, np, nw, axis, 1);
        return work;
    };

    const std::vector<cdouble> dp_term = derivative_term(0, hbar);
    const std::vector<cdouble> dw_term = derivative_term(1, beta);
    MomentumRep out = rep;
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        out.values[i] = dp_term[i] + dw_term[i];
    }
    return out;
}

double observable_expectation(const SmearedState& state, ObservableKind kind) {
    double total = 0.0;
    if (kind == ObservableKind::X) {
        const double meas = state.measure();
        for (int j = 0; j < state.nu(); ++j) {
            const double u = state.u_grid().coord(j);
            for (int k = 0; k < state.nv(); ++k) {
                total += (u + state.v_grid().coord(k)) * std::norm(state.at(j, k)) * meas;
            }
        }
    } else {
        const MomentumRep rep = momentum_representation(state);
        const double meas = rep.measure();
        for (int j = 0; j < rep.p_lattice.n; ++j) {
            const double p = rep.p_lattice.coord(j);
            for (int k = 0; k < rep.w_lattice.n; ++k) {
                total += (p + rep.w_lattice.coord(k)) *
                         std::norm(rep.values[static_cast<std::size_t>(j) * rep.w_lattice.n + k]) *
                         meas;
            }
        }
    }
    return total;
}

double unprimed_position_mean(const SmearedState& state) {
    double total = 0.0;
    double weighted = 0.0;
    for (int j = 0; j < state.nu(); ++j) {
        const double u = state.u_grid().coord(j);
        for (int k = 0; k < state.nv(); ++k) {
            const double d = std::norm(state.at(j, k));
            total += d;
            weighted += u * d;
        }
    }
    if (!(total > 0.0)) {
        throw DomainError("state has vanishing norm");
    }
    return weighted / total;
}

double energy_expectation(const SmearedState& state, const Hamiltonian& h) {
    h.validate(state.u_grid());
    check_params_match(h, state.params());
    const MomentumRep rep = momentum_representation(state);
    double kinetic = 0.0;
    const double pmeas = rep.measure();
    for (int j = 0; j < rep.p_lattice.n; ++j) {
        const double p = rep.p_lattice.coord(j);
        for (int k = 0; k < rep.w_lattice.n; ++k) {
            const double q = p + rep.w_lattice.coord(k);
            kinetic += q * q / (2.0 * h.mass) *
                       std::norm(rep.values[static_cast<std::size_t>(j) * rep.w_lattice.n + k]) *
                       pmeas;
        }
    }
    double pot = 0.0;
    const double meas = state.measure();
    for (int j = 0; j < state.nu(); ++j) {
        for (int k = 0; k < state.nv(); ++k) {
            pot += h.potential[xprime_index(j, k, state.nu(), state.nv())] *
                   std::norm(state.at(j, k)) * meas;
        }
    }
    return kinetic + pot;
}

double spectral_tail_fraction(const SmearedState& state) {
    const MomentumRep rep = momentum_representation(state);
    const double meas = rep.measure();
    double tail = 0.0;
    double total = 0.0;
    for (int j = 0; j < rep.p_lattice.n; ++j) {
        const bool outer_p = std::abs(j - rep.p_lattice.n / 2) >= rep.p_lattice.n / 4;
        for (int k = 0; k < rep.w_lattice.n; ++k) {
            const bool outer_w = std::abs(k - rep.w_lattice.n / 2) >= rep.w_lattice.n / 4;
            const double weight =
                std::norm(rep.values[static_cast<std::size_t>(j) * rep.w_lattice.n + k]) * meas;
            total += weight;
            if (outer_p || outer_w) {
                tail += weight;
            }
        }
    }
    return (total > 0.0) ? tail / total : 0.0;
}

SmearedState evolve(const SmearedState& state, const Hamiltonian& h, const EvolutionConfig& cfg) {
    h.validate(state.u_grid());
    check_params_match(h, state.params());
    if (cfg.steps < 0) {
        throw DomainError("step count must be nonnegative");
    }
    if (cfg.steps == 0) {
        return state;
    }
    if (!(cfg.dt > 0.0)) {
        throw DomainError("time step must be positive");
    }
    const double total_action = h.hbar + h.beta;
    const double pot_advance = max_abs(h.potential) * cfg.dt / total_action;
    if (pot_advance > M_PI / 4.0) {
        std::ostringstream msg;
        msg << "time step " << cfg.dt << " advances potential phases by " << pot_advance
            << " rad per step (limit pi/4); reduce the step";
        throw Error(msg.str());
    }
    if (!h.free()) {
        const double q = max_generalized_momentum(state);
        const double kin_advance = q * q / (2.0 * h.mass) * cfg.dt / total_action;
        if (kin_advance > M_PI) {
            std::ostringstream msg;
            msg << "time step " << cfg.dt << " advances kinetic phases by " << kin_advance
                << " rad per step (limit pi for interacting runs); reduce the step";
            throw Error(msg.str());
        }
    }
    return evolve_signed(state, h, cfg.dt, cfg.steps);
}

double default_timestep(const SmearedState& state, const Hamiltonian& h) {
    h.validate(state.u_grid());
    const double q = max_generalized_momentum(state);
    const double rate =
        (q * q / (2.0 * h.mass) + max_abs(h.potential)) / (h.hbar + h.beta);
    return 0.1 / rate;
}

double dispersion(double k, double k_prime, double mass, double hbar, double beta) {
    if (!(mass > 0.0)) {
        throw DomainError("mass must be positive");
    }
    const double q = hbar * k + beta * (k_prime - k);
    return q * q / (2.0 * mass * (hbar + beta));
}

double energy_frequency(double energy, double hbar, double beta) {
    return energy / (hbar + beta);
}

double heisenberg_residual(const SmearedState& state, const Hamiltonian& h,
                           ObservableKind kind) {
    h.validate(state.u_grid());
    check_params_match(h, state.params());
    const double dt = default_timestep(state, h) / 4.0;
    const SmearedState forward = evolve_signed(state, h, dt, 1);
    const SmearedState backward = evolve_signed(state, h, -dt, 1);
    const double rate = (observable_expectation(forward, kind) -
                         observable_expectation(backward, kind)) /
                        (2.0 * dt);
    double commutator_side = 0.0;
    if (kind == ObservableKind::X) {
        commutator_side = observable_expectation(state, ObservableKind::P) / h.mass;
    } else {
        const double meas = state.measure();
        double mean_force = 0.0;
        for (int j = 0; j < state.nu(); ++j) {
            for (int k = 0; k < state.nv(); ++k) {
                mean_force += h.potential_derivative[xprime_index(j, k, state.nu(), state.nv())] *
                              std::norm(state.at(j, k)) * meas;
            }
        }
        commutator_side = -mean_force;
    }
    return std::abs(rate - commutator_side);
}

}  // namespace qsmear

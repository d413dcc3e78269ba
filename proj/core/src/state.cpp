#include <qsmear/state.hpp>

#include <qsmear/errors.hpp>

#include "fft.hpp"
#include "state.hpp"

#include <cmath>
#include <sstream>

namespace qsmear {

namespace detail {

void scaled_transform_axis(std::vector<cdouble>& a, int n0, int n1, int axis,
                           const Grid& g, double scale, bool forward) {
    const int n = (axis == 0) ? n0 : n1;
    const int n_lines = (axis == 0) ? n1 : n0;
    const std::size_t stride = (axis == 0) ? static_cast<std::size_t>(n1) : 1;
    const double x0 = g.coord(0);
    std::vector<cdouble> line(n);

    if (forward) {
        dft_axis(a, n0, n1, axis, -1);
        const double pref = g.spacing() / std::sqrt(2.0 * M_PI * scale);
        for (int li = 0; li < n_lines; ++li) {
            const std::size_t base =
                (axis == 0) ? static_cast<std::size_t>(li) : static_cast<std::size_t>(li) * n1;
            for (int l = 0; l < n; ++l) {
                const int m = l - n / 2;
                const int k = (l + n / 2) % n;
                const cdouble phase = std::polar(1.0, -2.0 * M_PI * m * x0 / g.extent);
                line[l] = pref * phase * a[base + k * stride];
            }
            for (int l = 0; l < n; ++l) {
                a[base + l * stride] = line[l];
            }
        }
    } else {
        const double dq = 2.0 * M_PI * scale / g.extent;
        const double pref = dq / std::sqrt(2.0 * M_PI * scale);
        for (int li = 0; li < n_lines; ++li) {
            const std::size_t base =
                (axis == 0) ? static_cast<std::size_t>(li) : static_cast<std::size_t>(li) * n1;
            for (int l = 0; l < n; ++l) {
                const int m = l - n / 2;
                const int k = (l + n / 2) % n;
                const cdouble phase = std::polar(1.0, 2.0 * M_PI * m * x0 / g.extent);
                line[k] = a[base + l * stride] * phase;
            }
            for (int l = 0; l < n; ++l) {
                a[base + l * stride] = line[l];
            }
        }
        dft_axis(a, n0, n1, axis, 1);
        for (std::size_t li = 0; li < static_cast<std::size_t>(n_lines); ++li) {
            const std::size_t base = (axis == 0) ? li : li * n1;
            for (int l = 0; l < n; ++l) {
                a[base + l * stride] *= pref;
            }
        }
    }
}

}  // namespace detail

SmearedState::SmearedState(const Grid& u_grid, const Grid& v_grid, const SmearParams& params)
    : u_(u_grid), v_(v_grid), params_(params) {
    params_.validate();
    if (!u_.compatible_spacing(v_)) {
        std::ostringstream msg;
        msg << "u spacing " << u_.spacing() << " and v spacing " << v_.spacing()
            << " must agree so that u + v stays on the u lattice";
        throw DomainError(msg.str());
    }
    values_.assign(static_cast<std::size_t>(u_.n) * v_.n, cdouble(0.0));
}

SmearedState SmearedState::product(const Field& psi, const SmearingKernel& kernel,
                                   const SmearParams& params) {
    SmearedState state(psi.grid, kernel.v_grid(), params);
    const Field& g = kernel.amplitude();
    for (int j = 0; j < state.nu(); ++j) {
        for (int k = 0; k < state.nv(); ++k) {
            state.at(j, k) = psi.values[j] * g.values[k];
        }
    }
    state.set_factors(SeparableParts{psi, kernel});
    return state;
}

double SmearedState::norm_squared() const {
    double sum = 0.0;
    for (const cdouble& z : values_) {
        sum += std::norm(z);
    }
    return sum * measure();
}

SmearedState& SmearedState::normalize() {
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

const Field& SmearedState::unprimed_factor() const {
    if (!parts_) {
        throw DomainError("state carries no product factors");
    }
    return parts_->psi;
}

const SmearingKernel& SmearedState::kernel() const {
    if (!parts_) {
        throw DomainError("state carries no product factors");
    }
    return parts_->kernel;
}

double MomentumRep::norm_squared() const {
    double sum = 0.0;
    for (const cdouble& z : values) {
        sum += std::norm(z);
    }
    return sum * measure();
}

MomentumRep momentum_representation(const SmearedState& state) {
    MomentumRep rep;
    rep.p_lattice = ConjugateGrid{state.u_grid(), state.params().hbar}.lattice();
    rep.w_lattice = ConjugateGrid{state.v_grid(), state.params().beta}.lattice();
    rep.params = state.params();
    rep.values = state.values();
    detail::scaled_transform_axis(rep.values, state.nu(), state.nv(), 0, state.u_grid(),
                                  state.params().hbar, true);
    detail::scaled_transform_axis(rep.values, state.nu(), state.nv(), 1, state.v_grid(),
                                  state.params().beta, true);
    return rep;
}

SmearedState position_representation(const MomentumRep& rep, const Grid& u_grid,
                                     const Grid& v_grid, const SmearParams& params) {
    const Grid p_expect = ConjugateGrid{u_grid, params.hbar}.lattice();
    const Grid w_expect = ConjugateGrid{v_grid, params.beta}.lattice();
    if (!rep.p_lattice.same_lattice(p_expect) || !rep.w_lattice.same_lattice(w_expect)) {
        throw DomainError("momentum lattices are not conjugate to the requested position grids");
    }
    SmearedState state(u_grid, v_grid, params);
    state.values() = rep.values;
    detail::scaled_transform_axis(state.values(), state.nu(), state.nv(), 1, v_grid, params.beta,
                                  false);
    detail::scaled_transform_axis(state.values(), state.nu(), state.nv(), 0, u_grid, params.hbar,
                                  false);
    return state;
}

}  // namespace qsmear

#pragma once

#include <qsmear/constants.hpp>
#include <qsmear/kernel.hpp>

#include <optional>
#include <vector>

namespace qsmear {

/// Product decomposition of a separable two-coordinate state.
struct SeparableParts {
    Field psi;             ///< factor over u, unit discrete norm
    SmearingKernel kernel; ///< factor over v
};

/// Wavefunction over the pair (u, v) where u is the unprimed position and
/// v = x' - x the relative coordinate. Stored row-major as values[ju * nv + kv].
/// The u and v lattices must share one spacing so that u + v lands back on the
/// u lattice; the constructor enforces this.
///
/// Freshly smeared states carry their product factors, which unlock closed-form
/// fast paths downstream. Any operation that can break separability must call
/// clear_factors().
class SmearedState {
public:
    SmearedState(const Grid& u_grid, const Grid& v_grid, const SmearParams& params);

    static SmearedState product(const Field& psi, const SmearingKernel& kernel,
                                const SmearParams& params);

    const Grid& u_grid() const { return u_; }
    const Grid& v_grid() const { return v_; }
    const SmearParams& params() const { return params_; }
    int nu() const { return u_.n; }
    int nv() const { return v_.n; }
    double measure() const { return u_.spacing() * v_.spacing(); }

    cdouble& at(int ju, int kv) { return values_[static_cast<std::size_t>(ju) * v_.n + kv]; }
    const cdouble& at(int ju, int kv) const {
        return values_[static_cast<std::size_t>(ju) * v_.n + kv];
    }
    std::vector<cdouble>& values() { return values_; }
    const std::vector<cdouble>& values() const { return values_; }

    double norm_squared() const;
    SmearedState& normalize();

    bool separable() const { return parts_.has_value(); }
    /// Product factors; throws DomainError when the state is not tagged separable.
    const Field& unprimed_factor() const;
    const SmearingKernel& kernel() const;
    void set_factors(SeparableParts parts) { parts_ = std::move(parts); }
    void clear_factors() { parts_.reset(); }

private:
    Grid u_;
    Grid v_;
    SmearParams params_;
    std::vector<cdouble> values_;
    std::optional<SeparableParts> parts_;
};

/// Double momentum representation over the conjugate lattices p (scale hbar)
/// and w (scale beta), values row-major as values[jp * w.n + kw].
struct MomentumRep {
    Grid p_lattice;
    Grid w_lattice;
    SmearParams params;
    std::vector<cdouble> values;

    double measure() const { return p_lattice.spacing() * w_lattice.spacing(); }
    double norm_squared() const;
};

/// Unitary change to the double momentum representation: the u axis transforms
/// at hbar, the v axis at beta. Exactly invertible by position_representation.
MomentumRep momentum_representation(const SmearedState& state);

/// Inverse transform back onto the given position lattices. The target grids
/// must generate the rep's conjugate lattices. Factors are not reattached.
SmearedState position_representation(const MomentumRep& rep, const Grid& u_grid,
                                     const Grid& v_grid, const SmearParams& params);

}  // namespace qsmear

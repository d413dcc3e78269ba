#pragma once

#include <qsmear/state.hpp>

#include <cstdint>
#include <vector>

namespace qsmear {

enum class Axis { position, momentum };

/// Probability density sampled on a lattice, values in 1/length or 1/momentum
/// units so that sum values * spacing = 1.
struct Density {
    Grid grid;
    std::vector<double> values;

    double integral() const;
    double max_value() const;
    DensityStats stats() const;
};

/// Outcome density of a primed-position measurement: the marginal of
/// |Psi(u, v)|^2 along lines of constant x' = u + v, on the u lattice
/// (periodic wrap). For product states this equals the convolution of the
/// kernel density with |psi|^2 exactly.
Density position_density(const SmearedState& state);

/// Outcome density of a primed-momentum measurement: the marginal of the
/// double momentum density along lines of constant p' = p + w. Evaluated on an
/// adaptive lattice (nu points centered on the mean, extent 20 standard
/// deviations with a floor of 8 conjugate spacings) by semidiscrete transforms,
/// so the p and w lattices need not be commensurate. Cost O(nu^2 (nu + nv))
/// for general states, O(nu^2 + nu nv) for product states.
Density momentum_density(const SmearedState& state);

/// Mean of the primed observable on the chosen axis.
double generalized_mean(const SmearedState& state, Axis axis);

/// Variance of the primed observable on the chosen axis. For product states
/// this decomposes as the canonical variance of psi plus the squared kernel
/// width (position) or squared conjugate kernel width (momentum).
double generalized_variance(const SmearedState& state, Axis axis);

/// Post-measurement state after observing position r: the unprimed factor
/// picks up the kernel factor g(r - u), is renormalized, and is smeared
/// afresh. r is snapped to the lattice; outcomes with density below
/// 1e-12 * max are rejected. Requires a state carrying product factors.
SmearedState collapse_position(const SmearedState& state, double r);

/// Post-measurement state after observing momentum s: the unprimed momentum
/// amplitude picks up the conjugate kernel factor g~(s - p), is renormalized
/// and smeared afresh. Same snapping and rejection rules as position.
SmearedState collapse_momentum(const SmearedState& state, double s);

/// Inverse-CDF draw from the outcome density on the chosen axis; returns a
/// lattice coordinate. Deterministic for a fixed seed.
double sample_outcome(const SmearedState& state, Axis axis, std::uint64_t seed);

/// n-th outcome moment computed in the operator picture: the kernel-averaged
/// observable acting on the bare wavefunction, expanded binomially in kernel
/// and wavefunction moments. Agrees with smeared_state_moment identically.
double smeared_operator_moment(const Field& psi, const SmearingKernel& kernel,
                               const SmearParams& params, Axis axis, int order);

/// n-th outcome moment computed in the state picture: the direct lattice sum
/// of (u + v)^n (or (p + w)^n) against the two-coordinate density.
double smeared_state_moment(const SmearedState& state, Axis axis, int order);

struct Outcome {
    Axis axis;
    double value;
};
using OutcomeHistory = std::vector<Outcome>;

/// Operator-picture measurement chain: each position outcome multiplies the
/// running unprimed amplitude by its kernel factor; the result is normalized
/// once and smeared. Equals iterating collapse_position outcome by outcome.
/// The chain keeps memory of every outcome, and since the factors commute it
/// is insensitive to their order. Momentum outcomes are rejected: the operator
/// chain is defined for position measurements only.
SmearedState sequential_measure(const Field& psi, const SmearingKernel& kernel,
                                const SmearParams& params, const OutcomeHistory& outcomes);

}  // namespace qsmear

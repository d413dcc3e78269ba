#pragma once

#include <qsmear/state.hpp>

namespace qsmear {

/// Map a unit-norm one-coordinate wavefunction psi(u) to the two-coordinate
/// product state Psi(u, v) = g(v) psi(u). Throws when psi is not normalized
/// to 1e-6, when the lattices have different spacings, or when the kernel was
/// built for a different beta than `params` carries.
SmearedState smear(const Field& psi, const SmearingKernel& kernel, const SmearParams& params);

/// Squared norm of the classical blur (g/area) * psi, the convolution with the
/// area-normalized kernel on the u lattice. Strictly below 1 for any kernel of
/// nonzero width; shows why averaging amplitudes over geometries loses
/// probability while the two-coordinate product state keeps norm exactly.
double naive_smear_norm(const Field& psi, const SmearingKernel& kernel);

/// Plane-wave sample exp(i p u / hbar) exp(i (p_prime - p) v / beta) /
/// (2 pi sqrt(hbar beta)) of the joint eigenbasis of the unprimed and primed
/// momentum operators. Both wavenumbers must sit on their conjugate lattices
/// (within 1e-9 of an integer mode) so the sample is periodic on the box.
/// Returned raw (not normalizable on the continuum; finite on the lattice).
SmearedState eigenstate_sample(double p, double p_prime, const Grid& u_grid,
                               const Grid& v_grid, const SmearParams& params);

}  // namespace qsmear

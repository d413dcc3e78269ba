#pragma once

#include <qsmear/grid.hpp>

#include <vector>

namespace qsmear::detail {

/// Scaled unitary transform applied along one axis of a row-major [n0][n1]
/// array. `g` is the position grid of that axis and `scale` the transform
/// scale; forward maps onto the conjugate lattice ordering (modes -n/2 .. n/2-1),
/// inverse undoes it exactly. Same conventions as the 1-D qsmear::transform.
void scaled_transform_axis(std::vector<cdouble>& a, int n0, int n1, int axis,
                           const Grid& g, double scale, bool forward);

}  // namespace qsmear::detail

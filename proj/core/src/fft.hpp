#pragma once

#include <qsmear/grid.hpp>

namespace qsmear::detail {

/// Unnormalized complex DFT, data_k <- sum_j data_j exp(sign * 2 pi i j k / n).
/// sign = -1 is the forward convention. In-place.
void dft(std::vector<cdouble>& data, int sign);

/// Batched unnormalized DFT along one axis of a row-major [n0][n1] array.
/// axis 0 transforms columns (length n0), axis 1 transforms rows (length n1).
void dft_axis(std::vector<cdouble>& data, int n0, int n1, int axis, int sign);

/// Full unnormalized 2-D DFT of a row-major [n0][n1] array.
void dft_2d(std::vector<cdouble>& data, int n0, int n1, int sign);

}  // namespace qsmear::detail

#pragma once

#include <array>
#include <vector>

namespace hexlink {

// Rank of a row set of 8-vectors by singular value thresholding at
// rel_tol * sigma_max. Implemented with Eigen in numeric.cpp.
int svd_rank8(const std::vector<std::array<double, 8>>& rows, double rel_tol = 1e-8);

}  // namespace hexlink

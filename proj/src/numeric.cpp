#include "hexlink/numeric.hpp"

#include <Eigen/Dense>

namespace hexlink {

int svd_rank8(const std::vector<std::array<double, 8>>& rows, double rel_tol) {
  if (rows.empty()) return 0;
  Eigen::MatrixXd m(rows.size(), 8);
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    for (int c = 0; c < 8; ++c) m(r, c) = rows[r][c];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > rel_tol * sv(0)) ++rank;
  }
  return rank;
}

}  // namespace hexlink

#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "deqlens/matrix.hpp"
#include "deqlens/quasinorms.hpp"

namespace deqlens::testing {

inline SparseHermitianMatrix make(int dim, std::vector<Entry> entries) {
  return SparseHermitianMatrix::from_coordinates(dim, std::move(entries));
}

// The worked matrices used across the suites.
inline SparseHermitianMatrix matrix_D() {  // diag(1/4, 1/16, 1/64)
  return make(3, {{0, 0, {0.25, 0}}, {1, 1, {0.0625, 0}}, {2, 2, {0.015625, 0}}});
}
inline SparseHermitianMatrix matrix_I3() {
  return make(3, {{0, 0, {1, 0}}, {1, 1, {1, 0}}, {2, 2, {1, 0}}});
}
inline SparseHermitianMatrix matrix_X() {  // off-diagonal 0.5
  return make(2, {{0, 1, {0.5, 0}}, {1, 0, {0.5, 0}}});
}
inline SparseHermitianMatrix matrix_Y() {  // [[0.6,0.3],[0.3,0.2]]
  return make(2, {{0, 0, {0.6, 0}},
                  {0, 1, {0.3, 0}},
                  {1, 0, {0.3, 0}},
                  {1, 1, {0.2, 0}}});
}
inline SparseHermitianMatrix matrix_J() {  // dense 2x2 all 0.5
  return make(2, {{0, 0, {0.5, 0}},
                  {0, 1, {0.5, 0}},
                  {1, 0, {0.5, 0}},
                  {1, 1, {0.5, 0}}});
}

// Brute-force minimum of the mixed term over a uniform grid, used as the
// oracle for the golden-section minimizer. Written against the raw s_p
// definition, not mu_objective.
inline double grid_oracle_mixed_min(const SparseHermitianMatrix& a,
                                    int points = 10001) {
  const SparseHermitianMatrix adj = adjoint(a);
  const double c_a = static_cast<double>(s_zero(a));
  const double c_adj = static_cast<double>(s_zero(adj));
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < points; ++i) {
    const double p = 2.0 * i / (points - 1);
    const double left = p == 0.0 ? c_a : s_p(a, p);
    const double right = p == 2.0 ? c_adj : s_p(adj, 2.0 - p);
    best = std::min(best, std::sqrt(left * right));
  }
  return best;
}

}  // namespace deqlens::testing

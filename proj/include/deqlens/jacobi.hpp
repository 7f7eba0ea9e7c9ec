#pragma once

#include <vector>

namespace deqlens {

struct JacobiResult {
  std::vector<double> eigenvalues;  // ascending
  // Column k of the accumulated rotation matrix (row-major n*n) is the
  // eigenvector for eigenvalues[k].
  std::vector<double> eigenvectors;
  int sweeps = 0;
};

// Cyclic Jacobi for a dense real-symmetric matrix (row-major n*n).
// Sweeps until the off-diagonal Frobenius mass drops below
// 1e-14 * ||A||_F; throws ConvergenceFailureError past max_sweeps.
JacobiResult jacobi_eigen(std::vector<double> a, int n,
                          bool want_vectors = true, int max_sweeps = 64);

}  // namespace deqlens

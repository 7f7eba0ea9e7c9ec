#include "deqlens/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "deqlens/errors.hpp"

namespace deqlens {

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) sum += a[i * n + j] * a[i * n + j];
  return std::sqrt(2.0 * sum);
}

}  // namespace

JacobiResult jacobi_eigen(std::vector<double> a, int n, bool want_vectors,
                          int max_sweeps) {
  double fro = 0.0;
  for (double v : a) fro += v * v;
  fro = std::sqrt(fro);
  const double stop = 1e-14 * std::max(fro, 1e-300);

  std::vector<double> vecs;
  if (want_vectors) {
    vecs.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) vecs[i * n + i] = 1.0;
  }

  // Only the upper triangle (and the diagonal) is maintained; the rotation
  // formulas below use the rank-one correction with tau = s / (1 + c) for
  // better rounding behavior, and early sweeps use a threshold so tiny
  // off-diagonal entries are not rotated one by one.
  auto rotate = [&](std::vector<double>& m, std::size_t ij, std::size_t kl,
                    double s, double tau) {
    const double g = m[ij];
    const double h = m[kl];
    m[ij] = g - s * (h + g * tau);
    m[kl] = h + s * (g - h * tau);
  };

  int sweep = 0;
  while (off_diagonal_norm(a, n) > stop) {
    if (sweep++ >= max_sweeps) {
      std::ostringstream msg;
      msg << "Jacobi failed to converge in " << max_sweeps
          << " sweeps; off-diagonal mass " << off_diagonal_norm(a, n);
      throw ConvergenceFailureError(msg.str());
    }
    double abs_sum = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) abs_sum += std::abs(a[i * n + j]);
    const double tresh =
        sweep <= 3 ? 0.2 * abs_sum / (static_cast<double>(n) * n) : 0.0;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        const double small = 100.0 * std::abs(apq);
        // After a few sweeps, entries that no longer perturb the diagonal
        // at working precision are flushed instead of rotated.
        if (sweep > 4 && std::abs(a[p * n + p]) + small == std::abs(a[p * n + p]) &&
            std::abs(a[q * n + q]) + small == std::abs(a[q * n + q])) {
          a[p * n + q] = 0.0;
          continue;
        }
        if (std::abs(apq) <= tresh || apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        // Rotation angle from the stable tangent formula.
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double h = t * apq;

        a[p * n + p] = app - h;
        a[q * n + q] = aqq + h;
        a[p * n + q] = 0.0;
        for (int k = 0; k < p; ++k)
          rotate(a, static_cast<std::size_t>(k) * n + p,
                 static_cast<std::size_t>(k) * n + q, s, tau);
        for (int k = p + 1; k < q; ++k)
          rotate(a, static_cast<std::size_t>(p) * n + k,
                 static_cast<std::size_t>(k) * n + q, s, tau);
        for (int k = q + 1; k < n; ++k)
          rotate(a, static_cast<std::size_t>(p) * n + k,
                 static_cast<std::size_t>(q) * n + k, s, tau);
        if (want_vectors) {
          for (int k = 0; k < n; ++k)
            rotate(vecs, static_cast<std::size_t>(k) * n + p,
                   static_cast<std::size_t>(k) * n + q, s, tau);
        }
      }
    }
  }

  JacobiResult res;
  res.sweeps = sweep;
  res.eigenvalues.resize(n);
  for (int i = 0; i < n; ++i) res.eigenvalues[i] = a[i * n + i];

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return res.eigenvalues[x] < res.eigenvalues[y];
  });
  std::vector<double> sorted(n);
  for (int i = 0; i < n; ++i) sorted[i] = res.eigenvalues[order[i]];
  res.eigenvalues = std::move(sorted);
  if (want_vectors) {
    res.eigenvectors.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        res.eigenvectors[i * n + k] = vecs[i * n + order[k]];
  }
  return res;
}

}  // namespace deqlens

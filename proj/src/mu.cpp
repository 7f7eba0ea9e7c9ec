#include "deqlens/mu.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>
#include <vector>

#include "deqlens/errors.hpp"
#include "deqlens/quasinorms.hpp"

namespace deqlens {

namespace {

// Evaluator caching the adjoint, the s_0 counts, and per-entry log
// magnitudes across many p queries; repeated p values (grid points revisited
// by the deqineq sweep) are memoized.
class MixedObjective {
 public:
  explicit MixedObjective(const SparseHermitianMatrix& a)
      : count_a_(static_cast<double>(s_zero(a))) {
    const SparseHermitianMatrix adj = adjoint(a);
    count_adj_ = static_cast<double>(s_zero(adj));
    build(a, rows_a_);
    build(adj, rows_adj_);
  }

  double operator()(double p) const {
    const auto it = memo_.find(p);
    if (it != memo_.end()) return it->second;
    const double left = p == 0.0 ? count_a_ : row_power_max(rows_a_, p);
    const double right =
        p == 2.0 ? count_adj_ : row_power_max(rows_adj_, 2.0 - p);
    const double value = std::sqrt(left * right);
    memo_.emplace(p, value);
    return value;
  }

 private:
  static void build(const SparseHermitianMatrix& m,
                    std::vector<std::vector<double>>& rows) {
    rows.assign(m.dim(), {});
    for (const Entry& e : m.entries())
      rows[e.row].push_back(std::log(std::abs(e.value)));
  }

  // max over rows of sum_j |a_ij|^p, with the powers taken as exp(p log).
  static double row_power_max(const std::vector<std::vector<double>>& rows,
                              double p) {
    double best = 0.0;
    for (const auto& row : rows) {
      double sum = 0.0;
      for (double lv : row) sum += std::exp(p * lv);
      best = std::max(best, sum);
    }
    return best;
  }

  std::vector<std::vector<double>> rows_a_;
  std::vector<std::vector<double>> rows_adj_;
  double count_a_;
  double count_adj_;
  mutable std::unordered_map<double, double> memo_;
};

std::pair<double, double> minimize_impl(const MixedObjective& f,
                                        int grid_resolution, double p_tol) {
  std::vector<double> values(grid_resolution);
  int best = 0;
  for (int i = 0; i < grid_resolution; ++i) {
    const double p = 2.0 * i / (grid_resolution - 1);
    values[i] = f(p);
    if (values[i] < values[best]) best = i;
  }

  // Golden-section on the bracket around the grid argmin.
  const double step = 2.0 / (grid_resolution - 1);
  double lo = std::max(0.0, best * step - step);
  double hi = std::min(2.0, best * step + step);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > p_tol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  double p_min = 0.5 * (lo + hi);
  double f_min = f(p_min);
  if (values[best] < f_min) {
    p_min = best * step;
    f_min = values[best];
  }

  // Smallest p attaining the minimum: scan the grid from p = 0 and take the
  // first point whose value matches f_min, so flat objectives report p = 0.
  const double match_tol = 1e-12 * std::max(1.0, f_min);
  for (int i = 0; i < grid_resolution; ++i) {
    const double p = 2.0 * i / (grid_resolution - 1);
    if (p >= p_min) break;
    if (values[i] <= f_min + match_tol) {
      p_min = p;
      f_min = std::min(f_min, values[i]);
      break;
    }
  }
  return {p_min, f_min};
}

}  // namespace

double mu_objective(const SparseHermitianMatrix& a, double p) {
  if (p < 0.0 || p > 2.0)
    throw POutOfRangeError("mu objective requires p in [0,2]");
  return MixedObjective(a)(p);
}

std::pair<double, double> minimize_mixed(const SparseHermitianMatrix& a,
                                         int grid_resolution, double p_tol) {
  if (grid_resolution < 21)
    throw DomainError("minimize_mixed grid resolution must be >= 21");
  if (!(p_tol > 0.0)) throw DomainError("p_tol must be positive");
  return minimize_impl(MixedObjective(a), grid_resolution, p_tol);
}

MuResult mu(const SparseHermitianMatrix& a, const MuConfig& config) {
  MixedObjective f(a);
  MuResult res;
  res.frobenius = frobenius_norm(a);
  res.grid_resolution = config.grid_resolution;
  res.p_tol = config.p_tol;
  auto [p_star, mixed_min] =
      minimize_impl(f, config.grid_resolution, config.p_tol);
  res.p_star = p_star;
  res.mixed_min = mixed_min;
  res.mu_value = std::min(res.frobenius, res.mixed_min);
  res.inner_model =
      res.frobenius <=
              res.mixed_min + config.tie_tol * std::max(1.0, res.mixed_min)
          ? InnerModel::MuF
          : InnerModel::MuP;

  // deqineq at every grid point and at p_star; track the worst margin.
  res.deqineq_all_p = true;
  double worst_margin = std::numeric_limits<double>::infinity();
  auto consider = [&](double p, double value) {
    if (value - res.frobenius < worst_margin) {
      worst_margin = value - res.frobenius;
      res.worst_p = p;
    }
    if (res.frobenius > value) res.deqineq_all_p = false;
  };
  for (int i = 0; i < config.grid_resolution; ++i) {
    const double p = 2.0 * i / (config.grid_resolution - 1);
    consider(p, f(p));
  }
  consider(res.p_star, res.mixed_min);
  return res;
}

}  // namespace deqlens

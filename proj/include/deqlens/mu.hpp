#pragma once

#include <utility>

#include "deqlens/matrix.hpp"

namespace deqlens {

enum class InnerModel { MuF, MuP };

struct MuConfig {
  int grid_resolution = 201;
  double p_tol = 1e-9;
  double tie_tol = 1e-12;  // relative, Frobenius-vs-mixed tie break
};

struct MuResult {
  double mu_value = 0.0;
  double frobenius = 0.0;
  double mixed_min = 0.0;  // min_p sqrt(s_p(A) s_{2-p}(A_adj))
  double p_star = 0.0;     // smallest p attaining the minimum
  InnerModel inner_model = InnerModel::MuF;
  bool deqineq_all_p = false;  // frobenius <= mixed term at every checked p
  double worst_p = 0.0;        // p with the smallest mixed-vs-frobenius margin
  int grid_resolution = 0;
  double p_tol = 0.0;
};

// sqrt(s_p(A) s_{2-p}(A_adj)); the p = 0 / p = 2 endpoint uses the
// count-based s_0 on the corresponding factor.
double mu_objective(const SparseHermitianMatrix& a, double p);

// Global minimum of mu_objective over [0,2]: coarse grid bracketing plus
// golden-section refinement. The log of the objective is a sum of two
// log-sum-exp style convex terms, so it is unimodal and the bracketed
// refinement finds the global minimum. Ties resolve to the smallest p.
std::pair<double, double> minimize_mixed(const SparseHermitianMatrix& a,
                                         int grid_resolution = 201,
                                         double p_tol = 1e-9);

MuResult mu(const SparseHermitianMatrix& a, const MuConfig& config = {});

}  // namespace deqlens

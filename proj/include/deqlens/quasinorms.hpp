#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "deqlens/matrix.hpp"

namespace deqlens {

// One p-grid sample: s_p(A) and s_{2-p}(A†).
struct QuasinormSample {
  double p = 0.0;
  double sp_a = 0.0;
  double sp_adjoint = 0.0;  // s_{2-p}(A†)
};

struct QuasinormProfile {
  double frobenius = 0.0;
  int s_zero = 0;
  std::vector<QuasinormSample> samples;
  int grid_resolution = 0;
};

// Outcome of one link of the Lemma-A chain s_2 <= s_{2-eps} <= s_1 <= s_0.
struct OrderingLink {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

struct OrderingReport {
  double epsilon = 0.0;
  OrderingLink links[3];  // s_2<=s_{2-eps}, s_{2-eps}<=s_1, s_1<=s_0
  bool all_hold = false;
  double worst_slack = 0.0;  // most negative rhs-lhs over the chain
};

struct OrderingCheck {
  std::vector<OrderingReport> reports;
  bool hypothesis_ok = false;  // spectral norm <= 1 + 1e-9
  double spectral_norm = 0.0;
  bool all_hold = false;
};

double frobenius_norm(const SparseHermitianMatrix& a);

// s_p(A) = max over rows of sum_j |A_ij|^p, for p in (0,2].
double s_p(const SparseHermitianMatrix& a, double p);

// s_0(A): max count of nonzero entries per row (= the sparsity s).
int s_zero(const SparseHermitianMatrix& a);

// Uniform p-grid over [0,2] inclusive; the p = 0 / p = 2 endpoints use the
// count-based s_0 on the corresponding factor.
QuasinormProfile profile(const SparseHermitianMatrix& a, int grid_resolution);

// Lemma-A chain check at each epsilon; the spectral-norm hypothesis is
// flagged rather than enforced.
OrderingCheck check_sp_ordering(const SparseHermitianMatrix& a,
                                std::span<const double> epsilon_list);

// (sum |x_i|^p2)^(1/p2) <= (sum |x_i|^p1)^(1/p1) + 1e-12, for p1 <= p2.
bool lp_monotonicity_check(std::span<const double> x, double p1, double p2);

// Generalized Hoelder: sum |v_i w_i| <= ||v||_p ||w||_q + 1e-12 with
// conjugate exponents 1/p + 1/q = 1.
bool holder_check(std::span<const double> v, std::span<const double> w,
                  double p, double q);

// CSV export: p, s_p(A), s_{2-p}(A_adj), mixed term sqrt(product).
void write_profile_csv(std::ostream& out, const QuasinormProfile& profile);

}  // namespace deqlens

#pragma once

#include <iosfwd>
#include <vector>

#include "deqlens/matrix.hpp"

namespace deqlens {

struct SpectrumConfig {
  double membership_tol = 1e-9;
  // Relative to abs_max; abs_min at or below it signals a singular matrix
  // (kappa infinite). Default 0: only an exact zero eigenvalue is singular.
  double singularity_tol = 0.0;
  // Require the signed spectrum in [kappa^-1, 1] instead of magnitudes.
  bool signed_strict = false;
};

struct SpectrumSummary {
  std::vector<double> eigenvalues;  // ascending by signed value
  double abs_min = 0.0;
  double abs_max = 0.0;
  double kappa = 0.0;  // +infinity when singular
  bool kappa_finite = false;
  double abs_sum = 0.0;
  bool sparse_access_member = false;
  double membership_tol = 0.0;
};

// All n real eigenvalues via cyclic Jacobi; complex input goes through the
// real-symmetric 2n x 2n embedding (each eigenvalue doubled).
std::vector<double> eigenvalues(const SparseHermitianMatrix& a);

SpectrumSummary analyze_spectrum(const SparseHermitianMatrix& a,
                                 const SpectrumConfig& config = {});

double condition_number(const SpectrumSummary& spec);

// Membership in the sparse-access input model: abs_max <= 1 + tol and the
// matrix nonsingular. normalize divides by abs_max first (kappa unchanged).
struct SparseAccessResult {
  SpectrumSummary spectrum;
  bool member = false;
  SparseHermitianMatrix normalized;  // input when normalize is off
};
SparseAccessResult sparse_access_check(const SparseHermitianMatrix& a,
                                       bool normalize = false,
                                       const SpectrumConfig& config = {});

// Independent cross-check: |lambda|_max by power iteration on A^2 and
// |lambda|_min by inverse iteration on A^2 (dense LU solves).
std::pair<double, double> extremal_eigenvalues_oracle(
    const SparseHermitianMatrix& a);

// CSV export: index, eigenvalue.
void write_spectrum_csv(std::ostream& out, const SpectrumSummary& spec);

}  // namespace deqlens

#pragma once

#include <optional>
#include <string>

#include "deqlens/matrix.hpp"
#include "deqlens/mu.hpp"
#include "deqlens/spectrum.hpp"

namespace deqlens {

// One audited inequality: holds must equal the comparison of the two
// recorded sides (the direction is predicate-specific, see `relation`).
struct Predicate {
  bool holds = false;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string relation;  // "lhs < rhs", "lhs > rhs" or "lhs <= rhs"
  std::string note;
};

enum class Classification {
  DequantizableSufficient,
  DequantizableBySpectrum,
  Inconclusive,
  NotSparseAccess
};

std::string to_string(Classification c);

struct VerdictConfig {
  MuConfig mu;
  SpectrumConfig spectrum;
  bool normalize = false;  // divide by |lambda|_max before analysis
};

struct VerdictReport {
  static constexpr int kSchemaVersion = 1;
  int dim = 0;
  int s = 0;
  std::int64_t nnz = 0;
  double herm_deviation = 0.0;
  MuResult mu;
  SpectrumSummary spectrum;
  Predicate lemma_deq_sufficient;
  Predicate lemma_undeq_bound;
  // Absent when the matrix is not a sparse-access member.
  std::optional<Predicate> theorem_form_A;
  std::optional<Predicate> theorem_form_B;
  std::optional<Predicate> intermediate_sqrt_s_bound;
  std::optional<Predicate> corollary_family;
  Classification classification = Classification::Inconclusive;
  VerdictConfig config;
};

// Sufficient condition: ||A||_F <= sqrt(s_p(A) s_{2-p}(A_adj)) at every
// checked p (lhs = Frobenius, rhs = worst mixed value).
Predicate lemma_deq_sufficient(const SparseHermitianMatrix& a,
                               const MuResult& mu);

// Necessary condition for un-dequantizability:
// s_0(A) < ||A||_F^2 / s_2(A_adj) (either disjunct, they coincide for
// Hermitian input).
Predicate lemma_undeq_bound(const SparseHermitianMatrix& a);

// kappa < abs_sum / (sqrt(s) abs_min), strict.
Predicate theorem_form_A(const SpectrumSummary& spec, int s);

// abs_min > sqrt(s) / (kappa (n-1) + 1), strict.
Predicate theorem_form_B(const SpectrumSummary& spec, int s, int n);

// sqrt(s) < ||A||_F / abs_max, strict.
Predicate intermediate_sqrt_s_bound(const SparseHermitianMatrix& a,
                                    const SpectrumSummary& spec, int s);

// d^n >= d^(n-1)(n-1)+1, i.e. the corollary's contradiction fires and the
// diag-power family is dequantizable. Exact integer arithmetic when d is an
// integer; the factored form d vs (n-1)+d^(1-n) otherwise.
Predicate corollary_family_check(int n, double d);

VerdictReport classify(const SparseHermitianMatrix& a,
                       const VerdictConfig& config = {});

// Stable JSON encoding of the report (schema_version field included).
std::string report_to_json(const VerdictReport& report);

}  // namespace deqlens

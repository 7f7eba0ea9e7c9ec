#include "deqlens/verdict.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <json.hpp>

#include "deqlens/errors.hpp"
#include "deqlens/quasinorms.hpp"

namespace deqlens {

namespace {

using BigInt = boost::multiprecision::cpp_int;

void require_member(const SpectrumSummary& spec) {
  if (!spec.sparse_access_member)
    throw NotSparseAccessError(
        "theorem predicates need a sparse-access member matrix");
}

bool is_integer(double d) { return d == std::floor(d) && std::abs(d) < 1e15; }

}  // namespace

std::string to_string(Classification c) {
  switch (c) {
    case Classification::DequantizableSufficient:
      return "DequantizableSufficient";
    case Classification::DequantizableBySpectrum:
      return "DequantizableBySpectrum";
    case Classification::Inconclusive:
      return "Inconclusive";
    case Classification::NotSparseAccess:
      return "NotSparseAccess";
  }
  return "?";
}

Predicate lemma_deq_sufficient(const SparseHermitianMatrix& /*a*/,
                               const MuResult& mu) {
  Predicate p;
  p.lhs = mu.frobenius;
  p.rhs = mu.mixed_min;
  p.relation = "lhs <= rhs";
  p.holds = mu.deqineq_all_p;
  p.note = "worst p = " + std::to_string(mu.worst_p);
  return p;
}

Predicate lemma_undeq_bound(const SparseHermitianMatrix& a) {
  const double fro2 = std::pow(frobenius_norm(a), 2);
  const SparseHermitianMatrix adj = adjoint(a);
  const double first = fro2 / s_p(adj, 2.0);
  const double second = fro2 / s_p(a, 2.0);
  Predicate p;
  p.lhs = static_cast<double>(s_zero(a));
  p.rhs = first;
  p.relation = "lhs < rhs";
  p.holds = p.lhs < first || static_cast<double>(s_zero(adj)) < second;
  return p;
}

Predicate theorem_form_A(const SpectrumSummary& spec, int s) {
  require_member(spec);
  Predicate p;
  p.lhs = spec.kappa;
  p.rhs = spec.abs_sum / (std::sqrt(static_cast<double>(s)) * spec.abs_min);
  p.relation = "lhs < rhs";
  p.holds = p.lhs < p.rhs;
  return p;
}

Predicate theorem_form_B(const SpectrumSummary& spec, int s, int n) {
  require_member(spec);
  Predicate p;
  p.lhs = spec.abs_min;
  p.rhs = std::sqrt(static_cast<double>(s)) / (spec.kappa * (n - 1) + 1.0);
  p.relation = "lhs > rhs";
  p.holds = p.lhs > p.rhs;
  return p;
}

Predicate intermediate_sqrt_s_bound(const SparseHermitianMatrix& a,
                                    const SpectrumSummary& spec, int s) {
  require_member(spec);
  Predicate p;
  p.lhs = std::sqrt(static_cast<double>(s));
  p.rhs = frobenius_norm(a) / spec.abs_max;
  p.relation = "lhs < rhs";
  p.holds = p.lhs < p.rhs;
  return p;
}

Predicate corollary_family_check(int n, double d) {
  if (n < 2) throw DomainError("corollary check requires n >= 2");
  if (!(d > n)) throw DomainError("corollary check requires d > n");
  Predicate p;
  p.relation = "lhs >= rhs";
  if (is_integer(d)) {
    const BigInt di = static_cast<long long>(d);
    const BigInt lhs = pow(di, n);
    const BigInt rhs = pow(di, n - 1) * (n - 1) + 1;
    p.holds = lhs >= rhs;
    p.lhs = static_cast<double>(lhs);
    p.rhs = static_cast<double>(rhs);
    p.note = lhs.str() + " vs " + rhs.str() + " (exact)";
  } else {
    // Factored form: d^n >= d^(n-1)(n-1)+1 iff d >= (n-1) + d^(1-n).
    p.lhs = d;
    p.rhs = (n - 1) + std::pow(d, 1.0 - n);
    p.holds = p.lhs >= p.rhs - 1e-12 * std::abs(p.rhs);
    p.note = "factored form d vs (n-1)+d^(1-n)";
  }
  return p;
}

VerdictReport classify(const SparseHermitianMatrix& input,
                       const VerdictConfig& config) {
  VerdictReport rep;
  rep.config = config;

  SparseAccessResult access =
      sparse_access_check(input, config.normalize, config.spectrum);
  const SparseHermitianMatrix& a = access.normalized;
  rep.spectrum = access.spectrum;

  const MatrixShapeSummary shape = shape_summary(a);
  rep.dim = shape.dim;
  rep.s = shape.s;
  rep.nnz = shape.nnz;
  rep.herm_deviation = a.herm_deviation();

  rep.mu = mu(a, config.mu);
  rep.lemma_deq_sufficient = lemma_deq_sufficient(a, rep.mu);
  rep.lemma_undeq_bound = lemma_undeq_bound(a);

  if (access.member) {
    rep.theorem_form_A = theorem_form_A(rep.spectrum, shape.s);
    rep.theorem_form_B = theorem_form_B(rep.spectrum, shape.s, shape.dim);
    rep.intermediate_sqrt_s_bound =
        intermediate_sqrt_s_bound(a, rep.spectrum, shape.s);
  }

  // Precedence: sufficient condition, then membership, then any failed
  // necessary condition (contraposition), else inconclusive.
  if (rep.lemma_deq_sufficient.holds) {
    rep.classification = Classification::DequantizableSufficient;
  } else if (!access.member) {
    rep.classification = Classification::NotSparseAccess;
  } else if (!rep.lemma_undeq_bound.holds || !rep.theorem_form_A->holds ||
             !rep.theorem_form_B->holds ||
             !rep.intermediate_sqrt_s_bound->holds) {
    rep.classification = Classification::DequantizableBySpectrum;
  } else {
    rep.classification = Classification::Inconclusive;
  }
  return rep;
}

namespace {

using Json = nlohmann::ordered_json;

Json predicate_json(const Predicate& p) {
  Json j;
  j["holds"] = p.holds;
  j["lhs"] = p.lhs;
  j["rhs"] = p.rhs;
  j["relation"] = p.relation;
  if (!p.note.empty()) j["note"] = p.note;
  return j;
}

}  // namespace

std::string report_to_json(const VerdictReport& rep) {
  Json j;
  j["schema_version"] = VerdictReport::kSchemaVersion;
  j["matrix"] = {{"dim", rep.dim},
                 {"s", rep.s},
                 {"nnz", rep.nnz},
                 {"herm_deviation", rep.herm_deviation}};
  j["mu"] = {
      {"mu_value", rep.mu.mu_value},
      {"frobenius", rep.mu.frobenius},
      {"mixed_min", rep.mu.mixed_min},
      {"p_star", rep.mu.p_star},
      {"inner_model", rep.mu.inner_model == InnerModel::MuF ? "MuF" : "MuP"},
      {"deqineq_all_p", rep.mu.deqineq_all_p},
      {"grid_resolution", rep.mu.grid_resolution},
      {"p_tol", rep.mu.p_tol}};
  Json spec;
  spec["eigenvalues"] = rep.spectrum.eigenvalues;
  spec["abs_min"] = rep.spectrum.abs_min;
  spec["abs_max"] = rep.spectrum.abs_max;
  if (rep.spectrum.kappa_finite)
    spec["kappa"] = rep.spectrum.kappa;
  else
    spec["kappa"] = "Infinite";
  spec["abs_sum"] = rep.spectrum.abs_sum;
  spec["sparse_access_member"] = rep.spectrum.sparse_access_member;
  spec["membership_tol"] = rep.spectrum.membership_tol;
  j["spectrum"] = spec;

  Json preds;
  preds["lemma_deq_sufficient"] = predicate_json(rep.lemma_deq_sufficient);
  preds["lemma_undeq_bound"] = predicate_json(rep.lemma_undeq_bound);
  if (rep.theorem_form_A)
    preds["theorem_form_A"] = predicate_json(*rep.theorem_form_A);
  if (rep.theorem_form_B)
    preds["theorem_form_B"] = predicate_json(*rep.theorem_form_B);
  if (rep.intermediate_sqrt_s_bound)
    preds["intermediate_sqrt_s_bound"] =
        predicate_json(*rep.intermediate_sqrt_s_bound);
  if (rep.corollary_family)
    preds["corollary_family"] = predicate_json(*rep.corollary_family);
  j["predicates"] = preds;
  j["classification"] = to_string(rep.classification);
  j["config"] = {{"grid_resolution", rep.config.mu.grid_resolution},
                 {"p_tol", rep.config.mu.p_tol},
                 {"tie_tol", rep.config.mu.tie_tol},
                 {"membership_tol", rep.config.spectrum.membership_tol},
                 {"singularity_tol", rep.config.spectrum.singularity_tol},
                 {"signed_strict", rep.config.spectrum.signed_strict},
                 {"normalize", rep.config.normalize}};
  return j.dump(2) + "\n";
}

}  // namespace deqlens

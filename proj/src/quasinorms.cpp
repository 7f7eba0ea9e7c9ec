#include "deqlens/quasinorms.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "deqlens/errors.hpp"
#include "deqlens/spectrum.hpp"

namespace deqlens {

namespace {

std::string csv_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double lp_quasinorm(std::span<const double> x, double p) {
  double sum = 0.0;
  for (double xi : x) sum += std::pow(std::abs(xi), p);
  return std::pow(sum, 1.0 / p);
}

}  // namespace

double frobenius_norm(const SparseHermitianMatrix& a) {
  // Row-major over the stored entries, so the summation order is fixed.
  double sum = 0.0;
  for (const Entry& e : a.entries()) sum += std::norm(e.value);
  return std::sqrt(sum);
}

double s_p(const SparseHermitianMatrix& a, double p) {
  if (!(p > 0.0) || p > 2.0)
    throw POutOfRangeError("s_p requires p in (0,2]");
  std::vector<double> row_sums(a.dim(), 0.0);
  for (const Entry& e : a.entries())
    row_sums[e.row] += std::pow(std::abs(e.value), p);
  return *std::max_element(row_sums.begin(), row_sums.end());
}

int s_zero(const SparseHermitianMatrix& a) { return shape_summary(a).s; }

QuasinormProfile profile(const SparseHermitianMatrix& a, int grid_resolution) {
  if (grid_resolution < 3)
    throw DomainError("profile grid resolution must be >= 3");
  const SparseHermitianMatrix adj = adjoint(a);
  const double count_a = static_cast<double>(s_zero(a));
  const double count_adj = static_cast<double>(s_zero(adj));

  QuasinormProfile prof;
  prof.frobenius = frobenius_norm(a);
  prof.s_zero = static_cast<int>(count_a);
  prof.grid_resolution = grid_resolution;
  prof.samples.reserve(grid_resolution);
  for (int i = 0; i < grid_resolution; ++i) {
    const double p = 2.0 * i / (grid_resolution - 1);
    QuasinormSample smp;
    smp.p = p;
    smp.sp_a = p == 0.0 ? count_a : s_p(a, p);
    smp.sp_adjoint = p == 2.0 ? count_adj : s_p(adj, 2.0 - p);
    prof.samples.push_back(smp);
  }
  return prof;
}

OrderingCheck check_sp_ordering(const SparseHermitianMatrix& a,
                                std::span<const double> epsilon_list) {
  OrderingCheck check;
  check.spectral_norm = analyze_spectrum(a).abs_max;
  check.hypothesis_ok = check.spectral_norm <= 1.0 + 1e-9;

  const double s2 = s_p(a, 2.0);
  const double s1 = s_p(a, 1.0);
  const double s0 = static_cast<double>(s_zero(a));
  check.all_hold = true;
  for (double eps : epsilon_list) {
    if (!(eps > 0.0) || eps >= 1.0)
      throw DomainError("ordering epsilon must lie in (0,1)");
    OrderingReport rep;
    rep.epsilon = eps;
    const double smid = s_p(a, 2.0 - eps);
    rep.links[0] = {s2, smid, s2 <= smid + 1e-12};
    rep.links[1] = {smid, s1, smid <= s1 + 1e-12};
    rep.links[2] = {s1, s0, s1 <= s0 + 1e-12};
    rep.all_hold = true;
    rep.worst_slack = 0.0;
    for (const OrderingLink& link : rep.links) {
      rep.all_hold = rep.all_hold && link.holds;
      rep.worst_slack = std::min(rep.worst_slack, link.rhs - link.lhs);
    }
    check.all_hold = check.all_hold && rep.all_hold;
    check.reports.push_back(rep);
  }
  return check;
}

bool lp_monotonicity_check(std::span<const double> x, double p1, double p2) {
  if (!(p1 > 0.0) || p2 > 2.0 || p1 > p2)
    throw DomainError("requires 0 < p1 <= p2 <= 2");
  return lp_quasinorm(x, p2) <= lp_quasinorm(x, p1) + 1e-12;
}

bool holder_check(std::span<const double> v, std::span<const double> w,
                  double p, double q) {
  if (!(p > 1.0) || std::abs(1.0 / p + 1.0 / q - 1.0) > 1e-12)
    throw ConjugateExponentMismatchError(
        "requires p > 1 and 1/p + 1/q = 1 within 1e-12");
  if (v.size() != w.size())
    throw DomainError("vectors must have equal length");
  double dot = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) dot += std::abs(v[i] * w[i]);
  return dot <= lp_quasinorm(v, p) * lp_quasinorm(w, q) + 1e-12;
}

void write_profile_csv(std::ostream& out, const QuasinormProfile& profile) {
  out << "p,s_p_A,s_2mp_Aadj,mixed\n";
  for (const QuasinormSample& smp : profile.samples) {
    out << csv_value(smp.p) << ',' << csv_value(smp.sp_a) << ','
        << csv_value(smp.sp_adjoint) << ','
        << csv_value(std::sqrt(smp.sp_a * smp.sp_adjoint)) << '\n';
  }
}

}  // namespace deqlens

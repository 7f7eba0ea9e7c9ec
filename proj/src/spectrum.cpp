#include "deqlens/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>

#include "deqlens/errors.hpp"
#include "deqlens/jacobi.hpp"

namespace deqlens {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<Complex> apply_matrix(const SparseHermitianMatrix& a,
                           const std::vector<Complex>& x) {
  std::vector<Complex> y(a.dim());
  for (const Entry& e : a.entries()) y[e.row] += e.value * x[e.col];
  return y;
}

double norm2(const std::vector<Complex>& x) {
  double s = 0.0;
  for (const Complex& v : x) s += std::norm(v);
  return std::sqrt(s);
}

// Dense complex LU with partial pivoting; factors once, solves many.
class DenseLu {
 public:
  explicit DenseLu(const SparseHermitianMatrix& a)
      : n_(a.dim()), lu_(a.to_dense()), piv_(a.dim()) {
    std::iota(piv_.begin(), piv_.end(), 0);
    for (int k = 0; k < n_; ++k) {
      int pivot = k;
      double best = std::abs(lu_[idx(k, k)]);
      for (int i = k + 1; i < n_; ++i) {
        const double cand = std::abs(lu_[idx(i, k)]);
        if (cand > best) {
          best = cand;
          pivot = i;
        }
      }
      if (best == 0.0)
        throw ConvergenceFailureError("singular matrix in LU factorization");
      if (pivot != k) {
        for (int j = 0; j < n_; ++j)
          std::swap(lu_[idx(k, j)], lu_[idx(pivot, j)]);
        std::swap(piv_[k], piv_[pivot]);
      }
      for (int i = k + 1; i < n_; ++i) {
        lu_[idx(i, k)] /= lu_[idx(k, k)];
        const Complex f = lu_[idx(i, k)];
        for (int j = k + 1; j < n_; ++j) lu_[idx(i, j)] -= f * lu_[idx(k, j)];
      }
    }
  }

  std::vector<Complex> solve(const std::vector<Complex>& b) const {
    std::vector<Complex> x(n_);
    for (int i = 0; i < n_; ++i) x[i] = b[piv_[i]];
    for (int i = 1; i < n_; ++i)
      for (int j = 0; j < i; ++j) x[i] -= lu_[idx(i, j)] * x[j];
    for (int i = n_ - 1; i >= 0; --i) {
      for (int j = i + 1; j < n_; ++j) x[i] -= lu_[idx(i, j)] * x[j];
      x[i] /= lu_[idx(i, i)];
    }
    return x;
  }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + j;
  }
  int n_;
  std::vector<Complex> lu_;
  std::vector<int> piv_;
};

std::vector<Complex> seeded_start(int n) {
  std::mt19937_64 rng(0x5eed1234abcdULL);
  std::vector<Complex> x(n);
  for (Complex& v : x) {
    const double re = (rng() >> 11) * 0x1p-53;
    v = Complex(2.0 * re - 1.0, 0.0);
  }
  if (norm2(x) == 0.0) x[0] = 1.0;
  return x;
}

}  // namespace

std::vector<double> eigenvalues(const SparseHermitianMatrix& a) {
  const int n = a.dim();
  if (a.is_real()) {
    std::vector<double> dense(static_cast<std::size_t>(n) * n, 0.0);
    for (const Entry& e : a.entries())
      dense[static_cast<std::size_t>(e.row) * n + e.col] = e.value.real();
    return jacobi_eigen(std::move(dense), n, /*want_vectors=*/false)
        .eigenvalues;
  }
  // Real-symmetric embedding [[Re, -Im], [Im, Re]]; every eigenvalue of A
  // shows up twice, so keep one of each sorted pair.
  const int m = 2 * n;
  std::vector<double> dense(static_cast<std::size_t>(m) * m, 0.0);
  for (const Entry& e : a.entries()) {
    const double re = e.value.real(), im = e.value.imag();
    dense[static_cast<std::size_t>(e.row) * m + e.col] = re;
    dense[static_cast<std::size_t>(e.row) * m + e.col + n] = -im;
    dense[static_cast<std::size_t>(e.row + n) * m + e.col] = im;
    dense[static_cast<std::size_t>(e.row + n) * m + e.col + n] = re;
  }
  std::vector<double> doubled =
      jacobi_eigen(std::move(dense), m, /*want_vectors=*/false).eigenvalues;
  std::vector<double> vals(n);
  for (int i = 0; i < n; ++i)
    vals[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return vals;
}

SpectrumSummary analyze_spectrum(const SparseHermitianMatrix& a,
                                 const SpectrumConfig& config) {
  SpectrumSummary s;
  s.eigenvalues = eigenvalues(a);
  s.membership_tol = config.membership_tol;
  s.abs_min = kInf;
  for (double lam : s.eigenvalues) {
    const double mag = std::abs(lam);
    s.abs_min = std::min(s.abs_min, mag);
    s.abs_max = std::max(s.abs_max, mag);
    s.abs_sum += mag;
  }
  const double singular_below = config.singularity_tol * s.abs_max;
  s.kappa_finite = s.abs_min > singular_below && s.abs_min > 0.0;
  s.kappa = s.kappa_finite ? s.abs_max / s.abs_min : kInf;

  s.sparse_access_member =
      s.abs_max <= 1.0 + config.membership_tol && s.kappa_finite;
  if (config.signed_strict && s.sparse_access_member) {
    const double lo = 1.0 / s.kappa - config.membership_tol;
    for (double lam : s.eigenvalues)
      if (lam < lo) s.sparse_access_member = false;
  }
  return s;
}

double condition_number(const SpectrumSummary& spec) { return spec.kappa; }

SparseAccessResult sparse_access_check(const SparseHermitianMatrix& a,
                                       bool normalize,
                                       const SpectrumConfig& config) {
  SparseAccessResult res{analyze_spectrum(a, config), false, a};
  if (normalize && res.spectrum.abs_max > 0.0) {
    res.normalized = scale(a, 1.0 / res.spectrum.abs_max);
    res.spectrum = analyze_spectrum(res.normalized, config);
  }
  res.member = res.spectrum.sparse_access_member;
  return res;
}

std::pair<double, double> extremal_eigenvalues_oracle(
    const SparseHermitianMatrix& a) {
  const int n = a.dim();
  const int max_iters = 200000;
  const double rel_tol = 1e-12;

  // |lambda|_max^2 is the dominant eigenvalue of A^2.
  std::vector<Complex> x = seeded_start(n);
  double rho = 0.0;
  for (int it = 0; it < max_iters; ++it) {
    std::vector<Complex> y = apply_matrix(a, apply_matrix(a, x));
    const double ny = norm2(y);
    if (ny == 0.0)
      throw ConvergenceFailureError("power iteration hit the null space");
    const double next = ny / norm2(x);
    for (Complex& v : y) v /= ny;
    x = std::move(y);
    if (it > 2 && std::abs(next - rho) <= rel_tol * std::max(next, 1e-300)) {
      rho = next;
      break;
    }
    rho = next;
  }
  const double abs_max = std::sqrt(rho);

  // |lambda|_min^2 via inverse iteration: dominant eigenvalue of (A^2)^-1.
  DenseLu lu(a);
  x = seeded_start(n);
  double rho_inv = 0.0;
  for (int it = 0; it < max_iters; ++it) {
    std::vector<Complex> y = lu.solve(lu.solve(x));
    const double ny = norm2(y);
    if (!std::isfinite(ny) || ny == 0.0)
      throw ConvergenceFailureError("inverse iteration diverged");
    const double next = ny / norm2(x);
    for (Complex& v : y) v /= ny;
    x = std::move(y);
    if (it > 2 &&
        std::abs(next - rho_inv) <= rel_tol * std::max(next, 1e-300)) {
      rho_inv = next;
      break;
    }
    rho_inv = next;
  }
  const double abs_min = 1.0 / std::sqrt(rho_inv);
  return {abs_min, abs_max};
}

void write_spectrum_csv(std::ostream& out, const SpectrumSummary& spec) {
  out << "index,eigenvalue\n";
  char buf[64];
  for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", spec.eigenvalues[i]);
    out << i << ',' << buf << '\n';
  }
}

}  // namespace deqlens

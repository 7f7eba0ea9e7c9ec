#include "deqlens/families.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>

#include "deqlens/errors.hpp"
#include "deqlens/spectrum.hpp"

namespace deqlens {

namespace {

// Uniform in [0,1) built from the raw 64-bit stream, so generated matrices
// are identical across standard libraries.
double uniform01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1p-53; }

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

double gaussian(std::mt19937_64& rng) {
  double u1 = uniform01(rng);
  while (u1 == 0.0) u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * 3.14159265358979323846 * u2);
}

// Random orthogonal b x b via modified Gram-Schmidt on a Gaussian matrix,
// column-major in q.
std::vector<double> random_orthogonal(int b, std::mt19937_64& rng) {
  std::vector<double> q(static_cast<std::size_t>(b) * b);
  for (double& v : q) v = gaussian(rng);
  for (int j = 0; j < b; ++j) {
    for (int k = 0; k < j; ++k) {
      double dot = 0.0;
      for (int i = 0; i < b; ++i) dot += q[i * b + k] * q[i * b + j];
      for (int i = 0; i < b; ++i) q[i * b + j] -= dot * q[i * b + k];
    }
    double nrm = 0.0;
    for (int i = 0; i < b; ++i) nrm += q[i * b + j] * q[i * b + j];
    nrm = std::sqrt(nrm);
    if (nrm == 0.0) {
      q[j * b + j] = 1.0;
      nrm = 1.0;
    }
    for (int i = 0; i < b; ++i) q[i * b + j] /= nrm;
  }
  return q;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

SparseHermitianMatrix diag_power_family(int n, double d) {
  if (n < 2) throw DomainError("diag-power family requires n >= 2");
  if (!(d > n)) throw DomainError("diag-power family requires d > n");
  std::vector<Entry> entries;
  entries.reserve(n);
  for (int i = 0; i < n; ++i)
    entries.push_back({i, i, Complex(std::pow(d, -(i + 1.0)), 0.0)});
  return SparseHermitianMatrix::from_coordinates(n, std::move(entries));
}

SparseHermitianMatrix identity(int n) {
  if (n < 1) throw DomainError("identity requires n >= 1");
  std::vector<Entry> entries;
  entries.reserve(n);
  for (int i = 0; i < n; ++i) entries.push_back({i, i, Complex(1.0, 0.0)});
  return SparseHermitianMatrix::from_coordinates(n, std::move(entries));
}

BlockHermitianSample random_block_hermitian_with_spectrum(
    int n, int s, std::array<double, 2> spectrum_range, std::uint64_t seed) {
  if (n < 1 || s < 1 || s > n)
    throw DomainError("block family requires 1 <= s <= n");
  const auto [lo, hi] = spectrum_range;
  if (!(lo > 0.0) || lo > hi || hi > 1.0)
    throw DomainError("spectrum range must satisfy 0 < lo <= hi <= 1");

  std::mt19937_64 rng(seed);
  BlockHermitianSample sample;
  std::vector<Entry> entries;
  for (int base = 0; base < n; base += s) {
    const int b = std::min(s, n - base);
    std::vector<double> lam(b);
    for (double& v : lam) {
      v = uniform(rng, lo, hi);
      sample.spectrum.push_back(v);
    }
    const std::vector<double> q = random_orthogonal(b, rng);
    // block = Q diag(lam) Q^T, symmetrized exactly
    for (int i = 0; i < b; ++i) {
      for (int j = i; j < b; ++j) {
        double v = 0.0;
        for (int k = 0; k < b; ++k) v += q[i * b + k] * lam[k] * q[j * b + k];
        entries.push_back({base + i, base + j, Complex(v, 0.0)});
        if (j != i) entries.push_back({base + j, base + i, Complex(v, 0.0)});
      }
    }
  }
  std::sort(sample.spectrum.begin(), sample.spectrum.end());
  sample.matrix =
      SparseHermitianMatrix::from_coordinates(n, std::move(entries));
  return sample;
}

SparseHermitianMatrix random_block_hermitian(
    int n, int s, std::array<double, 2> spectrum_range, std::uint64_t seed) {
  return random_block_hermitian_with_spectrum(n, s, spectrum_range, seed)
      .matrix;
}

SupportHermitianSample random_support_hermitian_flagged(int n, int s,
                                                        std::uint64_t seed) {
  if (n < 1 || s < 1 || s > n)
    throw DomainError("support family requires 1 <= s <= n");
  std::mt19937_64 rng(seed);
  std::vector<int> count(n, 0);
  std::vector<Entry> entries;
  for (int i = 0; i < n; ++i) {
    entries.push_back({i, i, Complex(uniform(rng, -1.0, 1.0), 0.0)});
    ++count[i];
  }
  if (s > 1) {
    // Visit pairs in a fixed order; accept while both rows have room.
    const double accept = std::min(1.0, static_cast<double>(s - 1) / n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double coin = uniform01(rng);
        if (count[i] >= s || count[j] >= s) continue;
        if (coin > accept) continue;
        const double v = uniform(rng, -1.0, 1.0);
        entries.push_back({i, j, Complex(v, 0.0)});
        entries.push_back({j, i, Complex(v, 0.0)});
        ++count[i];
        ++count[j];
      }
    }
  }
  SupportHermitianSample sample;
  sample.matrix =
      SparseHermitianMatrix::from_coordinates(n, std::move(entries));
  const std::vector<double> lam = eigenvalues(sample.matrix);
  double abs_max = 0.0, abs_min = std::numeric_limits<double>::infinity();
  for (double l : lam) {
    abs_max = std::max(abs_max, std::abs(l));
    abs_min = std::min(abs_min, std::abs(l));
  }
  if (abs_max == 0.0) {
    sample.singular = true;
    return sample;
  }
  sample.matrix = scale(sample.matrix, 1.0 / abs_max);
  sample.singular = abs_min <= 1e-14 * abs_max;
  return sample;
}

SparseHermitianMatrix random_support_hermitian(int n, int s,
                                               std::uint64_t seed) {
  return random_support_hermitian_flagged(n, s, seed).matrix;
}

SparseHermitianMatrix generate(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Identity:
      return identity(spec.n);
    case FamilyKind::DiagPower:
      return diag_power_family(spec.n, spec.d);
    case FamilyKind::RandomBlockHermitian:
      return random_block_hermitian(spec.n, spec.s, spec.spectrum_range,
                                    spec.seed);
    case FamilyKind::RandomSupportHermitian:
      return random_support_hermitian(spec.n, spec.s, spec.seed);
  }
  throw DomainError("unknown family kind");
}

std::vector<std::string> provenance_comments(const FamilySpec& spec) {
  std::vector<std::string> lines;
  std::string family;
  switch (spec.kind) {
    case FamilyKind::Identity:
      family = "identity";
      break;
    case FamilyKind::DiagPower:
      family = "diag-power";
      break;
    case FamilyKind::RandomBlockHermitian:
      family = "random-block";
      break;
    case FamilyKind::RandomSupportHermitian:
      family = "random-support";
      break;
  }
  lines.push_back(" generator: deqlens");
  lines.push_back(" family: " + family);
  lines.push_back(" n: " + std::to_string(spec.n));
  if (spec.kind == FamilyKind::DiagPower)
    lines.push_back(" d: " + fmt(spec.d));
  if (spec.kind == FamilyKind::RandomBlockHermitian ||
      spec.kind == FamilyKind::RandomSupportHermitian) {
    lines.push_back(" s: " + std::to_string(spec.s));
    lines.push_back(" seed: " + std::to_string(spec.seed));
    lines.push_back(" prng: " + spec.prng_id);
  }
  if (spec.kind == FamilyKind::RandomBlockHermitian) {
    lines.push_back(" spectrum_lo: " + fmt(spec.spectrum_range[0]));
    lines.push_back(" spectrum_hi: " + fmt(spec.spectrum_range[1]));
  }
  return lines;
}

}  // namespace deqlens

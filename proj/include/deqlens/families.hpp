#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "deqlens/matrix.hpp"

namespace deqlens {

enum class FamilyKind {
  Identity,
  DiagPower,
  RandomBlockHermitian,
  RandomSupportHermitian
};

// Parameters of one generated matrix; the same spec always produces the
// bit-identical matrix (prng_id records the generator algorithm).
struct FamilySpec {
  FamilyKind kind = FamilyKind::Identity;
  int n = 1;
  double d = 0.0;  // DiagPower only, requires d > n
  int s = 1;
  std::array<double, 2> spectrum_range = {0.5, 1.0};
  std::uint64_t seed = 0;
  std::string prng_id = "mt19937_64";
};

// Diagonal matrix with entry (i,i) = d^-(i+1); 1-sparse, kappa = d^(n-1).
SparseHermitianMatrix diag_power_family(int n, double d);

SparseHermitianMatrix identity(int n);

struct BlockHermitianSample {
  SparseHermitianMatrix matrix;
  std::vector<double> spectrum;  // exact by construction, ascending
};

// Block-diagonal with dense Hermitian blocks of size <= s; each block is an
// orthogonal conjugation of a diagonal drawn uniformly from spectrum_range,
// so the spectrum is known at construction time.
BlockHermitianSample random_block_hermitian_with_spectrum(
    int n, int s, std::array<double, 2> spectrum_range, std::uint64_t seed);
SparseHermitianMatrix random_block_hermitian(
    int n, int s, std::array<double, 2> spectrum_range, std::uint64_t seed);

struct SupportHermitianSample {
  SparseHermitianMatrix matrix;
  bool singular = false;  // flagged when an eigenvalue underflows to zero
};

// Symmetric support with <= s nonzeros per row, values uniform in [-1,1],
// rescaled so the spectral norm is 1.
SupportHermitianSample random_support_hermitian_flagged(int n, int s,
                                                        std::uint64_t seed);
SparseHermitianMatrix random_support_hermitian(int n, int s,
                                               std::uint64_t seed);

SparseHermitianMatrix generate(const FamilySpec& spec);

// Provenance lines for Matrix Market headers.
std::vector<std::string> provenance_comments(const FamilySpec& spec);

}  // namespace deqlens

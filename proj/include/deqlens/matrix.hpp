#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace deqlens {

using Complex = std::complex<double>;

// One stored coordinate entry. Indices are 0-based everywhere in this repo.
struct Entry {
  int row = 0;
  int col = 0;
  Complex value;
};

struct MatrixShapeSummary {
  int dim = 0;
  std::int64_t nnz = 0;
  std::vector<int> nnz_per_row;
  int s = 0;  // max nonzeros per row, the sparsity
};

// Immutable square Hermitian matrix in coordinate storage, entries sorted
// row-major. Construction validates indices, duplicates, finiteness and the
// Hermitian mirror condition; stored zeros are forbidden.
class SparseHermitianMatrix {
 public:
  // Empty placeholder, only valid as an assignment target.
  SparseHermitianMatrix() = default;

  static SparseHermitianMatrix from_coordinates(int dim,
                                                std::vector<Entry> entries,
                                                double zero_tol = 0.0,
                                                double herm_tol = 1e-10);

  int dim() const { return dim_; }
  const std::vector<Entry>& entries() const { return entries_; }
  double zero_tol() const { return zero_tol_; }
  double herm_tol() const { return herm_tol_; }
  // Worst |A_ij - conj(A_ji)| seen during validation, relative to max|entry|.
  double herm_deviation() const { return herm_deviation_; }

  double max_abs_entry() const;
  double trace_real() const;
  bool is_real() const;

  // Dense row-major n*n copy, missing entries zero.
  std::vector<Complex> to_dense() const;

 private:
  friend SparseHermitianMatrix adjoint(const SparseHermitianMatrix&);
  friend SparseHermitianMatrix entrywise_power(const SparseHermitianMatrix&,
                                               double);
  friend SparseHermitianMatrix scale(const SparseHermitianMatrix&, double);

  int dim_ = 0;
  std::vector<Entry> entries_;
  double zero_tol_ = 0.0;
  double herm_tol_ = 1e-10;
  double herm_deviation_ = 0.0;
};

// Conjugate transpose. For a valid Hermitian input this equals the input
// within herm_tol; entrywise it is an exact transpose-conjugate.
SparseHermitianMatrix adjoint(const SparseHermitianMatrix& a);

// Entrywise p-th power for nonnegative real matrices, p in [0,2].
// p = 0 maps every stored entry to 1 (support unchanged).
SparseHermitianMatrix entrywise_power(const SparseHermitianMatrix& a,
                                      double p);

// Multiply all entries by a real scalar c > 0.
SparseHermitianMatrix scale(const SparseHermitianMatrix& a, double c);

MatrixShapeSummary shape_summary(const SparseHermitianMatrix& a);

}  // namespace deqlens

#include "deqlens/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "deqlens/errors.hpp"

namespace deqlens {

namespace {

bool entry_less(const Entry& a, const Entry& b) {
  return a.row != b.row ? a.row < b.row : a.col < b.col;
}

}  // namespace

SparseHermitianMatrix SparseHermitianMatrix::from_coordinates(
    int dim, std::vector<Entry> entries, double zero_tol, double herm_tol) {
  if (dim < 1) throw DomainError("matrix dimension must be >= 1");
  if (zero_tol < 0 || herm_tol < 0)
    throw DomainError("tolerances must be nonnegative");

  for (const Entry& e : entries) {
    if (!std::isfinite(e.value.real()) || !std::isfinite(e.value.imag())) {
      std::ostringstream msg;
      msg << "non-finite value at (" << e.row << "," << e.col << ")";
      throw NonFiniteValueError(msg.str());
    }
    if (e.row < 0 || e.row >= dim || e.col < 0 || e.col >= dim) {
      std::ostringstream msg;
      msg << "index (" << e.row << "," << e.col << ") outside [0," << dim
          << ")";
      throw IndexOutOfRangeError(msg.str());
    }
  }

  // Drop entries at or below zero_tol before any structural checks.
  std::erase_if(entries,
                [&](const Entry& e) { return std::abs(e.value) <= zero_tol; });
  std::sort(entries.begin(), entries.end(), entry_less);

  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].row == entries[i - 1].row &&
        entries[i].col == entries[i - 1].col) {
      std::ostringstream msg;
      msg << "duplicate entry at (" << entries[i].row << "," << entries[i].col
          << ")";
      throw DuplicateEntryError(msg.str());
    }
  }

  double max_abs = 0.0;
  for (const Entry& e : entries) max_abs = std::max(max_abs, std::abs(e.value));

  // Hermitian check: every (i,j,v) needs (j,i,conj(v)) within herm_tol
  // relative to max|entry|; the worst offending pair is reported.
  std::map<std::pair<int, int>, Complex> lookup;
  for (const Entry& e : entries) lookup[{e.row, e.col}] = e.value;

  const double abs_tol = herm_tol * std::max(max_abs, 1e-300);
  double worst = 0.0;
  int worst_i = -1, worst_j = -1;
  for (const Entry& e : entries) {
    double dev;
    auto it = lookup.find({e.col, e.row});
    if (it == lookup.end()) {
      dev = std::abs(e.value);  // mirror entry missing entirely
    } else {
      dev = std::abs(e.value - std::conj(it->second));
    }
    if (dev > worst) {
      worst = dev;
      worst_i = e.row;
      worst_j = e.col;
    }
  }
  if (worst > abs_tol) {
    std::ostringstream msg;
    msg << "not Hermitian: worst pair (" << worst_i << "," << worst_j
        << ") deviates by " << worst << " (tolerance " << abs_tol << ")";
    throw NotHermitianError(msg.str());
  }

  SparseHermitianMatrix m;
  m.dim_ = dim;
  m.entries_ = std::move(entries);
  m.zero_tol_ = zero_tol;
  m.herm_tol_ = herm_tol;
  m.herm_deviation_ = max_abs > 0 ? worst / max_abs : 0.0;
  return m;
}

double SparseHermitianMatrix::max_abs_entry() const {
  double m = 0.0;
  for (const Entry& e : entries_) m = std::max(m, std::abs(e.value));
  return m;
}

double SparseHermitianMatrix::trace_real() const {
  double t = 0.0;
  for (const Entry& e : entries_)
    if (e.row == e.col) t += e.value.real();
  return t;
}

bool SparseHermitianMatrix::is_real() const {
  for (const Entry& e : entries_)
    if (e.value.imag() != 0.0) return false;
  return true;
}

std::vector<Complex> SparseHermitianMatrix::to_dense() const {
  std::vector<Complex> d(static_cast<std::size_t>(dim_) * dim_);
  for (const Entry& e : entries_)
    d[static_cast<std::size_t>(e.row) * dim_ + e.col] = e.value;
  return d;
}

SparseHermitianMatrix adjoint(const SparseHermitianMatrix& a) {
  SparseHermitianMatrix m;
  m.dim_ = a.dim_;
  m.zero_tol_ = a.zero_tol_;
  m.herm_tol_ = a.herm_tol_;
  m.herm_deviation_ = a.herm_deviation_;
  m.entries_.reserve(a.entries_.size());
  for (const Entry& e : a.entries_)
    m.entries_.push_back({e.col, e.row, std::conj(e.value)});
  std::sort(m.entries_.begin(), m.entries_.end(), entry_less);
  return m;
}

SparseHermitianMatrix entrywise_power(const SparseHermitianMatrix& a,
                                      double p) {
  if (p < 0.0 || p > 2.0) throw POutOfRangeError("power must be in [0,2]");
  for (const Entry& e : a.entries_) {
    if (e.value.imag() != 0.0 || e.value.real() < 0.0) {
      std::ostringstream msg;
      msg << "entrywise power undefined for entry (" << e.row << "," << e.col
          << ") = (" << e.value.real() << "," << e.value.imag() << ")";
      throw ComplexPowerUndefinedError(msg.str());
    }
  }
  SparseHermitianMatrix m;
  m.dim_ = a.dim_;
  m.zero_tol_ = a.zero_tol_;
  m.herm_tol_ = a.herm_tol_;
  m.herm_deviation_ = 0.0;
  m.entries_.reserve(a.entries_.size());
  for (const Entry& e : a.entries_) {
    double v = p == 0.0 ? 1.0 : std::pow(e.value.real(), p);
    m.entries_.push_back({e.row, e.col, Complex(v, 0.0)});
  }
  return m;
}

SparseHermitianMatrix scale(const SparseHermitianMatrix& a, double c) {
  if (!(c > 0.0) || !std::isfinite(c))
    throw DomainError("scale factor must be a positive finite real");
  SparseHermitianMatrix m = a;
  for (Entry& e : m.entries_) e.value *= c;
  return m;
}

MatrixShapeSummary shape_summary(const SparseHermitianMatrix& a) {
  MatrixShapeSummary s;
  s.dim = a.dim();
  s.nnz_per_row.assign(a.dim(), 0);
  for (const Entry& e : a.entries()) ++s.nnz_per_row[e.row];
  s.nnz = static_cast<std::int64_t>(a.entries().size());
  s.s = *std::max_element(s.nnz_per_row.begin(), s.nnz_per_row.end());
  return s;
}

}  // namespace deqlens

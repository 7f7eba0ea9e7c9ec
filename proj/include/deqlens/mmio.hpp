#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "deqlens/matrix.hpp"

namespace deqlens {

// Matrix Market coordinate reader. Accepts real/integer/complex fields with
// general, symmetric or hermitian qualifiers; for symmetric/hermitian files
// only the lower triangle is stored and the upper is mirrored on load.
// Indices in the file are 1-based.
SparseHermitianMatrix read_matrix_market(std::istream& in,
                                         double zero_tol = 0.0,
                                         double herm_tol = 1e-10);
SparseHermitianMatrix read_matrix_market_file(const std::string& path,
                                              double zero_tol = 0.0,
                                              double herm_tol = 1e-10);

// Writer: real matrices as "coordinate real symmetric", complex ones as
// "coordinate complex hermitian", lower triangle only, 17 significant
// digits. Extra comment lines (without the leading '%') go after the banner.
void write_matrix_market(std::ostream& out, const SparseHermitianMatrix& a,
                         const std::vector<std::string>& comments = {});
void write_matrix_market_file(const std::string& path,
                              const SparseHermitianMatrix& a,
                              const std::vector<std::string>& comments = {});

}  // namespace deqlens

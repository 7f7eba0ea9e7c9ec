#include "deqlens/mmio.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "deqlens/errors.hpp"

namespace deqlens {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  std::ostringstream msg;
  msg << "matrix market parse error at line " << line_no << ": " << what;
  throw ParseError(msg.str());
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

SparseHermitianMatrix read_matrix_market(std::istream& in, double zero_tol,
                                         double herm_tol) {
  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) parse_fail(1, "empty stream");
  ++line_no;

  std::istringstream banner(lower(line));
  std::string magic, object, fmt, field, symmetry;
  banner >> magic >> object >> fmt >> field >> symmetry;
  if (magic != "%%matrixmarket" || object != "matrix")
    parse_fail(line_no, "missing %%MatrixMarket matrix banner");
  if (fmt != "coordinate")
    parse_fail(line_no, "only coordinate format is supported");
  if (field != "real" && field != "integer" && field != "complex")
    parse_fail(line_no, "unsupported field '" + field + "'");
  if (symmetry != "general" && symmetry != "symmetric" &&
      symmetry != "hermitian")
    parse_fail(line_no, "unsupported symmetry '" + symmetry + "'");
  const bool complex_field = field == "complex";
  const bool mirrored = symmetry != "general";

  // Skip comments and blank lines up to the size line.
  long rows = -1, cols = -1, nnz = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '%') continue;
    std::istringstream sz(line);
    if (!(sz >> rows >> cols >> nnz)) parse_fail(line_no, "bad size line");
    break;
  }
  if (rows < 0) parse_fail(line_no, "missing size line");
  if (rows != cols) parse_fail(line_no, "matrix is not square");

  std::vector<Entry> entries;
  entries.reserve(static_cast<std::size_t>(nnz) * (mirrored ? 2 : 1));
  long seen = 0;
  while (seen < nnz) {
    if (!std::getline(in, line)) parse_fail(line_no + 1, "unexpected EOF");
    ++line_no;
    if (line.empty() || line[0] == '%') continue;
    std::istringstream es(line);
    long i, j;
    double re, im = 0.0;
    if (!(es >> i >> j >> re)) parse_fail(line_no, "bad entry line");
    if (complex_field && !(es >> im))
      parse_fail(line_no, "missing imaginary part");
    if (i < 1 || i > rows || j < 1 || j > cols)
      parse_fail(line_no, "index out of range");
    if (mirrored && j > i)
      parse_fail(line_no, "upper-triangle entry in a symmetric/hermitian file");
    Entry e{static_cast<int>(i - 1), static_cast<int>(j - 1), Complex(re, im)};
    entries.push_back(e);
    if (mirrored && i != j)
      entries.push_back({e.col, e.row, std::conj(e.value)});
    ++seen;
  }

  try {
    return SparseHermitianMatrix::from_coordinates(
        static_cast<int>(rows), std::move(entries), zero_tol, herm_tol);
  } catch (const Error& err) {
    throw ParseError(std::string("invalid matrix content: ") + err.what());
  }
}

SparseHermitianMatrix read_matrix_market_file(const std::string& path,
                                              double zero_tol,
                                              double herm_tol) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_matrix_market(in, zero_tol, herm_tol);
}

void write_matrix_market(std::ostream& out, const SparseHermitianMatrix& a,
                         const std::vector<std::string>& comments) {
  const bool real = a.is_real();
  std::vector<Entry> lower_tri;
  for (const Entry& e : a.entries())
    if (e.row >= e.col) lower_tri.push_back(e);

  out << "%%MatrixMarket matrix coordinate " << (real ? "real" : "complex")
      << ' ' << (real ? "symmetric" : "hermitian") << '\n';
  for (const std::string& c : comments) out << '%' << c << '\n';
  out << a.dim() << ' ' << a.dim() << ' ' << lower_tri.size() << '\n';
  for (const Entry& e : lower_tri) {
    out << (e.row + 1) << ' ' << (e.col + 1) << ' '
        << format_value(e.value.real());
    if (!real) out << ' ' << format_value(e.value.imag());
    out << '\n';
  }
}

void write_matrix_market_file(const std::string& path,
                              const SparseHermitianMatrix& a,
                              const std::vector<std::string>& comments) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  write_matrix_market(out, a, comments);
}

}  // namespace deqlens

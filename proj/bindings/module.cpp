#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "deqlens/errors.hpp"
#include "deqlens/families.hpp"
#include "deqlens/matrix.hpp"
#include "deqlens/mmio.hpp"
#include "deqlens/mu.hpp"
#include "deqlens/quasinorms.hpp"
#include "deqlens/spectrum.hpp"
#include "deqlens/verdict.hpp"

namespace py = pybind11;
using namespace deqlens;

namespace {

SparseHermitianMatrix matrix_from_tuples(
    int dim, const std::vector<std::tuple<int, int, Complex>>& tuples,
    double zero_tol, double herm_tol) {
  std::vector<Entry> entries;
  entries.reserve(tuples.size());
  for (const auto& [i, j, v] : tuples) entries.push_back({i, j, v});
  return SparseHermitianMatrix::from_coordinates(dim, std::move(entries),
                                                 zero_tol, herm_tol);
}

py::dict mu_dict(const MuResult& r) {
  py::dict d;
  d["mu_value"] = r.mu_value;
  d["frobenius"] = r.frobenius;
  d["mixed_min"] = r.mixed_min;
  d["p_star"] = r.p_star;
  d["inner_model"] = r.inner_model == InnerModel::MuF ? "MuF" : "MuP";
  d["deqineq_all_p"] = r.deqineq_all_p;
  return d;
}

py::dict spectrum_dict(const SpectrumSummary& s) {
  py::dict d;
  d["eigenvalues"] = s.eigenvalues;
  d["abs_min"] = s.abs_min;
  d["abs_max"] = s.abs_max;
  d["kappa"] = s.kappa;
  d["abs_sum"] = s.abs_sum;
  d["sparse_access_member"] = s.sparse_access_member;
  return d;
}

}  // namespace

PYBIND11_MODULE(_deqlens, m) {
  m.doc() = "Matrix dequantizability analysis: quasinorms, the mu pass, "
            "Hermitian spectra and verdict classification.";

  py::register_exception<Error>(m, "DeqlensError", PyExc_ValueError);

  py::class_<SparseHermitianMatrix>(m, "SparseHermitianMatrix")
      .def(py::init(&matrix_from_tuples), py::arg("dim"), py::arg("entries"),
           py::arg("zero_tol") = 0.0, py::arg("herm_tol") = 1e-10)
      .def_property_readonly("dim", &SparseHermitianMatrix::dim)
      .def_property_readonly("nnz",
                             [](const SparseHermitianMatrix& a) {
                               return a.entries().size();
                             })
      .def("entries",
           [](const SparseHermitianMatrix& a) {
             std::vector<std::tuple<int, int, Complex>> out;
             for (const Entry& e : a.entries())
               out.emplace_back(e.row, e.col, e.value);
             return out;
           })
      .def("adjoint", [](const SparseHermitianMatrix& a) { return adjoint(a); })
      .def("entrywise_power",
           [](const SparseHermitianMatrix& a, double p) {
             return entrywise_power(a, p);
           })
      .def("sparsity",
           [](const SparseHermitianMatrix& a) { return shape_summary(a).s; });

  m.def("identity", &identity, py::arg("n"));
  m.def("diag_power_family", &diag_power_family, py::arg("n"), py::arg("d"));
  m.def("random_block_hermitian", &random_block_hermitian, py::arg("n"),
        py::arg("s"), py::arg("spectrum_range"), py::arg("seed"));
  m.def("random_support_hermitian", &random_support_hermitian, py::arg("n"),
        py::arg("s"), py::arg("seed"));

  m.def("read_matrix_market", &read_matrix_market_file, py::arg("path"),
        py::arg("zero_tol") = 0.0, py::arg("herm_tol") = 1e-10);
  m.def("write_matrix_market",
        [](const std::string& path, const SparseHermitianMatrix& a) {
          write_matrix_market_file(path, a);
        },
        py::arg("path"), py::arg("matrix"));

  m.def("frobenius_norm", &frobenius_norm, py::arg("matrix"));
  m.def("s_p", &s_p, py::arg("matrix"), py::arg("p"));
  m.def("s_zero", &s_zero, py::arg("matrix"));
  m.def("mu_objective", &mu_objective, py::arg("matrix"), py::arg("p"));
  m.def("mu",
        [](const SparseHermitianMatrix& a, int grid, double p_tol) {
          MuConfig cfg;
          cfg.grid_resolution = grid;
          cfg.p_tol = p_tol;
          return mu_dict(mu(a, cfg));
        },
        py::arg("matrix"), py::arg("grid_resolution") = 201,
        py::arg("p_tol") = 1e-9);
  m.def("eigenvalues", &eigenvalues, py::arg("matrix"));
  m.def("spectrum",
        [](const SparseHermitianMatrix& a) {
          return spectrum_dict(analyze_spectrum(a));
        },
        py::arg("matrix"));
  m.def("corollary_family_check",
        [](int n, double d) {
          const Predicate p = corollary_family_check(n, d);
          py::dict out;
          out["holds"] = p.holds;
          out["lhs"] = p.lhs;
          out["rhs"] = p.rhs;
          out["note"] = p.note;
          return out;
        },
        py::arg("n"), py::arg("d"));
  m.def("classify_json",
        [](const SparseHermitianMatrix& a, bool normalize, int grid,
           double p_tol) {
          VerdictConfig cfg;
          cfg.normalize = normalize;
          cfg.mu.grid_resolution = grid;
          cfg.mu.p_tol = p_tol;
          return report_to_json(classify(a, cfg));
        },
        py::arg("matrix"), py::arg("normalize") = false,
        py::arg("grid_resolution") = 201, py::arg("p_tol") = 1e-9);
}

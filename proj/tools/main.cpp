#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "deqlens/errors.hpp"
#include "deqlens/families.hpp"
#include "deqlens/mmio.hpp"
#include "deqlens/quasinorms.hpp"
#include "deqlens/verdict.hpp"

using namespace deqlens;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitSolverFailure = 3;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  return v ? std::atoi(v) : fallback;
}

double env_double(const char* name, double fallback) {
  const char* v = std::getenv(name);
  return v ? std::atof(v) : fallback;
}

void print_predicate(std::ostream& out, const std::string& name,
                     const Predicate& p) {
  out << "  " << name << ": " << (p.holds ? "holds" : "fails") << "  ("
      << p.relation << ": " << fmt(p.lhs) << " vs " << fmt(p.rhs) << ")\n";
}

void print_report(std::ostream& out, const VerdictReport& rep) {
  out << "matrix: dim=" << rep.dim << " s=" << rep.s << " nnz=" << rep.nnz
      << "\n";
  out << "mu: value=" << fmt(rep.mu.mu_value)
      << " frobenius=" << fmt(rep.mu.frobenius)
      << " mixed_min=" << fmt(rep.mu.mixed_min)
      << " p_star=" << fmt(rep.mu.p_star) << " inner_model="
      << (rep.mu.inner_model == InnerModel::MuF ? "MuF" : "MuP") << "\n";
  out << "spectrum: |lambda|min=" << fmt(rep.spectrum.abs_min)
      << " |lambda|max=" << fmt(rep.spectrum.abs_max) << " kappa="
      << (rep.spectrum.kappa_finite ? fmt(rep.spectrum.kappa) : "Infinite")
      << " sum|lambda|=" << fmt(rep.spectrum.abs_sum) << " member="
      << (rep.spectrum.sparse_access_member ? "yes" : "no") << "\n";
  out << "predicates:\n";
  print_predicate(out, "lemma_deq_sufficient", rep.lemma_deq_sufficient);
  print_predicate(out, "lemma_undeq_bound", rep.lemma_undeq_bound);
  if (rep.theorem_form_A)
    print_predicate(out, "theorem_form_A", *rep.theorem_form_A);
  if (rep.theorem_form_B)
    print_predicate(out, "theorem_form_B", *rep.theorem_form_B);
  if (rep.intermediate_sqrt_s_bound)
    print_predicate(out, "intermediate_sqrt_s_bound",
                    *rep.intermediate_sqrt_s_bound);
  out << "classification: " << to_string(rep.classification) << "\n";
}

int run_analyze(const std::string& path, const std::string& json_path,
                const std::string& profile_csv, const std::string& spectrum_csv,
                bool normalize, int grid, double p_tol) {
  SparseHermitianMatrix a = [&] {
    try {
      return read_matrix_market_file(path);
    } catch (const Error& err) {
      std::cerr << "error: " << err.what() << "\n";
      std::exit(kExitBadInput);
    }
  }();
  VerdictConfig cfg;
  cfg.normalize = normalize;
  cfg.mu.grid_resolution = grid;
  cfg.mu.p_tol = p_tol;
  VerdictReport rep;
  try {
    rep = classify(a, cfg);
  } catch (const ConvergenceFailureError& err) {
    std::cerr << "solver failure: " << err.what() << "\n";
    return kExitSolverFailure;
  }
  print_report(std::cout, rep);
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << json_path << "'\n";
      return kExitBadInput;
    }
    out << report_to_json(rep);
  }
  if (!profile_csv.empty()) {
    std::ofstream out(profile_csv, std::ios::binary);
    write_profile_csv(out, profile(a, grid));
  }
  if (!spectrum_csv.empty()) {
    std::ofstream out(spectrum_csv, std::ios::binary);
    write_spectrum_csv(out, rep.spectrum);
  }
  return kExitOk;
}

struct IntRange {
  int lo = 0;
  int hi = -1;  // empty by default
};

IntRange parse_range(const std::string& text) {
  IntRange r;
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    r.lo = r.hi = std::stoi(text);
  } else {
    r.lo = std::stoi(text.substr(0, colon));
    r.hi = std::stoi(text.substr(colon + 1));
  }
  return r;
}

const char* kSweepHeader =
    "family,n,d,s,seed,frobenius,mu,p_star,inner_model,"
    "lemma_deq_lhs,lemma_deq_rhs,lemma_deq,"
    "lemma_undeq_lhs,lemma_undeq_rhs,lemma_undeq,"
    "form_A_lhs,form_A_rhs,form_A,"
    "form_B_lhs,form_B_rhs,form_B,"
    "intermediate_lhs,intermediate_rhs,intermediate,"
    "classification,error";

std::string opt_pred(const std::optional<Predicate>& p) {
  if (!p) return ",,";
  std::ostringstream s;
  s << fmt(p->lhs) << ',' << fmt(p->rhs) << ',' << (p->holds ? "1" : "0");
  return s.str();
}

struct SweepPoint {
  FamilySpec spec;
  std::string key;  // family,n,d,s,seed
};

std::string sweep_row(const SweepPoint& pt) {
  std::ostringstream row;
  row << pt.key << ',';
  try {
    const SparseHermitianMatrix a = generate(pt.spec);
    const VerdictReport rep = classify(a);
    row << fmt(rep.mu.frobenius) << ',' << fmt(rep.mu.mu_value) << ','
        << fmt(rep.mu.p_star) << ','
        << (rep.mu.inner_model == InnerModel::MuF ? "MuF" : "MuP") << ','
        << fmt(rep.lemma_deq_sufficient.lhs) << ','
        << fmt(rep.lemma_deq_sufficient.rhs) << ','
        << (rep.lemma_deq_sufficient.holds ? "1" : "0") << ','
        << fmt(rep.lemma_undeq_bound.lhs) << ','
        << fmt(rep.lemma_undeq_bound.rhs) << ','
        << (rep.lemma_undeq_bound.holds ? "1" : "0") << ','
        << opt_pred(rep.theorem_form_A) << ','
        << opt_pred(rep.theorem_form_B) << ','
        << opt_pred(rep.intermediate_sqrt_s_bound) << ','
        << to_string(rep.classification) << ',';
  } catch (const Error& err) {
    row << std::string(19, ',') << "error: " << err.what();
  }
  return row.str();
}

int run_sweep(const std::string& family, const std::string& n_range,
              const std::string& d_offset_range, const std::string& s_range,
              std::uint64_t seed_base, const std::string& out_path,
              bool resume) {
  std::vector<SweepPoint> points;
  const IntRange nr = parse_range(n_range);
  auto key_of = [](const FamilySpec& s, const std::string& fam) {
    std::ostringstream k;
    k << fam << ',' << s.n << ','
      << (s.kind == FamilyKind::DiagPower ? fmt(s.d) : "") << ','
      << (s.kind == FamilyKind::DiagPower || s.kind == FamilyKind::Identity
              ? ""
              : std::to_string(s.s))
      << ','
      << (s.kind == FamilyKind::RandomSupportHermitian
              ? std::to_string(s.seed)
              : "");
    return k.str();
  };

  for (int n = nr.lo; n <= nr.hi; ++n) {
    if (family == "identity") {
      FamilySpec fs;
      fs.kind = FamilyKind::Identity;
      fs.n = n;
      points.push_back({fs, key_of(fs, family)});
    } else if (family == "diag-power") {
      const IntRange dr = parse_range(d_offset_range);
      for (int off = dr.lo; off <= dr.hi; ++off) {
        FamilySpec fs;
        fs.kind = FamilyKind::DiagPower;
        fs.n = n;
        fs.d = n + off;
        if (!(fs.d > n)) continue;  // skipped, precondition d > n
        points.push_back({fs, key_of(fs, family)});
      }
    } else if (family == "random-support") {
      const IntRange sr = parse_range(s_range);
      for (int s = sr.lo; s <= sr.hi; ++s) {
        if (s < 1 || s > n) continue;
        FamilySpec fs;
        fs.kind = FamilyKind::RandomSupportHermitian;
        fs.n = n;
        fs.s = s;
        fs.seed = seed_base + static_cast<std::uint64_t>(n) * 1000 + s;
        points.push_back({fs, key_of(fs, family)});
      }
    } else {
      std::cerr << "error: unknown sweep family '" << family << "'\n";
      return kExitBadInput;
    }
  }
  if (points.empty()) {
    std::cerr << "error: empty sweep range\n";
    return kExitBadInput;
  }

  std::set<std::string> done;
  bool have_header = false;
  if (resume) {
    std::ifstream in(out_path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.rfind("family,", 0) == 0) {
        have_header = true;
        continue;
      }
      // key = first five comma-separated fields
      std::size_t pos = 0;
      for (int c = 0; c < 5 && pos != std::string::npos; ++c)
        pos = line.find(',', pos == 0 && c == 0 ? 0 : pos + 1);
      if (pos != std::string::npos) done.insert(line.substr(0, pos));
    }
  }

  std::ofstream out(out_path,
                    resume ? std::ios::app | std::ios::binary
                           : std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return kExitBadInput;
  }
  if (!resume || !have_header) out << kSweepHeader << '\n';

  int failures = 0;
  for (const SweepPoint& pt : points) {
    if (done.count(pt.key)) continue;
    const std::string row = sweep_row(pt);
    if (row.find(",error: ") != std::string::npos) ++failures;
    out << row << '\n';
  }
  return failures == static_cast<int>(points.size()) ? kExitSolverFailure
                                                     : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deqlens: dequantizability analysis of sparse Hermitian "
               "matrices"};
  app.require_subcommand(1);

  int grid = env_int("DEQLENS_GRID", 201);
  double p_tol = env_double("DEQLENS_P_TOL", 1e-9);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "classify a matrix file");
  std::string in_path, json_path, profile_csv, spectrum_csv;
  bool normalize = false;
  analyze->add_option("matrix", in_path, "Matrix Market file")->required();
  analyze->add_option("--json", json_path, "write the JSON verdict report");
  analyze->add_option("--profile-csv", profile_csv,
                      "write the quasinorm profile CSV");
  analyze->add_option("--spectrum-csv", spectrum_csv,
                      "write the spectrum CSV");
  analyze->add_flag("--normalize", normalize,
                    "divide by |lambda|_max before analysis");
  analyze->add_option("--grid", grid, "p-grid resolution");
  analyze->add_option("--p-tol", p_tol, "p refinement tolerance");

  // generate
  auto* gen = app.add_subcommand("generate", "write a family matrix");
  std::string family, out_path;
  int n = 3, s = 1;
  double d = 0.0, lo = 0.5, hi = 1.0;
  std::uint64_t seed = 0;
  gen->add_option("family", family,
                  "identity | diag-power | random-block | random-support")
      ->required();
  gen->add_option("--n", n, "dimension")->required();
  gen->add_option("--d", d, "diag-power base (requires d > n)");
  gen->add_option("--s", s, "target sparsity");
  gen->add_option("--lo", lo, "spectrum lower bound (random-block)");
  gen->add_option("--hi", hi, "spectrum upper bound (random-block)");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("-o,--out", out_path, "output path")->required();

  // check-corollary
  auto* cor = app.add_subcommand("check-corollary",
                                 "exact d^n vs d^(n-1)(n-1)+1 verdict");
  int cn = 0;
  double cd = 0.0;
  cor->add_option("n", cn, "dimension")->required();
  cor->add_option("d", cd, "base, must exceed n")->required();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "CSV over a parameter range");
  std::string sw_family, sw_n = "2:6", sw_d_off = "1:3", sw_s = "1:1",
              sw_out;
  std::uint64_t sw_seed_base = 0;
  bool sw_resume = false;
  sweep->add_option("--family", sw_family,
                    "identity | diag-power | random-support")
      ->required();
  sweep->add_option("--n", sw_n, "n range, 'a:b' inclusive");
  sweep->add_option("--d-offset", sw_d_off, "d = n + offset range 'a:b'");
  sweep->add_option("--s", sw_s, "sparsity range 'a:b'");
  sweep->add_option("--seed-base", sw_seed_base, "seed base");
  sweep->add_option("-o,--out", sw_out, "output CSV path")->required();
  sweep->add_flag("--resume", sw_resume, "skip rows already in the file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze)
      return run_analyze(in_path, json_path, profile_csv, spectrum_csv,
                         normalize, grid, p_tol);
    if (*gen) {
      FamilySpec fs;
      fs.n = n;
      fs.d = d;
      fs.s = s;
      fs.spectrum_range = {lo, hi};
      fs.seed = seed;
      if (family == "identity")
        fs.kind = FamilyKind::Identity;
      else if (family == "diag-power")
        fs.kind = FamilyKind::DiagPower;
      else if (family == "random-block")
        fs.kind = FamilyKind::RandomBlockHermitian;
      else if (family == "random-support")
        fs.kind = FamilyKind::RandomSupportHermitian;
      else {
        std::cerr << "error: unknown family '" << family << "'\n";
        return kExitBadInput;
      }
      write_matrix_market_file(out_path, generate(fs),
                               provenance_comments(fs));
      return kExitOk;
    }
    if (*cor) {
      if (cn < 2 || !(cd > cn)) {
        std::cerr << "domain: requires n >= 2 and d > n\n";
        return 1;
      }
      const Predicate p = corollary_family_check(cn, cd);
      std::cout << (p.note.empty()
                        ? fmt(p.lhs) + " vs " + fmt(p.rhs)
                        : p.note)
                << (p.holds ? " => dequantizable" : " => bound not violated")
                << "\n";
      return p.holds ? kExitOk : 1;
    }
    if (*sweep)
      return run_sweep(sw_family, sw_n, sw_d_off, sw_s, sw_seed_base, sw_out,
                       sw_resume);
  } catch (const ConvergenceFailureError& err) {
    std::cerr << "solver failure: " << err.what() << "\n";
    return kExitSolverFailure;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

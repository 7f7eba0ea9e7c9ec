#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "deqlens/families.hpp"
#include "deqlens/verdict.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(DEQLENS_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe))
    res.output.append(buf, got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

int count_rows(const std::string& csv, const std::string& needle) {
  int count = 0;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line))
    if (line.find(needle) != std::string::npos) ++count;
  return count;
}

const std::string kTmp = "cli_test_tmp_";

}  // namespace

TEST_CASE("generate then analyze reproduces the in-process verdict") {
  const std::string mtx = kTmp + "D.mtx";
  const std::string json = kTmp + "D.json";
  CHECK(run("generate diag-power --n 3 --d 4 -o " + mtx).exit_code == 0);

  const RunResult ana = run("analyze " + mtx + " --json " + json);
  CHECK(ana.exit_code == 0);
  CHECK(ana.output.find("classification: DequantizableBySpectrum") !=
        std::string::npos);

  const std::string expected =
      deqlens::report_to_json(deqlens::classify(deqlens::diag_power_family(3, 4)));
  CHECK(slurp(json) == expected);
}

TEST_CASE("analyze identity is inconclusive") {
  const std::string mtx = kTmp + "I3.mtx";
  CHECK(run("generate identity --n 3 -o " + mtx).exit_code == 0);
  const RunResult ana = run("analyze " + mtx);
  CHECK(ana.exit_code == 0);
  CHECK(ana.output.find("classification: Inconclusive") != std::string::npos);
}

TEST_CASE("analyze rejects a corrupt file with exit 2") {
  const std::string mtx = kTmp + "corrupt.mtx";
  std::ofstream(mtx) << "%%MatrixMarket matrix coordinate real symmetric\n"
                        "2 2 1\n"
                        "1 garbage\n";
  const RunResult ana = run("analyze " + mtx);
  CHECK(ana.exit_code == 2);
  CHECK(ana.output.find("line 3") != std::string::npos);
  CHECK(run("analyze does_not_exist.mtx").exit_code == 2);
}

TEST_CASE("generate domain error exits 2") {
  CHECK(run("generate diag-power --n 3 --d 2 -o " + kTmp + "x.mtx").exit_code ==
        2);
}

TEST_CASE("check-corollary") {
  const RunResult ok = run("check-corollary 3 4");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("64 vs 33") != std::string::npos);
  CHECK(ok.output.find("dequantizable") != std::string::npos);

  const RunResult big = run("check-corollary 5 6");
  CHECK(big.exit_code == 0);
  CHECK(big.output.find("7776 vs 5185") != std::string::npos);

  CHECK(run("check-corollary 4 4").exit_code == 1);
}

TEST_CASE("sweep") {
  const std::string csv = kTmp + "sweep.csv";
  const RunResult sw =
      run("sweep --family diag-power --n 2:6 --d-offset 1:3 -o " + csv);
  CHECK(sw.exit_code == 0);
  const std::string content = slurp(csv);
  CHECK(count_rows(content, "DequantizableBySpectrum") == 15);
  // golden row for the worked n=3, d=4 instance
  CHECK(content.find("diag-power,3,4,,,") != std::string::npos);

  const std::string icsv = kTmp + "sweep_id.csv";
  CHECK(run("sweep --family identity --n 2:10 -o " + icsv).exit_code == 0);
  CHECK(count_rows(slurp(icsv), "Inconclusive") == 9);

  // empty range
  CHECK(run("sweep --family identity --n 5:2 -o " + kTmp + "e.csv").exit_code ==
        2);

  // resume adds nothing when every row exists
  const std::string before = slurp(csv);
  CHECK(run("sweep --family diag-power --n 2:6 --d-offset 1:3 --resume -o " +
            csv)
            .exit_code == 0);
  CHECK(slurp(csv) == before);
}

TEST_CASE("repeated runs are byte-identical") {
  const std::string mtx = kTmp + "R.mtx";
  CHECK(run("generate random-support --n 6 --s 3 --seed 11 -o " + mtx)
            .exit_code == 0);
  const std::string mtx2 = kTmp + "R2.mtx";
  CHECK(run("generate random-support --n 6 --s 3 --seed 11 -o " + mtx2)
            .exit_code == 0);
  CHECK(slurp(mtx) == slurp(mtx2));

  const std::string j1 = kTmp + "r1.json", j2 = kTmp + "r2.json";
  CHECK(run("analyze " + mtx + " --json " + j1).exit_code == 0);
  CHECK(run("analyze " + mtx + " --json " + j2).exit_code == 0);
  CHECK(slurp(j1) == slurp(j2));
}

TEST_CASE("profile and spectrum csv outputs") {
  const std::string mtx = kTmp + "P.mtx";
  CHECK(run("generate diag-power --n 3 --d 4 -o " + mtx).exit_code == 0);
  const std::string pcsv = kTmp + "p.csv", scsv = kTmp + "s.csv";
  CHECK(run("analyze " + mtx + " --profile-csv " + pcsv + " --spectrum-csv " +
            scsv)
            .exit_code == 0);
  CHECK(slurp(pcsv).rfind("p,s_p_A,", 0) == 0);
  CHECK(slurp(scsv).rfind("index,eigenvalue\n0,0.015625", 0) == 0);
}

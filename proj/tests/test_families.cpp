#include <doctest.h>

#include <cmath>
#include <sstream>

#include "deqlens/errors.hpp"
#include "deqlens/families.hpp"
#include "deqlens/mmio.hpp"
#include "deqlens/quasinorms.hpp"
#include "deqlens/spectrum.hpp"

using namespace deqlens;

TEST_CASE("diag_power_family") {
  const auto d34 = diag_power_family(3, 4);
  REQUIRE(d34.entries().size() == 3);
  CHECK(d34.entries()[0].value.real() == 0.25);
  CHECK(d34.entries()[1].value.real() == 0.0625);
  CHECK(d34.entries()[2].value.real() == 0.015625);
  CHECK(s_zero(d34) == 1);

  const auto d23 = diag_power_family(2, 3);
  CHECK(d23.entries()[0].value.real() == doctest::Approx(1.0 / 3));
  CHECK(d23.entries()[1].value.real() == doctest::Approx(1.0 / 9));

  CHECK_THROWS_AS(diag_power_family(3, 2), DomainError);
  CHECK_THROWS_AS(diag_power_family(3, 3), DomainError);

  // kappa = d^(n-1) across the family
  for (int n = 2; n <= 6; ++n) {
    for (double d : {n + 1.0, n + 2.5}) {
      const auto a = diag_power_family(n, d);
      CHECK(analyze_spectrum(a).kappa ==
            doctest::Approx(std::pow(d, n - 1)).epsilon(1e-10));
    }
  }
}

TEST_CASE("identity") {
  CHECK(identity(1).entries().size() == 1);
  CHECK(identity(3).entries().size() == 3);
  CHECK_THROWS_AS(identity(0), DomainError);
}

TEST_CASE("random_block_hermitian") {
  // s = 1 forces a diagonal matrix
  const auto diag = random_block_hermitian(4, 1, {0.5, 1.0}, 7);
  CHECK(shape_summary(diag).s == 1);
  for (const Entry& e : diag.entries()) {
    CHECK(e.row == e.col);
    CHECK(e.value.real() >= 0.5);
    CHECK(e.value.real() <= 1.0);
  }

  const auto sample = random_block_hermitian_with_spectrum(4, 2, {0.25, 1}, 7);
  CHECK(shape_summary(sample.matrix).s <= 2);
  const auto ev = eigenvalues(sample.matrix);
  for (std::size_t i = 0; i < ev.size(); ++i) {
    CHECK(std::abs(ev[i] - sample.spectrum[i]) <= 1e-8);
    CHECK(ev[i] >= 0.25 - 1e-8);
    CHECK(ev[i] <= 1.0 + 1e-8);
  }

  CHECK_THROWS_AS(random_block_hermitian(4, 5, {0.5, 1.0}, 7), DomainError);
  CHECK_THROWS_AS(random_block_hermitian(4, 2, {0.0, 1.0}, 7), DomainError);
}

TEST_CASE("random_support_hermitian") {
  const auto one = random_support_hermitian_flagged(3, 1, 1);
  CHECK(shape_summary(one.matrix).s <= 1);
  CHECK(analyze_spectrum(one.matrix).abs_max == doctest::Approx(1.0));

  const auto dense = random_support_hermitian_flagged(3, 3, 1);
  CHECK(analyze_spectrum(dense.matrix).abs_max ==
        doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(random_support_hermitian(3, 0, 1), DomainError);
  CHECK_THROWS_AS(random_support_hermitian(3, 4, 1), DomainError);

  // sparsity cap respected for mid-range s
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = random_support_hermitian(8, 3, seed);
    CHECK(shape_summary(a).s <= 3);
  }
}

TEST_CASE("identical FamilySpec gives byte-identical serialization") {
  FamilySpec spec;
  spec.kind = FamilyKind::RandomSupportHermitian;
  spec.n = 6;
  spec.s = 3;
  spec.seed = 999;
  std::ostringstream a, b;
  write_matrix_market(a, generate(spec), provenance_comments(spec));
  write_matrix_market(b, generate(spec), provenance_comments(spec));
  CHECK(a.str() == b.str());
  CHECK(a.str().find("% seed: 999") != std::string::npos);
}

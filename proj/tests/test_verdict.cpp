#include <doctest.h>

#include <cmath>
#include <json.hpp>

#include "deqlens/errors.hpp"
#include "deqlens/families.hpp"
#include "deqlens/verdict.hpp"
#include "helpers.hpp"

using namespace deqlens;
using namespace deqlens::testing;

TEST_CASE("lemma_deq_sufficient") {
  CHECK(lemma_deq_sufficient(matrix_Y(), mu(matrix_Y())).holds);
  CHECK_FALSE(lemma_deq_sufficient(matrix_D(), mu(matrix_D())).holds);
  const auto i2 = identity(2);
  CHECK_FALSE(lemma_deq_sufficient(i2, mu(i2)).holds);  // mixed 1 < sqrt(2)
}

TEST_CASE("lemma_undeq_bound") {
  const auto d = lemma_undeq_bound(matrix_D());
  CHECK(d.holds);
  CHECK(d.lhs == 1.0);
  CHECK(d.rhs == doctest::Approx(0.066650390625 / 0.0625).epsilon(1e-12));

  CHECK(lemma_undeq_bound(matrix_I3()).holds);  // 1 < 3
  const auto j = lemma_undeq_bound(matrix_J());
  CHECK_FALSE(j.holds);  // 2 < 2 fails, strict
  CHECK(j.lhs == 2.0);
  CHECK(j.rhs == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("theorem forms on the worked diagonal instance") {
  const auto spec = analyze_spectrum(matrix_D());
  const auto form_a = theorem_form_A(spec, 1);
  CHECK(form_a.holds);
  CHECK(form_a.lhs == doctest::Approx(16.0).epsilon(1e-12));
  CHECK(form_a.rhs == doctest::Approx(21.0).epsilon(1e-10));

  const auto form_b = theorem_form_B(spec, 1, 3);
  CHECK_FALSE(form_b.holds);
  CHECK(form_b.lhs == doctest::Approx(0.015625).epsilon(1e-12));
  CHECK(form_b.rhs == doctest::Approx(1.0 / 33.0).epsilon(1e-10));

  const auto inter = intermediate_sqrt_s_bound(matrix_D(), spec, 1);
  CHECK(inter.holds);
  CHECK(inter.rhs == doctest::Approx(1.032669477616144).epsilon(1e-10));
}

TEST_CASE("theorem forms on identity and X") {
  for (int n : {2, 5, 9}) {
    const auto spec = analyze_spectrum(identity(n));
    CHECK(theorem_form_A(spec, 1).holds);  // 1 < n
    const auto form_b = theorem_form_B(spec, 1, n);
    CHECK(form_b.holds);  // 1 > 1/n
    CHECK(form_b.lhs == doctest::Approx(1.0));
    CHECK(form_b.rhs == doctest::Approx(1.0 / n));
  }
  // strict boundary: 0.5 > 0.5 fails
  const auto spec_x = analyze_spectrum(matrix_X());
  CHECK(theorem_form_A(spec_x, 1).holds);
  CHECK_FALSE(theorem_form_B(spec_x, 1, 2).holds);
}

TEST_CASE("theorem predicates demand membership") {
  const auto spec = analyze_spectrum(scale(matrix_I3(), 2.0));
  CHECK_FALSE(spec.sparse_access_member);
  CHECK_THROWS_AS(theorem_form_A(spec, 1), NotSparseAccessError);
  CHECK_THROWS_AS(theorem_form_B(spec, 1, 3), NotSparseAccessError);
}

TEST_CASE("corollary_family_check") {
  const auto p34 = corollary_family_check(3, 4);
  CHECK(p34.holds);
  CHECK(p34.lhs == 64.0);
  CHECK(p34.rhs == 33.0);
  CHECK(p34.note.find("64 vs 33") != std::string::npos);

  CHECK(corollary_family_check(2, 3).holds);  // 9 >= 4
  CHECK_THROWS_AS(corollary_family_check(3, 3.0), DomainError);
  CHECK_THROWS_AS(corollary_family_check(1, 5.0), DomainError);

  // real d goes through the factored form
  const auto preal = corollary_family_check(3, 3.5);
  CHECK(preal.holds);
  CHECK(preal.lhs == 3.5);
}

TEST_CASE("classify precedence") {
  CHECK(classify(matrix_D()).classification ==
        Classification::DequantizableBySpectrum);
  CHECK(classify(matrix_I3()).classification == Classification::Inconclusive);
  CHECK(classify(matrix_Y()).classification ==
        Classification::DequantizableSufficient);
  CHECK(classify(scale(matrix_I3(), 2.0)).classification ==
        Classification::NotSparseAccess);

  // the D report records form A holding even though form B fired
  const auto rep = classify(matrix_D());
  REQUIRE(rep.theorem_form_A.has_value());
  CHECK(rep.theorem_form_A->holds);
  CHECK_FALSE(rep.theorem_form_B->holds);
}

TEST_CASE("evidence consistency across the corpus") {
  auto check_pred = [](const Predicate& p) {
    if (p.relation == "lhs < rhs")
      CHECK(p.holds == (p.lhs < p.rhs));
    else if (p.relation == "lhs > rhs")
      CHECK(p.holds == (p.lhs > p.rhs));
  };
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto a = random_support_hermitian(3 + seed % 5, 1 + seed % 3, seed);
    const auto rep = classify(a);
    check_pred(rep.lemma_undeq_bound);
    if (rep.theorem_form_A) check_pred(*rep.theorem_form_A);
    if (rep.theorem_form_B) check_pred(*rep.theorem_form_B);
    if (rep.intermediate_sqrt_s_bound)
      check_pred(*rep.intermediate_sqrt_s_bound);
    // consistency: sufficient condition iff MuF selected by deqineq
    CHECK(rep.lemma_deq_sufficient.holds ==
          (rep.mu.inner_model == InnerModel::MuF && rep.mu.deqineq_all_p));
  }
}

TEST_CASE("form A is invariant under positive scaling while member") {
  const auto y = matrix_Y();
  const auto base = classify(y);
  const auto scaled = classify(scale(y, 0.5));
  REQUIRE(base.theorem_form_A.has_value());
  REQUIRE(scaled.theorem_form_A.has_value());
  CHECK(base.theorem_form_A->holds == scaled.theorem_form_A->holds);
}

TEST_CASE("json report shape and determinism") {
  const auto rep = classify(matrix_D());
  const std::string text = report_to_json(rep);
  CHECK(text == report_to_json(classify(matrix_D())));

  const auto j = nlohmann::json::parse(text);
  CHECK(j["schema_version"] == 1);
  CHECK(j["matrix"]["dim"] == 3);
  CHECK(j["classification"] == "DequantizableBySpectrum");
  CHECK(j["predicates"]["theorem_form_B"]["holds"] == false);
  CHECK(j["predicates"]["theorem_form_B"]["lhs"] == 0.015625);
  CHECK(j["mu"]["inner_model"] == "MuP");
  CHECK(j["config"].contains("grid_resolution"));

  // singular spectrum serializes kappa as "Infinite"
  const auto singular = make(3, {{0, 0, {1, 0}}, {1, 1, {0.5, 0}}});
  const auto js =
      nlohmann::json::parse(report_to_json(classify(singular)));
  CHECK(js["spectrum"]["kappa"] == "Infinite");
  CHECK(js["classification"] == "NotSparseAccess");
  CHECK_FALSE(js["predicates"].contains("theorem_form_A"));
}

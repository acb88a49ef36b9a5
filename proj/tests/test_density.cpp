#include <doctest.h>

#include <cmath>
#include <numeric>

#include "nearprim/arith.hpp"
#include "nearprim/density.hpp"
#include "nearprim/kummer.hpp"

using namespace nearprim;

TEST_CASE("nontriviality condition") {
  CHECK(condition_nontrivial(2, 4, 3));
  CHECK_THROWS_AS(condition_nontrivial(3, 6, 2), DomainError);
  CHECK_FALSE(condition_nontrivial(3, 6, 5));
  for (std::int64_t d = 1; d <= 20; ++d) {
    for (std::int64_t a = 1; a <= d; ++a) {
      if (std::gcd(a, d) == 1) CHECK(condition_nontrivial(1, d, a));
    }
  }
  CHECK_THROWS_AS(condition_nontrivial(2, 4, 2), DomainError);
}

TEST_CASE("task validation and regimes") {
  CHECK_THROWS_AS(ProgressionTask(1, 1, 1, 1), DomainError);
  CHECK_THROWS_AS(ProgressionTask(2, 1, 4, 2), DomainError);
  CHECK_THROWS_AS(ProgressionTask(2, 0, 4, 1), DomainError);
  const ProgressionTask even_q(2, 2, 4, 1, 4);
  CHECK_FALSE(even_q.elementary_regime());
  CHECK(even_q.main_violation() == "gcd(q,2dgt) != 1");
  CHECK(ProgressionTask(2, 1, 1, 1, 2).main_violation() == "q > 2");
  const ProgressionTask q_divides_g(3, 1, 1, 1, 3);
  CHECK(q_divides_g.elementary_regime());
  CHECK_FALSE(q_divides_g.radical_regime());
  CHECK(q_divides_g.radical_violation() == "gcd(q,2dgt) != 1");
  CHECK(ProgressionTask(2, 1, 3, 1, 5).main_regime());
  CHECK(ProgressionTask(2, 1, 3, 1).radical_regime());
}

TEST_CASE("subset of Q") {
  const auto p = predicted_density_subset_Q(ProgressionTask(4, 2, 3, 1, 5));
  CHECK(p.value == Rational(1, 40));
  CHECK(p.degree == 40);
  CHECK(p.source == DensitySource::q_subset);
  CHECK_FALSE(p.conditional_on_nonempty);
  CHECK(predicted_density_subset_Q(ProgressionTask(2, 1, 1, 1, 3)).value == Rational(1, 6));
  try {
    predicted_density_subset_Q(ProgressionTask(2, 2, 4, 1, 4));
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(e.hypothesis() == "gcd(q,2dt) != 1");
  }
}

TEST_CASE("R-class predictions") {
  const auto r = predicted_density_R(ProgressionTask(2, 1, 3, 1, 5));
  CHECK(r.value == Rational(1, 40));
  CHECK(r.source == DensitySource::r_class);
  CHECK(r.conditional_on_nonempty);
  CHECK(r.hypothesis_holds == true);
  CHECK(predicted_density_R(ProgressionTask(2, 1, 1, 1)).value == Rational(1));
  const auto empty = predicted_density_R(ProgressionTask(5, 2, 5, 2));
  CHECK(empty.hypothesis_holds == false);
  CHECK(empty.effective() == Rational(0));
  CHECK(empty.value == Rational(1, empty.degree));
  CHECK_THROWS_AS(predicted_density_R(ProgressionTask(3, 1, 1, 1, 3)), PreconditionError);
}

TEST_CASE("main-regime predictions") {
  const auto m = predicted_density_main(ProgressionTask(2, 2, 4, 1, 3));
  CHECK(m.degree == kn_degree(4, 6, 2));
  CHECK(m.source == DensitySource::non_near_primitive);
  CHECK(predicted_density_main(ProgressionTask(4, 2, 3, 1, 5)).degree == kummer_degree({30, 10, 4}));
  const auto composite = predicted_density_main(ProgressionTask(2, 1, 1, 1, 9));
  CHECK(composite.value == Rational(1, 54));
  CHECK_THROWS_AS(predicted_density_main(ProgressionTask(2, 1, 1, 1, 1)), PreconditionError);
}

TEST_CASE("predictions shrink as q grows") {
  for (std::int64_t g : {2, 3, -2, 4, 5}) {
    for (std::int64_t d : {1, 3, 4, 7}) {
      for (std::int64_t q : {3, 5, 7}) {
        for (std::int64_t q2 : {3, 5, 7, 9}) {
          const ProgressionTask small(g, 1, d, 1, q), big(g, 1, d, 1, q * q2);
          if (!small.elementary_regime() || !big.elementary_regime()) continue;
          const auto a = predicted_density_subset_Q(small), b = predicted_density_subset_Q(big);
          REQUIRE(b.degree % a.degree == 0);
          REQUIRE(b.value <= a.value);
          REQUIRE(a.value > Rational(0));
          REQUIRE(a.value <= Rational(1));
        }
      }
    }
  }
}

TEST_CASE("Artin constant") {
  const auto big = artin_constant(1'000'000);
  CHECK(big.certified_decimals >= 6);
  CHECK(big.certified_digits.rfind("0.373955", 0) == 0);
  CHECK(big.lower <= big.partial_product);
  CHECK(big.partial_product <= big.upper);
  CHECK(artin_constant(2).partial_product == doctest::Approx(0.5));
  for (std::uint64_t T : {1000ULL, 10000ULL, 100000ULL}) {
    const auto a = artin_constant(T), b = artin_constant(T * 10);
    CHECK(std::fabs(static_cast<double>(a.partial_product - b.partial_product)) <=
          static_cast<double>(a.error_bound));
    CHECK(a.lower <= b.upper);
  }
  CHECK_THROWS_AS(artin_constant(1), DomainError);
}

TEST_CASE("G-irregular lower bound") {
  CHECK(girr_density_lower(1, 1).value == Rational(1, 6));
  CHECK(girr_density_lower(3, 1).value == Rational(1, 40));
  CHECK(girr_density_lower(15, 2).value == Rational(1, 336));
  CHECK(girr_density_lower(15, 2).source == DensitySource::g_irregular_bound);
  for (std::int64_t d = 1; d <= 50; ++d) {
    const std::int64_t q = smallest_prime_not_dividing(2 * d);
    CHECK(girr_density_lower(d, 1).degree == kn_degree(d, q, 4));
  }
}

TEST_CASE("auxiliary exponent helper") {
  const auto best = best_auxiliary_q(2, 1, 3, 1, 30);
  REQUIRE(best.has_value());
  CHECK(best->q == 5);
  CHECK(best->prediction.value == Rational(1, 40));
  CHECK_FALSE(best_auxiliary_q(2, 1, 3, 1, 2).has_value());
}

TEST_CASE("rational rendering") {
  CHECK(to_string(Rational(2, 80)) == "1/40");
  CHECK(to_string(DensitySource::r_class) == "r-class");
}

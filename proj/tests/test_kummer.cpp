#include <doctest.h>

#include <numeric>
#include <random>

#include "nearprim/arith.hpp"
#include "nearprim/kummer.hpp"
#include "nearprim/scan.hpp"
#include "nearprim/sieve.hpp"

using namespace nearprim;

namespace {

const std::vector<std::uint64_t>& primes_1e6() {
  static const auto primes = primes_upto(1'000'000);
  return primes;
}

std::int64_t index_of(std::int64_t M, std::int64_t n, std::int64_t g) {
  return euler_phi(M) * n / kummer_degree({M, n, g});
}

}  // namespace

TEST_CASE("documented degrees") {
  CHECK(kummer_degree({15, 5, 4}) == 40);
  CHECK(kummer_degree({12, 1, 7}) == 4);
  CHECK(kummer_degree({8, 2, 2}) == 4);
  CHECK(kummer_degree({8, 4, -4}) == 4);
  CHECK(kn_degree(3, 5, 4) == 40);
  CHECK(kn_degree(1, 1, 2) == 1);
  CHECK(kn_degree(4, 3, 2) == 12);
  CHECK(kn_degree(3, 5, 2) == 40);
}

TEST_CASE("-4 is a fourth power already in Q(i)") {
  // (1 + i)^4 = -4, so x^4 + 4 splits over Q(i).
  CHECK(kummer_degree({4, 4, -4}) == 2);
  CHECK(kummer_trace({4, 4, -4}).index == 4);
  const auto est = chebotarev_degree_oracle(4, 4, -4, primes_1e6());
  CHECK(est.index == 4);
  CHECK(est.hits == est.samples);
}

TEST_CASE("trace of the degree computation") {
  const auto tr = kummer_trace({24, 12, 64});
  CHECK(tr.h == 6);
  CHECK(tr.d0 == 6);
  CHECK(tr.index == 12);  // 64 = (2 sqrt 2)^4 ... sqrt 2 in Q(zeta_8)
  CHECK(tr.e == 1);
  CHECK(tr.degree == euler_phi(24));
  // -16 = (2 zeta_8)^4 is a fourth power as soon as zeta_8 is present.
  const auto neg16 = kummer_trace({8, 8, -16});
  CHECK(neg16.index == 4);
  CHECK(neg16.e == 2);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(kummer_degree({10, 4, 2}), DomainError);
  CHECK_THROWS_AS(kummer_degree({4, 2, 1}), DomainError);
  CHECK_THROWS_AS(kummer_degree({4, 2, 0}), DomainError);
  CHECK_THROWS_AS(kummer_degree({4, 2, -1}), DomainError);
  CHECK_THROWS_AS(kn_degree(0, 2, 3), DomainError);
  CHECK_THROWS_AS(quadratic_subfield_test(12, 4, 3), DomainError);
  CHECK_THROWS_AS(frobenius_class_exists(4, 2, 2, 3), DomainError);
}

TEST_CASE("structural properties of the degree") {
  const std::int64_t gs[] = {2, -2, 3, -3, 4, -4, 5, 8, -8, 9, -9, 12, 16, -16, -27, 36, -36, 64, -64, 21};
  for (std::int64_t g : gs) {
    for (std::int64_t M = 1; M <= 72; ++M) {
      REQUIRE(kummer_degree({M, 1, g}) == euler_phi(M));
      for (std::int64_t n = 1; n <= M; ++n) {
        if (M % n != 0) continue;
        const std::int64_t idx = index_of(M, n, g);
        REQUIRE(n % idx == 0);
        // Enlarging the cyclotomic level and the exponent multiplies the degree.
        for (std::int64_t M1 = M; M1 <= 144; M1 += M) {
          for (std::int64_t n1 = n; n1 <= M1; n1 += n) {
            if (M1 % n1 != 0) continue;
            REQUIRE(kummer_degree({M1, n1, g}) % kummer_degree({M, n, g}) == 0);
          }
        }
      }
    }
  }
}

TEST_CASE("closed form for g = 4") {
  for (std::int64_t d = 1; d <= 50; ++d) {
    for (std::int64_t q = 3; q <= 50; q += 2) {
      if (!is_prime(static_cast<std::uint64_t>(q)) || d % q == 0) continue;
      REQUIRE(kn_degree(d, q, 4) == euler_phi(d) * q * (q - 1));
    }
  }
}

TEST_CASE("Chebotarev sampling confirms degrees for awkward radicands") {
  const std::int64_t gs[] = {-16, -36, -9, -27, 9, 16, -64, 12, -12, 18, -2, 2};
  int cases = 0;
  for (std::int64_t g : gs) {
    for (std::int64_t M = 1; M <= 48; ++M) {
      for (std::int64_t n = 1; n <= M; ++n) {
        if (M % n != 0) continue;
        const auto est = chebotarev_degree_oracle(M, n, g, primes_1e6());
        REQUIRE(est.conclusive);
        const std::int64_t predicted = index_of(M, n, g);
        INFO("M=" << M << " n=" << n << " g=" << g << " predicted " << predicted << " estimate "
                  << est.index << " in [" << est.index_low << ", " << est.index_high << "]");
        REQUIRE(est.interval_contains(predicted));
        REQUIRE(est.index == predicted);
        ++cases;
      }
    }
  }
  CHECK(cases > 1000);
}

TEST_CASE("quadratic subfields") {
  CHECK_FALSE(quadratic_subfield_test(-3, 10, 21));
  CHECK(quadratic_subfield_test(-3, 70, 21));
  CHECK(quadratic_subfield_test(5, 5, 2));
  CHECK(quadratic_subfield_test(2, 2, 2));
  CHECK(quadratic_subfield_test(-1, 4, 3));
  CHECK_FALSE(quadratic_subfield_test(2, 4, 3));
  CHECK(quadratic_subfield_test(3, 4, 3));
  CHECK(quadratic_subfield_test(-3, 4, 3));
  // sqrt(2) = zeta_8 + zeta_8^-1 and zeta_8 = (-16)^(1/8) / sqrt 2 up to roots of unity.
  CHECK(quadratic_subfield_test(2, 8, -16));
}

TEST_CASE("intersection degrees") {
  CHECK(intersection_degree({3, 10, 21}) == 1);
  CHECK(intersection_degree({3, 70, 21}) == 2);
  CHECK(intersection_degree({4, 1, 5}) == 1);
  CHECK(intersection_degree({5, 2, 5}) == 2);
  CHECK(intersection_degree({8, 2, 2}) == 2);
}

TEST_CASE("both intersection routes agree") {
  const std::int64_t gs[] = {2, -2, 3, -3, 4, -4, 5, -5, 6, 7, 12, -16, 21, -36, 64, -64, 18};
  for (std::int64_t g : gs) {
    for (std::int64_t d = 1; d <= 40; ++d) {
      for (std::int64_t n = 1; n <= 40; ++n) {
        REQUIRE_MESSAGE(intersection_degree({d, n, g}) == intersection_degree_galois({d, n, g}),
                        "d=" << d << " n=" << n << " g=" << g);
      }
    }
  }
}

TEST_CASE("Frobenius class") {
  CHECK_FALSE(frobenius_class_exists(5, 2, 2, 5));
  CHECK(frobenius_class_exists(4, 3, 2, 5));
  for (std::int64_t n = 1; n <= 12; ++n) CHECK(frobenius_class_exists(1, 1, n, 7));
  // p = 3 (mod 4) with -4 a fourth power mod p would need p = 1 (mod 8).
  CHECK_FALSE(frobenius_class_exists(4, 3, 4, -4));
}

TEST_CASE("Frobenius verdict matches witness search") {
  const std::int64_t gs[] = {2, -2, 5, -4, 21};
  for (std::int64_t g : gs) {
    for (std::int64_t d = 1; d <= 24; ++d) {
      for (std::int64_t n = 1; n <= 12; ++n) {
        for (std::int64_t a = 1; a <= d; ++a) {
          if (std::gcd(a, d) != 1) continue;
          const bool exists = frobenius_class_exists(d, a, n, g);
          const auto w = witness_search(g, n, d, a, 200'000);
          REQUIRE_MESSAGE(exists == w.has_value(), "g=" << g << " d=" << d << " n=" << n << " a=" << a);
        }
      }
    }
  }
}

TEST_CASE("lemma invariance check") {
  const auto remark = lemma_invariance_check(3, 10, 7, 21);
  CHECK_FALSE(remark.precondition_holds);
  CHECK_FALSE(remark.invariant);
  CHECK(remark.degree_t == 1);
  CHECK(remark.degree_qt == 2);
  CHECK(lemma_invariance_check(3, 2, 5, 2).invariant);
  CHECK(lemma_invariance_check(3, 2, 5, 2).precondition_holds);
  CHECK(lemma_invariance_check(1, 1, 5, 3).invariant);
}

TEST_CASE("intersection is invariant under admissible q") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> small(1, 30), gdist(-30, 30);
  int sampled = 0;
  while (sampled < 2000) {
    const std::int64_t d = small(rng), t = small(rng), q = small(rng), g = gdist(rng);
    if ((g >= -1 && g <= 1) || std::gcd(q, 2 * d * std::abs(g) * t) != 1) continue;
    ++sampled;
    REQUIRE(lemma_invariance_check(d, t, q, g).invariant);
  }
}

TEST_CASE("abelian part") {
  const AbelianPart odd(5, 2);
  CHECK(odd.conductor() == 5);
  CHECK(odd.degree() == 4);
  const AbelianPart even(2, 5);
  CHECK(even.conductor() == 10);
  CHECK(even.degree() == 2);
  const AbelianPart twisted(4, -4);
  CHECK(twisted.degree() == 2);  // Q(i)
  CHECK_THROWS_AS(even.stabilizer(7), DomainError);
}

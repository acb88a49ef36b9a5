#include <doctest.h>

#include <numeric>
#include <random>

#include "nearprim/arith.hpp"

using namespace nearprim;

namespace {

bool slow_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t slow_order(std::int64_t g, std::uint64_t p) {
  const std::uint64_t base = reduce_mod(g, p);
  std::uint64_t x = base;
  for (std::uint64_t k = 1;; ++k) {
    if (x == 1) return k;
    x = x * base % p;
  }
}

// Kronecker symbol from its definition: Legendre symbols by Euler's
// criterion, (D|2) by D mod 8, (D|-1) by the sign of D.
int slow_kronecker(std::int64_t D, std::int64_t a) {
  if (a == 0) return (D == 1 || D == -1) ? 1 : 0;
  int result = 1;
  if (a < 0) {
    a = -a;
    if (D < 0) result = -result;
  }
  for (std::int64_t p = 2; a > 1; ++p) {
    while (a % p == 0) {
      a /= p;
      int s;
      if (p == 2) {
        const std::int64_t r = ((D % 8) + 8) % 8;
        s = (r % 2 == 0) ? 0 : (r == 1 || r == 7) ? 1 : -1;
      } else {
        const std::uint64_t e = pow_mod(reduce_mod(D, p), (p - 1) / 2, p);
        s = e == 0 ? 0 : e == 1 ? 1 : -1;
      }
      result *= s;
    }
  }
  return result;
}

}  // namespace

TEST_CASE("modular multiplication and powers") {
  CHECK(mul_mod(~0ULL, ~0ULL, 1000000007ULL) ==
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(~0ULL) * ~0ULL) % 1000000007ULL));
  CHECK(pow_mod(2, 10, 1000) == 24);
  CHECK(pow_mod(5, 0, 7) == 1);
  CHECK(pow_mod(5, 3, 1) == 0);
  CHECK(reduce_mod(-3, 7) == 4);
  CHECK(reduce_mod(-14, 7) == 0);
}

TEST_CASE("primality agrees with trial division and known hard cases") {
  for (std::uint64_t n = 0; n < 20000; ++n) REQUIRE(is_prime(n) == slow_is_prime(n));
  CHECK_FALSE(is_prime(561));
  CHECK_FALSE(is_prime(41041));
  CHECK_FALSE(is_prime(3215031751ULL));
  CHECK_FALSE(is_prime(3825123056546413051ULL));
  CHECK(is_prime(2305843009213693951ULL));  // 2^61 - 1
  CHECK(is_prime(18446744073709551557ULL));
}

TEST_CASE("factorize reproduces its input on random values") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(-1'000'000'000'000LL, 1'000'000'000'000LL);
  for (int i = 0; i < 10000; ++i) {
    std::int64_t n = dist(rng);
    if (n == 0) continue;
    const auto f = factorize(n);
    REQUIRE(f.is_well_formed());
    REQUIRE(f.product() == n);
  }
  const std::int64_t semiprime = 1000000007LL * 998244353LL;
  const auto f = factorize(semiprime);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].prime == 998244353);
  CHECK(f.factors[1].prime == 1000000007);
  CHECK(factorize(-1).factors.empty());
  CHECK(factorize(-1).sign == -1);
  CHECK_THROWS_AS(factorize(0), DomainError);
}

TEST_CASE("euler_phi matches the gcd count") {
  for (std::int64_t n = 1; n <= 600; ++n) {
    std::int64_t count = 0;
    for (std::int64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    REQUIRE(euler_phi(n) == count);
  }
  CHECK_THROWS_AS(euler_phi(0), DomainError);
}

TEST_CASE("multiplicative order matches brute force") {
  for (std::uint64_t p = 3; p < 3000; p += 2) {
    if (!is_prime(p)) continue;
    const auto pm1 = factorize(static_cast<std::int64_t>(p - 1));
    for (std::int64_t g : {2, 3, -2, 4, 5, -4, 21}) {
      if (reduce_mod(g, p) == 0) continue;
      REQUIRE(multiplicative_order(g, p, pm1) == slow_order(g, p));
    }
  }
  CHECK(multiplicative_order(4, 7, factorize(6)) == 3);
  CHECK_THROWS_AS(multiplicative_order(7, 7, factorize(6)), DomainError);
  CHECK_THROWS_AS(multiplicative_order(2, 7, factorize(5)), DomainError);
}

TEST_CASE("kronecker symbol agrees with the definition") {
  for (std::int64_t D = -80; D <= 80; ++D) {
    for (std::int64_t a = -80; a <= 80; ++a) {
      REQUIRE_MESSAGE(kronecker_symbol(D, a) == slow_kronecker(D, a), "D=" << D << " a=" << a);
    }
  }
}

TEST_CASE("squarefree kernels and quadratic discriminants") {
  CHECK(squarefree_kernel(12) == 3);
  CHECK(squarefree_kernel(-8) == -2);
  CHECK(squarefree_kernel(36) == 1);
  CHECK(quad_discriminant(5) == 5);
  CHECK(quad_discriminant(3) == 12);
  CHECK(quad_discriminant(2) == 8);
  CHECK(quad_discriminant(-1) == -4);
  CHECK(quad_discriminant(-3) == -3);
  CHECK(quad_discriminant(-4) == -4);
  CHECK(quad_discriminant(21) == 21);
  CHECK_THROWS_AS(quad_discriminant(49), DomainError);
}

TEST_CASE("quadratic fields inside cyclotomic fields") {
  CHECK(sqrt_in_cyclotomic(2, 8));
  CHECK_FALSE(sqrt_in_cyclotomic(2, 4));
  CHECK(sqrt_in_cyclotomic(-1, 4));
  CHECK(sqrt_in_cyclotomic(-3, 3));
  CHECK_FALSE(sqrt_in_cyclotomic(3, 3));
  CHECK(sqrt_in_cyclotomic(3, 12));
  CHECK(sqrt_in_cyclotomic(5, 5));
  CHECK(sqrt_in_cyclotomic(9, 1));
}

TEST_CASE("power structure of radicands") {
  CHECK(exponent_gcd(64) == 6);
  CHECK(exponent_gcd(-64) == 6);
  CHECK(exponent_gcd(12) == 1);
  CHECK(power_index(64) == 6);
  CHECK(power_index(-64) == 3);
  CHECK(power_index(-8) == 3);
  CHECK(power_index(-4) == 1);
  CHECK(power_index(4) == 2);
  CHECK(exact_root(1024, 5) == 4);
  CHECK_THROWS_AS(exact_root(1000, 2), DomainError);
  CHECK_THROWS_AS(power_index(1), DomainError);
}

TEST_CASE("Wieferich test") {
  CHECK(is_wieferich(1093));
  CHECK(is_wieferich(3511));
  CHECK_FALSE(is_wieferich(3));
  CHECK_FALSE(is_wieferich(1097));
  CHECK_THROWS_AS(is_wieferich(4), DomainError);
  CHECK_THROWS_AS(is_wieferich(2), DomainError);
}

TEST_CASE("checked helpers") {
  CHECK(lcm64(4, 6) == 12);
  CHECK(odd_part(48) == 3);
  CHECK(two_adic_valuation(48) == 4);
  CHECK_THROWS_AS(checked_mul(1LL << 40, 1LL << 40), DomainError);
}

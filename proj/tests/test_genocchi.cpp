#include <doctest.h>

#include "nearprim/arith.hpp"
#include "nearprim/genocchi.hpp"

using namespace nearprim;

TEST_CASE("Bernoulli numbers") {
  const auto B = bernoulli_upto(12);
  CHECK(B[0] == 1);
  CHECK(B[1] == ExactRational(-1, 2));
  CHECK(B[2] == ExactRational(1, 6));
  CHECK(B[3] == 0);
  CHECK(B[8] == ExactRational(-1, 30));
  CHECK(B[12] == ExactRational(-691, 2730));
  CHECK_THROWS_AS(bernoulli_upto(1001), DomainError);
}

TEST_CASE("Genocchi numbers") {
  const auto G = genocchi_upto(8);
  const std::vector<BigInt> want = {1, -1, 0, 1, 0, -3, 0, 17};
  CHECK(G == want);
  CHECK(genocchi_upto(14).back() == -38227);
}

TEST_CASE("Genocchi numbers up to 1000 are integers with vanishing odd terms") {
  const auto G = genocchi_upto(1000);
  REQUIRE(G.size() == 1000);
  for (std::size_t n = 3; n <= 1000; n += 2) REQUIRE(G[n - 1] == 0);
}

TEST_CASE("Bernoulli denominators avoid p below p - 2") {
  const auto B = bernoulli_upto(297);
  for (std::uint32_t p = 5; p <= 300; p += 2) {
    if (!is_prime(p)) continue;
    for (std::uint32_t k = 2; k <= p - 3; k += 2) {
      REQUIRE(denominator(B[k]) % p != 0);
    }
  }
}

TEST_CASE("rows modulo p") {
  CHECK(genocchi_row_mod_p(7).residues == std::vector<std::uint32_t>{6, 1});
  CHECK_FALSE(genocchi_row_mod_p(7).irregular);
  CHECK(genocchi_row_mod_p(5).residues == std::vector<std::uint32_t>{4});
  CHECK(genocchi_row_mod_p(17).irregular);
  CHECK(genocchi_row_mod_p(101).residues.size() == 49);
  CHECK_THROWS_AS(genocchi_row_mod_p(3), DomainError);
  CHECK_THROWS_AS(genocchi_row_mod_p(9), DomainError);
}

TEST_CASE("modular rows agree with exact values") {
  const auto G = genocchi_upto(297);
  for (std::uint32_t p = 5; p <= 300; p += 2) {
    if (!is_prime(p)) continue;
    const auto row = genocchi_row_mod_p(p);
    REQUIRE(row.residues.size() == (p - 3) / 2);
    for (std::uint32_t k = 2, i = 0; k <= p - 3; k += 2, ++i) {
      BigInt r = G[k - 1] % p;
      if (r < 0) r += p;
      REQUIRE(row.residues[i] == r.convert_to<std::uint32_t>());
    }
  }
}

TEST_CASE("G-irregular primes") {
  const std::vector<std::uint32_t> first15 = {17, 31, 37, 41, 43, 59, 67, 73,
                                              89, 97, 101, 103, 109, 113, 127};
  CHECK(g_irregular_first(15) == first15);
  CHECK(g_irregular_first(5) == std::vector<std::uint32_t>(first15.begin(), first15.begin() + 5));
  CHECK(g_irregular_upto(16).empty());
  CHECK(g_irregular_upto(127) == first15);
  CHECK(is_g_irregular(17));
  CHECK(is_g_irregular(127));
  CHECK_FALSE(is_g_irregular(5));
  CHECK_THROWS_AS(is_g_irregular(3), DomainError);
  CHECK_THROWS_AS(is_g_irregular(2), DomainError);
}

TEST_CASE("ord_p(4) criterion is sufficient") {
  CHECK_FALSE(ord4_criterion(7));
  CHECK(ord4_criterion(17));
  CHECK_FALSE(ord4_criterion(5));
  CHECK_THROWS_AS(ord4_criterion(3), DomainError);
  for (std::uint32_t p = 5; p <= 2000; p += 2) {
    if (!is_prime(p)) continue;
    if (ord4_criterion(p)) REQUIRE(is_g_irregular(p));
  }
}

#pragma once

// Bernoulli and Genocchi numbers, exactly and modulo a prime, and
// G-irregular primes: p > 3 dividing one of G_2, G_4, ..., G_{p-3}.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nearprim {

using BigInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

inline constexpr int kExactGenocchiLimit = 1000;

// B_0..B_N with B_1 = -1/2, from sum_{j=0}^{m} C(m+1, j) B_j = 0.
// N <= 1000; larger N throws DomainError (use the modular path).
std::vector<ExactRational> bernoulli_upto(int N);

// G_1..G_N (index n at position n - 1), G_n = 2(1 - 2^n) B_n. With
// B_1 = -1/2 this gives G_1 = 1. Throws InvariantViolation if a value is
// not an integer.
std::vector<BigInt> genocchi_upto(int N);

struct GenocchiRow {
  std::uint32_t p = 0;
  std::vector<std::uint32_t> residues;  // G_k mod p for k = 2, 4, ..., p - 3
  bool irregular = false;               // some residue is 0
};

// Row for a prime 5 <= p < 2^20, computed with the Bernoulli recurrence in
// arithmetic mod p. Cost is O(p^2).
GenocchiRow genocchi_row_mod_p(std::uint32_t p);

// Defined for primes p > 3 only; 2 and 3 are not classified.
bool is_g_irregular(std::uint32_t p);

// G-irregular primes <= limit (limit <= 10^5), ascending.
std::vector<std::uint32_t> g_irregular_upto(std::uint32_t limit);
// The first count G-irregular primes (count <= 10^4).
std::vector<std::uint32_t> g_irregular_first(std::uint32_t count);

// ord_p(4) != (p - 1)/2 for a prime p >= 5. When true, p is G-irregular.
bool ord4_criterion(std::uint32_t p);

}  // namespace nearprim

#pragma once

// Segmented sieve of Eratosthenes with optional segment-local factorization
// of p - 1 for every prime found.

#include <cstdint>
#include <vector>

#include "nearprim/arith.hpp"

namespace nearprim {

inline constexpr std::uint64_t kSieveUpperBound = 10'000'000'000ULL;
inline constexpr std::uint64_t kDefaultSegmentSize = 1ULL << 20;

struct PrimeSegment {
  std::uint64_t lo = 2;
  std::uint64_t hi = 2;  // half-open: primes in [lo, hi)
  std::vector<std::uint64_t> primes;
  // Empty unless requested; otherwise pm1_factors[i] factors primes[i] - 1.
  std::vector<FactoredInteger> pm1_factors;

  bool has_pm1() const { return !primes.empty() && pm1_factors.size() == primes.size(); }
};

// All primes in [lo, hi), 2 <= lo < hi <= 10^10.
PrimeSegment segmented_primes(std::uint64_t lo, std::uint64_t hi, bool with_pm1);

// Primes p <= limit, segment by segment.
std::vector<std::uint64_t> primes_upto(std::uint64_t limit);

std::uint64_t prime_pi(std::uint64_t limit);

struct ApCount {
  std::uint64_t count = 0;
  // limit / (phi(d) ln limit), the leading-order asymptotic.
  double asymptotic = 0;
  std::vector<std::uint64_t> primes;  // filled only when requested
};

// #{p <= limit : p = a (mod d)}.
ApCount count_primes_in_ap(std::int64_t d, std::int64_t a, std::uint64_t limit,
                           bool keep_list = false);

}  // namespace nearprim

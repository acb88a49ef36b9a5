#include "nearprim/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "nearprim/errors.hpp"

namespace nearprim {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<std::uint32_t> small_primes(std::uint64_t limit) {
  std::vector<std::uint8_t> composite(limit + 1, 0);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return out;
}

}  // namespace

PrimeSegment segmented_primes(std::uint64_t lo, std::uint64_t hi, bool with_pm1) {
  if (lo < 2 || lo >= hi || hi > kSieveUpperBound + 1) {
    throw DomainError("segmented_primes: need 2 <= lo < hi <= 10^10, got [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + ")");
  }
  PrimeSegment seg;
  seg.lo = lo;
  seg.hi = hi;

  const std::uint64_t root = isqrt(hi - 1);
  const auto base = small_primes(root);

  // Odd numbers o0, o0 + 2, ... below hi; slot i holds o0 + 2i.
  const std::uint64_t o0 = lo | 1;
  const std::size_t count = hi > o0 ? static_cast<std::size_t>((hi - o0 + 1) / 2) : 0;
  std::vector<std::uint8_t> composite(count, 0);
  for (std::uint32_t ell : base) {
    if (ell == 2) continue;
    const std::uint64_t l = ell;
    std::uint64_t start = std::max(l * l, (o0 + l - 1) / l * l);
    if (start % 2 == 0) start += l;
    for (std::uint64_t j = start; j < hi; j += 2 * l) composite[(j - o0) / 2] = 1;
  }

  if (lo <= 2) seg.primes.push_back(2);
  std::vector<std::int32_t> slot;
  if (with_pm1) slot.assign(count, -1);
  for (std::size_t i = 0; i < count; ++i) {
    if (composite[i]) continue;
    if (with_pm1) slot[i] = static_cast<std::int32_t>(seg.primes.size());
    seg.primes.push_back(o0 + 2 * i);
  }
  if (!with_pm1 || seg.primes.empty()) return seg;

  // Segment-local factor sieve over the values p - 1.
  std::vector<std::uint64_t> rest(seg.primes.size());
  seg.pm1_factors.resize(seg.primes.size());
  for (std::size_t i = 0; i < seg.primes.size(); ++i) {
    const std::uint64_t v = seg.primes[i] - 1;
    auto& f = seg.pm1_factors[i];
    f.value = static_cast<std::int64_t>(v);
    f.sign = 1;
    if (v > 1) {
      const int e = __builtin_ctzll(v);
      f.factors.push_back({2, e});
      rest[i] = v >> e;
    } else {
      rest[i] = 1;
    }
  }
  for (std::uint32_t ell : base) {
    if (ell == 2) continue;
    const std::uint64_t step = 2ULL * ell;
    // Even multiples v of ell with v + 1 odd and inside the segment.
    std::uint64_t v = (o0 - 1 + step - 1) / step * step;
    if (v == 0) v = step;
    for (; v + 1 < hi; v += step) {
      const std::size_t idx = static_cast<std::size_t>((v + 1 - o0) / 2);
      const std::int32_t s = slot[idx];
      if (s < 0) continue;
      int e = 0;
      std::uint64_t& r = rest[static_cast<std::size_t>(s)];
      while (r % ell == 0) {
        r /= ell;
        ++e;
      }
      seg.pm1_factors[static_cast<std::size_t>(s)].factors.push_back({ell, e});
    }
  }
  for (std::size_t i = 0; i < seg.primes.size(); ++i) {
    // What remains has no prime factor <= sqrt(hi - 1), so it is prime.
    if (rest[i] > 1) {
      seg.pm1_factors[i].factors.push_back({static_cast<std::int64_t>(rest[i]), 1});
    }
  }
  return seg;
}

std::vector<std::uint64_t> primes_upto(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  for (std::uint64_t lo = 2; lo <= limit; lo += kDefaultSegmentSize) {
    const std::uint64_t hi = std::min(limit + 1, lo + kDefaultSegmentSize);
    auto seg = segmented_primes(lo, hi, false);
    out.insert(out.end(), seg.primes.begin(), seg.primes.end());
  }
  return out;
}

std::uint64_t prime_pi(std::uint64_t limit) {
  std::uint64_t count = 0;
  if (limit < 2) return 0;
  for (std::uint64_t lo = 2; lo <= limit; lo += kDefaultSegmentSize) {
    const std::uint64_t hi = std::min(limit + 1, lo + kDefaultSegmentSize);
    count += segmented_primes(lo, hi, false).primes.size();
  }
  return count;
}

ApCount count_primes_in_ap(std::int64_t d, std::int64_t a, std::uint64_t limit, bool keep_list) {
  if (d < 1 || a < 1) throw DomainError("count_primes_in_ap: d and a must be positive");
  if (std::gcd(a, d) != 1) throw DomainError("count_primes_in_ap: gcd(a, d) != 1");
  if (limit < 2) throw DomainError("count_primes_in_ap: limit must be at least 2");
  ApCount out;
  const auto ud = static_cast<std::uint64_t>(d);
  const auto ua = static_cast<std::uint64_t>(a) % ud;
  for (std::uint64_t lo = 2; lo <= limit; lo += kDefaultSegmentSize) {
    const std::uint64_t hi = std::min(limit + 1, lo + kDefaultSegmentSize);
    for (std::uint64_t p : segmented_primes(lo, hi, false).primes) {
      if (p % ud != ua) continue;
      ++out.count;
      if (keep_list) out.primes.push_back(p);
    }
  }
  const double x = static_cast<double>(limit);
  out.asymptotic = x / (static_cast<double>(euler_phi(d)) * std::log(x));
  return out;
}

}  // namespace nearprim

#include "nearprim/arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <string>

namespace nearprim {

namespace {

constexpr std::int64_t kTrialBound = 1'000'000;

const std::vector<std::uint32_t>& trial_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialBound + 1, false);
    std::vector<std::uint32_t> out;
    for (std::int64_t i = 2; i <= kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(static_cast<std::uint32_t>(i));
      for (std::int64_t j = i * i; j <= kTrialBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

std::uint64_t abs_u64(std::int64_t n) {
  return n < 0 ? ~static_cast<std::uint64_t>(n) + 1 : static_cast<std::uint64_t>(n);
}

// Brent's variant of Pollard rho. The generator is seeded from n so that
// factorize() is a pure function of its input.
std::uint64_t pollard_brent(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ n);
  for (;;) {
    const std::uint64_t c = rng() % (n - 1) + 1;
    std::uint64_t y = rng() % n;
    const std::uint64_t m = 128;
    std::uint64_t g = 1, r = 1, q = 1, x = 0, ys = 0;
    auto step = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_large(std::uint64_t n, std::map<std::uint64_t, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const std::uint64_t f = pollard_brent(n);
  split_large(f, out);
  split_large(n / f, out);
}

}  // namespace

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduce_mod(std::int64_t g, std::uint64_t m) {
  const std::uint64_t r = abs_u64(g) % m;
  return (g < 0 && r != 0) ? m - r : r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // The first twelve primes are a deterministic witness set below 3.3e24.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw DomainError("64-bit overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

std::int64_t odd_part(std::int64_t n) {
  while (n != 0 && n % 2 == 0) n /= 2;
  return n;
}

int two_adic_valuation(std::int64_t n) {
  if (n == 0) throw DomainError("2-adic valuation of 0");
  return __builtin_ctzll(abs_u64(n));
}

std::int64_t FactoredInteger::product() const {
  std::int64_t out = sign;
  for (const auto& f : factors) {
    for (int i = 0; i < f.exponent; ++i) out = checked_mul(out, f.prime);
  }
  return out;
}

bool FactoredInteger::is_well_formed() const {
  if (sign != 1 && sign != -1) return false;
  if (value == 0 || (value < 0) != (sign < 0)) return false;
  std::int64_t last = 1;
  for (const auto& f : factors) {
    if (f.exponent < 1 || f.prime <= last) return false;
    if (!is_prime(static_cast<std::uint64_t>(f.prime))) return false;
    last = f.prime;
  }
  try {
    return product() == value;
  } catch (const DomainError&) {
    return false;
  }
}

FactoredInteger factorize(std::int64_t n) {
  if (n == 0) throw DomainError("factorize: n must be nonzero");
  if (n == std::numeric_limits<std::int64_t>::min()) {
    throw DomainError("factorize: |n| does not fit in 64 bits");
  }
  FactoredInteger out;
  out.value = n;
  out.sign = n < 0 ? -1 : 1;
  std::uint64_t rest = abs_u64(n);
  for (std::uint32_t p : trial_primes()) {
    if (static_cast<std::uint64_t>(p) * p > rest) break;
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    out.factors.push_back({p, e});
  }
  if (rest > 1) {
    // Every factor of rest exceeds the trial bound.
    std::map<std::uint64_t, int> large;
    split_large(rest, large);
    for (const auto& [p, e] : large) out.factors.push_back({static_cast<std::int64_t>(p), e});
  }
  return out;
}

std::int64_t euler_phi(const FactoredInteger& n) {
  if (n.value < 1) throw DomainError("euler_phi: argument must be positive");
  std::int64_t out = 1;
  for (const auto& f : n.factors) {
    out = checked_mul(out, f.prime - 1);
    for (int i = 1; i < f.exponent; ++i) out = checked_mul(out, f.prime);
  }
  return out;
}

std::int64_t euler_phi(std::int64_t n) { return euler_phi(factorize(n)); }

std::uint64_t multiplicative_order(std::int64_t g, std::uint64_t p,
                                   const FactoredInteger& p_minus_1) {
  if (p < 2) throw DomainError("multiplicative_order: p must be prime");
  if (p_minus_1.value < 0 || static_cast<std::uint64_t>(p_minus_1.value) != p - 1) {
    throw DomainError("multiplicative_order: factorization is not of p - 1");
  }
  const std::uint64_t base = reduce_mod(g, p);
  if (base == 0) throw DomainError("multiplicative_order: p divides g");
  std::uint64_t order = p - 1;
  for (const auto& f : p_minus_1.factors) {
    const auto ell = static_cast<std::uint64_t>(f.prime);
    for (int i = 0; i < f.exponent && order % ell == 0; ++i) {
      if (pow_mod(base, order / ell, p) != 1) break;
      order /= ell;
    }
  }
  return order;
}

std::int64_t squarefree_kernel(std::int64_t g) {
  if (g == 0) throw DomainError("squarefree_kernel: g must be nonzero");
  const FactoredInteger f = factorize(g);
  std::int64_t k = f.sign;
  for (const auto& pf : f.factors) {
    if (pf.exponent % 2 == 1) k = checked_mul(k, pf.prime);
  }
  return k;
}

std::int64_t quad_discriminant(std::int64_t g) {
  const std::int64_t k = squarefree_kernel(g);
  if (k == 1) throw DomainError("quad_discriminant: g is a perfect square");
  const std::int64_t r = ((k % 4) + 4) % 4;
  return r == 1 ? k : checked_mul(4, k);
}

bool sqrt_in_cyclotomic(std::int64_t g, std::int64_t m) {
  if (squarefree_kernel(g) == 1) return true;
  const std::int64_t disc = quad_discriminant(g);
  return m % (disc < 0 ? -disc : disc) == 0;
}

std::int64_t exponent_gcd(std::int64_t g) {
  const FactoredInteger f = factorize(g);
  if (f.factors.empty()) throw DomainError("exponent_gcd: |g| must be at least 2");
  std::int64_t out = 0;
  for (const auto& pf : f.factors) out = std::gcd(out, static_cast<std::int64_t>(pf.exponent));
  return out;
}

std::int64_t power_index(std::int64_t g) {
  if (g >= -1 && g <= 1) throw DomainError("power_index: g must satisfy |g| >= 2");
  const std::int64_t h = exponent_gcd(g);
  return g < 0 ? odd_part(h) : h;
}

std::int64_t exact_root(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1) throw DomainError("exact_root: arguments must be positive");
  if (k == 1) return n;
  auto power_cmp = [&](std::int64_t r) {
    // -1, 0, 1 as r^k is below, equal to, above n.
    std::int64_t acc = 1;
    for (std::int64_t i = 0; i < k; ++i) {
      if (__builtin_mul_overflow(acc, r, &acc) || acc > n) return 1;
    }
    return acc == n ? 0 : -1;
  };
  auto guess = static_cast<std::int64_t>(std::llround(std::pow(static_cast<double>(n), 1.0 / k)));
  for (std::int64_t r = std::max<std::int64_t>(1, guess - 2); r <= guess + 2; ++r) {
    if (power_cmp(r) == 0) return r;
  }
  throw DomainError("exact_root: " + std::to_string(n) + " is not a perfect " +
                    std::to_string(k) + "-th power");
}

int kronecker_symbol(std::int64_t D, std::int64_t a) {
  if (a == 0) return (D == 1 || D == -1) ? 1 : 0;
  if (D % 2 == 0 && a % 2 == 0) return 0;
  int result = 1;
  std::uint64_t n = abs_u64(a);
  const int v = __builtin_ctzll(n);
  n >>= v;
  if (v % 2 == 1) {
    // (D|2) for odd D depends on D mod 8.
    static constexpr int kTwo[8] = {0, 1, 0, -1, 0, -1, 0, 1};
    result = kTwo[static_cast<int>(reduce_mod(D, 8))];
  }
  if (a < 0 && D < 0) result = -result;
  // Jacobi symbol (D mod n | n) for odd n.
  std::uint64_t top = reduce_mod(D, n);
  while (top != 0) {
    while ((top & 1) == 0) {
      top >>= 1;
      const std::uint64_t r = n & 7;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(top, n);
    if ((top & 3) == 3 && (n & 3) == 3) result = -result;
    top %= n;
  }
  return n == 1 ? result : 0;
}

bool is_wieferich(std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw DomainError("is_wieferich: p must be an odd prime");
  }
  if (p >= (1ULL << 32)) throw DomainError("is_wieferich: p^2 exceeds 64 bits");
  return pow_mod(2, p - 1, p * p) == 1;
}

}  // namespace nearprim

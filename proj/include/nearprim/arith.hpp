#pragma once

// Exact integer primitives: factorization, totient, multiplicative order,
// squarefree kernels, quadratic discriminants, Kronecker symbols.
//
// All values are 64-bit. Desk-scale inputs (p - 1, radicands, discriminants)
// stay far below 2^63; overflow in derived quantities is reported as a
// DomainError rather than wrapped.

#include <cstdint>
#include <vector>

#include "nearprim/errors.hpp"

namespace nearprim {

struct PrimeFactor {
  std::int64_t prime = 0;
  int exponent = 0;

  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

// An integer with its full factorization. factors describe |value| with
// strictly increasing primes; sign is +1 or -1.
struct FactoredInteger {
  std::int64_t value = 1;
  int sign = 1;
  std::vector<PrimeFactor> factors;

  // sign * prod(prime^exponent); throws DomainError on overflow.
  std::int64_t product() const;
  // Checks every structural invariant, including primality of each factor.
  bool is_well_formed() const;

  friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
// g mod m mapped into [0, m) for any sign of g.
std::uint64_t reduce_mod(std::int64_t g, std::uint64_t m);

// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t n);

// Trial division below 10^6, then seeded Pollard-Brent on the cofactor.
FactoredInteger factorize(std::int64_t n);

std::int64_t euler_phi(const FactoredInteger& n);
std::int64_t euler_phi(std::int64_t n);

// Order of g modulo the prime p, obtained by stripping prime factors from
// p - 1 while the power stays 1.
std::uint64_t multiplicative_order(std::int64_t g, std::uint64_t p,
                                   const FactoredInteger& p_minus_1);

std::int64_t squarefree_kernel(std::int64_t g);

// Discriminant of Q(sqrt(g)): k if k = 1 (mod 4), else 4k, with k the
// squarefree kernel. Throws when g is a perfect square.
std::int64_t quad_discriminant(std::int64_t g);

// True iff the quadratic field Q(sqrt(g)) lies in Q(zeta_m), i.e. the
// discriminant divides m in absolute value. Perfect squares always do.
bool sqrt_in_cyclotomic(std::int64_t g, std::int64_t m);

// gcd of the exponents in the factorization of |g| (|g| >= 2).
std::int64_t exponent_gcd(std::int64_t g);

// Largest h with g an h-th power of an integer. Odd whenever g < 0.
std::int64_t power_index(std::int64_t g);

// The unique positive integer r with r^k = n; throws if n is not a k-th power.
std::int64_t exact_root(std::int64_t n, std::int64_t k);

int kronecker_symbol(std::int64_t D, std::int64_t a);

bool is_wieferich(std::uint64_t p);

std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
std::int64_t odd_part(std::int64_t n);
int two_adic_valuation(std::int64_t n);

}  // namespace nearprim

#include "nearprim/genocchi.hpp"

#include <string>

#include "nearprim/arith.hpp"
#include "nearprim/errors.hpp"
#include "nearprim/kernels.hpp"

namespace nearprim {

namespace {

void require_prime_above_3(std::uint32_t p, const char* what) {
  if (p <= 3 || !is_prime(p)) {
    throw DomainError(std::string(what) + ": need a prime p > 3, got " + std::to_string(p));
  }
}

std::uint32_t inverse_mod(std::uint32_t x, std::uint32_t p) {
  return static_cast<std::uint32_t>(pow_mod(x, p - 2, p));
}

}  // namespace

std::vector<ExactRational> bernoulli_upto(int N) {
  if (N < 0) throw DomainError("bernoulli_upto: N must be nonnegative");
  if (N > kExactGenocchiLimit) {
    throw DomainError("bernoulli_upto: N > 1000; use the modular path");
  }
  // Work with A_j = D * B_j, D the product of the primes <= N + 1, which
  // clears every denominator up to B_N. Each step checks its division.
  BigInt D = 1;
  for (int p = 2; p <= N + 1; ++p) {
    if (is_prime(static_cast<std::uint64_t>(p))) D *= p;
  }
  std::vector<BigInt> A(static_cast<std::size_t>(N) + 1);
  A[0] = D;
  if (N >= 1) A[1] = -D / 2;
  // row holds C(m + 1, j) for j = 0..m + 1.
  std::vector<BigInt> row{1, 1};
  for (int m = 1; m <= N; ++m) {
    std::vector<BigInt> next(row.size() + 1);
    next.front() = 1;
    next.back() = 1;
    for (std::size_t j = 1; j < row.size(); ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
    if (m == 1 || m % 2 == 1) continue;  // B_1 fixed, odd B_m = 0
    BigInt sum = 0;
    for (int j = 0; j < m; ++j) {
      if (j > 1 && j % 2 == 1) continue;
      sum += row[static_cast<std::size_t>(j)] * A[static_cast<std::size_t>(j)];
    }
    BigInt quotient, remainder;
    divide_qr(sum, BigInt(m + 1), quotient, remainder);
    if (remainder != 0) {
      throw InvariantViolation("Bernoulli recurrence left a fraction at index " + std::to_string(m));
    }
    A[static_cast<std::size_t>(m)] = -quotient;
  }
  std::vector<ExactRational> B;
  B.reserve(A.size());
  for (const auto& a : A) B.emplace_back(a, D);
  return B;
}

std::vector<BigInt> genocchi_upto(int N) {
  if (N < 1) throw DomainError("genocchi_upto: N must be positive");
  const auto B = bernoulli_upto(N);
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(N));
  for (int n = 1; n <= N; ++n) {
    const BigInt factor = 2 * (BigInt(1) - (BigInt(1) << n));
    const ExactRational G = factor * B[static_cast<std::size_t>(n)];
    if (denominator(G) != 1) {
      throw InvariantViolation("Genocchi number G_" + std::to_string(n) + " is not an integer");
    }
    out.push_back(numerator(G));
  }
  return out;
}

GenocchiRow genocchi_row_mod_p(std::uint32_t p) {
  require_prime_above_3(p, "genocchi_row_mod_p");
  if (p >= kernels::kDotModulusLimit) throw DomainError("genocchi_row_mod_p: p must be below 2^20");
  const std::uint32_t top = p - 3;
  std::vector<std::uint32_t> B(top + 1, 0);
  std::vector<std::uint32_t> row{1, 1};  // C(m + 1, j) mod p
  B[0] = 1;
  B[1] = p - inverse_mod(2, p);
  row.reserve(top + 2);
  for (std::uint32_t m = 1; m <= top; ++m) {
    // Extend row from C(m, .) to C(m + 1, .).
    row.push_back(1);
    for (std::size_t j = row.size() - 2; j >= 1; --j) {
      row[j] += row[j - 1];
      if (row[j] >= p) row[j] -= p;
    }
    if (m == 1 || m % 2 == 1) continue;
    const std::uint32_t sum = kernels::dot_mod(std::span(row).first(m), std::span(B).first(m), p);
    const std::uint64_t inv = inverse_mod(m + 1, p);
    B[m] = static_cast<std::uint32_t>((p - sum) % p * inv % p);
  }
  GenocchiRow out;
  out.p = p;
  for (std::uint32_t k = 2; k <= top; k += 2) {
    const std::uint64_t two_k = pow_mod(2, k, p);
    const std::uint64_t factor = 2 * ((1 + p - two_k) % p) % p;
    const auto g = static_cast<std::uint32_t>(factor * B[k] % p);
    out.residues.push_back(g);
    if (g == 0) out.irregular = true;
  }
  return out;
}

bool is_g_irregular(std::uint32_t p) { return genocchi_row_mod_p(p).irregular; }

std::vector<std::uint32_t> g_irregular_upto(std::uint32_t limit) {
  if (limit > 100000) throw DomainError("g_irregular_upto: limit above 10^5");
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 5; p <= limit; p += 2) {
    if (is_prime(p) && is_g_irregular(p)) out.push_back(p);
  }
  return out;
}

std::vector<std::uint32_t> g_irregular_first(std::uint32_t count) {
  if (count > 10000) throw DomainError("g_irregular_first: count above 10^4");
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 5; out.size() < count; p += 2) {
    if (p >= kernels::kDotModulusLimit) throw DomainError("g_irregular_first: search passed 2^20");
    if (is_prime(p) && is_g_irregular(p)) out.push_back(p);
  }
  return out;
}

bool ord4_criterion(std::uint32_t p) {
  require_prime_above_3(p, "ord4_criterion");
  const std::uint64_t order = multiplicative_order(4, p, factorize(p - 1));
  return order != (p - 1) / 2;
}

}  // namespace nearprim

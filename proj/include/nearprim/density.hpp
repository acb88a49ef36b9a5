#pragma once

// Exact predicted natural densities for the prime classes P, Q and R in an
// arithmetic progression, the nontriviality condition, the Artin constant
// and the density lower bound for G-irregular primes.

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace nearprim {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);  // "num/den"

// Parameters (g, t, d, a, q) of a density question. q is the auxiliary
// exponent; 1 when unused.
class ProgressionTask {
 public:
  // Throws DomainError unless g is not in {-1, 0, 1}, t, d, a, q >= 1 and
  // gcd(a, d) = 1.
  ProgressionTask(std::int64_t g, std::int64_t t, std::int64_t d, std::int64_t a,
                  std::int64_t q = 1);

  std::int64_t g() const { return g_; }
  std::int64_t t() const { return t_; }
  std::int64_t d() const { return d_; }
  std::int64_t a() const { return a_; }
  std::int64_t q() const { return q_; }

  // q > 2 and gcd(q, 2dt) = 1.
  bool elementary_regime() const { return elementary_; }
  // gcd(q, 2dgt) = 1 (q = 1 allowed).
  bool radical_regime() const { return radical_; }
  // q > 2 and gcd(q, 2dgt) = 1.
  bool main_regime() const { return radical_ && q_ > 2; }

  // First violated hypothesis of each regime, empty when it holds.
  std::string elementary_violation() const;
  std::string radical_violation() const;
  std::string main_violation() const;

  friend bool operator==(const ProgressionTask&, const ProgressionTask&) = default;

 private:
  std::int64_t g_, t_, d_, a_, q_;
  bool elementary_ = false;
  bool radical_ = false;
};

enum class DensitySource { q_subset, non_near_primitive, r_class, g_irregular_bound };

std::string_view to_string(DensitySource source);

struct DensityPrediction {
  Rational value;        // exactly 1 / degree
  std::int64_t degree = 1;
  DensitySource source = DensitySource::r_class;
  // True when the statement assumes R_g(t, d, a) is nonempty.
  bool conditional_on_nonempty = false;
  // Exact verdict on that hypothesis (Frobenius-class test), when evaluated.
  std::optional<bool> hypothesis_holds;
  // Smallest witness prime found by search, when a search was run.
  std::optional<std::uint64_t> witness;

  // Density to compare against: value, or 0 when the hypothesis fails.
  Rational effective() const;
};

// t | d and t | (a - 1).
bool condition_nontrivial(std::int64_t t, std::int64_t d, std::int64_t a);

// Density of {p = a (mod d) : ord_p(g) | (p - 1)/q}, a subset of Q_g(t, d, a).
DensityPrediction predicted_density_subset_Q(const ProgressionTask& task);
// delta(R_g(qt, d, a)) = 1 / [K_qt : Q], assuming R_g(t, d, a) nonempty.
// hypothesis_holds is filled from the exact Frobenius-class test.
DensityPrediction predicted_density_R(const ProgressionTask& task);
// Density of the subset of R_g(t, d, a) on which g is not a t-near
// primitive root, namely R_g(qt, d, a).
DensityPrediction predicted_density_main(const ProgressionTask& task);

struct ArtinEstimate {
  std::uint64_t cutoff = 0;
  long double partial_product = 0;  // product over primes <= cutoff
  long double lower = 0;            // certified lower bound for A
  long double upper = 0;            // certified upper bound for A
  long double error_bound = 0;      // upper - lower
  int certified_decimals = 0;       // decimals on which lower and upper agree
  std::string certified_digits;     // e.g. "0.373955"
};

// Partial Euler product for the Artin constant with tail bound
// prod_{p > T} (1 - 1/(p(p-1))) >= 1 - sum_{n > T} 1/(n(n-1)) = 1 - 1/T.
ArtinEstimate artin_constant(std::uint64_t cutoff);

std::int64_t smallest_prime_not_dividing(std::int64_t n);

// 1 / (phi(d) q (q - 1)) with q the smallest prime not dividing 2d.
DensityPrediction girr_density_lower(std::int64_t d, std::int64_t a);

struct AuxiliaryChoice {
  std::int64_t q = 0;
  DensityPrediction prediction;
};

// Scans primes 3 <= q <= q_max admissible for the elementary regime and
// returns the one with the largest predicted subset density.
std::optional<AuxiliaryChoice> best_auxiliary_q(std::int64_t g, std::int64_t t, std::int64_t d,
                                                std::int64_t a, std::int64_t q_max);

}  // namespace nearprim

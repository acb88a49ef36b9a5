#pragma once

// Empirical side: classify primes of a progression into P, Q and R, scan a
// range in parallel and compare the class frequencies with their exact
// predicted densities; witness search, Chebotarev sampling of Kummer
// indices and the Wieferich scan.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nearprim/arith.hpp"
#include "nearprim/density.hpp"

namespace nearprim {

struct ClassFlags {
  bool in_ap = false;   // p = a (mod d)
  bool cong_t = false;  // p = 1 (mod t)
  bool in_p = false;    // ord_p(g) = (p - 1)/t
  bool in_r = false;    // ord_p(g) | (p - 1)/t
  bool in_q = false;    // in the progression and not in P
};

// Requires p prime, p not dividing g or d, and pm1 the factorization of p - 1.
ClassFlags classify_prime(std::uint64_t p, const ProgressionTask& task, const FactoredInteger& pm1);

// Class labels in report order.
inline constexpr const char* kClassP = "P(t)";
inline constexpr const char* kClassR = "R(t)";
inline constexpr const char* kClassQ = "Q(t)";
inline constexpr const char* kClassRqt = "R(qt)";
inline constexpr const char* kClassNonPrim = "nonprim-subset";
inline constexpr const char* kClassQsub = "Qsub(q)";

struct ClassResult {
  std::string label;
  std::uint64_t count = 0;
  Rational empirical;  // count / pi(limit)
  std::optional<DensityPrediction> prediction;
  double expected = 0;           // pi(limit) * effective density
  double sigma = 0;              // binomial standard deviation
  std::optional<double> z;       // absent when sigma = 0
  std::optional<bool> within;    // absent without a prediction
};

struct ScanOptions {
  unsigned workers = 1;
  std::uint64_t segment_size = 1ULL << 20;
  double z_tolerance = 3.0;
  double relative_tolerance = 0.15;
  // Test hook: corrupts the merged P count so the invariant checks fire.
  bool inject_fault = false;
};

struct ScanReport {
  ProgressionTask task;
  std::uint64_t limit = 0;
  std::uint64_t prime_count = 0;  // pi(limit)
  std::uint64_t ap_count = 0;     // primes = a (mod d) up to limit
  std::vector<ClassResult> classes{};
  std::optional<std::uint64_t> witness{};  // smallest prime in R(t) up to limit
  std::uint64_t containment_checks = 0;      // R(qt) members whose order was recomputed
  std::uint64_t containment_violations = 0;  // ... and found equal to (p - 1)/t
  double z_tolerance = 3.0;
  double relative_tolerance = 0.15;

  const ClassResult* find(const std::string& label) const;
  std::uint64_t count(const std::string& label) const;
  // Every predicted class is within tolerance.
  bool all_within() const;
};

// Scans all primes <= limit (limit >= 1000). With q > 1 the task must be in
// the main regime; throws PreconditionError otherwise. Throws
// InvariantViolation if the containment relations among the counts fail.
// The report does not depend on options.workers.
ScanReport run_scan(const ProgressionTask& task, std::uint64_t limit, const ScanOptions& options = {});

// Smallest prime p <= bound in R_g(t, d, a) (p not dividing g).
std::optional<std::uint64_t> witness_search(std::int64_t g, std::int64_t t, std::int64_t d,
                                            std::int64_t a, std::uint64_t bound);

// Runs witness_search and stores the result in prediction.witness.
void attach_witness(DensityPrediction& prediction, const ProgressionTask& task, std::uint64_t bound);

struct OracleEstimate {
  std::int64_t M = 1, n = 1, g = 2;
  std::uint64_t samples = 0;  // primes p = 1 (mod M), p not dividing g
  std::uint64_t hits = 0;     // ... with g an n-th power residue
  bool conclusive = false;    // samples >= kOracleMinSamples
  double fraction = 0;        // hits / samples, estimates index / n
  // Exact binomial (Clopper-Pearson) interval for the index at the
  // two-sided 3-sigma level.
  double index_low = 0;
  double index_high = 0;
  std::int64_t index = 0;  // divisor of n nearest to fraction * n (log scale)

  bool interval_contains(std::int64_t index_value) const;
};

inline constexpr std::uint64_t kOracleMinSamples = 200;

// Estimates the Kummer index of Q(zeta_M, g^(1/n)) from the splitting
// frequency of primes p = 1 (mod M) up to limit.
OracleEstimate chebotarev_degree_oracle(std::int64_t M, std::int64_t n, std::int64_t g,
                                        std::uint64_t limit);
// Same, over a precomputed ascending prime list.
OracleEstimate chebotarev_degree_oracle(std::int64_t M, std::int64_t n, std::int64_t g,
                                        std::span<const std::uint64_t> primes);

// Primes p <= limit with 2^(p-1) = 1 (mod p^2). Requires 3 <= limit < 2^32.
std::vector<std::uint64_t> wieferich_scan(std::uint64_t limit);

}  // namespace nearprim

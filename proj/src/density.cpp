#include "nearprim/density.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nearprim/arith.hpp"
#include "nearprim/errors.hpp"
#include "nearprim/kummer.hpp"
#include "nearprim/sieve.hpp"

namespace nearprim {

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

DensityPrediction make_prediction(std::int64_t degree, DensitySource source, bool conditional) {
  DensityPrediction out;
  out.degree = degree;
  out.value = Rational(1, degree);
  out.source = source;
  out.conditional_on_nonempty = conditional;
  return out;
}

}  // namespace

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

ProgressionTask::ProgressionTask(std::int64_t g, std::int64_t t, std::int64_t d, std::int64_t a,
                                 std::int64_t q)
    : g_(g), t_(t), d_(d), a_(a), q_(q) {
  if (g >= -1 && g <= 1) throw DomainError("g must not be -1, 0 or 1");
  if (t < 1 || d < 1 || a < 1 || q < 1) throw DomainError("t, d, a and q must be positive");
  if (std::gcd(a, d) != 1) throw DomainError("gcd(a, d) != 1");
  const bool q_coprime_2dt = q % 2 != 0 && std::gcd(q, d) == 1 && std::gcd(q, t) == 1;
  elementary_ = q > 2 && q_coprime_2dt;
  radical_ = q_coprime_2dt && std::gcd(q, abs64(g)) == 1;
}

std::string ProgressionTask::elementary_violation() const {
  if (q_ <= 2) return "q > 2";
  if (q_ % 2 == 0 || std::gcd(q_, d_) != 1 || std::gcd(q_, t_) != 1) return "gcd(q,2dt) != 1";
  return {};
}

std::string ProgressionTask::radical_violation() const {
  if (!radical_) return "gcd(q,2dgt) != 1";
  return {};
}

std::string ProgressionTask::main_violation() const {
  if (q_ <= 2) return "q > 2";
  return radical_violation();
}

std::string_view to_string(DensitySource source) {
  switch (source) {
    case DensitySource::q_subset:
      return "q-subset";
    case DensitySource::non_near_primitive:
      return "non-near-primitive";
    case DensitySource::r_class:
      return "r-class";
    case DensitySource::g_irregular_bound:
      return "g-irregular-bound";
  }
  return "unknown";
}

Rational DensityPrediction::effective() const {
  if (hypothesis_holds.has_value() && !*hypothesis_holds) return Rational(0);
  return value;
}

bool condition_nontrivial(std::int64_t t, std::int64_t d, std::int64_t a) {
  if (t < 1 || d < 1 || a < 1) throw DomainError("t, d and a must be positive");
  if (std::gcd(a, d) != 1) throw DomainError("gcd(a, d) != 1");
  return d % t == 0 && (a - 1) % t == 0;
}

DensityPrediction predicted_density_subset_Q(const ProgressionTask& task) {
  if (!task.elementary_regime()) throw PreconditionError(task.elementary_violation());
  // q is odd and coprime to d, so Q(zeta_d) and Q(zeta_q, g^(1/q)) are
  // linearly disjoint and the Frobenius class always exists.
  return make_prediction(kn_degree(task.d(), task.q(), task.g()), DensitySource::q_subset, false);
}

DensityPrediction predicted_density_R(const ProgressionTask& task) {
  if (!task.radical_regime()) throw PreconditionError(task.radical_violation());
  const std::int64_t n = checked_mul(task.q(), task.t());
  auto out = make_prediction(kn_degree(task.d(), n, task.g()), DensitySource::r_class, true);
  out.hypothesis_holds = frobenius_class_exists(task.d(), task.a(), task.t(), task.g());
  return out;
}

DensityPrediction predicted_density_main(const ProgressionTask& task) {
  if (!task.main_regime()) throw PreconditionError(task.main_violation());
  const std::int64_t n = checked_mul(task.q(), task.t());
  auto out = make_prediction(kn_degree(task.d(), n, task.g()), DensitySource::non_near_primitive, true);
  out.hypothesis_holds = frobenius_class_exists(task.d(), task.a(), task.t(), task.g());
  return out;
}

ArtinEstimate artin_constant(std::uint64_t cutoff) {
  if (cutoff < 2) throw DomainError("artin_constant: cutoff must be at least 2");
  ArtinEstimate out;
  out.cutoff = cutoff;
  long double product = 1.0L;
  std::uint64_t factors = 0;
  for (std::uint64_t p : primes_upto(cutoff)) {
    const long double pl = static_cast<long double>(p);
    product *= 1.0L - 1.0L / (pl * (pl - 1.0L));
    ++factors;
  }
  // Accumulated rounding: a few ulps per factor, generously bounded.
  const long double rounding = 8.0L * static_cast<long double>(factors + 1) * 1.0842e-19L;
  out.partial_product = product;
  out.upper = product + rounding;
  out.lower = product * (1.0L - 1.0L / static_cast<long double>(cutoff)) - rounding;
  out.error_bound = out.upper - out.lower;

  for (int k = 1; k <= 15; ++k) {
    const long double scale = std::pow(10.0L, k);
    if (std::floor(out.lower * scale) != std::floor(out.upper * scale)) break;
    out.certified_decimals = k;
  }
  const long double scale = std::pow(10.0L, out.certified_decimals);
  const auto digits = static_cast<long long>(std::floor(out.lower * scale));
  std::string frac = std::to_string(digits);
  if (out.certified_decimals == 0) {
    out.certified_digits = "0";
  } else {
    frac.insert(0, static_cast<std::size_t>(std::max<int>(0, out.certified_decimals -
                                                                  static_cast<int>(frac.size()))),
                '0');
    out.certified_digits = "0." + frac;
  }
  return out;
}

std::int64_t smallest_prime_not_dividing(std::int64_t n) {
  if (n == 0) throw DomainError("every prime divides 0");
  for (std::int64_t q = 2;; ++q) {
    if (is_prime(static_cast<std::uint64_t>(q)) && n % q != 0) return q;
  }
}

DensityPrediction girr_density_lower(std::int64_t d, std::int64_t a) {
  if (d < 1 || a < 1) throw DomainError("d and a must be positive");
  if (std::gcd(a, d) != 1) throw DomainError("gcd(a, d) != 1");
  const std::int64_t q = smallest_prime_not_dividing(checked_mul(2, d));
  const std::int64_t degree = checked_mul(checked_mul(euler_phi(d), q), q - 1);
  return make_prediction(degree, DensitySource::g_irregular_bound, false);
}

std::optional<AuxiliaryChoice> best_auxiliary_q(std::int64_t g, std::int64_t t, std::int64_t d,
                                                std::int64_t a, std::int64_t q_max) {
  std::optional<AuxiliaryChoice> best;
  for (std::int64_t q = 3; q <= q_max; q += 2) {
    if (!is_prime(static_cast<std::uint64_t>(q))) continue;
    const ProgressionTask task(g, t, d, a, q);
    if (!task.elementary_regime()) continue;
    auto prediction = predicted_density_subset_Q(task);
    if (!best || prediction.degree < best->prediction.degree) best = AuxiliaryChoice{q, prediction};
  }
  return best;
}

}  // namespace nearprim

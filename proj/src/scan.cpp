#include "nearprim/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numeric>
#include <thread>

#include <boost/math/distributions/beta.hpp>

#include "nearprim/errors.hpp"
#include "nearprim/kernels.hpp"
#include "nearprim/sieve.hpp"

namespace nearprim {

namespace {

void require_task_params(std::int64_t g, std::int64_t t, std::int64_t d, std::int64_t a) {
  if (g >= -1 && g <= 1) throw DomainError("g must not be -1, 0 or 1");
  if (t < 1 || d < 1 || a < 1) throw DomainError("t, d and a must be positive");
  if (std::gcd(a, d) != 1) throw DomainError("gcd(a, d) != 1");
}

struct Partial {
  std::uint64_t primes = 0;
  std::uint64_t ap = 0;
  std::uint64_t p = 0, r = 0, q = 0, rqt = 0, nonprim = 0, qsub = 0;
  std::uint64_t containment_checks = 0;
  std::uint64_t containment_violations = 0;
  std::optional<std::uint64_t> witness;
};

struct ScanContext {
  std::int64_t g, t, d, a, q, qt;
  std::uint64_t ud, ua;
};

// Flat job list for one powmod_batch round.
struct Jobs {
  std::vector<std::uint64_t> base, exp, mod, out;
  std::vector<std::uint32_t> owner;

  void add(std::uint64_t b, std::uint64_t e, std::uint64_t m, std::uint32_t who) {
    base.push_back(b);
    exp.push_back(e);
    mod.push_back(m);
    owner.push_back(who);
  }
  void run() {
    out.resize(base.size());
    kernels::powmod_batch(base, exp, mod, out);
  }
};

int valuation(std::int64_t n, std::int64_t ell) {
  int v = 0;
  while (n % ell == 0) {
    n /= ell;
    ++v;
  }
  return v;
}

enum : std::uint8_t { kInR = 1, kInRqt = 2, kInQsub = 4, kInP = 8 };

Partial scan_segment(const ScanContext& ctx, std::uint64_t lo, std::uint64_t hi) {
  Partial part;
  const PrimeSegment seg = segmented_primes(lo, hi, true);
  part.primes = seg.primes.size();

  const auto ut = static_cast<std::uint64_t>(ctx.t);
  const auto uq = static_cast<std::uint64_t>(ctx.q);
  const auto uqt = static_cast<std::uint64_t>(ctx.qt);

  // Round A: membership in R(t), R(qt) and the q-subset of Q.
  std::vector<std::uint32_t> members;  // indices of AP primes not dividing g
  Jobs round_a;
  std::vector<std::uint8_t> flags(seg.primes.size(), 0);
  for (std::uint32_t i = 0; i < seg.primes.size(); ++i) {
    const std::uint64_t p = seg.primes[i];
    if (p % ctx.ud != ctx.ua) continue;
    ++part.ap;
    const std::uint64_t gm = reduce_mod(ctx.g, p);
    if (gm == 0) {
      ++part.q;
      continue;
    }
    members.push_back(i);
    const std::uint64_t pm1 = p - 1;
    if (pm1 % ut == 0) round_a.add(gm, pm1 / ut, p, i * 4 + 0);
    if (ctx.q > 1) {
      if (pm1 % uqt == 0) round_a.add(gm, pm1 / uqt, p, i * 4 + 1);
      if (pm1 % uq == 0) round_a.add(gm, pm1 / uq, p, i * 4 + 2);
    }
  }
  round_a.run();
  for (std::size_t j = 0; j < round_a.out.size(); ++j) {
    if (round_a.out[j] != 1) continue;
    const std::uint32_t who = round_a.owner[j];
    static constexpr std::uint8_t kBit[3] = {kInR, kInRqt, kInQsub};
    flags[who / 4] |= kBit[who % 4];
  }

  // Round B: g in R(t) is a t-near primitive root iff no g^(m/ell) is 1,
  // m = (p - 1)/t, ell over the primes dividing m.
  Jobs round_b;
  for (std::uint32_t i : members) {
    if (!(flags[i] & kInR)) continue;
    const std::uint64_t p = seg.primes[i];
    const std::uint64_t m = (p - 1) / ut;
    const std::uint64_t gm = reduce_mod(ctx.g, p);
    for (const auto& f : seg.pm1_factors[i].factors) {
      if (f.exponent > valuation(ctx.t, f.prime)) {
        round_b.add(gm, m / static_cast<std::uint64_t>(f.prime), p, i);
      }
    }
  }
  round_b.run();
  for (std::uint32_t i : members) {
    if (flags[i] & kInR) flags[i] |= kInP;
  }
  for (std::size_t j = 0; j < round_b.out.size(); ++j) {
    if (round_b.out[j] == 1) flags[round_b.owner[j]] &= static_cast<std::uint8_t>(~kInP);
  }

  for (std::uint32_t i : members) {
    const std::uint8_t f = flags[i];
    const bool in_p = f & kInP;
    if (f & kInR) {
      ++part.r;
      if (!part.witness) part.witness = seg.primes[i];
    }
    if (in_p) {
      ++part.p;
    } else {
      ++part.q;
    }
    if (f & kInRqt) {
      ++part.rqt;
      const std::uint64_t p = seg.primes[i];
      const std::uint64_t order = multiplicative_order(ctx.g, p, seg.pm1_factors[i]);
      ++part.containment_checks;
      if (order == (p - 1) / ut) ++part.containment_violations;
    }
    if ((f & kInR) && !in_p && (f & kInRqt)) ++part.nonprim;
    if (f & kInQsub) ++part.qsub;
  }
  return part;
}

void evaluate(ClassResult& c, std::uint64_t n, double z_tol, double rel_tol) {
  if (!c.prediction) return;
  const Rational eff = c.prediction->effective();
  const double delta = boost::rational_cast<double>(eff);
  const double N = static_cast<double>(n);
  c.expected = N * delta;
  c.sigma = std::sqrt(N * delta * (1.0 - delta));
  const double diff = static_cast<double>(c.count) - c.expected;
  if (c.sigma > 0) c.z = diff / c.sigma;
  c.within = std::fabs(diff) <= std::max(z_tol * c.sigma, rel_tol * c.expected);
}

}  // namespace

ClassFlags classify_prime(std::uint64_t p, const ProgressionTask& task, const FactoredInteger& pm1) {
  if (reduce_mod(task.g(), p) == 0) throw DomainError("classify_prime: p divides g");
  if (task.d() % static_cast<std::int64_t>(p) == 0) throw DomainError("classify_prime: p divides d");
  ClassFlags out;
  const auto d = static_cast<std::uint64_t>(task.d());
  const auto t = static_cast<std::uint64_t>(task.t());
  out.in_ap = p % d == static_cast<std::uint64_t>(task.a()) % d;
  out.cong_t = (p - 1) % t == 0;
  if (out.in_ap && out.cong_t) {
    const std::uint64_t order = multiplicative_order(task.g(), p, pm1);
    const std::uint64_t m = (p - 1) / t;
    out.in_r = m % order == 0;
    out.in_p = order == m;
  }
  out.in_q = out.in_ap && !out.in_p;
  return out;
}

const ClassResult* ScanReport::find(const std::string& label) const {
  for (const auto& c : classes) {
    if (c.label == label) return &c;
  }
  return nullptr;
}

std::uint64_t ScanReport::count(const std::string& label) const {
  const ClassResult* c = find(label);
  if (!c) throw DomainError("scan report has no class " + label);
  return c->count;
}

bool ScanReport::all_within() const {
  return std::all_of(classes.begin(), classes.end(),
                     [](const ClassResult& c) { return !c.within || *c.within; });
}

ScanReport run_scan(const ProgressionTask& task, std::uint64_t limit, const ScanOptions& options) {
  if (limit < 1000 || limit > kSieveUpperBound) {
    throw DomainError("run_scan: limit must lie in [10^3, 10^10]");
  }
  if (options.segment_size < 1024) throw DomainError("run_scan: segment size below 1024");
  if (task.q() > 1 && !task.main_regime()) throw PreconditionError(task.main_violation());

  ScanContext ctx{task.g(), task.t(), task.d(), task.a(), task.q(),
                  checked_mul(task.q(), task.t()), static_cast<std::uint64_t>(task.d()),
                  static_cast<std::uint64_t>(task.a() % task.d())};

  const std::uint64_t span = limit - 1;  // [2, limit]
  const std::uint64_t segments = (span + options.segment_size - 1) / options.segment_size;
  std::vector<Partial> partials(segments);
  std::atomic<std::uint64_t> next{0};
  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::uint64_t>(options.workers, 1, segments));
  std::vector<std::exception_ptr> errors(workers);
  auto worker = [&](unsigned w) {
    try {
      for (std::uint64_t k = next.fetch_add(1); k < segments; k = next.fetch_add(1)) {
        const std::uint64_t lo = 2 + k * options.segment_size;
        const std::uint64_t hi = std::min(limit + 1, lo + options.segment_size);
        partials[k] = scan_segment(ctx, lo, hi);
      }
    } catch (...) {
      errors[w] = std::current_exception();
      next.store(segments);
    }
  };
  if (workers == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker, w);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Partial total;
  for (const Partial& p : partials) {
    total.primes += p.primes;
    total.ap += p.ap;
    total.p += p.p;
    total.r += p.r;
    total.q += p.q;
    total.rqt += p.rqt;
    total.nonprim += p.nonprim;
    total.qsub += p.qsub;
    total.containment_checks += p.containment_checks;
    total.containment_violations += p.containment_violations;
    if (!total.witness && p.witness) total.witness = p.witness;
  }
  if (options.inject_fault) ++total.p;

  if (total.p > total.r) throw InvariantViolation("scan: P(t) count exceeds R(t) count");
  if (total.p + total.q != total.ap) {
    throw InvariantViolation("scan: P(t) + Q(t) differs from the progression count");
  }
  if (task.q() > 1) {
    if (total.rqt > total.q) throw InvariantViolation("scan: R(qt) count exceeds Q(t) count");
    if (total.nonprim != total.rqt) throw InvariantViolation("scan: R(qt) is not inside R(t) \\ P(t)");
    if (total.containment_violations != 0) {
      throw InvariantViolation("scan: a prime in R(qt) has g as a t-near primitive root");
    }
  }

  ScanReport report{.task = task, .limit = limit};
  report.prime_count = total.primes;
  report.ap_count = total.ap;
  report.witness = total.witness;
  report.containment_checks = total.containment_checks;
  report.containment_violations = total.containment_violations;
  report.z_tolerance = options.z_tolerance;
  report.relative_tolerance = options.relative_tolerance;

  auto add = [&](const char* label, std::uint64_t count, std::optional<DensityPrediction> pred) {
    ClassResult c;
    c.label = label;
    c.count = count;
    c.empirical = Rational(static_cast<std::int64_t>(count), static_cast<std::int64_t>(total.primes));
    c.prediction = std::move(pred);
    evaluate(c, total.primes, options.z_tolerance, options.relative_tolerance);
    report.classes.push_back(std::move(c));
  };

  auto r_pred = predicted_density_R(ProgressionTask(task.g(), task.t(), task.d(), task.a()));
  r_pred.witness = total.witness;
  add(kClassP, total.p, std::nullopt);
  add(kClassR, total.r, r_pred);
  add(kClassQ, total.q, std::nullopt);
  if (task.q() > 1) {
    auto rqt_pred = predicted_density_R(task);
    rqt_pred.witness = total.witness;
    auto nonprim_pred = predicted_density_main(task);
    nonprim_pred.witness = total.witness;
    add(kClassRqt, total.rqt, rqt_pred);
    add(kClassNonPrim, total.nonprim, nonprim_pred);
    add(kClassQsub, total.qsub, predicted_density_subset_Q(task));
  }
  return report;
}

std::optional<std::uint64_t> witness_search(std::int64_t g, std::int64_t t, std::int64_t d,
                                            std::int64_t a, std::uint64_t bound) {
  require_task_params(g, t, d, a);
  if (bound < 2) return std::nullopt;
  if (bound > kSieveUpperBound) throw DomainError("witness_search: bound above 10^10");
  const auto ud = static_cast<std::uint64_t>(d);
  const auto ua = static_cast<std::uint64_t>(a) % ud;
  const auto ut = static_cast<std::uint64_t>(t);
  // Witnesses are usually small: start with short segments and grow them.
  std::uint64_t width = 4096;
  for (std::uint64_t lo = 2; lo <= bound; lo += width, width = std::min(2 * width, kDefaultSegmentSize)) {
    const std::uint64_t hi = std::min(bound + 1, lo + width);
    for (std::uint64_t p : segmented_primes(lo, hi, false).primes) {
      if (p % ud != ua || (p - 1) % ut != 0) continue;
      const std::uint64_t gm = reduce_mod(g, p);
      if (gm != 0 && pow_mod(gm, (p - 1) / ut, p) == 1) return p;
    }
  }
  return std::nullopt;
}

void attach_witness(DensityPrediction& prediction, const ProgressionTask& task, std::uint64_t bound) {
  prediction.witness = witness_search(task.g(), task.t(), task.d(), task.a(), bound);
}

bool OracleEstimate::interval_contains(std::int64_t index_value) const {
  const double v = static_cast<double>(index_value);
  return v >= index_low - 1e-9 && v <= index_high + 1e-9;
}

OracleEstimate chebotarev_degree_oracle(std::int64_t M, std::int64_t n, std::int64_t g,
                                        std::span<const std::uint64_t> primes) {
  if (g >= -1 && g <= 1) throw DomainError("g must not be -1, 0 or 1");
  if (M < 1 || n < 1 || M % n != 0) throw DomainError("oracle: need positive n dividing M");
  OracleEstimate out;
  out.M = M;
  out.n = n;
  out.g = g;
  const auto uM = static_cast<std::uint64_t>(M);
  const auto un = static_cast<std::uint64_t>(n);
  Jobs jobs;
  for (std::uint64_t p : primes) {
    if (p % uM != 1 % uM) continue;
    const std::uint64_t gm = reduce_mod(g, p);
    if (gm == 0) continue;
    jobs.add(gm, (p - 1) / un, p, 0);
  }
  jobs.run();
  out.samples = jobs.out.size();
  out.hits = static_cast<std::uint64_t>(std::count(jobs.out.begin(), jobs.out.end(), 1));
  out.conclusive = out.samples >= kOracleMinSamples;
  if (out.samples == 0) return out;

  out.fraction = static_cast<double>(out.hits) / static_cast<double>(out.samples);
  const double alpha = std::erfc(3.0 / std::sqrt(2.0));
  const auto x = static_cast<double>(out.hits);
  const auto N = static_cast<double>(out.samples);
  using boost::math::beta_distribution;
  const double lo = out.hits == 0 ? 0.0 : quantile(beta_distribution<>(x, N - x + 1), alpha / 2);
  const double hi =
      out.hits == out.samples ? 1.0 : quantile(beta_distribution<>(x + 1, N - x), 1 - alpha / 2);
  const double dn = static_cast<double>(n);
  out.index_low = lo * dn;
  out.index_high = hi * dn;

  const double target = std::log(std::max(out.fraction * dn, 0.5));
  double best = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    if (n % k != 0) continue;
    const double dist = std::fabs(std::log(static_cast<double>(k)) - target);
    if (out.index == 0 || dist < best) {
      out.index = k;
      best = dist;
    }
  }
  return out;
}

OracleEstimate chebotarev_degree_oracle(std::int64_t M, std::int64_t n, std::int64_t g,
                                        std::uint64_t limit) {
  if (limit > kSieveUpperBound) throw DomainError("oracle: limit above 10^10");
  const auto primes = primes_upto(limit);
  return chebotarev_degree_oracle(M, n, g, primes);
}

std::vector<std::uint64_t> wieferich_scan(std::uint64_t limit) {
  if (limit < 3 || limit >= (1ULL << 32)) throw DomainError("wieferich_scan: need 3 <= limit < 2^32");
  std::vector<std::uint64_t> out;
  for (std::uint64_t lo = 3; lo <= limit; lo += kDefaultSegmentSize) {
    const std::uint64_t hi = std::min(limit + 1, lo + kDefaultSegmentSize);
    for (std::uint64_t p : segmented_primes(lo, hi, false).primes) {
      if (pow_mod(2, p - 1, p * p) == 1) out.push_back(p);
    }
  }
  return out;
}

}  // namespace nearprim

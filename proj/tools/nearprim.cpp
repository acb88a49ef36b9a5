// nearprim: command-line front end. Every command prints a JSON envelope
// (scan can print CSV instead).
//
// Exit codes: 0 success, 2 usage or domain error, 3 violated hypothesis,
// 4 internal invariant failure.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "nearprim/arith.hpp"
#include "nearprim/density.hpp"
#include "nearprim/envelope.hpp"
#include "nearprim/errors.hpp"
#include "nearprim/genocchi.hpp"
#include "nearprim/kernels.hpp"
#include "nearprim/kummer.hpp"
#include "nearprim/scan.hpp"
#include "nearprim/sieve.hpp"

namespace {

using nearprim::Json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitInvariant = 4;

struct Common {
  bool timing = false;
};

unsigned resolve_workers(unsigned flag) {
  if (const char* env = std::getenv("NEARPRIM_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw nearprim::DomainError("NEARPRIM_WORKERS must be an integer in [1, 1024]");
  }
  if (flag < 1) throw nearprim::DomainError("--workers must be at least 1");
  return flag;
}

Json big_to_json(const nearprim::BigInt& v) { return v.str(); }

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void emit(const std::string& command, Json params, Json results, Json meta, const Common& common,
          const Timer& timer) {
  if (common.timing) {
    meta["wall_time_s"] = timer.seconds();
    meta["simd"] = std::string(nearprim::kernels::isa_name(nearprim::kernels::active_isa()));
  }
  std::cout << nearprim::render(
      nearprim::make_envelope(command, std::move(params), std::move(results), std::move(meta)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Near-primitive roots in arithmetic progressions: degrees, densities, scans"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--timing", common.timing, "Add wall time and kernel variant to meta");

  // degree
  std::int64_t deg_g = 0, deg_n = 0;
  std::optional<std::int64_t> deg_d, deg_M;
  auto* degree = app.add_subcommand("degree", "Degree of Q(zeta_M, g^(1/n)) or of K_n");
  degree->add_option("--g", deg_g, "Radicand")->required();
  degree->add_option("--n", deg_n, "Radical exponent")->required();
  auto* opt_d = degree->add_option("--d", deg_d, "Modulus d; uses M = lcm(d, n)");
  auto* opt_M = degree->add_option("--M", deg_M, "Cyclotomic level M (n | M)");
  opt_d->excludes(opt_M);
  opt_M->excludes(opt_d);

  // scan
  std::int64_t sc_g = 0, sc_t = 1, sc_d = 1, sc_a = 1, sc_q = 1;
  std::uint64_t sc_limit = 0, sc_segment = nearprim::kDefaultSegmentSize;
  unsigned sc_workers = 1;
  std::string sc_format = "json";
  double sc_z = 3.0, sc_rel = 0.15;
  auto* scan = app.add_subcommand("scan", "Classify primes up to a limit and compare with predictions");
  scan->add_option("--g", sc_g)->required();
  scan->add_option("--t", sc_t)->required();
  scan->add_option("--d", sc_d)->required();
  scan->add_option("--a", sc_a)->required();
  scan->add_option("--q", sc_q, "Auxiliary exponent (1 = none)")->capture_default_str();
  scan->add_option("--limit", sc_limit)->required();
  scan->add_option("--format", sc_format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  scan->add_option("--workers", sc_workers, "Overridden by NEARPRIM_WORKERS")->capture_default_str();
  scan->add_option("--segment-size", sc_segment)->capture_default_str();
  scan->add_option("--z-tolerance", sc_z)->capture_default_str();
  scan->add_option("--relative-tolerance", sc_rel)->capture_default_str();

  // genocchi
  std::optional<int> gn_upto;
  std::optional<std::uint32_t> gn_first, gn_prime, gn_limit;
  auto* genocchi = app.add_subcommand("genocchi", "Genocchi numbers and G-irregular primes");
  auto* o_upto = genocchi->add_option("--upto", gn_upto, "Exact G_1..G_N");
  auto* o_first = genocchi->add_option("--first", gn_first, "First K G-irregular primes");
  auto* o_prime = genocchi->add_option("--prime", gn_prime, "Row G_2..G_{p-3} mod p");
  auto* o_limit = genocchi->add_option("--limit", gn_limit, "G-irregular primes up to a limit");
  genocchi->require_option(1);
  (void)o_upto;
  (void)o_first;
  (void)o_prime;
  (void)o_limit;

  // artin
  std::uint64_t ar_cutoff = 1'000'000;
  auto* artin = app.add_subcommand("artin", "Artin constant with a certified error bound");
  artin->add_option("--cutoff", ar_cutoff)->capture_default_str();

  // witness
  std::int64_t wi_g = 0, wi_t = 1, wi_d = 1, wi_a = 1;
  std::uint64_t wi_bound = 1'000'000;
  auto* witness = app.add_subcommand("witness", "Smallest prime in R_g(t, d, a)");
  witness->add_option("--g", wi_g)->required();
  witness->add_option("--t", wi_t)->required();
  witness->add_option("--d", wi_d)->required();
  witness->add_option("--a", wi_a)->required();
  witness->add_option("--bound", wi_bound)->capture_default_str();

  // wieferich
  std::uint64_t wf_limit = 0;
  auto* wieferich = app.add_subcommand("wieferich", "Wieferich primes up to a limit");
  wieferich->add_option("--limit", wf_limit)->required();

  // condition
  std::int64_t co_t = 1, co_d = 1, co_a = 1;
  auto* condition = app.add_subcommand("condition", "Whether t | d and t | (a - 1)");
  condition->add_option("--t", co_t)->required();
  condition->add_option("--d", co_d)->required();
  condition->add_option("--a", co_a)->required();

  // intersect
  std::int64_t in_g = 0, in_d = 1, in_t = 1, in_q = 1;
  auto* intersect = app.add_subcommand("intersect", "Degrees of Q(zeta_d) cap Q(zeta_n, g^(1/n)) for n = t, qt");
  intersect->add_option("--g", in_g)->required();
  intersect->add_option("--d", in_d)->required();
  intersect->add_option("--t", in_t)->required();
  intersect->add_option("--q", in_q)->required();

  // oracle
  std::int64_t or_M = 1, or_n = 1, or_g = 0;
  std::uint64_t or_limit = 1'000'000;
  auto* oracle = app.add_subcommand("oracle", "Estimate a Kummer index from prime splitting");
  oracle->add_option("--M", or_M)->required();
  oracle->add_option("--n", or_n)->required();
  oracle->add_option("--g", or_g)->required();
  oracle->add_option("--limit", or_limit)->capture_default_str();

  // selfcheck (hidden): exercises the invariant-failure path.
  bool sf_fault = false;
  auto* selfcheck = app.add_subcommand("selfcheck", "");
  selfcheck->group("");
  selfcheck->add_flag("--inject-fault", sf_fault);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const Timer timer;
  try {
    if (*degree) {
      if (!deg_d == !deg_M) throw nearprim::DomainError("degree: give exactly one of --d or --M");
      const std::int64_t M = deg_d ? nearprim::lcm64(*deg_d, deg_n) : *deg_M;
      if (deg_d && *deg_d < 1) throw nearprim::DomainError("d must be positive");
      const auto trace = nearprim::kummer_trace({M, deg_n, deg_g});
      Json params{{"g", deg_g}, {"n", deg_n}};
      params["d"] = deg_d ? Json(*deg_d) : Json(nullptr);
      params["M"] = deg_M ? Json(*deg_M) : Json(nullptr);
      Json results{{"degree", trace.degree}, {"field_level", M}, {"h", trace.h},
                   {"d0", trace.d0},         {"e", trace.e},      {"index", trace.index}};
      emit("degree", params, results, Json::object(), common, timer);
    } else if (*scan) {
      const nearprim::ProgressionTask task(sc_g, sc_t, sc_d, sc_a, sc_q);
      nearprim::ScanOptions options;
      options.workers = resolve_workers(sc_workers);
      options.segment_size = sc_segment;
      options.z_tolerance = sc_z;
      options.relative_tolerance = sc_rel;
      const auto report = nearprim::run_scan(task, sc_limit, options);
      if (sc_format == "csv") {
        std::cout << nearprim::scan_report_csv(report);
      } else {
        Json params{{"g", sc_g},         {"t", sc_t},           {"d", sc_d},
                    {"a", sc_a},         {"q", sc_q},           {"limit", sc_limit},
                    {"format", sc_format}, {"segment_size", sc_segment}};
        Json meta{{"z_tolerance", sc_z},
                  {"relative_tolerance", sc_rel},
                  {"normalization", "pi(limit)"}};
        if (common.timing) meta["workers"] = options.workers;
        emit("scan", params, nearprim::scan_report_json(report), meta, common, timer);
      }
    } else if (*genocchi) {
      Json params = Json::object();
      Json results = Json::object();
      if (gn_upto) {
        params["upto"] = *gn_upto;
        Json values = Json::array();
        for (const auto& v : nearprim::genocchi_upto(*gn_upto)) values.push_back(big_to_json(v));
        results["values"] = values;
        results["first_index"] = 1;
        results["convention"] = "G_n = 2(1 - 2^n) B_n with B_1 = -1/2, so G_1 = 1";
      } else if (gn_first) {
        params["first"] = *gn_first;
        results["g_irregular"] = nearprim::g_irregular_first(*gn_first);
      } else if (gn_limit) {
        params["limit"] = *gn_limit;
        results["g_irregular"] = nearprim::g_irregular_upto(*gn_limit);
      } else {
        params["prime"] = *gn_prime;
        const auto row = nearprim::genocchi_row_mod_p(*gn_prime);
        results["p"] = row.p;
        results["indices"] = "2, 4, ..., p - 3";
        results["residues"] = row.residues;
        results["irregular"] = row.irregular;
        results["ord4_criterion"] = nearprim::ord4_criterion(*gn_prime);
      }
      emit("genocchi", params, results, Json::object(), common, timer);
    } else if (*artin) {
      const auto est = nearprim::artin_constant(ar_cutoff);
      char buf[64];
      auto ld = [&buf](long double v) {
        std::snprintf(buf, sizeof buf, "%.15Lf", v);
        return std::string(buf);
      };
      Json results{{"partial_product", ld(est.partial_product)},
                   {"lower", ld(est.lower)},
                   {"upper", ld(est.upper)},
                   {"error_bound", ld(est.error_bound)},
                   {"certified_decimals", est.certified_decimals},
                   {"certified_digits", est.certified_digits}};
      emit("artin", Json{{"cutoff", ar_cutoff}}, results,
           Json{{"tail_bound", "prod_{p > T} >= 1 - 1/T"}}, common, timer);
    } else if (*witness) {
      const auto w = nearprim::witness_search(wi_g, wi_t, wi_d, wi_a, wi_bound);
      Json results;
      results["witness"] = w ? Json(*w) : Json("unknown(" + std::to_string(wi_bound) + ")");
      results["found"] = w.has_value();
      results["frobenius_class_exists"] = nearprim::frobenius_class_exists(wi_d, wi_a, wi_t, wi_g);
      emit("witness", Json{{"g", wi_g}, {"t", wi_t}, {"d", wi_d}, {"a", wi_a}, {"bound", wi_bound}},
           results, Json{{"witness_bound", wi_bound}}, common, timer);
    } else if (*wieferich) {
      emit("wieferich", Json{{"limit", wf_limit}},
           Json{{"primes", nearprim::wieferich_scan(wf_limit)}}, Json::object(), common, timer);
    } else if (*condition) {
      emit("condition", Json{{"t", co_t}, {"d", co_d}, {"a", co_a}},
           Json{{"nontrivial", nearprim::condition_nontrivial(co_t, co_d, co_a)}}, Json::object(),
           common, timer);
    } else if (*intersect) {
      const auto check = nearprim::lemma_invariance_check(in_d, in_t, in_q, in_g);
      const std::int64_t qt = nearprim::checked_mul(in_q, in_t);
      Json results{{"degree_t", check.degree_t},
                   {"degree_qt", check.degree_qt},
                   {"degree_t_galois", nearprim::intersection_degree_galois({in_d, in_t, in_g})},
                   {"degree_qt_galois", nearprim::intersection_degree_galois({in_d, qt, in_g})},
                   {"equal", check.invariant},
                   {"precondition_holds", check.precondition_holds}};
      results["violated_hypothesis"] =
          check.precondition_holds ? Json(nullptr) : Json("gcd(q,2dgt) != 1");
      emit("intersect", Json{{"g", in_g}, {"d", in_d}, {"t", in_t}, {"q", in_q}}, results,
           Json::object(), common, timer);
    } else if (*oracle) {
      const auto est = nearprim::chebotarev_degree_oracle(or_M, or_n, or_g, or_limit);
      const std::int64_t predicted =
          nearprim::euler_phi(or_M) * or_n / nearprim::kummer_degree({or_M, or_n, or_g});
      char lo[32], hi[32], fr[32];
      std::snprintf(lo, sizeof lo, "%.6f", est.index_low);
      std::snprintf(hi, sizeof hi, "%.6f", est.index_high);
      std::snprintf(fr, sizeof fr, "%.6f", est.fraction);
      Json results{{"samples", est.samples},     {"hits", est.hits},
                   {"fraction", fr},             {"index_estimate", est.index},
                   {"index_low", lo},            {"index_high", hi},
                   {"conclusive", est.conclusive}, {"predicted_index", predicted},
                   {"predicted_in_interval", est.interval_contains(predicted)}};
      emit("oracle", Json{{"M", or_M}, {"n", or_n}, {"g", or_g}, {"limit", or_limit}}, results,
           Json{{"interval", "Clopper-Pearson, two-sided 3 sigma"},
                {"min_samples", nearprim::kOracleMinSamples}},
           common, timer);
    } else if (*selfcheck) {
      nearprim::ScanOptions options;
      options.inject_fault = sf_fault;
      const auto report = nearprim::run_scan(nearprim::ProgressionTask(2, 1, 3, 1, 5), 100000, options);
      emit("selfcheck", Json{{"inject_fault", sf_fault}},
           Json{{"ok", true}, {"prime_count", report.prime_count}}, Json::object(), common, timer);
    }
  } catch (const nearprim::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const nearprim::InvariantViolation& e) {
    std::cerr << "internal invariant failure: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const nearprim::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal failure: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitOk;
}

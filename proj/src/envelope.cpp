#include "nearprim/envelope.hpp"

#include <cinttypes>
#include <cstdio>
#include <sstream>

namespace nearprim {

namespace {

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

}  // namespace

std::string decimal_string(const Rational& r, int decimals) {
  __int128 num = r.numerator();
  const __int128 den = r.denominator();
  std::string out;
  if (num < 0) {
    out.push_back('-');
    num = -num;
  }
  out += std::to_string(static_cast<std::int64_t>(num / den));
  if (decimals <= 0) return out;
  out.push_back('.');
  __int128 rem = num % den;
  for (int i = 0; i < decimals; ++i) {
    rem *= 10;
    out.push_back(static_cast<char>('0' + static_cast<int>(rem / den)));
    rem %= den;
  }
  return out;
}

Json rational_json(const Rational& r) {
  return Json{{"exact", to_string(r)}, {"decimal", decimal_string(r)}};
}

Json prediction_json(const DensityPrediction& p) {
  Json j{{"density", rational_json(p.value)},
         {"effective", rational_json(p.effective())},
         {"degree", p.degree},
         {"source", std::string(to_string(p.source))},
         {"conditional_on_nonempty", p.conditional_on_nonempty}};
  j["hypothesis_holds"] = p.hypothesis_holds ? Json(*p.hypothesis_holds) : Json(nullptr);
  j["witness"] = p.witness ? Json(*p.witness) : Json(nullptr);
  return j;
}

Json task_json(const ProgressionTask& task) {
  return Json{{"g", task.g()}, {"t", task.t()}, {"d", task.d()}, {"a", task.a()}, {"q", task.q()}};
}

Json scan_report_json(const ScanReport& report) {
  Json classes = Json::array();
  for (const auto& c : report.classes) {
    Json j{{"label", c.label}, {"count", c.count}, {"empirical", rational_json(c.empirical)}};
    if (c.prediction) {
      j["prediction"] = prediction_json(*c.prediction);
      j["expected"] = fixed(c.expected, 3);
      j["sigma"] = fixed(c.sigma, 3);
      j["z_score"] = c.z ? Json(fixed(*c.z, 6)) : Json(nullptr);
      j["within_tolerance"] = *c.within;
    } else {
      j["prediction"] = nullptr;
    }
    classes.push_back(std::move(j));
  }
  Json out{{"task", task_json(report.task)},
           {"limit", report.limit},
           {"prime_count", report.prime_count},
           {"ap_count", report.ap_count},
           {"classes", std::move(classes)},
           {"all_within_tolerance", report.all_within()},
           {"containment_checks", report.containment_checks},
           {"containment_violations", report.containment_violations}};
  out["witness"] = report.witness ? Json(*report.witness) : Json(nullptr);
  return out;
}

std::string scan_report_csv(const ScanReport& report) {
  std::ostringstream os;
  os << "class,count,empirical_num,empirical_den,predicted_num,predicted_den,z_score\n";
  for (const auto& c : report.classes) {
    os << c.label << ',' << c.count << ',' << c.empirical.numerator() << ','
       << c.empirical.denominator() << ',';
    if (c.prediction) {
      const Rational eff = c.prediction->effective();
      os << eff.numerator() << ',' << eff.denominator() << ',';
      if (c.z) os << fixed(*c.z, 6);
    } else {
      os << ",,";
    }
    os << '\n';
  }
  return os.str();
}

Json make_envelope(const std::string& command, Json parameters, Json results, Json meta) {
  meta["tool"] = kToolName;
  meta["version"] = kToolVersion;
  return Json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"parameters", std::move(parameters)},
              {"results", std::move(results)},
              {"meta", std::move(meta)}};
}

std::string render(const Json& envelope) { return envelope.dump(2) + "\n"; }

}  // namespace nearprim

#include "hcn/report.hpp"

#include <iomanip>
#include <string>

#include <json.hpp>

namespace hcn {

namespace {

nlohmann::ordered_json twelfth_json(Twelfth v) {
  nlohmann::ordered_json j;
  j["num"] = v.twelfths();
  j["den"] = 12;
  return j;
}

}  // namespace

Tally tally(std::span<const IdentityReport> records) {
  Tally t;
  for (const auto& r : records) (r.pass ? t.passes : t.failures) += 1;
  return t;
}

void emit_csv(std::span<const IdentityReport> records, std::ostream& out) {
  out << "p,identity,lhs_twelfths,rhs_twelfths,pass\n";
  for (const auto& r : records) {
    out << r.prime << ',' << to_string(r.identity) << ',' << r.lhs.twelfths() << ','
        << r.rhs.twelfths() << ',' << (r.pass ? "true" : "false") << '\n';
  }
}

void emit_json(std::span<const IdentityReport> records, std::ostream& out) {
  out << "[\n";
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["p"] = r.prime;
    j["identity"] = std::string(to_string(r.identity));
    j["lhs"] = twelfth_json(r.lhs);
    j["rhs"] = twelfth_json(r.rhs);
    j["pass"] = r.pass;
    out << j.dump() << ",\n";
  }
  const Tally t = tally(records);
  nlohmann::ordered_json summary;
  summary["records"] = records.size();
  summary["passes"] = t.passes;
  summary["failures"] = t.failures;
  out << nlohmann::ordered_json{{"summary", summary}}.dump() << "\n]\n";
}

void emit_table(std::span<const IdentityReport> records, std::ostream& out) {
  out << std::left << std::setw(10) << "p" << std::setw(12) << "identity" << std::setw(14) << "lhs"
      << std::setw(14) << "rhs" << "pass\n";
  for (const auto& r : records) {
    out << std::setw(10) << r.prime << std::setw(12) << to_string(r.identity) << std::setw(14)
        << r.lhs.to_string() << std::setw(14) << r.rhs.to_string() << (r.pass ? "yes" : "NO") << '\n';
  }
  out << std::right;
}

void emit_summary(const Tally& t, std::ostream& out) {
  out << "summary: " << t.passes << " passed, " << t.failures << " failed\n";
}

}  // namespace hcn

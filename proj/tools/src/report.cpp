#include "hyperzeta/cli/report.hpp"

#include <algorithm>
#include <cstdio>

namespace hyperzeta::cli {

void Check::record(bool ok, const std::function<std::string()>& describe) {
  ++cases;
  if (ok) return;
  ++failures;
  if (offending.size() < kMaxOffending) offending.push_back(describe());
}

void Check::record_error(const std::string& what) {
  ++cases;
  ++failures;
  if (offending.size() < kMaxOffending) offending.push_back("exception: " + what);
}

bool Report::passed() const { return failed_checks() == 0; }

std::size_t Report::failed_checks() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed(); }));
}

void Report::sort() {
  std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) {
    if (a.suite != b.suite) return a.suite < b.suite;
    if (a.id != b.id) return a.id < b.id;
    return a.ell.value_or(0) < b.ell.value_or(0);
  });
}

json Report::to_json(bool include_timing) const {
  json cs = json::array();
  std::size_t cases = 0;
  for (const auto& c : checks) {
    cases += c.cases;
    json j{{"suite", c.suite}, {"id", c.id}};
    j["ell"] = c.ell ? json(*c.ell) : json(nullptr);
    j["status"] = c.passed() ? "pass" : "fail";
    j["cases"] = c.cases;
    j["failures"] = c.failures;
    if (!c.info.empty()) j["info"] = c.info;
    if (!c.offending.empty()) j["offending"] = c.offending;
    cs.push_back(std::move(j));
  }
  json out{{"command", "verify"}, {"seed", seed}, {"ells", ells}, {"suites", suites}};
  out["status"] = passed() ? "pass" : "fail";
  out["checks_total"] = checks.size();
  out["checks_failed"] = failed_checks();
  out["cases_total"] = cases;
  out["checks"] = std::move(cs);
  if (include_timing) {
    json t = json::object();
    for (const auto& s : timings) t[s.suite] = s.seconds;
    out["elapsed_seconds"] = t;
  }
  return out;
}

std::string Report::to_text(bool include_timing) const {
  std::string out;
  for (const auto& c : checks) {
    out += (c.passed() ? "PASS " : "FAIL ") + c.suite + "/" + c.id;
    if (c.ell) out += " l=" + std::to_string(*c.ell);
    out += " (" + std::to_string(c.cases) + " cases";
    if (c.failures) out += ", " + std::to_string(c.failures) + " failed";
    out += ")\n";
    for (const auto& o : c.offending) out += "    " + o + "\n";
  }
  if (include_timing)
    for (const auto& s : timings) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.3f", s.seconds);
      out += "time " + s.suite + " " + buf + "s\n";
    }
  out += std::string(passed() ? "all " : "") + std::to_string(checks.size() - failed_checks()) + "/" +
         std::to_string(checks.size()) + " checks passed\n";
  return out;
}

}  // namespace hyperzeta::cli

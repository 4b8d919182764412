#pragma once

#include "hyperzeta/cli/json_io.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hyperzeta::cli {

/// One named property checked over many cases.
struct Check {
  std::string suite;
  std::string id;
  std::optional<int> ell;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> offending;  // first few failing cases
  json info = json::object();          // extra counters

  static constexpr std::size_t kMaxOffending = 5;

  /// Counts one case; on failure stores describe() while under the limit.
  void record(bool ok, const std::function<std::string()>& describe);
  /// Records an exception escaping a case as a failure.
  void record_error(const std::string& what);
  bool passed() const { return failures == 0 && cases > 0; }
};

struct SuiteTiming {
  std::string suite;
  double seconds = 0;
};

struct Report {
  std::uint64_t seed = 0;
  std::vector<int> ells;
  std::vector<std::string> suites;
  std::vector<Check> checks;
  std::vector<SuiteTiming> timings;

  bool passed() const;
  std::size_t failed_checks() const;
  /// Orders checks by suite, then id, then l.
  void sort();
  json to_json(bool include_timing) const;
  std::string to_text(bool include_timing) const;
};

}  // namespace hyperzeta::cli

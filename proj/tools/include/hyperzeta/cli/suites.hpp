#pragma once

#include "hyperzeta/cli/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hyperzeta::cli {

/// Names accepted by --suite, in run order; "all" expands to these.
const std::vector<std::string>& suite_names();

/// Runs the named suites for every l in ells and returns the sorted report.
/// Each (suite, l) pair draws from its own generator seeded from seed, so
/// results do not depend on which other suites run.
Report run_suites(const std::vector<std::string>& suites, const std::vector<int>& ells,
                  std::uint64_t seed);

/// Individual suites; each appends its checks to report. Checks that do not
/// depend on l run once with no l attached.
void suite_qcomb(Report& report, const std::vector<int>& ells, std::uint64_t seed);
void suite_weights(Report& report, const std::vector<int>& ells, std::uint64_t seed);
void suite_uzero(Report& report, const std::vector<int>& ells, std::uint64_t seed);
void suite_pbw(Report& report, const std::vector<int>& ells, std::uint64_t seed);
void suite_repn(Report& report, const std::vector<int>& ells, std::uint64_t seed);

}  // namespace hyperzeta::cli

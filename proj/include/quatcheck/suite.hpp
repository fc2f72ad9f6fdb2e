#pragma once

// Run configuration, the check registry behind the CLI, convergence-study
// orchestration and suite execution with machine-readable summaries.
//
// Exit-code contract: 0 pass, 1 tolerance failure, 2 usage/config error,
// 3 numerical evaluation error.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quatcheck/convergence.hpp"
#include "quatcheck/identities.hpp"
#include "quatcheck/report.hpp"

namespace quatcheck {

enum ExitCode : int {
    kExitPass = 0,
    kExitToleranceFailure = 1,
    kExitUsageError = 2,
    kExitNumericError = 3,
};

struct RunConfig {
    std::string check;
    std::string domain;         // empty -> per-check default
    std::string field;          // for gauss: four specs joined with ';'
    std::string rhs_field;
    std::string test_function;  // bump:w,x,y,z,radius
    std::vector<double> eps_list;
    std::optional<Quaternion> point;
    int resolution = 0;  // 0 -> default RuleSet (volume 24, boundary 32, eps 24, radial 32)
    double fd_step = 1e-4;
    int richardson = 2;
    double potential_fd_step = 0.05;
    std::optional<double> tol;
    std::uint64_t seed = 12345;
    std::optional<int> samples;
    std::optional<int> probes;
    std::string expected;  // weak check: "byparts" (default) or "zero"
    std::vector<double> resolutions;  // convergence studies
    std::string out;
    std::string format = "json";
};

// Reads "check" first, then overrides that check's default instance with any
// keys present.
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& cfg);

// The canonical instance of each named check (tolerances and geometry pinned
// to the shipped verification set). Throws std::invalid_argument for unknown
// names.
RunConfig default_config(const std::string& check_name);

// Fields still at their sentinel value fall back to the check's defaults.
RunConfig merge_with_defaults(const RunConfig& overrides);

const std::vector<std::string>& registered_checks();

RuleSet rules_for(const RunConfig& cfg);

struct CheckOutcome {
    std::vector<CheckReport> reports;
    bool pass = false;
};

nlohmann::json outcome_to_json(const CheckOutcome& outcome);
std::string outcome_to_csv(const CheckOutcome& outcome);

CheckOutcome run_check(const RunConfig& cfg);

// One run of the named check per resolution; >= 3 resolutions required. The
// sphere limit converges in eps (resolution column 1/eps), everything else
// in rule size.
ConvergenceTable run_convergence(const RunConfig& cfg);

struct SuiteSummary {
    std::vector<CheckReport> reports;  // sorted by check name
    int total = 0;
    int passed = 0;
    bool pass = false;
};

nlohmann::json summary_to_json(const SuiteSummary& summary);

// Config file: {"checks": [ <RunConfig>, ... ]}. Parse errors carry line
// numbers. Aggregation is order-independent (sorted by check name).
SuiteSummary run_suite_file(const std::string& path);

}  // namespace quatcheck

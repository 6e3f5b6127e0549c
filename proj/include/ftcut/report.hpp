// Machine-readable run reports for the command-line front end.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "ftcut/instances.hpp"

namespace ftcut::cli {

struct RunConfig {
    std::string command; // exact | aftcut-local | aftcut-k | oftcut | randomcut | reduce | gen
    std::string input_path;
    std::optional<FamilySpec> family;
    std::string family_name;

    std::string mode = "adaptive"; // for `exact`: maxcut | adaptive | oblivious
    int k = 1;
    std::string eps = "0.1";   // parsed as an exact rational
    double eps_y = 1e-4;
    std::string oracle = "exact"; // exact | stable-half
    std::uint64_t seed = 1;
    std::int64_t trials = 10000;
    bool exact_expectation = false; // randomcut --exact
    std::string format = "json";    // json | csv
    std::string output_path;        // gen/reduce target file
    int enum_cap = 26;
    int lp_cap = 14;
};

struct RunOutcome {
    nlohmann::json report;
    std::string rendered; // what the CLI prints
    int exit_code = 0;    // 0 ok, 2 validation error, 3 numerical failure
};

RunOutcome run(const RunConfig& config);

} // namespace ftcut::cli

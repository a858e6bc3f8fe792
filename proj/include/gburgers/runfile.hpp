#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gburgers/errors.hpp"
#include "gburgers/problems.hpp"

namespace gburgers {

/// Parsed flat key = value run file. Which keys are required depends on the
/// subcommand; unknown keys are rejected at parse time.
struct RunFile {
    std::optional<int> problem;
    std::optional<double> nu;
    std::optional<double> c0;
    std::optional<double> sigma;
    std::optional<int> J;
    std::optional<double> dt;
    std::optional<double> T;
    std::vector<double> snapshots;  // empty means "final time only"
    std::vector<int> J_list;        // converge subcommand
    double oracle_accuracy = 1e-6;
    std::string out;                // optional output path
};

RunFile parse_runfile(const std::string& path);

/// Pull a required key out of the parsed file, naming it on failure.
template <typename T>
T require_key(const std::optional<T>& value, const std::string& key) {
    if (!value) throw ConfigError("run file is missing required key '" + key + "'");
    return *value;
}

/// Instantiate the problem a run file describes.
ProblemSpec problem_from_runfile(const RunFile& rf);

}  // namespace gburgers

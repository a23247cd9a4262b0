#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "amoeba/json_io.hpp"

namespace amoeba::cli {

struct JobSpec {
    std::string command;
    std::optional<std::string> f;
    std::optional<std::size_t> rank;
    std::optional<std::string> field;
    std::string place = "generic";
    std::optional<std::string> halfspace;
    std::vector<std::string> constraints; // "poly" or "poly @ row;row;..."
    std::optional<std::string> image;
    bool codim_gt_one = false;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    int trials = 200;
    int points = 20;
    std::optional<std::string> a; // product-formula argument
    std::optional<std::string> range; // plot half-width, rational
    int grid = 41;                    // plot heat-scan resolution
    bool serial = false;
    std::optional<std::string> output;
};

/// Throws amoeba::Error (InvalidArgument) on a missing or inapplicable option.
void validate(const JobSpec &job);

/// Keys mirror the long flag names with dashes replaced by underscores.
JobSpec job_from_json(const Json &j);

/// "dir:1,1,0 bnd:0,0,1;1,0,0"
Halfspace parse_halfspace(const std::string &text);

/// Builds a JobSpec from argv. Returns nullopt after printing help. Throws
/// amoeba::Error (InvalidArgument) on bad usage.
std::optional<JobSpec> parse_args(int argc, const char *const *argv, std::ostream &out);

/// Runs the job. JSON (or SVG for `plot`) goes to `output` or `out`; errors
/// go to `err` as {"code", "message"}. Exit codes: 0 ok, 2 input error,
/// 3 invariant failure or internal error.
int run(const JobSpec &job, std::ostream &out, std::ostream &err);

/// parse_args + run with the same error reporting.
int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace amoeba::cli

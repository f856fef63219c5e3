#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "tolerances.hpp"
#include "types.hpp"

namespace statdisc {

/// One scan dimension: sweeps the re/im part of a component of a or V over
/// a uniform grid; axes combine row-major (first axis outermost).
struct GridAxis {
    std::string param;  // "a" or "V"
    int index = 1;      // 1-based component index
    bool imag = false;
    double lo = 0.0;
    double hi = 0.0;
    int count = 0;
};

struct RunConfig {
    std::string command;
    std::string input_path;                 // empty when quadric is inline
    std::optional<json> quadric_inline;
    std::optional<cvec> a;
    std::optional<rvec> b0;
    std::optional<cvec> V;
    int samples = 0;                        // 0 selects the command default
    std::uint64_t seed = 12345;
    int trials = 64;
    double step = 0.0;                      // 0 selects the default FD step
    double radius = 0.0;
    int probes = 0;
    bool dump = false;
    bool fourier = false;
    std::vector<GridAxis> grid;
    std::map<std::string, double> tolerance_overrides;
};

struct RunResult {
    json report;
    int exit_code = 0;  // 0 pass/completed, 1 mathematical fail, 2 input error
};

/// Parses the JSON form of a RunConfig (the C API entry point's schema).
RunConfig parse_config(const json& doc);

/// Dispatches a command; never throws — failures are encoded in the report
/// and the exit code.
RunResult run(const RunConfig& config);

/// Convenience: parse + run, reporting config errors as exit-2 documents.
RunResult run_json(const std::string& config_text);

} // namespace statdisc

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ihg/lauricella.hpp"
#include "ihg/system.hpp"
#include "ihg_cli/json_io.hpp"

namespace ihg::cli {

struct Defaults {
    static constexpr int K = 20;
    static constexpr double tol = 1e-9;
    static constexpr std::uint64_t seed = 0;
    static constexpr int samples = 20;
};

enum class OutputFormat { Json, Csv };

/// Parameter grid for `sweep`: the cartesian product of every list given. Entries not
/// listed keep the base parameters.
struct SweepGrid {
    std::vector<std::vector<Complex>> alpha;
    std::vector<Complex> gamma;
    std::vector<Complex> a;
    std::vector<Complex> b;
};

struct JobConfig {
    std::string command;
    SystemParams params;
    bool haveParams = false;
    std::vector<Point> points;
    int K = Defaults::K;
    double tol = Defaults::tol;
    std::uint64_t seed = Defaults::seed;
    int samples = Defaults::samples;
    std::string output;
    OutputFormat format = OutputFormat::Json;

    // command specific
    std::optional<FDParams> fd;
    std::vector<Complex> fdZ;
    int ell = 0;                     // 0-based
    std::optional<std::vector<int>> sigma; // 0-based
    std::string solution = "F";      // verify-system: F, Psi or Phi
    std::string relation;            // verify-contiguity; empty = all
    std::optional<int> k;            // 0-based; empty = every k
    std::string representation = "both";
    std::optional<int> searchBound;
    int weylN = 0;
    SweepGrid grid;
};

/// Reads the JSON config schema:
/// {"n", "alpha", "gamma", "a", "b", "x", "points", "points_csv", "K", "tol", "seed",
///  "samples", "fd": {"a", "b", "c", "z"}, "grid": {"alpha", "gamma", "a", "b"}}.
/// Complex values are [re, im] or plain numbers.
void applyConfigJson(JobConfig &cfg, const Json &j);

/// Checks the fields the command needs; throws InputError.
void validate(const JobConfig &cfg);

} // namespace ihg::cli

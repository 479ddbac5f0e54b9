#pragma once

#include "mdim/graph.hpp"
#include "mdim/solver.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mdim {

inline constexpr const char* kToolVersion = "mdim 0.1.0";
inline constexpr int kReportSchema = 1;

// Bad suite name or parameter outside the supported range.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CheckRecord {
    std::string id;
    std::string anchor; // the claim being checked, or "derived"
    std::string expected;
    std::string observed;
    bool pass = false;
    std::optional<double> ms; // only filled when timing is requested
};

struct Report {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;
    std::uint64_t seed = 0;
    std::string version = kToolVersion;
    std::vector<CheckRecord> checks;

    std::size_t passed() const;
    std::size_t failed() const;
    bool ok() const { return failed() == 0; }
};

// Zero means "suite default" for the size knobs.
struct SuiteOptions {
    std::uint64_t seed = 1;
    std::size_t t_max = 4;
    bool allow_t5 = false;
    std::size_t t = 6;
    std::size_t k = 2;
    std::size_t n_max = 0;
    std::size_t samples = 0;
    std::size_t subsets = 100;
    Budget budget;
    bool timing = false;
};

std::vector<std::string> suite_names();

// Throws UsageError for unknown suites or unsupported parameters.
Report run_suite(const std::string& name, const SuiteOptions& options);

nlohmann::ordered_json report_json(const Report& report);
std::string render_table(const Report& report);

// Samplers. Trees: vertex i > 0 attaches to a uniform j < i. Connected
// graphs: each edge present with probability p, disconnected draws rejected.
Graph random_tree(std::size_t n, std::mt19937_64& rng);
Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng);

// One representative per isomorphism class of trees on n vertices.
std::vector<Graph> all_trees(std::size_t n);

// Integer partitions of n with at least two parts, parts in non-increasing order.
std::vector<std::vector<std::size_t>> partitions_with_two_or_more_parts(std::size_t n);

// dim_2(M_{3,2}), established by exhaustive enumeration and kept as a regression value.
inline constexpr std::size_t kFtdimM32 = 6;

} // namespace mdim

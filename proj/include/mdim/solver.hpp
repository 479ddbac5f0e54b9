#pragma once

#include "mdim/graph.hpp"
#include "mdim/metric.hpp"
#include "mdim/vertex_set.hpp"

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mdim {

enum class SolveStatus { optimal, feasible_upper_bound, infeasible };

std::string to_string(SolveStatus s);

struct Budget {
    std::uint64_t max_nodes = 100'000'000;
    std::chrono::duration<double> max_time{600.0};

    // Defaults, overridden by MDIM_BUDGET_NODES / MDIM_BUDGET_SECS when set.
    static Budget from_env();
};

struct SolveResult {
    VertexSet set;
    std::size_t size = 0;
    SolveStatus status = SolveStatus::infeasible;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> elapsed{0.0};
    std::size_t lower_bound_at_exit = 0;
};

// Lower-bound witness: vertex-disjoint pairs, each of which must contribute
// `demand` of its own endpoints to any k-resolving set.
struct BoundCertificate {
    struct Entry {
        Edge pair;
        std::size_t outside = 0; // |D(x,y) \ {x,y}|
        std::size_t demand = 0;  // max(0, k - outside)
    };
    std::size_t k = 0;
    std::vector<Entry> pairs;
    std::size_t bound = 0;
};

struct Preprocessed {
    VertexSet forced;
    bool feasible = false;
};

// Vertices in D(x,y) for every pair with |D(x,y)| = k must belong to every
// k-resolving set.
Preprocessed preprocess(const PairDistinguishers& pd, std::size_t k);

// Forced vertices, then repeatedly the vertex covering the most residual
// demand (ties to the lowest id).
SolveResult solve_greedy(const PairDistinguishers& pd, std::size_t k);

// Branch-and-bound over include/exclude decisions. Completes with
// status=optimal, or returns the incumbent and proven bound when the budget
// runs out.
SolveResult solve_exact(const PairDistinguishers& pd, std::size_t k, const Budget& budget = {});

BoundCertificate lower_bound_pair_slack(const PairDistinguishers& pd, std::size_t k);

// Recomputes every field of a certificate from the table. Returns an empty
// string when the certificate is valid, otherwise the first problem found.
std::string verify_certificate(const PairDistinguishers& pd, const BoundCertificate& cert);

// Subsets in increasing size, lexicographic within a size, checked with the
// definitional k-resolving test. Exponential; small graphs only.
SolveResult brute_force_min(const Graph& g, std::size_t k);

} // namespace mdim

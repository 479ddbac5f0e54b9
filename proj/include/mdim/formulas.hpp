#pragma once

#include "mdim/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

namespace mdim {

using BigInt = boost::multiprecision::cpp_int;

// Leaf/branch counts of a tree. b counts branching vertices (degree >= 3)
// with at least one ray (a path of degree-2 vertices ending in a leaf); c
// counts those with exactly one ray.
struct TreeParams {
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t c = 0;
    bool is_path = false;
};

struct TreeInvariants {
    TreeParams params;
    std::size_t dim = 0;
    std::size_t ftdim = 0;
};

struct ClosedForm {
    std::size_t dim = 0;
    std::size_t ftdim = 0;
};

struct BoundsResult {
    std::size_t dim_value = 0;
    std::size_t t = 0;
    BigInt ft_upper; // dim (1 + 2*5^(dim-1))
    BigInt k_upper;  // same closed form applied to dim_k
    BigInt jt_low;   // t + 2^(t-1)
    BigInt jt_high;  // t (1 + 2*5^(t-1))
};

// Throws std::domain_error unless g is a tree on at least two vertices.
TreeInvariants tree_invariants(const Graph& g);

// Throws std::invalid_argument for fewer than two parts or an empty part.
ClosedForm multipartite_invariants(const std::vector<std::size_t>& parts);

// dim_k(P_n) for n >= k + 2; throws std::out_of_range otherwise.
std::size_t path_dim_k(std::size_t n, std::size_t k);

// m (1 + 2*5^(m-1)); the expansion bound for a resolving set of size m.
BigInt expansion_bound(std::size_t m);

// 1 + d (2d+1)^(m-1); ball-size bound around a member of a resolving set of size m.
BigInt ball_bound(std::size_t d, std::size_t m);

BoundsResult theoretical_bounds(std::size_t dim_value, std::size_t t);

} // namespace mdim

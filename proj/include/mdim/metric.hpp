#pragma once

#include "mdim/graph.hpp"
#include "mdim/vertex_set.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace mdim {

// For every unordered pair {x,y}, x < y, the set D(x,y) of vertices s with
// d(s,x) != d(s,y). Pairs are stored in lexicographic order.
class PairDistinguishers {
public:
    PairDistinguishers() = default;
    PairDistinguishers(std::size_t n, std::vector<Edge> pairs, std::vector<VertexSet> sets)
        : n_(n), pairs_(std::move(pairs)), sets_(std::move(sets)) {}

    std::size_t order() const { return n_; }
    std::size_t pair_count() const { return pairs_.size(); }
    const Edge& pair(std::size_t p) const { return pairs_[p]; }
    const std::vector<Edge>& pairs() const { return pairs_; }
    const VertexSet& distinguishers(std::size_t p) const { return sets_[p]; }

    // Lexicographic index of {x,y}; x != y in either order.
    std::size_t index_of(Vertex x, Vertex y) const {
        if (x > y) std::swap(x, y);
        return std::size_t{x} * n_ - std::size_t{x} * (x + 1) / 2 + (y - x - 1);
    }
    const VertexSet& distinguishers(Vertex x, Vertex y) const { return sets_[index_of(x, y)]; }

private:
    std::size_t n_ = 0;
    std::vector<Edge> pairs_;
    std::vector<VertexSet> sets_;
};

// Requires n >= 2.
PairDistinguishers distinguisher_table(const DistanceMatrix& dm);

// Largest k admitting a k-resolving set: min over pairs of |D(x,y)|.
std::size_t kappa(const PairDistinguishers& pd);

// Multicover form: every pair keeps at least k distinguishers inside S.
bool is_k_resolving(const PairDistinguishers& pd, const VertexSet& s, std::size_t k);

// Per-pair count |S ∩ D(x,y)|, minimized over pairs. Returns 0 for n < 2.
std::size_t min_coverage(const PairDistinguishers& pd, const VertexSet& s);

// Plain resolvability from distances: the distance vectors to S are pairwise distinct.
bool is_resolving(const DistanceMatrix& dm, const std::vector<std::size_t>& s);

// Definitional form: S minus any (k-1)-subset is still resolving. When
// |S| < k-1 the whole of S is removed, so the answer is false for n >= 2.
// Cost is C(|S|, k-1) resolvability checks; meant for small S.
bool is_k_resolving_definitional(const Graph& g, const VertexSet& s, std::size_t k);
bool is_k_resolving_definitional(const DistanceMatrix& dm, const VertexSet& s, std::size_t k);

} // namespace mdim

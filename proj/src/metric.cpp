#include "mdim/metric.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace mdim {

PairDistinguishers distinguisher_table(const DistanceMatrix& dm) {
    const std::size_t n = dm.order();
    if (n < 2) throw std::invalid_argument("distinguisher table needs at least two vertices");
    std::vector<Edge> pairs;
    std::vector<VertexSet> sets;
    pairs.reserve(n * (n - 1) / 2);
    sets.reserve(n * (n - 1) / 2);
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
            VertexSet d(n);
            for (std::size_t s = 0; s < n; ++s) {
                const auto* row = dm.row(s);
                if (row[x] != row[y]) d.insert(s);
            }
            pairs.emplace_back(x, y);
            sets.push_back(std::move(d));
        }
    }
    return PairDistinguishers(n, std::move(pairs), std::move(sets));
}

std::size_t kappa(const PairDistinguishers& pd) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t p = 0; p < pd.pair_count(); ++p) best = std::min(best, pd.distinguishers(p).size());
    return best;
}

std::size_t min_coverage(const PairDistinguishers& pd, const VertexSet& s) {
    if (pd.pair_count() == 0) return 0;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t p = 0; p < pd.pair_count(); ++p)
        best = std::min(best, pd.distinguishers(p).intersection_size(s));
    return best;
}

bool is_k_resolving(const PairDistinguishers& pd, const VertexSet& s, std::size_t k) {
    for (std::size_t p = 0; p < pd.pair_count(); ++p)
        if (pd.distinguishers(p).intersection_size(s) < k) return false;
    return true;
}

bool is_resolving(const DistanceMatrix& dm, const std::vector<std::size_t>& s) {
    const std::size_t n = dm.order();
    std::vector<std::vector<DistanceMatrix::Distance>> codes(n);
    for (std::size_t v = 0; v < n; ++v) {
        codes[v].reserve(s.size());
        for (auto w : s) codes[v].push_back(dm(w, v));
    }
    std::sort(codes.begin(), codes.end());
    return std::adjacent_find(codes.begin(), codes.end()) == codes.end();
}

bool is_k_resolving_definitional(const DistanceMatrix& dm, const VertexSet& s, std::size_t k) {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    const auto members = s.members();
    const std::size_t removed = std::min(k - 1, members.size());

    // Enumerate removal masks as increasing index combinations.
    std::vector<std::size_t> pick(removed);
    for (std::size_t i = 0; i < removed; ++i) pick[i] = i;
    std::vector<std::size_t> kept;
    while (true) {
        kept.clear();
        std::size_t j = 0;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (j < removed && pick[j] == i) {
                ++j;
                continue;
            }
            kept.push_back(members[i]);
        }
        if (!is_resolving(dm, kept)) return false;

        std::size_t i = removed;
        while (i > 0 && pick[i - 1] == members.size() - removed + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t r = i; r < removed; ++r) pick[r] = pick[r - 1] + 1;
    }
    return true;
}

bool is_k_resolving_definitional(const Graph& g, const VertexSet& s, std::size_t k) {
    return is_k_resolving_definitional(all_pairs_distances(g), s, k);
}

} // namespace mdim

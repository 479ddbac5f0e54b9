#pragma once

// Reference implementations used only by the tests. Deliberately naive and
// independent of the library: Floyd-Warshall distances, distinguisher sets as
// plain vectors, and subset enumeration over bitmasks with the literal
// "remove any k-1 vertices" definition.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Dist = std::vector<std::vector<int>>;
constexpr int kInf = 1 << 20;

inline Dist floyd_warshall(std::size_t n, const std::vector<std::pair<unsigned, unsigned>>& edges) {
    Dist d(n, std::vector<int>(n, kInf));
    for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
    for (auto [u, v] : edges) d[u][v] = d[v][u] = 1;
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][m] + d[m][j] < d[i][j]) d[i][j] = d[i][m] + d[m][j];
    return d;
}

inline std::vector<unsigned> distinguishers(const Dist& d, unsigned x, unsigned y) {
    std::vector<unsigned> out;
    for (unsigned s = 0; s < d.size(); ++s)
        if (d[s][x] != d[s][y]) out.push_back(s);
    return out;
}

inline std::size_t kappa(const Dist& d) {
    std::size_t best = d.size();
    for (unsigned x = 0; x < d.size(); ++x)
        for (unsigned y = x + 1; y < d.size(); ++y) best = std::min(best, distinguishers(d, x, y).size());
    return best;
}

inline std::vector<unsigned> members(std::uint64_t mask) {
    std::vector<unsigned> out;
    for (unsigned v = 0; v < 64; ++v)
        if (mask >> v & 1) out.push_back(v);
    return out;
}

// Distance vectors to the members of `mask` are pairwise distinct.
inline bool resolves(const Dist& d, std::uint64_t mask) {
    const auto s = members(mask);
    std::set<std::vector<int>> seen;
    for (std::size_t v = 0; v < d.size(); ++v) {
        std::vector<int> vec;
        for (unsigned m : s) vec.push_back(d[m][v]);
        if (!seen.insert(vec).second) return false;
    }
    return true;
}

// Every way of deleting min(k-1, |S|) members leaves a resolving set.
inline bool k_resolving(const Dist& d, std::uint64_t mask, std::size_t k) {
    const auto s = members(mask);
    const std::size_t drop = std::min(k - 1, s.size());
    std::vector<bool> pick(s.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(drop), true);
    do {
        std::uint64_t rest = mask;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (pick[i]) rest &= ~(std::uint64_t{1} << s[i]);
        if (!resolves(d, rest)) return false;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return true;
}

// Smallest k-resolving set size, or -1 when none exists. n <= 20 or so.
inline int min_k_resolving(const Dist& d, std::size_t k) {
    const std::size_t n = d.size();
    if (!k_resolving(d, (std::uint64_t{1} << n) - 1, k)) return -1;
    for (std::size_t size = 0; size <= n; ++size) {
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
        do {
            std::uint64_t mask = 0;
            for (std::size_t v = 0; v < n; ++v)
                if (pick[v]) mask |= std::uint64_t{1} << v;
            if (k_resolving(d, mask, k)) return static_cast<int>(size);
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return -1;
}

// Every k-resolving set of the minimum size, as bitmasks.
inline std::vector<std::uint64_t> all_minimum(const Dist& d, std::size_t k) {
    const int best = min_k_resolving(d, k);
    std::vector<std::uint64_t> out;
    if (best < 0) return out;
    const std::size_t n = d.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
        if (std::popcount(mask) == best && k_resolving(d, mask, k)) out.push_back(mask);
    return out;
}

} // namespace oracle

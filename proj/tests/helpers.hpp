#pragma once

#include "mdim/graph.hpp"
#include "mdim/vertex_set.hpp"
#include "oracle.hpp"

#include <cstdint>
#include <vector>

namespace testing_support {

inline mdim::Graph path(std::size_t n) {
    std::vector<mdim::Edge> e;
    for (mdim::Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return mdim::Graph(n, e);
}

inline mdim::Graph cycle(std::size_t n) {
    std::vector<mdim::Edge> e;
    for (mdim::Vertex v = 0; v < n; ++v) e.emplace_back(v, static_cast<mdim::Vertex>((v + 1) % n));
    return mdim::Graph(n, e);
}

inline mdim::Graph complete(std::size_t n) {
    std::vector<mdim::Edge> e;
    for (mdim::Vertex u = 0; u < n; ++u)
        for (mdim::Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return mdim::Graph(n, e);
}

inline mdim::Graph star(std::size_t leaves) {
    std::vector<mdim::Edge> e;
    for (mdim::Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return mdim::Graph(leaves + 1, e);
}

inline oracle::Dist oracle_distances(const mdim::Graph& g) {
    std::vector<std::pair<unsigned, unsigned>> e;
    for (auto [u, v] : g.edges()) e.emplace_back(u, v);
    return oracle::floyd_warshall(g.order(), e);
}

inline std::uint64_t mask_of(const mdim::VertexSet& s) {
    std::uint64_t m = 0;
    for (auto v : s.members()) m |= std::uint64_t{1} << v;
    return m;
}

inline mdim::VertexSet set_of(std::size_t n, std::uint64_t mask) {
    mdim::VertexSet s(n);
    for (std::size_t v = 0; v < n; ++v)
        if (mask >> v & 1) s.insert(v);
    return s;
}

} // namespace testing_support

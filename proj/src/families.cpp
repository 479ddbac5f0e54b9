#include "mdim/families.hpp"

#include <bit>
#include <stdexcept>

namespace mdim {

namespace {

constexpr std::size_t kMaxCodeLength = 14;

void check_code_length(std::size_t t) {
    if (t < 1) throw std::invalid_argument("t must be at least 1");
    if (t > kMaxCodeLength) throw std::invalid_argument("t above " + std::to_string(kMaxCodeLength) + " is not supported");
}

// Clique on the codes; returned edges start the edge list.
std::vector<Edge> code_clique(std::size_t t, std::vector<std::string>& labels) {
    const std::size_t codes = std::size_t{1} << t;
    std::vector<Edge> edges;
    edges.reserve(codes * (codes - 1) / 2);
    for (std::size_t a = 0; a < codes; ++a) {
        labels.push_back(code_label(t, a));
        for (std::size_t b = a + 1; b < codes; ++b) edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    return edges;
}

} // namespace

std::size_t code_bit(std::size_t t, std::size_t coordinate) { return std::size_t{1} << (t - coordinate); }

std::string code_label(std::size_t t, std::size_t code) {
    std::string s(t, '0');
    for (std::size_t i = 1; i <= t; ++i)
        if (code & code_bit(t, i)) s[i - 1] = '1';
    return s;
}

LabeledGraph gen_mt(std::size_t t) {
    check_code_length(t);
    const std::size_t codes = std::size_t{1} << t;
    std::vector<std::string> labels;
    auto edges = code_clique(t, labels);
    for (std::size_t i = 1; i <= t; ++i) {
        const auto apex = static_cast<Vertex>(codes + i - 1);
        labels.push_back("v_" + std::to_string(i));
        for (std::size_t c = 0; c < codes; ++c)
            if (c & code_bit(t, i)) edges.emplace_back(static_cast<Vertex>(c), apex);
    }
    return {Graph(codes + t, edges, std::move(labels)), "mt", {{"t", std::to_string(t)}}};
}

LabeledGraph gen_mtk(std::size_t t, std::size_t k) {
    check_code_length(t);
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (k > 64) throw std::invalid_argument("k above 64 is not supported");
    const std::size_t codes = std::size_t{1} << t;
    auto id = [&](std::size_t i, std::size_t j) { return static_cast<Vertex>(codes + (i - 1) * k + (j - 1)); };

    std::vector<std::string> labels;
    auto edges = code_clique(t, labels);
    for (std::size_t i = 1; i <= t; ++i)
        for (std::size_t j = 1; j <= k; ++j) labels.push_back("v_" + std::to_string(i) + "," + std::to_string(j));

    // K_t □ K_k: same j with different i, or same i with different j
    for (std::size_t i = 1; i <= t; ++i) {
        for (std::size_t j = 1; j <= k; ++j) {
            for (std::size_t j2 = j + 1; j2 <= k; ++j2) edges.emplace_back(id(i, j), id(i, j2));
            for (std::size_t i2 = i + 1; i2 <= t; ++i2) edges.emplace_back(id(i, j), id(i2, j));
        }
    }
    for (std::size_t i = 1; i <= t; ++i)
        for (std::size_t j = 1; j <= k; ++j)
            for (std::size_t c = 0; c < codes; ++c)
                if (c & code_bit(t, i)) edges.emplace_back(static_cast<Vertex>(c), id(i, j));

    return {Graph(codes + k * t, edges, std::move(labels)),
            "mtk",
            {{"t", std::to_string(t)}, {"k", std::to_string(k)}}};
}

LabeledGraph gen_complete_multipartite(const std::vector<std::size_t>& parts) {
    if (parts.size() < 2) throw std::invalid_argument("complete multipartite graph needs at least two parts");
    std::vector<std::size_t> part_of;
    std::vector<std::string> labels;
    std::string spec;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p] < 1) throw std::invalid_argument("every part needs at least one vertex");
        for (std::size_t j = 0; j < parts[p]; ++j) {
            part_of.push_back(p);
            labels.push_back("p" + std::to_string(p) + "_" + std::to_string(j));
        }
        spec += (p ? "," : "") + std::to_string(parts[p]);
    }
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < part_of.size(); ++u)
        for (std::size_t v = u + 1; v < part_of.size(); ++v)
            if (part_of[u] != part_of[v]) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return {Graph(part_of.size(), edges, std::move(labels)), "multipartite", {{"parts", spec}}};
}

LabeledGraph gen_path(std::size_t n) {
    if (n < 2) throw std::invalid_argument("path needs at least two vertices");
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < n; ++v) {
        labels.push_back(std::to_string(v));
        if (v + 1 < n) edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(v + 1));
    }
    return {Graph(n, edges, std::move(labels)), "path", {{"n", std::to_string(n)}}};
}

LabeledGraph gen_spine_tree(const std::vector<std::size_t>& leaf_counts) {
    if (leaf_counts.empty()) throw std::invalid_argument("spine tree needs at least one spine vertex");
    const std::size_t d = leaf_counts.size();
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    std::string spec;
    for (std::size_t i = 0; i < d; ++i) {
        if (leaf_counts[i] < 2) throw std::invalid_argument("every spine vertex needs at least two leaves");
        labels.push_back("s" + std::to_string(i));
        if (i + 1 < d) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
        spec += (i ? "," : "") + std::to_string(leaf_counts[i]);
    }
    std::size_t next = d;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < leaf_counts[i]; ++j) {
            labels.push_back("l" + std::to_string(i) + "_" + std::to_string(j));
            edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(next++));
        }
    }
    return {Graph(next, edges, std::move(labels)), "spine", {{"leaves", spec}}};
}

VertexSet apex_set(std::size_t t, std::size_t copies) {
    check_code_length(t);
    const std::size_t codes = std::size_t{1} << t;
    VertexSet s(codes + t * copies);
    for (std::size_t v = codes; v < codes + t * copies; ++v) s.insert(v);
    return s;
}

VertexSet parity_ft_set(std::size_t t) {
    VertexSet s = apex_set(t);
    for (std::size_t c = 0; c < (std::size_t{1} << t); ++c)
        if (std::popcount(c) % 2 == 0) s.insert(c);
    return s;
}

} // namespace mdim

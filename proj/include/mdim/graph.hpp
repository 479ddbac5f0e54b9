#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mdim {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Thrown by parse_graph; carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class ConnectivityError : public std::runtime_error {
public:
    ConnectivityError(Vertex a, Vertex b)
        : std::runtime_error("graph is disconnected: vertices " + std::to_string(a) + " and " +
                             std::to_string(b) + " lie in different components"),
          a_(a), b_(b) {}
    std::pair<Vertex, Vertex> representatives() const { return {a_, b_}; }

private:
    Vertex a_, b_;
};

// Simple undirected graph on vertices 0..n-1. Adjacency lists are sorted and
// symmetric. Labels are optional metadata (empty vector, or one per vertex).
class Graph {
public:
    // Throws std::invalid_argument on self-loops, duplicate or out-of-range edges.
    Graph(std::size_t n, const std::vector<Edge>& edges, std::vector<std::string> labels = {});

    std::size_t order() const { return adjacency_.size(); }
    std::size_t size() const { return edge_count_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    bool adjacent(Vertex u, Vertex v) const;

    // Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Vertex v) const;
    void set_labels(std::vector<std::string> labels);

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::string> labels_;
    std::size_t edge_count_ = 0;
};

// Hop distances. Entries fit 16 bits; graphs are expected to stay well below
// 65535 vertices.
class DistanceMatrix {
public:
    using Distance = std::uint16_t;

    DistanceMatrix() = default;
    DistanceMatrix(std::size_t n, std::vector<Distance> flat) : n_(n), d_(std::move(flat)) {}

    std::size_t order() const { return n_; }
    Distance operator()(std::size_t u, std::size_t v) const { return d_[u * n_ + v]; }
    const Distance* row(std::size_t u) const { return d_.data() + u * n_; }

private:
    std::size_t n_ = 0;
    std::vector<Distance> d_;
};

// Edge-list format v1. See README for the grammar.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

Graph read_graph_file(const std::string& path);

// One BFS per source. Throws ConnectivityError on disconnected input.
DistanceMatrix all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

} // namespace mdim

#include "mdim/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>

namespace mdim {

Graph::Graph(std::size_t n, const std::vector<Edge>& edges, std::vector<std::string> labels)
    : adjacency_(n) {
    if (n == 0) throw std::invalid_argument("graph must have at least one vertex");
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                        " out of range for n=" + std::to_string(n));
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v) {
        auto& adj = adjacency_[v];
        std::sort(adj.begin(), adj.end());
        auto dup = std::adjacent_find(adj.begin(), adj.end());
        if (dup != adj.end())
            throw std::invalid_argument("duplicate edge " + std::to_string(std::min(v, *dup)) + "-" +
                                        std::to_string(std::max(v, *dup)));
    }
    edge_count_ = edges.size();
    set_labels(std::move(labels));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& adj = adjacency_.at(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adjacency_.size(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

const std::string& Graph::label(Vertex v) const {
    static const std::string empty;
    return labels_.empty() ? empty : labels_.at(v);
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != adjacency_.size())
        throw std::invalid_argument("label count " + std::to_string(labels.size()) +
                                    " does not match vertex count " +
                                    std::to_string(adjacency_.size()));
    labels_ = std::move(labels);
}

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::string_view strip_comment(std::string_view s) {
    const auto hash = s.find('#');
    return hash == std::string_view::npos ? s : s.substr(0, hash);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("expected non-negative integer for ") + what + ", got '" +
                                   std::string(tok) + "'");
    return value;
}

} // namespace

Graph parse_graph(std::string_view text) {
    std::size_t n = 0, m = 0;
    bool have_header = false;
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    std::vector<std::vector<Vertex>> seen;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        const auto raw = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        const auto line = trim(strip_comment(raw));
        if (line.empty()) continue;
        const auto tok = split_ws(line);

        if (!have_header) {
            if (tok.size() != 2) throw ParseError(line_no, "expected header 'n m'");
            n = parse_uint(tok[0], line_no, "n");
            m = parse_uint(tok[1], line_no, "m");
            if (n == 0) throw ParseError(line_no, "vertex count must be at least 1");
            if (n > std::numeric_limits<DistanceMatrix::Distance>::max())
                throw ParseError(line_no, "vertex count too large");
            seen.resize(n);
            have_header = true;
            continue;
        }

        if (tok[0] == "L") {
            if (edges.size() < m)
                throw ParseError(line_no, "label line before all " + std::to_string(m) +
                                              " edges were listed");
            if (tok.size() < 3) throw ParseError(line_no, "expected 'L i text'");
            const auto i = parse_uint(tok[1], line_no, "label vertex");
            if (i >= n) throw ParseError(line_no, "label vertex " + std::to_string(i) + " out of range");
            if (labels.empty()) labels.resize(n);
            // text is everything after the index token
            const auto after = line.substr(static_cast<std::size_t>(tok[1].data() - line.data()) +
                                           tok[1].size());
            labels[i] = std::string(trim(after));
            continue;
        }

        if (edges.size() == m) throw ParseError(line_no, "more edge lines than declared m=" + std::to_string(m));
        if (tok.size() != 2) throw ParseError(line_no, "expected edge 'u v'");
        const auto u = parse_uint(tok[0], line_no, "u");
        const auto v = parse_uint(tok[1], line_no, "v");
        if (u >= n || v >= n)
            throw ParseError(line_no, "vertex id out of range 0.." + std::to_string(n - 1));
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        auto& su = seen[u];
        if (std::find(su.begin(), su.end(), static_cast<Vertex>(v)) != su.end())
            throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        su.push_back(static_cast<Vertex>(v));
        seen[v].push_back(static_cast<Vertex>(u));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }

    if (!have_header) throw ParseError(line_no, "missing header 'n m'");
    if (edges.size() != m)
        throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
    return Graph(n, edges, std::move(labels));
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    if (g.has_labels())
        for (Vertex v = 0; v < g.order(); ++v)
            if (!g.label(v).empty()) out << "L " << v << ' ' << g.label(v) << '\n';
    return out.str();
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

namespace {

constexpr auto kUnreached = std::numeric_limits<DistanceMatrix::Distance>::max();

void bfs(const Graph& g, Vertex source, DistanceMatrix::Distance* dist, std::vector<Vertex>& queue) {
    std::fill(dist, dist + g.order(), kUnreached);
    queue.clear();
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] == kUnreached) {
                dist[w] = static_cast<DistanceMatrix::Distance>(dist[u] + 1);
                queue.push_back(w);
            }
        }
    }
}

} // namespace

bool is_connected(const Graph& g) {
    std::vector<DistanceMatrix::Distance> dist(g.order());
    std::vector<Vertex> queue;
    bfs(g, 0, dist.data(), queue);
    return queue.size() == g.order();
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<DistanceMatrix::Distance> flat(n * n);
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (Vertex s = 0; s < n; ++s) {
        bfs(g, s, flat.data() + std::size_t{s} * n, queue);
        if (queue.size() != n) {
            const auto* row = flat.data() + std::size_t{s} * n;
            const auto other = static_cast<Vertex>(std::find(row, row + n, kUnreached) - row);
            throw ConnectivityError(s, other);
        }
    }
    return DistanceMatrix(n, std::move(flat));
}

} // namespace mdim

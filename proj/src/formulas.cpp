#include "mdim/formulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace mdim {

TreeInvariants tree_invariants(const Graph& g) {
    const std::size_t n = g.order();
    if (n < 2 || g.size() != n - 1 || !is_connected(g))
        throw std::domain_error("input is not a tree on at least two vertices");

    TreeInvariants out;
    std::size_t max_degree = 0;
    for (Vertex v = 0; v < n; ++v) {
        max_degree = std::max(max_degree, g.degree(v));
        if (g.degree(v) == 1) ++out.params.a;
    }
    if (max_degree <= 2) {
        out.params.is_path = true;
        out.dim = 1;
        out.ftdim = 2;
        return out;
    }

    for (Vertex w = 0; w < n; ++w) {
        if (g.degree(w) < 3) continue;
        std::size_t rays = 0;
        for (Vertex start : g.neighbors(w)) {
            Vertex prev = w, cur = start;
            while (g.degree(cur) == 2) {
                const auto& nb = g.neighbors(cur);
                const Vertex next = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = next;
            }
            if (g.degree(cur) == 1) ++rays;
        }
        if (rays >= 1) ++out.params.b;
        if (rays == 1) ++out.params.c;
    }
    out.dim = out.params.a - out.params.b;
    out.ftdim = out.params.a - out.params.c;
    return out;
}

ClosedForm multipartite_invariants(const std::vector<std::size_t>& parts) {
    if (parts.size() < 2) throw std::invalid_argument("complete multipartite graph needs at least two parts");
    std::size_t n = 0, q = 0;
    for (auto s : parts) {
        if (s < 1) throw std::invalid_argument("every part needs at least one vertex");
        n += s;
        if (s == 1) ++q;
    }
    const std::size_t p = parts.size();
    ClosedForm out;
    out.dim = q == 0 ? n - p : n - p + q - 1;
    out.ftdim = q == 1 ? n - 1 : n;
    return out;
}

std::size_t path_dim_k(std::size_t n, std::size_t k) {
    if (k < 1) throw std::out_of_range("k must be at least 1");
    if (n < k + 2)
        throw std::out_of_range("path formula needs n >= k + 2 (n=" + std::to_string(n) +
                                ", k=" + std::to_string(k) + ")");
    return k <= 2 ? k : k + 1;
}

BigInt expansion_bound(std::size_t m) {
    if (m == 0) return 0;
    return BigInt(m) * (1 + 2 * boost::multiprecision::pow(BigInt(5), static_cast<unsigned>(m - 1)));
}

BigInt ball_bound(std::size_t d, std::size_t m) {
    if (m == 0) throw std::invalid_argument("resolving set cannot be empty");
    return 1 + BigInt(d) * boost::multiprecision::pow(BigInt(2 * d + 1), static_cast<unsigned>(m - 1));
}

BoundsResult theoretical_bounds(std::size_t dim_value, std::size_t t) {
    if (dim_value < 1 || t < 1) throw std::invalid_argument("bounds need inputs of at least 1");
    BoundsResult r;
    r.dim_value = dim_value;
    r.t = t;
    r.ft_upper = expansion_bound(dim_value);
    r.k_upper = r.ft_upper;
    r.jt_low = BigInt(t) + boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(t - 1));
    r.jt_high = expansion_bound(t);
    return r;
}

} // namespace mdim

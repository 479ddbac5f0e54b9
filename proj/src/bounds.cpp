#include "mdim/bounds.hpp"

namespace mdim {

VertexSet expand_radius2(const DistanceMatrix& dm, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("radius-2 expansion of an empty set");
    const std::size_t n = dm.order();
    VertexSet out(n);
    for (std::size_t v = 0; v < n; ++v) {
        const auto* row = dm.row(v);
        bool near = false;
        s.for_each([&](std::size_t w) { near = near || row[w] <= 2; });
        if (near) out.insert(v);
    }
    return out;
}

std::vector<BallViolation> check_ball_growth(const DistanceMatrix& dm, const PairDistinguishers& pd,
                                             const VertexSet& s, std::size_t d) {
    if (d < 1) throw std::invalid_argument("ball radius must be at least 1");
    if (!is_k_resolving(pd, s, 1)) throw PreconditionError("ball growth check needs a resolving set");
    const BigInt bound = ball_bound(d, s.size());
    std::vector<BallViolation> out;
    s.for_each([&](std::size_t v) {
        const auto* row = dm.row(v);
        std::size_t ball = 0;
        for (std::size_t u = 0; u < dm.order(); ++u)
            if (row[u] <= d) ++ball;
        if (BigInt(ball) > bound) out.push_back({static_cast<Vertex>(v), ball, bound});
    });
    return out;
}

std::vector<NearViolation> check_near_distinguisher(const PairDistinguishers& pd, const DistanceMatrix& dm,
                                                    const VertexSet& s, std::size_t k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (kappa(pd) < k + 1) throw PreconditionError("near-distinguisher check needs kappa >= k + 1");
    if (!is_k_resolving(pd, s, k)) throw PreconditionError("near-distinguisher check needs a k-resolving set");
    const VertexSet ball = expand_radius2(dm, s);
    std::vector<NearViolation> out;
    for (std::size_t p = 0; p < pd.pair_count(); ++p) {
        const auto& d = pd.distinguishers(p);
        if (d.intersection_size(s) < k) continue;
        const std::size_t near = d.intersection_size(ball);
        if (near < k + 1) out.push_back({pd.pair(p), near, k + 1});
    }
    return out;
}

} // namespace mdim

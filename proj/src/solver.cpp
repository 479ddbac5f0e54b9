#include "mdim/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace mdim {

std::string to_string(SolveStatus s) {
    switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::feasible_upper_bound: return "feasible-upper-bound";
    case SolveStatus::infeasible: return "infeasible";
    }
    return "unknown";
}

Budget Budget::from_env() {
    Budget b;
    if (const char* nodes = std::getenv("MDIM_BUDGET_NODES"))
        b.max_nodes = std::strtoull(nodes, nullptr, 10);
    if (const char* secs = std::getenv("MDIM_BUDGET_SECS"))
        b.max_time = std::chrono::duration<double>(std::strtod(secs, nullptr));
    return b;
}

namespace {

using Clock = std::chrono::steady_clock;

void require_k(std::size_t k) {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
}

// pair lists per vertex: the pairs each vertex distinguishes
std::vector<std::vector<std::uint32_t>> pairs_by_vertex(const PairDistinguishers& pd) {
    std::vector<std::vector<std::uint32_t>> out(pd.order());
    for (std::size_t p = 0; p < pd.pair_count(); ++p)
        pd.distinguishers(p).for_each([&](std::size_t v) { out[v].push_back(static_cast<std::uint32_t>(p)); });
    return out;
}

SolveResult infeasible_result(std::size_t n, Clock::time_point start) {
    SolveResult r;
    r.set = VertexSet(n);
    r.status = SolveStatus::infeasible;
    r.elapsed = Clock::now() - start;
    return r;
}

VertexSet greedy_cover(const PairDistinguishers& pd, std::size_t k, const VertexSet& forced,
                       const std::vector<std::vector<std::uint32_t>>& by_vertex) {
    const std::size_t n = pd.order();
    VertexSet chosen = forced;
    std::vector<std::size_t> cov(pd.pair_count());
    std::size_t open = 0;
    for (std::size_t p = 0; p < pd.pair_count(); ++p) {
        cov[p] = pd.distinguishers(p).intersection_size(chosen);
        if (cov[p] < k) ++open;
    }
    while (open > 0) {
        std::size_t best_v = n, best_gain = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (chosen.contains(v)) continue;
            std::size_t gain = 0;
            for (auto p : by_vertex[v])
                if (cov[p] < k) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best_v = v;
            }
        }
        if (best_v == n) throw std::logic_error("greedy stalled on a feasible instance");
        chosen.insert(best_v);
        for (auto p : by_vertex[best_v])
            if (++cov[p] == k) --open;
    }
    return chosen;
}

class MulticoverSearch {
public:
    MulticoverSearch(const PairDistinguishers& pd, std::size_t k, const Budget& budget,
                     std::vector<std::vector<std::uint32_t>> by_vertex)
        : pd_(pd), n_(pd.order()), k_(k), budget_(budget), by_vertex_(std::move(by_vertex)),
          state_(n_, kFree), cov_(pd.pair_count(), 0), avail_(pd.pair_count(), 0),
          score_(n_, 0), stamp_(n_, 0) {
        members_.resize(pd.pair_count());
        for (std::size_t p = 0; p < pd.pair_count(); ++p) {
            for (auto v : pd.distinguishers(p).members()) members_[p].push_back(static_cast<Vertex>(v));
            avail_[p] = static_cast<std::uint32_t>(members_[p].size());
        }
    }

    // Searches for sets strictly smaller than `incumbent`.
    void run(const VertexSet& incumbent, const VertexSet& forced) {
        start_ = Clock::now();
        best_ = incumbent;
        best_size_ = incumbent.size();
        forced.for_each([&](std::size_t v) { assign(static_cast<Vertex>(v), kIn); });

        std::size_t open = 0;
        if (propagate(open)) {
            root_bound_ = chosen_ + (open == 0 ? 0 : lower_bound());
            if (root_bound_ < best_size_) search();
        }
        if (!aborted_) root_bound_ = best_size_;
        root_bound_ = std::min(root_bound_, best_size_);
    }

    bool aborted() const { return aborted_; }
    std::uint64_t nodes() const { return nodes_; }
    const VertexSet& best() const { return best_; }
    std::size_t proven_lower_bound() const { return root_bound_; }

private:
    enum State : std::uint8_t { kFree, kIn, kOut };

    std::size_t deficit(std::size_t p) const { return cov_[p] >= k_ ? 0 : k_ - cov_[p]; }

    void assign(Vertex v, State s) {
        state_[v] = s;
        for (auto p : by_vertex_[v]) {
            --avail_[p];
            if (s == kIn) ++cov_[p];
        }
        if (s == kIn) ++chosen_;
        trail_.push_back(v);
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            const Vertex v = trail_.back();
            trail_.pop_back();
            const bool in = state_[v] == kIn;
            for (auto p : by_vertex_[v]) {
                ++avail_[p];
                if (in) --cov_[p];
            }
            if (in) --chosen_;
            state_[v] = kFree;
        }
    }

    // Forces every free distinguisher of a pair whose deficit equals its
    // remaining free distinguishers. False on a dead end.
    bool propagate(std::size_t& open) {
        bool changed = true;
        while (changed) {
            changed = false;
            open = 0;
            for (std::size_t p = 0; p < members_.size(); ++p) {
                const std::size_t d = deficit(p);
                if (d == 0) continue;
                if (avail_[p] < d) return false;
                if (avail_[p] == d) {
                    for (auto v : members_[p])
                        if (state_[v] == kFree) assign(v, kIn);
                    changed = true;
                } else {
                    ++open;
                }
            }
        }
        return true;
    }

    // max(disjoint pair-slack on free endpoints, ceil(total deficit / best single coverage))
    std::size_t lower_bound() {
        std::size_t total = 0;
        std::fill(score_.begin(), score_.end(), 0);
        for (std::size_t p = 0; p < members_.size(); ++p) {
            const std::size_t d = deficit(p);
            if (d == 0) continue;
            total += d;
            for (auto v : members_[p])
                if (state_[v] == kFree) ++score_[v];
        }
        if (total == 0) return 0;
        const std::size_t max_score = *std::max_element(score_.begin(), score_.end());
        const std::size_t by_coverage =
            max_score == 0 ? std::numeric_limits<std::size_t>::max() / 2 : (total + max_score - 1) / max_score;

        ++epoch_;
        std::size_t by_pairs = 0;
        for (std::size_t want = 2; want >= 1; --want) {
            for (std::size_t p = 0; p < members_.size(); ++p) {
                const std::size_t d = deficit(p);
                if (d == 0) continue;
                const auto [x, y] = pd_.pair(p);
                const bool fx = state_[x] == kFree, fy = state_[y] == kFree;
                const std::size_t ends = std::size_t{fx} + std::size_t{fy};
                const std::size_t outside = avail_[p] - ends;
                if (d <= outside || d - outside != want) continue;
                if ((fx && stamp_[x] == epoch_) || (fy && stamp_[y] == epoch_)) continue;
                if (fx) stamp_[x] = epoch_;
                if (fy) stamp_[y] = epoch_;
                by_pairs += want;
            }
        }
        return std::max(by_pairs, by_coverage);
    }

    Vertex branch_vertex() const {
        std::size_t best_p = members_.size();
        std::size_t best_def = 0, best_slack = 0;
        for (std::size_t p = 0; p < members_.size(); ++p) {
            const std::size_t d = deficit(p);
            if (d == 0) continue;
            const std::size_t slack = avail_[p] - d;
            if (d > best_def || (d == best_def && slack < best_slack)) {
                best_p = p;
                best_def = d;
                best_slack = slack;
            }
        }
        for (auto v : members_[best_p])
            if (state_[v] == kFree) return v;
        throw std::logic_error("no free vertex on an open pair");
    }

    bool out_of_budget() {
        if (nodes_ > budget_.max_nodes) return true;
        if ((nodes_ & 1023U) == 0 && Clock::now() - start_ > budget_.max_time) return true;
        return false;
    }

    void search() {
        ++nodes_;
        if (out_of_budget()) {
            aborted_ = true;
            return;
        }
        const std::size_t mark = trail_.size();
        std::size_t open = 0;
        if (!propagate(open) || chosen_ >= best_size_) {
            undo_to(mark);
            return;
        }
        if (open == 0) {
            best_ = VertexSet(n_);
            for (Vertex v = 0; v < n_; ++v)
                if (state_[v] == kIn) best_.insert(v);
            best_size_ = chosen_;
            undo_to(mark);
            return;
        }
        if (chosen_ + lower_bound() >= best_size_) {
            undo_to(mark);
            return;
        }

        const Vertex v = branch_vertex();
        const std::size_t before = trail_.size();
        assign(v, kIn);
        search();
        undo_to(before);
        if (!aborted_) {
            assign(v, kOut);
            search();
            undo_to(before);
        }
        undo_to(mark);
    }

    const PairDistinguishers& pd_;
    std::size_t n_, k_;
    Budget budget_;
    std::vector<std::vector<std::uint32_t>> by_vertex_;
    std::vector<std::vector<Vertex>> members_;
    std::vector<State> state_;
    std::vector<std::uint32_t> cov_, avail_;
    std::vector<std::size_t> score_;
    std::vector<std::uint64_t> stamp_;
    std::uint64_t epoch_ = 0;
    std::vector<Vertex> trail_;
    std::size_t chosen_ = 0;

    VertexSet best_;
    std::size_t best_size_ = 0;
    std::size_t root_bound_ = 0;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    Clock::time_point start_;
};

} // namespace

Preprocessed preprocess(const PairDistinguishers& pd, std::size_t k) {
    require_k(k);
    Preprocessed out{VertexSet(pd.order()), kappa(pd) >= k};
    if (!out.feasible) return out;
    for (std::size_t p = 0; p < pd.pair_count(); ++p)
        if (pd.distinguishers(p).size() == k) out.forced |= pd.distinguishers(p);
    return out;
}

SolveResult solve_greedy(const PairDistinguishers& pd, std::size_t k) {
    const auto start = Clock::now();
    const auto pre = preprocess(pd, k);
    if (!pre.feasible) return infeasible_result(pd.order(), start);
    SolveResult r;
    r.set = greedy_cover(pd, k, pre.forced, pairs_by_vertex(pd));
    r.size = r.set.size();
    r.status = SolveStatus::feasible_upper_bound;
    r.lower_bound_at_exit = std::max(pre.forced.size(), lower_bound_pair_slack(pd, k).bound);
    r.elapsed = Clock::now() - start;
    return r;
}

SolveResult solve_exact(const PairDistinguishers& pd, std::size_t k, const Budget& budget) {
    const auto start = Clock::now();
    const auto pre = preprocess(pd, k);
    if (!pre.feasible) return infeasible_result(pd.order(), start);

    auto by_vertex = pairs_by_vertex(pd);
    const VertexSet incumbent = greedy_cover(pd, k, pre.forced, by_vertex);
    MulticoverSearch search(pd, k, budget, std::move(by_vertex));
    search.run(incumbent, pre.forced);

    SolveResult r;
    r.set = search.best();
    r.size = r.set.size();
    r.nodes_explored = search.nodes();
    r.status = search.aborted() ? SolveStatus::feasible_upper_bound : SolveStatus::optimal;
    r.lower_bound_at_exit = search.aborted() ? search.proven_lower_bound() : r.size;
    r.elapsed = Clock::now() - start;
    return r;
}

BoundCertificate lower_bound_pair_slack(const PairDistinguishers& pd, std::size_t k) {
    require_k(k);
    std::vector<BoundCertificate::Entry> candidates;
    for (std::size_t p = 0; p < pd.pair_count(); ++p) {
        const std::size_t outside = pd.distinguishers(p).size() - 2;
        if (outside >= k) continue;
        candidates.push_back({pd.pair(p), outside, k - outside});
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) { return a.demand > b.demand; });

    BoundCertificate cert;
    cert.k = k;
    std::vector<bool> used(pd.order(), false);
    for (const auto& c : candidates) {
        const auto [x, y] = c.pair;
        if (used[x] || used[y]) continue;
        used[x] = used[y] = true;
        cert.pairs.push_back(c);
        cert.bound += c.demand;
    }
    return cert;
}

std::string verify_certificate(const PairDistinguishers& pd, const BoundCertificate& cert) {
    const std::size_t n = pd.order();
    std::vector<bool> used(n, false);
    std::size_t total = 0;
    for (const auto& e : cert.pairs) {
        const auto [x, y] = e.pair;
        const std::string name = "pair (" + std::to_string(x) + "," + std::to_string(y) + ")";
        if (x >= y || y >= n) return name + " is not a valid ordered pair";
        if (used[x] || used[y]) return name + " shares a vertex with an earlier pair";
        used[x] = used[y] = true;
        const auto& d = pd.distinguishers(x, y);
        const std::size_t outside = d.size() - std::size_t{d.contains(x)} - std::size_t{d.contains(y)};
        if (outside != e.outside) return name + " has wrong outside count";
        const std::size_t demand = outside >= cert.k ? 0 : cert.k - outside;
        if (demand != e.demand) return name + " has wrong demand";
        total += demand;
    }
    if (total != cert.bound) return "bound does not equal the sum of demands";
    return {};
}

SolveResult brute_force_min(const Graph& g, std::size_t k) {
    require_k(k);
    const auto start = Clock::now();
    const std::size_t n = g.order();
    if (n < 2) throw std::invalid_argument("brute force needs at least two vertices");
    const auto dm = all_pairs_distances(g);

    SolveResult r;
    if (!is_k_resolving_definitional(dm, VertexSet::full(n), k)) {
        r = infeasible_result(n, start);
        r.nodes_explored = 1;
        return r;
    }
    for (std::size_t size = 0; size <= n; ++size) {
        std::vector<std::size_t> pick(size);
        for (std::size_t i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            ++r.nodes_explored;
            const auto s = VertexSet::from_list(n, pick);
            if (is_k_resolving_definitional(dm, s, k)) {
                r.set = s;
                r.size = size;
                r.status = SolveStatus::optimal;
                r.lower_bound_at_exit = size;
                r.elapsed = Clock::now() - start;
                return r;
            }
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    throw std::logic_error("full vertex set passed but no subset did");
}

} // namespace mdim

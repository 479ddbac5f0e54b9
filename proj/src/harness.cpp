#include "mdim/harness.hpp"

#include "mdim/bounds.hpp"
#include "mdim/families.hpp"
#include "mdim/formulas.hpp"
#include "mdim/metric.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace mdim {

std::size_t Report::passed() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.pass; }));
}

std::size_t Report::failed() const { return checks.size() - passed(); }

namespace {

using Clock = std::chrono::steady_clock;

class Recorder {
public:
    Recorder(Report& report, bool timing) : report_(report), timing_(timing) { lap(); }

    // Starts timing the next group of checks.
    void lap() { started_ = Clock::now(); }

    void check(std::string id, std::string anchor, std::string expected, std::string observed, bool pass) {
        CheckRecord rec{std::move(id), std::move(anchor), std::move(expected), std::move(observed), pass, {}};
        if (timing_) rec.ms = std::chrono::duration<double, std::milli>(Clock::now() - started_).count();
        report_.checks.push_back(std::move(rec));
    }

    template <typename T>
    void equal(std::string id, std::string anchor, const T& expected, const T& observed) {
        std::ostringstream e, o;
        e << expected;
        o << observed;
        check(std::move(id), std::move(anchor), e.str(), o.str(), expected == observed);
    }

private:
    Report& report_;
    bool timing_;
    Clock::time_point started_;
};

std::size_t pick(std::size_t value, std::size_t fallback) { return value == 0 ? fallback : value; }

void require(bool cond, const std::string& what) {
    if (!cond) throw UsageError(what);
}

std::string str(std::size_t v) { return std::to_string(v); }

std::string solve_summary(const SolveResult& r) {
    return str(r.size) + " (" + to_string(r.status) + ")";
}

// ---------------------------------------------------------------- ft-mt

void suite_ft_mt(const SuiteOptions& o, Report& rep) {
    require(o.t_max >= 1, "t-max must be at least 1");
    require(o.t_max <= 5, "t-max above 5 is not supported");
    require(o.t_max <= 4 || o.allow_t5, "t-max 5 needs --allow-t5 (runs under the solver budget)");
    rep.params = {{"t_max", str(o.t_max)}};
    Recorder rec(rep, o.timing);
    for (std::size_t t = 1; t <= o.t_max; ++t) {
        const auto mt = gen_mt(t);
        const auto pd = distinguisher_table(all_pairs_distances(mt.graph));
        const std::string tag = "M_" + str(t);

        rec.lap();
        const auto dim = solve_exact(pd, 1, o.budget);
        rec.check("dim(" + tag + ")", "dim(M_t) = t", str(t) + " (optimal)", solve_summary(dim),
                  dim.size == t && dim.status == SolveStatus::optimal);

        rec.lap();
        const std::size_t ft_expected = t + (std::size_t{1} << (t - 1));
        const auto ft = solve_exact(pd, 2, o.budget);
        rec.check("ftdim(" + tag + ")", "ftdim(M_t) = t + 2^(t-1)", str(ft_expected) + " (optimal)",
                  solve_summary(ft), ft.size == ft_expected && ft.status == SolveStatus::optimal);

        rec.lap();
        const auto parity = parity_ft_set(t);
        const bool parity_ok = is_k_resolving(pd, parity, 2);
        rec.check("parity set of " + tag + " is 2-resolving",
                  "apexes plus even-weight codes form a fault-tolerant resolving set",
                  "true, size " + str(ft_expected),
                  std::string(parity_ok ? "true" : "false") + ", size " + str(parity.size()),
                  parity_ok && parity.size() == ft_expected);

        rec.lap();
        const auto cap = expansion_bound(dim.size);
        rec.check("ftdim(" + tag + ") under exponential cap", "ftdim(G) <= dim(G)(1 + 2*5^(dim(G)-1))",
                  "<= " + cap.str(), str(ft.size), BigInt(ft.size) <= cap);
    }
}

// ---------------------------------------------------------------- mtk

void suite_mtk(const SuiteOptions& o, Report& rep) {
    require(o.t >= 1 && o.t <= 9, "t must be in 1..9");
    require(o.k >= 2 && o.k <= 6, "k must be in 2..6");
    const std::size_t t = o.t, k = o.k;
    rep.params = {{"t", str(t)}, {"k", str(k)}};
    Recorder rec(rep, o.timing);

    const auto g = gen_mtk(t, k);
    const auto pd = distinguisher_table(all_pairs_distances(g.graph));
    const std::string tag = "M_" + str(t) + "," + str(k);

    if (t > k + 3) {
        rec.lap();
        const bool ok = is_k_resolving(pd, apex_set(t, k), k);
        rec.check("V_2 is " + str(k) + "-resolving in " + tag, "V_2 is a k-resolving set of M_{t,k} when t > k+3",
                  "true", ok ? "true" : "false", ok);
    }

    rec.lap();
    const auto cert = lower_bound_pair_slack(pd, k + 1);
    const std::size_t target = std::size_t{1} << (t - 1);
    rec.check("pair-slack bound for dim_" + str(k + 1) + "(" + tag + ")", "dim_{k+1}(M_{t,k}) >= 2^(t-1)",
              ">= " + str(target), str(cert.bound) + " from " + str(cert.pairs.size()) + " disjoint pairs",
              cert.bound >= target);
    const auto problem = verify_certificate(pd, cert);
    rec.check("certificate for " + tag + " recomputes", "derived", "valid", problem.empty() ? "valid" : problem,
              problem.empty());

    if (t == 3 && k == 2) {
        rec.lap();
        const auto brute = brute_force_min(g.graph, 2);
        rec.equal("dim_2(" + tag + ") regression", std::string("derived"), kFtdimM32, brute.size);
        const auto exact = solve_exact(pd, 2, o.budget);
        rec.equal("solver agrees on dim_2(" + tag + ")", std::string("derived"), brute.size, exact.size);
    }
}

// ---------------------------------------------------------------- trees

void tree_vs_oracle(Recorder& rec, const std::string& tag, const Graph& g) {
    const auto inv = tree_invariants(g);
    const auto dim = brute_force_min(g, 1).size;
    const auto ft = brute_force_min(g, 2).size;
    rec.equal(tag + " dim", std::string("dim(T) = a - b"), inv.dim, dim);
    rec.equal(tag + " ftdim", std::string("ftdim(T) = a - c"), inv.ftdim, ft);
    rec.check(tag + " bound chain", "dim(T) + 1 <= ftdim(T) <= 2 dim(T)",
              "dim+1 <= ftdim <= 2dim", str(dim) + ", " + str(ft), dim + 1 <= ft && ft <= 2 * dim);
    const auto& p = inv.params;
    if (!p.is_path)
        rec.check(tag + " ray counting", "2(b - c) + c <= a", "<= " + str(p.a), str(2 * (p.b - p.c) + p.c),
                  2 * (p.b - p.c) + p.c <= p.a);
}

void suite_trees(const SuiteOptions& o, Report& rep) {
    const std::size_t n_max = pick(o.n_max, 12);
    const std::size_t samples = pick(o.samples, 200);
    require(n_max >= 5 && n_max <= 16, "n-max for trees must be in 5..16");
    rep.params = {{"n_min", "5"}, {"n_max", str(n_max)}, {"samples", str(samples)}};
    Recorder rec(rep, o.timing);

    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::size_t> size_dist(5, n_max);
    for (std::size_t i = 0; i < samples; ++i) {
        const auto g = random_tree(size_dist(rng), rng);
        rec.lap();
        tree_vs_oracle(rec, "tree#" + str(i) + " n=" + str(g.order()), g);
    }

    for (std::size_t d = 1; d <= 3; ++d) {
        for (std::size_t leaves : {2, 3}) {
            rec.lap();
            const auto g = gen_spine_tree(std::vector<std::size_t>(d, leaves)).graph;
            const auto dim = brute_force_min(g, 1).size;
            const auto ft = brute_force_min(g, 2).size;
            const std::string tag = "spine d=" + str(d) + " leaves=" + str(leaves);
            rec.equal(tag + " gap", std::string("ftdim(T) - dim(T) = d"), d, ft - dim);
            const auto inv = tree_invariants(g);
            rec.equal(tag + " formula gap", std::string("ftdim(T) - dim(T) = d"), d, inv.ftdim - inv.dim);
        }
    }
}

// ---------------------------------------------------------------- multipartite

void suite_multipartite(const SuiteOptions& o, Report& rep) {
    const std::size_t n_max = pick(o.n_max, 9);
    require(n_max >= 2 && n_max <= 11, "n-max for multipartite must be in 2..11");
    rep.params = {{"n_max", str(n_max)}};
    Recorder rec(rep, o.timing);
    for (std::size_t n = 2; n <= n_max; ++n) {
        for (const auto& parts : partitions_with_two_or_more_parts(n)) {
            rec.lap();
            const auto lg = gen_complete_multipartite(parts);
            const auto formula = multipartite_invariants(parts);
            const auto dim = brute_force_min(lg.graph, 1).size;
            const auto ft = brute_force_min(lg.graph, 2).size;
            const std::string tag = "K_{" + lg.params.front().second + "}";
            rec.equal(tag + " dim", std::string("dim(G) = n-p if q=0, else n-p+q-1"), formula.dim, dim);
            rec.equal(tag + " ftdim", std::string("ftdim(G) = n-1 if q=1, else n"), formula.ftdim, ft);
            rec.check(tag + " bound chain", "dim(G) + 1 <= ftdim(G) <= 2 dim(G)", "dim+1 <= ftdim <= 2dim",
                      str(dim) + ", " + str(ft), dim + 1 <= ft && ft <= 2 * dim);
        }
    }
}

// ---------------------------------------------------------------- paths

void suite_paths(const SuiteOptions& o, Report& rep) {
    const std::size_t n_max = pick(o.n_max, 10);
    require(n_max >= 3 && n_max <= 12, "n-max for paths must be in 3..12");
    rep.params = {{"n_max", str(n_max)}};
    Recorder rec(rep, o.timing);
    for (std::size_t n = 3; n <= n_max; ++n) {
        const auto g = gen_path(n).graph;
        for (std::size_t k = 1; k + 2 <= n; ++k) {
            rec.lap();
            rec.equal("dim_" + str(k) + "(P_" + str(n) + ")", std::string("dim_k(P_n) = k if k <= 2, else k+1"),
                      path_dim_k(n, k), brute_force_min(g, k).size);
        }
    }
}

// ---------------------------------------------------------------- expansion

void suite_expansion(const SuiteOptions& o, Report& rep) {
    const std::size_t n_max = pick(o.n_max, 15);
    const std::size_t samples = pick(o.samples, 50);
    require(n_max >= 5 && n_max <= 20, "n-max for expansion must be in 5..20");
    rep.params = {{"n_min", "5"}, {"n_max", str(n_max)}, {"samples", str(samples)}};
    Recorder rec(rep, o.timing);

    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::size_t> size_dist(5, n_max);
    std::uniform_real_distribution<double> density(0.2, 0.6);
    for (std::size_t i = 0; i < samples; ++i) {
        const std::size_t n = size_dist(rng);
        const double p = density(rng);
        const auto g = random_connected_graph(n, p, rng);
        const auto dm = all_pairs_distances(g);
        const auto pd = distinguisher_table(dm);
        const std::size_t kap = kappa(pd);
        const std::string base = "graph#" + str(i) + " n=" + str(n);

        for (std::size_t k = 1; k + 1 <= kap; ++k) {
            rec.lap();
            const auto sol = solve_exact(pd, k, o.budget);
            const std::string tag = base + " k=" + str(k);
            const auto expanded = expand_radius2(dm, sol.set);
            const bool lifted = is_k_resolving(pd, expanded, k + 1);
            rec.check(tag + " expansion is (k+1)-resolving", "S' = {v : d(v,S) <= 2} is (k+1)-resolving", "true",
                      lifted ? "true" : "false", lifted);

            const auto cap = expansion_bound(sol.size);
            rec.check(tag + " expansion size", "|S'| <= |S|(1 + 2*5^(|S|-1))", "<= " + cap.str(),
                      str(expanded.size()), BigInt(expanded.size()) <= cap);

            std::size_t ball_violations = 0;
            for (std::size_t d = 1; d <= 3; ++d) ball_violations += check_ball_growth(dm, pd, sol.set, d).size();
            rec.equal(tag + " ball growth violations", std::string("|B(v,d)| <= 1 + d(2d+1)^(|S|-1)"),
                      std::size_t{0}, ball_violations);

            const auto near = check_near_distinguisher(pd, dm, sol.set, k).size();
            rec.equal(tag + " near-distinguisher violations",
                      std::string("another distinguisher lies within distance 2 of S"), std::size_t{0}, near);
        }
    }
}

// ---------------------------------------------------------------- equivalence

struct EquivalenceTally {
    std::size_t graphs = 0;
    std::size_t set_checks = 0, set_mismatch = 0;
    std::size_t solves = 0, solve_mismatch = 0;
    std::size_t chain_checks = 0, chain_fail = 0;
    std::string first_problem;
};

void equivalence_on(const Graph& g, std::size_t subsets, const Budget& budget, std::mt19937_64& rng,
                    EquivalenceTally& tally, const std::string& tag) {
    const auto dm = all_pairs_distances(g);
    const auto pd = distinguisher_table(dm);
    const std::size_t n = g.order();
    const std::size_t kap = kappa(pd);
    ++tally.graphs;

    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < subsets; ++i) {
        VertexSet s(n);
        for (std::size_t v = 0; v < n; ++v)
            if (coin(rng)) s.insert(v);
        for (std::size_t k = 1; k <= kap; ++k) {
            ++tally.set_checks;
            if (is_k_resolving(pd, s, k) != is_k_resolving_definitional(dm, s, k)) {
                ++tally.set_mismatch;
                if (tally.first_problem.empty()) tally.first_problem = tag + " S=" + s.to_string() + " k=" + str(k);
            }
        }
    }

    std::size_t previous = 0;
    for (std::size_t k = 1; k <= kap; ++k) {
        const auto exact = solve_exact(pd, k, budget);
        const auto brute = brute_force_min(g, k);
        ++tally.solves;
        if (exact.size != brute.size || exact.status != SolveStatus::optimal) {
            ++tally.solve_mismatch;
            if (tally.first_problem.empty())
                tally.first_problem = tag + " k=" + str(k) + " exact=" + str(exact.size) + " brute=" + str(brute.size);
        }
        if (k > 1) {
            ++tally.chain_checks;
            if (brute.size < previous + 1) ++tally.chain_fail;
        }
        previous = brute.size;
    }
    // one past kappa must be infeasible for both
    const auto over = solve_exact(pd, kap + 1, budget);
    ++tally.solves;
    if (over.status != SolveStatus::infeasible || brute_force_min(g, kap + 1).status != SolveStatus::infeasible) {
        ++tally.solve_mismatch;
        if (tally.first_problem.empty()) tally.first_problem = tag + " k=kappa+1 not infeasible";
    }
}

void report_tally(Recorder& rec, const std::string& corpus, const EquivalenceTally& t) {
    const auto note = t.first_problem.empty() ? std::string() : "; first: " + t.first_problem;
    rec.check(corpus + ": multicover vs definitional", "S is k-resolving iff S minus any k-1 vertices resolves",
              str(t.set_checks) + "/" + str(t.set_checks) + " agree",
              str(t.set_checks - t.set_mismatch) + "/" + str(t.set_checks) + " agree" + note, t.set_mismatch == 0);
    rec.check(corpus + ": solver vs brute force", "derived", str(t.solves) + "/" + str(t.solves) + " agree",
              str(t.solves - t.solve_mismatch) + "/" + str(t.solves) + " agree" + note, t.solve_mismatch == 0);
    rec.check(corpus + ": strict growth in k", "dim_{k+1}(G) >= dim_k(G) + 1",
              str(t.chain_checks) + "/" + str(t.chain_checks) + " hold",
              str(t.chain_checks - t.chain_fail) + "/" + str(t.chain_checks) + " hold", t.chain_fail == 0);
}

void suite_equivalence(const SuiteOptions& o, Report& rep) {
    const std::size_t n_max = pick(o.n_max, 7);
    const std::size_t tree_n_max = n_max + 1;
    const std::size_t samples = pick(o.samples, 200);
    require(n_max >= 3 && n_max <= 9, "n-max for equivalence must be in 3..9");
    rep.params = {{"tree_n_max", str(tree_n_max)}, {"graph_n_max", str(n_max)}, {"samples", str(samples)},
                  {"subsets", str(o.subsets)}};
    Recorder rec(rep, o.timing);
    std::mt19937_64 rng(o.seed);

    for (std::size_t n = 2; n <= tree_n_max; ++n) {
        rec.lap();
        EquivalenceTally tally;
        std::size_t index = 0;
        for (const auto& g : all_trees(n))
            equivalence_on(g, o.subsets, o.budget, rng, tally, "tree#" + str(index++));
        report_tally(rec, "trees n=" + str(n) + " (" + str(tally.graphs) + " classes)", tally);
    }

    rec.lap();
    EquivalenceTally tally;
    std::uniform_int_distribution<std::size_t> size_dist(3, n_max);
    std::uniform_real_distribution<double> density(0.3, 0.8);
    for (std::size_t i = 0; i < samples; ++i) {
        const std::size_t n = size_dist(rng);
        const auto g = random_connected_graph(n, density(rng), rng);
        equivalence_on(g, o.subsets, o.budget, rng, tally, "graph#" + str(i));
    }
    report_tally(rec, "random connected graphs n<=" + str(n_max), tally);
}

using SuiteFn = std::function<void(const SuiteOptions&, Report&)>;

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> suites = {
        {"ft-mt", suite_ft_mt},           {"mtk", suite_mtk},     {"trees", suite_trees},
        {"multipartite", suite_multipartite}, {"paths", suite_paths}, {"expansion", suite_expansion},
        {"equivalence", suite_equivalence},
    };
    return suites;
}

// AHU encoding of a rooted tree.
std::string encode(const Graph& g, Vertex v, Vertex parent) {
    std::vector<std::string> children;
    for (Vertex w : g.neighbors(v))
        if (w != parent) children.push_back(encode(g, w, v));
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& c : children) out += c;
    return out + ")";
}

std::string canonical_tree(const Graph& g) {
    // center(s): strip leaves layer by layer
    const std::size_t n = g.order();
    std::vector<std::size_t> deg(n);
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1) layer.push_back(v);
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<Vertex> next;
        for (Vertex v : layer)
            for (Vertex w : g.neighbors(v))
                if (--deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::string best;
    for (Vertex c : layer) {
        auto code = encode(g, c, c);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

} // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
}

Report run_suite(const std::string& name, const SuiteOptions& options) {
    const auto& suites = registry();
    const auto it = suites.find(name);
    if (it == suites.end()) throw UsageError("unknown suite '" + name + "'");
    Report rep;
    rep.suite = name;
    rep.seed = options.seed;
    it->second(options, rep);
    return rep;
}

nlohmann::ordered_json report_json(const Report& report) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["suite"] = report.suite;
    j["version"] = report.version;
    auto& params = j["params"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.params) params[key] = value;
    j["seed"] = report.seed;
    auto& checks = j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json r;
        r["id"] = c.id;
        r["anchor"] = c.anchor;
        r["expected"] = c.expected;
        r["observed"] = c.observed;
        r["pass"] = c.pass;
        if (c.ms)
            r["ms"] = *c.ms;
        else
            r["ms"] = nullptr;
        checks.push_back(std::move(r));
    }
    j["summary"] = {{"pass", report.passed()}, {"fail", report.failed()}};
    return j;
}

std::string render_table(const Report& report) {
    std::ostringstream out;
    out << "suite " << report.suite << " (" << report.version << ", seed " << report.seed << ")\n";
    for (const auto& [key, value] : report.params) out << "  " << key << " = " << value << '\n';
    for (const auto& c : report.checks) {
        out << (c.pass ? "PASS " : "FAIL ") << c.id << "  expected " << c.expected << ", observed " << c.observed;
        if (c.ms) out << "  [" << std::fixed << std::setprecision(1) << *c.ms << " ms]";
        out << '\n';
    }
    out << report.passed() << " passed, " << report.failed() << " failed\n";
    return out.str();
}

Graph random_tree(std::size_t n, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> parent(0, i - 1);
        edges.emplace_back(static_cast<Vertex>(parent(rng)), static_cast<Vertex>(i));
    }
    return Graph(n, edges);
}

Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    if (n > 1 && p <= 0.0) throw std::invalid_argument("edge probability must be positive");
    std::bernoulli_distribution edge(p);
    while (true) {
        std::vector<Edge> edges;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (edge(rng)) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        Graph g(n, edges);
        if (is_connected(g)) return g;
    }
}

std::vector<Graph> all_trees(std::size_t n) {
    if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
    std::vector<Graph> out;
    std::set<std::string> seen;
    std::vector<std::size_t> parent(n, 0);
    // odometer over parent arrays: parent[i] in 0..i-1
    while (true) {
        std::vector<Edge> edges;
        for (std::size_t i = 1; i < n; ++i) edges.emplace_back(static_cast<Vertex>(parent[i]), static_cast<Vertex>(i));
        Graph g(n, edges);
        if (seen.insert(canonical_tree(g)).second) out.push_back(std::move(g));

        std::size_t i = n;
        while (i > 1) {
            --i;
            if (++parent[i] < i) break;
            parent[i] = 0;
            if (i == 1) return out;
        }
        if (n <= 2) return out;
    }
}

std::vector<std::vector<std::size_t>> partitions_with_two_or_more_parts(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t rest, std::size_t cap) {
        if (rest == 0) {
            if (current.size() >= 2) out.push_back(current);
            return;
        }
        for (std::size_t part = std::min(rest, cap); part >= 1; --part) {
            current.push_back(part);
            rec(rest - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

} // namespace mdim

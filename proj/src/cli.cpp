#include "mdim/cli.hpp"

#include "mdim/bounds.hpp"
#include "mdim/families.hpp"
#include "mdim/formulas.hpp"
#include "mdim/graph.hpp"
#include "mdim/harness.hpp"
#include "mdim/metric.hpp"
#include "mdim/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace mdim {

namespace {

using Json = nlohmann::ordered_json;

struct InputOptions {
    std::string path;
    Graph load(std::istream& in) const {
        if (path.empty() || path == "-") {
            std::ostringstream buf;
            buf << in.rdbuf();
            return parse_graph(buf.str());
        }
        return read_graph_file(path);
    }
};

std::vector<std::size_t> parse_list(const std::string& text, const char* what) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || item[0] == '-')
            throw UsageError(std::string("bad entry '") + item + "' in " + what);
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

VertexSet parse_set(const std::string& text, std::size_t n) {
    VertexSet s(n);
    for (auto v : parse_list(text, "--set")) {
        if (v >= n) throw UsageError("vertex " + std::to_string(v) + " in --set is out of range");
        s.insert(v);
    }
    return s;
}

Json set_json(const VertexSet& s) {
    Json arr = Json::array();
    for (auto v : s.members()) arr.push_back(v);
    return arr;
}

Json labels_json(const Graph& g, const VertexSet& s) {
    Json arr = Json::array();
    for (auto v : s.members()) arr.push_back(g.label(static_cast<Vertex>(v)));
    return arr;
}

std::string labelled(const Graph& g, const VertexSet& s) {
    if (!g.has_labels()) return s.to_string();
    std::string out = "{";
    bool first = true;
    for (auto v : s.members()) {
        if (!first) out += ", ";
        out += g.label(static_cast<Vertex>(v));
        first = false;
    }
    return out + "}";
}

void add_budget(CLI::App* cmd, Budget& budget, double& secs) {
    cmd->add_option("--budget-nodes", budget.max_nodes, "Branch-and-bound node limit");
    cmd->add_option("--budget-secs", secs, "Wall-clock limit in seconds");
}

Json solve_json(const Graph& g, std::size_t k, const std::string& method, const SolveResult& r) {
    Json j;
    j["schema"] = kReportSchema;
    j["k"] = k;
    j["method"] = method;
    j["n"] = g.order();
    j["size"] = r.size;
    j["status"] = to_string(r.status);
    j["set"] = set_json(r.set);
    if (g.has_labels()) j["labels"] = labels_json(g, r.set);
    j["nodes_explored"] = r.nodes_explored;
    j["lower_bound_at_exit"] = r.lower_bound_at_exit;
    j["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
    return j;
}

Json certificate_json(const BoundCertificate& cert, const std::string& problem) {
    Json j;
    j["k"] = cert.k;
    j["bound"] = cert.bound;
    Json pairs = Json::array();
    for (const auto& e : cert.pairs)
        pairs.push_back({{"x", e.pair.first}, {"y", e.pair.second}, {"outside", e.outside}, {"demand", e.demand}});
    j["pairs"] = std::move(pairs);
    j["valid"] = problem.empty();
    if (!problem.empty()) j["problem"] = problem;
    return j;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Metric, fault-tolerant and k-metric dimension toolkit", "mdim"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "Emit JSON instead of tables");

    Budget budget = Budget::from_env();
    double budget_secs = budget.max_time.count();

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a graph family as an edge list");
    std::string family;
    std::size_t gen_t = 3, gen_k = 2, gen_n = 5;
    std::string parts_text, leaves_text;
    gen->add_option("--family", family, "mt | mtk | multipartite | path | spine")
        ->required()
        ->check(CLI::IsMember({"mt", "mtk", "multipartite", "path", "spine"}));
    gen->add_option("--t", gen_t, "Code length for mt / mtk");
    gen->add_option("--k", gen_k, "Clique factor for mtk");
    gen->add_option("--n", gen_n, "Vertex count for path");
    gen->add_option("--parts", parts_text, "Part sizes for multipartite, e.g. 2,2,3");
    gen->add_option("--leaves", leaves_text, "Leaf counts per spine vertex, e.g. 2,2,2");

    // solve
    auto* solve = app.add_subcommand("solve", "Smallest k-resolving set");
    InputOptions solve_in;
    std::size_t solve_k = 1;
    std::string method = "exact";
    solve->add_option("graph", solve_in.path, "Edge-list file (default: standard input)");
    solve->add_option("--k", solve_k, "Fault tolerance level (1 = metric dimension)")->check(CLI::PositiveNumber);
    solve->add_option("--method", method, "exact | greedy | brute")
        ->check(CLI::IsMember({"exact", "greedy", "brute"}));
    add_budget(solve, budget, budget_secs);

    // kappa
    auto* kap = app.add_subcommand("kappa", "Largest k with a k-resolving set");
    InputOptions kappa_in;
    kap->add_option("graph", kappa_in.path, "Edge-list file (default: standard input)");

    // formula
    auto* formula = app.add_subcommand("formula", "Closed-form values and bounds");
    std::string kind;
    InputOptions formula_in;
    std::size_t f_n = 0, f_k = 1, f_dim = 1, f_t = 1;
    std::string f_parts;
    formula->add_option("--kind", kind, "tree | multipartite | path | bounds")
        ->required()
        ->check(CLI::IsMember({"tree", "multipartite", "path", "bounds"}));
    formula->add_option("graph", formula_in.path, "Tree edge list for --kind tree");
    formula->add_option("--parts", f_parts, "Part sizes for --kind multipartite");
    formula->add_option("--n", f_n, "Path order for --kind path");
    formula->add_option("--k", f_k, "k for --kind path");
    formula->add_option("--dim", f_dim, "Dimension value for --kind bounds");
    formula->add_option("--t", f_t, "Argument of the j(t) interval for --kind bounds");

    // expand
    auto* expand = app.add_subcommand("expand", "Radius-2 expansion of a vertex set");
    InputOptions expand_in;
    std::string expand_set;
    std::size_t expand_k = 0;
    expand->add_option("graph", expand_in.path, "Edge-list file (default: standard input)");
    expand->add_option("--set", expand_set, "Comma-separated vertex ids")->required();
    expand->add_option("--k", expand_k, "Also check that a k-resolving set expands to a (k+1)-resolving one");

    // certify
    auto* certify = app.add_subcommand("certify", "Pair-slack lower bound and bound checks");
    InputOptions certify_in;
    std::size_t certify_k = 1;
    std::string certify_set;
    certify->add_option("graph", certify_in.path, "Edge-list file (default: standard input)");
    certify->add_option("--k", certify_k, "k of the lower bound")->check(CLI::PositiveNumber);
    certify->add_option("--set", certify_set,
                        "Also run ball-growth and near-distinguisher checks on this k-resolving set");

    // verify
    auto* verify = app.add_subcommand("verify", "Run a named verification suite");
    std::string suite;
    SuiteOptions so;
    std::string suite_list;
    for (const auto& name : suite_names()) suite_list += (suite_list.empty() ? "" : " | ") + name;
    verify->add_option("--suite", suite, suite_list)->required();
    verify->add_option("--seed", so.seed, "Random seed");
    verify->add_option("--t-max", so.t_max, "ft-mt: largest t");
    verify->add_flag("--allow-t5", so.allow_t5, "ft-mt: permit t = 5");
    verify->add_option("--t", so.t, "mtk: code length");
    verify->add_option("--k", so.k, "mtk: k");
    verify->add_option("--n-max", so.n_max, "Largest instance order");
    verify->add_option("--samples", so.samples, "Random instance count");
    verify->add_option("--subsets", so.subsets, "equivalence: random subsets per graph");
    verify->add_flag("--timing", so.timing, "Record per-check wall time (reports stop being byte-stable)");
    add_budget(verify, budget, budget_secs);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    budget.max_time = std::chrono::duration<double>(budget_secs);

    try {
        if (*gen) {
            LabeledGraph lg = [&] {
                if (family == "mt") return gen_mt(gen_t);
                if (family == "mtk") return gen_mtk(gen_t, gen_k);
                if (family == "multipartite") return gen_complete_multipartite(parse_list(parts_text, "--parts"));
                if (family == "path") return gen_path(gen_n);
                return gen_spine_tree(parse_list(leaves_text, "--leaves"));
            }();
            out << "# family " << lg.family;
            for (const auto& [key, value] : lg.params) out << ' ' << key << '=' << value;
            out << '\n' << serialize_graph(lg.graph);
            return kExitOk;
        }

        if (*solve) {
            const Graph g = solve_in.load(in);
            SolveResult r;
            if (method == "brute") {
                r = brute_force_min(g, solve_k);
            } else {
                const auto pd = distinguisher_table(all_pairs_distances(g));
                r = method == "greedy" ? solve_greedy(pd, solve_k) : solve_exact(pd, solve_k, budget);
            }
            if (json) {
                out << solve_json(g, solve_k, method, r).dump(2) << '\n';
            } else {
                out << "k " << solve_k << " (" << method << ")\n"
                    << "size " << r.size << " [" << to_string(r.status) << "]\n"
                    << "set " << labelled(g, r.set) << '\n'
                    << "nodes " << r.nodes_explored << ", lower bound " << r.lower_bound_at_exit << '\n';
            }
            return kExitOk;
        }

        if (*kap) {
            const Graph g = kappa_in.load(in);
            const auto value = kappa(distinguisher_table(all_pairs_distances(g)));
            if (json)
                out << Json{{"schema", kReportSchema}, {"n", g.order()}, {"kappa", value}}.dump(2) << '\n';
            else
                out << "kappa " << value << '\n';
            return kExitOk;
        }

        if (*formula) {
            Json j;
            j["kind"] = kind;
            if (kind == "tree") {
                const auto inv = tree_invariants(formula_in.load(in));
                j["a"] = inv.params.a;
                j["b"] = inv.params.b;
                j["c"] = inv.params.c;
                j["is_path"] = inv.params.is_path;
                j["dim"] = inv.dim;
                j["ftdim"] = inv.ftdim;
            } else if (kind == "multipartite") {
                const auto cf = multipartite_invariants(parse_list(f_parts, "--parts"));
                j["dim"] = cf.dim;
                j["ftdim"] = cf.ftdim;
            } else if (kind == "path") {
                j["n"] = f_n;
                j["k"] = f_k;
                j["dim_k"] = path_dim_k(f_n, f_k);
            } else {
                const auto b = theoretical_bounds(f_dim, f_t);
                j["dim"] = f_dim;
                j["t"] = f_t;
                // strings: values outgrow 64 bits quickly
                j["ft_upper"] = b.ft_upper.str();
                j["k_upper"] = b.k_upper.str();
                j["jt_low"] = b.jt_low.str();
                j["jt_high"] = b.jt_high.str();
            }
            if (json) {
                out << j.dump(2) << '\n';
            } else {
                for (auto it = j.begin(); it != j.end(); ++it) {
                    out << it.key() << ' ';
                    if (it->is_string())
                        out << it->get<std::string>();
                    else
                        out << it->dump();
                    out << '\n';
                }
            }
            return kExitOk;
        }

        if (*expand) {
            const Graph g = expand_in.load(in);
            const auto dm = all_pairs_distances(g);
            const auto s = parse_set(expand_set, g.order());
            const auto expanded = expand_radius2(dm, s);
            Json j;
            j["set"] = set_json(s);
            j["expanded"] = set_json(expanded);
            j["size"] = expanded.size();
            j["size_bound"] = expansion_bound(s.size()).str();
            bool ok = true;
            if (expand_k > 0) {
                const auto pd = distinguisher_table(dm);
                const bool input_ok = is_k_resolving(pd, s, expand_k);
                const bool lifted = is_k_resolving(pd, expanded, expand_k + 1);
                j["k"] = expand_k;
                j["input_k_resolving"] = input_ok;
                j["kappa"] = kappa(pd);
                j["expanded_k_plus_1_resolving"] = lifted;
                ok = !input_ok || kappa(pd) < expand_k + 1 || lifted;
            }
            if (json) {
                out << j.dump(2) << '\n';
            } else {
                out << "expanded " << labelled(g, expanded) << " (" << expanded.size() << " vertices, bound "
                    << j["size_bound"].get<std::string>() << ")\n";
                if (expand_k > 0)
                    out << "expanded set is " << (j["expanded_k_plus_1_resolving"].get<bool>() ? "" : "not ")
                        << (expand_k + 1) << "-resolving\n";
            }
            return ok ? kExitOk : kExitCheckFailed;
        }

        if (*certify) {
            const Graph g = certify_in.load(in);
            const auto dm = all_pairs_distances(g);
            const auto pd = distinguisher_table(dm);
            const auto cert = lower_bound_pair_slack(pd, certify_k);
            const auto problem = verify_certificate(pd, cert);
            Json j = certificate_json(cert, problem);
            bool ok = problem.empty();
            if (!certify_set.empty()) {
                const auto s = parse_set(certify_set, g.order());
                Json ball = Json::array();
                for (std::size_t d = 1; d <= 3; ++d)
                    for (const auto& v : check_ball_growth(dm, pd, s, d)) {
                        ball.push_back({{"center", v.center}, {"d", d}, {"ball", v.ball_size}, {"bound", v.bound.str()}});
                        ok = false;
                    }
                Json near = Json::array();
                for (const auto& v : check_near_distinguisher(pd, dm, s, certify_k)) {
                    near.push_back({{"x", v.pair.first}, {"y", v.pair.second}, {"near", v.near_distinguishers},
                                    {"required", v.required}});
                    ok = false;
                }
                j["ball_growth_violations"] = std::move(ball);
                j["near_distinguisher_violations"] = std::move(near);
            }
            if (json) {
                out << j.dump(2) << '\n';
            } else {
                out << "lower bound " << cert.bound << " for k=" << cert.k << " from " << cert.pairs.size()
                    << " disjoint pairs" << (problem.empty() ? "" : " (INVALID: " + problem + ")") << '\n';
                for (const auto& e : cert.pairs)
                    out << "  (" << e.pair.first << "," << e.pair.second << ") outside " << e.outside << " demand "
                        << e.demand << '\n';
                if (j.contains("ball_growth_violations"))
                    out << "ball growth violations " << j["ball_growth_violations"].size()
                        << ", near-distinguisher violations " << j["near_distinguisher_violations"].size() << '\n';
            }
            return ok ? kExitOk : kExitCheckFailed;
        }

        if (*verify) {
            so.budget = budget;
            const auto report = run_suite(suite, so);
            if (json)
                out << report_json(report).dump(2) << '\n';
            else
                out << render_table(report);
            return report.ok() ? kExitOk : kExitCheckFailed;
        }
    } catch (const ParseError& e) {
        err << "mdim: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConnectivityError& e) {
        err << "mdim: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "mdim: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "mdim: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "mdim: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        err << "mdim: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace mdim

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "mdim/families.hpp"
#include "mdim/harness.hpp"
#include "mdim/metric.hpp"
#include "mdim/solver.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace mdim;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
};

PairDistinguishers table(const Graph& g) { return distinguisher_table(all_pairs_distances(g)); }

Outcome ft_mt() {
    const std::array<std::size_t, 4> dims{1, 2, 3, 4}, ftdims{2, 4, 7, 12};
    Outcome o;
    std::ostringstream d;
    for (std::size_t t = 1; t <= 4; ++t) {
        const auto pd = table(gen_mt(t).graph);
        const auto dim = solve_exact(pd, 1);
        const auto ft = solve_exact(pd, 2);
        const bool ok = dim.size == dims[t - 1] && ft.size == ftdims[t - 1] && dim.status == SolveStatus::optimal &&
                        ft.status == SolveStatus::optimal;
        o.pass = o.pass && ok;
        d << "M_" << t << " " << dim.size << "/" << ft.size << (ok ? "" : "(!)") << " ";
    }
    o.detail = d.str();
    return o;
}

Outcome mtk() {
    Outcome o;
    std::ostringstream d;
    const std::array<std::pair<std::size_t, std::size_t>, 4> params{{{6, 2}, {7, 2}, {7, 3}, {8, 2}}};
    for (auto [t, k] : params) {
        const auto pd = table(gen_mtk(t, k).graph);
        const bool resolving = is_k_resolving(pd, apex_set(t, k), k);
        const auto cert = lower_bound_pair_slack(pd, k + 1);
        const bool bound_ok = cert.bound >= (std::size_t{1} << (t - 1));
        const bool cert_ok = verify_certificate(pd, cert).empty();
        o.pass = o.pass && resolving && bound_ok && cert_ok;
        d << "(" << t << "," << k << ") V_2 " << (resolving ? "ok" : "FAIL") << " bound " << cert.bound
          << (bound_ok && cert_ok ? "" : "(!)") << "; ";
    }
    const auto brute = brute_force_min(gen_mtk(3, 2).graph, 2);
    const bool pinned = brute.size == kFtdimM32 && brute.status == SolveStatus::optimal;
    o.pass = o.pass && pinned;
    d << "dim_2(M_3,2) = " << brute.size << (pinned ? "" : "(!)");
    o.detail = d.str();
    return o;
}

Outcome suite(const std::string& name) {
    SuiteOptions options;
    const auto r = run_suite(name, options);
    Outcome o{r.ok(), std::to_string(r.passed()) + "/" + std::to_string(r.checks.size()) + " checks"};
    for (const auto& c : r.checks)
        if (!c.pass) {
            o.detail += "; first failure " + c.id + ": expected " + c.expected + ", observed " + c.observed;
            break;
        }
    return o;
}

std::string capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    status = ::pclose(pipe);
    return out;
}

Outcome determinism() {
    const std::string cmd = std::string("\"") + MDIM_CLI_PATH + "\" verify --suite ft-mt --t-max 3 --json --seed 7";
    int s1 = 0, s2 = 0;
    const auto first = capture(cmd, s1);
    const auto second = capture(cmd, s2);
    const bool ok = s1 == 0 && s2 == 0 && !first.empty() && first == second;
    return {ok, std::to_string(first.size()) + " bytes, " + (first == second ? "identical" : "different") +
                    ", exit " + std::to_string(s1) + "/" + std::to_string(s2)};
}

struct Criterion {
    const char* name;
    double limit_s; // 0: no stated limit
    std::function<Outcome()> run;
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {"1 dim/ftdim of M_1..M_4", 60, ft_mt},
        {"2 M_{t,k} apex set and pair-slack certificates", 120, mtk},
        {"3 tree formulas", 120, [] { return suite("trees"); }},
        {"4 complete multipartite formulas", 120, [] { return suite("multipartite"); }},
        {"5 path formula", 0, [] { return suite("paths"); }},
        {"6 radius-2 expansion and ball bounds", 300, [] { return suite("expansion"); }},
        {"7 multicover vs definitional equivalence", 0, [] { return suite("equivalence"); }},
        {"8 byte-identical reports", 0, determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        const bool in_time = c.limit_s == 0 || secs < c.limit_s;
        const bool pass = o.pass && in_time;
        failures += !pass;
        std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.name << "  [" << o.detail << "]  " << secs
                  << " s";
        if (c.limit_s > 0) std::cout << " (limit " << c.limit_s << " s" << (in_time ? "" : ", EXCEEDED") << ")";
        std::cout << std::endl;
    }
    std::cout << (failures ? "acceptance: FAILED" : "acceptance: all criteria pass") << std::endl;
    return failures ? 1 : 0;
}

#include "helpers.hpp"
#include "mdim/bounds.hpp"
#include "mdim/families.hpp"
#include "mdim/formulas.hpp"
#include "mdim/harness.hpp"
#include "mdim/metric.hpp"
#include "mdim/solver.hpp"

#include <doctest.h>

#include <random>

using namespace mdim;
using testing_support::path;

TEST_CASE("radius-2 expansion") {
    const auto p5 = all_pairs_distances(path(5));
    CHECK(expand_radius2(p5, VertexSet(5, {2})) == VertexSet::full(5));
    CHECK(expand_radius2(p5, VertexSet(5, {0})) == VertexSet(5, {0, 1, 2}));
    CHECK(expand_radius2(p5, VertexSet::full(5)) == VertexSet::full(5));

    const auto m3 = all_pairs_distances(gen_mt(3).graph);
    CHECK(expand_radius2(m3, apex_set(3)) == VertexSet::full(11));

    CHECK_THROWS_AS(expand_radius2(p5, VertexSet(5)), std::invalid_argument);
}

TEST_CASE("ball growth") {
    const auto p9 = all_pairs_distances(path(9));
    const auto pd9 = distinguisher_table(p9);
    CHECK(check_ball_growth(p9, pd9, VertexSet(9, {0}), 2).empty());

    const auto m3 = all_pairs_distances(gen_mt(3).graph);
    CHECK(check_ball_growth(m3, distinguisher_table(m3), apex_set(3), 2).empty());

    const auto c4 = all_pairs_distances(testing_support::cycle(4));
    CHECK(check_ball_growth(c4, distinguisher_table(c4), VertexSet(4, {0, 1}), 1).empty());

    // The middle of P_9 does not resolve it.
    CHECK_THROWS_AS(check_ball_growth(p9, pd9, VertexSet(9, {4}), 1), PreconditionError);
}

TEST_CASE("near distinguishers") {
    const auto p6 = all_pairs_distances(path(6));
    const auto pd6 = distinguisher_table(p6);
    CHECK(check_near_distinguisher(pd6, p6, VertexSet(6, {0}), 1).empty());

    const auto m3 = all_pairs_distances(gen_mt(3).graph);
    const auto pd3 = distinguisher_table(m3);
    CHECK(check_near_distinguisher(pd3, m3, parity_ft_set(3), 2).empty());

    CHECK(check_near_distinguisher(pd6, p6, VertexSet::full(6), 1).empty());

    // kappa(C_4) = 2, so k = 2 leaves no room for k + 1.
    const auto c4 = all_pairs_distances(testing_support::cycle(4));
    CHECK_THROWS_AS(check_near_distinguisher(distinguisher_table(c4), c4, VertexSet::full(4), 2), PreconditionError);
    // {2} is not resolving for P_6.
    CHECK_THROWS_AS(check_near_distinguisher(pd6, p6, VertexSet(6, {2}), 1), PreconditionError);
}

TEST_CASE("expansion lifts k-resolving sets to (k+1)-resolving sets") {
    std::mt19937_64 rng(13);
    for (int sample = 0; sample < 40; ++sample) {
        const Graph g = random_connected_graph(5 + sample % 9, 0.35, rng);
        const auto dm = all_pairs_distances(g);
        const auto pd = distinguisher_table(dm);
        for (std::size_t k = 1; k + 1 <= kappa(pd); ++k) {
            const auto s = solve_exact(pd, k).set;
            const auto big = expand_radius2(dm, s);
            CHECK(is_k_resolving(pd, big, k + 1));
            CHECK(s.is_subset_of(big));
            CHECK(BigInt(big.size()) <= expansion_bound(s.size()));
            CHECK(check_near_distinguisher(pd, dm, s, k).empty());
            for (std::size_t d = 1; d <= 3; ++d) CHECK(check_ball_growth(dm, pd, s, d).empty());
        }
    }
}

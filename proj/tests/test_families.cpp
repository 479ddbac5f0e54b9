#include "helpers.hpp"
#include "mdim/families.hpp"
#include "mdim/formulas.hpp"
#include "mdim/metric.hpp"

#include <doctest.h>

#include <bit>

using namespace mdim;

TEST_CASE("M_t sizes and the t = 1 case") {
    const auto m1 = gen_mt(1);
    CHECK(m1.graph.edges() == testing_support::path(3).edges());
    CHECK(m1.graph.labels() == std::vector<std::string>{"0", "1", "v_1"});

    CHECK(gen_mt(2).graph.order() == 6);
    const auto m3 = gen_mt(3).graph;
    CHECK(m3.order() == 11);
    CHECK(m3.size() == 40);
    CHECK(m3.label(0b011) == "011");
    CHECK(m3.label(8) == "v_1");
    CHECK(m3.label(10) == "v_3");
    CHECK_THROWS_AS(gen_mt(0), std::invalid_argument);
}

TEST_CASE("coordinate 1 is the leftmost label character") {
    CHECK(code_bit(3, 1) == 0b100);
    CHECK(code_bit(3, 3) == 0b001);
    CHECK(code_label(3, 0b100) == "100");
    const auto m3 = gen_mt(3).graph;
    CHECK(m3.adjacent(0b100, 8));      // v_1 sees codes with a 1 in front
    CHECK_FALSE(m3.adjacent(0b011, 8));
    CHECK(m3.adjacent(0b001, 10));
}

TEST_CASE("M_{t,k} sizes") {
    const auto m32 = gen_mtk(3, 2);
    CHECK(m32.graph.order() == 14);
    CHECK(m32.graph.size() == 61);
    CHECK(m32.graph.label(8) == "v_1,1");
    CHECK(m32.graph.label(9) == "v_1,2");
    CHECK(m32.graph.label(10) == "v_2,1");
    CHECK(gen_mtk(1, 2).graph.order() == 4);
    CHECK(gen_mtk(6, 2).graph.order() == 76);
    CHECK_THROWS_AS(gen_mtk(3, 1), std::invalid_argument);
}

TEST_CASE("degrees in M_t") {
    for (std::size_t t = 1; t <= 7; ++t) {
        const auto g = gen_mt(t).graph;
        const std::size_t codes = std::size_t{1} << t;
        for (std::size_t c = 0; c < codes; ++c)
            CHECK(g.degree(static_cast<Vertex>(c)) == codes - 1 + static_cast<std::size_t>(std::popcount(c)));
        for (std::size_t i = 0; i < t; ++i) CHECK(g.degree(static_cast<Vertex>(codes + i)) == codes / 2);
    }
}

TEST_CASE("degrees in M_{t,k}") {
    for (std::size_t t = 1; t <= 6; ++t) {
        for (std::size_t k = 2; k <= 4; ++k) {
            const auto g = gen_mtk(t, k).graph;
            const std::size_t codes = std::size_t{1} << t;
            REQUIRE(g.order() == codes + t * k);
            for (std::size_t v = codes; v < g.order(); ++v)
                CHECK(g.degree(static_cast<Vertex>(v)) == (t - 1) + (k - 1) + codes / 2);
        }
    }
}

TEST_CASE("complete multipartite") {
    // K_{2,2} is the 4-cycle 0-2-1-3.
    const auto c4 = gen_complete_multipartite({2, 2}).graph;
    CHECK(c4.edges() == std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});

    const auto p3 = gen_complete_multipartite({1, 2}).graph;
    CHECK(p3.size() == 2);
    CHECK(p3.degree(0) == 2);

    const auto diamond = gen_complete_multipartite({1, 1, 2}).graph;
    CHECK(diamond.order() == 4);
    CHECK(diamond.size() == 5);
    CHECK_FALSE(diamond.adjacent(2, 3));

    CHECK_THROWS_AS(gen_complete_multipartite({3}), std::invalid_argument);
    CHECK_THROWS_AS(gen_complete_multipartite({2, 0}), std::invalid_argument);
}

TEST_CASE("paths") {
    CHECK(gen_path(2).graph.size() == 1);
    CHECK(gen_path(3).graph.edges() == testing_support::path(3).edges());
    CHECK(gen_path(5).graph.size() == 4);
    CHECK_THROWS_AS(gen_path(1), std::invalid_argument);
}

TEST_CASE("spine trees") {
    const auto t22 = gen_spine_tree({2, 2}).graph;
    CHECK(t22.order() == 6);
    const auto inv = tree_invariants(t22);
    CHECK(inv.params.a == 4);
    CHECK(inv.params.b == 2);
    CHECK(inv.params.c == 0);

    const auto claw = gen_spine_tree({3}).graph;
    CHECK(claw.order() == 4);
    CHECK(tree_invariants(claw).params.a == 3);

    CHECK(gen_spine_tree({2, 2, 2}).graph.order() == 9);
    CHECK_THROWS_AS(gen_spine_tree({2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(gen_spine_tree({}), std::invalid_argument);

    for (const std::vector<std::size_t>& counts : {std::vector<std::size_t>{2, 3, 4}, {5}, {2, 2, 2, 2}}) {
        const auto g = gen_spine_tree(counts).graph;
        std::size_t leaves = 0;
        for (Vertex v = 0; v < g.order(); ++v) leaves += g.degree(v) == 1;
        std::size_t expected = 0;
        for (auto c : counts) expected += c;
        CHECK(leaves == expected);
        CHECK(g.size() + 1 == g.order()); // connected with n-1 edges: a tree
        CHECK(is_connected(g));
    }
}

TEST_CASE("parity set") {
    const auto s3 = parity_ft_set(3);
    CHECK(s3 == VertexSet(11, {0b000, 0b011, 0b101, 0b110, 8, 9, 10}));
    CHECK(parity_ft_set(1) == VertexSet(3, {0, 2}));
    CHECK(parity_ft_set(2).size() == 4);
}

TEST_CASE("parity set is 2-resolving on M_t for t <= 8") {
    for (std::size_t t = 1; t <= 8; ++t) {
        const auto pd = distinguisher_table(all_pairs_distances(gen_mt(t).graph));
        const auto s = parity_ft_set(t);
        CHECK(s.size() == t + (std::size_t{1} << (t - 1)));
        CHECK(is_k_resolving(pd, s, 2));
    }
}

TEST_CASE("generators are deterministic") {
    CHECK(gen_mt(5).graph == gen_mt(5).graph);
    CHECK(gen_mtk(4, 3).graph == gen_mtk(4, 3).graph);
    CHECK(gen_spine_tree({2, 3}).graph == gen_spine_tree({2, 3}).graph);
    CHECK(gen_complete_multipartite({1, 2, 3}).graph == gen_complete_multipartite({1, 2, 3}).graph);
}

TEST_CASE("labels are unique") {
    for (const auto& lg : {gen_mt(4), gen_mtk(3, 3), gen_complete_multipartite({2, 3}), gen_spine_tree({2, 2})}) {
        auto labels = lg.graph.labels();
        REQUIRE(labels.size() == lg.graph.order());
        std::sort(labels.begin(), labels.end());
        CHECK(std::adjacent_find(labels.begin(), labels.end()) == labels.end());
    }
}

#include "doctest.h"
#include "lwc/oracle.hpp"
#include "lwc/tree_encoding.hpp"
#include "test_support.hpp"

#include <cmath>

using namespace lwc;

namespace {

// nine vertices, one 8-cycle with a pendant vertex; 3-tree-like
Graph nine_vertex_graph() {
    return Graph::from_edges(9, {{0, 1}, {0, 3}, {1, 4}, {1, 8}, {2, 5}, {2, 7}, {3, 7}, {4, 6}, {5, 6}});
}

}  // namespace

TEST_CASE("tree-likeness") {
    auto cyc = [](int k) {
        Graph g(k);
        for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
        return g;
    };
    CHECK(is_h_treelike(cyc(4), 1));
    CHECK_FALSE(is_h_treelike(cyc(3), 1));
    CHECK_FALSE(is_h_treelike(cyc(5), 2));
    CHECK(is_h_treelike(cyc(6), 2));
    CHECK(is_h_treelike(nine_vertex_graph(), 3));
    CHECK_FALSE(is_h_treelike(nine_vertex_graph(), 4));
    CHECK_THROWS(encode(cyc(3), 1));
}

TEST_CASE("encoding of the nine-vertex example") {
    auto G = nine_vertex_graph();
    auto enc = encode(G, 3);
    CHECK(enc.context.F.size() == 5);
    CHECK(enc.context.colors.L == 5);
    CHECK(is_valid(enc.D));
    // colourblind projection returns G
    CHECK(colorblind(enc.graph) == multigraph_of(G));
    Rng rng(1);
    CHECK(verify_treelike_encoding(G, 3, 20, rng));
}

TEST_CASE("encoded colours are the split classes") {
    Rng rng(2);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + static_cast<int>(uniform_index(rng, 8));
        auto G = testing::random_tree(n, rng);
        int h = 1 + static_cast<int>(uniform_index(rng, 3));
        auto enc = encode(G, h);
        const auto& cs = enc.context.colors;
        for (const auto& [key, w] : enc.graph.omega) {
            auto [c, u, v] = key;
            if (u == v) continue;
            CHECK(enc.context.F[static_cast<std::size_t>(cs.row(c))] == split_class(G, u, v, h - 1));
            CHECK(enc.context.F[static_cast<std::size_t>(cs.col(c))] == split_class(G, v, u, h - 1));
        }
        CHECK(verify_treelike_encoding(G, h, 3, rng));
    }
}

TEST_CASE("N_h against scanning all graphs") {
    std::vector<std::pair<Graph, int>> cases = {
        {Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}), 1},
        {Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), 1},
        {Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}), 1},
        {Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}), 2},
        {Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}), 2},
        {Graph::from_edges(6, {{0, 1}, {2, 3}, {4, 5}}), 1},
    };
    for (const auto& [G, h] : cases) CHECK(count_Nh_exact(G, h) == oracle::exact_Nh(G, h));
}

TEST_CASE("n(D) and the log estimate") {
    auto G = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    auto enc = encode(G, 1);
    CHECK(n_of_D(enc.D) == 6);  // two leaves, two degree-2 vertices
    // the estimate drops only alpha and Stirling corrections
    double exact = std::log(count_Nh_exact(G, 1).get_d());
    CHECK(std::abs(count_Nh_log_asymptotic(G, 1) - exact) < 3.0);
}

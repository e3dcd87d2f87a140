#include "doctest.h"
#include "lwc/experiments.hpp"
#include "lwc/oracle.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <numeric>

using namespace lwc;

namespace {

// cycles through brute force over ordered vertex tuples
long brute_cycles(const Multigraph& G, int l) {
    std::vector<int> idx(static_cast<std::size_t>(G.n));
    std::iota(idx.begin(), idx.end(), 0);
    long total = 0;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(pick.size()) == l) {
            auto p = pick;
            do {
                if (p[0] != pick[0]) continue;  // fix the smallest vertex first
                long w = 1;
                for (int i = 0; i < l; ++i) w *= G.at(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>((i + 1) % l)]);
                total += w;
            } while (std::next_permutation(p.begin(), p.end()));
            return;
        }
        for (int v = start; v < G.n; ++v) {
            pick.push_back(v);
            rec(v + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return total / 2;
}

}  // namespace

TEST_CASE("cycle counting matches brute force") {
    Rng rng(9);
    for (int t = 0; t < 30; ++t) {
        auto D = regular_sequence(7, 3 + static_cast<int>(t % 2));
        if (!is_valid(D)) D = regular_sequence(8, 3);
        auto m = colorblind(graph_of(sample_configuration(D, rng), D));
        for (int l = 3; l <= 5; ++l) CHECK(experiments::count_cycles(m, l) == brute_cycles(m, l));
    }
    CHECK(experiments::count_cycles(multigraph_of(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})), 3) == 2);
}

TEST_CASE("parallel map is ordered and thread-count independent") {
    std::function<std::uint64_t(std::size_t)> f = [](std::size_t i) { return substream(5, i)(); };
    auto a = experiments::parallel_map<std::uint64_t>(100, 1, f);
    auto b = experiments::parallel_map<std::uint64_t>(100, 3, f);
    CHECK(a == b);
    std::function<int(std::size_t)> boom = [](std::size_t i) -> int {
        if (i == 17) throw std::runtime_error("x");
        return 0;
    };
    CHECK_THROWS(experiments::parallel_map<int>(40, 2, boom));
}

TEST_CASE("experiments are reproducible and sane") {
    auto P = testing::degrees({{3, "1"}});
    auto a = experiments::converge(P, {40}, 5, 2, 2, 11, 1);
    auto b = experiments::converge(P, {40}, 5, 2, 2, 11, 2);
    CHECK(a[0].tv == b[0].tv);
    CHECK(a[0].tv >= 0);
    CHECK(a[0].tv <= 1);
    auto c = experiments::cycles(60, 3, 20, 4, 2, 1);
    CHECK(c.rows.size() == 4);
    CHECK(c.rows[2].intensity == doctest::Approx(4.0 / 3.0));
    auto k = experiments::concentrate(3, {50}, 10, 1, 1);
    CHECK(k.delta == doctest::Approx(1.0 / 192));
    for (const auto& t : k.rows[0].tail) CHECK(t.envelope <= 2);
    CHECK_THROWS(experiments::sequence_for(testing::degrees({{2, "1/3"}, {3, "2/3"}}), 10));
    CHECK(experiments::sequence_for(testing::degrees({{2, "1/2"}, {3, "1/2"}}), 8).n() == 8);
}

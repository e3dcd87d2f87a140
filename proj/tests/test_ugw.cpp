#include "doctest.h"
#include "lwc/oracle.hpp"
#include "lwc/ugw.hpp"
#include "test_support.hpp"

using namespace lwc;

namespace {

std::vector<ExactLaw> depth_two_zoo() {
    std::vector<ExactLaw> out;
    // neighbourhood laws of finite trees and forests
    out.push_back(empirical_distribution(Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}), 2));
    out.push_back(empirical_distribution(Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}}), 2));
    out.push_back(empirical_distribution(Graph::from_edges(7, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {5, 6}}), 2));
    // a cycle long enough to look like a tree at depth 2
    out.push_back(empirical_distribution(Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}), 2));
    out.push_back(marginal_ugw(testing::degrees({{1, "1/2"}, {2, "1/2"}}), 2));
    out.push_back(marginal_ugw(testing::degrees({{0, "1/4"}, {1, "1/4"}, {3, "1/2"}}), 2));
    return out;
}

template <class W>
Law<W> sampled_law(const Law<W>& P, int k, int samples, std::uint64_t seed) {
    UgwSampler s(P);
    Rng rng(seed);
    std::map<CanonicalClass, long> counts;
    for (int i = 0; i < samples; ++i) ++counts[canonicalize(s.sample(k, rng), k)];
    Law<W> out;
    out.depth = k;
    for (auto [c, m] : counts) out.p[c] = W(static_cast<double>(m) / samples);
    return out;
}

}  // namespace

TEST_CASE("size-biased law") {
    auto P = testing::degrees({{1, "1/3"}, {2, "1/3"}, {3, "1/3"}});
    auto hat = size_biased(P);
    // d = 2: k -> (k+1) P(k+1) / 2
    CHECK(hat.mass(star(0)) == Rational(1, 6));
    CHECK(hat.mass(star(1)) == Rational(1, 3));
    CHECK(hat.mass(star(2)) == Rational(1, 2));
    auto T = typed_branching_law(P);
    REQUIRE(T.hat.size() == 1);
    CHECK(T.hat.begin()->second.p == hat.p);
    CHECK(hat_P_tt(P, isolated_root(0), isolated_root(0)).p == hat.p);
}

TEST_CASE("branching laws are probability laws and reject asymmetric e_P") {
    for (const auto& P : testing::degree_law_zoo()) {
        if (mean_degree(P) == 0) continue;
        for (const auto& [key, law] : typed_branching_law(P).hat) CHECK(total_mass(law) == 1);
    }
    for (const auto& P : depth_two_zoo()) {
        REQUIRE(is_admissible(P));
        for (const auto& [key, law] : typed_branching_law(P).hat) {
            CHECK(total_mass(law) == 1);
            for (const auto& [tau, w] : law.p) CHECK(truncate(tau, 1) == key.first);
        }
    }
    // root of degree 2 whose neighbours are leaves, with nothing on the other side
    ExactLaw bad;
    bad.depth = 2;
    bad.add(make_tree({star(0), star(0)}, 2), Rational(1));
    CHECK_FALSE(is_admissible(bad));
    CHECK_THROWS_AS(typed_branching_law(bad), std::invalid_argument);
}

TEST_CASE("marginal matches the brute-force process") {
    for (const auto& P : testing::degree_law_zoo()) {
        if (mean_degree(P) == 0) continue;
        CHECK(marginal_ugw(P, 2).p == oracle::brute_ugw_marginal(P, 2).p);
    }
    for (const auto& P : depth_two_zoo()) CHECK(marginal_ugw(P, 3).p == oracle::brute_ugw_marginal(P, 3).p);
    auto P = testing::degrees({{1, "1/2"}, {2, "1/2"}});
    CHECK(marginal_ugw(P, 3).p == oracle::brute_ugw_marginal(P, 3).p);
}

TEST_CASE("marginal invariants") {
    for (const auto& P : testing::degree_law_zoo()) {
        if (mean_degree(P) == 0) continue;
        auto Q = marginal_ugw(P, 3);
        CHECK(total_mass(Q) == 1);
        CHECK(is_admissible(Q));
        CHECK(truncate_law(Q, 1).p == P.p);
        CHECK(mean_degree(Q) == mean_degree(P));
        CHECK(consistency_check(P, 2));
        CHECK(edge_law_identity(P));
        CHECK(edge_law_identity(marginal_ugw(P, 2)));
    }
    for (const auto& P : depth_two_zoo()) {
        CHECK(edge_law_identity(P));
        CHECK(truncate_law(marginal_ugw(P, 3), 2).p == P.p);
    }
}

TEST_CASE("regular tree is a fixed point") {
    auto P = testing::degrees({{3, "1"}});
    auto Q = marginal_ugw(P, 3);
    REQUIRE(Q.size() == 1);
    CHECK(encoding(Q.p.begin()->first) == "(((()())(()()))((()())(()()))((()())(()())))");
}

TEST_CASE("float laws agree with exact ones") {
    auto P = testing::degrees({{1, "1/3"}, {2, "1/3"}, {3, "1/3"}});
    auto exact = to_float(marginal_ugw(P, 3));
    auto approx = marginal_ugw(to_float(P), 3);
    CHECK(tv_distance(exact, approx) < 1e-14);
}

TEST_CASE("sampler reproduces the marginal") {
    auto P = testing::degrees({{1, "1/3"}, {2, "1/3"}, {3, "1/3"}});
    auto target = marginal_ugw(P, 3);
    CHECK(tv_distance(sampled_law(P, 3, 40000, 1), target) < 0.03);
    auto P2 = depth_two_zoo()[1];
    CHECK(tv_distance(sampled_law(P2, 3, 40000, 2), marginal_ugw(P2, 3)) < 0.03);
    // same seed, same trees
    UgwSampler s(P);
    Rng a(5), b(5);
    for (int i = 0; i < 20; ++i) CHECK(canonicalize(s.sample(4, a), 4) == canonicalize(s.sample(4, b), 4));
}

TEST_CASE("single-colour coloured sampler is the plain sampler") {
    ColoredOffspringLaw<Rational> C;
    C.colors.L = 1;
    C.p[{1}] = Rational(1, 3);
    C.p[{2}] = Rational(1, 3);
    C.p[{3}] = Rational(1, 3);
    auto P = testing::degrees({{1, "1/3"}, {2, "1/3"}, {3, "1/3"}});
    Rng rng(3);
    std::map<CanonicalClass, long> counts;
    const int N = 40000;
    for (int i = 0; i < N; ++i) {
        auto t = sample_ugw_colored(C, 2, rng);
        for (auto& e : t.edges) e.color_uv = e.color_vu = -1;
        ++counts[canonicalize(t, 2)];
    }
    FloatLaw emp;
    emp.depth = 2;
    for (auto [c, m] : counts) emp.p[c] = static_cast<double>(m) / N;
    CHECK(tv_distance(emp, marginal_ugw(P, 2)) < 0.02);
}

TEST_CASE("coloured hat law") {
    ColoredOffspringLaw<Rational> C;
    C.colors.L = 2;
    // colours (0,0)=0 (0,1)=1 (1,0)=2 (1,1)=3
    C.p[{0, 1, 1, 0}] = Rational(1, 2);
    C.p[{2, 0, 0, 1}] = Rational(1, 2);
    auto h1 = colored_hat(C, 1);  // arrives through (0,1): remove one (1,0)
    CHECK(h1.p.size() == 1);
    CHECK(h1.p.at({0, 1, 0, 0}) == 1);
    auto h0 = colored_hat(C, 0);
    CHECK(h0.p.at({1, 0, 0, 1}) == 1);
    auto h3 = colored_hat(C, 3);
    CHECK(h3.p.at({2, 0, 0, 0}) == 1);
    ColoredOffspringLaw<Rational> Z;
    Z.colors.L = 2;
    Z.p[{2, 0, 0, 0}] = 1;
    CHECK(colored_hat(Z, 1).p.at({0, 0, 0, 0}) == 1);
}

TEST_CASE("bipartite sampler with equal sides is the plain sampler") {
    auto P = testing::degrees({{2, "1/2"}, {3, "1/2"}});
    Rng rng(8);
    std::map<CanonicalClass, long> counts;
    const int N = 40000;
    for (int i = 0; i < N; ++i) ++counts[canonicalize(sample_ugw_bipartite(P, P, 2, rng).tree, 2)];
    FloatLaw emp;
    emp.depth = 2;
    for (auto [c, m] : counts) emp.p[c] = static_cast<double>(m) / N;
    CHECK(tv_distance(emp, marginal_ugw(P, 2)) < 0.02);
    auto t = sample_ugw_bipartite(testing::degrees({{2, "1"}}), testing::degrees({{3, "1"}}), 3, rng);
    for (const auto& e : t.tree.edges) CHECK(t.side[static_cast<std::size_t>(e.u)] != t.side[static_cast<std::size_t>(e.v)]);
}

#include "lwc/entropy.hpp"
#include "test_support.hpp"

#include "doctest.h"

#include <cmath>

using namespace lwc;
using lwc::testing::degrees;

namespace {

// independent J_1 from the degree law alone
double j1_from_degrees(const std::map<int, double>& P) {
    double d = 0, h = 0, lf = 0;
    for (auto [k, p] : P) {
        d += k * p;
        if (p > 0) h -= p * std::log(p);
        lf += p * std::lgamma(k + 1.0);
    }
    double s = d == 0 ? 0 : d / 2 - d / 2 * std::log(d);
    return -s + h - lf;
}

std::vector<ExactLaw> tree_laws(int h) {
    Rng rng(77);
    std::vector<ExactLaw> out;
    for (int n : {2, 3, 5, 6, 8, 9, 12}) out.push_back(empirical_distribution(lwc::testing::random_tree(n, rng), h));
    return out;
}

}  // namespace

TEST_CASE("s(d) values") {
    CHECK(s_of_d(0) == 0);
    CHECK(s_of_d(1) == doctest::Approx(0.5));
    CHECK(s_of_d(2) == doctest::Approx(1 - std::log(2.0)).epsilon(1e-14));
    CHECK_THROWS(s_of_d(-1));
}

TEST_CASE("shannon and relative entropy basics") {
    auto P = degrees({{1, "1/2"}, {2, "1/2"}});
    CHECK(shannon(degrees({{3, "1"}})) == 0);
    CHECK(shannon(P) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(relative_entropy(P, P) == 0);
    CHECK(relative_entropy(P, degrees({{1, "1"}})) == kInf);
    CHECK(relative_entropy(degrees({{1, "1"}}), P) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("J_1 agrees with the Poisson divergence form") {
    for (const auto& P : lwc::testing::degree_law_zoo()) {
        double d = to_double(mean_degree(P));
        double a = J_h(P);
        CHECK(std::abs(a - (s_of_d(d) - relative_entropy_poisson(P, d).value)) <= 1e-12);
        std::map<int, double> m;
        for (const auto& [k, w] : degree_distribution(P)) m[k] = to_double(w);
        CHECK(std::abs(a - j1_from_degrees(m)) <= 1e-12);
        CHECK(a <= s_of_d(d) + 1e-12);
        CHECK(std::abs(a - sigma_ugw1(P)) <= 1e-12);
    }
    CHECK(std::abs(J_h(degrees({{3, "1"}})) - (-1.6438410362258904)) <= 1e-12);
}

TEST_CASE("truncated Poisson nearly attains s(d)") {
    for (double d : {0.5, 1.0, 2.0, 4.5}) {
        auto P = poisson_law(d);
        auto div = relative_entropy_poisson(P, d);
        CHECK(div.error_bound < 1e-14);
        CHECK(std::abs(J_h(P) - s_of_d(d)) <= 1e-12);
        CHECK(std::abs(rate_binomial(P, d)) <= 1e-8);
        CHECK(std::abs(rate_degree_er(P, d)) <= 1e-12);
        CHECK(std::abs(rate_fixed_edges(P, d)) <= 1e-12);
    }
}

TEST_CASE("telescoping and monotonicity on tree empirical laws") {
    for (int h : {2, 3}) {
        for (const auto& Ph : tree_laws(h)) {
            double d = to_double(mean_degree(Ph));
            double sum = 0;
            double prev = s_of_d(d);
            for (int k = 1; k <= h; ++k) {
                auto upper = truncate_law(Ph, k);
                auto lower = truncate_law(Ph, k - 1);
                double dk = delta(lower, upper);
                CHECK(dk >= -1e-12);
                sum += dk;
                double jk = J_h(upper);
                CHECK(std::abs(jk - (s_of_d(d) - sum)) <= 1e-10);
                CHECK(jk <= prev + 1e-12);
                prev = jk;
            }
        }
    }
}

TEST_CASE("UGW marginals have zero increments") {
    for (const auto& P : lwc::testing::degree_law_zoo()) {
        auto rho2 = marginal_ugw(P, 2);
        CHECK(std::abs(delta(P, rho2)) <= 1e-12);
        CHECK(std::abs(J_h(rho2) - J_h(P)) <= 1e-10);
        CHECK(std::abs(rate_fixed_degrees(rho2, P)) <= 1e-10);
    }
}

TEST_CASE("a non-UGW depth-2 law has a positive increment") {
    // path on 4 vertices: both endpoints see a degree-2 neighbor
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    auto rho2 = empirical_distribution(g, 2);
    auto rho1 = truncate_law(rho2, 1);
    CHECK(delta(rho1, rho2) > 0.01);
    CHECK(J_h(rho2) < J_h(rho1));
    CHECK(rate_fixed_degrees(rho2, rho1) > 0.01);
    CHECK(rate_fixed_degrees(rho2, degrees({{2, "1"}})) == kInf);
}

TEST_CASE("inadmissible and cyclic laws") {
    // point mass on a path endpoint: its degree-2 neighbor is never a root
    ExactLaw bad;
    bad.depth = 2;
    bad.add(neighborhood_classes(Graph::from_edges(3, {{0, 1}, {1, 2}}), 2)[0], Rational(1));
    REQUIRE(!is_admissible(bad));
    CHECK_THROWS(J_h(bad));
    CHECK(J_bar(bad) == -kInf);
    CHECK(rate_fixed_edges(bad, mean_degree(bad)) == kInf);
    CHECK(rate_binomial(bad, 1.0) == kInf);

    auto tri = empirical_distribution(Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}), 2);
    CHECK(is_admissible(tri));
    CHECK_THROWS(J_h(tri));
    CHECK(J_bar(tri) == -kInf);
}

TEST_CASE("rate functions") {
    auto d3 = degrees({{3, "1"}});
    CHECK(rate_fixed_edges(d3, Rational(3)) == doctest::Approx(s_of_d(3) - J_h(d3)).epsilon(1e-14));
    CHECK(rate_fixed_edges(d3, Rational(2)) == kInf);
    CHECK(rate_degree_fixed(d3, Rational(2)) == kInf);
    CHECK(rate_binomial(degrees({{0, "1"}}), 2.0) == doctest::Approx(1.0));
    for (double d : {1.0, 2.0}) {
        double lam = 3.0;
        double expect = (lam - d) / 2 - d / 2 * std::log(lam / d);
        CHECK(rate_degree_er(poisson_law(d), lam) == doctest::Approx(expect).epsilon(1e-10));
    }
    // penalty for a Poisson-shaped law at the wrong lambda
    CHECK(rate_binomial(poisson_law(2.0), 3.0) > 0.01);
    for (const auto& P : lwc::testing::degree_law_zoo()) {
        CHECK(rate_degree_fixed(P, mean_degree(P)) >= 0);
        CHECK(rate_degree_er(P, 1.5) >= 0);
        if (to_double(mean_degree(P)) > 0) CHECK(rate_binomial(P, 1.5) >= -1e-12);
    }
}

TEST_CASE("discontinuity bound") {
    auto d2 = degrees({{2, "1"}}), d3 = degrees({{3, "1"}});
    CHECK(std::abs(discontinuity_bound(d2, d3) - (-1.440794560865187)) <= 1e-12);
    for (const auto& P : {d3, degrees({{2, "1/2"}, {3, "1/2"}}), degrees({{2, "1/3"}, {4, "2/3"}})}) {
        double d = to_double(mean_degree(P));
        CHECK(std::abs(discontinuity_bound(P, P) - (J_h(P) + std::log(2.0) - d / 2 * std::log(2.0))) <= 1e-12);
    }
    CHECK_THROWS(discontinuity_bound(degrees({{1, "1/2"}, {3, "1/2"}}), d3));
}

// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include "lwc/config_model.hpp"
#include "lwc/entropy.hpp"
#include "lwc/experiments.hpp"
#include "lwc/oracle.hpp"
#include "lwc/tree_encoding.hpp"
#include "lwc/ugw.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace lwc;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

std::string fmt(double x, int prec = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    return buf;
}

// ---- 1 ----------------------------------------------------------------------

void all_sequences(int L, int n, const std::function<void(const DegreeSequence&)>& visit) {
    DegreeSequence D;
    D.colors.L = L;
    D.D.assign(static_cast<std::size_t>(n), ColorMatrix(static_cast<std::size_t>(L * L), 0));
    int cells = n * L * L;
    std::function<void(int)> rec = [&](int i) {
        if (i == cells) {
            if (is_valid(D)) visit(D);
            return;
        }
        for (int x = 0; x <= 2; ++x) {
            D.D[static_cast<std::size_t>(i / (L * L))][static_cast<std::size_t>(i % (L * L))] = x;
            rec(i + 1);
        }
    };
    rec(0);
}

void exact_counts(Outcome& o) {
    long cases = 0, outcomes = 0;
    for (int L = 1; L <= 2; ++L)
        for (int n = 1; n <= 3; ++n)
            all_sequences(L, n, [&](const DegreeSequence& D) {
                ++cases;
                long configs = 0;
                oracle::enumerate_configurations(D, [&](const Configuration&) { ++configs; });
                o.require(config_space_size(D) == configs, "configuration count");
                Rational total = 0;
                for (const auto& [H, p] : oracle::exact_cm_law(D)) {
                    ++outcomes;
                    o.require(cm_probability(D, H) == p, "cm_probability");
                    o.require(Rational(fiber_size(D, H)) == p * configs, "fiber_size");
                    total += p;
                }
                o.require(total == 1, "law sums to 1");
            });
    o.require(cases >= 200, "at least 200 sequences");
    o.detail << cases << " sequences, " << outcomes << " outcomes";
}

// ---- 2 ----------------------------------------------------------------------

void nh_counts(Outcome& o) {
    Rng rng(20);
    std::set<std::pair<std::vector<std::pair<int, int>>, int>> seen;
    std::vector<std::pair<Graph, int>> cases;
    while (cases.size() < 24) {
        int n = 3 + static_cast<int>(uniform_index(rng, 4));
        int h = 1 + static_cast<int>(uniform_index(rng, 2));
        auto G = testing::random_graph(n, 0.45, rng);
        if (G.edge_count() == 0 || G.edge_count() > 7 || !is_h_treelike(G, h)) continue;
        if (!seen.insert({G.edges(), h}).second) continue;
        cases.push_back({G, h});
    }
    int h2 = 0;
    for (const auto& [G, h] : cases) {
        h2 += h == 2;
        auto a = count_Nh_exact(G, h), b = oracle::exact_Nh(G, h);
        o.require(a == b, "N_h mismatch on n=" + std::to_string(G.n) + " h=" + std::to_string(h));
    }
    o.detail << cases.size() << " graphs (" << h2 << " at h=2)";
}

// ---- 3 ----------------------------------------------------------------------

std::vector<ExactLaw> depth_two_laws() {
    std::vector<ExactLaw> out;
    out.push_back(empirical_distribution(Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}), 2));
    out.push_back(empirical_distribution(Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}}), 2));
    out.push_back(empirical_distribution(Graph::from_edges(7, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {5, 6}}), 2));
    out.push_back(empirical_distribution(Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}), 2));
    out.push_back(empirical_distribution(Graph::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}}), 2));
    for (const auto& P : testing::degree_law_zoo())
        if (mean_degree(P) != 0 && degree_distribution(P).rbegin()->first <= 3) out.push_back(marginal_ugw(P, 2));
    return out;
}

void ugw_marginals(Outcome& o) {
    int at12 = 0, at13 = 0, at23 = 0;
    for (const auto& P : testing::degree_law_zoo()) {
        if (mean_degree(P) == 0) continue;
        o.require(marginal_ugw(P, 2).p == oracle::brute_ugw_marginal(P, 2).p, "(1,2) marginal");
        ++at12;
        o.require(marginal_ugw(P, 3).p == oracle::brute_ugw_marginal(P, 3).p, "(1,3) marginal");
        ++at13;
        o.require(consistency_check(P, 2), "consistency (1)");
        o.require(edge_law_identity(P), "edge identity (1)");
    }
    for (const auto& P : depth_two_laws()) {
        o.require(marginal_ugw(P, 3).p == oracle::brute_ugw_marginal(P, 3).p, "(2,3) marginal");
        ++at23;
        o.require(consistency_check(P, 3), "consistency (2)");
        o.require(edge_law_identity(P), "edge identity (2)");
    }
    o.require(std::min({at12, at13, at23}) >= 10, "at least 10 laws per pair");
    o.detail << at12 << "/" << at13 << "/" << at23 << " laws at (1,2)/(1,3)/(2,3)";
}

// ---- 4 ----------------------------------------------------------------------

std::vector<ExactLaw> twenty_laws() {
    using testing::degrees;
    auto out = testing::degree_law_zoo();
    for (auto P : {degrees({{4, "1"}}), degrees({{5, "1"}}), degrees({{1, "1/3"}, {4, "2/3"}}),
                   degrees({{0, "1/5"}, {2, "2/5"}, {5, "2/5"}}), degrees({{2, "9/10"}, {6, "1/10"}}),
                   degrees({{1, "1/4"}, {2, "1/4"}, {3, "1/4"}, {4, "1/4"}}), degrees({{0, "1"}}),
                   degrees({{3, "7/8"}, {1, "1/8"}}), degrees({{2, "1/7"}, {3, "2/7"}, {4, "4/7"}})})
        out.push_back(P);
    return out;
}

void entropy_identities(Outcome& o) {
    auto laws = twenty_laws();
    double worst = 0;
    for (const auto& P : laws) {
        double d = to_double(mean_degree(P));
        double diff = std::abs(J_h(P) - (s_of_d(d) - relative_entropy_poisson(P, d).value));
        worst = std::max(worst, diff);
        o.require(diff <= 1e-12, "J_1 identity");
    }
    o.require(laws.size() >= 20, "20 laws");
    double closed = 1.5 * std::log(3.0) - 1.5 - std::log(6.0);
    double sig = sigma_ugw1(testing::degrees({{3, "1"}}));
    o.require(std::abs(sig - closed) <= 1e-12, "delta_3 closed form");

    // grid: tree neighbourhood laws and UGW marginals, depths 1..3
    std::vector<ExactLaw> grid;
    Rng rng(4);
    for (int n : {4, 6, 7, 9, 11}) grid.push_back(empirical_distribution(testing::random_tree(n, rng), 3));
    for (const auto& P : testing::degree_law_zoo())
        if (mean_degree(P) != 0 && degree_distribution(P).rbegin()->first <= 3) grid.push_back(marginal_ugw(P, 3));
    double tele = 0;
    for (const auto& top : grid) {
        double d = to_double(mean_degree(top));
        double sum = 0, prev = s_of_d(d);
        for (int k = 1; k <= 3; ++k) {
            auto upper = truncate_law(top, k);
            double dk = delta(truncate_law(top, k - 1), upper);
            o.require(dk >= -1e-12, "Delta_k >= 0");
            sum += dk;
            double jk = J_h(upper);
            tele = std::max(tele, std::abs(jk - (s_of_d(d) - sum)));
            o.require(jk <= prev + 1e-12, "J_h nonincreasing");
            prev = jk;
        }
    }
    o.require(tele <= 1e-10, "telescoping");
    o.detail << laws.size() << " laws, max J_1 gap " << fmt(worst, 3) << ", sigma(delta_3)=" << fmt(sig, 10)
             << ", telescoping gap " << fmt(tele, 3) << " over " << grid.size() << " towers";
}

// ---- 5 ----------------------------------------------------------------------

void cycle_statistics(Outcome& o) {
    auto rep = experiments::cycles(1000, 3, 2000, 4, 5, 1);
    for (const auto& r : rep.rows) {
        if (r.length < 3) continue;
        double target = std::pow(2.0, r.length) / (2.0 * r.length);
        o.require(std::abs(r.mean - target) <= 3 * r.std_error, "mean " + std::to_string(r.length) + "-cycles");
        o.detail << r.length << "-cycles " << fmt(r.mean, 4) << " +- " << fmt(r.std_error, 2) << " vs " << fmt(target, 4) << "; ";
    }
    double sigma = rep.acceptance_sigma();
    o.require(std::abs(rep.alpha_target - std::exp(-2.0)) < 1e-12, "alpha target");
    o.require(std::abs(rep.acceptance() - std::exp(-2.0)) <= 3 * sigma, "acceptance rate");
    o.detail << "simple " << fmt(rep.acceptance(), 4) << " vs " << fmt(std::exp(-2.0), 4) << " (sigma " << fmt(sigma, 2) << ")";
}

// ---- 6 ----------------------------------------------------------------------

void local_convergence(Outcome& o) {
    for (const auto& [name, P] : {std::pair{"delta3", testing::degrees({{3, "1"}})},
                                  std::pair{"uniform{2,3}", testing::degrees({{2, "1/2"}, {3, "1/2"}})}}) {
        auto rows = experiments::converge(P, {200, 800, 3200}, 200, 2, 2, 6, 1);
        o.detail << name << " TV";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            o.detail << " " << fmt(rows[i].tv, 3);
            if (i) o.require(rows[i].tv < rows[i - 1].tv, std::string(name) + " monotone");
        }
        o.require(rows.back().tv <= 0.05, std::string(name) + " TV at n=3200");
        o.detail << "; ";
    }
}

// ---- 7 ----------------------------------------------------------------------

void concentration(Outcome& o) {
    auto rep = experiments::concentrate(3, {500, 2000}, 1000, 7, 1);
    // least-squares fit of sd = C / sqrt(n)
    double num = 0, den = 0;
    for (const auto& r : rep.rows) {
        num += r.sd / std::sqrt(static_cast<double>(r.n));
        den += 1.0 / r.n;
    }
    double C = num / den;
    for (const auto& r : rep.rows) {
        double ratio = r.scale / C;
        o.require(ratio <= 2 && ratio >= 0.5, "C stable within factor 2 at n=" + std::to_string(r.n));
        o.require(r.sd <= 2 * C / std::sqrt(static_cast<double>(r.n)), "sd <= 2C/sqrt(n)");
        int worst = 0;
        for (const auto& t : r.tail) {
            if (t.empirical > t.envelope) ++worst;
        }
        o.require(worst == 0, "tail above envelope at n=" + std::to_string(r.n));
        o.detail << "n=" << r.n << " sd " << fmt(r.sd, 3) << " C_n " << fmt(r.scale, 3) << "; ";
    }
    o.detail << "fitted C " << fmt(C, 3) << ", C ratio " << fmt(rep.rows[1].scale / rep.rows[0].scale, 3) << ", delta 1/"
             << fmt(1 / rep.delta, 4);
}

// ---- 8 ----------------------------------------------------------------------

void rate_zeros(Outcome& o) {
    double worst_fd = 0;
    for (const auto& P : testing::degree_law_zoo()) {
        if (mean_degree(P) == 0) continue;
        for (int h : {2, 3}) {
            if (h == 3 && degree_distribution(P).rbegin()->first > 3) continue;
            double r = rate_fixed_degrees(marginal_ugw(P, h), P);
            worst_fd = std::max(worst_fd, std::abs(r));
        }
    }
    o.require(worst_fd <= 1e-10, "fixed-degree zero");
    double worst_er = 0, worst_bin = 0;
    for (double lam : {0.5, 1.0, 2.0, 3.5}) {
        auto Q = poisson_law(lam);
        worst_er = std::max(worst_er, std::abs(rate_degree_er(Q, lam)));
        worst_bin = std::max(worst_bin, std::abs(rate_binomial(Q, lam)));
    }
    o.require(worst_er <= 1e-12, "degree ER zero");
    o.require(worst_bin <= 1e-8, "binomial zero");

    // the 3-regular ensemble: zero at the regular tree, +inf for every other law
    auto P3 = testing::degrees({{3, "1"}});
    std::vector<ExactLaw> grid;
    for (const auto& P : twenty_laws()) {
        grid.push_back(P);
        if (mean_degree(P) != 0 && degree_distribution(P).rbegin()->first <= 4) grid.push_back(marginal_ugw(P, 2));
    }
    Rng rng(8);
    for (int n : {5, 8, 10}) grid.push_back(empirical_distribution(testing::random_tree(n, rng), 2));
    grid.push_back(marginal_ugw(P3, 2));
    grid.push_back(marginal_ugw(P3, 3));
    int zeros = 0, infinite = 0, other = 0;
    for (const auto& Q : grid) {
        double r = rate_fixed_degrees(Q, P3);
        bool regular = degree_distribution(truncate_law(Q, 1)) == degree_distribution(P3);
        if (std::isinf(r)) ++infinite;
        else if (std::abs(r) <= 1e-10) ++zeros;
        else ++other;
        o.require(regular ? std::abs(r) <= 1e-10 : r == kInf, "dichotomy");
    }
    o.require(other == 0, "values other than 0 and +inf");
    o.detail << "fixed-degree max " << fmt(worst_fd, 3) << ", ER max " << fmt(worst_er, 3) << ", binomial max "
             << fmt(worst_bin, 3) << "; 3-regular: " << zeros << " zero, " << infinite << " infinite of " << grid.size();
}

// ---- 9 ----------------------------------------------------------------------

void discontinuity(Outcome& o) {
    auto P = testing::degrees({{2, "1/2"}, {3, "1/2"}});
    double d = to_double(mean_degree(P));
    double sigma = sigma_ugw1(P);
    double limit = sigma - (d / 2 - 1) * std::log(2.0);
    o.detail << "Sigma(UGW_1(P)) " << fmt(sigma, 8) << ", limit " << fmt(limit, 8) << "; n: bound(+) bound(-) gap to Sigma";
    // the 0.01 margin is a large-n statement; small n only has to stay below Sigma
    for (int n : {10, 100, 1000, 10000}) {
        Rational e(1, 2 * n);
        ExactLaw plus = degree_law(std::map<int, Rational>{{2, Rational(1, 2) + e}, {3, Rational(1, 2) - e}});
        ExactLaw minus = degree_law(std::map<int, Rational>{{2, Rational(1, 2) - e}, {3, Rational(1, 2) + e}});
        double bp = discontinuity_bound(P, plus), bm = discontinuity_bound(P, minus);
        for (double b : {bp, bm}) {
            o.require(b < sigma, "bound below Sigma at n=" + std::to_string(n));
            if (n >= 100) {
                o.require(b < limit + 0.01, "bound below limit + 0.01 at n=" + std::to_string(n));
                o.require(std::abs(b - limit) < 0.01, "bound near the limit at n=" + std::to_string(n));
            }
        }
        o.detail << " | " << n << ": " << fmt(bp, 7) << " " << fmt(bm, 7) << " " << fmt(sigma - std::max(bp, bm), 5);
    }
    o.require(std::abs(discontinuity_bound(P, P) - limit) <= 1e-12, "P1 = P2 identity");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        void (*run)(Outcome&);
    };
    const Criterion all[] = {
        {1, "exact counts", exact_counts},       {2, "N_h counting", nh_counts},
        {3, "UGW marginals", ugw_marginals},     {4, "entropy identities", entropy_identities},
        {5, "cycle statistics", cycle_statistics}, {6, "local convergence", local_convergence},
        {7, "concentration", concentration},     {8, "rate-function zeros", rate_zeros},
        {9, "discontinuity", discontinuity},
    };
    int failed = 0;
    for (const auto& c : all) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !o.pass;
        std::printf("%s %d %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.str().c_str());
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}

#pragma once

#include "lwc/neighborhood.hpp"
#include "lwc/ugw.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace lwc {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// d/2 - (d/2) log d, with s(0) = 0
inline double s_of_d(double d) {
    if (d < 0) throw std::invalid_argument("s(d): negative d");
    return d == 0 ? 0.0 : d / 2 - d / 2 * std::log(d);
}

inline double xlogx(double x) { return x > 0 ? x * std::log(x) : 0.0; }

template <class Map>
double shannon_of(const Map& m) {
    double h = 0;
    for (const auto& [k, w] : m) h -= xlogx(to_double(w));
    return h;
}

template <class W>
double shannon(const Law<W>& P) {
    return shannon_of(P.p);
}

// sum p log(p/q); +inf unless p << q
template <class Map>
double relative_entropy_of(const Map& P, const Map& Q) {
    double h = 0;
    for (const auto& [k, w] : P) {
        double p = to_double(w);
        if (p <= 0) continue;
        auto it = Q.find(k);
        double q = it == Q.end() ? 0.0 : to_double(it->second);
        if (q <= 0) return kInf;
        h += p * std::log(p / q);
    }
    return h;
}

template <class W>
double relative_entropy(const Law<W>& P, const Law<W>& Q) {
    if (P.depth != Q.depth) throw std::invalid_argument("relative_entropy: depth mismatch");
    return relative_entropy_of(P.p, Q.p);
}

struct PoissonDivergence {
    double value = 0;
    // mass of P cut off by truncation, if any; the value ignores it
    double error_bound = 0;
};

// H(P | Poi(d)) for a law on degrees, reference pmf in closed form on supp P
template <class W>
PoissonDivergence relative_entropy_poisson(const Law<W>& P, double d) {
    if (P.depth != 1) throw std::invalid_argument("relative_entropy_poisson: needs a depth-1 law");
    PoissonDivergence out;
    for (const auto& [k, w] : degree_distribution(P)) {
        double p = to_double(w);
        if (p <= 0) continue;
        double lq = log_poisson_pmf(d, k);
        if (!std::isfinite(lq)) {
            out.value = kInf;
            return out;
        }
        out.value += p * (std::log(p) - lq);
    }
    out.error_bound = P.truncated_mass;
    return out;
}

struct EntropyTerms {
    double value = 0;
    double d = 0;
    double minus_s = 0;        // -s(d)
    double shannon = 0;        // H(P)
    double pi_term = 0;        // -(d/2) H(pi_P)
    double log_factorial = 0;  // -sum E_P[log E_h(s,s')!]
};

// J_h(P) = -s(d) + H(P) - (d/2) H(pi_P) - sum_{(s,s')} E_P[log E_h(s,s')!]
template <class W>
bool tree_supported(const Law<W>& P) {
    for (const auto& [c, w] : P.p)
        if (!is_tree(c)) return false;
    return true;
}

template <class W>
bool same_mean(const W& a, const W& b) {
    if constexpr (is_exact_v<W>) return a == b;
    else return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b));
}

template <class W>
EntropyTerms J_h_terms(const Law<W>& P) {
    if (P.depth < 1) throw std::invalid_argument("J_h: depth must be >= 1");
    if (!tree_supported(P)) throw std::invalid_argument("J_h: law charges a class with a cycle");
    if (!is_admissible(P)) throw std::invalid_argument("J_h: law is not admissible");
    EntropyTerms t;
    t.d = to_double(mean_degree(P));
    t.minus_s = -s_of_d(t.d);
    t.shannon = shannon(P);
    if (t.d > 0) t.pi_term = -t.d / 2 * shannon_of(pi_law(P));
    for (const auto& [g, w] : P.p) {
        double s = 0;
        for (const auto& e : edge_types(g, P.depth)) s += log_factorial(static_cast<double>(e.count));
        t.log_factorial -= to_double(w) * s;
    }
    t.value = t.minus_s + t.shannon + t.pi_term + t.log_factorial;
    return t;
}

template <class W>
double J_h(const Law<W>& P) {
    return J_h_terms(P).value;
}

// J_h, or -inf off the admissible set
template <class W>
double J_bar(const Law<W>& P) {
    return is_admissible(P) && tree_supported(P) ? J_h(P) : -kInf;
}

// entropy of UGW_1(P): s(d) - H(P | Poi(d))
template <class W>
double sigma_ugw1(const Law<W>& P) {
    double d = to_double(mean_degree(P));
    return s_of_d(d) - relative_entropy_poisson(P, d).value;
}

struct DeltaTerms {
    double value = 0;
    double law_term = 0;   // H(rho_k | rho_k*)
    double edge_term = 0;  // (d/2) H(pi_{rho_k} | pi_{rho_k*})
};

// increment between consecutive marginals; upper.depth == lower.depth + 1
template <class W>
DeltaTerms delta_terms(const Law<W>& lower, const Law<W>& upper) {
    if (upper.depth != lower.depth + 1) throw std::invalid_argument("delta: marginals must be consecutive");
    if (!laws_equal(truncate_law(upper, lower.depth), lower, 1e-12))
        throw std::invalid_argument("delta: upper marginal does not truncate to the lower one");
    DeltaTerms t;
    double d = to_double(mean_degree(upper));
    if (upper.depth == 1) {
        t.law_term = relative_entropy_poisson(upper, d).value;
        t.value = t.law_term;
        return t;
    }
    auto star_law = marginal_ugw(lower, upper.depth);
    t.law_term = relative_entropy(upper, star_law);
    if (d > 0) t.edge_term = d / 2 * relative_entropy_of(pi_law(upper), pi_law(star_law));
    t.value = t.law_term - t.edge_term;
    return t;
}

template <class W>
double delta(const Law<W>& lower, const Law<W>& upper) {
    return delta_terms(lower, upper).value;
}

// rate for CM with degree law P: J_1(P) - J_h(Q) when Q_1 = P, else +inf
template <class W>
double rate_fixed_degrees(const Law<W>& Q, const Law<W>& P) {
    if (!is_admissible(Q) || !tree_supported(Q)) return kInf;
    if (!laws_equal(truncate_law(Q, 1), P, 1e-12)) return kInf;
    return J_h(P) - J_h(Q);
}

// rate for uniform graphs with dn/2 edges: s(d) - J_h(Q) when the mean degree is d
template <class W>
double rate_fixed_edges(const Law<W>& Q, const W& d) {
    if (!is_admissible(Q) || !tree_supported(Q)) return kInf;
    if (!same_mean(mean_degree(Q), d)) return kInf;
    return s_of_d(to_double(d)) - J_h(Q);
}

// rate for G(n, lambda/n): lambda/2 - (d/2) log lambda - J_h(Q)
template <class W>
double rate_binomial(const Law<W>& Q, double lambda) {
    if (!(lambda > 0)) throw std::invalid_argument("rate_binomial: lambda must be positive");
    if (!is_admissible(Q) || !tree_supported(Q)) return kInf;
    double d = to_double(mean_degree(Q));
    double sigma = d == 0 ? 0.0 : J_h(Q);
    return lambda / 2 - d / 2 * std::log(lambda) - sigma;
}

// degree-law rate in G(n, lambda/n)
template <class W>
double rate_degree_er(const Law<W>& P, double lambda) {
    if (!(lambda > 0)) throw std::invalid_argument("rate_degree_er: lambda must be positive");
    double d = to_double(mean_degree(P));
    double log_term = d == 0 ? 0.0 : d / 2 * std::log(lambda / d);
    return (lambda - d) / 2 - log_term + relative_entropy_poisson(P, d).value;
}

// degree-law rate for uniform graphs with dn/2 edges
template <class W>
double rate_degree_fixed(const Law<W>& P, const W& d) {
    if (!same_mean(mean_degree(P), d)) return kInf;
    return relative_entropy_poisson(P, to_double(d)).value;
}

struct DiscontinuityTerms {
    double value = 0;
    double p1 = 0, p2 = 0, d = 0;
};

// upper bound on the entropy of bipartite two-type unimodular trees
template <class W>
DiscontinuityTerms discontinuity_bound_terms(const Law<W>& P1, const Law<W>& P2) {
    for (const auto* P : {&P1, &P2})
        for (const auto& [k, w] : degree_distribution(*P))
            if (k <= 1 && to_double(w) > 0) throw std::invalid_argument("discontinuity_bound: supports must avoid 0 and 1");
    double d1 = to_double(mean_degree(P1)), d2 = to_double(mean_degree(P2));
    DiscontinuityTerms t;
    t.p1 = d2 / (d1 + d2);
    t.p2 = d1 / (d1 + d2);
    t.d = 2 * d1 * d2 / (d1 + d2);
    auto elogfact = [](const Law<W>& P) {
        double s = 0;
        for (const auto& [k, w] : degree_distribution(P)) s += to_double(w) * log_factorial(k);
        return s;
    };
    t.value = -xlogx(t.p1) - xlogx(t.p2) + t.p1 * shannon(P1) + t.p2 * shannon(P2) + t.d / 2 * std::log(t.d / 2) - t.d / 2 -
              t.p1 * elogfact(P1) - t.p2 * elogfact(P2);
    return t;
}

template <class W>
double discontinuity_bound(const Law<W>& P1, const Law<W>& P2) {
    return discontinuity_bound_terms(P1, P2).value;
}

}  // namespace lwc

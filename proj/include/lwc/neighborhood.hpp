#pragma once

#include "lwc/graph.hpp"
#include "lwc/rational.hpp"
#include "lwc/rooted_graphs.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lwc {

// Finitely supported law on rooted classes known to `depth`.
// W is Rational (exact mode) or double (float mode).
template <class W>
struct Law {
    int depth = 0;
    std::map<CanonicalClass, W> p;
    // float laws cut from an infinite support: last kept point and dropped mass
    long truncation_point = -1;
    double truncated_mass = 0.0;

    void add(CanonicalClass c, const W& w) {
        if (c.depth > depth) c = truncate(c, depth);
        if (c.depth < depth) {
            // a shallower class can be lifted only if its ball ended before the horizon
            if (height(c) >= c.depth) throw std::invalid_argument("law: class known only to a smaller depth");
            c.depth = depth;
        }
        auto& slot = p[c];
        slot += w;
        if (slot == W(0)) p.erase(c);
    }
    W mass(CanonicalClass c) const {
        auto it = p.find(c);
        return it == p.end() ? W(0) : it->second;
    }
    std::size_t size() const { return p.size(); }
};

using ExactLaw = Law<Rational>;
using FloatLaw = Law<double>;

template <class W>
constexpr bool is_exact_v = std::is_same_v<W, Rational>;

template <class W>
bool same_value(const W& a, const W& b, double tol) {
    if constexpr (is_exact_v<W>) return a == b;
    else return std::abs(a - b) <= tol * std::max(1.0, std::abs(a));
}

template <class W>
using EdgeLaw = std::map<std::pair<CanonicalClass, CanonicalClass>, W>;

template <class W>
W total_mass(const Law<W>& P) {
    W s(0);
    for (const auto& [c, w] : P.p) s += w;
    return s;
}

// throws std::invalid_argument unless P is a probability law on depth-P.depth classes
template <class W>
void validate_law(const Law<W>& P) {
    for (const auto& [c, w] : P.p) {
        if (!(w > W(0))) throw std::invalid_argument("law has a nonpositive weight");
        if (c.depth != P.depth || height(c) > P.depth) throw std::invalid_argument("law support class at wrong depth");
    }
    W s = total_mass(P);
    if constexpr (is_exact_v<W>) {
        if (s != 1) throw std::invalid_argument("law does not sum to 1");
    } else {
        if (std::abs(s - 1.0) > 1e-12) throw std::invalid_argument("law does not sum to 1 within 1e-12");
    }
}

template <class W>
W mean_degree(const Law<W>& P) {
    W d(0);
    for (const auto& [c, w] : P.p) d += w * W(root_degree(c));
    return d;
}

// e_P(t, t') = E_P[E_h(t, t')] over pairs of depth h-1 classes
template <class W>
EdgeLaw<W> edge_law(const Law<W>& P) {
    EdgeLaw<W> e;
    for (const auto& [c, w] : P.p)
        for (const auto& t : edge_types(c, P.depth)) e[{t.below, t.above}] += w * W(t.count);
    return e;
}

template <class W>
bool is_admissible(const Law<W>& P, double tol = 1e-12) {
    if (P.depth < 1) return true;
    auto e = edge_law(P);
    for (const auto& [key, w] : e) {
        auto it = e.find({key.second, key.first});
        W other = it == e.end() ? W(0) : it->second;
        if constexpr (is_exact_v<W>) {
            if (w != other) return false;
        } else {
            if (std::abs(w - other) > tol * std::max(1.0, std::abs(w))) return false;
        }
    }
    return true;
}

// pi_P = e_P / d; empty when d = 0
template <class W>
EdgeLaw<W> pi_law(const Law<W>& P) {
    auto e = edge_law(P);
    W d = mean_degree(P);
    if (d == W(0)) return {};
    for (auto& [k, w] : e) w /= d;
    return e;
}

template <class W>
Law<W> truncate_law(const Law<W>& P, int k) {
    if (k > P.depth) throw std::invalid_argument("truncate_law: target deeper than law");
    Law<W> out;
    out.depth = k;
    out.truncation_point = P.truncation_point;
    out.truncated_mass = P.truncated_mass;
    for (const auto& [c, w] : P.p) out.add(truncate(c, k), w);
    return out;
}

template <class W1, class W2>
double tv_distance(const Law<W1>& P, const Law<W2>& Q) {
    if (P.depth != Q.depth) throw std::invalid_argument("tv_distance: depth mismatch");
    double s = 0;
    for (const auto& [c, w] : P.p) s += std::abs(to_double(w) - to_double(Q.mass(c)));
    for (const auto& [c, w] : Q.p)
        if (!P.p.count(c)) s += std::abs(to_double(w));
    return s / 2;
}

inline FloatLaw to_float(const ExactLaw& P) {
    FloatLaw out;
    out.depth = P.depth;
    out.truncation_point = P.truncation_point;
    out.truncated_mass = P.truncated_mass;
    for (const auto& [c, w] : P.p) out.p[c] = to_double(w);
    return out;
}

template <class W>
bool laws_equal(const Law<W>& P, const Law<W>& Q, double tol = 1e-12) {
    if (P.depth != Q.depth) return false;
    if constexpr (is_exact_v<W>) {
        return P.p == Q.p;
    } else {
        return tv_distance(P, Q) <= tol;
    }
}

// U(G)_h
ExactLaw empirical_distribution(const Graph& G, int h);
// depth-h class of every vertex
std::vector<CanonicalClass> neighborhood_classes(const Graph& G, int h);

// star with k leaves, as a depth-1 class
CanonicalClass star(int k);

template <class W>
Law<W> degree_law(const std::map<int, W>& probs) {
    Law<W> out;
    out.depth = 1;
    for (const auto& [k, w] : probs)
        if (w != W(0)) out.add(star(k), w);
    return out;
}

template <class W>
std::map<int, W> degree_distribution(const Law<W>& P) {
    std::map<int, W> out;
    for (const auto& [c, w] : P.p) out[root_degree(c)] += w;
    return out;
}

// Poi(lambda) cut once the remaining tail is below `tail`, renormalised
FloatLaw poisson_law(double lambda, double tail = 1e-14);
double log_poisson_pmf(double lambda, long k);

}  // namespace lwc

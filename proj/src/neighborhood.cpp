#include "lwc/neighborhood.hpp"

namespace lwc {

std::vector<CanonicalClass> neighborhood_classes(const Graph& G, int h) {
    std::vector<CanonicalClass> out;
    out.reserve(static_cast<std::size_t>(G.n));
    for (int v = 0; v < G.n; ++v) out.push_back(canonicalize(ball(G, v, h), h));
    return out;
}

ExactLaw empirical_distribution(const Graph& G, int h) {
    if (G.n == 0) throw std::invalid_argument("empirical_distribution: empty graph");
    ExactLaw out;
    out.depth = h;
    std::map<CanonicalClass, long> counts;
    for (auto c : neighborhood_classes(G, h)) ++counts[c];
    for (const auto& [c, k] : counts) out.p[c] = Rational(BigInt(k), BigInt(G.n));
    for (auto& [c, w] : out.p) w.canonicalize();
    return out;
}

CanonicalClass star(int k) {
    if (k < 0) throw std::invalid_argument("star: negative degree");
    std::vector<CanonicalClass> leaves(static_cast<std::size_t>(k), isolated_root(0));
    return make_tree(leaves, 1);
}

double log_poisson_pmf(double lambda, long k) {
    if (lambda == 0) return k == 0 ? 0.0 : -INFINITY;
    return -lambda + static_cast<double>(k) * std::log(lambda) - std::lgamma(static_cast<double>(k) + 1.0);
}

FloatLaw poisson_law(double lambda, double tail) {
    if (!(lambda >= 0)) throw std::invalid_argument("poisson_law: negative mean");
    std::map<int, double> probs;
    double kept = 0, bound = 0;
    long k = 0;
    while (true) {
        double pk = std::exp(log_poisson_pmf(lambda, k));
        probs[static_cast<int>(k)] = pk;
        kept += pk;
        // remaining tail is at most p_{k+1} / (1 - lambda/(k+2)) once k+2 > lambda
        double r = lambda / static_cast<double>(k + 2);
        bound = pk * lambda / static_cast<double>(k + 1) / (1 - r);
        if (r < 0.5 && bound < tail) break;
        if (lambda == 0) break;
        ++k;
    }
    auto law = degree_law(probs);
    for (auto& [c, w] : law.p) w /= kept;
    law.truncation_point = k;
    law.truncated_mass = lambda == 0 ? 0.0 : bound;
    return law;
}

}  // namespace lwc

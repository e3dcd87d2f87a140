#include "lwc/tree_encoding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace lwc {

int EncodingContext::index_of(CanonicalClass c) const {
    auto it = std::find(F.begin(), F.end(), c);
    if (it == F.end()) throw std::out_of_range("encoding context: unknown split class");
    return static_cast<int>(it - F.begin());
}

std::vector<CanonicalClass> psi_h(const Graph& G, int h) { return neighborhood_classes(G, h); }

bool is_h_treelike(const Graph& G, int h) { return !has_cycle_leq(multigraph_of(G), 2 * h + 1); }

CanonicalClass split_class(const Graph& G, int u, int v, int depth) {
    // BFS from v in G minus the edge {u,v}, stopped at `depth`
    std::vector<int> order{v}, dist{0};
    std::unordered_map<int, int> label{{v, 0}};
    auto skip = [&](int a, int b) { return (a == u && b == v) || (a == v && b == u); };
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (dist[i] == depth) continue;
        for (int w : G.adj[static_cast<std::size_t>(order[i])]) {
            if (skip(order[i], w)) continue;
            if (label.emplace(w, static_cast<int>(order.size())).second) {
                order.push_back(w);
                dist.push_back(dist[i] + 1);
            }
        }
    }
    LabeledRootedGraph g;
    g.n = static_cast<int>(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int w : G.adj[static_cast<std::size_t>(order[i])]) {
            if (skip(order[i], w)) continue;
            auto it = label.find(w);
            if (it != label.end() && it->second > static_cast<int>(i)) g.edges.push_back({static_cast<int>(i), it->second});
        }
    return canonicalize(g, depth);
}

EncodedGraph encode(const Graph& G, int h) {
    if (h < 1) throw std::invalid_argument("encode: h must be >= 1");
    if (!is_h_treelike(G, h)) throw std::invalid_argument("encode: graph is not h-tree-like");
    auto edges = G.edges();
    std::vector<std::pair<CanonicalClass, CanonicalClass>> split;
    std::vector<CanonicalClass> F;
    for (auto [u, v] : edges) {
        auto a = split_class(G, u, v, h - 1), b = split_class(G, v, u, h - 1);
        split.emplace_back(a, b);
        F.push_back(a);
        F.push_back(b);
    }
    std::sort(F.begin(), F.end(), [](CanonicalClass a, CanonicalClass b) { return encoding(a) < encoding(b); });
    F.erase(std::unique(F.begin(), F.end()), F.end());
    EncodedGraph out;
    out.context.h = h;
    out.context.F = F;
    out.context.colors.L = std::max<int>(1, static_cast<int>(F.size()));
    out.graph.colors = out.context.colors;
    out.graph.n = G.n;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        int c = out.context.colors.index(out.context.index_of(split[e].first), out.context.index_of(split[e].second));
        out.graph.add_edge(u, v, c);
    }
    out.D = degree_sequence_of(out.graph);
    return out;
}

BigInt n_of_D(const DegreeSequence& D) {
    std::map<ColorMatrix, unsigned> mult;
    for (const auto& m : D.D) ++mult[m];
    BigInt r = factorial(static_cast<unsigned>(D.n()));
    for (const auto& [m, k] : mult) r /= factorial(k);
    return r;
}

BigInt count_simple_realisations(const DegreeSequence& D, int g) {
    // each simple graph is hit by exactly prod_u prod_c D_c(u)! configurations
    BigInt hits = 0;
    for_each_configuration(D, [&](const Configuration& sigma) {
        if (!has_cycle_leq(colorblind(graph_of(sigma, D)), g)) hits += 1;
    });
    BigInt fibre = 1;
    for (int u = 0; u < D.n(); ++u)
        for (int c = 0; c < D.colors.count(); ++c) fibre *= factorial(static_cast<unsigned>(D.at(u, c)));
    if (hits % fibre != 0) throw std::logic_error("count_simple_realisations: non-integral count");
    return hits / fibre;
}

BigInt count_Nh_exact(const Graph& G, int h) {
    auto enc = encode(G, h);
    return n_of_D(enc.D) * count_simple_realisations(enc.D, 2 * h + 1);
}

double count_Nh_log_asymptotic(const Graph& G, int h) {
    auto enc = encode(G, h);
    const auto& D = enc.D;
    double n = D.n();
    double m = static_cast<double>(G.edge_count());
    double value = std::log(n_of_D(D).get_d());
    if (m == 0) return value;
    value += m * std::log(n) - m;
    auto S = D.totals();
    for (long s : S)
        if (s > 0) {
            double e = static_cast<double>(s) / n;
            value += n / 2 * e * std::log(e);
        }
    for (int u = 0; u < D.n(); ++u)
        for (int c = 0; c < D.colors.count(); ++c) value -= log_factorial(D.at(u, c));
    return value;
}

bool verify_treelike_encoding(const Graph& G, int h, int samples, Rng& rng) {
    auto enc = encode(G, h);
    auto target = psi_h(G, h);
    GdhSampler sampler(enc.D, 2 * h + 1);
    for (int i = 0; i < samples; ++i) {
        auto cb = colorblind(sampler.sample(rng));
        auto got = psi_h(cb.to_graph(), h);
        // vertex by vertex: D(u) pins down the depth-h class of u
        if (got != target) return false;
    }
    return true;
}

}  // namespace lwc

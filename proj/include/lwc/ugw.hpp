#pragma once

#include "lwc/colors.hpp"
#include "lwc/neighborhood.hpp"
#include "lwc/rng.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lwc {

// hat law of a law on degrees (depth 1): k -> (k+1) P(k+1) / d
template <class W>
Law<W> size_biased(const Law<W>& P) {
    if (P.depth != 1) throw std::invalid_argument("size_biased: needs a depth-1 law");
    W d = mean_degree(P);
    if (d == W(0)) throw std::invalid_argument("size_biased: mean degree is 0");
    std::map<int, W> out;
    for (const auto& [k, w] : degree_distribution(P))
        if (k > 0) out[k - 1] += W(k) * w / d;
    return degree_law(out);
}

using TypeKey = std::pair<CanonicalClass, CanonicalClass>;

// The laws hat P_{t,t'} for every type with e_P(t,t') > 0.
template <class W>
struct TypedBranchingLaw {
    int depth = 0;
    Law<W> base;
    std::map<TypeKey, Law<W>> hat;

    const Law<W>& at(const TypeKey& key) const {
        auto it = hat.find(key);
        if (it == hat.end()) throw std::out_of_range("typed branching law: type with e_P = 0");
        return it->second;
    }
};

// type of each root edge of a tree class g at depth h:
// (child subtree truncated to h-1, root side without that child truncated to h-1)
inline std::vector<TypeKey> child_types(CanonicalClass g, int h) {
    std::vector<TypeKey> out;
    for (auto c : children(g)) {
        auto below = truncate(c, h - 1);
        auto above = truncate(remove_child(g, c), h - 1);
        out.emplace_back(below, above);
    }
    return out;
}

template <class W>
TypedBranchingLaw<W> typed_branching_law(const Law<W>& P) {
    int h = P.depth;
    if (h < 1) throw std::invalid_argument("typed_branching_law: depth must be >= 1");
    TypedBranchingLaw<W> T;
    T.depth = h;
    T.base = P;
    for (const auto& [S, w] : P.p) {
        if (!is_tree(S)) throw std::invalid_argument("typed_branching_law: support must be trees");
        auto kids = children(S);
        for (std::size_t i = 0; i < kids.size();) {
            std::size_t j = i;
            while (j < kids.size() && kids[j] == kids[i]) ++j;
            auto tau = remove_child(S, kids[i]);
            TypeKey key{truncate(tau, h - 1), truncate(kids[i], h - 1)};
            auto& law = T.hat[key];
            law.depth = h;
            law.add(tau, w * W(static_cast<long>(j - i)));
            i = j;
        }
    }
    auto e = edge_law(P);
    for (auto& [key, law] : T.hat) {
        auto it = e.find(key);
        if (it == e.end() || it->second == W(0))
            throw std::invalid_argument("typed_branching_law: law is not admissible (e_P asymmetric)");
        for (auto& [c, w] : law.p) w /= it->second;
        W s = total_mass(law);
        bool ok;
        if constexpr (is_exact_v<W>) ok = s == 1;
        else ok = std::abs(s - 1.0) <= 1e-9;
        if (!ok) throw std::invalid_argument("typed_branching_law: law is not admissible (e_P asymmetric)");
    }
    if (T.hat.size() != e.size()) throw std::invalid_argument("typed_branching_law: law is not admissible (e_P asymmetric)");
    return T;
}

template <class W>
Law<W> hat_P_tt(const Law<W>& P, CanonicalClass t, CanonicalClass t_prime) {
    auto T = typed_branching_law(P);
    return T.at({t, t_prime});
}

namespace detail {

// all multisets of `remaining` draws from `support`, weighted by multinomial * prod p^k
template <class W>
void multisets(const std::vector<std::pair<CanonicalClass, W>>& support, std::size_t from, int remaining,
               std::vector<CanonicalClass>& chosen, const W& weight,
               std::vector<std::pair<std::vector<CanonicalClass>, W>>& out) {
    if (remaining == 0) {
        out.emplace_back(chosen, weight);
        return;
    }
    if (from == support.size()) return;
    const auto& [c, p] = support[from];
    if (from + 1 == support.size()) {
        W w = weight;
        for (int k = 0; k < remaining; ++k) {
            w *= p;
            chosen.push_back(c);
        }
        out.emplace_back(chosen, w);
        chosen.resize(chosen.size() - static_cast<std::size_t>(remaining));
        return;
    }
    W pk(1), binom(1);
    for (int k = 0; k <= remaining; ++k) {
        if (k > 0) {
            pk *= p;
            binom = binom * W(remaining - k + 1) / W(k);
            chosen.push_back(c);
        }
        multisets(support, from + 1, remaining - k, chosen, W(weight * pk * binom), out);
    }
    chosen.resize(chosen.size() - static_cast<std::size_t>(remaining));
}

}  // namespace detail

// one step: [UGW_h(P)]_{h+1}
template <class W>
Law<W> ugw_step(const TypedBranchingLaw<W>& T, std::size_t cap = 1000000) {
    int h = T.depth;
    Law<W> Q;
    Q.depth = h + 1;
    for (const auto& [g, w] : T.base.p) {
        auto kids = children(g);
        // partial products over groups of equal child subtrees
        std::vector<std::pair<std::vector<CanonicalClass>, W>> partial{{{}, w}};
        for (std::size_t i = 0; i < kids.size();) {
            std::size_t j = i;
            while (j < kids.size() && kids[j] == kids[i]) ++j;
            TypeKey key{truncate(kids[i], h - 1), truncate(remove_child(g, kids[i]), h - 1)};
            const auto& hat = T.at(key);
            std::vector<std::pair<CanonicalClass, W>> support(hat.p.begin(), hat.p.end());
            std::vector<std::pair<std::vector<CanonicalClass>, W>> group;
            std::vector<CanonicalClass> chosen;
            detail::multisets(support, 0, static_cast<int>(j - i), chosen, W(1), group);
            std::vector<std::pair<std::vector<CanonicalClass>, W>> next;
            if (partial.size() * group.size() > cap) throw std::length_error("marginal_ugw: support exceeds cap");
            for (const auto& [pc, pw] : partial)
                for (const auto& [gc, gw] : group) {
                    auto c = pc;
                    c.insert(c.end(), gc.begin(), gc.end());
                    next.emplace_back(std::move(c), pw * gw);
                }
            partial = std::move(next);
            i = j;
        }
        for (const auto& [c, pw] : partial) Q.add(make_tree(c, h + 1), pw);
        if (Q.size() > cap) throw std::length_error("marginal_ugw: support exceeds cap");
    }
    return Q;
}

// [UGW_h(P)]_k for k >= h (truncation for k < h)
template <class W>
Law<W> marginal_ugw(const Law<W>& P, int k, std::size_t cap = 1000000) {
    if (k <= P.depth) return truncate_law(P, k);
    Law<W> cur = P;
    while (cur.depth < k) cur = ugw_step(typed_branching_law(cur), cap);
    return cur;
}

template <class W>
bool consistency_check(const Law<W>& P, int k) {
    auto a = marginal_ugw(marginal_ugw(P, k), k + 1);
    auto b = marginal_ugw(P, k + 1);
    return laws_equal(a, b, 1e-10);
}

// e_Q(t,t') = e_P(s,s') hat_{s,s'}(t) hat_{s',s}(t') for Q = [UGW_h(P)]_{h+1}
template <class W>
bool edge_law_identity(const Law<W>& P) {
    int h = P.depth;
    auto T = typed_branching_law(P);
    auto Q = ugw_step(T);
    auto eQ = edge_law(Q);
    auto eP = edge_law(P);
    EdgeLaw<W> rhs;
    for (const auto& [key, w] : eP) {
        const auto& down = T.at(key);
        const auto& up = T.at({key.second, key.first});
        for (const auto& [t, a] : down.p)
            for (const auto& [tp, b] : up.p) rhs[{t, tp}] += w * a * b;
    }
    (void)h;
    if (eQ.size() != rhs.size()) return false;
    for (const auto& [key, w] : eQ) {
        auto it = rhs.find(key);
        if (it == rhs.end()) return false;
        if constexpr (is_exact_v<W>) {
            if (it->second != w) return false;
        } else {
            if (std::abs(it->second - w) > 1e-10) return false;
        }
    }
    return true;
}

// ---- sampling ---------------------------------------------------------------

class UgwSampler {
public:
    template <class W>
    explicit UgwSampler(const Law<W>& P) : h_(P.depth) {
        validate_law(P);
        auto T = typed_branching_law(P);
        root_ = table_of(P);
        for (const auto& [key, law] : T.hat) hat_.emplace(key, table_of(law));
    }

    int depth() const { return h_; }
    // a tree with law [UGW_h(P)]_k, root 0
    LabeledRootedGraph sample(int k, Rng& rng) const;

private:
    struct Table {
        std::vector<CanonicalClass> support;
        std::vector<double> cumulative;
        CanonicalClass draw(Rng& rng) const { return support[draw_cumulative(cumulative, rng)]; }
    };
    template <class W>
    static Table table_of(const Law<W>& law) {
        Table t;
        double s = 0;
        for (const auto& [c, w] : law.p) {
            t.support.push_back(c);
            s += to_double(w);
            t.cumulative.push_back(s);
        }
        return t;
    }
    void grow(LabeledRootedGraph& g, int v, CanonicalClass tau, CanonicalClass up, int remaining, Rng& rng) const;

    int h_;
    Table root_;
    std::map<TypeKey, Table> hat_;
};

template <class W>
LabeledRootedGraph sample_ugw_h(const Law<W>& P, int k, Rng& rng) {
    return UgwSampler(P).sample(k, rng);
}

// ---- coloured and bipartite variants -----------------------------------------

template <class W>
struct ColoredOffspringLaw {
    ColorSpace colors;
    std::map<ColorMatrix, W> p;
};

template <class W>
W colored_mean(const ColoredOffspringLaw<W>& P, int c) {
    W s(0);
    for (const auto& [m, w] : P.p) s += w * W(m[static_cast<std::size_t>(c)]);
    return s;
}

// law of the offspring of a vertex reached through an edge of colour c
template <class W>
ColoredOffspringLaw<W> colored_hat(const ColoredOffspringLaw<W>& P, int c) {
    ColoredOffspringLaw<W> out;
    out.colors = P.colors;
    int cb = P.colors.conj(c);
    W mass = colored_mean(P, c);
    if (mass == W(0)) {
        out.p[ColorMatrix(static_cast<std::size_t>(P.colors.count()), 0)] = W(1);
        return out;
    }
    if (!same_value(colored_mean(P, cb), mass, 1e-12))
        throw std::invalid_argument("colored_hat: E[D_c] != E[D_conj(c)]");
    for (const auto& [m, w] : P.p) {
        int x = m[static_cast<std::size_t>(cb)];
        if (x == 0) continue;
        auto less = m;
        --less[static_cast<std::size_t>(cb)];
        out.p[less] += W(x) * w / mass;
    }
    return out;
}

// coloured tree; edge (parent, child) carries colour c one way and conj(c) back
template <class W>
LabeledRootedGraph sample_ugw_colored(const ColoredOffspringLaw<W>& P, int k, Rng& rng) {
    const auto& cs = P.colors;
    auto table = [](const ColoredOffspringLaw<W>& law) {
        std::pair<std::vector<ColorMatrix>, std::vector<double>> t;
        double s = 0;
        for (const auto& [m, w] : law.p) {
            t.first.push_back(m);
            s += to_double(w);
            t.second.push_back(s);
        }
        return t;
    };
    auto root = table(P);
    std::vector<std::pair<std::vector<ColorMatrix>, std::vector<double>>> hats;
    for (int c = 0; c < cs.count(); ++c) hats.push_back(table(colored_hat(P, c)));
    LabeledRootedGraph g;
    g.n = 1;
    struct Item {
        int v, depth;
        ColorMatrix offspring;
    };
    std::vector<Item> stack{{0, 0, root.first[draw_cumulative(root.second, rng)]}};
    while (!stack.empty()) {
        Item it = std::move(stack.back());
        stack.pop_back();
        if (it.depth == k) continue;
        for (int c = 0; c < cs.count(); ++c)
            for (int r = 0; r < it.offspring[static_cast<std::size_t>(c)]; ++r) {
                int w = g.n++;
                g.edges.push_back({it.v, w, c, cs.conj(c)});
                const auto& h = hats[static_cast<std::size_t>(c)];
                stack.push_back({w, it.depth + 1, h.first[draw_cumulative(h.second, rng)]});
            }
    }
    return g;
}

struct BipartiteTree {
    LabeledRootedGraph tree;
    std::vector<int> side;  // 0 or 1 per vertex
};

// two-type tree: root side i w.p. d_other/(d1+d2), root degree ~ P_i,
// deeper vertices branch by the size-biased law of their side
template <class W>
BipartiteTree sample_ugw_bipartite(const Law<W>& P1, const Law<W>& P2, int k, Rng& rng) {
    double d1 = to_double(mean_degree(P1)), d2 = to_double(mean_degree(P2));
    if (d1 <= 0 || d2 <= 0) throw std::invalid_argument("sample_ugw_bipartite: zero mean degree");
    auto table = [](const Law<W>& law) {
        std::pair<std::vector<int>, std::vector<double>> t;
        double s = 0;
        for (const auto& [deg, w] : degree_distribution(law)) {
            t.first.push_back(deg);
            s += to_double(w);
            t.second.push_back(s);
        }
        return t;
    };
    std::array<decltype(table(P1)), 2> first{table(P1), table(P2)};
    std::array<decltype(table(P1)), 2> later{table(size_biased(P1)), table(size_biased(P2))};
    BipartiteTree out;
    out.tree.n = 1;
    int root_side = uniform01(rng) < d2 / (d1 + d2) ? 0 : 1;
    out.side.push_back(root_side);
    struct Item {
        int v, depth, side, kids;
    };
    const auto& r = first[static_cast<std::size_t>(root_side)];
    std::vector<Item> stack{{0, 0, root_side, r.first[draw_cumulative(r.second, rng)]}};
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        if (it.depth == k) continue;
        for (int j = 0; j < it.kids; ++j) {
            int w = out.tree.n++;
            int s = 1 - it.side;
            out.tree.edges.push_back({it.v, w});
            out.side.push_back(s);
            const auto& t = later[static_cast<std::size_t>(s)];
            stack.push_back({w, it.depth + 1, s, t.first[draw_cumulative(t.second, rng)]});
        }
    }
    return out;
}

}  // namespace lwc

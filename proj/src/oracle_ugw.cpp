// Brute-force law of [UGW_h(P)]_k: enumerate the generative process on
// labelled trees, children in order, and canonicalise only at the end.
// Branching laws come from the edge-counting expression, not from the
// join-at-root construction used by the library.
#include "lwc/oracle.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace lwc::oracle {
namespace {

using Weighted = std::vector<std::pair<CanonicalClass, Rational>>;

int neighbor_of_root(const RootedEdge& e, int root) { return e.u == root ? e.v : e.u; }

// tree rooted at a new vertex whose children carry the given subtrees
LabeledRootedGraph glue(const std::vector<CanonicalClass>& subtrees) {
    LabeledRootedGraph g;
    g.n = 1;
    for (auto c : subtrees) {
        auto r = representative(c);
        int off = g.n;
        g.n += r.n;
        g.edges.push_back({0, off + r.root});
        for (auto e : r.edges) g.edges.push_back({e.u + off, e.v + off});
    }
    return g;
}

class Brute {
public:
    explicit Brute(const ExactLaw& P) : P_(P), h_(P.depth) {
        for (const auto& [S, w] : P.p) {
            auto rep = representative(S);
            for (const auto& e : rep.edges) {
                if (e.u != rep.root && e.v != rep.root) continue;
                int v = neighbor_of_root(e, rep.root);
                auto outward = canonicalize(split_at_edge(rep, rep.root, v), h_ - 1);
                auto inward_full = canonicalize(split_at_edge(rep, v, rep.root), h_);
                auto inward = truncate(inward_full, h_ - 1);
                // e_P(outward, inward)
                edge_[{outward, inward}] += w;
                // hat_{s, s'}(tau) numerators: tau = inward_full, s = tau_{h-1}, s' = outward
                hat_[{inward, outward}][inward_full] += w;
            }
        }
        for (auto& [key, m] : hat_) {
            Rational norm = edge_.at(key);
            Rational total = 0;
            for (auto& [c, w] : m) {
                w /= norm;
                total += w;
            }
            if (total != 1) throw std::invalid_argument("brute_ugw_marginal: law is not admissible");
        }
    }

    ExactLaw marginal(int k) {
        ExactLaw out;
        out.depth = k;
        for (const auto& [g, w] : P_.p) {
            auto rep = representative(g);
            std::vector<Weighted> per_child;
            for (const auto& e : rep.edges) {
                if (e.u != rep.root && e.v != rep.root) continue;
                int v = neighbor_of_root(e, rep.root);
                auto down = canonicalize(split_at_edge(rep, rep.root, v), h_ - 1);
                auto up = canonicalize(split_at_edge(rep, v, rep.root), h_ - 1);
                per_child.push_back(child_law(down, up, k - 1));
            }
            for (const auto& [c, pw] : ordered_product(per_child, k)) out.add(c, w * pw);
        }
        return out;
    }

private:
    // law of the subtree below a child of type (down, up), to depth r
    Weighted child_law(CanonicalClass down, CanonicalClass up, int r) {
        std::map<CanonicalClass, Rational> acc;
        for (const auto& [tau, p] : hat_.at({down, up}))
            for (const auto& [c, q] : subtree_law(tau, up, r)) acc[c] += p * q;
        return {acc.begin(), acc.end()};
    }

    Weighted subtree_law(CanonicalClass tau, CanonicalClass up, int r) {
        auto key = std::make_tuple(tau, up, r);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Weighted result;
        if (r == 0) {
            result = {{isolated_root(0), Rational(1)}};
        } else {
            // v's full ball: tau plus a branch carrying `up`
            auto full = representative(tau);
            auto upper = representative(up);
            int parent = full.n + upper.root;
            int off = full.n;
            full.n += upper.n;
            full.edges.push_back({full.root, parent});
            for (auto e : upper.edges) full.edges.push_back({e.u + off, e.v + off});
            std::vector<Weighted> per_child;
            for (const auto& e : full.edges) {
                if (e.u != full.root && e.v != full.root) continue;
                int w = neighbor_of_root(e, full.root);
                if (w == parent) continue;
                auto down = canonicalize(split_at_edge(full, full.root, w), h_ - 1);
                auto above = canonicalize(split_at_edge(full, w, full.root), h_ - 1);
                per_child.push_back(child_law(down, above, r - 1));
            }
            result = ordered_product(per_child, r);
        }
        memo_[key] = result;
        return result;
    }

    // every ordered choice of one outcome per child, glued under a fresh root
    Weighted ordered_product(const std::vector<Weighted>& per_child, int depth) {
        std::map<CanonicalClass, Rational> acc;
        std::vector<CanonicalClass> pick(per_child.size());
        std::function<void(std::size_t, Rational)> rec = [&](std::size_t i, Rational w) {
            if (i == per_child.size()) {
                acc[canonicalize(glue(pick), depth)] += w;
                return;
            }
            for (const auto& [c, p] : per_child[i]) {
                pick[i] = c;
                rec(i + 1, w * p);
            }
        };
        rec(0, Rational(1));
        return {acc.begin(), acc.end()};
    }

    const ExactLaw& P_;
    int h_;
    std::map<std::pair<CanonicalClass, CanonicalClass>, Rational> edge_;
    std::map<std::pair<CanonicalClass, CanonicalClass>, std::map<CanonicalClass, Rational>> hat_;
    std::map<std::tuple<CanonicalClass, CanonicalClass, int>, Weighted> memo_;
};

}  // namespace

ExactLaw brute_ugw_marginal(const ExactLaw& P, int k) {
    if (P.depth < 1 || k < P.depth) throw std::invalid_argument("brute_ugw_marginal: need 1 <= h <= k");
    return Brute(P).marginal(k);
}

}  // namespace lwc::oracle

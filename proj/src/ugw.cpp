#include "lwc/ugw.hpp"

namespace lwc {

LabeledRootedGraph UgwSampler::sample(int k, Rng& rng) const {
    LabeledRootedGraph g;
    g.n = 1;
    g.root = 0;
    auto root = root_.draw(rng);
    if (k == 0) return g;
    for (const auto& [below, above] : child_types(root, h_)) {
        (void)below;
        int w = g.n++;
        g.edges.push_back({0, w});
        auto tau = hat_.at({below, above}).draw(rng);
        grow(g, w, tau, above, k - 1, rng);
    }
    return g;
}

// v carries tau (its subtree to depth h) and sees `up` through its parent edge
void UgwSampler::grow(LabeledRootedGraph& g, int v, CanonicalClass tau, CanonicalClass up, int remaining, Rng& rng) const {
    if (remaining == 0) return;
    auto full = join_at_root(tau, up);
    for (auto c : children(tau)) {
        TypeKey key{truncate(c, h_ - 1), truncate(remove_child(full, c), h_ - 1)};
        int w = g.n++;
        g.edges.push_back({v, w});
        grow(g, w, hat_.at(key).draw(rng), key.second, remaining - 1, rng);
    }
}

}  // namespace lwc

#pragma once

#include "lwc/graph.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace lwc {

enum class ClassKind : std::uint8_t { tree, general };

// Isomorphism class of a rooted graph, known up to `depth`.
// `id` points into a process-wide interning table; ids are not stable across
// runs, encodings are.
struct CanonicalClass {
    std::uint32_t id = 0;
    int depth = 0;
    friend bool operator==(const CanonicalClass&, const CanonicalClass&) = default;
    friend auto operator<=>(const CanonicalClass&, const CanonicalClass&) = default;
};

struct CanonicalClassHash {
    std::size_t operator()(const CanonicalClass& c) const noexcept {
        return std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(c.id) << 16) ^ static_cast<std::uint64_t>(c.depth));
    }
};

ClassKind kind(CanonicalClass c);
bool is_tree(CanonicalClass c);
const std::string& encoding(CanonicalClass c);
// radius of the structure (largest root distance)
int height(CanonicalClass c);
int root_degree(CanonicalClass c);

// child subtrees of a tree class (structure ids, each viewed at depth-1)
std::vector<CanonicalClass> children(CanonicalClass c);

CanonicalClass isolated_root(int depth = 0);
// tree whose root children carry the given subtrees (each truncated to depth-1)
CanonicalClass make_tree(const std::vector<CanonicalClass>& subtrees, int depth);

CanonicalClass canonicalize(const LabeledRootedGraph& g, int h);
CanonicalClass truncate(CanonicalClass g, int h);

// remove one edge {u,v}; the component of v, rooted at v
LabeledRootedGraph split_at_edge(const LabeledRootedGraph& g, int u, int v);
// tau with one extra root child carrying t_prime
CanonicalClass join_at_root(CanonicalClass tau, CanonicalClass t_prime);
// tree with one root child carrying `child` removed; throws if absent
CanonicalClass remove_child(CanonicalClass g, CanonicalClass child);

// #{v ~ o : G(o,v)_{h-1} = t, G(v,o)_{h-1} = t_prime}
long count_Eh(CanonicalClass g, int h, CanonicalClass t, CanonicalClass t_prime);

struct EdgeType {
    CanonicalClass below;  // G(o,v)_{h-1}
    CanonicalClass above;  // G(v,o)_{h-1}
    long count = 0;
    friend bool operator==(const EdgeType&, const EdgeType&) = default;
};
// all nonzero E_h(g)(t, t') entries, sorted by (below, above)
std::vector<EdgeType> edge_types(CanonicalClass g, int h);

LabeledRootedGraph representative(CanonicalClass c);
CanonicalClass parse_class(const std::string& enc, int depth);

// encoding of a rooted tree whose edges carry directed colours; not interned
std::string colored_tree_encoding(const LabeledRootedGraph& g);

std::size_t class_table_size();

}  // namespace lwc

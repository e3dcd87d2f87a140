#pragma once

#include "lwc/config_model.hpp"
#include "lwc/graph.hpp"
#include "lwc/neighborhood.hpp"
#include "lwc/rooted_graphs.hpp"

#include <vector>

namespace lwc {

// the split classes used as colours, sorted by encoding
struct EncodingContext {
    int h = 1;
    std::vector<CanonicalClass> F;
    ColorSpace colors;
    int index_of(CanonicalClass c) const;
};

struct EncodedGraph {
    EncodingContext context;
    ColoredMultigraph graph;
    DegreeSequence D;
};

// psi_h(G): depth-h class of every vertex
std::vector<CanonicalClass> psi_h(const Graph& G, int h);
// no cycle of length <= 2h+1
bool is_h_treelike(const Graph& G, int h);

// G(u,v)_{h-1} for the directed edge (u,v)
CanonicalClass split_class(const Graph& G, int u, int v, int depth);

// colour (i,j) on the directed edge (u,v): i = index of G(u,v)_{h-1}, j = index of G(v,u)_{h-1}
EncodedGraph encode(const Graph& G, int h);

// n! / prod over distinct matrices of (multiplicity)!
BigInt n_of_D(const DegreeSequence& D);

// |G(D, g)|: simple coloured graphs with degree sequence D and no cycle of length <= g
BigInt count_simple_realisations(const DegreeSequence& D, int g);

BigInt count_Nh_exact(const Graph& G, int h);
// Stirling-type estimate of log N_h(G) (alpha and lower-order terms dropped)
double count_Nh_log_asymptotic(const Graph& G, int h);

// sample from G(D, 2h+1) and check psi_h of the colourblind graph equals psi_h(G)
bool verify_treelike_encoding(const Graph& G, int h, int samples, Rng& rng);

}  // namespace lwc

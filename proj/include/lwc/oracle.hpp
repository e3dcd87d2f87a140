#pragma once

// Exhaustive reference computations for small instances. These share only the
// canonical-class code with the library formulas they are used to check.

#include "lwc/config_model.hpp"
#include "lwc/graph.hpp"
#include "lwc/neighborhood.hpp"

#include <functional>
#include <map>
#include <vector>

namespace lwc::oracle {

// every simple graph on {0..n-1} with m edges, in lexicographic edge-set order
void enumerate_graphs(int n, int m, const std::function<void(const Graph&)>& visit);

// every configuration of D (product of all matchings / bijections per colour)
void enumerate_configurations(const DegreeSequence& D, const std::function<void(const Configuration&)>& visit);

// law of CM(D) by exhaustion
std::map<ColoredMultigraph, Rational> exact_cm_law(const DegreeSequence& D);

// #{G' on [n] with m edges : U(G')_h = U(G)_h}
BigInt exact_Nh(const Graph& G, int h);

// P(CM(D) has no cycle of length <= h)
Rational exact_alpha(const DegreeSequence& D, int h);

// E X(H, G) for G ~ CM(D): sub-multigraphs isomorphic to H, averaged over all configurations
Rational exact_subgraph_expectation(const DegreeSequence& D, const ColoredMultigraph& H);

// [UGW_h(P)]_k by enumerating the generative process
ExactLaw brute_ugw_marginal(const ExactLaw& P, int k);

}  // namespace lwc::oracle

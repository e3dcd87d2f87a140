#pragma once

#include "lwc/colors.hpp"
#include "lwc/graph.hpp"
#include "lwc/rational.hpp"
#include "lwc/rng.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

namespace lwc {

// colour-degree matrices D(u), one per vertex
struct DegreeSequence {
    ColorSpace colors;
    std::vector<ColorMatrix> D;

    int n() const { return static_cast<int>(D.size()); }
    int at(int u, int c) const { return D[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)]; }
    // S_c = sum_u D_c(u)
    std::vector<long> totals() const;
    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
};

// S symmetric with even diagonal, entries nonnegative; throws std::invalid_argument
void validate(const DegreeSequence& D);
bool is_valid(const DegreeSequence& D);

// omega_c(u, v) for all colours, both orientations stored
struct ColoredMultigraph {
    ColorSpace colors;
    int n = 0;
    std::map<std::tuple<int, int, int>, int> omega;  // (c, u, v)

    int at(int c, int u, int v) const;
    // one edge, colour c seen from u (conj(c) from v)
    void add_edge(int u, int v, int c);
    friend bool operator==(const ColoredMultigraph&, const ColoredMultigraph&) = default;
    friend auto operator<=>(const ColoredMultigraph& a, const ColoredMultigraph& b) {
        return std::tie(a.n, a.omega) <=> std::tie(b.n, b.omega);
    }
};

// colourblind multigraph; key u <= v, value = number of edges (loops counted once each)
struct Multigraph {
    int n = 0;
    std::map<std::pair<int, int>, int> mult;

    int at(int u, int v) const;
    long edge_count() const;
    bool simple() const;
    Graph to_graph() const;  // requires simple()
    std::vector<std::vector<int>> neighbors() const;  // distinct neighbours, no loops
    friend bool operator==(const Multigraph&, const Multigraph&) = default;
};

Multigraph multigraph_of(const Graph& g);

// pairings per colour: C_= an involution on W_c, C_< a bijection W_c -> W_conj(c)
struct Configuration {
    ColorSpace colors;
    std::vector<std::vector<int>> pairing;
};

// half-edge bookkeeping: W_c ordered by (vertex, slot)
class HalfEdges {
public:
    explicit HalfEdges(const DegreeSequence& D);
    long size(int c) const { return offsets_[static_cast<std::size_t>(c)].back(); }
    long first(int c, int u) const { return offsets_[static_cast<std::size_t>(c)][static_cast<std::size_t>(u)]; }
    int owner(int c, long x) const;

private:
    std::vector<std::vector<long>> offsets_;
};

Configuration sample_configuration(const DegreeSequence& D, Rng& rng);
ColoredMultigraph graph_of(const Configuration& sigma, const DegreeSequence& D);
Multigraph colorblind(const ColoredMultigraph& G);
DegreeSequence degree_sequence_of(const ColoredMultigraph& G);

BigInt config_space_size(const DegreeSequence& D);
// #{sigma : graph_of(sigma) = H}
BigInt fiber_size(const DegreeSequence& D, const ColoredMultigraph& H);
// b(H); 1 for simple H
BigInt multiplicity_factor(const ColoredMultigraph& H);
Rational cm_probability(const DegreeSequence& D, const ColoredMultigraph& H);

// any cycle of length <= h (loops have length 1, parallel edges length 2)
bool has_cycle_leq(const Multigraph& G, int h);

struct RejectionStats {
    std::uint64_t attempts = 0;
    std::uint64_t accepts = 0;
    double acceptance_rate() const { return attempts ? static_cast<double>(accepts) / static_cast<double>(attempts) : 0.0; }
};

struct SamplingFailure : std::runtime_error {
    RejectionStats stats;
    SamplingFailure(const std::string& what, RejectionStats s) : std::runtime_error(what), stats(s) {}
};

// Rejection sampler for G(D, h): CM conditioned on no cycle of length <= h.
// Attempt cap: explicit, else 10^6 until an acceptance is seen, then 1000 / alpha_hat.
class GdhSampler {
public:
    GdhSampler(DegreeSequence D, int h, std::optional<std::uint64_t> max_attempts = std::nullopt);
    ColoredMultigraph sample(Rng& rng);
    const RejectionStats& stats() const { return stats_; }
    std::uint64_t attempt_cap() const;

private:
    DegreeSequence D_;
    int h_;
    std::optional<std::uint64_t> max_attempts_;
    RejectionStats stats_;
};

ColoredMultigraph sample_G_Dh(const DegreeSequence& D, int h, Rng& rng,
                              std::optional<std::uint64_t> max_attempts = std::nullopt,
                              RejectionStats* stats = nullptr);

// Erdos-Gallai
bool graphical_check(std::vector<int> degrees);

// |E(colourblind H)| - |V(H)|
long excess(const ColoredMultigraph& H);
// vertex permutations preserving every omega_c; brute force, |V(H)| <= 8
long automorphisms(const ColoredMultigraph& H);

// E X(H, G) for G ~ CM(D), exact for the given finite D
Rational subgraph_count_expectation(const DegreeSequence& D, const ColoredMultigraph& H);
// large-n intensity with D read as i.i.d. vertex matrices (uniform vertex of D), times n^{-excess}
double subgraph_intensity(const DegreeSequence& D, const ColoredMultigraph& H);

// regular single-colour sequence, and the simple cycle on k vertices as a subgraph pattern
DegreeSequence regular_sequence(int n, int d);
ColoredMultigraph cycle_pattern(int k);

struct ExploredBall {
    LabeledRootedGraph ball;  // root 0, edge colours directed
    bool tree = true;
    long matched = 0;  // half-edge pairs revealed
};

// Reveals only the pairings needed for the depth-k neighbourhood of v.
class Explorer {
public:
    explicit Explorer(const DegreeSequence& D);
    ExploredBall explore(int v, int k, Rng& rng) const;

private:
    DegreeSequence D_;
    HalfEdges W_;
};

ExploredBall explore_neighborhood(const DegreeSequence& D, int v, int k, Rng& rng);

// the rooted ball of a vertex of a coloured multigraph (colours kept)
LabeledRootedGraph colored_ball(const ColoredMultigraph& G, int v, int k);

// one random switch inside colour c: two pairs {a,b},{x,y} become {a,x},{b,y} (or the C_< analogue)
void random_switch(Configuration& sigma, int c, Rng& rng);

}  // namespace lwc

namespace lwc {

// visits every configuration of D; the library's own enumerator (oracle code keeps a separate one)
void for_each_configuration(const DegreeSequence& D, const std::function<void(const Configuration&)>& visit);

}  // namespace lwc

#pragma once

#include <utility>
#include <vector>

namespace lwc {

// finite simple undirected graph on {0, ..., n-1}
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    Graph() = default;
    explicit Graph(int vertices) : n(vertices), adj(static_cast<std::size_t>(vertices)) {}
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }
    long edge_count() const;
    std::vector<std::pair<int, int>> edges() const;
};

// an undirected edge; colors are directed (u->v and v->u), -1 when uncolored
struct RootedEdge {
    int u = 0, v = 0;
    int color_uv = -1, color_vu = -1;
};

// rooted multigraph with labelled vertices, loops and parallel edges allowed
struct LabeledRootedGraph {
    int n = 1;
    int root = 0;
    std::vector<RootedEdge> edges;

    bool colored() const;
    // neighbour lists as (neighbour, edge index); a loop appears twice at its vertex
    std::vector<std::vector<std::pair<int, int>>> incidence() const;
    std::vector<int> distances_from(int v) const;
};

// induced subgraph on the ball of radius h around root, vertices relabelled with root 0
LabeledRootedGraph ball(const LabeledRootedGraph& g, int h);
LabeledRootedGraph ball(const Graph& g, int v, int h);
LabeledRootedGraph as_rooted(const Graph& g, int root);

}  // namespace lwc

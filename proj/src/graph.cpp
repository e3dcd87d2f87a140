#include "lwc/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace lwc {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("simple graph: loop");
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("simple graph: vertex");
    if (has_edge(u, v)) throw std::invalid_argument("simple graph: parallel edge");
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj[static_cast<std::size_t>(u)];
    return std::find(a.begin(), a.end(), v) != a.end();
}

long Graph::edge_count() const {
    long s = 0;
    for (const auto& a : adj) s += static_cast<long>(a.size());
    return s / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v : adj[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    std::sort(out.begin(), out.end());
    return out;
}

bool LabeledRootedGraph::colored() const {
    for (const auto& e : edges)
        if (e.color_uv >= 0) return true;
    return false;
}

std::vector<std::vector<std::pair<int, int>>> LabeledRootedGraph::incidence() const {
    std::vector<std::vector<std::pair<int, int>>> inc(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        inc[static_cast<std::size_t>(e.u)].emplace_back(e.v, static_cast<int>(i));
        inc[static_cast<std::size_t>(e.v)].emplace_back(e.u, static_cast<int>(i));
    }
    return inc;
}

std::vector<int> LabeledRootedGraph::distances_from(int v) const {
    auto inc = incidence();
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::deque<int> q{v};
    dist[static_cast<std::size_t>(v)] = 0;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (auto [y, id] : inc[static_cast<std::size_t>(x)]) {
            (void)id;
            if (dist[static_cast<std::size_t>(y)] < 0) {
                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                q.push_back(y);
            }
        }
    }
    return dist;
}

LabeledRootedGraph ball(const LabeledRootedGraph& g, int h) {
    auto dist = g.distances_from(g.root);
    std::vector<int> order;
    for (int v = 0; v < g.n; ++v)
        if (dist[static_cast<std::size_t>(v)] >= 0 && dist[static_cast<std::size_t>(v)] <= h) order.push_back(v);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return dist[static_cast<std::size_t>(a)] < dist[static_cast<std::size_t>(b)];
    });
    std::vector<int> label(static_cast<std::size_t>(g.n), -1);
    for (std::size_t i = 0; i < order.size(); ++i) label[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    LabeledRootedGraph out;
    out.n = static_cast<int>(order.size());
    out.root = 0;
    for (const auto& e : g.edges) {
        int a = label[static_cast<std::size_t>(e.u)], b = label[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) out.edges.push_back({a, b, e.color_uv, e.color_vu});
    }
    return out;
}

LabeledRootedGraph as_rooted(const Graph& g, int root) {
    LabeledRootedGraph out;
    out.n = g.n;
    out.root = root;
    for (auto [u, v] : g.edges()) out.edges.push_back({u, v});
    return out;
}

LabeledRootedGraph ball(const Graph& g, int v, int h) {
    // BFS on the simple graph directly; local label map keeps this O(ball size)
    std::vector<int> order{v};
    std::vector<int> dist{0};
    std::unordered_map<int, int> label{{v, 0}};
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (dist[i] == h) continue;
        for (int w : g.adj[static_cast<std::size_t>(order[i])]) {
            if (label.emplace(w, static_cast<int>(order.size())).second) {
                order.push_back(w);
                dist.push_back(dist[i] + 1);
            }
        }
    }
    LabeledRootedGraph out;
    out.n = static_cast<int>(order.size());
    out.root = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int w : g.adj[static_cast<std::size_t>(order[i])]) {
            auto it = label.find(w);
            if (it != label.end() && it->second > static_cast<int>(i)) out.edges.push_back({static_cast<int>(i), it->second});
        }
    return out;
}

}  // namespace lwc

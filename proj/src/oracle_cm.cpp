#include "lwc/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lwc::oracle {
namespace {

// owner of each half-edge of colour c, W_c ordered by (vertex, slot)
std::vector<int> owners(const DegreeSequence& D, int c) {
    std::vector<int> out;
    for (int u = 0; u < D.n(); ++u)
        for (int j = 0; j < D.at(u, c); ++j) out.push_back(u);
    return out;
}

void all_matchings(std::vector<int>& p, const std::function<void()>& visit) {
    auto first = std::find(p.begin(), p.end(), -1);
    if (first == p.end()) {
        visit();
        return;
    }
    int x = static_cast<int>(first - p.begin());
    for (int y = x + 1; y < static_cast<int>(p.size()); ++y) {
        if (p[static_cast<std::size_t>(y)] != -1) continue;
        p[static_cast<std::size_t>(x)] = y;
        p[static_cast<std::size_t>(y)] = x;
        all_matchings(p, visit);
        p[static_cast<std::size_t>(x)] = -1;
        p[static_cast<std::size_t>(y)] = -1;
    }
}

ColoredMultigraph build(const Configuration& sigma, const DegreeSequence& D) {
    const auto& cs = D.colors;
    ColoredMultigraph G;
    G.colors = cs;
    G.n = D.n();
    auto bump = [&](int c, int u, int v, int by) { G.omega[{c, u, v}] += by; };
    for (int c = 0; c < cs.count(); ++c) {
        const auto& p = sigma.pairing[static_cast<std::size_t>(c)];
        auto own = owners(D, c);
        if (cs.is_eq(c)) {
            for (std::size_t x = 0; x < p.size(); ++x) {
                auto y = static_cast<std::size_t>(p[x]);
                if (x > y) continue;
                int u = own[x], v = own[y];
                if (u == v) bump(c, u, u, 2);
                else {
                    bump(c, u, v, 1);
                    bump(c, v, u, 1);
                }
            }
        } else if (cs.is_lt(c)) {
            auto other = owners(D, cs.conj(c));
            for (std::size_t x = 0; x < p.size(); ++x) {
                int u = own[x], v = other[static_cast<std::size_t>(p[x])];
                bump(c, u, v, 1);
                bump(cs.conj(c), v, u, 1);
            }
        }
    }
    return G;
}

// shortest cycle length in the colourblind multigraph, 0 when acyclic
int girth(const ColoredMultigraph& G) {
    std::map<std::pair<int, int>, int> m;
    for (const auto& [key, w] : G.omega) {
        auto [c, u, v] = key;
        (void)c;
        if (u < v) m[{u, v}] += w;
        if (u == v && w > 0) return 1;
    }
    int best = 0;
    for (const auto& [e, w] : m)
        if (w > 1) best = 2;
    if (best) return best;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(G.n));
    for (const auto& [e, w] : m) {
        adj[static_cast<std::size_t>(e.first)].push_back(e.second);
        adj[static_cast<std::size_t>(e.second)].push_back(e.first);
    }
    for (const auto& [e, w] : m) {
        // distance from one end to the other without this edge
        std::vector<int> dist(static_cast<std::size_t>(G.n), -1);
        std::vector<int> q{e.first};
        dist[static_cast<std::size_t>(e.first)] = 0;
        for (std::size_t i = 0; i < q.size(); ++i)
            for (int y : adj[static_cast<std::size_t>(q[i])]) {
                if (q[i] == e.first && y == e.second) continue;
                if (q[i] == e.second && y == e.first) continue;
                if (dist[static_cast<std::size_t>(y)] < 0) {
                    dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(q[i])] + 1;
                    q.push_back(y);
                }
            }
        int d = dist[static_cast<std::size_t>(e.second)];
        if (d > 0 && (best == 0 || d + 1 < best)) best = d + 1;
    }
    return best;
}

BigInt choose(int n, int k) {
    if (k < 0 || n < k) return 0;
    return binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
}

}  // namespace

void enumerate_graphs(int n, int m, const std::function<void(const Graph&)>& visit) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    int N = static_cast<int>(slots.size());
    if (m > N) return;
    std::vector<int> pick(static_cast<std::size_t>(m));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        Graph g(n);
        for (int i : pick) g.add_edge(slots[static_cast<std::size_t>(i)].first, slots[static_cast<std::size_t>(i)].second);
        visit(g);
        int i = m - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == N - m + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

void enumerate_configurations(const DegreeSequence& D, const std::function<void(const Configuration&)>& visit) {
    validate(D);
    const auto& cs = D.colors;
    auto S = D.totals();
    Configuration sigma;
    sigma.colors = cs;
    sigma.pairing.resize(static_cast<std::size_t>(cs.count()));
    std::function<void(int)> rec = [&](int c) {
        if (c == cs.count()) {
            visit(sigma);
            return;
        }
        auto& p = sigma.pairing[static_cast<std::size_t>(c)];
        auto size = static_cast<std::size_t>(S[static_cast<std::size_t>(c)]);
        if (cs.is_eq(c)) {
            p.assign(size, -1);
            all_matchings(p, [&] { rec(c + 1); });
        } else if (cs.is_lt(c)) {
            p.resize(size);
            std::iota(p.begin(), p.end(), 0);
            do rec(c + 1);
            while (std::next_permutation(p.begin(), p.end()));
        } else {
            p.clear();
            rec(c + 1);
        }
    };
    rec(0);
}

std::map<ColoredMultigraph, Rational> exact_cm_law(const DegreeSequence& D) {
    std::map<ColoredMultigraph, BigInt> counts;
    BigInt total = 0;
    enumerate_configurations(D, [&](const Configuration& s) {
        counts[build(s, D)] += 1;
        total += 1;
    });
    std::map<ColoredMultigraph, Rational> law;
    for (auto& [g, k] : counts) {
        Rational q(k, total);
        q.canonicalize();
        law[g] = q;
    }
    return law;
}

Rational exact_alpha(const DegreeSequence& D, int h) {
    BigInt good = 0, total = 0;
    enumerate_configurations(D, [&](const Configuration& s) {
        int g = girth(build(s, D));
        if (g == 0 || g > h) good += 1;
        total += 1;
    });
    Rational q(good, total);
    q.canonicalize();
    return q;
}

BigInt exact_Nh(const Graph& G, int h) {
    auto profile = [h](const Graph& g) {
        std::vector<CanonicalClass> cls;
        for (int v = 0; v < g.n; ++v) cls.push_back(canonicalize(as_rooted(g, v), h));
        std::sort(cls.begin(), cls.end());
        return cls;
    };
    auto target = profile(G);
    BigInt count = 0;
    enumerate_graphs(G.n, static_cast<int>(G.edge_count()), [&](const Graph& g) {
        if (profile(g) == target) count += 1;
    });
    return count;
}

Rational exact_subgraph_expectation(const DegreeSequence& D, const ColoredMultigraph& H) {
    const auto& cs = D.colors;
    int k = H.n, n = D.n();
    // automorphisms of H, counted directly
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    long aut = 0;
    do {
        bool ok = true;
        for (const auto& [key, w] : H.omega) {
            auto [c, u, v] = key;
            auto it = H.omega.find({c, perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]});
            if (it == H.omega.end() || it->second != w) ok = false;
        }
        aut += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));

    BigInt sum = 0, total = 0;
    enumerate_configurations(D, [&](const Configuration& s) {
        auto G = build(s, D);
        total += 1;
        std::vector<int> tau(static_cast<std::size_t>(k));
        std::vector<char> used(static_cast<std::size_t>(n), 0);
        std::function<void(int)> rec = [&](int i) {
            if (i == k) {
                BigInt y = 1;
                for (const auto& [key, w] : H.omega) {
                    auto [c, u, v] = key;
                    int gu = tau[static_cast<std::size_t>(u)], gv = tau[static_cast<std::size_t>(v)];
                    auto it = G.omega.find({c, gu, gv});
                    int have = it == G.omega.end() ? 0 : it->second;
                    if (cs.is_lt(c)) y *= choose(have, w);
                    else if (cs.is_eq(c) && u == v) y *= choose(have / 2, w / 2);
                    else if (cs.is_eq(c) && u < v) y *= choose(have, w);
                }
                sum += y;
                return;
            }
            for (int u = 0; u < n; ++u) {
                if (used[static_cast<std::size_t>(u)]) continue;
                used[static_cast<std::size_t>(u)] = 1;
                tau[static_cast<std::size_t>(i)] = u;
                rec(i + 1);
                used[static_cast<std::size_t>(u)] = 0;
            }
        };
        rec(0);
    });
    Rational q(sum, total * aut);
    q.canonicalize();
    return q;
}

}  // namespace lwc::oracle

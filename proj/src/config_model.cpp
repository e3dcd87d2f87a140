#include "lwc/config_model.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace lwc {

std::vector<long> DegreeSequence::totals() const {
    std::vector<long> S(static_cast<std::size_t>(colors.count()), 0);
    for (const auto& m : D)
        for (int c = 0; c < colors.count(); ++c) S[static_cast<std::size_t>(c)] += m[static_cast<std::size_t>(c)];
    return S;
}

void validate(const DegreeSequence& D) {
    if (D.colors.L < 1) throw std::invalid_argument("degree sequence: L must be >= 1");
    for (const auto& m : D.D) {
        if (static_cast<int>(m.size()) != D.colors.count()) throw std::invalid_argument("degree sequence: matrix size != L^2");
        for (int x : m)
            if (x < 0) throw std::invalid_argument("degree sequence: negative entry");
    }
    auto S = D.totals();
    for (int c = 0; c < D.colors.count(); ++c) {
        if (S[static_cast<std::size_t>(c)] != S[static_cast<std::size_t>(D.colors.conj(c))])
            throw std::invalid_argument("degree sequence: S is not symmetric");
        if (D.colors.is_eq(c) && S[static_cast<std::size_t>(c)] % 2)
            throw std::invalid_argument("degree sequence: odd diagonal entry of S");
    }
}

bool is_valid(const DegreeSequence& D) {
    try {
        validate(D);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

int ColoredMultigraph::at(int c, int u, int v) const {
    auto it = omega.find({c, u, v});
    return it == omega.end() ? 0 : it->second;
}

void ColoredMultigraph::add_edge(int u, int v, int c) {
    if (u == v && colors.is_eq(c)) {
        omega[{c, u, u}] += 2;
        return;
    }
    omega[{c, u, v}] += 1;
    omega[{colors.conj(c), v, u}] += 1;
}

int Multigraph::at(int u, int v) const {
    auto it = mult.find({std::min(u, v), std::max(u, v)});
    return it == mult.end() ? 0 : it->second;
}

long Multigraph::edge_count() const {
    long s = 0;
    for (const auto& [k, m] : mult) s += m;
    return s;
}

bool Multigraph::simple() const {
    for (const auto& [k, m] : mult)
        if (k.first == k.second || m > 1) return false;
    return true;
}

Graph Multigraph::to_graph() const {
    if (!simple()) throw std::invalid_argument("to_graph: multigraph has loops or parallel edges");
    Graph g(n);
    for (const auto& [k, m] : mult) g.add_edge(k.first, k.second);
    return g;
}

std::vector<std::vector<int>> Multigraph::neighbors() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [k, m] : mult) {
        if (k.first == k.second) continue;
        adj[static_cast<std::size_t>(k.first)].push_back(k.second);
        adj[static_cast<std::size_t>(k.second)].push_back(k.first);
    }
    return adj;
}

Multigraph multigraph_of(const Graph& g) {
    Multigraph m;
    m.n = g.n;
    for (auto [u, v] : g.edges()) m.mult[{u, v}] = 1;
    return m;
}

HalfEdges::HalfEdges(const DegreeSequence& D) {
    offsets_.assign(static_cast<std::size_t>(D.colors.count()), std::vector<long>(static_cast<std::size_t>(D.n()) + 1, 0));
    for (int c = 0; c < D.colors.count(); ++c) {
        auto& o = offsets_[static_cast<std::size_t>(c)];
        for (int u = 0; u < D.n(); ++u) o[static_cast<std::size_t>(u) + 1] = o[static_cast<std::size_t>(u)] + D.at(u, c);
    }
}

int HalfEdges::owner(int c, long x) const {
    const auto& o = offsets_[static_cast<std::size_t>(c)];
    return static_cast<int>(std::upper_bound(o.begin(), o.end(), x) - o.begin()) - 1;
}

Configuration sample_configuration(const DegreeSequence& D, Rng& rng) {
    validate(D);
    const auto& cs = D.colors;
    auto S = D.totals();
    Configuration sigma;
    sigma.colors = cs;
    sigma.pairing.resize(static_cast<std::size_t>(cs.count()));
    for (int c = 0; c < cs.count(); ++c) {
        long size = S[static_cast<std::size_t>(c)];
        auto& p = sigma.pairing[static_cast<std::size_t>(c)];
        if (cs.is_eq(c)) {
            // least unmatched half-edge, partner uniform among the rest
            p.assign(static_cast<std::size_t>(size), -1);
            std::vector<int> pool(static_cast<std::size_t>(size)), where(static_cast<std::size_t>(size));
            std::iota(pool.begin(), pool.end(), 0);
            std::iota(where.begin(), where.end(), 0);
            auto take = [&](int x) {
                int i = where[static_cast<std::size_t>(x)];
                int last = pool.back();
                pool[static_cast<std::size_t>(i)] = last;
                where[static_cast<std::size_t>(last)] = i;
                pool.pop_back();
            };
            for (int x = 0; x < size; ++x) {
                if (p[static_cast<std::size_t>(x)] >= 0) continue;
                take(x);
                int y = pool[uniform_index(rng, pool.size())];
                take(y);
                p[static_cast<std::size_t>(x)] = y;
                p[static_cast<std::size_t>(y)] = x;
            }
        } else if (cs.is_lt(c)) {
            p.resize(static_cast<std::size_t>(size));
            std::iota(p.begin(), p.end(), 0);
            shuffle(p, rng);
        }
    }
    return sigma;
}

ColoredMultigraph graph_of(const Configuration& sigma, const DegreeSequence& D) {
    const auto& cs = D.colors;
    HalfEdges W(D);
    ColoredMultigraph G;
    G.colors = cs;
    G.n = D.n();
    for (int c = 0; c < cs.count(); ++c) {
        const auto& p = sigma.pairing[static_cast<std::size_t>(c)];
        if (cs.is_eq(c)) {
            for (std::size_t x = 0; x < p.size(); ++x)
                if (static_cast<int>(x) < p[x]) G.add_edge(W.owner(c, static_cast<long>(x)), W.owner(c, p[x]), c);
        } else if (cs.is_lt(c)) {
            for (std::size_t x = 0; x < p.size(); ++x)
                G.add_edge(W.owner(c, static_cast<long>(x)), W.owner(cs.conj(c), p[x]), c);
        }
    }
    return G;
}

Multigraph colorblind(const ColoredMultigraph& G) {
    Multigraph m;
    m.n = G.n;
    for (const auto& [key, w] : G.omega) {
        auto [c, u, v] = key;
        (void)c;
        if (u < v) m.mult[{u, v}] += w;
        else if (u == v) m.mult[{u, u}] += w;  // halved below
    }
    for (auto it = m.mult.begin(); it != m.mult.end();) {
        if (it->first.first == it->first.second) it->second /= 2;
        if (it->second == 0) it = m.mult.erase(it);
        else ++it;
    }
    return m;
}

DegreeSequence degree_sequence_of(const ColoredMultigraph& G) {
    DegreeSequence D;
    D.colors = G.colors;
    D.D.assign(static_cast<std::size_t>(G.n), ColorMatrix(static_cast<std::size_t>(G.colors.count()), 0));
    for (const auto& [key, w] : G.omega) {
        auto [c, u, v] = key;
        (void)v;
        D.D[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)] += w;
    }
    return D;
}

BigInt config_space_size(const DegreeSequence& D) {
    validate(D);
    auto S = D.totals();
    BigInt r = 1;
    for (int c = 0; c < D.colors.count(); ++c) {
        auto s = static_cast<unsigned>(S[static_cast<std::size_t>(c)]);
        if (D.colors.is_lt(c)) r *= factorial(s);
        else if (D.colors.is_eq(c)) r *= matchings_count(s);
    }
    return r;
}

BigInt multiplicity_factor(const ColoredMultigraph& H) {
    const auto& cs = H.colors;
    BigInt b = 1;
    for (const auto& [key, w] : H.omega) {
        auto [c, u, v] = key;
        auto uw = static_cast<unsigned>(w);
        if (cs.is_lt(c)) {
            b *= factorial(uw);
        } else if (cs.is_eq(c)) {
            if (u == v) {
                b *= factorial(uw / 2);
                b <<= uw / 2;
            } else if (u < v) {
                b *= factorial(uw);
            }
        }
    }
    return b;
}

BigInt fiber_size(const DegreeSequence& D, const ColoredMultigraph& H) {
    validate(D);
    if (!(degree_sequence_of(H) == D) || H.n != D.n()) return 0;
    BigInt num = 1;
    for (int u = 0; u < D.n(); ++u)
        for (int c = 0; c < D.colors.count(); ++c)
            num *= factorial(static_cast<unsigned>(D.at(u, c)));
    BigInt den = multiplicity_factor(H);
    if (num % den != 0) throw std::logic_error("fiber_size: non-integral count");
    return num / den;
}

Rational cm_probability(const DegreeSequence& D, const ColoredMultigraph& H) {
    Rational q(fiber_size(D, H), config_space_size(D));
    q.canonicalize();
    return q;
}

bool has_cycle_leq(const Multigraph& G, int h) {
    if (h < 1) return false;
    for (const auto& [k, m] : G.mult) {
        if (k.first == k.second) return true;
        if (h >= 2 && m > 1) return true;
    }
    if (h < 3) return false;
    auto adj = G.neighbors();
    int reach = h / 2;
    std::vector<int> dist(static_cast<std::size_t>(G.n), -1), parent(static_cast<std::size_t>(G.n), -1);
    std::vector<int> touched;
    for (int r = 0; r < G.n; ++r) {
        for (int x : touched) dist[static_cast<std::size_t>(x)] = -1;
        touched = {r};
        dist[static_cast<std::size_t>(r)] = 0;
        parent[static_cast<std::size_t>(r)] = -1;
        for (std::size_t i = 0; i < touched.size(); ++i) {
            int u = touched[i];
            int du = dist[static_cast<std::size_t>(u)];
            for (int w : adj[static_cast<std::size_t>(u)]) {
                if (w == parent[static_cast<std::size_t>(u)]) continue;
                int dw = dist[static_cast<std::size_t>(w)];
                if (dw >= 0) {
                    if (du + dw + 1 <= h) return true;
                    continue;
                }
                if (du == reach) continue;
                dist[static_cast<std::size_t>(w)] = du + 1;
                parent[static_cast<std::size_t>(w)] = u;
                touched.push_back(w);
            }
        }
    }
    return false;
}

GdhSampler::GdhSampler(DegreeSequence D, int h, std::optional<std::uint64_t> max_attempts)
    : D_(std::move(D)), h_(h), max_attempts_(max_attempts) {
    validate(D_);
}

std::uint64_t GdhSampler::attempt_cap() const {
    if (max_attempts_) return *max_attempts_;
    if (stats_.accepts == 0) return 1000000;
    return static_cast<std::uint64_t>(std::ceil(1000.0 / stats_.acceptance_rate()));
}

ColoredMultigraph GdhSampler::sample(Rng& rng) {
    std::uint64_t cap = attempt_cap();
    for (std::uint64_t t = 0; t < cap; ++t) {
        ++stats_.attempts;
        auto G = graph_of(sample_configuration(D_, rng), D_);
        if (!has_cycle_leq(colorblind(G), h_)) {
            ++stats_.accepts;
            return G;
        }
    }
    throw SamplingFailure("sample_G_Dh: no acceptance within " + std::to_string(cap) + " attempts (acceptance estimate " +
                              std::to_string(stats_.acceptance_rate()) + ")",
                          stats_);
}

ColoredMultigraph sample_G_Dh(const DegreeSequence& D, int h, Rng& rng, std::optional<std::uint64_t> max_attempts,
                              RejectionStats* stats) {
    GdhSampler s(D, h, max_attempts);
    try {
        auto G = s.sample(rng);
        if (stats) *stats = s.stats();
        return G;
    } catch (const SamplingFailure&) {
        if (stats) *stats = s.stats();
        throw;
    }
}

bool graphical_check(std::vector<int> d) {
    long sum = 0;
    for (int x : d) {
        if (x < 0) return false;
        sum += x;
    }
    if (sum % 2) return false;
    std::sort(d.begin(), d.end(), std::greater<>());
    long n = static_cast<long>(d.size());
    long left = 0;
    for (long k = 1; k <= n; ++k) {
        left += d[static_cast<std::size_t>(k - 1)];
        long right = k * (k - 1);
        for (long i = k; i < n; ++i) right += std::min<long>(d[static_cast<std::size_t>(i)], k);
        if (left > right) return false;
    }
    return true;
}

long excess(const ColoredMultigraph& H) { return colorblind(H).edge_count() - H.n; }

long automorphisms(const ColoredMultigraph& H) {
    if (H.n > 8) throw std::invalid_argument("automorphisms: pattern too large for brute force");
    std::vector<int> perm(static_cast<std::size_t>(H.n));
    std::iota(perm.begin(), perm.end(), 0);
    long count = 0;
    do {
        bool ok = true;
        for (const auto& [key, w] : H.omega) {
            auto [c, u, v] = key;
            if (H.at(c, perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]) != w) {
                ok = false;
                break;
            }
        }
        count += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

namespace {

// d_c^H(i) and s_c^H
std::pair<std::vector<ColorMatrix>, std::vector<long>> pattern_degrees(const ColoredMultigraph& H) {
    auto D = degree_sequence_of(H);
    return {D.D, D.totals()};
}

}  // namespace

Rational subgraph_count_expectation(const DegreeSequence& D, const ColoredMultigraph& H) {
    validate(D);
    const auto& cs = D.colors;
    auto [dH, sH] = pattern_degrees(H);
    int k = H.n;
    int n = D.n();
    if (k > n) return 0;
    // sum over injective maps of prod_i prod_c (D_c(tau(i)))_{d_c(i)}
    std::vector<std::vector<BigInt>> weight(static_cast<std::size_t>(k), std::vector<BigInt>(static_cast<std::size_t>(n)));
    for (int i = 0; i < k; ++i)
        for (int u = 0; u < n; ++u) {
            BigInt w = 1;
            for (int c = 0; c < cs.count(); ++c)
                w *= falling(D.at(u, c), static_cast<unsigned>(dH[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]));
            weight[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)] = w;
        }
    double maps = 1;
    for (int i = 0; i < k; ++i) maps *= n - i;
    if (maps > 5e7) throw std::invalid_argument("subgraph_count_expectation: too many vertex maps for exact mode");
    BigInt sum = 0;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::function<void(int, const BigInt&)> rec = [&](int i, const BigInt& acc) {
        if (acc == 0) return;
        if (i == k) {
            sum += acc;
            return;
        }
        for (int u = 0; u < n; ++u) {
            if (used[static_cast<std::size_t>(u)]) continue;
            used[static_cast<std::size_t>(u)] = 1;
            rec(i + 1, acc * weight[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)]);
            used[static_cast<std::size_t>(u)] = 0;
        }
    };
    rec(0, BigInt(1));
    auto S = D.totals();
    BigInt den = BigInt(automorphisms(H)) * multiplicity_factor(H);
    for (int c = 0; c < cs.count(); ++c) {
        long s = sH[static_cast<std::size_t>(c)];
        if (cs.is_lt(c)) den *= falling(S[static_cast<std::size_t>(c)], static_cast<unsigned>(s));
        else if (cs.is_eq(c)) den *= falling_double(S[static_cast<std::size_t>(c)], static_cast<unsigned>(s));
    }
    if (den == 0) return 0;
    Rational q(sum, den);
    q.canonicalize();
    return q;
}

double subgraph_intensity(const DegreeSequence& D, const ColoredMultigraph& H) {
    validate(D);
    const auto& cs = D.colors;
    auto [dH, sH] = pattern_degrees(H);
    double n = D.n();
    double value = 1;
    for (int i = 0; i < H.n; ++i) {
        double mean = 0;
        for (int u = 0; u < D.n(); ++u) {
            double w = 1;
            for (int c = 0; c < cs.count(); ++c)
                w *= falling(D.at(u, c), static_cast<unsigned>(dH[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)])).get_d();
            mean += w;
        }
        value *= mean / n;
    }
    auto S = D.totals();
    value /= static_cast<double>(automorphisms(H)) * multiplicity_factor(H).get_d();
    for (int c = 0; c < cs.count(); ++c) {
        double ed = static_cast<double>(S[static_cast<std::size_t>(c)]) / n;
        value /= std::pow(ed, static_cast<double>(sH[static_cast<std::size_t>(c)]) / 2.0);
    }
    return value * std::pow(n, -static_cast<double>(excess(H)));
}

DegreeSequence regular_sequence(int n, int d) {
    DegreeSequence D;
    D.colors.L = 1;
    D.D.assign(static_cast<std::size_t>(n), ColorMatrix{d});
    return D;
}

ColoredMultigraph cycle_pattern(int k) {
    ColoredMultigraph H;
    H.colors.L = 1;
    H.n = k;
    if (k == 1) H.add_edge(0, 0, 0);
    else if (k == 2) {
        H.add_edge(0, 1, 0);
        H.add_edge(0, 1, 0);
    } else {
        for (int i = 0; i < k; ++i) H.add_edge(i, (i + 1) % k, 0);
    }
    return H;
}

Explorer::Explorer(const DegreeSequence& D) : D_(D), W_(D) { validate(D_); }

ExploredBall Explorer::explore(int v, int k, Rng& rng) const {
    const auto& cs = D_.colors;
    struct Vertex {
        int global;
        int depth;
        std::vector<int> label;  // (length, l1, l2, ...) compares as the order on N^f
    };
    std::vector<Vertex> verts;
    std::unordered_map<int, int> local;
    std::vector<std::unordered_set<long>> matched(static_cast<std::size_t>(cs.count()));
    using Active = std::tuple<std::vector<int>, int, long>;  // (label, colour, half-edge)
    std::set<Active> active;
    std::map<std::pair<int, long>, std::vector<int>> label_of;  // half-edge -> owner label

    auto add_vertex = [&](int g, int depth, std::vector<int> label, int skip_c, long skip_x) {
        int id = static_cast<int>(verts.size());
        local[g] = id;
        verts.push_back({g, depth, label});
        for (int c = 0; c < cs.count(); ++c)
            for (long x = W_.first(c, g); x < W_.first(c, g) + D_.at(g, c); ++x) {
                if (c == skip_c && x == skip_x) continue;
                active.emplace(label, c, x);
                label_of[{c, x}] = label;
            }
        return id;
    };

    ExploredBall out;
    out.ball.n = 0;
    add_vertex(v, 0, {0}, -1, -1);
    while (!active.empty()) {
        auto [label, c, x] = *active.begin();
        int u = local.at(W_.owner(c, x));
        if (verts[static_cast<std::size_t>(u)].depth > k) break;
        active.erase(active.begin());
        int pc = cs.is_eq(c) ? c : cs.conj(c);
        long y;
        auto& mc = matched[static_cast<std::size_t>(c)];
        auto& mp = matched[static_cast<std::size_t>(pc)];
        long pool = W_.size(pc);
        if (static_cast<long>(mp.size()) + (pc == c ? 1 : 0) >= pool) throw std::logic_error("explore: no free half-edge");
        do {
            y = static_cast<long>(uniform_index(rng, static_cast<std::uint64_t>(pool)));
        } while (mp.count(y) || (pc == c && y == x));
        mc.insert(x);
        mp.insert(y);
        ++out.matched;
        int gw = W_.owner(pc, y);
        int du = verts[static_cast<std::size_t>(u)].depth;
        int w;
        auto found = local.find(gw);
        if (found != local.end()) {
            w = found->second;
            active.erase({label_of.at({pc, y}), pc, y});
        } else {
            // child label: parent label extended by the rank of the half-edge at u
            long rank = x - W_.first(c, verts[static_cast<std::size_t>(u)].global);
            for (int c2 = 0; c2 < c; ++c2) rank += D_.at(verts[static_cast<std::size_t>(u)].global, c2);
            std::vector<int> child = verts[static_cast<std::size_t>(u)].label;
            child[0] += 1;
            child.push_back(static_cast<int>(rank));
            w = add_vertex(gw, du + 1, child, pc, y);
        }
        if (verts[static_cast<std::size_t>(w)].depth <= k) out.ball.edges.push_back({u, w, c, cs.conj(c)});
    }
    // keep ball vertices only (depth <= k); they were created before any deeper one
    int inside = 0;
    for (const auto& vx : verts) inside += vx.depth <= k;
    out.ball.n = inside;
    out.ball.root = 0;
    out.tree = static_cast<int>(out.ball.edges.size()) == inside - 1;
    return out;
}

ExploredBall explore_neighborhood(const DegreeSequence& D, int v, int k, Rng& rng) { return Explorer(D).explore(v, k, rng); }

LabeledRootedGraph colored_ball(const ColoredMultigraph& G, int v, int k) {
    const auto& cs = G.colors;
    LabeledRootedGraph full;
    full.n = G.n;
    full.root = v;
    for (const auto& [key, w] : G.omega) {
        auto [c, a, b] = key;
        if (a < b) {
            for (int r = 0; r < w; ++r) full.edges.push_back({a, b, c, cs.conj(c)});
        } else if (a == b) {
            if (cs.is_eq(c))
                for (int r = 0; r < w / 2; ++r) full.edges.push_back({a, a, c, c});
            else if (cs.is_lt(c))
                for (int r = 0; r < w; ++r) full.edges.push_back({a, a, c, cs.conj(c)});
        }
    }
    return ball(full, k);
}

void random_switch(Configuration& sigma, int c, Rng& rng) {
    const auto& cs = sigma.colors;
    if (cs.is_gt(c)) c = cs.conj(c);
    auto& p = sigma.pairing[static_cast<std::size_t>(c)];
    auto size = static_cast<std::uint64_t>(p.size());
    if (cs.is_eq(c)) {
        if (size < 4) return;
        int a = static_cast<int>(uniform_index(rng, size));
        int x;
        do x = static_cast<int>(uniform_index(rng, size));
        while (x == a || x == p[static_cast<std::size_t>(a)]);
        int b = p[static_cast<std::size_t>(a)], y = p[static_cast<std::size_t>(x)];
        p[static_cast<std::size_t>(a)] = x;
        p[static_cast<std::size_t>(x)] = a;
        p[static_cast<std::size_t>(b)] = y;
        p[static_cast<std::size_t>(y)] = b;
    } else {
        if (size < 2) return;
        auto a = uniform_index(rng, size);
        std::uint64_t x;
        do x = uniform_index(rng, size);
        while (x == a);
        std::swap(p[a], p[x]);
    }
}

}  // namespace lwc

namespace lwc {

void for_each_configuration(const DegreeSequence& D, const std::function<void(const Configuration&)>& visit) {
    validate(D);
    const auto& cs = D.colors;
    auto S = D.totals();
    Configuration sigma;
    sigma.colors = cs;
    sigma.pairing.resize(static_cast<std::size_t>(cs.count()));
    // matchings as sequences of choices: position i of the free list pairs with a later free slot
    std::function<void(int)> colour;
    std::function<void(int, std::vector<int>&)> match = [&](int c, std::vector<int>& p) {
        int x = -1;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] < 0) {
                x = static_cast<int>(i);
                break;
            }
        if (x < 0) {
            colour(c + 1);
            return;
        }
        for (std::size_t y = static_cast<std::size_t>(x) + 1; y < p.size(); ++y) {
            if (p[y] >= 0) continue;
            p[static_cast<std::size_t>(x)] = static_cast<int>(y);
            p[y] = x;
            match(c, p);
            p[static_cast<std::size_t>(x)] = p[y] = -1;
        }
    };
    colour = [&](int c) {
        if (c == cs.count()) {
            visit(sigma);
            return;
        }
        auto& p = sigma.pairing[static_cast<std::size_t>(c)];
        auto size = static_cast<std::size_t>(S[static_cast<std::size_t>(c)]);
        if (cs.is_eq(c)) {
            p.assign(size, -1);
            match(c, p);
        } else if (cs.is_lt(c)) {
            p.resize(size);
            std::iota(p.begin(), p.end(), 0);
            do colour(c + 1);
            while (std::next_permutation(p.begin(), p.end()));
        } else {
            colour(c + 1);
        }
    };
    colour(0);
}

}  // namespace lwc

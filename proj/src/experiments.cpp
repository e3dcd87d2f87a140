#include "lwc/experiments.hpp"

#include "lwc/rooted_graphs.hpp"
#include "lwc/ugw.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace lwc::experiments {

namespace {

struct MeanVar {
    double mean = 0, sd = 0;
};

MeanVar moments(const std::vector<double>& xs) {
    MeanVar m;
    if (xs.empty()) return m;
    for (double x : xs) m.mean += x;
    m.mean /= static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0;
        for (double x : xs) ss += (x - m.mean) * (x - m.mean);
        m.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return m;
}

// depth-k ball of v in a multigraph, from an adjacency list with multiplicities
struct LocalBalls {
    std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbour, multiplicity), loops included once
    std::vector<int> label;

    explicit LocalBalls(const Multigraph& G)
        : adj(static_cast<std::size_t>(G.n)), label(static_cast<std::size_t>(G.n), -1) {
        for (const auto& [k, m] : G.mult) {
            adj[static_cast<std::size_t>(k.first)].push_back({k.second, m});
            if (k.first != k.second) adj[static_cast<std::size_t>(k.second)].push_back({k.first, m});
        }
    }

    LabeledRootedGraph operator()(int v, int k) {
        std::vector<int> order{v}, dist{0};
        label[static_cast<std::size_t>(v)] = 0;
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (dist[i] == k) continue;
            for (auto [w, m] : adj[static_cast<std::size_t>(order[i])])
                if (label[static_cast<std::size_t>(w)] < 0) {
                    label[static_cast<std::size_t>(w)] = static_cast<int>(order.size());
                    order.push_back(w);
                    dist.push_back(dist[i] + 1);
                }
        }
        LabeledRootedGraph b;
        b.n = static_cast<int>(order.size());
        b.root = 0;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (auto [w, m] : adj[static_cast<std::size_t>(order[i])]) {
                int j = label[static_cast<std::size_t>(w)];
                if (j < static_cast<int>(i)) continue;  // outside the ball, or seen from the other end
                for (int r = 0; r < m; ++r) b.edges.push_back({static_cast<int>(i), j});
            }
        for (int u : order) label[static_cast<std::size_t>(u)] = -1;
        return b;
    }
};

}  // namespace

double CycleReport::acceptance_sigma() const {
    return samples ? std::sqrt(alpha_target * (1 - alpha_target) / samples) : 0.0;
}

long count_cycles(const Multigraph& G, int length) {
    if (length < 3) throw std::invalid_argument("count_cycles: length must be >= 3");
    auto adj = G.neighbors();
    long total = 0;
    std::vector<int> path;
    std::vector<char> on(static_cast<std::size_t>(G.n), 0);
    // paths from the smallest vertex s through larger vertices; each cycle is seen in both directions
    std::function<void(int, int, long)> walk = [&](int s, int v, long weight) {
        if (static_cast<int>(path.size()) == length) {
            int m = G.at(v, s);
            if (m) total += weight * m;
            return;
        }
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (w <= s || on[static_cast<std::size_t>(w)]) continue;
            on[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            walk(s, w, weight * G.at(v, w));
            path.pop_back();
            on[static_cast<std::size_t>(w)] = 0;
        }
    };
    for (int s = 0; s < G.n; ++s) {
        path.assign(1, s);
        on[static_cast<std::size_t>(s)] = 1;
        walk(s, s, 1);
        on[static_cast<std::size_t>(s)] = 0;
    }
    return total / 2;
}

CycleReport cycles(int n, int d, int samples, int max_length, std::uint64_t seed, int threads) {
    if (samples < 1 || max_length < 1) throw std::invalid_argument("cycles: need samples >= 1 and max_length >= 1");
    auto D = regular_sequence(n, d);
    validate(D);
    CycleReport rep;
    rep.n = n;
    rep.d = d;
    rep.samples = samples;
    struct Sample {
        std::vector<double> counts;
        bool simple = false;
    };
    auto results = parallel_map<Sample>(static_cast<std::size_t>(samples), threads, [&](std::size_t i) {
        Rng rng(substream(seed, i));
        auto m = colorblind(graph_of(sample_configuration(D, rng), D));
        Sample s;
        for (int l = 1; l <= max_length; ++l) {
            long c = 0;
            if (l == 1) {
                for (const auto& [k, x] : m.mult)
                    if (k.first == k.second) c += x;
            } else if (l == 2) {
                for (const auto& [k, x] : m.mult)
                    if (k.first != k.second) c += static_cast<long>(x) * (x - 1) / 2;
            } else {
                c = count_cycles(m, l);
            }
            s.counts.push_back(static_cast<double>(c));
        }
        s.simple = m.simple();
        return s;
    });
    for (int l = 1; l <= max_length; ++l) {
        std::vector<double> xs;
        for (const auto& s : results) xs.push_back(s.counts[static_cast<std::size_t>(l - 1)]);
        auto mv = moments(xs);
        rep.rows.push_back({l, mv.mean, mv.sd / std::sqrt(static_cast<double>(samples)), subgraph_intensity(D, cycle_pattern(l))});
    }
    for (const auto& s : results) rep.simple += s.simple;
    rep.alpha_target = std::exp(-subgraph_intensity(D, cycle_pattern(1)) - subgraph_intensity(D, cycle_pattern(2)));
    return rep;
}

DegreeSequence sequence_for(const ExactLaw& P, int n) {
    if (P.depth != 1) throw std::invalid_argument("sequence_for: needs a degree law");
    DegreeSequence D;
    D.colors.L = 1;
    for (const auto& [k, w] : degree_distribution(P)) {
        Rational count = w * n;
        if (count.get_den() != 1) throw std::invalid_argument("sequence_for: n * P(k) is not an integer");
        for (long i = 0; i < count.get_num().get_si(); ++i) D.D.push_back(ColorMatrix{k});
    }
    validate(D);
    return D;
}

std::vector<ConvergeRow> converge(const ExactLaw& P, const std::vector<int>& n_list, int samples, int depth, int girth_h,
                                  std::uint64_t seed, int threads) {
    if (samples < 1) throw std::invalid_argument("converge: need samples >= 1");
    auto target = marginal_ugw(P, depth);
    std::vector<ConvergeRow> rows;
    for (std::size_t ni = 0; ni < n_list.size(); ++ni) {
        int n = n_list[ni];
        auto D = sequence_for(P, n);
        struct Sample {
            std::map<CanonicalClass, long> counts;
            RejectionStats stats;
        };
        std::uint64_t base = derive_seed(seed, ni);
        auto results = parallel_map<Sample>(static_cast<std::size_t>(samples), threads, [&](std::size_t i) {
            Rng rng(substream(base, i));
            Sample s;
            auto G = sample_G_Dh(D, girth_h, rng, std::nullopt, &s.stats);
            for (auto c : neighborhood_classes(colorblind(G).to_graph(), depth)) ++s.counts[c];
            return s;
        });
        FloatLaw mean;
        mean.depth = depth;
        long attempts = 0, accepts = 0;
        for (const auto& s : results) {
            for (const auto& [c, k] : s.counts) mean.p[c] += static_cast<double>(k) / n / samples;
            attempts += static_cast<long>(s.stats.attempts);
            accepts += static_cast<long>(s.stats.accepts);
        }
        rows.push_back({n, tv_distance(mean, target), attempts ? static_cast<double>(accepts) / static_cast<double>(attempts) : 0.0});
    }
    return rows;
}

ConcentrationReport concentrate(int d, const std::vector<int>& n_list, int samples, std::uint64_t seed, int threads) {
    if (samples < 2) throw std::invalid_argument("concentrate: need samples >= 2");
    ConcentrationReport rep;
    rep.d = d;
    rep.samples = samples;
    // a vertex's depth-1 ball changes for at most kappa vertices per added or removed edge
    rep.kappa = 2;
    // one switch moves n*rho_n(A) by <= 4 kappa; N = d n half-edges
    rep.delta = 1 / (16 * rep.kappa * rep.kappa * d);
    auto target = star(d);
    for (std::size_t ni = 0; ni < n_list.size(); ++ni) {
        int n = n_list[ni];
        auto D = regular_sequence(n, d);
        std::uint64_t base = derive_seed(seed, ni);
        auto freq = parallel_map<double>(static_cast<std::size_t>(samples), threads, [&](std::size_t i) {
            Rng rng(substream(base, i));
            LocalBalls balls(colorblind(graph_of(sample_configuration(D, rng), D)));
            long hits = 0;
            for (int v = 0; v < n; ++v) hits += canonicalize(balls(v, 1), 1) == target;
            return static_cast<double>(hits) / n;
        });
        auto mv = moments(freq);
        ConcentrationRow row;
        row.n = n;
        row.mean = mv.mean;
        row.sd = mv.sd;
        row.scale = mv.sd * std::sqrt(static_cast<double>(n));
        std::vector<double> ts;
        for (int j = 1; j <= 8; ++j) ts.push_back(static_cast<double>(j) / n);
        // up to where the envelope drops to 1e-3
        double t_max = std::sqrt(std::log(2000.0) / (rep.delta * n));
        for (int j = 1; j <= 10; ++j) ts.push_back(t_max * j / 10);
        for (double t : ts) {
            long over = 0;
            for (double f : freq) over += std::abs(f - mv.mean) >= t;
            row.tail.push_back({t, static_cast<double>(over) / samples, 2 * std::exp(-rep.delta * n * t * t)});
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace lwc::experiments

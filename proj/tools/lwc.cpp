#include "lwc/config_model.hpp"
#include "lwc/entropy.hpp"
#include "lwc/experiments.hpp"
#include "lwc/io.hpp"
#include "lwc/oracle.hpp"
#include "lwc/tree_encoding.hpp"
#include "lwc/ugw.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

using namespace lwc;
using io::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kSampling = 2, kBadLaw = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LawError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Global {
    std::uint64_t seed = 0;
    std::string format;
    std::string out;
    int threads = 1;
};

Global g;

void emit(const json& j, const std::string& csv, const std::string& default_format = "json") {
    std::string fmt = g.format.empty() ? default_format : g.format;
    std::string text = fmt == "csv" ? csv : j.dump(2) + "\n";
    if (g.out.empty()) std::cout << text;
    else io::write_file(g.out, text);
}

json header(const std::string& command) { return {{"schema", io::kSchema}, {"command", command}, {"seed", g.seed}}; }

io::LawInput load_law(const std::string& path) {
    try {
        return io::read_law(path);
    } catch (const std::invalid_argument& e) {
        throw LawError(path + ": " + e.what());
    }
}

DegreeSequence load_degrees(const std::string& path) {
    try {
        return io::read_degrees(path);
    } catch (const std::invalid_argument& e) {
        throw UsageError(path + ": " + e.what());
    }
}

template <class W>
void require_admissible(const Law<W>& P, const std::string& what) {
    if (!is_admissible(P)) throw LawError(what + ": law is not admissible (e_P is not symmetric)");
}

// calls f with both laws in a common arithmetic
template <class F>
auto with_pair(const io::LawInput& a, const io::LawInput& b, F f) {
    if (a.exact && b.exact) return f(a.exact_law, b.exact_law);
    return f(a.exact ? to_float(a.exact_law) : a.float_law, b.exact ? to_float(b.exact_law) : b.float_law);
}

template <class F>
auto with_law(const io::LawInput& a, F f) {
    return a.exact ? f(a.exact_law) : f(a.float_law);
}

std::string csv_rows(const std::vector<std::pair<std::string, json>>& rows) {
    std::string s = "name,value\n";
    for (const auto& [k, v] : rows) s += k + "," + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    return s;
}

void emit_scalar(const std::string& command, double value, const json& terms) {
    json j = header(command);
    j["value"] = io::number(value);
    j["terms"] = terms;
    std::vector<std::pair<std::string, json>> rows{{"value", io::number(value)}};
    for (const auto& [k, v] : terms.items()) rows.emplace_back(k, v);
    emit(j, csv_rows(rows));
}

template <class W>
json jh_terms_json(const EntropyTerms& t, const Law<W>& P) {
    json j = {{"d", t.d}, {"minus_s", t.minus_s}, {"shannon", t.shannon}, {"pi_term", t.pi_term}, {"log_factorial", t.log_factorial}};
    if constexpr (is_exact_v<W>) j["d_exact"] = to_string(mean_degree(P));
    return j;
}

// ---- sampling ----------------------------------------------------------------

json colored_edges_json(const ColoredMultigraph& G) {
    json edges = json::array();
    std::istringstream in(io::colored_graph_to_text(G));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int u, v, i, j, m;
        ls >> u >> v >> i >> j >> m;
        edges.push_back({u, v, i, j, m});
    }
    return edges;
}

std::string colored_edges_csv(const json& edges) {
    std::string s = "u,v,i,j,mult\n";
    for (const auto& e : edges) s += std::to_string(e[0].get<int>()) + "," + std::to_string(e[1].get<int>()) + "," +
                                     std::to_string(e[2].get<int>()) + "," + std::to_string(e[3].get<int>()) + "," +
                                     std::to_string(e[4].get<int>()) + "\n";
    return s;
}

struct SampleFiles {
    std::string graph_out, colorblind_out;
    void write(const ColoredMultigraph& G) const {
        if (!graph_out.empty()) io::write_file(graph_out, io::colored_graph_to_text(G));
        if (!colorblind_out.empty()) io::write_file(colorblind_out, io::multigraph_to_text(colorblind(G)));
    }
};

void emit_graph(json j, const ColoredMultigraph& G) {
    auto edges = colored_edges_json(G);
    j["n"] = G.n;
    j["L"] = G.colors.L;
    j["simple"] = colorblind(G).simple();
    j["edges"] = edges;
    emit(j, colored_edges_csv(edges));
}

void cmd_sample_cm(const std::string& degrees, const SampleFiles& files) {
    auto D = load_degrees(degrees);
    Rng rng(g.seed);
    auto G = graph_of(sample_configuration(D, rng), D);
    files.write(G);
    emit_graph(header("sample-cm"), G);
}

void cmd_sample_gdh(const std::string& degrees, int girth, std::uint64_t max_attempts, const SampleFiles& files) {
    if (girth < 1) throw UsageError("--girth must be >= 1");
    auto D = load_degrees(degrees);
    Rng rng(g.seed);
    RejectionStats stats;
    std::optional<std::uint64_t> cap;
    if (max_attempts) cap = max_attempts;
    // girth g means no cycle of length <= g - 1
    auto G = sample_G_Dh(D, girth - 1, rng, cap, &stats);
    files.write(G);
    json j = header("sample-gdh");
    j["girth"] = girth;
    j["attempts"] = stats.attempts;
    j["acceptance_rate"] = stats.acceptance_rate();
    emit_graph(j, G);
}

std::string tree_csv(const LabeledRootedGraph& t, const std::vector<int>* side = nullptr) {
    std::string s = side ? "parent,child,child_side\n" : "parent,child\n";
    for (const auto& e : t.edges) {
        s += std::to_string(e.u) + "," + std::to_string(e.v);
        if (side) s += "," + std::to_string((*side)[static_cast<std::size_t>(e.v)]);
        s += "\n";
    }
    return s;
}

void cmd_sample_ugw(const std::string& law, int depth) {
    auto P = load_law(law);
    Rng rng(g.seed);
    auto tree = with_law(P, [&](const auto& L) {
        require_admissible(L, law);
        try {
            return sample_ugw_h(L, depth, rng);
        } catch (const std::invalid_argument& e) {
            throw LawError(e.what());
        }
    });
    json j = header("sample-ugw");
    j["depth"] = depth;
    j["class"] = encoding(canonicalize(tree, depth));
    j["tree"] = io::rooted_graph_to_json(tree);
    emit(j, tree_csv(tree));
}

void cmd_sample_bipartite(const std::string& law1, const std::string& law2, int depth) {
    auto P1 = load_law(law1), P2 = load_law(law2);
    if (P1.depth() != 1 || P2.depth() != 1) throw LawError("sample-bipartite: laws must be degree laws (depth 1)");
    Rng rng(g.seed);
    auto t = with_pair(P1, P2, [&](const auto& a, const auto& b) {
        try {
            return sample_ugw_bipartite(a, b, depth, rng);
        } catch (const std::invalid_argument& e) {
            throw LawError(e.what());
        }
    });
    json j = header("sample-bipartite");
    j["depth"] = depth;
    j["tree"] = io::rooted_graph_to_json(t.tree);
    j["side"] = t.side;
    emit(j, tree_csv(t.tree, &t.side));
}

// ---- entropy -----------------------------------------------------------------

struct EntropyArgs {
    std::string law, law2, degree_law;
    int k = 0;
    std::string d, lambda;
};

double parse_real(const std::string& s, const char* flag) {
    try {
        return to_double(parse_rational(s));
    } catch (const std::exception&) {
        throw UsageError(std::string(flag) + ": expected a number");
    }
}

void cmd_entropy(const std::string& sub, const EntropyArgs& a) {
    auto catch_law = [](auto f) {
        try {
            return f();
        } catch (const std::invalid_argument& e) {
            throw LawError(e.what());
        }
    };
    if (sub == "jh") {
        auto P = load_law(a.law);
        with_law(P, [&](const auto& L) {
            require_admissible(L, a.law);
            auto t = catch_law([&] { return J_h_terms(L); });
            json terms = jh_terms_json(t, L);
            terms["depth"] = L.depth;
            emit_scalar("entropy jh", t.value, terms);
            return 0;
        });
    } else if (sub == "sigma-ugw1") {
        auto P = load_law(a.law);
        with_law(P, [&](const auto& L) {
            if (L.depth != 1) throw LawError("sigma-ugw1: needs a degree law (depth 1)");
            double d = to_double(mean_degree(L));
            auto div = relative_entropy_poisson(L, d);
            emit_scalar("entropy sigma-ugw1", s_of_d(d) - div.value,
                        {{"d", d}, {"s", s_of_d(d)}, {"poisson_divergence", io::number(div.value)}, {"error_bound", div.error_bound}});
            return 0;
        });
    } else if (sub == "delta") {
        auto P = load_law(a.law);
        with_law(P, [&](const auto& L) {
            require_admissible(L, a.law);
            int k = a.k ? a.k : L.depth;
            if (k < 1 || k > L.depth) throw UsageError("--k must be in 1..depth of the law");
            auto t = catch_law([&] { return delta_terms(truncate_law(L, k - 1), truncate_law(L, k)); });
            emit_scalar("entropy delta", t.value, {{"k", k}, {"law_term", io::number(t.law_term)}, {"edge_term", io::number(t.edge_term)}});
            return 0;
        });
    } else if (sub == "rate-degrees") {
        auto Q = load_law(a.law), P = load_law(a.degree_law);
        with_pair(Q, P, [&](const auto& q, const auto& p) {
            if (p.depth != 1) throw LawError("rate-degrees: --degree-law must have depth 1");
            double r = catch_law([&] { return rate_fixed_degrees(q, p); });
            json terms = {{"J1_P", J_bar(p)}, {"Jh_Q", io::number(J_bar(q))}, {"depth", q.depth}};
            emit_scalar("entropy rate-degrees", r, terms);
            return 0;
        });
    } else if (sub == "rate-edges" || sub == "rate-degree-fixed") {
        auto Q = load_law(a.law);
        with_law(Q, [&](const auto& q) {
            using W = typename std::decay_t<decltype(q.p)>::mapped_type;
            W d;
            if constexpr (is_exact_v<W>) d = parse_rational(a.d);
            else d = parse_real(a.d, "--d");
            if (sub == "rate-edges") {
                double r = catch_law([&] { return rate_fixed_edges(q, d); });
                emit_scalar("entropy rate-edges", r, {{"d", to_double(d)}, {"s", s_of_d(to_double(d))}, {"Jh_Q", io::number(J_bar(q))}});
            } else {
                if (q.depth != 1) throw LawError("rate-degree-fixed: needs a degree law (depth 1)");
                double r = catch_law([&] { return rate_degree_fixed(q, d); });
                emit_scalar("entropy rate-degree-fixed", r, {{"d", to_double(d)}, {"mean", to_double(mean_degree(q))}});
            }
            return 0;
        });
    } else if (sub == "rate-binomial" || sub == "rate-degree-er") {
        auto Q = load_law(a.law);
        double lam = parse_real(a.lambda, "--lambda");
        if (!(lam > 0)) throw UsageError("--lambda must be positive");
        with_law(Q, [&](const auto& q) {
            if (sub == "rate-binomial") {
                double r = catch_law([&] { return rate_binomial(q, lam); });
                emit_scalar("entropy rate-binomial", r, {{"lambda", lam}, {"d", to_double(mean_degree(q))}, {"Jh_Q", io::number(J_bar(q))}});
            } else {
                if (q.depth != 1) throw LawError("rate-degree-er: needs a degree law (depth 1)");
                double r = catch_law([&] { return rate_degree_er(q, lam); });
                emit_scalar("entropy rate-degree-er", r, {{"lambda", lam}, {"d", to_double(mean_degree(q))}});
            }
            return 0;
        });
    } else if (sub == "disc-bound") {
        auto P1 = load_law(a.law), P2 = load_law(a.law2);
        with_pair(P1, P2, [&](const auto& p1, const auto& p2) {
            if (p1.depth != 1 || p2.depth != 1) throw LawError("disc-bound: needs degree laws (depth 1)");
            auto t = catch_law([&] { return discontinuity_bound_terms(p1, p2); });
            emit_scalar("entropy disc-bound", t.value, {{"p1", t.p1}, {"p2", t.p2}, {"d", t.d}});
            return 0;
        });
    }
}

// ---- experiments -------------------------------------------------------------

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

void cmd_cycles(const std::vector<int>& n_list, int d, int samples, int max_length) {
    json j = header("experiment cycles");
    j["d"] = d;
    j["samples"] = samples;
    j["rows"] = json::array();
    std::string csv = "n,quantity,value,stderr,target\n";
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        auto rep = experiments::cycles(n_list[i], d, samples, max_length, derive_seed(g.seed, i), g.threads);
        json row = {{"n", rep.n}, {"cycles", json::array()}};
        for (const auto& r : rep.rows) {
            row["cycles"].push_back({{"length", r.length}, {"mean", r.mean}, {"stderr", r.std_error}, {"intensity", r.intensity}});
            csv += std::to_string(rep.n) + ",cycles_" + std::to_string(r.length) + "," + fmt(r.mean) + "," + fmt(r.std_error) + "," +
                   fmt(r.intensity) + "\n";
        }
        row["simple_rate"] = rep.acceptance();
        row["simple_sigma"] = rep.acceptance_sigma();
        row["simple_target"] = rep.alpha_target;
        csv += std::to_string(rep.n) + ",simple," + fmt(rep.acceptance()) + "," + fmt(rep.acceptance_sigma()) + "," +
               fmt(rep.alpha_target) + "\n";
        j["rows"].push_back(row);
    }
    emit(j, csv, "csv");
}

void cmd_converge(const std::string& law, const std::vector<int>& n_list, int samples, int depth, int girth) {
    auto P = load_law(law);
    if (!P.exact || P.depth() != 1) throw LawError("converge: needs an exact degree law (depth 1)");
    auto rows = experiments::converge(P.exact_law, n_list, samples, depth, girth - 1, g.seed, g.threads);
    json j = header("experiment converge");
    j["depth"] = depth;
    j["girth"] = girth;
    j["samples"] = samples;
    j["rows"] = json::array();
    std::string csv = "n,tv,acceptance\n";
    for (const auto& r : rows) {
        j["rows"].push_back({{"n", r.n}, {"tv", r.tv}, {"acceptance", r.acceptance}});
        csv += std::to_string(r.n) + "," + fmt(r.tv) + "," + fmt(r.acceptance) + "\n";
    }
    emit(j, csv, "csv");
}

void cmd_concentrate(const std::vector<int>& n_list, int d, int samples) {
    auto rep = experiments::concentrate(d, n_list, samples, g.seed, g.threads);
    json j = header("experiment concentrate");
    j["d"] = d;
    j["samples"] = samples;
    j["kappa"] = rep.kappa;
    j["delta"] = rep.delta;
    j["rows"] = json::array();
    std::string csv = "n,mean,sd,scale,t,empirical,envelope\n";
    for (const auto& r : rep.rows) {
        json tail = json::array();
        for (const auto& t : r.tail) {
            tail.push_back({{"t", t.t}, {"empirical", t.empirical}, {"envelope", t.envelope}});
            csv += std::to_string(r.n) + "," + fmt(r.mean) + "," + fmt(r.sd) + "," + fmt(r.scale) + "," + fmt(t.t) + "," +
                   fmt(t.empirical) + "," + fmt(t.envelope) + "\n";
        }
        j["rows"].push_back({{"n", r.n}, {"mean", r.mean}, {"sd", r.sd}, {"scale", r.scale}, {"tail", tail}});
    }
    emit(j, csv, "csv");
}

// ---- encode ------------------------------------------------------------------

Graph read_edge_list(const std::string& path) {
    std::istringstream in(io::read_file(path));
    std::vector<std::pair<int, int>> edges;
    int n = 0, u, v;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (!(ls >> u >> v) || u < 0 || v < 0 || u == v) throw UsageError(path + ": expected \"u v\" with u != v");
        edges.push_back({u, v});
        n = std::max({n, u + 1, v + 1});
    }
    Graph G(n);
    for (auto [a, b] : edges)
        if (!G.has_edge(a, b)) G.add_edge(a, b);
    return G;
}

void cmd_encode(const std::string& graph, int h) {
    auto G = read_edge_list(graph);
    if (!is_h_treelike(G, h)) throw UsageError("encode: graph has a cycle of length <= 2h+1");
    auto enc = encode(G, h);
    json j = header("encode");
    j["context"] = io::context_to_json(enc.context);
    j["degrees"] = io::degrees_to_text(enc.D);
    auto edges = colored_edges_json(enc.graph);
    j["edges"] = edges;
    emit(j, colored_edges_csv(edges));
}

// ---- verify ------------------------------------------------------------------

int cmd_verify(bool quick) {
    int failed = 0;
    auto report = [&](const std::string& name, bool ok, const std::string& detail) {
        failed += !ok;
        std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << "\n" << std::flush;
    };
    auto degrees = [](std::map<int, Rational> m) { return degree_law(m); };
    std::vector<ExactLaw> zoo = {
        degrees({{3, 1}}),
        degrees({{1, Rational(1, 2)}, {2, Rational(1, 2)}}),
        degrees({{0, Rational(1, 4)}, {1, Rational(1, 4)}, {3, Rational(1, 2)}}),
        degrees({{1, Rational(1, 3)}, {2, Rational(1, 3)}, {3, Rational(1, 3)}}),
        degrees({{2, Rational(1, 2)}, {3, Rational(1, 2)}}),
        degrees({{1, Rational(2, 5)}, {3, Rational(3, 5)}}),
    };

    // CM probabilities and fibres against enumeration
    {
        long cases = 0;
        bool ok = true;
        int max_n = quick ? 2 : 3;
        for (int L = 1; L <= 2; ++L)
            for (int n = 1; n <= max_n; ++n) {
                DegreeSequence D;
                D.colors.L = L;
                D.D.assign(static_cast<std::size_t>(n), ColorMatrix(static_cast<std::size_t>(L * L), 0));
                int cells = n * L * L;
                std::function<void(int)> rec = [&](int i) {
                    if (i == cells) {
                        if (!is_valid(D)) return;
                        ++cases;
                        long configs = 0;
                        oracle::enumerate_configurations(D, [&](const Configuration&) { ++configs; });
                        for (const auto& [H, p] : oracle::exact_cm_law(D))
                            ok = ok && cm_probability(D, H) == p && Rational(fiber_size(D, H)) == p * configs;
                        return;
                    }
                    for (int x = 0; x <= 2; ++x) {
                        D.D[static_cast<std::size_t>(i / (L * L))][static_cast<std::size_t>(i % (L * L))] = x;
                        rec(i + 1);
                    }
                };
                rec(0);
            }
        report("cm-exact", ok, std::to_string(cases) + " degree sequences");
    }
    // N_h against scanning all graphs
    {
        std::vector<std::pair<Graph, int>> cases = {
            {Graph::from_edges(3, {{0, 1}, {1, 2}}), 1},
            {Graph::from_edges(4, {{0, 1}, {2, 3}}), 1},
            {Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), 1},
            {Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}), 2},
        };
        if (!quick) cases.push_back({Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}), 2});
        bool ok = true;
        for (const auto& [G, h] : cases) ok = ok && count_Nh_exact(G, h) == oracle::exact_Nh(G, h);
        report("nh-exact", ok, std::to_string(cases.size()) + " graphs");
    }
    // UGW marginals against the brute-force process
    {
        bool ok = true;
        int k = quick ? 2 : 3;
        for (const auto& P : zoo) {
            ok = ok && marginal_ugw(P, k).p == oracle::brute_ugw_marginal(P, k).p;
            ok = ok && consistency_check(P, 2) && edge_law_identity(P);
        }
        report("ugw-marginal", ok, std::to_string(zoo.size()) + " laws to depth " + std::to_string(k));
    }
    // entropy identities
    {
        bool ok = true;
        for (const auto& P : zoo) {
            double d = to_double(mean_degree(P));
            ok = ok && std::abs(J_h(P) - (s_of_d(d) - relative_entropy_poisson(P, d).value)) <= 1e-12;
            auto rho = marginal_ugw(P, 2);
            ok = ok && std::abs(J_h(rho) - J_h(P)) <= 1e-10 && std::abs(delta(P, rho)) <= 1e-12;
        }
        ok = ok && std::abs(J_h(zoo[0]) - (1.5 * std::log(3.0) - 1.5 - std::log(6.0))) <= 1e-12;
        report("entropy", ok, "J_1 identity, UGW telescoping, closed form at the 3-star");
    }
    // rate-function zeros
    {
        bool ok = true;
        for (const auto& P : zoo) ok = ok && std::abs(rate_fixed_degrees(marginal_ugw(P, 2), P)) <= 1e-10;
        for (double lam : {1.0, 2.5}) {
            auto Q = poisson_law(lam);
            ok = ok && std::abs(rate_degree_er(Q, lam)) <= 1e-12 && std::abs(rate_binomial(Q, lam)) <= 1e-8;
        }
        for (std::size_t i = 1; i < zoo.size(); ++i) ok = ok && rate_fixed_degrees(zoo[i], zoo[0]) == kInf;
        report("rate-zeros", ok, "fixed-degree, degree-ER, binomial, regular dichotomy");
    }
    return failed ? 4 : kOk;
}

std::vector<int> parse_n_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            int n = std::stoi(item, &pos);
            if (pos != item.size() || n < 1) throw std::invalid_argument(item);
            out.push_back(n);
        } catch (const std::exception&) {
            throw UsageError("--n-list: expected comma-separated positive integers");
        }
    }
    if (out.empty()) throw UsageError("--n-list is empty");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local weak convergence toolkit: rooted neighbourhoods, UGW trees, configuration models, entropy."};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", g.seed, "random seed")->capture_default_str();
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", g.out, "output file (default stdout)");
    app.add_option("--threads", g.threads, "worker threads for experiments")->check(CLI::PositiveNumber);

    SampleFiles files;
    std::string degrees, law, law2;
    int girth = 3, depth = 2;
    std::uint64_t max_attempts = 0;

    auto* cm = app.add_subcommand("sample-cm", "sample CM(D)");
    cm->add_option("--degrees", degrees, "degree-sequence file")->required();
    cm->add_option("--graph-out", files.graph_out, "write the coloured graph (u v i j mult)");
    cm->add_option("--colorblind-out", files.colorblind_out, "write the colourblind edge list (u v mult)");

    auto* gdh = app.add_subcommand("sample-gdh", "sample uniformly from G(D, girth-1) by rejection");
    gdh->add_option("--degrees", degrees, "degree-sequence file")->required();
    gdh->add_option("--girth", girth, "no cycle shorter than this")->capture_default_str();
    gdh->add_option("--max-attempts", max_attempts, "rejection cap (default adaptive)");
    gdh->add_option("--graph-out", files.graph_out, "write the coloured graph (u v i j mult)");
    gdh->add_option("--colorblind-out", files.colorblind_out, "write the colourblind edge list (u v mult)");

    auto* ugw = app.add_subcommand("sample-ugw", "sample a UGW_h(P) tree to a given depth");
    ugw->add_option("--law", law, "law file")->required();
    ugw->add_option("--depth", depth, "tree depth")->capture_default_str()->check(CLI::NonNegativeNumber);

    auto* bip = app.add_subcommand("sample-bipartite", "sample a two-type UGW(P1, P2) tree");
    bip->add_option("--law1", law, "degree law of side 1")->required();
    bip->add_option("--law2", law2, "degree law of side 2")->required();
    bip->add_option("--depth", depth, "tree depth")->capture_default_str()->check(CLI::NonNegativeNumber);

    auto* ent = app.add_subcommand("entropy", "entropy functionals and rate functions");
    ent->require_subcommand(1);
    EntropyArgs ea;
    std::string entropy_sub;
    auto add_ent = [&](const char* name, const char* help) {
        auto* s = ent->add_subcommand(name, help);
        s->callback([&entropy_sub, name] { entropy_sub = name; });
        return s;
    };
    add_ent("jh", "J_h(P)")->add_option("--law", ea.law)->required();
    add_ent("sigma-ugw1", "entropy of UGW_1(P)")->add_option("--law", ea.law)->required();
    {
        auto* s = add_ent("delta", "increment Delta_k of a law's marginals");
        s->add_option("--law", ea.law)->required();
        s->add_option("--k", ea.k, "level (default: depth of the law)");
    }
    {
        auto* s = add_ent("rate-degrees", "rate for the fixed-degree ensemble");
        s->add_option("--law", ea.law, "depth-h law Q")->required();
        s->add_option("--degree-law", ea.degree_law, "degree law P")->required();
    }
    {
        auto* s = add_ent("rate-edges", "rate for uniform graphs with dn/2 edges");
        s->add_option("--law", ea.law)->required();
        s->add_option("--d", ea.d, "mean degree")->required();
    }
    {
        auto* s = add_ent("rate-binomial", "rate for G(n, lambda/n)");
        s->add_option("--law", ea.law)->required();
        s->add_option("--lambda", ea.lambda)->required();
    }
    {
        auto* s = add_ent("rate-degree-er", "degree-law rate in G(n, lambda/n)");
        s->add_option("--law", ea.law)->required();
        s->add_option("--lambda", ea.lambda)->required();
    }
    {
        auto* s = add_ent("rate-degree-fixed", "degree-law rate with dn/2 edges");
        s->add_option("--law", ea.law)->required();
        s->add_option("--d", ea.d, "mean degree")->required();
    }
    {
        auto* s = add_ent("disc-bound", "upper bound for two-type trees");
        s->add_option("--law1", ea.law)->required();
        s->add_option("--law2", ea.law2)->required();
    }

    auto* exp = app.add_subcommand("experiment", "Monte Carlo experiments");
    exp->require_subcommand(1);
    std::string n_list = "1000";
    int d = 3, samples = 200, max_length = 4;
    auto* cyc = exp->add_subcommand("cycles", "cycle counts and simple fraction in d-regular CM");
    cyc->add_option("--n-list", n_list)->capture_default_str();
    cyc->add_option("--d", d)->capture_default_str()->check(CLI::PositiveNumber);
    cyc->add_option("--samples", samples)->capture_default_str()->check(CLI::PositiveNumber);
    cyc->add_option("--max-length", max_length)->capture_default_str()->check(CLI::PositiveNumber);
    auto* conv = exp->add_subcommand("converge", "TV of the mean empirical law to the UGW marginal");
    conv->add_option("--law", law, "exact degree law")->required();
    conv->add_option("--n-list", n_list)->capture_default_str();
    conv->add_option("--samples", samples)->capture_default_str()->check(CLI::PositiveNumber);
    conv->add_option("--depth", depth)->capture_default_str()->check(CLI::PositiveNumber);
    conv->add_option("--girth", girth)->capture_default_str()->check(CLI::PositiveNumber);
    auto* conc = exp->add_subcommand("concentrate", "tail of the d-star frequency in d-regular CM");
    conc->add_option("--n-list", n_list)->capture_default_str();
    conc->add_option("--d", d)->capture_default_str()->check(CLI::PositiveNumber);
    conc->add_option("--samples", samples)->capture_default_str()->check(CLI::Range(2, 1 << 30));

    auto* enc = app.add_subcommand("encode", "coloured encoding of an h-tree-like graph");
    std::string graph;
    int h = 1;
    enc->add_option("--graph", graph, "edge list file (u v)")->required();
    enc->add_option("--depth", h, "neighbourhood depth h")->capture_default_str()->check(CLI::PositiveNumber);

    auto* ver = app.add_subcommand("verify", "cross-check formulas against exhaustive oracles");
    bool quick = false;
    ver->add_flag("--quick", quick, "small grid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*cm) cmd_sample_cm(degrees, files);
        else if (*gdh) cmd_sample_gdh(degrees, girth, max_attempts, files);
        else if (*ugw) cmd_sample_ugw(law, depth);
        else if (*bip) cmd_sample_bipartite(law, law2, depth);
        else if (*ent) cmd_entropy(entropy_sub, ea);
        else if (*cyc) cmd_cycles(parse_n_list(n_list), d, samples, max_length);
        else if (*conv) cmd_converge(law, parse_n_list(n_list), samples, depth, girth);
        else if (*conc) cmd_concentrate(parse_n_list(n_list), d, samples);
        else if (*enc) cmd_encode(graph, h);
        else if (*ver) return cmd_verify(quick);
    } catch (const SamplingFailure& e) {
        std::cerr << "sampling failure: " << e.what() << " (attempts " << e.stats.attempts << ", acceptance "
                  << e.stats.acceptance_rate() << ")\n";
        return kSampling;
    } catch (const LawError& e) {
        std::cerr << "invalid law: " << e.what() << "\n";
        return kBadLaw;
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kOk;
}

#include "lwc/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace lwc::io {

namespace {

Rational exact_weight(const json& p) {
    if (p.is_string()) return parse_rational(p.get<std::string>());
    if (p.is_number_integer()) return Rational(p.get<long>());
    if (p.is_number()) return parse_rational(p.dump());
    throw std::invalid_argument("law: weight must be a string or number");
}

double float_weight(const json& p) {
    if (p.is_string()) return to_double(parse_rational(p.get<std::string>()));
    if (p.is_number()) return p.get<double>();
    throw std::invalid_argument("law: weight must be a string or number");
}

}  // namespace

LawInput law_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("law: expected a JSON object");
    LawInput out;
    if (j.contains("poisson")) {
        out.exact = false;
        out.float_law = poisson_law(j.at("poisson").get<double>());
        validate_law(out.float_law);
        return out;
    }
    std::string mode = j.value("mode", std::string("exact"));
    if (mode != "exact" && mode != "float") throw std::invalid_argument("law: mode must be exact or float");
    out.exact = mode == "exact";
    int depth = j.value("depth", 1);
    out.exact_law.depth = out.float_law.depth = depth;
    auto put = [&](CanonicalClass c, const json& p) {
        if (out.exact) out.exact_law.add(c, exact_weight(p));
        else out.float_law.add(c, float_weight(p));
    };
    if (j.contains("degrees")) {
        if (depth != 1) throw std::invalid_argument("law: degree shorthand needs depth 1");
        for (const auto& [k, p] : j.at("degrees").items()) {
            int deg = std::stoi(k);
            if (deg < 0) throw std::invalid_argument("law: negative degree");
            put(star(deg), p);
        }
    } else {
        for (const auto& row : j.at("support")) put(parse_class(row.at("class").get<std::string>(), depth), row.at("p"));
    }
    if (out.exact) validate_law(out.exact_law);
    else validate_law(out.float_law);
    return out;
}

LawInput read_law(const std::string& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("law: ") + e.what());
    }
    return law_from_json(j);
}

json number(double x) {
    if (x == std::numeric_limits<double>::infinity()) return "+inf";
    if (x == -std::numeric_limits<double>::infinity()) return "-inf";
    if (std::isnan(x)) return "nan";
    return x;
}

DegreeSequence parse_degrees(std::istream& in) {
    int L = 0, n = 0;
    if (!(in >> L >> n) || L < 1 || n < 0) throw std::invalid_argument("degrees: bad header, expected \"L n\"");
    DegreeSequence D;
    D.colors = ColorSpace{L};
    D.D.assign(static_cast<std::size_t>(n), ColorMatrix(static_cast<std::size_t>(L * L), 0));
    for (auto& row : D.D)
        for (auto& x : row)
            if (!(in >> x) || x < 0) throw std::invalid_argument("degrees: expected nonnegative integer entries");
    std::string extra;
    if (in >> extra) throw std::invalid_argument("degrees: trailing data");
    validate(D);
    return D;
}

DegreeSequence read_degrees(const std::string& path) {
    std::istringstream in(read_file(path));
    return parse_degrees(in);
}

std::string degrees_to_text(const DegreeSequence& D) {
    std::ostringstream out;
    out << D.colors.L << ' ' << D.n() << '\n';
    for (const auto& row : D.D) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c];
        out << '\n';
    }
    return out.str();
}

std::string colored_graph_to_text(const ColoredMultigraph& G) {
    const auto& cs = G.colors;
    std::ostringstream out;
    out << "# " << cs.L << ' ' << G.n << '\n';
    for (const auto& [key, w] : G.omega) {
        auto [c, u, v] = key;
        int mult = w;
        if (u > v) continue;
        if (u == v) {
            // loops are stored from both ends
            if (cs.is_eq(c)) mult = w / 2;
            else if (!cs.is_lt(c)) continue;
        }
        out << u << ' ' << v << ' ' << cs.row(c) << ' ' << cs.col(c) << ' ' << mult << '\n';
    }
    return out.str();
}

ColoredMultigraph parse_colored_graph(std::istream& in) {
    struct Row {
        int u, v, i, j, mult;
    };
    std::vector<Row> rows;
    int L = 0, n = 0;
    bool sized = false;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        if (line.rfind('#', 0) == 0) {
            ls.ignore(1);
            if (ls >> L >> n) sized = true;
            continue;
        }
        Row r{};
        if (!(ls >> r.u)) continue;
        if (!(ls >> r.v >> r.i >> r.j >> r.mult) || r.u < 0 || r.v < 0 || r.i < 0 || r.j < 0 || r.mult < 0)
            throw std::invalid_argument("colored graph: expected \"u v i j mult\"");
        rows.push_back(r);
    }
    if (!sized) {
        L = 1;
        for (const auto& r : rows) {
            n = std::max({n, r.u + 1, r.v + 1});
            L = std::max({L, r.i + 1, r.j + 1});
        }
    }
    ColoredMultigraph G;
    G.colors = ColorSpace{L};
    G.n = n;
    for (const auto& r : rows) {
        if (r.u >= n || r.v >= n || r.i >= L || r.j >= L) throw std::invalid_argument("colored graph: index out of range");
        for (int k = 0; k < r.mult; ++k) G.add_edge(r.u, r.v, G.colors.index(r.i, r.j));
    }
    return G;
}

std::string multigraph_to_text(const Multigraph& G) {
    std::ostringstream out;
    for (const auto& [key, m] : G.mult) out << key.first << ' ' << key.second << ' ' << m << '\n';
    return out.str();
}

json rooted_graph_to_json(const LabeledRootedGraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges) {
        if (e.color_uv >= 0) edges.push_back({e.u, e.v, e.color_uv, e.color_vu});
        else edges.push_back({e.u, e.v});
    }
    return {{"n", g.n}, {"root", g.root}, {"edges", edges}};
}

json context_to_json(const EncodingContext& ctx) {
    json F = json::array();
    for (auto c : ctx.F) F.push_back(encoding(c));
    json table = json::array();
    for (int c = 0; c < ctx.colors.count(); ++c)
        table.push_back({{"color", c}, {"down", ctx.colors.row(c)}, {"up", ctx.colors.col(c)}, {"conj", ctx.colors.conj(c)}});
    return {{"h", ctx.h}, {"L", ctx.colors.L}, {"classes", F}, {"colors", table}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace lwc::io

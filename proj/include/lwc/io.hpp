#pragma once

#include "lwc/config_model.hpp"
#include "lwc/neighborhood.hpp"
#include "lwc/tree_encoding.hpp"

#include <json.hpp>

#include <istream>
#include <string>

namespace lwc::io {

using nlohmann::json;

inline const char* kSchema = "ugw-ldp/v1";

// a law read from disk, in whichever arithmetic it was written
struct LawInput {
    bool exact = true;
    ExactLaw exact_law;
    FloatLaw float_law;
    int depth() const { return exact ? exact_law.depth : float_law.depth; }
};

// {"depth": h, "mode": "exact"|"float", "support": [{"class": enc, "p": w}, ...]}
// shorthands: "degrees": {"k": w, ...} for a depth-1 law; "poisson": lambda (float)
LawInput law_from_json(const json& j);
LawInput read_law(const std::string& path);

// +-inf as strings, finite values as numbers
json number(double x);

template <class W>
json law_to_json(const Law<W>& P) {
    std::vector<std::pair<std::string, json>> rows;
    for (const auto& [c, w] : P.p) {
        json p;
        if constexpr (is_exact_v<W>) p = to_string(w);
        else p = w;
        rows.emplace_back(encoding(c), p);
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    json support = json::array();
    for (auto& [enc, p] : rows) support.push_back({{"class", enc}, {"p", p}});
    json out = {{"depth", P.depth}, {"mode", is_exact_v<W> ? "exact" : "float"}, {"support", support}};
    if (P.truncated_mass > 0) {
        out["truncation_point"] = P.truncation_point;
        out["truncated_mass"] = P.truncated_mass;
    }
    return out;
}

// header "L n", then one line of L*L row-major entries per vertex
DegreeSequence parse_degrees(std::istream& in);
DegreeSequence read_degrees(const std::string& path);
std::string degrees_to_text(const DegreeSequence& D);

// "u v i j mult" per edge class; an optional "# L n" header fixes the sizes
std::string colored_graph_to_text(const ColoredMultigraph& G);
ColoredMultigraph parse_colored_graph(std::istream& in);
// "u v mult"
std::string multigraph_to_text(const Multigraph& G);

json rooted_graph_to_json(const LabeledRootedGraph& g);
json context_to_json(const EncodingContext& ctx);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace lwc::io

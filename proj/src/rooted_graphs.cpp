#include "lwc/rooted_graphs.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace lwc {
namespace {

struct Entry {
    ClassKind kind = ClassKind::tree;
    std::string encoding;
    int height = 0;
    std::vector<std::uint32_t> kids;  // trees: child structures, ascending id
    LabeledRootedGraph rep;           // general: canonical representative, root 0
};

struct KidsHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto x : v) h = (h ^ x) * 1099511628211ULL;
        return static_cast<std::size_t>(h ^ v.size());
    }
};

class Table {
public:
    static Table& get() {
        static Table t;
        return t;
    }

    const Entry& at(std::uint32_t id) {
        std::shared_lock lock(m_);
        if (id >= entries_.size()) throw std::out_of_range("unknown class id");
        return entries_[id];
    }

    std::uint32_t tree(std::vector<std::uint32_t> kids) {
        std::sort(kids.begin(), kids.end());
        {
            std::shared_lock lock(m_);
            auto it = trees_.find(kids);
            if (it != trees_.end()) return it->second;
        }
        Entry e;
        e.kind = ClassKind::tree;
        std::vector<const std::string*> encs;
        for (auto k : kids) {
            const Entry& c = at(k);
            if (c.kind != ClassKind::tree) throw std::invalid_argument("tree with non-tree child");
            encs.push_back(&c.encoding);
            e.height = std::max(e.height, c.height + 1);
        }
        std::sort(encs.begin(), encs.end(), [](auto a, auto b) { return *a < *b; });
        e.encoding = "(";
        for (auto* s : encs) e.encoding += *s;
        e.encoding += ")";
        e.kids = kids;
        std::unique_lock lock(m_);
        auto it = trees_.find(kids);
        if (it != trees_.end()) return it->second;
        auto id = static_cast<std::uint32_t>(entries_.size());
        entries_.push_back(std::move(e));
        trees_.emplace(std::move(kids), id);
        return id;
    }

    std::uint32_t general(std::string enc, LabeledRootedGraph rep, int height) {
        {
            std::shared_lock lock(m_);
            auto it = general_.find(enc);
            if (it != general_.end()) return it->second;
        }
        std::unique_lock lock(m_);
        auto it = general_.find(enc);
        if (it != general_.end()) return it->second;
        auto id = static_cast<std::uint32_t>(entries_.size());
        Entry e;
        e.kind = ClassKind::general;
        e.encoding = enc;
        e.height = height;
        e.rep = std::move(rep);
        entries_.push_back(std::move(e));
        general_.emplace(std::move(enc), id);
        return id;
    }

    bool memo(std::uint64_t key, std::uint32_t& out) {
        std::shared_lock lock(m_);
        auto it = trunc_.find(key);
        if (it == trunc_.end()) return false;
        out = it->second;
        return true;
    }

    void remember(std::uint64_t key, std::uint32_t v) {
        std::unique_lock lock(m_);
        trunc_.emplace(key, v);
    }

    std::size_t size() {
        std::shared_lock lock(m_);
        return entries_.size();
    }

private:
    std::shared_mutex m_;
    std::deque<Entry> entries_;
    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, KidsHash> trees_;
    std::unordered_map<std::string, std::uint32_t> general_;
    std::unordered_map<std::uint64_t, std::uint32_t> trunc_;
};

// ---- general canonical form -------------------------------------------------

struct CanonInput {
    int n = 0;
    bool colored = false;
    std::vector<int> layer;
    std::vector<std::vector<int>> cell;  // n*n; see cell_code

    const std::vector<int>& at(int a, int b) const { return cell[static_cast<std::size_t>(a * n + b)]; }
};

// uncolored: {multiplicity} or {}; colored: sorted (colour a->b)*256 + (colour b->a) per edge
CanonInput prepare(const LabeledRootedGraph& g) {
    CanonInput in;
    in.n = g.n;
    in.colored = g.colored();
    in.layer = g.distances_from(g.root);
    in.cell.assign(static_cast<std::size_t>(g.n * g.n), {});
    for (const auto& e : g.edges) {
        auto& ab = in.cell[static_cast<std::size_t>(e.u * g.n + e.v)];
        auto& ba = in.cell[static_cast<std::size_t>(e.v * g.n + e.u)];
        if (!in.colored) {
            if (ab.empty()) ab.push_back(0);
            ++ab[0];
            if (e.u != e.v) {
                if (ba.empty()) ba.push_back(0);
                ++ba[0];
            }
            continue;
        }
        if (e.color_uv < 0 || e.color_vu < 0 || e.color_uv > 255 || e.color_vu > 255)
            throw std::invalid_argument("colored graph needs colours in [0,255] on every edge");
        if (e.u == e.v) {
            ab.push_back(std::min(e.color_uv, e.color_vu) * 256 + std::max(e.color_uv, e.color_vu));
        } else {
            ab.push_back(e.color_uv * 256 + e.color_vu);
            ba.push_back(e.color_vu * 256 + e.color_uv);
        }
    }
    for (auto& c : in.cell) std::sort(c.begin(), c.end());
    return in;
}

using Key = std::pair<int, std::vector<std::pair<int, std::vector<int>>>>;

std::vector<int> refine(const CanonInput& in, std::vector<int> col) {
    int classes = *std::max_element(col.begin(), col.end()) + 1;
    while (true) {
        std::vector<Key> keys(static_cast<std::size_t>(in.n));
        for (int v = 0; v < in.n; ++v) {
            auto& k = keys[static_cast<std::size_t>(v)];
            k.first = col[static_cast<std::size_t>(v)];
            for (int w = 0; w < in.n; ++w) {
                const auto& c = in.at(v, w);
                if (c.empty()) continue;
                k.second.emplace_back(w == v ? -1 : col[static_cast<std::size_t>(w)], c);
            }
            std::sort(k.second.begin(), k.second.end());
        }
        std::vector<Key> distinct = keys;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<int> next(static_cast<std::size_t>(in.n));
        for (int v = 0; v < in.n; ++v)
            next[static_cast<std::size_t>(v)] = static_cast<int>(
                std::lower_bound(distinct.begin(), distinct.end(), keys[static_cast<std::size_t>(v)]) - distinct.begin());
        col = std::move(next);
        int now = static_cast<int>(distinct.size());
        if (now == classes) return col;
        classes = now;
    }
}

std::string certificate(const CanonInput& in, const std::vector<int>& order) {
    if (in.n > 255) throw std::invalid_argument("general canonical form limited to 255 vertices");
    std::string out;
    out.push_back(static_cast<char>(in.colored ? 1 : 0));
    out.push_back(static_cast<char>(in.n));
    for (int v : order) out.push_back(static_cast<char>(in.layer[static_cast<std::size_t>(v)]));
    for (int i = 0; i < in.n; ++i)
        for (int j = i; j < in.n; ++j) {
            const auto& c = in.at(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
            if (!in.colored) {
                int m = c.empty() ? 0 : c[0];
                if (m > 255) throw std::invalid_argument("multiplicity above 255");
                out.push_back(static_cast<char>(m));
            } else {
                if (c.size() > 255) throw std::invalid_argument("multiplicity above 255");
                out.push_back(static_cast<char>(c.size()));
                for (int x : c) {
                    out.push_back(static_cast<char>(x / 256));
                    out.push_back(static_cast<char>(x % 256));
                }
            }
        }
    return out;
}

bool twins(const CanonInput& in, int u, int w) {
    if (in.at(u, u) != in.at(w, w) || in.at(u, w) != in.at(w, u)) return false;
    for (int x = 0; x < in.n; ++x) {
        if (x == u || x == w) continue;
        if (in.at(u, x) != in.at(w, x) || in.at(x, u) != in.at(x, w)) return false;
    }
    return true;
}

void search(const CanonInput& in, std::vector<int> col, std::string& best, std::vector<int>& best_order) {
    col = refine(in, std::move(col));
    std::vector<int> size(static_cast<std::size_t>(in.n), 0);
    for (int c : col) ++size[static_cast<std::size_t>(c)];
    int target = -1;
    for (int c = 0; c < in.n; ++c)
        if (size[static_cast<std::size_t>(c)] > 1) {
            target = c;
            break;
        }
    if (target < 0) {
        std::vector<int> order(static_cast<std::size_t>(in.n));
        for (int v = 0; v < in.n; ++v) order[static_cast<std::size_t>(col[static_cast<std::size_t>(v)])] = v;
        auto cert = certificate(in, order);
        if (best.empty() || cert < best) {
            best = std::move(cert);
            best_order = std::move(order);
        }
        return;
    }
    std::vector<int> reps;
    for (int v = 0; v < in.n; ++v) {
        if (col[static_cast<std::size_t>(v)] != target) continue;
        bool fresh = true;
        for (int r : reps)
            if (twins(in, r, v)) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(v);
    }
    for (int v : reps) {
        std::vector<int> next(col);
        for (int u = 0; u < in.n; ++u) {
            int c = col[static_cast<std::size_t>(u)];
            if (c > target || (c == target && u != v)) next[static_cast<std::size_t>(u)] = c + 1;
        }
        search(in, std::move(next), best, best_order);
    }
}

const char* kHex = "0123456789abcdef";

std::string to_hex(const std::string& bytes) {
    std::string out;
    for (unsigned char b : bytes) {
        out.push_back(kHex[b >> 4]);
        out.push_back(kHex[b & 15]);
    }
    return out;
}

std::string from_hex(const std::string& hex) {
    if (hex.size() % 2) throw std::invalid_argument("odd hex length");
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        throw std::invalid_argument("bad hex digit");
    };
    std::string out;
    for (std::size_t i = 0; i < hex.size(); i += 2) out.push_back(static_cast<char>(nib(hex[i]) * 16 + nib(hex[i + 1])));
    return out;
}

const std::string kGeneralPrefix = "Gh:";

// structure id of a connected rooted graph (already a ball)
std::uint32_t structure_of(const LabeledRootedGraph& g) {
    auto& table = Table::get();
    bool tree_shaped = !g.colored() && static_cast<int>(g.edges.size()) == g.n - 1;
    if (tree_shaped) {
        auto inc = g.incidence();
        std::vector<int> order{g.root}, parent(static_cast<std::size_t>(g.n), -2);
        parent[static_cast<std::size_t>(g.root)] = -1;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (auto [w, id] : inc[static_cast<std::size_t>(order[i])]) {
                (void)id;
                if (parent[static_cast<std::size_t>(w)] == -2) {
                    parent[static_cast<std::size_t>(w)] = order[i];
                    order.push_back(w);
                }
            }
        if (static_cast<int>(order.size()) != g.n) throw std::invalid_argument("rooted graph is not connected");
        std::vector<std::vector<std::uint32_t>> kids(static_cast<std::size_t>(g.n));
        std::vector<std::uint32_t> sid(static_cast<std::size_t>(g.n));
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            auto v = static_cast<std::size_t>(*it);
            sid[v] = table.tree(std::move(kids[v]));
            if (parent[v] >= 0) kids[static_cast<std::size_t>(parent[v])].push_back(sid[v]);
        }
        return sid[static_cast<std::size_t>(g.root)];
    }
    CanonInput in = prepare(g);
    for (int l : in.layer)
        if (l < 0) throw std::invalid_argument("rooted graph is not connected");
    std::string best;
    std::vector<int> order;
    search(in, in.layer, best, order);
    std::vector<int> pos(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    LabeledRootedGraph rep;
    rep.n = g.n;
    rep.root = 0;
    for (const auto& e : g.edges) {
        int a = pos[static_cast<std::size_t>(e.u)], b = pos[static_cast<std::size_t>(e.v)];
        RootedEdge r{a, b, e.color_uv, e.color_vu};
        if (a > b) r = {b, a, e.color_vu, e.color_uv};
        rep.edges.push_back(r);
    }
    std::sort(rep.edges.begin(), rep.edges.end(), [](const RootedEdge& x, const RootedEdge& y) {
        return std::tie(x.u, x.v, x.color_uv, x.color_vu) < std::tie(y.u, y.v, y.color_uv, y.color_vu);
    });
    int radius = *std::max_element(in.layer.begin(), in.layer.end());
    return table.general(kGeneralPrefix + to_hex(best), std::move(rep), radius);
}

std::uint32_t truncate_structure(std::uint32_t id, int h) {
    auto& table = Table::get();
    const Entry& e = table.at(id);
    if (e.height <= h) return id;
    std::uint64_t key = (static_cast<std::uint64_t>(id) << 8) | static_cast<std::uint64_t>(h);
    std::uint32_t out;
    if (table.memo(key, out)) return out;
    if (e.kind == ClassKind::tree) {
        std::vector<std::uint32_t> kids;
        if (h > 0)
            for (auto k : e.kids) kids.push_back(truncate_structure(k, h - 1));
        out = table.tree(std::move(kids));
    } else {
        out = structure_of(ball(e.rep, h));
    }
    table.remember(key, out);
    return out;
}

LabeledRootedGraph tree_representative(std::uint32_t id) {
    auto& table = Table::get();
    LabeledRootedGraph g;
    g.n = 1;
    g.root = 0;
    std::vector<std::pair<int, std::uint32_t>> stack{{0, id}};
    while (!stack.empty()) {
        auto [v, sid] = stack.back();
        stack.pop_back();
        for (auto k : table.at(sid).kids) {
            int w = g.n++;
            g.edges.push_back({v, w});
            stack.emplace_back(w, k);
        }
    }
    return g;
}

std::uint32_t parse_tree(const std::string& s, std::size_t& pos) {
    if (pos >= s.size() || s[pos] != '(') throw std::invalid_argument("bad tree encoding");
    ++pos;
    std::vector<std::uint32_t> kids;
    while (pos < s.size() && s[pos] == '(') kids.push_back(parse_tree(s, pos));
    if (pos >= s.size() || s[pos] != ')') throw std::invalid_argument("bad tree encoding");
    ++pos;
    return Table::get().tree(std::move(kids));
}

}  // namespace

ClassKind kind(CanonicalClass c) { return Table::get().at(c.id).kind; }
bool is_tree(CanonicalClass c) { return kind(c) == ClassKind::tree; }
const std::string& encoding(CanonicalClass c) { return Table::get().at(c.id).encoding; }
int height(CanonicalClass c) { return Table::get().at(c.id).height; }

int root_degree(CanonicalClass c) {
    const Entry& e = Table::get().at(c.id);
    if (e.kind == ClassKind::tree) return static_cast<int>(e.kids.size());
    int d = 0;
    for (const auto& x : e.rep.edges) d += (x.u == 0) + (x.v == 0);
    return d;
}

std::vector<CanonicalClass> children(CanonicalClass c) {
    const Entry& e = Table::get().at(c.id);
    if (e.kind != ClassKind::tree) throw std::invalid_argument("children() of a non-tree class");
    std::vector<CanonicalClass> out;
    for (auto k : e.kids) out.push_back({k, c.depth - 1});
    return out;
}

CanonicalClass isolated_root(int depth) { return {Table::get().tree({}), depth}; }

CanonicalClass make_tree(const std::vector<CanonicalClass>& subtrees, int depth) {
    if (!subtrees.empty() && depth < 1) throw std::invalid_argument("make_tree: depth 0 with children");
    std::vector<std::uint32_t> kids;
    for (auto s : subtrees) {
        if (!is_tree(s)) throw std::invalid_argument("make_tree: non-tree subtree");
        kids.push_back(truncate_structure(s.id, depth - 1));
    }
    return {Table::get().tree(std::move(kids)), depth};
}

CanonicalClass canonicalize(const LabeledRootedGraph& g, int h) {
    if (h < 0) throw std::invalid_argument("canonicalize: negative depth");
    return {structure_of(ball(g, h)), h};
}

CanonicalClass truncate(CanonicalClass g, int h) {
    if (h < 0) throw std::invalid_argument("truncate: negative depth");
    if (h >= g.depth) return g;
    return {truncate_structure(g.id, h), h};
}

LabeledRootedGraph split_at_edge(const LabeledRootedGraph& g, int u, int v) {
    int drop = -1;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
            drop = static_cast<int>(i);
            break;
        }
    }
    if (drop < 0) throw std::invalid_argument("split_at_edge: no such edge");
    if (u == v) throw std::invalid_argument("split_at_edge: loop");
    LabeledRootedGraph rest;
    rest.n = g.n;
    rest.root = v;
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (static_cast<int>(i) != drop) rest.edges.push_back(g.edges[i]);
    auto dist = rest.distances_from(v);
    int radius = *std::max_element(dist.begin(), dist.end());
    return ball(rest, std::max(radius, 0));
}

CanonicalClass join_at_root(CanonicalClass tau, CanonicalClass t_prime) {
    if (!is_tree(tau) || !is_tree(t_prime)) throw std::invalid_argument("join_at_root: trees only");
    if (tau.depth < 1 || height(t_prime) > tau.depth - 1)
        throw std::invalid_argument("join_at_root: attached subtree deeper than depth-1");
    auto kids = Table::get().at(tau.id).kids;
    kids.push_back(t_prime.id);
    return {Table::get().tree(std::move(kids)), tau.depth};
}

CanonicalClass remove_child(CanonicalClass g, CanonicalClass child) {
    if (!is_tree(g)) throw std::invalid_argument("remove_child: trees only");
    auto kids = Table::get().at(g.id).kids;
    auto it = std::find(kids.begin(), kids.end(), child.id);
    if (it == kids.end()) throw std::invalid_argument("remove_child: no such child");
    kids.erase(it);
    return {Table::get().tree(std::move(kids)), g.depth};
}

std::vector<EdgeType> edge_types(CanonicalClass g, int h) {
    if (h < 1) throw std::invalid_argument("edge_types: h must be >= 1");
    if (g.depth < h) throw std::invalid_argument("edge_types: class known only to depth " + std::to_string(g.depth));
    std::vector<EdgeType> out;
    auto add = [&](CanonicalClass b, CanonicalClass a) {
        for (auto& e : out)
            if (e.below == b && e.above == a) {
                ++e.count;
                return;
            }
        out.push_back({b, a, 1});
    };
    const Entry& e = Table::get().at(g.id);
    if (e.kind == ClassKind::tree) {
        auto kids = e.kids;  // ascending, equal ids adjacent
        for (std::size_t i = 0; i < kids.size();) {
            std::size_t j = i;
            while (j < kids.size() && kids[j] == kids[i]) ++j;
            auto rest = kids;
            rest.erase(rest.begin() + static_cast<long>(i));
            CanonicalClass below{truncate_structure(kids[i], h - 1), h - 1};
            CanonicalClass above{truncate_structure(Table::get().tree(std::move(rest)), h - 1), h - 1};
            for (std::size_t k = i; k < j; ++k) add(below, above);
            i = j;
        }
    } else {
        const auto& rep = e.rep;
        for (std::size_t i = 0; i < rep.edges.size(); ++i) {
            const auto& x = rep.edges[i];
            if (x.u != 0 && x.v != 0) continue;
            if (x.u == x.v) throw std::invalid_argument("edge_types: loop at root");
            int v = x.u == 0 ? x.v : x.u;
            LabeledRootedGraph cut;
            cut.n = rep.n;
            for (std::size_t k = 0; k < rep.edges.size(); ++k)
                if (k != i) cut.edges.push_back(rep.edges[k]);
            cut.root = v;
            auto below = canonicalize(cut, h - 1);
            cut.root = 0;
            auto above = canonicalize(cut, h - 1);
            add(below, above);
        }
    }
    std::sort(out.begin(), out.end(), [](const EdgeType& a, const EdgeType& b) {
        return std::tie(a.below, a.above) < std::tie(b.below, b.above);
    });
    return out;
}

long count_Eh(CanonicalClass g, int h, CanonicalClass t, CanonicalClass t_prime) {
    if (height(t) > h - 1 || height(t_prime) > h - 1)
        throw std::invalid_argument("count_Eh: pattern deeper than h-1");
    t = {truncate_structure(t.id, h - 1), h - 1};
    t_prime = {truncate_structure(t_prime.id, h - 1), h - 1};
    for (const auto& e : edge_types(g, h))
        if (e.below == t && e.above == t_prime) return e.count;
    return 0;
}

LabeledRootedGraph representative(CanonicalClass c) {
    const Entry& e = Table::get().at(c.id);
    if (e.kind == ClassKind::tree) return tree_representative(c.id);
    return e.rep;
}

CanonicalClass parse_class(const std::string& enc, int depth) {
    std::uint32_t id;
    if (enc.rfind(kGeneralPrefix, 0) == 0) {
        std::string bytes = from_hex(enc.substr(kGeneralPrefix.size()));
        if (bytes.size() < 2) throw std::invalid_argument("short general encoding");
        bool colored = bytes[0] == 1;
        int n = static_cast<unsigned char>(bytes[1]);
        std::size_t p = 2 + static_cast<std::size_t>(n);
        LabeledRootedGraph g;
        g.n = n;
        g.root = 0;
        auto next = [&]() -> int {
            if (p >= bytes.size()) throw std::invalid_argument("truncated general encoding");
            return static_cast<unsigned char>(bytes[p++]);
        };
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                int m = next();
                for (int k = 0; k < m; ++k) {
                    if (colored) {
                        int a = next(), b = next();
                        g.edges.push_back({i, j, a, b});
                    } else {
                        g.edges.push_back({i, j});
                    }
                }
            }
        if (p != bytes.size()) throw std::invalid_argument("trailing bytes in general encoding");
        id = structure_of(g);
    } else {
        std::size_t pos = 0;
        id = parse_tree(enc, pos);
        if (pos != enc.size()) throw std::invalid_argument("trailing characters in tree encoding");
    }
    CanonicalClass c{id, depth};
    if (encoding(c) != enc) throw std::invalid_argument("non-canonical encoding: " + enc);
    if (height(c) > depth) throw std::invalid_argument("class deeper than its stated depth: " + enc);
    return c;
}

std::string colored_tree_encoding(const LabeledRootedGraph& g) {
    auto inc = g.incidence();
    if (static_cast<int>(g.edges.size()) != g.n - 1) throw std::invalid_argument("colored_tree_encoding: not a tree");
    std::function<std::string(int, int)> enc = [&](int v, int parent_edge) {
        std::vector<std::string> parts;
        for (auto [w, id] : inc[static_cast<std::size_t>(v)]) {
            if (id == parent_edge) continue;
            const auto& e = g.edges[static_cast<std::size_t>(id)];
            int down = e.u == v ? e.color_uv : e.color_vu;
            int up = e.u == v ? e.color_vu : e.color_uv;
            parts.push_back("<" + std::to_string(down) + "." + std::to_string(up) + ">" + enc(w, id));
        }
        std::sort(parts.begin(), parts.end());
        std::string s = "(";
        for (auto& p : parts) s += p;
        return s + ")";
    };
    return enc(g.root, -1);
}

std::size_t class_table_size() { return Table::get().size(); }

}  // namespace lwc

#include "knotcol/palette.hpp"

#include "knotcol/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace knotcol {

namespace {

std::size_t vertex_index(const PaletteGraph& g, Residue r) {
    return static_cast<std::size_t>(std::lower_bound(g.vertices.begin(), g.vertices.end(), r) - g.vertices.begin());
}

std::vector<std::size_t> components(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& links) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [a, b] : links) {
        const auto ra = find(a), rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::vector<std::size_t> comp(n);
    for (std::size_t i = 0; i < n; ++i) comp[i] = find(i);
    return comp;
}

PaletteGraph assemble(std::int64_t p, std::set<Residue> vertices, std::set<std::pair<Residue, Residue>> pairs) {
    const Residue half = inv_mod_p(2, p);
    PaletteGraph g;
    g.modulus = p;
    g.vertices.assign(vertices.begin(), vertices.end());
    for (const auto& [u, v] : pairs) g.edges.push_back({u, v, (u + v) % p * half % p});
    return g;
}

}  // namespace

bool PaletteGraph::has_vertex(Residue r) const { return std::binary_search(vertices.begin(), vertices.end(), r); }

const PaletteEdge* PaletteGraph::find_edge(Residue a, Residue b) const {
    if (a > b) std::swap(a, b);
    const auto it = std::lower_bound(edges.begin(), edges.end(), PaletteEdge{a, b, 0},
                                     [](const PaletteEdge& x, const PaletteEdge& y) {
                                         return std::tie(x.u, x.v) < std::tie(y.u, y.v);
                                     });
    return (it != edges.end() && it->u == a && it->v == b) ? &*it : nullptr;
}

PaletteGraph palette_graph(std::span<const Residue> s, std::int64_t p) {
    require_odd_prime(p);
    if (s.empty()) throw InvalidArgument("palette graph of an empty color set");
    std::vector<char> member(static_cast<std::size_t>(p), 0);
    for (auto a : s) {
        if (a < 0 || a >= p) throw InvalidArgument("color " + std::to_string(a) + " is not a residue mod p");
        member[static_cast<std::size_t>(a)] = 1;
    }
    std::vector<Residue> colors;
    for (Residue a = 0; a < p; ++a)
        if (member[static_cast<std::size_t>(a)]) colors.push_back(a);

    std::set<Residue> vertices;
    std::set<std::pair<Residue, Residue>> pairs;
    for (auto a1 : colors)
        for (auto a2 : colors) {
            vertices.insert((a1 + a2) % p);
            for (auto a3 : colors) {
                // a1 + a3 = a2 + a4 fixes a4; {a1,a2} and {a3,a4} are the under-semiarcs.
                const Residue a4 = reduce_mod(a1 + a3 - a2, p);
                if (!member[static_cast<std::size_t>(a4)]) continue;
                const Residue b1 = (a1 + a2) % p, b2 = (a3 + a4) % p;
                if (b1 != b2) pairs.emplace(std::min(b1, b2), std::max(b1, b2));
            }
        }
    return assemble(p, std::move(vertices), std::move(pairs));
}

std::optional<std::vector<Residue>> connected_r_witness(const PaletteGraph& g) {
    for (const auto& e : g.edges)
        if (!g.has_vertex(e.label)) throw InvalidArgument("not a full palette graph");

    const std::size_t n = g.vertices.size();
    struct IndexedEdge {
        std::size_t u, v, label;
    };
    std::vector<IndexedEdge> alive;
    for (const auto& e : g.edges)
        alive.push_back({vertex_index(g, e.u), vertex_index(g, e.v), vertex_index(g, e.label)});

    std::vector<std::size_t> comp;
    for (;;) {
        std::vector<std::pair<std::size_t, std::size_t>> links;
        for (const auto& e : alive) links.emplace_back(e.u, e.v);
        comp = components(n, links);
        const auto before = alive.size();
        std::erase_if(alive, [&](const IndexedEdge& e) { return comp[e.label] != comp[e.u]; });
        if (alive.size() == before) break;
    }

    std::vector<std::size_t> size(n, 0);
    for (auto c : comp) ++size[c];
    for (std::size_t i = 0; i < n; ++i) {
        if (size[comp[i]] < 3) continue;
        std::vector<Residue> witness;
        for (std::size_t j = 0; j < n; ++j)
            if (comp[j] == comp[i]) witness.push_back(g.vertices[j]);
        return witness;
    }
    return std::nullopt;
}

bool is_r_subgraph(const RSubgraph& h, const PaletteGraph& g) {
    std::set<Residue> vs(h.vertices.begin(), h.vertices.end());
    for (auto v : vs)
        if (!g.has_vertex(v)) return false;
    for (const auto& e : h.edges) {
        const PaletteEdge* parent = g.find_edge(e.u, e.v);
        if (!parent || parent->label != e.label) return false;
        if (!vs.contains(e.u) || !vs.contains(e.v) || !vs.contains(e.label)) return false;
    }
    return true;
}

PaletteGraph palette_graph_of_diagram(const Diagram& d, const DehnColoring& c) {
    require_odd_prime(c.modulus);
    if (!is_coloring(d, c)) throw InvalidArgument("not a coloring");
    const std::int64_t p = c.modulus;
    const FoxColoring fox = fox_from_dehn(d, c);

    std::set<Residue> vertices(fox.values.begin(), fox.values.end());
    std::set<std::pair<Residue, Residue>> pairs;
    for (std::size_t x = 0; x < d.crossing_count(); ++x) {
        const auto& s = d.crossing_semiarcs(x);
        const Residue b1 = fox.values[d.arc_of(s[0])], b2 = fox.values[d.arc_of(s[2])];
        if (b1 != b2) pairs.emplace(std::min(b1, b2), std::max(b1, b2));
    }
    return assemble(p, std::move(vertices), std::move(pairs));
}

std::string to_dot(const PaletteGraph& g) {
    std::ostringstream os;
    os << "graph palette {\n  // p = " << g.modulus << '\n';
    for (auto v : g.vertices) os << "  " << v << ";\n";
    for (const auto& e : g.edges) os << "  " << e.u << " -- " << e.v << " [label=\"" << e.label << "\"];\n";
    os << "}\n";
    return os.str();
}

nlohmann::ordered_json to_json(const PaletteGraph& g) {
    nlohmann::ordered_json j;
    j["p"] = g.modulus;
    j["vertices"] = g.vertices;
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : g.edges) j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"label", e.label}});
    return j;
}

}  // namespace knotcol

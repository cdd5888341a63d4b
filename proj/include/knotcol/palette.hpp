#pragma once

// R-palette graphs.
//
// For a color set S, vertices are the sums a1 + a2 (a1, a2 in S) and two
// distinct sums b1, b2 are joined when some representing pairs can be the
// two under-semiarcs of a colored crossing. The edge label 2^{-1}(b1 + b2)
// is the sum class of the over-arc at that crossing.

#include "knotcol/coloring.hpp"
#include "knotcol/diagram.hpp"
#include "knotcol/exactalg.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace knotcol {

struct PaletteEdge {
    Residue u = 0;  // u < v
    Residue v = 0;
    Residue label = 0;

    friend auto operator<=>(const PaletteEdge&, const PaletteEdge&) = default;
};

struct PaletteGraph {
    std::int64_t modulus = 0;
    std::vector<Residue> vertices;  // ascending
    std::vector<PaletteEdge> edges;  // ascending by (u, v)

    bool has_vertex(Residue r) const;
    const PaletteEdge* find_edge(Residue a, Residue b) const;

    friend bool operator==(const PaletteGraph&, const PaletteGraph&) = default;
};

struct RSubgraph {
    std::vector<Residue> vertices;
    std::vector<PaletteEdge> edges;
};

/// G_S. Throws InvalidArgument for an empty S or a residue outside [0, p).
PaletteGraph palette_graph(std::span<const Residue> s, std::int64_t p);

/// Vertex set of a connected R-subgraph with at least three vertices, or
/// nullopt. Greatest-fixpoint edge deletion: an edge is removed while its
/// label lies in another connected component than its endpoints.
std::optional<std::vector<Residue>> connected_r_witness(const PaletteGraph& g);

bool is_r_subgraph(const RSubgraph& h, const PaletteGraph& g);

/// G_(D,C): arc classes as vertices, one edge per crossing whose under-arcs
/// carry distinct classes.
PaletteGraph palette_graph_of_diagram(const Diagram& d, const DehnColoring& c);

std::string to_dot(const PaletteGraph& g);
nlohmann::ordered_json to_json(const PaletteGraph& g);

}  // namespace knotcol

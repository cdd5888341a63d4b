#include "knotcol/error.hpp"
#include "knotcol/palette.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace knotcol;

namespace {

std::vector<std::vector<Residue>> subsets_up_to(std::int64_t p, std::size_t max_size) {
    std::vector<std::vector<Residue>> out;
    for (std::uint32_t mask = 1; mask < (1u << p); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) > max_size) continue;
        std::vector<Residue> s;
        for (Residue a = 0; a < p; ++a)
            if (mask & (1u << a)) s.push_back(a);
        out.push_back(s);
    }
    return out;
}

}  // namespace

TEST(Palette, SmallGraph) {
    const PaletteGraph g = palette_graph(std::vector<Residue>{0, 1}, 5);
    EXPECT_EQ(g.vertices, (std::vector<Residue>{0, 1, 2}));
    ASSERT_EQ(g.edges.size(), 1u);
    EXPECT_EQ(g.edges[0], (PaletteEdge{0, 2, 1}));
    EXPECT_FALSE(connected_r_witness(g));
}

TEST(Palette, ExampleSetsModSeven) {
    const PaletteGraph bad = palette_graph(std::vector<Residue>{0, 1, 2, 3}, 7);
    EXPECT_FALSE(connected_r_witness(bad));
    const PaletteGraph good = palette_graph(std::vector<Residue>{0, 1, 2, 4}, 7);
    const auto w = connected_r_witness(good);
    ASSERT_TRUE(w);
    // The whole graph is the witness.
    EXPECT_EQ(*w, good.vertices);
}

TEST(Palette, Errors) {
    EXPECT_THROW(palette_graph(std::vector<Residue>{}, 5), InvalidArgument);
    EXPECT_THROW(palette_graph(std::vector<Residue>{0, 5}, 5), InvalidArgument);
    EXPECT_THROW(palette_graph(std::vector<Residue>{0, 1}, 4), InvalidArgument);
    PaletteGraph broken;
    broken.modulus = 7;
    broken.vertices = {0, 2};
    broken.edges = {{0, 2, 1}};
    EXPECT_THROW(connected_r_witness(broken), InvalidArgument);
}

TEST(Palette, GraphMatchesQuadrupleSearch) {
    for (std::int64_t p : {3, 5, 7, 11}) {
        for (const auto& s : subsets_up_to(p, 4)) {
            const PaletteGraph g = palette_graph(s, p);
            const auto edges = oracle::palette_edges({s.begin(), s.end()}, p);
            ASSERT_EQ(g.edges.size(), edges.size());
            for (std::size_t i = 0; i < edges.size(); ++i) {
                EXPECT_EQ(g.edges[i].u, edges[i].u);
                EXPECT_EQ(g.edges[i].v, edges[i].v);
                EXPECT_EQ(g.edges[i].label, edges[i].label);
            }
            for (const auto& e : g.edges) {
                EXPECT_LT(e.u, e.v);
                EXPECT_TRUE(g.has_vertex(e.label));
                EXPECT_EQ((2 * e.label) % p, (e.u + e.v) % p);
            }
        }
    }
}

TEST(Palette, FixpointAgreesWithBruteForce) {
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        for (const auto& s : subsets_up_to(p, 4)) {
            const PaletteGraph g = palette_graph(s, p);
            ASSERT_LE(g.vertices.size(), 12u);
            const auto w = connected_r_witness(g);
            ASSERT_EQ(w.has_value(), oracle::brute_connected_r_subgraph({s.begin(), s.end()}, p))
                << "p=" << p << " |S|=" << s.size();
            if (!w) continue;
            // The witness is itself a connected R-subgraph.
            std::vector<oracle::Edge> kept;
            std::vector<PaletteEdge> sub;
            auto in = [&](Residue x) { return std::binary_search(w->begin(), w->end(), x); };
            for (const auto& e : g.edges)
                if (in(e.u) && in(e.v) && in(e.label)) {
                    kept.push_back({e.u, e.v, e.label});
                    sub.push_back(e);
                }
            EXPECT_GE(w->size(), 3u);
            EXPECT_TRUE(oracle::connected({w->begin(), w->end()}, kept));
            EXPECT_TRUE(is_r_subgraph({*w, sub}, g));
        }
    }
}

TEST(Palette, RSubgraphPredicate) {
    const PaletteGraph g = palette_graph(std::vector<Residue>{0, 1, 2, 4}, 7);
    EXPECT_TRUE(is_r_subgraph({g.vertices, g.edges}, g));
    EXPECT_TRUE(is_r_subgraph({{g.vertices[0]}, {}}, g));
    const PaletteEdge e = g.edges.front();
    std::vector<Residue> ends{e.u, e.v};
    if (e.label != e.u && e.label != e.v) {
        EXPECT_FALSE(is_r_subgraph({ends, {e}}, g));
    }
    EXPECT_FALSE(is_r_subgraph({{e.u, e.v, e.label}, {PaletteEdge{e.u, e.v, (e.label + 1) % 7}}}, g));
}

TEST(Palette, DiagramGraphs) {
    const Diagram& t = catalog_diagram("3_1");
    for (const auto& c : support::all_colorings(t, 3)) {
        const auto cls = classify(t, c);
        const PaletteGraph g = palette_graph_of_diagram(t, c);
        if (cls.kind == ColoringKind::one_trivial) {
            EXPECT_EQ(g.vertices.size(), 1u);
            EXPECT_TRUE(g.edges.empty());
        }
        if (cls.kind != ColoringKind::nontrivial) continue;
        EXPECT_EQ(g.vertices, (std::vector<Residue>{0, 1, 2}));
        ASSERT_EQ(g.edges.size(), 3u);
        for (const auto& e : g.edges) EXPECT_EQ(e.label, 3 - e.u - e.v);
    }
    const Diagram& f = catalog_diagram("4_1");
    for (const auto& c : support::all_colorings(f, 5)) {
        if (classify(f, c).kind != ColoringKind::nontrivial) continue;
        const PaletteGraph g = palette_graph_of_diagram(f, c);
        const auto w = connected_r_witness(g);
        ASSERT_TRUE(w);
        EXPECT_EQ(*w, g.vertices);
    }
}

TEST(Palette, Emission) {
    const PaletteGraph g = palette_graph(std::vector<Residue>{0, 1}, 5);
    EXPECT_EQ(to_dot(g), "graph palette {\n  // p = 5\n  0;\n  1;\n  2;\n  0 -- 2 [label=\"1\"];\n}\n");
    EXPECT_EQ(to_json(g).dump(), R"({"p":5,"vertices":[0,1,2],"edges":[{"u":0,"v":2,"label":1}]})");
}

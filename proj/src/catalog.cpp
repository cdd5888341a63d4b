#include "knotcol/coloring.hpp"
#include "knotcol/diagram.hpp"
#include "knotcol/error.hpp"

#include <array>
#include <map>
#include <string>

namespace knotcol {

namespace {

constexpr std::array<CatalogEntry, 9> kCatalog{{
    {"3_1", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]", 3},
    {"4_1", "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]", 5},
    {"5_1", "X[10,5,1,6] X[6,1,7,2] X[2,7,3,8] X[8,3,9,4] X[4,9,5,10]", 5},
    {"5_2", "X[5,1,6,10] X[1,7,2,6] X[9,3,10,2] X[3,9,4,8] X[7,5,8,4]", 7},
    {"6_1", "X[7,12,8,1] X[1,6,2,7] X[11,3,12,2] X[3,11,4,10] X[9,5,10,4] X[5,9,6,8]", 9},
    {"6_2", "X[12,8,1,7] X[8,2,9,1] X[2,10,3,9] X[6,4,7,3] X[4,11,5,12] X[10,5,11,6]", 11},
    {"6_3", "X[9,12,10,1] X[1,5,2,4] X[7,3,8,2] X[3,9,4,8] X[5,10,6,11] X[11,6,12,7]", 13},
    {"7_1", "X[14,7,1,8] X[8,1,9,2] X[2,9,3,10] X[10,3,11,4] X[4,11,5,12] X[12,5,13,6] X[6,13,7,14]", 7},
    {"7_4", "X[14,8,1,7] X[6,2,7,1] X[2,12,3,11] X[10,4,11,3] X[4,10,5,9] X[12,6,13,5] X[8,14,9,13]", 15},
}};

struct LoadedCatalog {
    std::map<std::string, Diagram, std::less<>> diagrams;
};

const LoadedCatalog& loaded() {
    static const LoadedCatalog catalog = [] {
        LoadedCatalog out;
        for (const auto& entry : kCatalog) {
            Diagram d = build_diagram(parse_pd(entry.pd));
            const std::string name(entry.name);
            if (d.region_count() != d.crossing_count() + 2)
                throw std::logic_error("catalog entry " + name + ": wrong region count");
            const Integer det = knot_determinant(d);
            if (det != entry.determinant)
                throw std::logic_error("catalog entry " + name + ": determinant " + det.str() + ", expected " +
                                       std::to_string(entry.determinant));
            out.diagrams.emplace(name, std::move(d));
        }
        return out;
    }();
    return catalog;
}

}  // namespace

std::span<const CatalogEntry> knot_catalog() { return kCatalog; }

const Diagram& catalog_diagram(std::string_view name) {
    const auto& c = loaded();
    const auto it = c.diagrams.find(name);
    if (it == c.diagrams.end()) throw InvalidArgument("unknown knot: " + std::string(name));
    return it->second;
}

}  // namespace knotcol

#pragma once

// Knot diagrams built from planar diagram (PD) codes.
//
// A PD code lists, for every crossing, the four semiarc labels met when
// walking counterclockwise around it starting at the incoming under-strand.
// Positions 0 and 2 (1 and 3 in the usual 1-based notation) carry the
// under-strand, positions 1 and 3 the over-strand.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace knotcol {

struct PDCode {
    std::vector<std::array<std::int64_t, 4>> crossings;

    /// "X[a,b,c,d] X[...] ..." with the original labels.
    std::string to_string() const;

    friend bool operator==(const PDCode&, const PDCode&) = default;
};

/// Accepts `X[a,b,c,d] X[...]` (optionally wrapped in `PD[...]`, separated by
/// whitespace or commas) or a JSON array of 4-element integer arrays.
PDCode parse_pd(std::string_view text);

/// One side of a semiarc. `side` is the occurrence (0 or 1, in crossing
/// order) of the semiarc label from which the face walk leaves along it.
struct Slot {
    std::size_t semiarc = 0;
    int side = 0;

    friend auto operator<=>(const Slot&, const Slot&) = default;
};

/// Quadrant q_ij lies between PD positions i and j (1-based).
enum Quadrant : std::size_t { q12 = 0, q23 = 1, q34 = 2, q41 = 3 };

class Diagram {
public:
    std::size_t crossing_count() const noexcept { return crossing_semiarcs_.size(); }
    std::size_t semiarc_count() const noexcept { return semiarc_labels_.size(); }
    std::size_t region_count() const noexcept { return region_slots_.size(); }
    std::size_t arc_count() const noexcept { return arc_count_; }

    const PDCode& pd() const noexcept { return pd_; }

    /// Original PD label of semiarc index s (indices follow sorted label order).
    std::int64_t semiarc_label(std::size_t s) const { return semiarc_labels_[s]; }

    /// Semiarc index at each PD position of crossing c.
    const std::array<std::size_t, 4>& crossing_semiarcs(std::size_t c) const {
        return crossing_semiarcs_[c];
    }
    /// Region index of each quadrant (q12, q23, q34, q41) of crossing c.
    const std::array<std::size_t, 4>& quadrants(std::size_t c) const { return quadrants_[c]; }

    /// Regions on side 0 and side 1 of semiarc s.
    const std::array<std::size_t, 2>& semiarc_regions(std::size_t s) const {
        return semiarc_regions_[s];
    }
    std::size_t arc_of(std::size_t s) const { return arc_of_[s]; }

    /// Boundary of region r, in walk order starting at its minimal slot.
    const std::vector<Slot>& region_boundary(std::size_t r) const { return region_slots_[r]; }

private:
    friend Diagram build_diagram(const PDCode& pd);

    PDCode pd_;
    std::vector<std::int64_t> semiarc_labels_;
    std::vector<std::array<std::size_t, 4>> crossing_semiarcs_;
    std::vector<std::array<std::size_t, 4>> quadrants_;
    std::vector<std::array<std::size_t, 2>> semiarc_regions_;
    std::vector<std::vector<Slot>> region_slots_;
    std::vector<std::size_t> arc_of_;
    std::size_t arc_count_ = 0;
};

/// Builds regions by walking faces of the rotation system, arcs by joining
/// semiarcs through over-strand positions. Regions are sorted by their
/// minimal slot, arcs by their minimal semiarc.
Diagram build_diagram(const PDCode& pd);

struct Checkerboard {
    std::vector<int> shade;  // 0 or 1 per region; region 0 has shade 0
};

Checkerboard checkerboard(const Diagram& d);

/// Built-in knot table entry.
struct CatalogEntry {
    std::string_view name;
    std::string_view pd;
    std::int64_t determinant;
};

/// 3_1, 4_1, 5_1, 5_2, 6_1, 6_2, 6_3, 7_1, 7_4 in that order.
std::span<const CatalogEntry> knot_catalog();

/// Parsed and built catalog diagram; throws InvalidArgument for unknown names.
/// Entries are validated (region count, determinant) the first time the
/// catalog is loaded.
const Diagram& catalog_diagram(std::string_view name);

}  // namespace knotcol

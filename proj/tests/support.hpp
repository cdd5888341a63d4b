#pragma once

#include "knotcol/coloring.hpp"

#include <stdexcept>
#include <vector>

namespace support {

/// Every coloring of d mod p, by value.
inline std::vector<knotcol::DehnColoring> all_colorings(const knotcol::Diagram& d, std::int64_t p) {
    auto space = knotcol::colorings(d, p);
    if (!space.enumerated) throw std::logic_error("coloring space exceeds the enumeration budget");
    return std::move(*space.enumerated);
}

inline std::vector<knotcol::DehnColoring> nontrivial_colorings(const knotcol::Diagram& d, std::int64_t p) {
    std::vector<knotcol::DehnColoring> out;
    for (auto& c : all_colorings(d, p))
        if (knotcol::classify(d, c).kind == knotcol::ColoringKind::nontrivial) out.push_back(std::move(c));
    return out;
}

}  // namespace support

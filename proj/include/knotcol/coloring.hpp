#pragma once

// Dehn colorings of a diagram: the coloring matrix, the solution space
// Col_p(D), trivial/nontrivial classification, affine transformations,
// the per-diagram color minimum, the Fox correspondence and det(K).

#include "knotcol/diagram.hpp"
#include "knotcol/exactalg.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace knotcol {

/// Region colors in Z_p, indexed like Diagram regions.
struct DehnColoring {
    std::int64_t modulus = 0;
    std::vector<Residue> values;

    friend bool operator==(const DehnColoring&, const DehnColoring&) = default;
};

enum class ColoringKind { one_trivial, two_trivial, nontrivial };

const char* to_string(ColoringKind kind) noexcept;

struct ColoringClass {
    ColoringKind kind = ColoringKind::one_trivial;
    std::vector<Residue> colors_used;  // ascending
};

/// Arc colors in Z_p, indexed like Diagram arcs.
struct FoxColoring {
    std::int64_t modulus = 0;
    std::vector<Residue> values;
};

/// Enumeration budget: KNOTCOL_BUDGET if set to a positive integer, else 10^6.
std::uint64_t default_budget();

/// floor(log2 p) + 2.
std::size_t color_lower_bound(std::int64_t p);

/// n x (n+2): row c is +1 at q12, q23 and -1 at q34, q41 of crossing c,
/// coefficients summed where quadrants coincide.
IntMatrix coloring_matrix(const Diagram& d);

/// n x arcs: row c is u + u' - 2w for under-arcs u, u' and over-arc w.
IntMatrix fox_coloring_matrix(const Diagram& d);

bool is_coloring(const Diagram& d, const DehnColoring& c);

/// Opposite quadrants equal at every crossing.
bool is_trivial(const Diagram& d, const DehnColoring& c);

struct ColoringSpace {
    std::int64_t modulus = 0;
    std::vector<ModVector> basis;
    std::size_t dimension = 0;
    Integer count;  // p^dimension
    /// Every coloring, when count <= budget. Ordered by coefficient index,
    /// basis vector 0 being the least significant digit.
    std::optional<std::vector<DehnColoring>> enumerated;
};

ColoringSpace colorings(const Diagram& d, std::int64_t p, std::uint64_t budget = default_budget());

/// Number of Fox colorings, p^(nullity of the Fox matrix mod p).
Integer fox_coloring_count(const Diagram& d, std::int64_t p);

ColoringClass classify(const Diagram& d, const DehnColoring& c);

DehnColoring affine_transform(const DehnColoring& c, Residue s, Residue t);

struct MinColors {
    std::optional<std::size_t> min;  // empty when there is no nontrivial coloring
    std::optional<DehnColoring> witness;
    std::size_t lower_bound = 0;
    std::size_t dimension = 0;
    bool affine_quotient = false;  // true when the full space exceeded the budget
};

/// Minimum number of colors over nontrivial colorings of this diagram.
/// Witness ties are broken by the lexicographically smallest value vector
/// among the colorings scanned.
MinColors min_colors_diagram(const Diagram& d, std::int64_t p, std::uint64_t budget = default_budget());

FoxColoring fox_from_dehn(const Diagram& d, const DehnColoring& c);

/// Product of the first n+1 Smith invariant factors of A_D(-1).
Integer knot_determinant(const Diagram& d);

/// A_D(-1): the coloring matrix with the extra row e_1 (region 0).
IntMatrix alexander_at_minus_one(const Diagram& d);

/// Serial reference kernels, kept for tests and benchmarks.
namespace serial {

std::vector<DehnColoring> enumerate_span(const std::vector<ModVector>& basis, std::int64_t p);

MinColors min_colors_diagram(const Diagram& d, std::int64_t p);

}  // namespace serial

/// All combinations of the basis in index order (OpenMP).
std::vector<DehnColoring> enumerate_span(const std::vector<ModVector>& basis, std::int64_t p);

}  // namespace knotcol

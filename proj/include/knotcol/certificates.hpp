#pragma once

// Determinant certificates for the color lower bound.
//
// For a nontrivial coloring C with l colors, the coloring matrix is augmented
// by one row (e_1, or e_i - e_j for regions that share a color but not a
// checkerboard shade), columns of equal color are summed, and an
// (l-1) x (l-1) submatrix M3 is found whose determinant is a nonzero
// multiple of p. Rows of M3 satisfy the (star) condition, so
// p <= |det M3| <= 2^(l-1).

#include "knotcol/coloring.hpp"
#include "knotcol/diagram.hpp"
#include "knotcol/exactalg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace knotcol {

enum class AugmentedVariant {
    unit_row,  // extra row e_1; coloring shifted so region 0 has color 0
    pair_row,  // extra row e_i - e_j
};

const char* to_string(AugmentedVariant v) noexcept;

struct AugmentedMatrix {
    IntMatrix matrix;  // (n+1) x (n+2)
    AugmentedVariant variant = AugmentedVariant::unit_row;
    std::size_t i = 0;  // pair_row only, i < j
    std::size_t j = 0;
    DehnColoring coloring;  // the coloring the matrix was built for
};

/// B_{D,C;i,j}: the coloring matrix with the extra row e_i - e_j.
IntMatrix pair_matrix(const Diagram& d, std::size_t i, std::size_t j);

AugmentedMatrix augmented_matrix(const Diagram& d, const DehnColoring& c);

struct RankClaim {
    std::string statement;
    std::size_t value = 0;
    std::size_t bound = 0;
    bool equality = false;  // value == bound, otherwise value <= bound
    bool passed = false;
};

struct RankReport {
    std::vector<RankClaim> claims;

    bool all_passed() const;
};

/// Rank statements for M, A_D(-1) (after shifting C(x_1) to 0) and, when C
/// admits a qualifying pair, B for the lexicographically smallest pair.
RankReport rank_checks(const Diagram& d, const DehnColoring& c, std::int64_t p);

/// Rank statements for B_{D,C;i,j} only.
RankReport pair_rank_checks(const Diagram& d, std::size_t i, std::size_t j, std::int64_t p);

/// Sums columns of equal color; columns ordered by increasing color.
IntMatrix merge_columns(const IntMatrix& m, const DehnColoring& c);
IntMatrix merge_columns(const AugmentedMatrix& m);

/// Nonzero-entry multiset of the row is one of the fifteen admissible ones.
bool star_admissible(std::span<const Integer> row);
std::vector<bool> check_star(const IntMatrix& m);

/// Order-k matrix whose rows draw admissible multisets at random distinct
/// columns. Deterministic per seed.
IntMatrix random_star_matrix(std::size_t k, std::uint64_t seed);

struct Certificate {
    std::int64_t modulus = 0;
    std::size_t ell = 0;
    AugmentedVariant variant = AugmentedVariant::unit_row;
    IntMatrix merged;  // M2, (n+1) x ell
    std::vector<std::size_t> row_indices;
    std::vector<std::size_t> col_indices;
    Integer det_value;
    std::size_t merged_rank_int = 0;
    std::size_t merged_rank_mod_p = 0;
    std::vector<bool> star_rows;          // per selected row
    std::vector<std::string> violations;  // empty when every invariant holds

    bool holds() const { return violations.empty(); }
};

Certificate extract_certificate(const Diagram& d, const DehnColoring& c, std::int64_t p);

struct StarCampaignResult {
    std::uint64_t samples = 0;
    std::uint64_t violations = 0;
    std::vector<Integer> max_abs_det;  // index k-1 for order k

    friend bool operator==(const StarCampaignResult&, const StarCampaignResult&) = default;
};

/// Sample i uses order 1 + (i mod max_order) and seed first_seed + i; checks
/// |det| <= 2^k (OpenMP over samples).
StarCampaignResult star_campaign(std::uint64_t first_seed, std::uint64_t samples, std::size_t max_order);

namespace serial {

StarCampaignResult star_campaign(std::uint64_t first_seed, std::uint64_t samples, std::size_t max_order);

}  // namespace serial

}  // namespace knotcol

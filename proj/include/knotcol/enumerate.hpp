#pragma once

// Subsets of Z_p up to regular affine maps a -> s*a + t, and the search for
// color sets whose palette graph contains a connected R-subgraph on at least
// three vertices.

#include "knotcol/exactalg.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace knotcol {

struct CanonicalSet {
    std::int64_t modulus = 0;
    std::vector<Residue> elements;  // ascending
    bool canonical = false;

    friend bool operator==(const CanonicalSet&, const CanonicalSet&) = default;
};

/// Lexicographically smallest sorted image of S under all p(p-1) affine maps.
CanonicalSet canonical_affine(std::span<const Residue> s, std::int64_t p);

bool affine_equivalent(std::span<const Residue> a, std::span<const Residue> b, std::int64_t p);

/// p(p-1) / |stabilizer of S|, the stabilizer counted by direct search.
std::uint64_t orbit_size(std::span<const Residue> s, std::int64_t p);

/// Canonical representatives of all k-subsets, sorted (OpenMP over disjoint
/// ranges of the subsets that contain {0, 1}).
std::vector<CanonicalSet> enumerate_classes(std::int64_t p, std::size_t k);

/// Classes whose palette graph has a connected R-subgraph with >= 3 vertices.
std::vector<CanonicalSet> candidates(std::int64_t p, std::size_t k);

/// Representatives printed for k = floor(log2 p) + 2, odd primes p < 32.
std::optional<std::vector<std::vector<Residue>>> published_candidates(std::int64_t p);

struct CandidateRow {
    std::size_t k = 0;
    std::vector<CanonicalSet> classes;
    /// Comparison against the published list (empty list for k below the
    /// bound); nullopt when nothing is tabulated for (p, k).
    std::optional<bool> expected_match;
};

struct Theorem62Report {
    std::int64_t p = 0;
    std::vector<CandidateRow> rows;  // k = 1 .. floor(log2 p) + 2

    bool passed() const;
};

/// Published expectation for (p, k) compared up to affine equivalence.
std::optional<bool> matches_published(std::int64_t p, std::size_t k, const std::vector<CanonicalSet>& classes);

Theorem62Report theorem62_report(std::int64_t p);

nlohmann::ordered_json to_json(std::int64_t p, const CandidateRow& row);

namespace serial {

/// Literal search over all p(p-1) maps.
CanonicalSet canonical_affine(std::span<const Residue> s, std::int64_t p);

/// Every k-subset of Z_p, canonicalized with the literal search.
std::vector<CanonicalSet> enumerate_classes(std::int64_t p, std::size_t k);

std::vector<CanonicalSet> candidates(std::int64_t p, std::size_t k);

}  // namespace serial

}  // namespace knotcol

#include "knotcol/coloring.hpp"
#include "knotcol/error.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace knotcol;

namespace {

const std::int64_t kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31};

Integer ipow(std::int64_t p, std::size_t e) {
    Integer r = 1;
    while (e--) r *= p;
    return r;
}

std::size_t distinct(const std::vector<Residue>& v) { return std::set<Residue>(v.begin(), v.end()).size(); }

DehnColoring first_nontrivial(const Diagram& d, std::int64_t p) {
    for (const auto& c : support::all_colorings(d, p))
        if (classify(d, c).kind == ColoringKind::nontrivial) return c;
    throw std::logic_error("no nontrivial coloring");
}

}  // namespace

TEST(Coloring, MatrixShape) {
    const Diagram& t = catalog_diagram("3_1");
    const IntMatrix m = coloring_matrix(t);
    ASSERT_EQ(m.rows(), 3u);
    ASSERT_EQ(m.cols(), 5u);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::multiset<long long> nz;
        Integer sum = 0;
        for (const auto& v : m.row(r)) {
            sum += v;
            if (v != 0) nz.insert(v.convert_to<long long>());
        }
        EXPECT_EQ(sum, 0);
        EXPECT_EQ(nz, (std::multiset<long long>{-1, -1, 1, 1}));
    }

    const IntMatrix k = coloring_matrix(build_diagram(parse_pd("X[1,2,2,1]")));
    ASSERT_EQ(k.rows(), 1u);
    ASSERT_EQ(k.cols(), 3u);
    Integer sum = 0;
    std::size_t nonzero = 0;
    for (const auto& v : k.row(0)) {
        sum += v;
        nonzero += v != 0;
    }
    EXPECT_EQ(sum, 0);
    EXPECT_LT(nonzero, 4u);

    for (const auto& e : knot_catalog()) {
        const IntMatrix c = coloring_matrix(catalog_diagram(e.name));
        for (std::size_t r = 0; r < c.rows(); ++r) {
            Integer s = 0;
            for (const auto& v : c.row(r)) s += v;
            EXPECT_EQ(s, 0);
        }
    }
}

TEST(Coloring, SpaceExamples) {
    const Diagram& t = catalog_diagram("3_1");
    const Diagram& f = catalog_diagram("4_1");
    EXPECT_EQ(colorings(t, 3).dimension, 3u);
    EXPECT_EQ(colorings(t, 3).count, 27);
    EXPECT_EQ(colorings(t, 5).dimension, 2u);
    EXPECT_EQ(colorings(t, 5).count, 25);
    EXPECT_EQ(colorings(f, 5).dimension, 3u);
    EXPECT_EQ(colorings(f, 5).count, 125);
    EXPECT_THROW(colorings(t, 9), InvalidArgument);
    EXPECT_THROW(colorings(t, 2), InvalidArgument);
    EXPECT_FALSE(colorings(t, 3, 26).enumerated.has_value());
    EXPECT_TRUE(colorings(t, 3, 27).enumerated.has_value());
}

TEST(Coloring, CountsMatchBruteForce) {
    for (const auto& e : knot_catalog()) {
        const Diagram& d = catalog_diagram(e.name);
        for (std::int64_t p : {3, 5, 7}) {
            if (ipow(p, d.region_count()) > 500000) continue;
            SCOPED_TRACE(std::string(e.name) + " p=" + std::to_string(p));
            const auto dehn = oracle::brute_dehn_count(d, p);
            const auto fox = oracle::brute_fox_count(d.pd(), p);
            EXPECT_EQ(colorings(d, p).count, dehn);
            EXPECT_EQ(fox_coloring_count(d, p), fox);
            EXPECT_EQ(dehn, static_cast<std::uint64_t>(p) * fox);
        }
    }
}

TEST(Coloring, ColorabilityIffPrimeDividesDeterminant) {
    for (const auto& e : knot_catalog()) {
        const Diagram& d = catalog_diagram(e.name);
        EXPECT_EQ(knot_determinant(d), e.determinant);
        EXPECT_EQ(knot_determinant(d), oracle::determinant_from_minors(d.pd()));
        for (auto p : kPrimes) {
            const ColoringSpace s = colorings(d, p);
            EXPECT_GE(s.dimension, 2u);
            EXPECT_EQ(s.dimension >= 3, e.determinant % p == 0) << e.name << " p=" << p;
            EXPECT_EQ(fox_coloring_count(d, p) * p, s.count);
        }
    }
}

TEST(Coloring, EnumeratedColoringsAreValid) {
    for (const auto& e : knot_catalog()) {
        const Diagram& d = catalog_diagram(e.name);
        for (std::int64_t p : {3, 5, 7, 13}) {
            const ColoringSpace s = colorings(d, p);
            ASSERT_TRUE(s.enumerated);
            ASSERT_EQ(Integer(s.enumerated->size()), s.count);
            std::size_t one = 0, two = 0;
            std::set<std::vector<Residue>> seen;
            for (const auto& c : *s.enumerated) {
                ASSERT_TRUE(is_coloring(d, c));
                seen.insert(c.values);
                const auto cls = classify(d, c);
                one += cls.kind == ColoringKind::one_trivial;
                two += cls.kind == ColoringKind::two_trivial;
                if (cls.kind == ColoringKind::one_trivial) {
                    EXPECT_EQ(cls.colors_used.size(), 1u);
                }
                if (cls.kind == ColoringKind::two_trivial) {
                    EXPECT_EQ(cls.colors_used.size(), 2u);
                }
            }
            EXPECT_EQ(seen.size(), s.enumerated->size());
            EXPECT_EQ(one, static_cast<std::size_t>(p));
            EXPECT_EQ(two, static_cast<std::size_t>(p * (p - 1)));
        }
    }
}

TEST(Coloring, ClassifyExamples) {
    const Diagram& t = catalog_diagram("3_1");
    const DehnColoring zero{3, std::vector<Residue>(5, 0)};
    EXPECT_EQ(classify(t, zero).kind, ColoringKind::one_trivial);
    EXPECT_EQ(classify(t, zero).colors_used, std::vector<Residue>{0});

    DehnColoring board{3, {}};
    for (int s : checkerboard(t).shade) board.values.push_back(s);
    EXPECT_EQ(classify(t, board).kind, ColoringKind::two_trivial);
    EXPECT_EQ(classify(t, board).colors_used, (std::vector<Residue>{0, 1}));

    const DehnColoring c = first_nontrivial(t, 3);
    EXPECT_EQ(classify(t, c).kind, ColoringKind::nontrivial);
    EXPECT_EQ(classify(t, c).colors_used.size(), 3u);

    DehnColoring broken = zero;
    broken.values[0] = 1;
    if (!is_coloring(t, broken)) {
        EXPECT_THROW(classify(t, broken), InvalidArgument);
    }
}

TEST(Coloring, AffineTransformPreservesStructure) {
    std::mt19937 rng(5);
    for (const auto& e : knot_catalog()) {
        const Diagram& d = catalog_diagram(e.name);
        for (auto p : kPrimes) {
            if (e.determinant % p != 0) continue;
            std::uniform_int_distribution<Residue> unit(1, p - 1), any(0, p - 1);
            const auto all = support::all_colorings(d, p);
            for (int trial = 0; trial < 50; ++trial) {
                const DehnColoring& c = all[rng() % all.size()];
                const Residue s = unit(rng), t = any(rng);
                const DehnColoring image = affine_transform(c, s, t);
                ASSERT_TRUE(is_coloring(d, image));
                const auto before = classify(d, c), after = classify(d, image);
                EXPECT_EQ(before.kind, after.kind);
                std::vector<Residue> mapped;
                for (auto a : before.colors_used) mapped.push_back((a * s + t) % p);
                std::sort(mapped.begin(), mapped.end());
                EXPECT_EQ(after.colors_used, mapped);
            }
            EXPECT_EQ(affine_transform(all.back(), 1, 0), all.back());
            EXPECT_THROW(affine_transform(all.back(), 0, 1), InvalidArgument);
            EXPECT_THROW(affine_transform(all.back(), p, 1), InvalidArgument);
        }
    }
}

TEST(Coloring, MinColorsExamples) {
    const MinColors t3 = min_colors_diagram(catalog_diagram("3_1"), 3);
    ASSERT_TRUE(t3.min);
    EXPECT_EQ(*t3.min, 3u);
    EXPECT_EQ(t3.lower_bound, 3u);
    const MinColors f5 = min_colors_diagram(catalog_diagram("4_1"), 5);
    ASSERT_TRUE(f5.min);
    EXPECT_EQ(*f5.min, 4u);
    EXPECT_EQ(f5.lower_bound, 4u);
    const MinColors t5 = min_colors_diagram(catalog_diagram("3_1"), 5);
    EXPECT_FALSE(t5.min);
    EXPECT_FALSE(t5.witness);
    EXPECT_EQ(color_lower_bound(31), 6u);
    EXPECT_EQ(color_lower_bound(3), 3u);
}

TEST(Coloring, MinColorsMatchesDirectScanAndQuotient) {
    for (const auto& e : knot_catalog()) {
        const Diagram& d = catalog_diagram(e.name);
        for (auto p : kPrimes) {
            if (e.determinant % p != 0) continue;
            SCOPED_TRACE(std::string(e.name) + " p=" + std::to_string(p));
            std::optional<std::size_t> best;
            std::vector<Residue> best_values;
            for (const auto& c : support::all_colorings(d, p)) {
                if (classify(d, c).kind != ColoringKind::nontrivial) continue;
                const auto k = distinct(c.values);
                if (!best || k < *best || (k == *best && c.values < best_values)) {
                    best = k;
                    best_values = c.values;
                }
            }
            const MinColors full = min_colors_diagram(d, p);
            ASSERT_TRUE(full.min);
            EXPECT_FALSE(full.affine_quotient);
            EXPECT_EQ(full.min, best);
            EXPECT_EQ(full.witness->values, best_values);
            EXPECT_GE(*full.min, full.lower_bound);

            const MinColors quotient = min_colors_diagram(d, p, 1);
            EXPECT_TRUE(quotient.affine_quotient);
            EXPECT_EQ(quotient.min, best);
            ASSERT_TRUE(quotient.witness);
            EXPECT_TRUE(is_coloring(d, *quotient.witness));
            EXPECT_EQ(distinct(quotient.witness->values), *best);

            const MinColors reference = serial::min_colors_diagram(d, p);
            EXPECT_EQ(reference.min, full.min);
            EXPECT_EQ(reference.witness, full.witness);
        }
    }
}

TEST(Coloring, FoxCorrespondence) {
    const Diagram& t = catalog_diagram("3_1");
    const DehnColoring constant{3, std::vector<Residue>(5, 2)};
    EXPECT_EQ(fox_from_dehn(t, constant).values, std::vector<Residue>(3, 1));
    DehnColoring board{3, {}};
    for (int s : checkerboard(t).shade) board.values.push_back(s);
    EXPECT_EQ(fox_from_dehn(t, board).values, std::vector<Residue>(3, 1));
    const FoxColoring nt = fox_from_dehn(t, first_nontrivial(t, 3));
    EXPECT_EQ(distinct(nt.values), 3u);

    for (const auto& e : knot_catalog()) {
        const Diagram& d = catalog_diagram(e.name);
        const IntMatrix fm = fox_coloring_matrix(d);
        for (std::int64_t p : {3, 5, 7}) {
            std::set<std::vector<Residue>> images;
            const auto all = support::all_colorings(d, p);
            for (const auto& c : all) {
                const FoxColoring f = fox_from_dehn(d, c);
                images.insert(f.values);
                for (std::size_t r = 0; r < fm.rows(); ++r) {
                    Integer s = 0;
                    for (std::size_t j = 0; j < fm.cols(); ++j) s += fm(r, j) * f.values[j];
                    EXPECT_EQ(reduce_mod(s, p), 0);
                }
            }
            // p-to-1 onto the Fox colorings.
            EXPECT_EQ(Integer(images.size()), fox_coloring_count(d, p));
            EXPECT_EQ(images.size() * static_cast<std::size_t>(p), all.size());
        }
    }
}

TEST(Coloring, ParallelEnumerationMatchesSerial) {
    for (const auto& e : knot_catalog()) {
        const Diagram& d = catalog_diagram(e.name);
        for (std::int64_t p : {3, 5, 7}) {
            const auto basis = colorings(d, p).basis;
            EXPECT_EQ(enumerate_span(basis, p), serial::enumerate_span(basis, p));
        }
    }
}

TEST(Coloring, BudgetFromEnvironment) {
    ::setenv("KNOTCOL_BUDGET", "42", 1);
    EXPECT_EQ(default_budget(), 42u);
    ::setenv("KNOTCOL_BUDGET", "junk", 1);
    EXPECT_EQ(default_budget(), 1000000u);
    ::unsetenv("KNOTCOL_BUDGET");
    EXPECT_EQ(default_budget(), 1000000u);
}

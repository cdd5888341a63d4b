#include "knotcol/certificates.hpp"
#include "knotcol/error.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace knotcol;

namespace {

const std::int64_t kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31};

std::vector<Integer> row(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

// Regions sharing a color but not a checkerboard shade, smallest pair first.
std::optional<std::pair<std::size_t, std::size_t>> pair_by_search(const Diagram& d, const DehnColoring& c) {
    const auto shade = checkerboard(d).shade;
    for (std::size_t i = 0; i < c.values.size(); ++i)
        for (std::size_t j = i + 1; j < c.values.size(); ++j)
            if (c.values[i] == c.values[j] && shade[i] != shade[j]) return std::make_pair(i, j);
    return std::nullopt;
}

}  // namespace

TEST(Certificates, StarExamples) {
    EXPECT_TRUE(star_admissible(row({1, -1, 1, -1})));
    EXPECT_FALSE(star_admissible(row({2, 1, 0})));
    EXPECT_TRUE(star_admissible(row({1, 0, 0})));
    EXPECT_TRUE(star_admissible(row({0, 0, 0})) == false);
    EXPECT_FALSE(star_admissible(row({3})));
    EXPECT_FALSE(star_admissible(row({1, 1, 1})));
    EXPECT_FALSE(star_admissible(row({2, 2})));
    EXPECT_TRUE(star_admissible(row({-2, 2})));
    EXPECT_TRUE(star_admissible(row({1, -2, 1})));
    EXPECT_FALSE(star_admissible(row({1, 1, 1, -1})));

    // Exactly fifteen multisets of entries in {-2,...,2} of size <= 4 pass.
    std::size_t passing = 0;
    const int vals[] = {-2, -1, 1, 2};
    std::set<std::multiset<int>> seen;
    for (int len = 1; len <= 4; ++len) {
        std::vector<int> idx(static_cast<std::size_t>(len), 0);
        for (;;) {
            std::vector<Integer> r;
            std::multiset<int> ms;
            for (int i : idx) {
                r.push_back(vals[i]);
                ms.insert(vals[i]);
            }
            if (seen.insert(ms).second && star_admissible(r)) ++passing;
            std::size_t k = 0;
            while (k < idx.size() && ++idx[k] == 4) idx[k++] = 0;
            if (k == idx.size()) break;
        }
    }
    EXPECT_EQ(passing, 15u);
}

TEST(Certificates, RandomStarMatrices) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const IntMatrix m1 = random_star_matrix(1, seed);
        EXPECT_LE(abs(det_int(m1)), 2);
    }
    EXPECT_EQ(random_star_matrix(3, 17), random_star_matrix(3, 17));
    const auto ok = check_star(random_star_matrix(3, 17));
    EXPECT_TRUE(std::all_of(ok.begin(), ok.end(), [](bool b) { return b; }));
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        const IntMatrix m = random_star_matrix(5, seed);
        const auto rows = check_star(m);
        ASSERT_TRUE(std::all_of(rows.begin(), rows.end(), [](bool b) { return b; }));
        ASSERT_LE(abs(det_int(m)), 32);
    }
    EXPECT_THROW(random_star_matrix(0, 1), InvalidArgument);
}

TEST(Certificates, CampaignDeterminantsMatchCofactor) {
    for (std::uint64_t seed = 0; seed < 3000; ++seed) {
        const IntMatrix m = random_star_matrix(1 + seed % 8, seed);
        ASSERT_EQ(det_int(m), oracle::cofactor_det(oracle::plain(m)));
    }
}

TEST(Certificates, CampaignParallelMatchesSerial) {
    const auto par = star_campaign(1, 20000, 8);
    const auto ser = serial::star_campaign(1, 20000, 8);
    EXPECT_EQ(par, ser);
    EXPECT_EQ(par.samples, 20000u);
    EXPECT_EQ(par.violations, 0u);
    for (std::size_t k = 1; k <= 8; ++k) EXPECT_LE(par.max_abs_det[k - 1], Integer(1) << k);
}

TEST(Certificates, MergeColumnsExamples) {
    const IntMatrix m{{1, -1, 1, -1}};
    EXPECT_EQ(merge_columns(m, DehnColoring{3, {0, 1, 0, 2}}), (IntMatrix{{2, -1, -1}}));
    const IntMatrix pair{{1, 0, -1, 0}};
    EXPECT_EQ(merge_columns(pair, DehnColoring{5, {3, 1, 3, 0}}), (IntMatrix{{0, 0, 0}}));
    EXPECT_THROW(merge_columns(m, DehnColoring{3, {0, 1}}), InvalidArgument);
}

TEST(Certificates, AugmentedMatrixShapes) {
    const Diagram& t = catalog_diagram("3_1");
    for (const auto& c : support::nontrivial_colorings(t, 3)) {
        const AugmentedMatrix a = augmented_matrix(t, c);
        EXPECT_EQ(a.matrix.rows(), 4u);
        EXPECT_EQ(a.matrix.cols(), 5u);
        const auto pair = pair_by_search(t, c);
        EXPECT_EQ(a.variant == AugmentedVariant::pair_row, pair.has_value());
        if (a.variant == AugmentedVariant::unit_row) {
            EXPECT_EQ(a.coloring.values[0], 0);
            EXPECT_EQ(a.matrix, alexander_at_minus_one(t));
        } else {
            EXPECT_EQ(std::make_pair(a.i, a.j), *pair);
        }
        EXPECT_EQ(merge_columns(a).rows(), 4u);
        EXPECT_EQ(merge_columns(a).cols(), 3u);
    }
    const Diagram& f = catalog_diagram("4_1");
    const AugmentedMatrix af = augmented_matrix(f, support::nontrivial_colorings(f, 5).front());
    EXPECT_EQ(af.matrix.rows(), 5u);
    EXPECT_EQ(af.matrix.cols(), 6u);
    EXPECT_THROW(augmented_matrix(t, DehnColoring{3, std::vector<Residue>(5, 1)}), InvalidArgument);
    EXPECT_THROW(extract_certificate(t, DehnColoring{3, std::vector<Residue>(5, 1)}, 3), InvalidArgument);
}

TEST(Certificates, MergedExtraRow) {
    for (const auto& e : knot_catalog()) {
        const Diagram& d = catalog_diagram(e.name);
        for (auto p : kPrimes) {
            if (e.determinant % p != 0) continue;
            for (const auto& c : support::nontrivial_colorings(d, p)) {
                const AugmentedMatrix a = augmented_matrix(d, c);
                const IntMatrix m2 = merge_columns(a);
                std::vector<Integer> last(m2.row(m2.rows() - 1).begin(), m2.row(m2.rows() - 1).end());
                const auto nz = std::count_if(last.begin(), last.end(), [](const Integer& v) { return v != 0; });
                if (a.variant == AugmentedVariant::unit_row) {
                    EXPECT_EQ(nz, 1);
                    EXPECT_TRUE(star_admissible(last));
                } else {
                    EXPECT_EQ(nz, 0);
                }
            }
        }
    }
}

TEST(Certificates, RankChecksExamples) {
    const Diagram& t = catalog_diagram("3_1");
    const RankReport rt = rank_checks(t, support::nontrivial_colorings(t, 3).front(), 3);
    EXPECT_TRUE(rt.all_passed());
    ASSERT_GE(rt.claims.size(), 4u);
    EXPECT_EQ(rt.claims[0].value, 3u);
    EXPECT_EQ(rt.claims[1].value, 2u);

    const Diagram& f = catalog_diagram("4_1");
    for (const auto& c : support::nontrivial_colorings(f, 5)) {
        const RankReport rf = rank_checks(f, c, 5);
        EXPECT_TRUE(rf.all_passed());
        EXPECT_EQ(rf.claims[0].value, 4u);
        EXPECT_LE(rf.claims[1].value, 3u);
        EXPECT_EQ(rf.claims[2].value, 5u);
        EXPECT_LE(rf.claims[3].value, 4u);
    }
    // A pair that does not come from a coloring: B has full rank mod p.
    const RankReport bad = pair_rank_checks(t, 0, 1, 5);
    EXPECT_FALSE(bad.all_passed());
}

TEST(Certificates, ForcedDeterminants) {
    const Diagram& t = catalog_diagram("3_1");
    for (const auto& c : support::nontrivial_colorings(t, 3)) {
        const Certificate cert = extract_certificate(t, c, 3);
        EXPECT_TRUE(cert.holds());
        EXPECT_EQ(cert.ell, 3u);
        EXPECT_EQ(abs(cert.det_value), 3);
    }
    const Diagram& f = catalog_diagram("4_1");
    std::size_t four = 0;
    for (const auto& c : support::nontrivial_colorings(f, 5)) {
        if (classify(f, c).colors_used.size() != 4) continue;
        ++four;
        const Certificate cert = extract_certificate(f, c, 5);
        EXPECT_TRUE(cert.holds());
        EXPECT_EQ(abs(cert.det_value), 5);
    }
    EXPECT_GT(four, 0u);
}

TEST(Certificates, CatalogCertificatesHold) {
    for (const auto& e : knot_catalog()) {
        const Diagram& d = catalog_diagram(e.name);
        for (auto p : kPrimes) {
            if (e.determinant % p != 0) continue;
            for (const auto& c : support::nontrivial_colorings(d, p)) {
                const Certificate cert = extract_certificate(d, c, p);
                ASSERT_TRUE(cert.holds()) << e.name << " p=" << p << ": " << cert.violations.front();
                const IntMatrix m3 = cert.merged.submatrix(cert.row_indices, cert.col_indices);
                EXPECT_EQ(cert.det_value, oracle::cofactor_det(oracle::plain(m3)));
                EXPECT_EQ(cert.ell, classify(d, c).colors_used.size());
                EXPECT_TRUE(rank_checks(d, c, p).all_passed());
            }
        }
    }
}

#include "knotcol/certificates.hpp"

#include "knotcol/error.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>

namespace knotcol {

namespace {

// The admissible nonzero-entry multisets, each sorted ascending.
const std::vector<std::vector<int>>& admissible_multisets() {
    static const std::vector<std::vector<int>> sets{
        {-2},        {-1},       {1},         {2},         {-2, 1},
        {-2, 2},     {-1, -1},   {-1, 1},     {-1, 2},     {1, 1},
        {-2, 1, 1},  {-1, -1, 1}, {-1, -1, 2}, {-1, 1, 1}, {-1, -1, 1, 1},
    };
    return sets;
}

// Advances idx to the next k-subset of {0..n-1} in lexicographic order.
bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> first_subset(std::size_t k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    return idx;
}

// Lexicographically smallest (i, j), i < j, with equal colors and different shades.
std::optional<std::pair<std::size_t, std::size_t>> qualifying_pair(const Diagram& d, const DehnColoring& c) {
    const auto shade = checkerboard(d).shade;
    for (std::size_t i = 0; i < c.values.size(); ++i)
        for (std::size_t j = i + 1; j < c.values.size(); ++j)
            if (c.values[i] == c.values[j] && shade[i] != shade[j]) return std::make_pair(i, j);
    return std::nullopt;
}

void require_nontrivial(const Diagram& d, const DehnColoring& c) {
    if (classify(d, c).kind != ColoringKind::nontrivial)
        throw InvalidArgument("certificate requires nontrivial coloring");
}

RankClaim claim(std::string statement, std::size_t value, std::size_t bound, bool equality) {
    return {std::move(statement), value, bound, equality, equality ? value == bound : value <= bound};
}

void append_pair_claims(RankReport& report, const Diagram& d, std::size_t i, std::size_t j, std::int64_t p) {
    const std::size_t n = d.crossing_count();
    const IntMatrix b = pair_matrix(d, i, j);
    const std::string name = "B(" + std::to_string(i) + "," + std::to_string(j) + ")";
    report.claims.push_back(claim("rank_Z " + name + " = n+1", rank_int(b), n + 1, true));
    report.claims.push_back(claim("rank_p " + name + " <= n", rank_mod_p(b, p), n, false));
}

StarCampaignResult campaign_sample_range(std::uint64_t first_seed, std::uint64_t begin, std::uint64_t end,
                                         std::size_t max_order) {
    StarCampaignResult r;
    r.max_abs_det.assign(max_order, 0);
    for (std::uint64_t i = begin; i < end; ++i) {
        const std::size_t k = 1 + static_cast<std::size_t>(i % max_order);
        const Integer det = abs(det_int(random_star_matrix(k, first_seed + i)));
        ++r.samples;
        if (det > (Integer(1) << k)) ++r.violations;
        if (det > r.max_abs_det[k - 1]) r.max_abs_det[k - 1] = det;
    }
    return r;
}

void merge_into(StarCampaignResult& into, const StarCampaignResult& from) {
    into.samples += from.samples;
    into.violations += from.violations;
    for (std::size_t k = 0; k < into.max_abs_det.size(); ++k)
        into.max_abs_det[k] = std::max(into.max_abs_det[k], from.max_abs_det[k]);
}

}  // namespace

const char* to_string(AugmentedVariant v) noexcept {
    return v == AugmentedVariant::unit_row ? "A (unit row e_1)" : "B (pair row e_i - e_j)";
}

bool RankReport::all_passed() const {
    return std::all_of(claims.begin(), claims.end(), [](const RankClaim& c) { return c.passed; });
}

IntMatrix pair_matrix(const Diagram& d, std::size_t i, std::size_t j) {
    if (i >= j || j >= d.region_count()) throw InvalidArgument("pair row needs region indices i < j");
    IntMatrix b = coloring_matrix(d);
    std::vector<Integer> row(d.region_count(), 0);
    row[i] = 1;
    row[j] = -1;
    b.append_row(row);
    return b;
}

AugmentedMatrix augmented_matrix(const Diagram& d, const DehnColoring& c) {
    require_nontrivial(d, c);
    AugmentedMatrix out;
    if (const auto pair = qualifying_pair(d, c)) {
        out.variant = AugmentedVariant::pair_row;
        out.i = pair->first;
        out.j = pair->second;
        out.matrix = pair_matrix(d, out.i, out.j);
        out.coloring = c;
    } else {
        out.variant = AugmentedVariant::unit_row;
        out.matrix = alexander_at_minus_one(d);
        out.coloring = affine_transform(c, 1, -c.values[0]);
    }
    return out;
}

RankReport rank_checks(const Diagram& d, const DehnColoring& c, std::int64_t p) {
    require_odd_prime(p);
    if (c.modulus != p) throw InvalidArgument("coloring modulus does not match p");
    require_nontrivial(d, c);
    const std::size_t n = d.crossing_count();
    RankReport report;

    const IntMatrix m = coloring_matrix(d);
    report.claims.push_back(claim("rank_Z M = n", rank_int(m), n, true));
    report.claims.push_back(claim("rank_p M <= n-1", rank_mod_p(m, p), n - 1, false));

    // Any nontrivial C can be shifted to C(x_1) = 0, so the A_D(-1) statements always apply.
    const IntMatrix a = alexander_at_minus_one(d);
    report.claims.push_back(claim("rank_Z A_D(-1) = n+1", rank_int(a), n + 1, true));
    report.claims.push_back(claim("rank_p A_D(-1) <= n", rank_mod_p(a, p), n, false));

    if (const auto pair = qualifying_pair(d, c)) append_pair_claims(report, d, pair->first, pair->second, p);
    return report;
}

RankReport pair_rank_checks(const Diagram& d, std::size_t i, std::size_t j, std::int64_t p) {
    require_odd_prime(p);
    RankReport report;
    append_pair_claims(report, d, i, j, p);
    return report;
}

IntMatrix merge_columns(const IntMatrix& m, const DehnColoring& c) {
    if (m.cols() != c.values.size()) throw InvalidArgument("column count must equal region count");
    std::vector<Residue> colors = c.values;
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());

    IntMatrix out(m.rows(), colors.size());
    for (std::size_t col = 0; col < m.cols(); ++col) {
        const auto target = static_cast<std::size_t>(
            std::lower_bound(colors.begin(), colors.end(), c.values[col]) - colors.begin());
        for (std::size_t r = 0; r < m.rows(); ++r) out(r, target) += m(r, col);
    }
    return out;
}

IntMatrix merge_columns(const AugmentedMatrix& m) { return merge_columns(m.matrix, m.coloring); }

bool star_admissible(std::span<const Integer> row) {
    std::vector<int> nonzero;
    for (const auto& v : row) {
        if (v == 0) continue;
        if (v < -2 || v > 2 || nonzero.size() == 4) return false;
        nonzero.push_back(static_cast<int>(v));
    }
    std::sort(nonzero.begin(), nonzero.end());
    const auto& sets = admissible_multisets();
    return std::find(sets.begin(), sets.end(), nonzero) != sets.end();
}

std::vector<bool> check_star(const IntMatrix& m) {
    std::vector<bool> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) out[r] = star_admissible(m.row(r));
    return out;
}

IntMatrix random_star_matrix(std::size_t k, std::uint64_t seed) {
    if (k == 0) throw InvalidArgument("matrix order must be at least 1");
    std::mt19937_64 rng(seed);
    std::vector<const std::vector<int>*> pool;
    for (const auto& s : admissible_multisets())
        if (s.size() <= k) pool.push_back(&s);

    IntMatrix m(k, k);
    std::vector<std::size_t> cols(k);
    for (std::size_t r = 0; r < k; ++r) {
        const auto& entries = *pool[rng() % pool.size()];
        std::iota(cols.begin(), cols.end(), 0);
        // Partial Fisher-Yates: the first entries.size() columns are a random selection.
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const std::size_t pick = i + static_cast<std::size_t>(rng() % (k - i));
            std::swap(cols[i], cols[pick]);
            m(r, cols[i]) = entries[i];
        }
    }
    return m;
}

Certificate extract_certificate(const Diagram& d, const DehnColoring& c, std::int64_t p) {
    require_odd_prime(p);
    if (c.modulus != p) throw InvalidArgument("coloring modulus does not match p");
    const AugmentedMatrix aug = augmented_matrix(d, c);

    Certificate cert;
    cert.modulus = p;
    cert.variant = aug.variant;
    cert.merged = merge_columns(aug);
    cert.ell = cert.merged.cols();
    cert.merged_rank_int = rank_int(cert.merged);
    cert.merged_rank_mod_p = rank_mod_p(cert.merged, p);

    const std::size_t k = cert.ell - 1;
    const std::size_t rows = cert.merged.rows();
    bool found = false;
    for (auto cols = first_subset(k); !found;) {
        for (auto sel = first_subset(k); !found;) {
            Integer det = det_int(cert.merged.submatrix(sel, cols));
            if (det != 0) {
                cert.row_indices = sel;
                cert.col_indices = cols;
                cert.det_value = std::move(det);
                found = true;
            }
            if (!next_subset(sel, rows)) break;
        }
        if (!next_subset(cols, cert.ell)) break;
    }
    if (!found) throw std::logic_error("certificate extraction failed");

    const IntMatrix m3 = cert.merged.submatrix(cert.row_indices, cert.col_indices);
    cert.star_rows = check_star(m3);

    const Integer abs_det = abs(cert.det_value);
    const Integer upper = Integer(1) << k;
    auto& v = cert.violations;
    if (cert.merged_rank_int != k) v.push_back("rank_Z M2 = " + std::to_string(cert.merged_rank_int) + ", expected l-1");
    if (cert.merged_rank_mod_p + 2 > cert.ell)
        v.push_back("rank_p M2 = " + std::to_string(cert.merged_rank_mod_p) + ", expected <= l-2");
    if (cert.det_value % p != 0) v.push_back("det M3 = " + cert.det_value.str() + " is not divisible by p");
    if (abs_det < p) v.push_back("|det M3| < p");
    if (abs_det > upper) v.push_back("|det M3| > 2^(l-1)");
    for (std::size_t r = 0; r < cert.star_rows.size(); ++r)
        if (!cert.star_rows[r]) v.push_back("row " + std::to_string(cert.row_indices[r]) + " of M3 violates (star)");
    return cert;
}

StarCampaignResult star_campaign(std::uint64_t first_seed, std::uint64_t samples, std::size_t max_order) {
    if (max_order == 0) throw InvalidArgument("matrix order must be at least 1");
    StarCampaignResult total;
    total.max_abs_det.assign(max_order, 0);
    constexpr std::int64_t kChunk = 1024;
    const auto chunks = static_cast<std::int64_t>((samples + kChunk - 1) / kChunk);
#pragma omp parallel
    {
        StarCampaignResult local;
        local.max_abs_det.assign(max_order, 0);
#pragma omp for schedule(dynamic) nowait
        for (std::int64_t ch = 0; ch < chunks; ++ch) {
            const auto begin = static_cast<std::uint64_t>(ch * kChunk);
            const auto end = std::min<std::uint64_t>(samples, begin + kChunk);
            merge_into(local, campaign_sample_range(first_seed, begin, end, max_order));
        }
#pragma omp critical(knotcol_star_campaign)
        merge_into(total, local);
    }
    return total;
}

StarCampaignResult serial::star_campaign(std::uint64_t first_seed, std::uint64_t samples, std::size_t max_order) {
    if (max_order == 0) throw InvalidArgument("matrix order must be at least 1");
    return campaign_sample_range(first_seed, 0, samples, max_order);
}

}  // namespace knotcol

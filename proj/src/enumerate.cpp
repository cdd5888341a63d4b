#include "knotcol/enumerate.hpp"

#include "knotcol/coloring.hpp"
#include "knotcol/error.hpp"
#include "knotcol/palette.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <set>

namespace knotcol {

namespace {

std::vector<Residue> validated(std::span<const Residue> s, std::int64_t p) {
    require_odd_prime(p);
    if (s.empty()) throw InvalidArgument("empty color set");
    std::vector<Residue> out(s.begin(), s.end());
    for (auto a : out)
        if (a < 0 || a >= p) throw InvalidArgument("color " + std::to_string(a) + " is not a residue mod p");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void image(const std::vector<Residue>& s, Residue mul, Residue add, std::int64_t p, std::vector<Residue>& out) {
    out.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = (s[i] * mul + add) % p;
    std::sort(out.begin(), out.end());
}

// Lex-min over maps sending some ordered pair (a, b) of S to (0, 1). For
// |S| >= 2 the minimal image starts with 0, 1, so it is attained by one of them.
std::vector<Residue> canonical_fast(const std::vector<Residue>& s, std::int64_t p) {
    if (s.size() == 1) return {0};
    std::vector<Residue> best, cur;
    for (auto a : s)
        for (auto b : s) {
            if (a == b) continue;
            const Residue mul = inv_mod_p(reduce_mod(b - a, p), p);
            const Residue add = reduce_mod(-mul * a, p);
            image(s, mul, add, p, cur);
            if (best.empty() || cur < best) best.swap(cur);
        }
    return best;
}

std::vector<Residue> canonical_literal(const std::vector<Residue>& s, std::int64_t p) {
    std::vector<Residue> best, cur;
    for (Residue mul = 1; mul < p; ++mul)
        for (Residue add = 0; add < p; ++add) {
            image(s, mul, add, p, cur);
            if (best.empty() || cur < best) best.swap(cur);
        }
    return best;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// The rank-th k-combination of {0, ..., n-1} in lexicographic order.
std::vector<std::size_t> unrank(std::uint64_t rank, std::size_t n, std::size_t k) {
    std::vector<std::size_t> c;
    std::size_t next = 0;
    for (std::size_t i = 0; i < k; ++i) {
        for (;; ++next) {
            const auto block = binomial(n - next - 1, k - i - 1);
            if (rank < block) break;
            rank -= block;
        }
        c.push_back(next++);
    }
    return c;
}

bool advance(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<CanonicalSet> wrap(const std::set<std::vector<Residue>>& sets, std::int64_t p) {
    std::vector<CanonicalSet> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back({p, s, true});
    return out;
}

void require_size(std::int64_t p, std::size_t k) {
    require_odd_prime(p);
    if (k < 1 || k > static_cast<std::size_t>(p)) throw InvalidArgument("subset size must lie in [1, p]");
}

bool has_witness(const CanonicalSet& s) {
    return connected_r_witness(palette_graph(s.elements, s.modulus)).has_value();
}

const std::map<std::int64_t, std::vector<std::vector<Residue>>>& published_table() {
    static const std::map<std::int64_t, std::vector<std::vector<Residue>>> table = {
        {3, {{0, 1, 2}}},
        {5, {{0, 1, 2, 3}}},
        {7, {{0, 1, 2, 4}}},
        {11, {{0, 1, 2, 3, 6}, {0, 1, 2, 4, 7}}},
        {13, {{0, 1, 2, 4, 7}}},
        {17,
         {{0, 1, 2, 3, 5, 9},
          {0, 1, 2, 3, 5, 10},
          {0, 1, 2, 3, 5, 12},
          {0, 1, 2, 3, 6, 9},
          {0, 1, 2, 3, 6, 10},
          {0, 1, 2, 3, 6, 11},
          {0, 1, 2, 3, 6, 13},
          {0, 1, 2, 3, 7, 11},
          {0, 1, 2, 4, 5, 9},
          {0, 1, 2, 4, 5, 10},
          {0, 1, 2, 4, 5, 12},
          {0, 1, 2, 4, 10, 13}}},
        {19,
         {{0, 1, 2, 3, 5, 10},
          {0, 1, 2, 3, 6, 10},
          {0, 1, 2, 3, 6, 11},
          {0, 1, 2, 3, 6, 12},
          {0, 1, 2, 3, 6, 13},
          {0, 1, 2, 3, 6, 14},
          {0, 1, 2, 3, 7, 12},
          {0, 1, 2, 4, 5, 10},
          {0, 1, 2, 4, 5, 14},
          {0, 1, 2, 4, 7, 12},
          {0, 1, 2, 4, 7, 15}}},
        {23,
         {{0, 1, 2, 3, 6, 12},
          {0, 1, 2, 4, 7, 12},
          {0, 1, 2, 4, 7, 13},
          {0, 1, 2, 4, 7, 14},
          {0, 1, 2, 4, 9, 14},
          {0, 1, 2, 4, 10, 19}}},
        {29, {{0, 1, 2, 4, 8, 15}}},
        {31, {{0, 1, 2, 4, 8, 16}}},
    };
    return table;
}

}  // namespace

CanonicalSet canonical_affine(std::span<const Residue> s, std::int64_t p) {
    return {p, canonical_fast(validated(s, p), p), true};
}

bool affine_equivalent(std::span<const Residue> a, std::span<const Residue> b, std::int64_t p) {
    const auto sa = validated(a, p), sb = validated(b, p);
    return sa.size() == sb.size() && canonical_fast(sa, p) == canonical_fast(sb, p);
}

std::uint64_t orbit_size(std::span<const Residue> s, std::int64_t p) {
    const auto set = validated(s, p);
    std::uint64_t stabilizer = 0;
    std::vector<Residue> cur;
    for (Residue mul = 1; mul < p; ++mul)
        for (Residue add = 0; add < p; ++add) {
            image(set, mul, add, p, cur);
            if (cur == set) ++stabilizer;
        }
    return static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(p - 1) / stabilizer;
}

std::vector<CanonicalSet> enumerate_classes(std::int64_t p, std::size_t k) {
    require_size(p, k);
    if (k == 1) return {{p, {0}, true}};

    // Subsets {0, 1} + T with T a (k-2)-subset of {2, ..., p-1}.
    const std::size_t n = static_cast<std::size_t>(p) - 2, r = k - 2;
    const std::uint64_t total = binomial(n, r);
    const std::uint64_t chunk = 2048;
    const auto chunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);
    std::vector<std::set<std::vector<Residue>>> found(static_cast<std::size_t>(chunks));

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t ci = 0; ci < chunks; ++ci) {
        const std::uint64_t begin = static_cast<std::uint64_t>(ci) * chunk;
        const std::uint64_t end = std::min(total, begin + chunk);
        auto comb = unrank(begin, n, r);
        std::vector<Residue> s(k);
        auto& local = found[static_cast<std::size_t>(ci)];
        for (std::uint64_t rank = begin; rank < end; ++rank) {
            s[0] = 0;
            s[1] = 1;
            for (std::size_t i = 0; i < r; ++i) s[i + 2] = static_cast<Residue>(comb[i]) + 2;
            local.insert(canonical_fast(s, p));
            advance(comb, n);
        }
    }

    std::set<std::vector<Residue>> merged;
    for (auto& f : found) merged.merge(f);
    return wrap(merged, p);
}

std::vector<CanonicalSet> candidates(std::int64_t p, std::size_t k) {
    const auto classes = enumerate_classes(p, k);
    std::vector<char> keep(classes.size(), 0);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(classes.size()); ++i)
        keep[static_cast<std::size_t>(i)] = has_witness(classes[static_cast<std::size_t>(i)]);
    std::vector<CanonicalSet> out;
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (keep[i]) out.push_back(classes[i]);
    return out;
}

std::optional<std::vector<std::vector<Residue>>> published_candidates(std::int64_t p) {
    const auto& table = published_table();
    const auto it = table.find(p);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

std::optional<bool> matches_published(std::int64_t p, std::size_t k, const std::vector<CanonicalSet>& classes) {
    const std::size_t bound = color_lower_bound(p);
    if (k < bound) return classes.empty();
    if (k > bound) return std::nullopt;
    const auto reps = published_candidates(p);
    if (!reps) return std::nullopt;
    std::set<std::vector<Residue>> expected, got;
    for (const auto& r : *reps) expected.insert(canonical_affine(r, p).elements);
    for (const auto& c : classes) got.insert(canonical_affine(c.elements, p).elements);
    return expected == got;
}

bool Theorem62Report::passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const CandidateRow& r) { return r.expected_match.value_or(true); });
}

Theorem62Report theorem62_report(std::int64_t p) {
    require_odd_prime(p);
    Theorem62Report report;
    report.p = p;
    const std::size_t top = std::min<std::size_t>(color_lower_bound(p), static_cast<std::size_t>(p));
    for (std::size_t k = 1; k <= top; ++k) {
        CandidateRow row;
        row.k = k;
        row.classes = candidates(p, k);
        row.expected_match = matches_published(p, k, row.classes);
        report.rows.push_back(std::move(row));
    }
    return report;
}

nlohmann::ordered_json to_json(std::int64_t p, const CandidateRow& row) {
    nlohmann::ordered_json j;
    j["p"] = p;
    j["k"] = row.k;
    j["classes"] = nlohmann::ordered_json::array();
    for (const auto& c : row.classes) j["classes"].push_back(c.elements);
    if (row.expected_match)
        j["expected_match"] = *row.expected_match;
    else
        j["expected_match"] = nullptr;
    return j;
}

namespace serial {

CanonicalSet canonical_affine(std::span<const Residue> s, std::int64_t p) {
    return {p, canonical_literal(validated(s, p), p), true};
}

std::vector<CanonicalSet> enumerate_classes(std::int64_t p, std::size_t k) {
    require_size(p, k);
    const auto n = static_cast<std::size_t>(p);
    std::vector<std::size_t> comb(k);
    for (std::size_t i = 0; i < k; ++i) comb[i] = i;
    std::set<std::vector<Residue>> found;
    std::vector<Residue> s(k);
    do {
        for (std::size_t i = 0; i < k; ++i) s[i] = static_cast<Residue>(comb[i]);
        found.insert(canonical_literal(s, p));
    } while (advance(comb, n));
    return wrap(found, p);
}

std::vector<CanonicalSet> candidates(std::int64_t p, std::size_t k) {
    std::vector<CanonicalSet> out;
    for (const auto& c : enumerate_classes(p, k))
        if (has_witness(c)) out.push_back(c);
    return out;
}

}  // namespace serial

}  // namespace knotcol

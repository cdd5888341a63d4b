#include "knotcol/coloring.hpp"

#include "knotcol/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace knotcol {

namespace {

constexpr std::uint64_t kDefaultBudget = 1'000'000;

std::size_t distinct_count(std::vector<Residue> values) {
    std::sort(values.begin(), values.end());
    return static_cast<std::size_t>(std::unique(values.begin(), values.end()) - values.begin());
}

// p^e, saturating at UINT64_MAX.
std::uint64_t checked_pow(std::int64_t p, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > UINT64_MAX / static_cast<std::uint64_t>(p)) return UINT64_MAX;
        r *= static_cast<std::uint64_t>(p);
    }
    return r;
}

// values = base + sum_i coeff_i * gen_i (mod p), coefficients read from the
// mixed-radix digits of `index` for the generators listed in `free`.
void combine(const std::vector<ModVector>& gens, std::int64_t p, std::span<const std::size_t> free,
             std::uint64_t index, const std::vector<Residue>& base, std::vector<Residue>& out) {
    out = base;
    for (auto g : free) {
        const Residue coeff = static_cast<Residue>(index % static_cast<std::uint64_t>(p));
        index /= static_cast<std::uint64_t>(p);
        if (coeff == 0) continue;
        const auto& v = gens[g].entries;
        for (std::size_t r = 0; r < out.size(); ++r) out[r] = (out[r] + coeff * v[r]) % p;
    }
}

bool trivial_values(const Diagram& d, const std::vector<Residue>& v) {
    for (std::size_t x = 0; x < d.crossing_count(); ++x) {
        const auto& q = d.quadrants(x);
        if (v[q[q12]] != v[q[q34]] || v[q[q23]] != v[q[q41]]) return false;
    }
    return true;
}

struct Best {
    std::size_t count = SIZE_MAX;
    std::vector<Residue> values;

    void offer(std::size_t k, const std::vector<Residue>& v) {
        if (k < count || (k == count && v < values)) {
            count = k;
            values = v;
        }
    }
    void merge(const Best& o) {
        if (o.count != SIZE_MAX) offer(o.count, o.values);
    }
};

// A scan block: `base` plus every combination of the `free` generators.
struct Block {
    std::vector<Residue> base;
    std::vector<std::size_t> free;
};

std::vector<Block> full_blocks(const std::vector<ModVector>& gens, std::size_t regions) {
    Block b{std::vector<Residue>(regions, 0), {}};
    for (std::size_t g = 0; g < gens.size(); ++g) b.free.push_back(g);
    return {b};
}

// Coefficient vectors whose first nonzero entry is 1.
std::vector<Block> projective_blocks(const std::vector<ModVector>& gens, std::size_t regions) {
    std::vector<Block> blocks;
    for (std::size_t lead = 0; lead < gens.size(); ++lead) {
        Block b{gens[lead].entries, {}};
        b.base.resize(regions);
        for (std::size_t g = lead + 1; g < gens.size(); ++g) b.free.push_back(g);
        blocks.push_back(std::move(b));
    }
    return blocks;
}

Best scan_serial(const Diagram& d, const std::vector<ModVector>& gens, std::int64_t p,
                 const std::vector<Block>& blocks) {
    Best best;
    std::vector<Residue> values;
    for (const auto& b : blocks) {
        const std::uint64_t total = checked_pow(p, b.free.size());
        for (std::uint64_t i = 0; i < total; ++i) {
            combine(gens, p, b.free, i, b.base, values);
            if (trivial_values(d, values)) continue;
            best.offer(distinct_count(values), values);
        }
    }
    return best;
}

Best scan_parallel(const Diagram& d, const std::vector<ModVector>& gens, std::int64_t p,
                   const std::vector<Block>& blocks) {
    Best best;
    for (const auto& b : blocks) {
        const auto total = static_cast<std::int64_t>(checked_pow(p, b.free.size()));
#pragma omp parallel
        {
            Best local;
            std::vector<Residue> values;
#pragma omp for schedule(static) nowait
            for (std::int64_t i = 0; i < total; ++i) {
                combine(gens, p, b.free, static_cast<std::uint64_t>(i), b.base, values);
                if (trivial_values(d, values)) continue;
                local.offer(distinct_count(values), values);
            }
#pragma omp critical(knotcol_min_colors)
            best.merge(local);
        }
    }
    return best;
}

MinColors finish(const Best& best, std::int64_t p, std::size_t dim, bool quotient) {
    MinColors out;
    out.lower_bound = color_lower_bound(p);
    out.dimension = dim;
    out.affine_quotient = quotient;
    if (best.count != SIZE_MAX) {
        out.min = best.count;
        out.witness = DehnColoring{p, best.values};
    }
    return out;
}

}  // namespace

const char* to_string(ColoringKind kind) noexcept {
    switch (kind) {
        case ColoringKind::one_trivial: return "one_trivial";
        case ColoringKind::two_trivial: return "two_trivial";
        case ColoringKind::nontrivial: return "nontrivial";
    }
    return "?";
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("KNOTCOL_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultBudget;
}

std::size_t color_lower_bound(std::int64_t p) {
    std::size_t bits = 0;
    while ((std::int64_t{1} << (bits + 1)) <= p) ++bits;
    return bits + 2;
}

IntMatrix coloring_matrix(const Diagram& d) {
    IntMatrix m(d.crossing_count(), d.region_count());
    for (std::size_t c = 0; c < d.crossing_count(); ++c) {
        const auto& q = d.quadrants(c);
        m(c, q[q12]) += 1;
        m(c, q[q23]) += 1;
        m(c, q[q34]) -= 1;
        m(c, q[q41]) -= 1;
    }
    return m;
}

IntMatrix fox_coloring_matrix(const Diagram& d) {
    IntMatrix m(d.crossing_count(), d.arc_count());
    for (std::size_t c = 0; c < d.crossing_count(); ++c) {
        const auto& s = d.crossing_semiarcs(c);
        m(c, d.arc_of(s[0])) += 1;
        m(c, d.arc_of(s[2])) += 1;
        m(c, d.arc_of(s[1])) -= 2;
    }
    return m;
}

IntMatrix alexander_at_minus_one(const Diagram& d) {
    IntMatrix a = coloring_matrix(d);
    std::vector<Integer> unit(d.region_count(), 0);
    unit[0] = 1;
    a.append_row(unit);
    return a;
}

bool is_coloring(const Diagram& d, const DehnColoring& c) {
    if (c.values.size() != d.region_count()) return false;
    const std::int64_t p = c.modulus;
    for (auto v : c.values)
        if (v < 0 || v >= p) return false;
    for (std::size_t x = 0; x < d.crossing_count(); ++x) {
        const auto& q = d.quadrants(x);
        if ((c.values[q[q12]] + c.values[q[q23]] - c.values[q[q34]] - c.values[q[q41]]) % p != 0) return false;
    }
    return true;
}

bool is_trivial(const Diagram& d, const DehnColoring& c) { return trivial_values(d, c.values); }

std::vector<DehnColoring> serial::enumerate_span(const std::vector<ModVector>& basis, std::int64_t p) {
    const std::size_t regions = basis.empty() ? 0 : basis.front().entries.size();
    const auto blocks = full_blocks(basis, regions);
    const std::uint64_t total = checked_pow(p, basis.size());
    std::vector<DehnColoring> out;
    out.reserve(total);
    std::vector<Residue> values;
    for (std::uint64_t i = 0; i < total; ++i) {
        combine(basis, p, blocks[0].free, i, blocks[0].base, values);
        out.push_back({p, values});
    }
    return out;
}

std::vector<DehnColoring> enumerate_span(const std::vector<ModVector>& basis, std::int64_t p) {
    const std::size_t regions = basis.empty() ? 0 : basis.front().entries.size();
    const auto blocks = full_blocks(basis, regions);
    const auto total = static_cast<std::int64_t>(checked_pow(p, basis.size()));
    std::vector<DehnColoring> out(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) {
        auto& slot = out[static_cast<std::size_t>(i)];
        slot.modulus = p;
        combine(basis, p, blocks[0].free, static_cast<std::uint64_t>(i), blocks[0].base, slot.values);
    }
    return out;
}

ColoringSpace colorings(const Diagram& d, std::int64_t p, std::uint64_t budget) {
    require_odd_prime(p);
    ColoringSpace space;
    space.modulus = p;
    space.basis = nullspace_mod_p(coloring_matrix(d), p);
    space.dimension = space.basis.size();
    space.count = pow(Integer(p), static_cast<unsigned>(space.dimension));
    if (space.count <= budget) space.enumerated = enumerate_span(space.basis, p);
    return space;
}

Integer fox_coloring_count(const Diagram& d, std::int64_t p) {
    require_odd_prime(p);
    const IntMatrix f = fox_coloring_matrix(d);
    return pow(Integer(p), static_cast<unsigned>(f.cols() - rank_mod_p(f, p)));
}

ColoringClass classify(const Diagram& d, const DehnColoring& c) {
    require_odd_prime(c.modulus);
    if (!is_coloring(d, c)) throw InvalidArgument("not a coloring");
    ColoringClass out;
    out.colors_used = c.values;
    std::sort(out.colors_used.begin(), out.colors_used.end());
    out.colors_used.erase(std::unique(out.colors_used.begin(), out.colors_used.end()), out.colors_used.end());
    if (out.colors_used.size() == 1)
        out.kind = ColoringKind::one_trivial;
    else if (is_trivial(d, c))
        out.kind = ColoringKind::two_trivial;
    else
        out.kind = ColoringKind::nontrivial;
    return out;
}

DehnColoring affine_transform(const DehnColoring& c, Residue s, Residue t) {
    require_odd_prime(c.modulus);
    const std::int64_t p = c.modulus;
    s = reduce_mod(s, p);
    t = reduce_mod(t, p);
    if (s == 0) throw InvalidArgument("not a regular transformation");
    DehnColoring out{p, c.values};
    for (auto& v : out.values) v = (s * v + t) % p;
    return out;
}

MinColors min_colors_diagram(const Diagram& d, std::int64_t p, std::uint64_t budget) {
    require_odd_prime(p);
    const auto basis = nullspace_mod_p(coloring_matrix(d), p);
    const std::size_t dim = basis.size();
    if (dim <= 2) return finish(Best{}, p, dim, false);

    if (checked_pow(p, dim) <= budget)
        return finish(scan_parallel(d, basis, p, full_blocks(basis, d.region_count())), p, dim, false);

    // Affine quotient: colorings with region 0 colored 0, up to scalars.
    const auto pinned = nullspace_mod_p(alexander_at_minus_one(d), p);
    return finish(scan_parallel(d, pinned, p, projective_blocks(pinned, d.region_count())), p, dim, true);
}

MinColors serial::min_colors_diagram(const Diagram& d, std::int64_t p) {
    require_odd_prime(p);
    const auto basis = nullspace_mod_p(coloring_matrix(d), p);
    return finish(scan_serial(d, basis, p, full_blocks(basis, d.region_count())), p, basis.size(), false);
}

FoxColoring fox_from_dehn(const Diagram& d, const DehnColoring& c) {
    const std::int64_t p = c.modulus;
    FoxColoring fox{p, std::vector<Residue>(d.arc_count(), -1)};
    for (std::size_t s = 0; s < d.semiarc_count(); ++s) {
        const auto [a, b] = d.semiarc_regions(s);
        const Residue sum = (c.values[a] + c.values[b]) % p;
        Residue& slot = fox.values[d.arc_of(s)];
        if (slot < 0)
            slot = sum;
        else if (slot != sum)
            throw std::logic_error("fox_from_dehn: region sum varies along arc " + std::to_string(d.arc_of(s)));
    }
    return fox;
}

Integer knot_determinant(const Diagram& d) {
    Integer det = 1;
    for (const auto& f : smith_invariant_factors(alexander_at_minus_one(d))) det *= f;
    return det;
}

}  // namespace knotcol

#include "knotcol/exactalg.hpp"

#include "knotcol/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace knotcol {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    for (const auto& r : rows) append_row(r);
}

void IntMatrix::append_row(std::span<const Integer> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw InvalidArgument("row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

void IntMatrix::append_row(std::initializer_list<long long> values) {
    std::vector<Integer> row(values.begin(), values.end());
    append_row(row);
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> row_idx,
                               std::span<const std::size_t> col_idx) const {
    IntMatrix out(row_idx.size(), col_idx.size());
    for (std::size_t r = 0; r < row_idx.size(); ++r)
        for (std::size_t c = 0; c < col_idx.size(); ++c)
            out(r, c) = (*this)(row_idx[r], col_idx[c]);
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
        os << ']';
    }
    os << ']';
    return os.str();
}

bool is_odd_prime(std::int64_t p) noexcept {
    if (p < 3 || p % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

void require_odd_prime(std::int64_t p) {
    if (p >= (std::int64_t{1} << 31) || !is_odd_prime(p)) throw InvalidArgument("invalid modulus");
}

Residue reduce_mod(std::int64_t a, std::int64_t p) noexcept {
    const std::int64_t r = a % p;
    return r < 0 ? r + p : r;
}

Residue reduce_mod(const Integer& a, std::int64_t p) {
    Integer r = a % p;
    if (r < 0) r += p;
    return static_cast<Residue>(r);
}

Residue inv_mod_p(Residue a, std::int64_t p) {
    require_odd_prime(p);
    a = reduce_mod(a, p);
    if (a == 0) throw InvalidArgument("not invertible");
    std::int64_t old_r = a, r = p, old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    return reduce_mod(old_s, p);
}

namespace {

using ModRows = std::vector<std::vector<Residue>>;

ModRows reduced_rows(const IntMatrix& m, std::int64_t p) {
    ModRows a(m.rows(), std::vector<Residue>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = reduce_mod(m(r, c), p);
    return a;
}

// In-place reduced row-echelon form; returns the pivot columns.
std::vector<std::size_t> rref_mod(ModRows& a, std::size_t cols, std::int64_t p) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[r], a[piv]);
        const Residue inv = inv_mod_p(a[r][c], p);
        for (auto& v : a[r]) v = v * inv % p;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Residue f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] = reduce_mod(a[i][j] - f * a[r][j], p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank_mod_p(const IntMatrix& m, std::int64_t p) {
    require_odd_prime(p);
    auto a = reduced_rows(m, p);
    return rref_mod(a, m.cols(), p).size();
}

std::size_t rank_int(const IntMatrix& m) {
    IntMatrix a = m;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, c) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            for (std::size_t j = c + 1; j < a.cols(); ++j)
                a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    return r;
}

Integer det_int(const IntMatrix& m) {
    if (!m.square()) throw InvalidArgument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::vector<ModVector> nullspace_mod_p(const IntMatrix& m, std::int64_t p) {
    require_odd_prime(p);
    auto a = reduced_rows(m, p);
    const auto pivots = rref_mod(a, m.cols(), p);

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    ModRows basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Residue> v(m.cols(), 0);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = reduce_mod(-a[r][f], p);
        basis.push_back(std::move(v));
    }
    rref_mod(basis, m.cols(), p);

    std::vector<ModVector> out;
    out.reserve(basis.size());
    for (auto& v : basis) out.push_back({p, std::move(v)});
    return out;
}

std::vector<Integer> smith_invariant_factors(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    const std::size_t n = std::min(rows, cols);
    std::vector<Integer> factors(n, 0);

    auto swap_rows = [&](std::size_t x, std::size_t y) {
        if (x != y)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(x, j), a(y, j));
    };
    auto swap_cols = [&](std::size_t x, std::size_t y) {
        if (x != y)
            for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, x), a(i, y));
    };

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Pivot: smallest nonzero absolute value in the trailing block.
            bool found = false;
            std::size_t pr = t, pc = t;
            Integer best;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (a(i, j) == 0) continue;
                    Integer v = abs(a(i, j));
                    if (!found || v < best) {
                        best = std::move(v);
                        pr = i;
                        pc = j;
                        found = true;
                    }
                }
            if (!found) return factors;
            swap_rows(t, pr);
            swap_cols(t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                const Integer q = a(i, t) / a(t, t);
                for (std::size_t j = t; j < cols; ++j) a(i, j) -= q * a(t, j);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                const Integer q = a(t, j) / a(t, t);
                for (std::size_t i = t; i < rows; ++i) a(i, j) -= q * a(i, t);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Row t is now (a_tt, 0, ..., 0); enforce a_tt | every trailing entry.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        for (std::size_t k = t; k < cols; ++k) a(t, k) += a(i, k);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        factors[t] = abs(a(t, t));
    }
    return factors;
}

}  // namespace knotcol

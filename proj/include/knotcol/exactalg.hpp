#pragma once

// Exact linear algebra over the integers and over Z/pZ.
//
// Everything here is a pure function of its arguments. Integer work uses
// unbounded-precision integers; modular work reduces entries into [0, p)
// before elimination and stays in 64-bit arithmetic (p < 2^31).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace knotcol {

using Integer = boost::multiprecision::cpp_int;
using Residue = std::int64_t;

/// Dense row-major matrix of exact integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    /// Appends a row; its length must equal cols() (or sets cols() when empty).
    void append_row(std::span<const Integer> values);
    void append_row(std::initializer_list<long long> values);

    /// The submatrix on the given row and column indices, in the given order.
    IntMatrix submatrix(std::span<const std::size_t> row_idx,
                        std::span<const std::size_t> col_idx) const;

    IntMatrix transposed() const;

    std::string to_string() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// A vector of residues modulo an odd prime.
struct ModVector {
    std::int64_t modulus = 0;
    std::vector<Residue> entries;

    friend bool operator==(const ModVector&, const ModVector&) = default;
};

bool is_odd_prime(std::int64_t p) noexcept;

/// Throws InvalidArgument("invalid modulus") unless p is an odd prime below 2^31.
void require_odd_prime(std::int64_t p);

/// Canonical representative of a modulo p, in [0, p).
Residue reduce_mod(std::int64_t a, std::int64_t p) noexcept;
Residue reduce_mod(const Integer& a, std::int64_t p);

Residue inv_mod_p(Residue a, std::int64_t p);

std::size_t rank_mod_p(const IntMatrix& m, std::int64_t p);

/// Rank over the rationals (fraction-free elimination).
std::size_t rank_int(const IntMatrix& m);

/// Bareiss determinant. Throws InvalidArgument for non-square input.
Integer det_int(const IntMatrix& m);

/// Basis of { x : m x = 0 mod p }, itself in reduced row-echelon form.
std::vector<ModVector> nullspace_mod_p(const IntMatrix& m, std::int64_t p);

/// Invariant factors d1 | d2 | ... of the Smith normal form; min(rows, cols)
/// values, trailing zeros included.
std::vector<Integer> smith_invariant_factors(const IntMatrix& m);

}  // namespace knotcol

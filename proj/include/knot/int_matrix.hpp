#pragma once

#include "knot/exact_arith.hpp"

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace knot {

/// Dense row-major integer matrix with small (64-bit) entries. Anything
/// that can grow, such as determinants, is computed in Integer.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::span<std::int64_t const> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    IntMatrix transposed() const;
    friend IntMatrix operator+(IntMatrix const& a, IntMatrix const& b);
    friend IntMatrix operator-(IntMatrix const& a, IntMatrix const& b);
    friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
    friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Fraction-free (Bareiss) determinant. Throws on non-square input.
Integer determinant(IntMatrix const& a);

/// det of the leading k x k block for k = 1..n.
std::vector<Integer> leading_principal_minors(IntMatrix const& a);

/// x^T A y
std::int64_t bilinear(IntMatrix const& a, std::span<int const> x, std::span<int const> y);

// Text format shared by Seifert and Gram files: a line holding the size r,
// then r rows of r whitespace-separated integers. Lines starting with '#'
// and blank lines are ignored.
IntMatrix parse_square_matrix(std::string_view text);
IntMatrix read_square_matrix(std::filesystem::path const& path);
std::string format_square_matrix(IntMatrix const& a);

/// Rows of space-separated integers without a size header.
std::string format_rows(IntMatrix const& a);

} // namespace knot

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace c2inv {

// Selects the reference loop or the OpenMP loop for a kernel.
enum class Exec { serial, parallel };

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Dense row-major bit matrix over F_2, one 64-bit word per 64 columns.
class F2Matrix {
  public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols);

    static F2Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return stride_; }

    bool get(std::size_t r, std::size_t c) const
    {
        return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool value = true);
    void flip(std::size_t r, std::size_t c) { data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits); }

    std::span<Word> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
    std::span<const Word> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
    bool row_is_zero(std::size_t r) const;
    // Indices of the set bits of a row, increasing.
    std::vector<std::size_t> row_support(std::size_t r) const;

    // row(dst) ^= row(src), starting at the given word.
    void xor_row(std::size_t dst, std::size_t src, std::size_t first_word = 0);
    void swap_rows(std::size_t a, std::size_t b);

    // [this | rhs]; row counts must agree.
    F2Matrix hstack(const F2Matrix& rhs) const;
    // Columns [first, first + count) as a new matrix.
    F2Matrix columns(std::size_t first, std::size_t count) const;
    F2Matrix transpose() const;

    std::string to_string() const;

    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
};

struct Echelon {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/// Gauss-Jordan elimination in place to reduced row echelon form. Pivots are
/// searched only in columns [0, pivot_limit); the remaining columns ride along
/// (used for tracking row combinations). The reduced form is unique, so the
/// serial and parallel paths produce identical matrices.
Echelon rref(F2Matrix& matrix, Exec exec = Exec::parallel, std::size_t pivot_limit = SIZE_MAX);

std::size_t rank(F2Matrix matrix, Exec exec = Exec::parallel);

// A basis (as rows) of { v : v M = 0 }.
F2Matrix left_kernel(const F2Matrix& matrix, Exec exec = Exec::parallel);

/// Incrementally grown row space kept in semi-echelon form: every basis row
/// has a distinct leading (lowest) column.
class RowSpace {
  public:
    explicit RowSpace(std::size_t cols);

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return basis_.size(); }

    // Reduces against the basis; keeps the remainder if nonzero. Returns true iff the row was independent.
    bool insert(std::vector<Word> row);
    bool insert(std::span<const Word> row) { return insert(std::vector<Word>(row.begin(), row.end())); }
    bool contains(std::span<const Word> row) const;
    // Clears leading bits that hit a pivot; stops at the first leading bit without one.
    void reduce(std::vector<Word>& row) const;

    // Inserts every row of a matrix; returns how many were independent.
    std::size_t insert_all(const F2Matrix& rows);

  private:
    std::size_t cols_;
    std::size_t stride_;
    std::vector<std::vector<Word>> basis_;
    std::vector<std::int64_t> pivot_of_col_;
};

}  // namespace c2inv

#include "c2inv/f2matrix.hpp"

#include <algorithm>
#include <bit>

#include "c2inv/error.hpp"

namespace c2inv {

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0)
{
}

F2Matrix F2Matrix::identity(std::size_t n)
{
    F2Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        out.set(i, i);
    return out;
}

void F2Matrix::set(std::size_t r, std::size_t c, bool value)
{
    Word& w = data_[r * stride_ + c / kWordBits];
    Word bit = Word{1} << (c % kWordBits);
    w = value ? (w | bit) : (w & ~bit);
}

bool F2Matrix::row_is_zero(std::size_t r) const
{
    auto span = row(r);
    return std::all_of(span.begin(), span.end(), [](Word w) { return w == 0; });
}

std::vector<std::size_t> F2Matrix::row_support(std::size_t r) const
{
    std::vector<std::size_t> out;
    auto span = row(r);
    for (std::size_t w = 0; w < stride_; ++w) {
        Word bits = span[w];
        while (bits != 0) {
            out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

void F2Matrix::xor_row(std::size_t dst, std::size_t src, std::size_t first_word)
{
    Word* d = data_.data() + dst * stride_;
    const Word* s = data_.data() + src * stride_;
    for (std::size_t w = first_word; w < stride_; ++w)
        d[w] ^= s[w];
}

void F2Matrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    std::swap_ranges(data_.begin() + a * stride_, data_.begin() + (a + 1) * stride_, data_.begin() + b * stride_);
}

F2Matrix F2Matrix::hstack(const F2Matrix& rhs) const
{
    if (rows_ != rhs.rows_)
        throw PreconditionError("hstack needs equal row counts");
    F2Matrix out(rows_, cols_ + rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c : row_support(r))
            out.set(r, c);
        for (std::size_t c : rhs.row_support(r))
            out.set(r, cols_ + c);
    }
    return out;
}

F2Matrix F2Matrix::columns(std::size_t first, std::size_t count) const
{
    if (first + count > cols_)
        throw PreconditionError("column range out of bounds");
    F2Matrix out(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c : row_support(r))
            if (c >= first && c < first + count)
                out.set(r, c - first);
    return out;
}

F2Matrix F2Matrix::transpose() const
{
    F2Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c : row_support(r))
            out.set(c, r);
    return out;
}

std::string F2Matrix::to_string() const
{
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            out += get(r, c) ? '1' : '0';
        out += '\n';
    }
    return out;
}

Echelon rref(F2Matrix& a, Exec exec, std::size_t pivot_limit)
{
    Echelon result;
    const std::size_t limit = std::min(pivot_limit, a.cols());
    const std::size_t rows = a.rows();
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < limit && pivot_row < rows; ++c) {
        std::size_t found = rows;
        for (std::size_t r = pivot_row; r < rows; ++r) {
            if (a.get(r, c)) {
                found = r;
                break;
            }
        }
        if (found == rows)
            continue;
        a.swap_rows(found, pivot_row);
        const std::size_t first_word = c / kWordBits;
        const auto n = static_cast<std::ptrdiff_t>(rows);
        const auto pr = static_cast<std::ptrdiff_t>(pivot_row);
        if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
            for (std::ptrdiff_t r = 0; r < n; ++r) {
                if (r != pr && a.get(static_cast<std::size_t>(r), c))
                    a.xor_row(static_cast<std::size_t>(r), pivot_row, first_word);
            }
        } else {
            for (std::ptrdiff_t r = 0; r < n; ++r) {
                if (r != pr && a.get(static_cast<std::size_t>(r), c))
                    a.xor_row(static_cast<std::size_t>(r), pivot_row, first_word);
            }
        }
        result.pivot_cols.push_back(c);
        ++pivot_row;
    }
    result.rank = pivot_row;
    return result;
}

std::size_t rank(F2Matrix matrix, Exec exec) { return rref(matrix, exec).rank; }

F2Matrix left_kernel(const F2Matrix& matrix, Exec exec)
{
    F2Matrix augmented = matrix.hstack(F2Matrix::identity(matrix.rows()));
    const auto echelon = rref(augmented, exec, matrix.cols());
    // Rows past the rank have a zero left block; their right block records the combination.
    const std::size_t nullity = matrix.rows() - echelon.rank;
    F2Matrix out(nullity, matrix.rows());
    for (std::size_t k = 0; k < nullity; ++k)
        for (std::size_t c : augmented.row_support(echelon.rank + k))
            out.set(k, c - matrix.cols());
    return out;
}

RowSpace::RowSpace(std::size_t cols) : cols_(cols), stride_(words_for(cols)), pivot_of_col_(cols, -1) {}

void RowSpace::reduce(std::vector<Word>& row) const
{
    if (row.size() != stride_)
        throw PreconditionError("row width does not match the row space");
    // Basis rows vanish below their leading column, so clearing the lowest bit
    // never disturbs lower columns. Stops at the first bit without a pivot.
    for (std::size_t w = 0; w < stride_; ++w) {
        while (row[w] != 0) {
            std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(row[w]));
            std::int64_t p = pivot_of_col_[c];
            if (p < 0)
                return;
            const auto& b = basis_[static_cast<std::size_t>(p)];
            for (std::size_t k = w; k < stride_; ++k)
                row[k] ^= b[k];
        }
    }
}

bool RowSpace::insert(std::vector<Word> row)
{
    reduce(row);
    for (std::size_t w = 0; w < stride_; ++w) {
        if (row[w] != 0) {
            std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(row[w]));
            pivot_of_col_[c] = static_cast<std::int64_t>(basis_.size());
            basis_.push_back(std::move(row));
            return true;
        }
    }
    return false;
}

bool RowSpace::contains(std::span<const Word> row) const
{
    std::vector<Word> copy(row.begin(), row.end());
    reduce(copy);
    return std::all_of(copy.begin(), copy.end(), [](Word w) { return w == 0; });
}

std::size_t RowSpace::insert_all(const F2Matrix& rows)
{
    if (rows.cols() != cols_)
        throw PreconditionError("matrix width does not match the row space");
    std::size_t added = 0;
    for (std::size_t r = 0; r < rows.rows(); ++r)
        added += insert(rows.row(r)) ? 1 : 0;
    return added;
}

}  // namespace c2inv

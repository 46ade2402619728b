#pragma once

// Exact sparse integer matrices and Smith normal form.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bredon {

using Int = boost::multiprecision::cpp_int;

/// Sparse integer matrix stored row-wise. Rows keep their entries sorted by
/// column and never hold an explicit zero.
class IntMatrix {
public:
    struct Entry {
        std::uint32_t col;
        Int value;
    };
    using Row = std::vector<Entry>;

    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);

    static IntMatrix from_dense(const std::vector<std::vector<Int>>& dense);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nonzeros() const;
    bool is_zero() const { return nonzeros() == 0; }

    /// Adds `value` to entry (r, c); an entry that cancels to zero is erased.
    void add(std::size_t r, std::size_t c, const Int& value);
    void set(std::size_t r, std::size_t c, const Int& value);
    Int at(std::size_t r, std::size_t c) const;

    const Row& row(std::size_t r) const { return data_.at(r); }

    std::vector<std::vector<Int>> to_dense() const;
    IntMatrix transposed() const;

    /// Matrix-vector product; `x` must have cols() entries.
    std::vector<Int> apply(const std::vector<Int>& x) const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Row> data_;
};

/// Invariant factors d1 | d2 | ... | dr of a matrix; r is its rank.
struct SmithForm {
    std::vector<Int> invariant_factors;

    std::size_t rank() const { return invariant_factors.size(); }
    /// Factors strictly greater than one.
    std::vector<Int> torsion() const;
};

/// Smith normal form of a sparse matrix.
///
/// Pivoting rule: an entry of minimal absolute value is always chosen. Unit
/// pivots are taken column by column (lowest column first, then the shortest
/// row holding a unit in that column) and eliminated sparsely; whatever is
/// left once no unit entry remains is reduced densely, taking the first
/// entry of minimal absolute value in row-major order as the pivot.
SmithForm smith_normal_form(const IntMatrix& a);

/// Dense Smith normal form with the unimodular transforms tracked:
/// left * a * right == diagonal.
struct SmithDecomposition {
    std::vector<std::vector<Int>> left;      // rows x rows
    std::vector<std::vector<Int>> right;     // cols x cols
    std::vector<std::vector<Int>> diagonal;  // rows x cols
    SmithForm form;
};

SmithDecomposition smith_decomposition(const std::vector<std::vector<Int>>& a);

/// Dense matrix product helper used by tests and the transform checks.
std::vector<std::vector<Int>> multiply(const std::vector<std::vector<Int>>& a,
                                       const std::vector<std::vector<Int>>& b);

std::string to_string(const Int& v);

}  // namespace bredon

#pragma once

// Exact integer and rational linear algebra. Everything here is GMP-backed;
// no floating point is used anywhere in the library.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toricmori {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Dense row-major matrix.
template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Builds a matrix whose rows are the given vectors. `cols` is needed
    /// when `rows` is empty.
    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        return m;
    }

    /// Builds a matrix whose columns are the given vectors.
    static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows) {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<T> row_vector(std::size_t r) const {
        auto s = row(r);
        return {s.begin(), s.end()};
    }
    std::vector<T> column_vector(std::size_t c) const {
        std::vector<T> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

// ---------------------------------------------------------------------------
// scalars and vectors

/// Parses "p", "p/q" or "-p/q". Throws InputError on anything else or on a
/// zero denominator.
Rational parse_rational(std::string_view text);
/// Canonical "p/q" form; integers are printed without a denominator.
std::string format_rational(const Rational& q);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

/// gcd of the absolute values; 0 for the zero vector.
Integer gcd_of(std::span<const Integer> v);

/// v / gcd(v). Throws PreconditionError for the zero vector.
IntVector primitive(std::span<const Integer> v);
/// Clears denominators then divides by the gcd; the direction is preserved.
IntVector primitive(std::span<const Rational> v);

bool is_zero(std::span<const Integer> v);
bool is_zero(std::span<const Rational> v);

RatVector to_rational(std::span<const Integer> v);
/// Requires every entry to be integral.
IntVector to_integer(std::span<const Rational> v);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Rational dot(std::span<const Rational> a, std::span<const Integer> b);

IntVector mat_vec(const IntMatrix& m, std::span<const Integer> v);
RatVector mat_vec(const RatMatrix& m, std::span<const Rational> v);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
RatMatrix to_rational(const IntMatrix& m);

/// Lexicographic comparison on equal-length vectors.
bool lex_less(std::span<const Integer> a, std::span<const Integer> b);

// ---------------------------------------------------------------------------
// rational linear algebra

struct RowEchelon {
    RatMatrix reduced;                // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(RatMatrix m);
std::size_t rank(const RatMatrix& m);
std::size_t rank(const std::vector<IntVector>& vectors, std::size_t dim);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<RatVector> nullspace(const RatMatrix& m);
/// Some solution of m x = b (free variables set to zero), if one exists.
std::optional<RatVector> solve(const RatMatrix& m, std::span<const Rational> b);
Rational determinant(RatMatrix m);

// ---------------------------------------------------------------------------
// integer lattices

/// U * A = H with U unimodular and H in row echelon form with positive
/// pivots. `rank` is the number of nonzero rows of H.
struct IntegerEchelon {
    IntMatrix transform;
    IntMatrix echelon;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

IntegerEchelon hermite_rows(const IntMatrix& a);

/// Lattice basis of {x in Z^n : A x = 0}; empty when the kernel is trivial.
std::vector<IntVector> integer_kernel(const IntMatrix& a);

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form.
std::vector<Integer> smith_invariants(const IntMatrix& a);

/// Rows of an integer matrix Q with ker Q = span(generators) ∩ Z^dim and
/// Q surjective onto Z^(dim - rank): the projection N -> N / N_span.
IntMatrix quotient_map(const std::vector<IntVector>& generators, std::size_t dim);

/// Lattice basis of span(generators) ∩ Z^dim.
std::vector<IntVector> saturated_basis(const std::vector<IntVector>& generators, std::size_t dim);

}  // namespace toricmori

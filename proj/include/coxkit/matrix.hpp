#pragma once

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxkit/rational.hpp"

namespace coxkit {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotNilpotentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense matrix over exact rationals. Immutable in spirit: operations return
/// fresh values, nothing is computed in floating point.
///
/// Operator matrices in this project follow the row convention: row i holds
/// the image of the i-th basis element. Jordan data is insensitive to the
/// choice; printed matrices rely on it.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix jordan_block(const Rational& eigenvalue, std::size_t size);
    static RationalMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
    static RationalMatrix from_int_rows(const std::vector<std::vector<long long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    RationalMatrix transpose() const;

    RationalMatrix operator+(const RationalMatrix& other) const;
    RationalMatrix operator-(const RationalMatrix& other) const;
    RationalMatrix operator*(const RationalMatrix& other) const;
    RationalMatrix operator*(const Rational& scalar) const;
    bool operator==(const RationalMatrix& other) const = default;

    /// k-th power by repeated multiplication; requires a square matrix.
    RationalMatrix pow(std::size_t k) const;

    /// Exact rank over Q via fraction-free Bareiss elimination on the
    /// denominator-cleared integer matrix.
    std::size_t rank() const;

    /// Exact determinant (square matrices).
    Rational determinant() const;

    /// Exact inverse via Gauss-Jordan; nullopt when singular.
    std::optional<RationalMatrix> inverse() const;

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

/// Kronecker product: block (i,j) of the result is a[i][j] * b.
RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b);

/// Exact rank of an integer grid by fraction-free elimination.
/// The grid is consumed as the elimination workspace.
std::size_t integer_rank(std::vector<std::vector<BigInt>> grid);

/// Least k >= 1 with n^k = 0, or nullopt when n is not nilpotent.
std::optional<std::size_t> nilpotency_index(const RationalMatrix& n);

/// Truncated exponential sum_{i<dim} n^i / i! of a nilpotent matrix.
/// Throws NotNilpotentError when n^dim != 0.
RationalMatrix exp_nilpotent(const RationalMatrix& n);

}  // namespace coxkit

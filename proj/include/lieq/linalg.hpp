#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lieq/scalar.hpp"

namespace lieq {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t k);
bool is_zero(std::span<const Scalar> v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
/// a += s * b
void axpy(Vector& a, const Scalar& s, std::span<const Scalar> b);

/// Dense row-major matrix over Q(i).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vector row_vector(std::size_t r) const;

    Matrix transpose() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& x);
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Reduced row echelon form. Pivots are always taken in the leftmost
/// available column and every pivot is normalised to 1, so the result is
/// unique for a given row space.
struct Echelon {
    Matrix reduced;                  // only the rank() nonzero rows are kept
    std::vector<std::size_t> pivots; // pivot column of each row

    std::size_t rank() const { return pivots.size(); }
    /// Subtracts pivot-row multiples so the result vanishes on pivot columns.
    Vector reduce(Vector v) const;
    bool contains(const Vector& v) const { return is_zero(reduce(v)); }
};

Echelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}; one vector per free column with that entry 1.
std::vector<Vector> nullspace(const Matrix& m);

Scalar determinant(const Matrix& m);
/// Empty when the matrix is singular or not square.
std::optional<Matrix> inverse(const Matrix& m);

struct LinearSolution {
    Vector particular;              // free variables set to zero
    std::vector<Vector> homogeneous; // nullspace basis
};

/// Solves m x = b exactly; empty when the system is inconsistent.
std::optional<LinearSolution> solve(const Matrix& m, const Vector& b);

} // namespace lieq

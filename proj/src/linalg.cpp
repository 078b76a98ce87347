#include "lieq/linalg.hpp"

#include <cassert>

#include "lieq/errors.hpp"

namespace lieq {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t k) {
    Vector v(n);
    v.at(k) = Scalar(1);
    return v;
}

bool is_zero(std::span<const Scalar> v) {
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Vector operator+(const Vector& a, const Vector& b) {
    if (a.size() != b.size())
        throw InvalidArgument("vector length mismatch");
    Vector out(a);
    for (std::size_t k = 0; k < b.size(); ++k)
        out[k] += b[k];
    return out;
}

Vector operator-(const Vector& a, const Vector& b) {
    if (a.size() != b.size())
        throw InvalidArgument("vector length mismatch");
    Vector out(a);
    for (std::size_t k = 0; k < b.size(); ++k)
        out[k] -= b[k];
    return out;
}

Vector operator*(const Scalar& s, const Vector& v) {
    Vector out(v.size());
    if (s.is_zero())
        return out;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero())
            out[k] = s * v[k];
    return out;
}

void axpy(Vector& a, const Scalar& s, std::span<const Scalar> b) {
    if (a.size() != b.size())
        throw InvalidArgument("vector length mismatch");
    if (s.is_zero())
        return;
    for (std::size_t k = 0; k < b.size(); ++k)
        if (!b[k].is_zero())
            a[k] += s * b[k];
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k)
        m(k, k) = Scalar(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw InvalidArgument("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

Vector Matrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return Vector(s.begin(), s.end());
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw InvalidArgument("matrix dimension mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& x = a(r, k);
            if (x.is_zero())
                continue;
            for (std::size_t c = 0; c < b.cols(); ++c)
                if (!b(k, c).is_zero())
                    out(r, c) += x * b(k, c);
        }
    return out;
}

Vector operator*(const Matrix& a, const Vector& x) {
    if (a.cols() != x.size())
        throw InvalidArgument("matrix/vector dimension mismatch");
    Vector out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (!a(r, c).is_zero() && !x[c].is_zero())
                out[r] += a(r, c) * x[c];
    return out;
}

Vector Echelon::reduce(Vector v) const {
    if (v.size() != reduced.cols())
        throw InvalidArgument("vector length mismatch");
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const Scalar factor = v[pivots[r]];
        if (!factor.is_zero())
            axpy(v, -factor, reduced.row(r));
    }
    return v;
}

Echelon row_reduce(const Matrix& input) {
    Matrix m = input;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols && next < rows; ++c) {
        std::size_t p = next;
        while (p < rows && m(p, c).is_zero())
            ++p;
        if (p == rows)
            continue;
        if (p != next)
            for (std::size_t k = 0; k < cols; ++k)
                std::swap(m(p, k), m(next, k));
        const Scalar inv = m(next, c).inverse();
        for (std::size_t k = c; k < cols; ++k)
            if (!m(next, k).is_zero())
                m(next, k) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == next || m(r, c).is_zero())
                continue;
            const Scalar factor = m(r, c);
            for (std::size_t k = c; k < cols; ++k)
                if (!m(next, k).is_zero())
                    m(r, k) -= factor * m(next, k);
        }
        pivots.push_back(c);
        ++next;
    }
    Echelon e;
    e.reduced = Matrix(pivots.size(), cols);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t k = 0; k < cols; ++k)
            e.reduced(r, k) = m(r, k);
    e.pivots = std::move(pivots);
    return e;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

std::vector<Vector> nullspace(const Matrix& m) {
    const Echelon e = row_reduce(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        Vector v(cols);
        v[f] = Scalar(1);
        for (std::size_t r = 0; r < e.rank(); ++r)
            v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Scalar determinant(const Matrix& input) {
    if (!input.is_square())
        throw InvalidArgument("determinant of non-square matrix");
    Matrix m = input;
    const std::size_t n = m.rows();
    Scalar det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero())
            ++p;
        if (p == n)
            return Scalar(0);
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k)
                std::swap(m(p, k), m(c, k));
            det = -det;
        }
        det *= m(c, c);
        const Scalar inv = m(c, c).inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero())
                continue;
            const Scalar factor = m(r, c) * inv;
            for (std::size_t k = c; k < n; ++k)
                m(r, k) -= factor * m(c, k);
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square())
        return std::nullopt;
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = Scalar(1);
    }
    const Echelon e = row_reduce(aug);
    if (e.rank() < n || e.pivots[n - 1] != n - 1)
        return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = e.reduced(r, n + c);
    return inv;
}

std::optional<LinearSolution> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows())
        throw InvalidArgument("right-hand side length mismatch");
    const std::size_t cols = m.cols();
    Matrix aug(m.rows(), cols + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < cols; ++c)
            aug(r, c) = m(r, c);
        aug(r, cols) = b[r];
    }
    const Echelon e = row_reduce(aug);
    if (!e.pivots.empty() && e.pivots.back() == cols)
        return std::nullopt;
    LinearSolution s;
    s.particular = Vector(cols);
    for (std::size_t r = 0; r < e.rank(); ++r)
        s.particular[e.pivots[r]] = e.reduced(r, cols);
    s.homogeneous = nullspace(m);
    return s;
}

} // namespace lieq

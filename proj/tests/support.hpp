#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lieq/algebra.hpp"
#include "lieq/linalg.hpp"

namespace lieq_test {

using lieq::GaussianRational;
using lieq::Matrix;
using lieq::Rational;
using lieq::Scalar;
using lieq::Vector;

inline const Scalar I = Scalar::i();

class Gen {
public:
    explicit Gen(std::uint32_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational(long span = 9) {
        const long num = integer(-span, span);
        const long den = integer(1, span);
        return {num, den};
    }

    Rational nonzero_rational(long span = 9) {
        for (;;) {
            auto r = rational(span);
            if (!r.is_zero())
                return r;
        }
    }

    Scalar scalar(long span = 9) { return {rational(span), rational(span)}; }

    Scalar nonzero_scalar(long span = 9) {
        for (;;) {
            auto z = scalar(span);
            if (!z.is_zero())
                return z;
        }
    }

    Matrix rational_matrix(std::size_t rows, std::size_t cols, long span = 5) {
        Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                m(r, c) = Scalar(rational(span));
        return m;
    }

    Matrix invertible_matrix(std::size_t n, long span = 5) {
        for (;;) {
            auto m = rational_matrix(n, n, span);
            if (!lieq::determinant(m).is_zero())
                return m;
        }
    }

    Vector vector(std::size_t n, long span = 9) {
        Vector v(n);
        for (auto& x : v)
            x = scalar(span);
        return v;
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

// Test-only oracles. They deliberately avoid the library's own row reduction
// and Jacobi loop.

// Full C_ij^k table with both index orders filled from the stored pairs.
inline std::vector<std::vector<Vector>> full_table(const lieq::LieAlgebra& g) {
    const std::size_t n = g.dim();
    std::vector<std::vector<Vector>> c(n, std::vector<Vector>(n, Vector(n)));
    for (const auto& [key, v] : g.tensor().entries()) {
        for (std::size_t k = 0; k < n; ++k) {
            c[key.first][key.second][k] = v[k];
            c[key.second][key.first][k] = -v[k];
        }
    }
    return c;
}

// Sum over all ordered (i, j, k) of the Jacobi residual components.
// Returns true iff every residual vanishes.
inline bool brute_force_jacobi(const lieq::LieAlgebra& g) {
    const auto c = full_table(g);
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t m = 0; m < n; ++m) {
                    Scalar s;
                    for (std::size_t l = 0; l < n; ++l)
                        s += c[i][j][l] * c[l][k][m] + c[j][k][l] * c[l][i][m] + c[k][i][l] * c[l][j][m];
                    if (!s.is_zero())
                        return false;
                }
    return true;
}

// Rank over Q(i) computed as half the rank of the 2r x 2c real matrix
// [[Re, -Im], [Im, Re]], eliminated with raw mpq_class.
inline std::size_t realified_rank(const Matrix& m) {
    const std::size_t rows = 2 * m.rows();
    const std::size_t cols = 2 * m.cols();
    std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& re = m(r, c).re().raw();
            const auto& im = m(r, c).im().raw();
            a[r][c] = re;
            a[r][c + m.cols()] = -im;
            a[r + m.rows()][c] = im;
            a[r + m.rows()][c + m.cols()] = re;
        }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && a[p][col] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col] == 0)
                continue;
            const mpq_class f = a[r][col] / a[rank][col];
            for (std::size_t c = col; c < cols; ++c)
                a[r][c] -= f * a[rank][c];
        }
        ++rank;
    }
    return rank / 2;
}

inline Vector vec(std::initializer_list<Scalar> xs) { return Vector(xs); }

// Coefficient vector of `coef * generator` inside algebra g.
inline Vector term(const lieq::LieAlgebra& g, const std::string& name, const Scalar& coef) {
    Vector v(g.dim());
    v[g.index_of(name)] = coef;
    return v;
}

inline Vector bracket_of(const lieq::LieAlgebra& g, const std::string& a, const std::string& b) {
    return g.tensor().get(g.index_of(a), g.index_of(b));
}

} // namespace lieq_test

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lieq/algebra.hpp"

namespace lieq {

/// Pairs (i, j), i < j, in lexicographic order; the coordinate order of the
/// space of antisymmetric forms.
std::vector<std::pair<std::size_t, std::size_t>> form_pairs(std::size_t n);
std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j);

/// Antisymmetric bilinear form Xi(X_i, X_j) on an n-dimensional algebra.
class Cocycle {
public:
    Cocycle() = default;
    explicit Cocycle(std::size_t n) : n_(n), values_(n * (n - 1) / 2) {}
    /// Throws InvalidArgument unless m is square, antisymmetric, zero on the
    /// diagonal.
    static Cocycle from_matrix(const Matrix& m);
    /// Coordinates over form_pairs(n).
    static Cocycle from_pairs(std::size_t n, Vector values);

    std::size_t dim() const { return n_; }
    Scalar get(std::size_t i, std::size_t j) const;
    /// Sets Xi(X_i, X_j) = s and Xi(X_j, X_i) = -s. Throws on i == j.
    void set(std::size_t i, std::size_t j, const Scalar& s);
    /// Xi(x, X_k) for an arbitrary coefficient vector x.
    Scalar evaluate(const Vector& x, std::size_t k) const;

    const Vector& pair_values() const { return values_; }
    Matrix matrix() const;
    bool is_zero() const { return lieq::is_zero(values_); }

    friend bool operator==(const Cocycle&, const Cocycle&) = default;

private:
    std::size_t n_ = 0;
    Vector values_;
};

/// Coefficients Lambda(X_k).
using LinearForm = Vector;

struct CocycleResidual {
    IndexTriple triple;
    Scalar value; // dXi(X_i, X_j, X_k)
};

/// dXi on every i < j < k; empty means Xi is a cocycle.
std::vector<CocycleResidual> cocycle_condition(const LieAlgebra& algebra, const Cocycle& xi);

/// Xi(X_i, X_j) = Lambda([X_i, X_j]).
Cocycle coboundary_from(const LieAlgebra& algebra, const LinearForm& lambda);

/// Rows = triples i < j < k, columns = form_pairs; its kernel is Z^2.
Matrix cocycle_operator(const LieAlgebra& algebra);
/// Rows = generators c, row c = the coboundary of the dual form e_c; its row
/// space is B^2.
Matrix coboundary_operator(const LieAlgebra& algebra);

/// Lambda(X_g) = sum_p terms[p] * Xi(pair p), the shift of generator g that
/// removes the coboundary part of a cocycle.
struct GeneratorShift {
    std::size_t generator;
    std::vector<std::pair<std::size_t, Scalar>> terms; // (pair index, coefficient)
};

struct CohomologyReport {
    std::size_t dim_Z2 = 0;
    std::size_t dim_B2 = 0;
    std::size_t dim_H2 = 0;
    std::vector<Cocycle> residual_basis;
    std::vector<GeneratorShift> elimination;
};

CohomologyReport h2(const LieAlgebra& algebra);

struct Elimination {
    LinearForm shift;
    Cocycle residual;
};

/// Splits Xi = Lambda([.,.]) + residual with the residual reduced against the
/// echelon basis of B^2. Throws NotACocycle when Xi fails the cocycle
/// condition.
Elimination eliminate_charges(const LieAlgebra& algebra, const Cocycle& xi);

/// sum_p terms[p] * Xi(pair p) = 0
struct ExponentRelation {
    std::vector<std::pair<std::size_t, Scalar>> terms;
};

/// Row-reduced cocycle constraints.
std::vector<ExponentRelation> exponent_relations(const LieAlgebra& algebra);

/// "Xi(T1,J3) + Xi(T2,K3) = 0"
std::string to_string(const LieAlgebra& algebra, const ExponentRelation& relation);

/// Pairs that appear in no exponent relation.
std::vector<std::size_t> unconstrained_pairs(const LieAlgebra& algebra);

struct RSetReport {
    /// Echelon basis of span{[X_b, X_j]} for every generator b.
    std::vector<std::vector<Vector>> per_generator;
    /// Generators outside the derived subalgebra, ascending.
    std::vector<std::size_t> flagged;
};

RSetReport r_sets(const LieAlgebra& algebra);

/// i when every structure constant is purely imaginary, 1 otherwise; cocycle
/// entries are printed as charges C = Xi / factor.
Scalar charge_factor(const LieAlgebra& algebra);

} // namespace lieq

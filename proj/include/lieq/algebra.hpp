#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lieq/errors.hpp"
#include "lieq/linalg.hpp"

namespace lieq {

/// Structure constants C_ij^k of an n-dimensional algebra.
///
/// Only pairs i < j are stored, so antisymmetry holds by construction:
/// get(j, i) is the negation of get(i, j) and get(i, i) is zero. Zero
/// vectors are never stored, which keeps equality structural.
class StructureTensor {
public:
    StructureTensor() = default;
    explicit StructureTensor(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }

    /// Coefficient vector of [X_i, X_j].
    Vector get(std::size_t i, std::size_t j) const;
    /// Single constant C_ij^k.
    Scalar at(std::size_t i, std::size_t j, std::size_t k) const;

    /// Sets [X_i, X_j] = value (and implicitly [X_j, X_i] = -value).
    /// Throws InvalidArgument for i == j or a wrongly sized vector.
    void set(std::size_t i, std::size_t j, Vector value);

    /// Nonzero entries keyed by (i, j) with i < j, in lexicographic order.
    const std::map<std::pair<std::size_t, std::size_t>, Vector>& entries() const { return entries_; }

    bool is_abelian() const { return entries_.empty(); }

    friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

private:
    std::size_t dim_ = 0;
    std::map<std::pair<std::size_t, std::size_t>, Vector> entries_;
};

struct JacobiViolation {
    IndexTriple triple; // i < j < k
    Vector residual;    // [[X_i,X_j],X_k] + cyclic
};

struct JacobiReport {
    bool passed = true;
    std::vector<JacobiViolation> violations;
};

/// A finite-dimensional Lie algebra given by a named basis and its
/// structure constants.
class LieAlgebra {
public:
    LieAlgebra() = default;
    /// Throws InvalidArgument when names are empty, duplicated, or do not
    /// match the tensor dimension. The result is not yet Jacobi-verified.
    LieAlgebra(std::string name, std::vector<std::string> generators, StructureTensor tensor);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& generators() const { return generators_; }
    const std::string& generator(std::size_t k) const { return generators_.at(k); }
    std::size_t dim() const { return generators_.size(); }
    const StructureTensor& tensor() const { return tensor_; }
    bool jacobi_verified() const { return jacobi_verified_; }

    /// Index of a generator label; throws InvalidArgument when absent.
    std::size_t index_of(const std::string& generator) const;
    bool has_generator(const std::string& generator) const;

    LieAlgebra renamed(std::string name) const;

    /// Same generator labels and bit-identical structure constants. The
    /// display name and the verification flag are not compared.
    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.generators_ == b.generators_ && a.tensor_ == b.tensor_;
    }

private:
    friend LieAlgebra verified(LieAlgebra algebra);
    friend JacobiReport check_jacobi(const LieAlgebra& algebra);

    std::string name_;
    std::vector<std::string> generators_;
    StructureTensor tensor_;
    bool jacobi_verified_ = false;
};

/// Element sum_k a^k X_k bound to a specific algebra instance. The algebra
/// must outlive the element.
class AlgebraElement {
public:
    AlgebraElement(const LieAlgebra& algebra, Vector coefficients);
    static AlgebraElement basis(const LieAlgebra& algebra, std::size_t k);
    static AlgebraElement zero(const LieAlgebra& algebra);

    const LieAlgebra& algebra() const { return *algebra_; }
    const Vector& coefficients() const { return coefficients_; }
    bool is_zero() const { return lieq::is_zero(coefficients_); }

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    friend AlgebraElement operator*(const Scalar& s, const AlgebraElement& x);
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.algebra_ == b.algebra_ && a.coefficients_ == b.coefficients_;
    }

    /// e.g. `i*T1 - 2*J3`; `0` for the zero element.
    std::string to_string() const;

private:
    const LieAlgebra* algebra_;
    Vector coefficients_;
};

/// Linear map Y_i = U_i^j X_j stored as a dense matrix (row i = image of Y_i).
using LinearMap = Matrix;

/// Bracket of two coefficient vectors through a structure tensor.
Vector bracket(const StructureTensor& tensor, const Vector& x, const Vector& y);

/// [x, y]; throws AlgebraMismatch when the elements belong to different
/// algebras.
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

/// Checks [[X_i,X_j],X_k] + [[X_j,X_k],X_i] + [[X_k,X_i],X_j] = 0 over every
/// i < j < k.
JacobiReport check_jacobi(const LieAlgebra& algebra);

/// Runs check_jacobi and returns the algebra with the verification flag set
/// when it passed (unchanged flag otherwise).
LieAlgebra verified(LieAlgebra algebra);

/// Structure constants in the basis Y_i = U_i^j X_j:
/// C'_ij^k = U_i^a U_j^b C_ab^c (U^-1)_c^k. Throws SingularMap for a
/// singular map and InvalidArgument for a shape mismatch. The Jacobi status
/// is re-verified on the result.
LieAlgebra transform_basis(const LieAlgebra& algebra, const LinearMap& map,
                           std::vector<std::string> new_generators = {});

/// Permutation map placing generator order[k] at position k.
LinearMap permutation_map(std::size_t dim, const std::vector<std::size_t>& order);

/// Echelonized basis of span{[X_i, X_j]}.
std::vector<AlgebraElement> derived_subalgebra(const LieAlgebra& algebra);

/// Echelon form of the bracket vectors, shared by derived_subalgebra and the
/// R-set analysis.
Echelon derived_echelon(const LieAlgebra& algebra);

} // namespace lieq

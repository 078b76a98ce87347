#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "lieq/algebra.hpp"

namespace lieq {

/// Truncated Laurent series sum_p eps^p c_p with vector coefficients.
///
/// Terms above max_power() are discarded; every coefficient of a power
/// <= max_power() is exact. Zero coefficients are never stored.
class EpsilonSeries {
public:
    EpsilonSeries(std::size_t length, int max_power) : length_(length), max_power_(max_power) {}

    std::size_t length() const { return length_; }
    int max_power() const { return max_power_; }
    const std::map<int, Vector>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Lowest power with a nonzero coefficient.
    std::optional<int> lowest_power() const;
    /// Coefficient of eps^power (zero vector when absent).
    Vector coefficient(int power) const;

    /// this += s * eps^power * v
    void add(int power, const Scalar& s, const Vector& v);
    EpsilonSeries& operator+=(const EpsilonSeries& o);

private:
    std::size_t length_;
    int max_power_;
    std::map<int, Vector> terms_;
};

/// Normal-form split: the first r generators form the retained sector, the
/// remaining n - r are scaled by eps. `v` is the optional r x r block.
struct SectorSplit {
    std::size_t r = 0;
    std::optional<Matrix> v;

    /// Throws InvalidArgument unless 0 < r < n and v (if present) is r x r.
    void validate(std::size_t n) const;
};

struct ContractionReport {
    LieAlgebra contracted;
    std::vector<IndexTriple> condition_residuals; // empty on success
    /// Set by the symbolic route: whether it matched the formula route.
    std::optional<bool> route_agreement;
};

/// Every (mu, nu, lambda) with mu < nu in the first sector, lambda in the
/// second and C_{mu nu}^lambda != 0. Empty means contractible.
std::vector<IndexTriple> check_contractible(const LieAlgebra& algebra, const SectorSplit& split);

/// Contracted constants from the closed-form limit rules. Throws
/// NotContractible carrying the violating triples.
ContractionReport contract_formula(const LieAlgebra& algebra, const SectorSplit& split);

/// Builds Y_1 = X_1 + eps v X_1, Y_2 = eps X_2, expands every [Y_a, Y_b] as a
/// Laurent series in the Y basis and keeps the eps^0 coefficient. Throws
/// NotContractible when a negative power survives; fills route_agreement by
/// comparing with contract_formula.
ContractionReport contract_symbolic(const LieAlgebra& algebra, const SectorSplit& split);

/// [Y_a, Y_b] as a Laurent series in the Y basis (exact through eps^1).
EpsilonSeries contracted_bracket_series(const LieAlgebra& algebra, const SectorSplit& split,
                                        std::size_t a, std::size_t b);

struct IdealReport {
    bool ideal = false;   // [X_k, span(subset)] stays inside span(subset) for every k
    bool abelian = false; // brackets inside the subset vanish
};

/// Throws InvalidArgument for out-of-range or repeated indices.
IdealReport verify_ideal(const LieAlgebra& algebra, const std::vector<std::size_t>& subset);

/// Quotient by the span of `ideal_subset`, in the basis of the remaining
/// generators (original order). Throws NotAnIdeal when the subset is not an
/// ideal.
LieAlgebra quotient_algebra(const LieAlgebra& algebra, const std::vector<std::size_t>& ideal_subset);

} // namespace lieq

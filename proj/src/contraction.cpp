#include "lieq/contraction.hpp"

#include <algorithm>
#include <set>

namespace lieq {

namespace {

// Exactness horizon of the symbolic route. The eps^0 coefficient only needs
// powers up to 0, one extra order is kept so truncation never touches it.
constexpr int kSeriesOrder = 1;

} // namespace

std::optional<int> EpsilonSeries::lowest_power() const {
    if (terms_.empty())
        return std::nullopt;
    return terms_.begin()->first;
}

Vector EpsilonSeries::coefficient(int power) const {
    auto it = terms_.find(power);
    return it == terms_.end() ? Vector(length_) : it->second;
}

void EpsilonSeries::add(int power, const Scalar& s, const Vector& v) {
    if (power > max_power_ || s.is_zero() || lieq::is_zero(v))
        return;
    auto [it, inserted] = terms_.try_emplace(power, Vector(length_));
    axpy(it->second, s, v);
    if (lieq::is_zero(it->second))
        terms_.erase(it);
}

EpsilonSeries& EpsilonSeries::operator+=(const EpsilonSeries& o) {
    if (o.length_ != length_)
        throw InvalidArgument("series length mismatch");
    for (const auto& [p, v] : o.terms_)
        add(p, Scalar(1), v);
    return *this;
}

void SectorSplit::validate(std::size_t n) const {
    if (r == 0 || r >= n)
        throw InvalidArgument("sector split requires 0 < r < n (r = " + std::to_string(r) +
                              ", n = " + std::to_string(n) + ")");
    if (v && (v->rows() != r || v->cols() != r))
        throw InvalidArgument("v must be an r x r matrix");
}

std::vector<IndexTriple> check_contractible(const LieAlgebra& algebra, const SectorSplit& split) {
    const std::size_t n = algebra.dim();
    split.validate(n);
    std::vector<IndexTriple> out;
    for (const auto& [key, value] : algebra.tensor().entries()) {
        const auto [i, j] = key;
        if (j >= split.r)
            continue;
        for (std::size_t l = split.r; l < n; ++l)
            if (!value[l].is_zero())
                out.push_back({i, j, l});
    }
    return out;
}

ContractionReport contract_formula(const LieAlgebra& algebra, const SectorSplit& split) {
    auto violations = check_contractible(algebra, split);
    if (!violations.empty())
        throw NotContractible(std::move(violations));
    const std::size_t n = algebra.dim();
    const std::size_t r = split.r;
    StructureTensor out(n);
    for (const auto& [key, value] : algebra.tensor().entries()) {
        const auto [i, j] = key;
        const bool first_i = i < r;
        const bool first_j = j < r;
        Vector kept(n);
        if (first_i && first_j) {
            for (std::size_t k = 0; k < r; ++k)
                kept[k] = value[k];
        } else if (first_i || first_j) {
            for (std::size_t k = r; k < n; ++k)
                kept[k] = value[k];
        }
        // second/second brackets contract to zero
        out.set(i, j, std::move(kept));
    }
    ContractionReport report;
    report.contracted = verified(
        LieAlgebra(algebra.name() + "-contracted", algebra.generators(), std::move(out)));
    return report;
}

EpsilonSeries contracted_bracket_series(const LieAlgebra& algebra, const SectorSplit& split,
                                        std::size_t a, std::size_t b) {
    const std::size_t n = algebra.dim();
    const std::size_t r = split.r;
    split.validate(n);
    if (a >= n || b >= n)
        throw InvalidArgument("generator index out of range");

    // Y_a as a polynomial in eps over the X basis.
    auto y_terms = [&](std::size_t g) {
        std::vector<std::pair<int, Vector>> t;
        if (g < r) {
            t.emplace_back(0, unit_vector(n, g));
            if (split.v) {
                Vector w(n);
                for (std::size_t nu = 0; nu < r; ++nu)
                    w[nu] = (*split.v)(g, nu);
                if (!lieq::is_zero(w))
                    t.emplace_back(1, std::move(w));
            }
        } else {
            t.emplace_back(1, unit_vector(n, g));
        }
        return t;
    };

    // X_c = sum_k eps^k ((-v)^k)_c^nu Y_nu for first-sector c.
    std::vector<Matrix> inverse_terms;
    inverse_terms.push_back(Matrix::identity(r));
    if (split.v) {
        Matrix minus_v(r, r);
        for (std::size_t p = 0; p < r; ++p)
            for (std::size_t q = 0; q < r; ++q)
                minus_v(p, q) = -(*split.v)(p, q);
        for (int k = 1; k <= kSeriesOrder + 1; ++k)
            inverse_terms.push_back(inverse_terms.back() * minus_v);
    }

    EpsilonSeries series(n, kSeriesOrder);
    for (const auto& [p, u] : y_terms(a))
        for (const auto& [q, w] : y_terms(b)) {
            const Vector x = bracket(algebra.tensor(), u, w);
            const int d = p + q;
            for (std::size_t c = 0; c < n; ++c) {
                if (x[c].is_zero())
                    continue;
                if (c >= r) {
                    series.add(d - 1, x[c], unit_vector(n, c));
                    continue;
                }
                for (std::size_t k = 0; k < inverse_terms.size(); ++k) {
                    Vector y(n);
                    for (std::size_t nu = 0; nu < r; ++nu)
                        y[nu] = inverse_terms[k](c, nu);
                    series.add(d + static_cast<int>(k), x[c], y);
                }
            }
        }
    return series;
}

ContractionReport contract_symbolic(const LieAlgebra& algebra, const SectorSplit& split) {
    const std::size_t n = algebra.dim();
    split.validate(n);
    StructureTensor out(n);
    std::vector<IndexTriple> violations;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const EpsilonSeries s = contracted_bracket_series(algebra, split, a, b);
            const auto low = s.lowest_power();
            if (low && *low < 0) {
                if (*low < -1)
                    throw Error("unexpected pole of order > 1 in contracted bracket");
                const Vector pole = s.coefficient(-1);
                for (std::size_t l = 0; l < n; ++l)
                    if (!pole[l].is_zero())
                        violations.push_back({a, b, l});
                continue;
            }
            out.set(a, b, s.coefficient(0));
        }
    if (!violations.empty())
        throw NotContractible(std::move(violations));

    ContractionReport report;
    report.contracted = verified(
        LieAlgebra(algebra.name() + "-contracted", algebra.generators(), std::move(out)));
    const ContractionReport formula = contract_formula(algebra, split);
    report.route_agreement = formula.contracted.tensor() == report.contracted.tensor();
    return report;
}

namespace {

void check_subset(std::size_t n, const std::vector<std::size_t>& subset) {
    std::set<std::size_t> seen;
    for (auto s : subset) {
        if (s >= n)
            throw InvalidArgument("generator index out of range");
        if (!seen.insert(s).second)
            throw InvalidArgument("repeated generator in subset");
    }
}

} // namespace

IdealReport verify_ideal(const LieAlgebra& algebra, const std::vector<std::size_t>& subset) {
    const std::size_t n = algebra.dim();
    check_subset(n, subset);
    std::vector<Vector> rows;
    for (auto s : subset)
        rows.push_back(unit_vector(n, s));
    const Echelon span = row_reduce(Matrix::from_rows(rows, n));

    IdealReport report;
    report.ideal = true;
    report.abelian = true;
    for (auto s : subset) {
        for (std::size_t k = 0; k < n; ++k)
            if (!span.contains(algebra.tensor().get(k, s)))
                report.ideal = false;
        for (auto t : subset)
            if (!lieq::is_zero(algebra.tensor().get(s, t)))
                report.abelian = false;
    }
    return report;
}

LieAlgebra quotient_algebra(const LieAlgebra& algebra, const std::vector<std::size_t>& ideal_subset) {
    if (!verify_ideal(algebra, ideal_subset).ideal)
        throw NotAnIdeal("generator subset does not span an ideal");
    const std::size_t n = algebra.dim();
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < n; ++k)
        if (std::find(ideal_subset.begin(), ideal_subset.end(), k) == ideal_subset.end())
            keep.push_back(k);
    if (keep.empty())
        throw NotAnIdeal("quotient by the whole algebra has no generators");

    std::vector<std::string> names;
    for (auto k : keep)
        names.push_back(algebra.generator(k));
    StructureTensor out(keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = a + 1; b < keep.size(); ++b) {
            const Vector full = algebra.tensor().get(keep[a], keep[b]);
            Vector projected(keep.size());
            for (std::size_t c = 0; c < keep.size(); ++c)
                projected[c] = full[keep[c]];
            out.set(a, b, std::move(projected));
        }
    std::string name = algebra.name() + "/{";
    for (std::size_t s = 0; s < ideal_subset.size(); ++s)
        name += (s ? "," : "") + algebra.generator(ideal_subset[s]);
    name += "}";
    return verified(LieAlgebra(std::move(name), std::move(names), std::move(out)));
}

} // namespace lieq

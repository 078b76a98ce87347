#include "lieq/projective.hpp"

#include <set>

namespace lieq {

std::vector<std::pair<std::size_t, std::size_t>> form_pairs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            out.emplace_back(i, j);
    return out;
}

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
    if (i >= j || j >= n)
        throw InvalidArgument("pair index needs i < j < n");
    // pairs before row i: sum_{r<i} (n - 1 - r)
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

Cocycle Cocycle::from_matrix(const Matrix& m) {
    if (!m.is_square())
        throw InvalidArgument("cocycle matrix must be square");
    const std::size_t n = m.rows();
    Cocycle c(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!m(i, i).is_zero())
            throw InvalidArgument("cocycle matrix must vanish on the diagonal");
        for (std::size_t j = i + 1; j < n; ++j) {
            if (m(i, j) != -m(j, i))
                throw InvalidArgument("cocycle matrix must be antisymmetric");
            c.values_[pair_index(n, i, j)] = m(i, j);
        }
    }
    return c;
}

Cocycle Cocycle::from_pairs(std::size_t n, Vector values) {
    Cocycle c(n);
    if (values.size() != c.values_.size())
        throw InvalidArgument("cocycle coordinate vector has wrong length");
    c.values_ = std::move(values);
    return c;
}

Scalar Cocycle::get(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_)
        throw InvalidArgument("generator index out of range");
    if (i == j)
        return Scalar(0);
    return i < j ? values_[pair_index(n_, i, j)] : -values_[pair_index(n_, j, i)];
}

void Cocycle::set(std::size_t i, std::size_t j, const Scalar& s) {
    if (i >= n_ || j >= n_)
        throw InvalidArgument("generator index out of range");
    if (i == j)
        throw InvalidArgument("a cocycle vanishes on the diagonal");
    if (i < j)
        values_[pair_index(n_, i, j)] = s;
    else
        values_[pair_index(n_, j, i)] = -s;
}

Scalar Cocycle::evaluate(const Vector& x, std::size_t k) const {
    Scalar s;
    for (std::size_t c = 0; c < x.size(); ++c)
        if (!x[c].is_zero())
            s += x[c] * get(c, k);
    return s;
}

Matrix Cocycle::matrix() const {
    Matrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            m(i, j) = get(i, j);
    return m;
}

std::vector<CocycleResidual> cocycle_condition(const LieAlgebra& algebra, const Cocycle& xi) {
    const std::size_t n = algebra.dim();
    if (xi.dim() != n)
        throw AlgebraMismatch();
    const auto& t = algebra.tensor();
    std::vector<CocycleResidual> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Scalar v =
                    xi.evaluate(t.get(i, j), k) + xi.evaluate(t.get(j, k), i) + xi.evaluate(t.get(k, i), j);
                if (!v.is_zero())
                    out.push_back({{i, j, k}, v});
            }
    return out;
}

Cocycle coboundary_from(const LieAlgebra& algebra, const LinearForm& lambda) {
    const std::size_t n = algebra.dim();
    if (lambda.size() != n)
        throw InvalidArgument("linear form length does not match algebra dimension");
    Cocycle xi(n);
    for (const auto& [key, value] : algebra.tensor().entries()) {
        Scalar s;
        for (std::size_t c = 0; c < n; ++c)
            s += value[c] * lambda[c];
        xi.set(key.first, key.second, s);
    }
    return xi;
}

Matrix cocycle_operator(const LieAlgebra& algebra) {
    const std::size_t n = algebra.dim();
    const auto& t = algebra.tensor();
    std::vector<Vector> rows;
    // Xi(v, X_k) as a row over pair coordinates.
    auto accumulate = [&](Vector& row, const Vector& v, std::size_t k) {
        for (std::size_t c = 0; c < n; ++c) {
            if (v[c].is_zero() || c == k)
                continue;
            if (c < k)
                row[pair_index(n, c, k)] += v[c];
            else
                row[pair_index(n, k, c)] -= v[c];
        }
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vector row(n * (n - 1) / 2);
                accumulate(row, t.get(i, j), k);
                accumulate(row, t.get(j, k), i);
                accumulate(row, t.get(k, i), j);
                rows.push_back(std::move(row));
            }
    return Matrix::from_rows(rows, n * (n - 1) / 2);
}

Matrix coboundary_operator(const LieAlgebra& algebra) {
    const std::size_t n = algebra.dim();
    Matrix m(n, n * (n - 1) / 2);
    for (const auto& [key, value] : algebra.tensor().entries())
        for (std::size_t c = 0; c < n; ++c)
            m(c, pair_index(n, key.first, key.second)) = value[c];
    return m;
}

namespace {

// Lambda = particular solution of coboundary(Lambda) = target, target in B^2.
LinearForm solve_shift(const LieAlgebra& algebra, const Vector& target) {
    const auto sol = solve(coboundary_operator(algebra).transpose(), target);
    if (!sol)
        throw Error("internal: coboundary target outside B2");
    return sol->particular;
}

Vector cocycle_part_removed(const Echelon& b2, const Vector& xi) { return xi - b2.reduce(xi); }

} // namespace

CohomologyReport h2(const LieAlgebra& algebra) {
    const std::size_t n = algebra.dim();
    const std::size_t m = n * (n - 1) / 2;
    CohomologyReport report;

    std::vector<Vector> z2;
    if (n < 3) {
        for (std::size_t p = 0; p < m; ++p)
            z2.push_back(unit_vector(m, p));
    } else {
        z2 = nullspace(cocycle_operator(algebra));
    }
    const Echelon b2 = row_reduce(coboundary_operator(algebra));
    report.dim_Z2 = z2.size();
    report.dim_B2 = b2.rank();
    report.dim_H2 = report.dim_Z2 - report.dim_B2;

    std::vector<Vector> reduced;
    for (const auto& z : z2) {
        Vector r = b2.reduce(z);
        if (!lieq::is_zero(r))
            reduced.push_back(std::move(r));
    }
    if (!reduced.empty()) {
        const Echelon reps = row_reduce(Matrix::from_rows(reduced, m));
        for (std::size_t r = 0; r < reps.rank(); ++r)
            report.residual_basis.push_back(Cocycle::from_pairs(n, reps.reduced.row_vector(r)));
    }
    if (report.residual_basis.size() != report.dim_H2)
        throw Error("internal: H2 representatives do not match the dimension count");

    // Shift as a linear function of the cocycle coordinates.
    std::vector<LinearForm> columns;
    for (std::size_t p = 0; p < m; ++p)
        columns.push_back(solve_shift(algebra, cocycle_part_removed(b2, unit_vector(m, p))));
    for (std::size_t g = 0; g < n; ++g) {
        GeneratorShift shift{g, {}};
        for (std::size_t p = 0; p < m; ++p)
            if (!columns[p][g].is_zero())
                shift.terms.emplace_back(p, columns[p][g]);
        if (!shift.terms.empty())
            report.elimination.push_back(std::move(shift));
    }
    return report;
}

Elimination eliminate_charges(const LieAlgebra& algebra, const Cocycle& xi) {
    if (xi.dim() != algebra.dim())
        throw AlgebraMismatch();
    if (!cocycle_condition(algebra, xi).empty())
        throw NotACocycle("form fails the cocycle condition");
    const Echelon b2 = row_reduce(coboundary_operator(algebra));
    const Vector removed = cocycle_part_removed(b2, xi.pair_values());
    LinearForm shift = solve_shift(algebra, removed);
    Cocycle residual =
        Cocycle::from_pairs(algebra.dim(), xi.pair_values() - coboundary_from(algebra, shift).pair_values());
    return {std::move(shift), std::move(residual)};
}

std::vector<ExponentRelation> exponent_relations(const LieAlgebra& algebra) {
    std::vector<ExponentRelation> out;
    if (algebra.dim() < 3)
        return out;
    const Echelon e = row_reduce(cocycle_operator(algebra));
    for (std::size_t r = 0; r < e.rank(); ++r) {
        ExponentRelation rel;
        for (std::size_t p = 0; p < e.reduced.cols(); ++p)
            if (!e.reduced(r, p).is_zero())
                rel.terms.emplace_back(p, e.reduced(r, p));
        out.push_back(std::move(rel));
    }
    return out;
}

std::string to_string(const LieAlgebra& algebra, const ExponentRelation& relation) {
    const auto pairs = form_pairs(algebra.dim());
    std::string out;
    for (const auto& [p, c] : relation.terms) {
        std::string tok = c.to_string();
        const bool negative = tok.front() == '-';
        if (negative)
            tok = (-c).to_string();
        if (out.empty())
            out = negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const std::string name =
            "Xi(" + algebra.generator(pairs[p].first) + "," + algebra.generator(pairs[p].second) + ")";
        out += tok == "1" ? name : tok + "*" + name;
    }
    return (out.empty() ? "0" : out) + " = 0";
}

std::vector<std::size_t> unconstrained_pairs(const LieAlgebra& algebra) {
    const std::size_t m = algebra.dim() * (algebra.dim() - 1) / 2;
    std::set<std::size_t> used;
    for (const auto& rel : exponent_relations(algebra))
        for (const auto& term : rel.terms)
            used.insert(term.first);
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < m; ++p)
        if (!used.contains(p))
            out.push_back(p);
    return out;
}

RSetReport r_sets(const LieAlgebra& algebra) {
    const std::size_t n = algebra.dim();
    RSetReport report;
    for (std::size_t b = 0; b < n; ++b) {
        std::vector<Vector> rows;
        for (std::size_t j = 0; j < n; ++j)
            rows.push_back(algebra.tensor().get(b, j));
        const Echelon e = row_reduce(Matrix::from_rows(rows, n));
        std::vector<Vector> basis;
        for (std::size_t r = 0; r < e.rank(); ++r)
            basis.push_back(e.reduced.row_vector(r));
        report.per_generator.push_back(std::move(basis));
    }
    const Echelon derived = derived_echelon(algebra);
    for (std::size_t g = 0; g < n; ++g)
        if (!derived.contains(unit_vector(n, g)))
            report.flagged.push_back(g);
    return report;
}

Scalar charge_factor(const LieAlgebra& algebra) {
    if (algebra.tensor().is_abelian())
        return Scalar(1);
    for (const auto& [key, value] : algebra.tensor().entries())
        for (const auto& c : value)
            if (!c.is_zero() && !c.is_imaginary())
                return Scalar(1);
    return Scalar::i();
}

} // namespace lieq

#include "lieq/algebra.hpp"

#include <set>

namespace lieq {

Vector StructureTensor::get(std::size_t i, std::size_t j) const {
    if (i >= dim_ || j >= dim_)
        throw InvalidArgument("generator index out of range");
    if (i == j)
        return Vector(dim_);
    const bool swapped = i > j;
    auto it = entries_.find(swapped ? std::pair{j, i} : std::pair{i, j});
    if (it == entries_.end())
        return Vector(dim_);
    return swapped ? Scalar(-1) * it->second : it->second;
}

Scalar StructureTensor::at(std::size_t i, std::size_t j, std::size_t k) const {
    if (k >= dim_)
        throw InvalidArgument("generator index out of range");
    if (i == j)
        return Scalar(0);
    const bool swapped = i > j;
    auto it = entries_.find(swapped ? std::pair{j, i} : std::pair{i, j});
    if (it == entries_.end())
        return Scalar(0);
    return swapped ? -it->second[k] : it->second[k];
}

void StructureTensor::set(std::size_t i, std::size_t j, Vector value) {
    if (i >= dim_ || j >= dim_)
        throw InvalidArgument("generator index out of range");
    if (i == j)
        throw InvalidArgument("diagonal bracket [X_i, X_i] is always zero");
    if (value.size() != dim_)
        throw InvalidArgument("bracket vector has wrong length");
    if (i > j) {
        std::swap(i, j);
        value = Scalar(-1) * value;
    }
    if (is_zero(value))
        entries_.erase({i, j});
    else
        entries_[{i, j}] = std::move(value);
}

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> generators, StructureTensor tensor)
    : name_(std::move(name)), generators_(std::move(generators)), tensor_(std::move(tensor)) {
    if (generators_.empty())
        throw InvalidArgument("an algebra needs at least one generator");
    if (tensor_.dim() != generators_.size())
        throw InvalidArgument("generator count does not match tensor dimension");
    std::set<std::string> seen;
    for (const auto& g : generators_) {
        if (g.empty())
            throw InvalidArgument("generator labels must be nonempty");
        if (!seen.insert(g).second)
            throw InvalidArgument("duplicate generator label '" + g + "'");
    }
}

std::size_t LieAlgebra::index_of(const std::string& generator) const {
    for (std::size_t k = 0; k < generators_.size(); ++k)
        if (generators_[k] == generator)
            return k;
    throw InvalidArgument("unknown generator '" + generator + "'");
}

bool LieAlgebra::has_generator(const std::string& generator) const {
    for (const auto& g : generators_)
        if (g == generator)
            return true;
    return false;
}

LieAlgebra LieAlgebra::renamed(std::string name) const {
    LieAlgebra copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

AlgebraElement::AlgebraElement(const LieAlgebra& algebra, Vector coefficients)
    : algebra_(&algebra), coefficients_(std::move(coefficients)) {
    if (coefficients_.size() != algebra.dim())
        throw InvalidArgument("element length does not match algebra dimension");
}

AlgebraElement AlgebraElement::basis(const LieAlgebra& algebra, std::size_t k) {
    return {algebra, unit_vector(algebra.dim(), k)};
}

AlgebraElement AlgebraElement::zero(const LieAlgebra& algebra) {
    return {algebra, Vector(algebra.dim())};
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    if (algebra_ != o.algebra_)
        throw AlgebraMismatch();
    return {*algebra_, coefficients_ + o.coefficients_};
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    if (algebra_ != o.algebra_)
        throw AlgebraMismatch();
    return {*algebra_, coefficients_ - o.coefficients_};
}

AlgebraElement operator*(const Scalar& s, const AlgebraElement& x) {
    return {*x.algebra_, s * x.coefficients_};
}

std::string AlgebraElement::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < coefficients_.size(); ++k) {
        const Scalar& c = coefficients_[k];
        if (c.is_zero())
            continue;
        std::string tok = c.to_string();
        const bool negative = tok.front() == '-';
        if (negative)
            tok = (-c).to_string();
        if (out.empty())
            out = negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += tok == "1" ? algebra_->generator(k) : tok + "*" + algebra_->generator(k);
    }
    return out.empty() ? "0" : out;
}

Vector bracket(const StructureTensor& tensor, const Vector& x, const Vector& y) {
    const std::size_t n = tensor.dim();
    if (x.size() != n || y.size() != n)
        throw InvalidArgument("element length does not match algebra dimension");
    Vector out(n);
    for (const auto& [key, value] : tensor.entries()) {
        const auto [i, j] = key;
        // x^i y^j - x^j y^i multiplies C_ij.
        Scalar w = x[i] * y[j] - x[j] * y[i];
        if (!w.is_zero())
            axpy(out, w, value);
    }
    return out;
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
    if (&x.algebra() != &y.algebra())
        throw AlgebraMismatch();
    return {x.algebra(), bracket(x.algebra().tensor(), x.coefficients(), y.coefficients())};
}

JacobiReport check_jacobi(const LieAlgebra& algebra) {
    const auto& t = algebra.tensor();
    const std::size_t n = algebra.dim();
    JacobiReport report;
    auto e = [n](std::size_t k) { return unit_vector(n, k); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vector r = bracket(t, t.get(i, j), e(k));
                r = r + bracket(t, t.get(j, k), e(i));
                r = r + bracket(t, t.get(k, i), e(j));
                if (!is_zero(r))
                    report.violations.push_back({{i, j, k}, std::move(r)});
            }
    report.passed = report.violations.empty();
    return report;
}

LieAlgebra verified(LieAlgebra algebra) {
    algebra.jacobi_verified_ = check_jacobi(algebra).passed;
    return algebra;
}

LieAlgebra transform_basis(const LieAlgebra& algebra, const LinearMap& map,
                           std::vector<std::string> new_generators) {
    const std::size_t n = algebra.dim();
    if (map.rows() != n || map.cols() != n)
        throw InvalidArgument("basis map must be square with the algebra's dimension");
    const auto inv = inverse(map);
    if (!inv)
        throw SingularMap();
    if (new_generators.empty())
        new_generators = algebra.generators();
    if (new_generators.size() != n)
        throw InvalidArgument("new generator list has wrong length");

    StructureTensor out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            // [Y_i, Y_j] in X coordinates, then back to Y coordinates.
            Vector x = bracket(algebra.tensor(), map.row_vector(i), map.row_vector(j));
            if (is_zero(x))
                continue;
            Vector y(n);
            for (std::size_t c = 0; c < n; ++c)
                if (!x[c].is_zero())
                    axpy(y, x[c], inv->row(c));
            out.set(i, j, std::move(y));
        }
    return verified(LieAlgebra(algebra.name(), std::move(new_generators), std::move(out)));
}

LinearMap permutation_map(std::size_t dim, const std::vector<std::size_t>& order) {
    if (order.size() != dim)
        throw InvalidArgument("permutation has wrong length");
    std::vector<bool> used(dim, false);
    LinearMap m(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
        if (order[k] >= dim || used[order[k]])
            throw InvalidArgument("not a permutation");
        used[order[k]] = true;
        m(k, order[k]) = Scalar(1);
    }
    return m;
}

Echelon derived_echelon(const LieAlgebra& algebra) {
    std::vector<Vector> rows;
    for (const auto& [key, value] : algebra.tensor().entries())
        rows.push_back(value);
    return row_reduce(Matrix::from_rows(rows, algebra.dim()));
}

std::vector<AlgebraElement> derived_subalgebra(const LieAlgebra& algebra) {
    const Echelon e = derived_echelon(algebra);
    std::vector<AlgebraElement> out;
    for (std::size_t r = 0; r < e.rank(); ++r)
        out.emplace_back(algebra, e.reduced.row_vector(r));
    return out;
}

} // namespace lieq

#include "lieq/tensor_rep.hpp"

#include <set>

#include "lieq/catalog.hpp"

namespace lieq {

namespace {

const Scalar kI = Scalar::i();
const Scalar kHalf = Scalar(Rational(1, 2));

int delta(int a, int b) { return a == b ? 1 : 0; }

Matrix int_matrix(std::size_t n, std::initializer_list<int> values) {
    Matrix m(n, n);
    std::size_t k = 0;
    for (int v : values) {
        m(k / n, k % n) = Scalar(v);
        ++k;
    }
    return m;
}

void check_pair(IndexPair p) {
    if (p.first < 0 || p.first > 3 || p.second < 0 || p.second > 3)
        throw InvalidArgument("4-index out of range");
}

// Q_ab^k = (zeta_a^c alpha_b^d + alpha_a^c zeta_b^d) eps_cd^k
Scalar q3(const AlphaZeta& az, int a, int b, int k) {
    Scalar s;
    for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
            const int e = levi_civita3(c, d, k);
            if (e != 0)
                s += Scalar(e) * (az.zeta3(a, c) * az.alpha3(b, d) + az.alpha3(a, c) * az.zeta3(b, d));
        }
    return s;
}

// (zeta_a^c zeta_b^d - alpha_a^c alpha_b^d) eps_cd^k
Scalar p3(const AlphaZeta& az, int a, int b, int k) {
    Scalar s;
    for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
            const int e = levi_civita3(c, d, k);
            if (e != 0)
                s += Scalar(e) * (az.zeta3(a, c) * az.zeta3(b, d) - az.alpha3(a, c) * az.alpha3(b, d));
        }
    return s;
}

} // namespace

Metric Metric::standard() { return {{Scalar(-1), Scalar(1), Scalar(1), Scalar(1)}}; }

Metric Metric::mostly_minus() { return {{Scalar(1), Scalar(-1), Scalar(-1), Scalar(-1)}}; }

AlphaZeta AlphaZeta::standard() {
    AlphaZeta az;
    az.alpha3 = int_matrix(3, {1, 0, 0, 0, 1, 0, 0, 0, 0});
    az.zeta3 = int_matrix(3, {0, 1, 0, -1, 0, 0, 0, 0, 1});
    az.alpha4 = int_matrix(4, {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0});
    az.zeta4 = int_matrix(4, {0, 0, 0, -1, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, -1});
    return az;
}

Table4 f_lorentz(IndexPair mn, IndexPair rs, const Metric& metric) {
    check_pair(mn);
    check_pair(rs);
    const auto [mu, nu] = mn;
    const auto [rho, sigma] = rs;
    // Unsymmetrized term; the table is 2 A^{[ab]} = A^{ab} - A^{ba}.
    auto A = [&](int a, int b) {
        return metric(nu, rho) * Scalar(delta(sigma, a) * delta(mu, b)) -
               metric(mu, rho) * Scalar(delta(sigma, a) * delta(nu, b)) -
               metric(nu, sigma) * Scalar(delta(rho, a) * delta(mu, b)) +
               metric(mu, sigma) * Scalar(delta(rho, a) * delta(nu, b));
    };
    Table4 t;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            t[a][b] = A(a, b) - A(b, a);
    return t;
}

Scalar factor4(const AlphaZeta& az, int a, int b, int e, int t) {
    const Matrix& z = az.zeta4;
    const Matrix& al = az.alpha4;
    return kHalf * (z(a, e) * al(b, t) - z(a, t) * al(b, e)) +
           kHalf * (al(a, e) * z(b, t) - al(a, t) * z(b, e));
}

Table4 f_sim2(IndexPair mn, IndexPair rs, const AlphaZeta& az, const Metric& metric) {
    check_pair(mn);
    check_pair(rs);
    const auto [mu, nu] = mn;
    const auto [rho, sigma] = rs;
    // d(x, y; b, a) = delta_x^{[b} delta_y^{a]}, doubled
    auto dd = [](int x, int y, int b, int a) { return delta(x, b) * delta(y, a) - delta(x, a) * delta(y, b); };
    Table4 out;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const Scalar w = metric(nu, rho) * Scalar(dd(mu, sigma, b, a)) -
                             metric(mu, rho) * Scalar(dd(nu, sigma, b, a)) -
                             metric(nu, sigma) * Scalar(dd(mu, rho, b, a)) +
                             metric(mu, sigma) * Scalar(dd(nu, rho, b, a));
            if (w.is_zero())
                continue;
            for (int e = 0; e < 4; ++e)
                for (int t = 0; t < 4; ++t)
                    out[e][t] += w * factor4(az, a, b, e, t);
        }
    return out;
}

Table4 sim2_tensor_raw(IndexPair mn, IndexPair rs, const AlphaZeta& az, const Metric& metric) {
    check_pair(mn);
    check_pair(rs);
    const auto [mu, nu] = mn;
    const auto [rho, sigma] = rs;
    // delta_x^{[b} delta_y^{a]}
    auto dd = [](int x, int y, int b, int a) {
        return kHalf * Scalar(delta(x, b) * delta(y, a) - delta(x, a) * delta(y, b));
    };
    // eta^{[ab]} of a diagonal metric
    auto eta_anti = [&](int a, int b) { return kHalf * (metric(a, b) - metric(b, a)); };
    Table4 out;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const Scalar w = metric(mu, rho) * (metric(nu, sigma) * eta_anti(a, b) - dd(nu, sigma, b, a)) -
                             metric(mu, sigma) * (metric(nu, rho) * eta_anti(a, b) - dd(nu, rho, b, a)) +
                             (metric(nu, rho) * dd(mu, sigma, b, a) - metric(nu, sigma) * dd(mu, rho, b, a));
            if (w.is_zero())
                continue;
            for (int e = 0; e < 4; ++e)
                for (int t = 0; t < 4; ++t)
                    out[e][t] += w * factor4(az, a, b, e, t);
        }
    return out;
}

StructureEvaluator StructureEvaluator::lorentz(const Metric& metric) {
    return {"lorentz", kI, [metric](IndexPair mn, IndexPair rs) { return f_lorentz(mn, rs, metric); }};
}

StructureEvaluator StructureEvaluator::sim2() {
    return {"sim2", -kI, [](IndexPair mn, IndexPair rs) { return f_sim2(mn, rs); }};
}

IndexedRep::IndexedRep(LieAlgebra algebra, std::map<IndexPair, Slot> assign)
    : algebra_(std::move(algebra)), assign_(std::move(assign)) {
    std::set<std::size_t> covered;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) {
            auto it = assign_.find({mu, nu});
            if (it == assign_.end())
                throw InvalidArgument("index pair (" + std::to_string(mu) + "," + std::to_string(nu) +
                                      ") has no assignment");
            if (it->second.generator >= algebra_.dim())
                throw InvalidArgument("assigned generator out of range");
            if (it->second.coefficient.is_zero())
                throw InvalidArgument("assignment coefficient must be nonzero");
            covered.insert(it->second.generator);
        }
    if (assign_.size() != 6)
        throw InvalidArgument("assignments must use pairs mu < nu only");
    if (covered.size() != algebra_.dim())
        throw InvalidArgument("every generator must appear in at least one assignment");
}

IndexedRep IndexedRep::lorentz() {
    LieAlgebra alg = catalog("lorentz-jk");
    const std::size_t J1 = alg.index_of("J1"), J2 = alg.index_of("J2"), J3 = alg.index_of("J3");
    std::map<IndexPair, Slot> m;
    for (int k = 1; k <= 3; ++k)
        m[{0, k}] = {alg.index_of("K" + std::to_string(k)), Scalar(1)};
    m[{1, 2}] = {J3, Scalar(1)};
    m[{1, 3}] = {J2, Scalar(-1)};
    m[{2, 3}] = {J1, Scalar(1)};
    return {std::move(alg), std::move(m)};
}

IndexedRep IndexedRep::sim2() {
    LieAlgebra alg = catalog("sim2");
    const std::size_t T1 = alg.index_of("T1"), T2 = alg.index_of("T2");
    const std::size_t J3 = alg.index_of("J3"), K3 = alg.index_of("K3");
    std::map<IndexPair, Slot> m;
    m[{0, 1}] = {T2, Scalar(1)};
    m[{0, 2}] = {T1, Scalar(-1)};
    m[{0, 3}] = {K3, Scalar(1)};
    m[{1, 2}] = {J3, Scalar(1)};
    m[{1, 3}] = {T2, Scalar(-1)};
    m[{2, 3}] = {T1, Scalar(1)};
    return {std::move(alg), std::move(m)};
}

Vector IndexedRep::element(int mu, int nu) const {
    check_pair({mu, nu});
    Vector v(algebra_.dim());
    if (mu == nu)
        return v;
    const bool swapped = mu > nu;
    const Slot& s = assign_.at(swapped ? IndexPair{nu, mu} : IndexPair{mu, nu});
    v[s.generator] = swapped ? -s.coefficient : s.coefficient;
    return v;
}

Vector bracket_via_rep(const IndexedRep& rep, IndexPair mn, IndexPair rs, const StructureEvaluator& f) {
    const Table4 t = f.table(mn, rs);
    Vector out(rep.algebra().dim());
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (!t[a][b].is_zero())
                axpy(out, f.prefactor * t[a][b], rep.element(a, b));
    return out;
}

ConsistencyReport rep_consistency(const IndexedRep& rep, const StructureEvaluator& f) {
    ConsistencyReport report;
    const auto& tensor = rep.algebra().tensor();
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            for (int rho = 0; rho < 4; ++rho)
                for (int sigma = 0; sigma < 4; ++sigma) {
                    const Vector lhs = bracket(tensor, rep.element(mu, nu), rep.element(rho, sigma));
                    if (lhs != bracket_via_rep(rep, {mu, nu}, {rho, sigma}, f))
                        report.mismatches.push_back({mu, nu, rho, sigma});
                }
    report.passed = report.mismatches.empty();
    return report;
}

bool boost_bracket_reproduced(const Metric& metric) {
    const IndexedRep rep = IndexedRep::lorentz();
    const StructureEvaluator f = StructureEvaluator::lorentz(metric);
    for (int b = 1; b < 4; ++b)
        for (int d = 1; d < 4; ++d) {
            if (b == d)
                continue;
            if (bracket_via_rep(rep, {0, b}, {0, d}, f) != -kI * rep.element(b, d))
                return false;
        }
    return true;
}

bool sim2_target_vanishes(IndexPair target) {
    check_pair(target);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            for (int rho = 0; rho < 4; ++rho)
                for (int sigma = 0; sigma < 4; ++sigma)
                    if (!f_sim2({mu, nu}, {rho, sigma})[target.first][target.second].is_zero())
                        return false;
    return true;
}

bool sigma_target_vanishes(IndexPair target) {
    check_pair(target);
    for (int g = 0; g < 4; ++g)
        for (int l = 0; l < 4; ++l)
            if (!eval_sigma(g, l)[target.first][target.second].is_zero())
                return false;
    return true;
}

bool factorization_check(const AlphaZeta& factor) {
    const AlphaZeta standard = AlphaZeta::standard();
    // factor4 depends only on (a, b, e, t); tabulate once.
    Scalar F[4][4][4][4];
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int e = 0; e < 4; ++e)
                for (int t = 0; t < 4; ++t)
                    F[a][b][e][t] = factor4(factor, a, b, e, t);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            for (int rho = 0; rho < 4; ++rho)
                for (int sigma = 0; sigma < 4; ++sigma) {
                    const Table4 lhs = f_sim2({mu, nu}, {rho, sigma}, standard);
                    const Table4 fl = f_lorentz({mu, nu}, {rho, sigma});
                    for (int e = 0; e < 4; ++e)
                        for (int t = 0; t < 4; ++t) {
                            Scalar rhs;
                            for (int a = 0; a < 4; ++a)
                                for (int b = 0; b < 4; ++b)
                                    if (!fl[a][b].is_zero())
                                        rhs += fl[a][b] * F[a][b][e][t];
                            if (rhs != lhs[e][t])
                                return false;
                        }
                }
    return true;
}

Table4 eval_sigma(int gamma, int lambda, const AlphaZeta& az) {
    check_pair({gamma, lambda});
    const Matrix& z = az.zeta4;
    const Matrix& al = az.alpha4;
    auto X = [&](int g, int l, int e, int t) { return z(g, e) * al(l, t) + al(g, e) * z(l, t); };
    const Scalar quarter = Scalar(Rational(1, 4));
    Table4 out;
    for (int e = 0; e < 4; ++e)
        for (int t = 0; t < 4; ++t)
            out[e][t] = Scalar(2) * quarter *
                        (X(gamma, lambda, e, t) - X(lambda, gamma, e, t) - X(gamma, lambda, t, e) +
                         X(lambda, gamma, t, e));
    return out;
}

int levi_civita3(int a, int b, int c) {
    if (a == b || b == c || a == c)
        return 0;
    return ((a + 1) % 3 == b) ? 1 : -1;
}

bool epsilon_delta_identity_check(std::array<int, 3> term_signs) {
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d)
                    for (int i = 0; i < 3; ++i)
                        for (int j = 0; j < 3; ++j) {
                            const int lhs = levi_civita3(a, b, i) * levi_civita3(c, d, j);
                            const int rhs =
                                term_signs[0] * delta(a, c) * (delta(b, d) * delta(i, j) - delta(b, j) * delta(d, i)) +
                                term_signs[1] * delta(a, d) * (delta(b, c) * delta(i, j) - delta(b, j) * delta(c, i)) +
                                term_signs[2] * delta(a, j) * (delta(b, c) * delta(d, i) - delta(b, d) * delta(c, i));
                            if (lhs != rhs)
                                return false;
                        }
    return true;
}

bool alphazeta_identity_check(const AlphaZeta& az) {
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int k = 0; k < 3; ++k) {
                Scalar via_zeta, via_alpha;
                for (int l = 0; l < 3; ++l) {
                    via_zeta += q3(az, a, b, l) * az.zeta3(l, k);
                    via_alpha += q3(az, a, b, l) * az.alpha3(l, k);
                }
                if (p3(az, a, b, k) != via_zeta || q3(az, a, b, k) != via_alpha)
                    return false;
            }
    return true;
}

bool printed_reduction_identity_check(const AlphaZeta& az) {
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int k = 0; k < 3; ++k) {
                Scalar via_zeta;
                for (int l = 0; l < 3; ++l)
                    via_zeta += q3(az, a, b, l) * az.zeta3(l, k);
                if (-p3(az, a, b, k) != via_zeta)
                    return false;
            }
    return true;
}

// lorentz-jk order: J1 J2 J3 K1 K2 K3
Vector k_hat(const AlphaZeta& az, int a) {
    Vector v(6);
    for (int c = 0; c < 3; ++c) {
        v[3 + c] += az.zeta3(a, c);
        v[c] -= az.alpha3(a, c);
    }
    return v;
}

Vector j_hat(const AlphaZeta& az, int a) {
    Vector v(6);
    for (int c = 0; c < 3; ++c) {
        v[3 + c] += az.alpha3(a, c);
        v[c] += az.zeta3(a, c);
    }
    return v;
}

bool hat_brackets_3d_check(const AlphaZeta& az) {
    const LieAlgebra lorentz = catalog("lorentz-jk");
    const auto& t = lorentz.tensor();
    using Gen = Vector (*)(const AlphaZeta&, int);
    struct Case {
        Gen x, y, z;
        Scalar s;
    };
    const Case cases[] = {{k_hat, k_hat, j_hat, -kI}, {k_hat, j_hat, k_hat, kI}, {j_hat, j_hat, j_hat, kI}};
    for (const auto& cs : cases)
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                const Vector lhs = bracket(t, cs.x(az, a), cs.y(az, b));
                Vector rhs(6);
                for (int k = 0; k < 3; ++k) {
                    const Scalar q = q3(az, a, b, k);
                    if (!q.is_zero())
                        axpy(rhs, cs.s * q, cs.z(az, k));
                }
                if (lhs != rhs)
                    return false;
            }
    return true;
}

std::size_t cubic_unknown(int mu, int nu, int rho, int sigma) {
    if (!(0 <= mu && mu < nu && nu < 4) || rho < 0 || rho > 3 || sigma < 0 || sigma > 3)
        throw InvalidArgument("cubic unknown needs mu < nu and indices in 0..3");
    static const int pair_index[4][4] = {{-1, 0, 1, 2}, {-1, -1, 3, 4}, {-1, -1, -1, 5}, {-1, -1, -1, -1}};
    return InhomSolution::kLinear + static_cast<std::size_t>(pair_index[mu][nu]) * 16 +
           static_cast<std::size_t>(rho) * 4 + static_cast<std::size_t>(sigma);
}

Scalar InhomSolution::c_linear(const Vector& x, int eta, int rho) {
    return x.at(static_cast<std::size_t>(eta) * 4 + static_cast<std::size_t>(rho));
}

Scalar InhomSolution::c_cubic(const Vector& x, int mu, int nu, int rho, int sigma) {
    if (mu == nu)
        return Scalar(0);
    if (mu > nu)
        return -x.at(cubic_unknown(nu, mu, rho, sigma));
    return x.at(cubic_unknown(mu, nu, rho, sigma));
}

Matrix InhomSolution::c_linear_matrix() const {
    Matrix m(4, 4);
    for (int e = 0; e < 4; ++e)
        for (int r = 0; r < 4; ++r)
            m(e, r) = c_linear(particular, e, r);
    return m;
}

Scalar f_inhom(int mu, int nu, int eta, int sigma, const Metric& metric) {
    return metric(mu, sigma) * Scalar(delta(nu, eta)) - metric(sigma, nu) * Scalar(delta(mu, eta));
}

namespace {

struct InhomTarget {
    IndexedRep rep;
    LieAlgebra isim2;
    std::size_t p0;
};

const InhomTarget& inhom_target() {
    static const InhomTarget target = [] {
        LieAlgebra isim2 = catalog("isim2");
        const std::size_t p0 = isim2.index_of("P0");
        return InhomTarget{IndexedRep::sim2(), std::move(isim2), p0};
    }();
    return target;
}

// Coefficients of [M^_mn, P_sigma] in isim(2), over all generators.
Vector table_bracket(IndexPair mn, int sigma) {
    const auto& tg = inhom_target();
    const auto& slot = tg.rep.assignments().at(mn);
    Vector m(tg.isim2.dim());
    m[slot.generator] = slot.coefficient;
    return bracket(tg.isim2.tensor(), m, unit_vector(tg.isim2.dim(), tg.p0 + static_cast<std::size_t>(sigma)));
}

} // namespace

InhomSolution solve_inhomogeneous() {
    const auto& tg = inhom_target();
    Matrix system(96, InhomSolution::kUnknowns);
    Vector rhs(96);
    std::size_t row = 0;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu)
            for (int sigma = 0; sigma < 4; ++sigma) {
                const Vector target = table_bracket({mu, nu}, sigma);
                for (std::size_t g = 0; g < tg.p0; ++g)
                    if (!target[g].is_zero())
                        throw Inconsistent("bracket with a translation leaves the translation sector");
                for (int rho = 0; rho < 4; ++rho, ++row) {
                    for (int eta = 0; eta < 4; ++eta)
                        system(row, static_cast<std::size_t>(eta) * 4 + static_cast<std::size_t>(rho)) =
                            kI * f_inhom(mu, nu, eta, sigma);
                    system(row, cubic_unknown(mu, nu, rho, sigma)) = kI;
                    rhs[row] = target[tg.p0 + static_cast<std::size_t>(rho)];
                }
            }
    auto sol = solve(system, rhs);
    if (!sol)
        throw Inconsistent("no coefficients reproduce the translation brackets");
    return {std::move(sol->particular), std::move(sol->homogeneous)};
}

Vector inhom_bracket(const Vector& x, IndexPair mn, int sigma) {
    if (x.size() != InhomSolution::kUnknowns)
        throw InvalidArgument("inhomogeneous unknown vector has wrong length");
    const auto [mu, nu] = mn;
    Vector out(4);
    for (int rho = 0; rho < 4; ++rho) {
        Scalar s = InhomSolution::c_cubic(x, mu, nu, rho, sigma);
        for (int eta = 0; eta < 4; ++eta)
            s += f_inhom(mu, nu, eta, sigma) * InhomSolution::c_linear(x, eta, rho);
        out[rho] = kI * s;
    }
    return out;
}

std::vector<std::pair<IndexPair, int>> inhom_round_trip(const Vector& x) {
    const auto& tg = inhom_target();
    std::vector<std::pair<IndexPair, int>> bad;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu)
            for (int sigma = 0; sigma < 4; ++sigma) {
                const Vector target = table_bracket({mu, nu}, sigma);
                const Vector got = inhom_bracket(x, {mu, nu}, sigma);
                bool ok = true;
                for (std::size_t g = 0; g < target.size(); ++g) {
                    const Scalar expect = g >= tg.p0 ? got[g - tg.p0] : Scalar(0);
                    if (target[g] != expect)
                        ok = false;
                }
                if (!ok)
                    bad.push_back({{mu, nu}, sigma});
            }
    return bad;
}

std::size_t inhom_projection_rank(const InhomSolution& solution) {
    if (solution.nullspace.empty())
        return 0;
    Matrix m(solution.nullspace.size(), InhomSolution::kLinear);
    for (std::size_t r = 0; r < solution.nullspace.size(); ++r)
        for (std::size_t c = 0; c < InhomSolution::kLinear; ++c)
            m(r, c) = solution.nullspace[r][c];
    return rank(m);
}

} // namespace lieq

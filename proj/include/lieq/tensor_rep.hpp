#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lieq/algebra.hpp"

namespace lieq {

using IndexPair = std::pair<int, int>;
/// Coefficient table over a pair of 4-indices, t[a][b].
using Table4 = std::array<std::array<Scalar, 4>, 4>;

/// Diagonal metric on 4-indices.
struct Metric {
    std::array<Scalar, 4> diag;

    /// diag(-1, 1, 1, 1)
    static Metric standard();
    /// diag(1, -1, -1, -1)
    static Metric mostly_minus();
    Scalar operator()(int a, int b) const { return a == b ? diag[a] : Scalar(0); }
};

struct AlphaZeta {
    Matrix alpha3, zeta3; // indices 1..3 stored at 0..2
    Matrix alpha4, zeta4;

    static AlphaZeta standard();
};

/// Lorentz structure constants f_{mu nu}^{alpha beta}_{rho sigma} as a table
/// over (alpha, beta).
Table4 f_lorentz(IndexPair mn, IndexPair rs, const Metric& metric = Metric::standard());

/// sim(2) structure constants as a table over (eta, theta), evaluated from
/// the delta form with the 4x4 alpha/zeta matrices.
Table4 f_sim2(IndexPair mn, IndexPair rs, const AlphaZeta& az = AlphaZeta::standard(),
              const Metric& metric = Metric::standard());

/// Bracket coefficient before the eta^{[alpha beta]} simplification, summed
/// against the alpha/zeta factor. Equals f_sim2 / 2.
Table4 sim2_tensor_raw(IndexPair mn, IndexPair rs, const AlphaZeta& az = AlphaZeta::standard(),
                       const Metric& metric = Metric::standard());

/// (zeta_a^{[e} alpha_b^{t]} + alpha_a^{[e} zeta_b^{t]}) with the 4x4 matrices.
Scalar factor4(const AlphaZeta& az, int a, int b, int e, int t);

/// [M_mn, M_rs] = prefactor * sum_{a<b} table(mn, rs)[a][b] M_ab
struct StructureEvaluator {
    std::string name;
    Scalar prefactor;
    std::function<Table4(IndexPair, IndexPair)> table;

    static StructureEvaluator lorentz(const Metric& metric = Metric::standard());
    static StructureEvaluator sim2();
};

/// Assignment of antisymmetric index pairs to signed generators of a bound
/// algebra. The map may be non-injective.
class IndexedRep {
public:
    struct Slot {
        std::size_t generator;
        Scalar coefficient;
    };

    /// Needs all six pairs mu < nu, each generator covered at least once.
    IndexedRep(LieAlgebra algebra, std::map<IndexPair, Slot> assign);

    /// M_mn in lorentz-jk: M_0i = K_i, M_ij = eps_ij^k J_k.
    static IndexedRep lorentz();
    /// The sim(2) matrix with T2, -T1, K3 on the first row and J3, -T2, T1 above
    /// the diagonal below it.
    static IndexedRep sim2();

    const LieAlgebra& algebra() const { return algebra_; }
    const std::map<IndexPair, Slot>& assignments() const { return assign_; }

    /// Coefficient vector of M_{mu nu}; zero for mu == nu, negated for mu > nu.
    Vector element(int mu, int nu) const;

private:
    LieAlgebra algebra_;
    std::map<IndexPair, Slot> assign_;
};

Vector bracket_via_rep(const IndexedRep& rep, IndexPair mn, IndexPair rs, const StructureEvaluator& f);

struct ConsistencyReport {
    bool passed = true;
    std::vector<std::array<int, 4>> mismatches; // (mu, nu, rho, sigma)
};

/// Compares bracket_via_rep with the abstract bracket over all 4^4 tuples.
ConsistencyReport rep_consistency(const IndexedRep& rep, const StructureEvaluator& f);

/// [M_0b, M_0d] = -i M_bd for all b != d in 1..3, with the Lorentz rep and
/// the given metric.
bool boost_bracket_reproduced(const Metric& metric);

/// f_sim2(mn, rs)[target] == 0 for every mn, rs.
bool sim2_target_vanishes(IndexPair target);

/// Sigma_{gamma lambda}^{target} == 0 for every gamma, lambda.
bool sigma_target_vanishes(IndexPair target);

/// f_sim2 against f_lorentz contracted with the factor built from `factor`,
/// over all 4^6 tuples.
bool factorization_check(const AlphaZeta& factor = AlphaZeta::standard());

/// Sigma_{gamma lambda}^{eta theta} as a table over (eta, theta).
Table4 eval_sigma(int gamma, int lambda, const AlphaZeta& az = AlphaZeta::standard());

/// eps_ab^i eps_cd^j against its six-term delta expansion over all 3^6 tuples.
/// `term_signs` are the signs of the three delta groups; {1, -1, 1} is the
/// correct expansion.
bool epsilon_delta_identity_check(std::array<int, 3> term_signs = {1, -1, 1});

/// Levi-Civita symbol on 0-based indices 0..2.
int levi_civita3(int a, int b, int c);

/// (zeta zeta - alpha alpha) eps = (zeta alpha + alpha zeta) eps zeta and
/// (zeta alpha + alpha zeta) eps = (zeta alpha + alpha zeta) eps alpha over all
/// free indices, with the 3x3 matrices.
bool alphazeta_identity_check(const AlphaZeta& az = AlphaZeta::standard());

/// The reduction identity with the opposite sign on the left,
/// (alpha alpha - zeta zeta) eps = (zeta alpha + alpha zeta) eps zeta.
bool printed_reduction_identity_check(const AlphaZeta& az = AlphaZeta::standard());

/// K-hat_a = zeta_a^c K_c - alpha_a^c J_c and J-hat_a = alpha_a^c K_c +
/// zeta_a^c J_c inside lorentz-jk (a = 0..2).
Vector k_hat(const AlphaZeta& az, int a);
Vector j_hat(const AlphaZeta& az, int a);

/// Brackets of K-hat/J-hat computed in lorentz-jk against
/// [K^,K^] = -i Q eps J^, [K^,J^] = i Q eps K^, [J^,J^] = i Q eps J^.
bool hat_brackets_3d_check(const AlphaZeta& az = AlphaZeta::standard());

/// Unknowns: 16 entries C_eta^rho then 96 entries C_{mu nu}^rho_sigma
/// (mu < nu pairs in lexicographic order, then rho, then sigma).
struct InhomSolution {
    static constexpr std::size_t kLinear = 16;
    static constexpr std::size_t kUnknowns = 16 + 6 * 16;

    Vector particular;
    std::vector<Vector> nullspace;

    /// Views into an arbitrary point of the solution space.
    static Scalar c_linear(const Vector& x, int eta, int rho);
    static Scalar c_cubic(const Vector& x, int mu, int nu, int rho, int sigma);

    Matrix c_linear_matrix() const;
    Scalar c_cubic(int mu, int nu, int rho, int sigma) const { return c_cubic(particular, mu, nu, rho, sigma); }
};

/// Index of the unknown C_{mu nu}^rho_sigma for mu < nu.
std::size_t cubic_unknown(int mu, int nu, int rho, int sigma);

/// f_{mu nu}^{eta sigma} = eta_{mu sigma} delta_nu^eta - eta_{sigma nu} delta_mu^eta
Scalar f_inhom(int mu, int nu, int eta, int sigma, const Metric& metric = Metric::standard());

/// Exact solve of the 96 equations matching [M^_mn, P_sigma] to the isim(2)
/// brackets. Throws Inconsistent when no solution exists.
InhomSolution solve_inhomogeneous();

/// i (f C_lin + C_cubic) for a point x of the unknown space, as coefficients
/// over P0..P3.
Vector inhom_bracket(const Vector& x, IndexPair mn, int sigma);

/// Pairs (mn, sigma) where inhom_bracket(x) differs from the isim(2) bracket
/// of the aliased generator with P_sigma. Empty means all 24 brackets match.
std::vector<std::pair<IndexPair, int>> inhom_round_trip(const Vector& x);

/// Rank of the nullspace basis restricted to the C_eta^rho block. Equal to
/// nullspace.size() iff that projection is injective.
std::size_t inhom_projection_rank(const InhomSolution& solution);

} // namespace lieq

#include <doctest.h>

#include "lieq/catalog.hpp"
#include "support.hpp"

using namespace lieq;
using lieq_test::bracket_of;
using lieq_test::Gen;
using lieq_test::I;
using lieq_test::term;

namespace {

LieAlgebra abelian(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k)
        names.push_back("X" + std::to_string(k + 1));
    return verified(LieAlgebra("abelian", names, StructureTensor(n)));
}

// The printed table of the transformed Lorentz algebra, entered verbatim.
LieAlgebra printed_lorentz_t() {
    const std::vector<std::string> names{"T1", "T2", "J3", "K3", "Tt1", "Tt2"};
    StructureTensor t(6);
    auto at = [](std::size_t k, Scalar c) {
        Vector v(6);
        v[k] = c;
        return v;
    };
    t.set(0, 3, at(0, I));
    t.set(1, 3, at(1, I));
    t.set(0, 2, at(1, -I));
    t.set(1, 2, at(0, I));
    t.set(0, 4, at(3, Scalar(-2) * I));
    t.set(0, 5, at(2, Scalar(-2) * I));
    t.set(1, 4, at(2, Scalar(2) * I));
    t.set(1, 5, at(3, Scalar(-2) * I));
    t.set(4, 3, at(4, I));
    t.set(5, 3, at(5, I));
    t.set(4, 2, at(5, -I));
    t.set(5, 2, at(4, I));
    return LieAlgebra("printed", names, t);
}

} // namespace

TEST_CASE("structure tensor storage") {
    StructureTensor t(3);
    t.set(2, 0, Vector{Scalar(1), Scalar(0), Scalar(0)});
    CHECK(t.get(0, 2) == Vector{Scalar(-1), Scalar(0), Scalar(0)});
    CHECK(t.at(2, 0, 0) == Scalar(1));
    CHECK(lieq::is_zero(t.get(1, 1)));
    CHECK(t.entries().size() == 1);
    t.set(0, 2, Vector(3));
    CHECK(t.is_abelian());
    CHECK_THROWS_AS(t.set(1, 1, Vector(3)), InvalidArgument);
    CHECK_THROWS_AS(t.set(0, 1, Vector(2)), InvalidArgument);
}

TEST_CASE("algebra construction validates names") {
    CHECK_THROWS_AS(LieAlgebra("x", {"A", "A"}, StructureTensor(2)), InvalidArgument);
    CHECK_THROWS_AS(LieAlgebra("x", {"A"}, StructureTensor(2)), InvalidArgument);
    CHECK_THROWS_AS(LieAlgebra("x", {"A", ""}, StructureTensor(2)), InvalidArgument);
    const auto g = catalog("sim2");
    CHECK(g.index_of("K3") == 3);
    CHECK_THROWS_AS(g.index_of("P0"), InvalidArgument);
}

TEST_CASE("bracket examples") {
    const auto sim2 = catalog("sim2");
    CHECK(bracket_of(sim2, "T1", "K3") == term(sim2, "T1", I));
    for (std::size_t k = 0; k < sim2.dim(); ++k)
        CHECK(lieq::is_zero(sim2.tensor().get(k, k)));
    const auto lor = catalog("lorentz-jk");
    CHECK(bracket_of(lor, "J1", "J2") == term(lor, "J3", I));

    const auto x = AlgebraElement::basis(sim2, 0);
    const auto y = AlgebraElement::basis(sim2, 3);
    CHECK(bracket(x, y) == I * x);
    CHECK(bracket(x, y).to_string() == "i*T1");
    CHECK(bracket(x, x).is_zero());
    CHECK(AlgebraElement::zero(sim2).to_string() == "0");
    const auto other = catalog("sim2");
    CHECK_THROWS_AS(bracket(x, AlgebraElement::basis(other, 1)), AlgebraMismatch);
}

TEST_CASE("element bracket is bilinear and antisymmetric") {
    Gen gen(31337);
    const auto g = catalog("isim2");
    for (int n = 0; n < 50; ++n) {
        const AlgebraElement x(g, gen.vector(g.dim(), 4));
        const AlgebraElement y(g, gen.vector(g.dim(), 4));
        const AlgebraElement w(g, gen.vector(g.dim(), 4));
        const auto s = gen.scalar(4);
        CHECK(bracket(x, y) == Scalar(-1) * bracket(y, x));
        CHECK(bracket(s * x + w, y) == s * bracket(x, y) + bracket(w, y));
        const auto jac = bracket(bracket(x, y), w) + bracket(bracket(y, w), x) + bracket(bracket(w, x), y);
        CHECK(jac.is_zero());
    }
}

TEST_CASE("check_jacobi examples") {
    CHECK(check_jacobi(abelian(4)).passed);
    CHECK(check_jacobi(catalog("sim2")).passed);

    auto g = catalog("sim2");
    StructureTensor t = g.tensor();
    Vector v(4);
    v[0] = I;
    v[2] = I;
    t.set(0, 3, v);
    const LieAlgebra bad("bad", g.generators(), t);
    const auto report = check_jacobi(bad);
    CHECK_FALSE(report.passed);
    REQUIRE_FALSE(report.violations.empty());
    CHECK_FALSE(lieq_test::brute_force_jacobi(bad));
    for (const auto& viol : report.violations) {
        CHECK(viol.triple.i < viol.triple.j);
        CHECK(viol.triple.j < viol.triple.k);
        CHECK_FALSE(lieq::is_zero(viol.residual));
    }
    CHECK_FALSE(verified(bad).jacobi_verified());
}

TEST_CASE("catalog entries") {
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        const auto g = catalog(name);
        CHECK(g.jacobi_verified());
        CHECK(lieq_test::brute_force_jacobi(g));
        CHECK(g.name() == name);
    }
    const auto sim2 = catalog("sim2");
    CHECK(sim2.dim() == 4);
    CHECK(bracket_of(sim2, "T2", "J3") == term(sim2, "T1", I));
    const auto p11 = catalog("poincare11");
    CHECK(p11.dim() == 3);
    CHECK(lieq::is_zero(bracket_of(p11, "H", "P")));
    const auto gal = catalog("galilei");
    CHECK(gal.dim() == 10);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            CHECK(lieq::is_zero(bracket_of(gal, "d" + std::to_string(i), "b" + std::to_string(j))));
    CHECK(catalog("lorentz-jk").generators() == std::vector<std::string>{"J1", "J2", "J3", "K1", "K2", "K3"});
    CHECK(catalog("lorentz-t").generators() == std::vector<std::string>{"T1", "T2", "J3", "K3", "Tt1", "Tt2"});
    CHECK(catalog("isim2").generators() ==
          std::vector<std::string>{"T1", "T2", "J3", "K3", "P0", "P1", "P2", "P3"});
    CHECK_THROWS_AS(catalog("sl2"), UnknownAlgebra);
}

TEST_CASE("transform_basis to the T basis") {
    const auto lt = transform_basis(catalog("lorentz-jk"), lorentz_to_sim2_basis(),
                                    {"T1", "T2", "J3", "K3", "Tt1", "Tt2"});
    CHECK(lt == catalog("lorentz-t"));
    CHECK(lt.jacobi_verified());

    CHECK(lieq::is_zero(bracket_of(lt, "T1", "T2")));
    CHECK(lieq::is_zero(bracket_of(lt, "Tt1", "Tt2")));
    CHECK(bracket_of(lt, "T1", "Tt1") == term(lt, "K3", Scalar(-2) * I));
    CHECK(bracket_of(lt, "T1", "Tt2") == term(lt, "J3", Scalar(-2) * I));
    CHECK(bracket_of(lt, "T2", "Tt1") == term(lt, "J3", Scalar(2) * I));
    CHECK(bracket_of(lt, "T2", "Tt2") == term(lt, "K3", Scalar(-2) * I));
    CHECK(bracket_of(lt, "T1", "K3") == term(lt, "T1", I));
    CHECK(bracket_of(lt, "T2", "K3") == term(lt, "T2", I));
    CHECK(bracket_of(lt, "T1", "J3") == term(lt, "T2", -I));
    CHECK(bracket_of(lt, "T2", "J3") == term(lt, "T1", I));
    CHECK(bracket_of(lt, "Tt1", "J3") == term(lt, "Tt2", -I));
    CHECK(bracket_of(lt, "Tt2", "J3") == term(lt, "Tt1", I));
    // Opposite sign to the printed table.
    CHECK(bracket_of(lt, "Tt1", "K3") == term(lt, "Tt1", -I));
    CHECK(bracket_of(lt, "Tt2", "K3") == term(lt, "Tt2", -I));
}

TEST_CASE("the printed transformed table is not a Lie algebra") {
    const auto printed = printed_lorentz_t();
    CHECK_FALSE(check_jacobi(printed).passed);
    CHECK_FALSE(lieq_test::brute_force_jacobi(printed));
}

TEST_CASE("transform_basis edge cases") {
    const auto lor = catalog("lorentz-jk");
    CHECK(transform_basis(lor, Matrix::identity(6)) == lor);
    CHECK_THROWS_AS(transform_basis(lor, Matrix(6, 6)), SingularMap);
    CHECK_THROWS_AS(transform_basis(lor, Matrix::identity(5)), InvalidArgument);
    const auto perm = permutation_map(6, {3, 4, 5, 0, 1, 2});
    const auto swapped = transform_basis(lor, perm, {"K1", "K2", "K3", "J1", "J2", "J3"});
    CHECK(swapped.generators() == std::vector<std::string>{"K1", "K2", "K3", "J1", "J2", "J3"});
    CHECK(bracket_of(swapped, "K1", "K2") == term(swapped, "J3", -I));
}

TEST_CASE("random automorphisms preserve Jacobi") {
    Gen gen(9001);
    const auto lor = catalog("lorentz-jk");
    for (int n = 0; n < 12; ++n) {
        const auto u = gen.invertible_matrix(6, 3);
        const auto g = transform_basis(lor, u);
        CHECK(g.jacobi_verified());
        CHECK(lieq_test::brute_force_jacobi(g));
        auto inv = inverse(u);
        REQUIRE(inv.has_value());
        CHECK(transform_basis(g, *inv, lor.generators()) == lor);
    }
}

TEST_CASE("derived subalgebra") {
    CHECK(derived_subalgebra(abelian(3)).empty());
    const auto sim2 = catalog("sim2");
    const auto d = derived_subalgebra(sim2);
    REQUIRE(d.size() == 2);
    for (const auto& x : d) {
        CHECK(x.coefficients()[2].is_zero());
        CHECK(x.coefficients()[3].is_zero());
    }
    const auto lor = catalog("lorentz-jk");
    CHECK(derived_subalgebra(lor).size() == 6);
    // Oracle: rank of all 15 bracket vectors, reduced independently.
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j)
            rows.push_back(lor.tensor().get(i, j));
    CHECK(lieq_test::realified_rank(Matrix::from_rows(rows, 6)) == 6);
}

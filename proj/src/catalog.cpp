#include "lieq/catalog.hpp"

#include <functional>
#include <map>

namespace lieq {

namespace {

const Scalar kI = Scalar::i();

class Builder {
public:
    Builder(std::string name, std::vector<std::string> generators)
        : name_(std::move(name)), generators_(std::move(generators)), tensor_(generators_.size()) {}

    Builder& set(const std::string& a, const std::string& b,
                 const std::vector<std::pair<std::string, Scalar>>& terms) {
        Vector v(generators_.size());
        for (const auto& [g, c] : terms)
            v[index(g)] += c;
        tensor_.set(index(a), index(b), std::move(v));
        return *this;
    }

    LieAlgebra build() {
        LieAlgebra algebra = verified(LieAlgebra(name_, generators_, tensor_));
        if (!algebra.jacobi_verified())
            throw Error("catalog entry '" + name_ + "' fails the Jacobi identity");
        return algebra;
    }

private:
    std::size_t index(const std::string& g) const {
        for (std::size_t k = 0; k < generators_.size(); ++k)
            if (generators_[k] == g)
                return k;
        throw Error("catalog: unknown generator " + g);
    }

    std::string name_;
    std::vector<std::string> generators_;
    StructureTensor tensor_;
};

int levi_civita(int a, int b, int c) {
    // indices 0..2
    if (a == b || b == c || a == c)
        return 0;
    return ((a + 1) % 3 == b) ? 1 : -1;
}

LieAlgebra make_lorentz_jk() {
    const std::vector<std::string> J = {"J1", "J2", "J3"};
    const std::vector<std::string> K = {"K1", "K2", "K3"};
    Builder b("lorentz-jk", {"J1", "J2", "J3", "K1", "K2", "K3"});
    for (int p = 0; p < 3; ++p)
        for (int q = p + 1; q < 3; ++q) {
            const int k = 3 - p - q;
            const Scalar e(levi_civita(p, q, k));
            b.set(J[p], J[q], {{J[k], kI * e}});   // [J_i, J_j] = i eps J_k
            b.set(K[p], K[q], {{J[k], -kI * e}});  // [K_i, K_j] = -i eps J_k
        }
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) {
            if (p == q)
                continue;
            const int k = 3 - p - q;
            b.set(K[p], J[q], {{K[k], kI * Scalar(levi_civita(p, q, k))}}); // [K_i, J_j] = i eps K_k
        }
    return b.build();
}

// Brackets of T1, T2, J3, K3 shared by lorentz-t, sim2 and isim2.
void add_sim2_brackets(Builder& b) {
    b.set("T1", "K3", {{"T1", kI}});
    b.set("T2", "K3", {{"T2", kI}});
    b.set("T1", "J3", {{"T2", -kI}});
    b.set("T2", "J3", {{"T1", kI}});
}

LieAlgebra make_lorentz_t() {
    Builder b("lorentz-t", {"T1", "T2", "J3", "K3", "Tt1", "Tt2"});
    add_sim2_brackets(b);
    b.set("T1", "Tt1", {{"K3", Scalar(-2) * kI}});
    b.set("T1", "Tt2", {{"J3", Scalar(-2) * kI}});
    b.set("T2", "Tt1", {{"J3", Scalar(2) * kI}});
    b.set("T2", "Tt2", {{"K3", Scalar(-2) * kI}});
    b.set("Tt1", "K3", {{"Tt1", -kI}});
    b.set("Tt2", "K3", {{"Tt2", -kI}});
    b.set("Tt1", "J3", {{"Tt2", -kI}});
    b.set("Tt2", "J3", {{"Tt1", kI}});
    return b.build();
}

LieAlgebra make_sim2() {
    Builder b("sim2", {"T1", "T2", "J3", "K3"});
    add_sim2_brackets(b);
    return b.build();
}

LieAlgebra make_isim2() {
    Builder b("isim2", {"T1", "T2", "J3", "K3", "P0", "P1", "P2", "P3"});
    add_sim2_brackets(b);
    b.set("T1", "P0", {{"P1", kI}});
    b.set("T1", "P1", {{"P0", kI}, {"P3", -kI}});
    b.set("T1", "P3", {{"P1", kI}});
    b.set("T2", "P0", {{"P2", kI}});
    b.set("T2", "P2", {{"P0", kI}, {"P3", -kI}});
    b.set("T2", "P3", {{"P2", kI}});
    b.set("K3", "P0", {{"P3", kI}});
    b.set("K3", "P3", {{"P0", kI}});
    b.set("J3", "P1", {{"P2", kI}});
    b.set("J3", "P2", {{"P1", -kI}});
    return b.build();
}

LieAlgebra make_poincare31() {
    const std::vector<std::string> J = {"J1", "J2", "J3"};
    const std::vector<std::string> K = {"K1", "K2", "K3"};
    const std::vector<std::string> P = {"P1", "P2", "P3"};
    Builder b("poincare31", {"J1", "J2", "J3", "K1", "K2", "K3", "P1", "P2", "P3", "H"});
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) {
            if (p == q)
                continue;
            const int k = 3 - p - q;
            const Scalar e(levi_civita(p, q, k));
            if (p < q) {
                b.set(J[p], J[q], {{J[k], kI * e}});
                b.set(K[p], K[q], {{J[k], -kI * e}});
            }
            b.set(J[p], K[q], {{K[k], kI * e}});
            b.set(J[p], P[q], {{P[k], kI * e}});
        }
    for (int p = 0; p < 3; ++p) {
        b.set(K[p], P[p], {{"H", kI}});
        b.set(K[p], "H", {{P[p], kI}});
    }
    return b.build();
}

LieAlgebra make_poincare11() {
    Builder b("poincare11", {"H", "P", "K"});
    b.set("K", "H", {{"P", Scalar(1)}});
    b.set("K", "P", {{"H", Scalar(1)}});
    return b.build();
}

LieAlgebra make_galilei() {
    // a_ij (i < j) are the rotations; a_ji = -a_ij.
    Builder b("galilei", {"a12", "a13", "a23", "b1", "b2", "b3", "d1", "d2", "d3", "f"});
    auto rot = [](int i, int j) -> std::pair<std::string, Scalar> {
        if (i < j)
            return {"a" + std::to_string(i) + std::to_string(j), Scalar(1)};
        return {"a" + std::to_string(j) + std::to_string(i), Scalar(-1)};
    };
    auto delta = [](int x, int y) { return x == y ? 1 : 0; };
    const std::pair<int, int> pairs[] = {{1, 2}, {1, 3}, {2, 3}};
    for (std::size_t s = 0; s < 3; ++s)
        for (std::size_t t = s + 1; t < 3; ++t) {
            const auto [i, j] = pairs[s];
            const auto [k, l] = pairs[t];
            // [a_ij, a_kl] = d_jk a_il - d_ik a_jl + d_il a_jk - d_jl a_ik
            std::map<std::string, Scalar> acc;
            auto add = [&](int sign, int x, int y) {
                if (sign == 0 || x == y)
                    return;
                auto [g, c] = rot(x, y);
                acc[g] += Scalar(sign) * c;
            };
            add(delta(j, k), i, l);
            add(-delta(i, k), j, l);
            add(delta(i, l), j, k);
            add(-delta(j, l), i, k);
            std::vector<std::pair<std::string, Scalar>> terms(acc.begin(), acc.end());
            b.set(rot(i, j).first, rot(k, l).first, terms);
        }
    for (const auto& [i, j] : pairs) {
        const std::string a = rot(i, j).first;
        for (int k = 1; k <= 3; ++k) {
            // [a_ij, b_k] = d_jk b_i - d_ik b_j, same for d_k
            for (const char* family : {"b", "d"}) {
                const std::string bi = family + std::to_string(i);
                const std::string bj = family + std::to_string(j);
                const std::string bk = family + std::to_string(k);
                if (delta(j, k))
                    b.set(a, bk, {{bi, Scalar(1)}});
                else if (delta(i, k))
                    b.set(a, bk, {{bj, Scalar(-1)}});
            }
        }
    }
    for (int k = 1; k <= 3; ++k)
        b.set("d" + std::to_string(k), "f", {{"b" + std::to_string(k), Scalar(1)}});
    return b.build();
}

} // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {"lorentz-jk", "lorentz-t",  "sim2",   "isim2",
                                                   "poincare31", "poincare11", "galilei"};
    return names;
}

LieAlgebra catalog(const std::string& name) {
    static const std::map<std::string, std::function<LieAlgebra()>> makers = {
        {"lorentz-jk", make_lorentz_jk}, {"lorentz-t", make_lorentz_t},
        {"sim2", make_sim2},             {"isim2", make_isim2},
        {"poincare31", make_poincare31}, {"poincare11", make_poincare11},
        {"galilei", make_galilei},
    };
    auto it = makers.find(name);
    if (it == makers.end())
        throw UnknownAlgebra(name);
    return it->second();
}

LinearMap lorentz_to_sim2_basis() {
    // rows: T1, T2, J3, K3, Tt1, Tt2 over columns J1, J2, J3, K1, K2, K3
    const int a[6][6] = {
        {0, 1, 0, 1, 0, 0},  {-1, 0, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 1},  {0, -1, 0, 1, 0, 0}, {1, 0, 0, 0, 1, 0},
    };
    LinearMap m(6, 6);
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c)
            m(r, c) = Scalar(a[r][c]);
    return m;
}

} // namespace lieq

#pragma once

#include <string>
#include <vector>

#include "lieq/algebra.hpp"

namespace lieq {

/// Built-in algebras: lorentz-jk, lorentz-t, sim2, isim2, poincare31,
/// poincare11, galilei. Every entry is Jacobi-verified on construction.
/// Throws UnknownAlgebra for any other name.
LieAlgebra catalog(const std::string& name);

/// Catalog names in a fixed order.
const std::vector<std::string>& catalog_names();

/// Basis change from (J1,J2,J3,K1,K2,K3) to (T1,T2,J3,K3,Tt1,Tt2):
/// T1 = K1 + J2, T2 = K2 - J1, Tt1 = K1 - J2, Tt2 = K2 + J1.
LinearMap lorentz_to_sim2_basis();

} // namespace lieq

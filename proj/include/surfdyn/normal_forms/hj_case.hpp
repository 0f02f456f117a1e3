#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surfdyn/algebra/jet.hpp"

namespace surfdyn {

enum class HJGermKind { DiagonalPair, ResonantTriangular, AntiDiagonal, Infeasible };

const char* to_string(HJGermKind kind);

/// Shape forced on the linear part of a germ over C^2 / <(zeta z, zeta^q w)>
/// that satisfies f o gamma = gamma^k o f.
struct HJGermCase {
  HJGermKind kind = HJGermKind::Infeasible;
  /// 'a', 'b', 'c' or '-' for infeasible.
  char letter = '-';
  long m = 1, q = 0, k = 1;
  /// Exponent of the z^u term in the triangular form, q = u mod m.
  std::optional<int> u;
  /// Scalars of the form: (alpha, beta), or (alpha) with u.
  std::vector<std::string> parameters;
};

HJGermCase classify_hj_germ(long m, long q, long k);

/// Fills the parameters from a normal form and promotes a diagonal case to
/// ResonantTriangular when a z^u term with u = q mod m survives.
template <Scalar F>
HJGermCase refine_hj_case(HJGermCase c, const Jet<F>& normal_form) {
  if (c.kind == HJGermKind::Infeasible || normal_form.dimension() != 2) return c;
  const MonomialBasis& basis = normal_form.basis();
  const auto z = basis.unit_index(0), w = basis.unit_index(1);
  const auto str = [](const F& x) { return ScalarTraits<F>::to_string(x); };
  if (c.kind == HJGermKind::AntiDiagonal) {
    c.parameters = {str(normal_form.at(1, z)), str(normal_form.at(0, w))};
    return c;
  }
  for (int n = basis.degree_begin(2); n < basis.size(); ++n) {
    const MultiIndex& e = basis[n];
    if (e[1] != 0 || exactly_zero(normal_form.at(1, n))) continue;
    if (((e[0] - c.q) % c.m + c.m) % c.m == 0) {
      c.kind = HJGermKind::ResonantTriangular;
      c.u = e[0];
      c.parameters = {str(normal_form.at(0, z))};
      return c;
    }
  }
  c.parameters = {str(normal_form.at(0, z)), str(normal_form.at(1, w))};
  return c;
}

}  // namespace surfdyn

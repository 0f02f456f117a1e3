#pragma once

#include <cmath>
#include <vector>

#include "surfdyn/algebra/compose.hpp"
#include "surfdyn/normal_forms/resonance.hpp"

namespace surfdyn {

template <Scalar F>
struct KoenigsResult {
  /// (z, eta(z, w)).
  Jet<F> linearization;
  F alpha{};
  /// Number of iterates w o f^i used.
  int depth = 0;
  /// Exact mode combines the iterates so the truncation error vanishes identically.
  bool extrapolated = false;
  /// max |eta o f - alpha eta| through the order.
  double residual = 0.0;
};

namespace detail {

/// Checks the shape (z, alpha w (1 + eps)) with w | eps and returns alpha.
template <Scalar F>
F koenigs_multiplier(const Jet<F>& f, double tol) {
  require(f.dimension() == 2, ErrorCode::DimensionMismatch, "koenigs expects a germ in two variables");
  const MonomialBasis& basis = f.basis();
  const double ztol = ScalarTraits<F>::exact ? 0.0 : tol;
  for (int n = 1; n < basis.size(); ++n) {
    const F expected = n == basis.unit_index(0) ? scalar_from_int<F>(1) : F{};
    require(ScalarTraits<F>::is_zero(f.at(0, n) - expected, ztol), ErrorCode::InvalidInput,
            "first coordinate must be exactly z");
  }
  const F alpha = f.at(1, basis.unit_index(1));
  require(!ScalarTraits<F>::is_zero(alpha, ztol), ErrorCode::SingularLinearPart, "multiplier alpha vanishes");
  require(modulus_below_one(alpha), ErrorCode::NonAttracting, "|alpha| must be < 1");
  for (int n = 1; n < basis.size(); ++n) {
    if (n == basis.unit_index(1)) continue;
    // alpha w (1 + eps) with w | eps only has monomials z^a w^b with b >= 2.
    require(basis[n][1] >= 2 || ScalarTraits<F>::is_zero(f.at(1, n), ztol), ErrorCode::NotDivisible,
            "eps is not divisible by w (monomial " + basis[n].to_string() + ")");
  }
  return alpha;
}

}  // namespace detail

/// eta with eta o f = alpha eta and d eta / dw (z, 0) = 1, through `order`.
///
/// Exact mode: P_i = alpha^{-i} (w o f^i) satisfies P_{i+1} = T P_i for an
/// operator T whose eigenvalues on truncated series are alpha^{b-1}, b = 1..N.
/// eta is the eigenvalue-1 component of w, so eta = Q(T) w / Q(1) with
/// Q(x) = prod_{j=1}^{N-1} (x - alpha^j), using N iterates.
/// Floating mode: the product is truncated once C |alpha|^D < tol.
template <Scalar F>
KoenigsResult<F> koenigs(const Jet<F>& f, int order, double tol = kDefaultTolerance) {
  require(order >= 1, ErrorCode::InvalidInput, "order must be >= 1");
  require(f.order() >= order, ErrorCode::OrderUnderflow, "germ truncated below the requested order");
  const Jet<F> fn = f.with_order(order);
  KoenigsResult<F> out;
  out.alpha = detail::koenigs_multiplier(fn, tol);
  const F alpha_inv = scalar_from_int<F>(1) / out.alpha;
  const auto basis = fn.basis_ptr();

  Series<F> p(basis);
  p[basis->unit_index(1)] = scalar_from_int<F>(1);
  Series<F> eta(basis);

  if constexpr (ScalarTraits<F>::exact) {
    // Coefficients of Q, lowest degree first.
    std::vector<F> q{scalar_from_int<F>(1)};
    F alpha_j = out.alpha;
    for (int j = 1; j < order; ++j, alpha_j *= out.alpha) {
      std::vector<F> next(q.size() + 1, F{});
      for (std::size_t i = 0; i < q.size(); ++i) {
        next[i + 1] += q[i];
        next[i] -= alpha_j * q[i];
      }
      q = std::move(next);
    }
    F q_at_one{};
    for (const F& c : q) q_at_one += c;
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (i > 0) p = alpha_inv * substitute(p, fn, order);
      eta += q[i] * p;
    }
    eta *= scalar_from_int<F>(1) / q_at_one;
    out.depth = static_cast<int>(q.size());
    out.extrapolated = true;
  } else {
    double bound = 1.0;
    for (int n = 0; n < basis->size(); ++n)
      if (n != basis->unit_index(1)) bound += std::abs(fn.at(1, n)) / std::abs(out.alpha);
    const double rate = std::abs(out.alpha);
    int depth = 1;
    if (rate > 0.0) depth = std::max(1, static_cast<int>(std::ceil(std::log(tol / bound) / std::log(rate))));
    for (int i = 1; i < depth; ++i) p = alpha_inv * substitute(p, fn, order);
    eta = p;
    out.depth = depth;
  }

  Series<F> z(basis);
  z[basis->unit_index(0)] = scalar_from_int<F>(1);
  out.linearization = Jet<F>::from_coordinates({z, eta});
  out.residual = (substitute(eta, fn, order) - out.alpha * eta).max_abs();
  return out;
}

}  // namespace surfdyn

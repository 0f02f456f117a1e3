#pragma once

#include <numeric>
#include <vector>

#include "surfdyn/algebra/jet.hpp"

namespace surfdyn {

/// Cyclic group generated by gamma = Diag(zeta^{q_1}, ..., zeta^{q_d}) with
/// zeta a primitive p-th root of unity.
class DiagonalGroup {
 public:
  DiagonalGroup(long order, std::vector<long> weights) : order_(order), weights_(std::move(weights)) {
    require(order_ >= 1, ErrorCode::InvalidInput, "group order must be >= 1");
    require(!weights_.empty(), ErrorCode::InvalidInput, "group needs at least one weight");
    for (auto& q : weights_) q = ((q % order_) + order_) % order_;
  }

  static DiagonalGroup trivial(int dimension) { return DiagonalGroup(1, std::vector<long>(static_cast<std::size_t>(dimension), 0)); }

  long order() const noexcept { return order_; }
  int dimension() const noexcept { return static_cast<int>(weights_.size()); }
  const std::vector<long>& weights() const noexcept { return weights_; }
  long weight(int k) const { return weights_[static_cast<std::size_t>(k)]; }

  /// The action is effective iff gcd(q_1, ..., q_d, p) = 1.
  bool effective() const {
    long g = order_;
    for (long q : weights_) g = std::gcd(g, q);
    return g == 1;
  }

  /// zeta^0, ..., zeta^{p-1} in the requested scalar mode.
  template <Scalar F>
  std::vector<F> zeta_powers() const {
    std::vector<F> z;
    z.reserve(static_cast<std::size_t>(order_));
    for (long j = 0; j < order_; ++j) z.push_back(ScalarTraits<F>::root_of_unity(static_cast<int>(order_), j));
    return z;
  }

  long reduce(long e) const { return ((e % order_) + order_) % order_; }

  friend bool operator==(const DiagonalGroup&, const DiagonalGroup&) = default;

 private:
  long order_;
  std::vector<long> weights_;
};

enum class GroupSide {
  Pre,   ///< f o gamma^j
  Post,  ///< gamma^j o f
};

/// f o gamma^j (Pre) or gamma^j o f (Post), j taken mod p.
template <Scalar F>
Jet<F> apply_group(const Jet<F>& f, const DiagonalGroup& g, long j, GroupSide side) {
  require(f.dimension() == g.dimension(), ErrorCode::DimensionMismatch, "group and jet dimensions differ");
  const auto zeta = g.zeta_powers<F>();
  const MonomialBasis& basis = f.basis();
  Jet<F> out = f;
  for (int k = 0; k < f.dimension(); ++k) {
    for (int n = 1; n < basis.size(); ++n) {
      if (exactly_zero(f.at(k, n))) continue;
      const long e = side == GroupSide::Pre ? basis[n].dot(g.weights()) : g.weight(k);
      const long power = g.reduce(j * e);
      if (power != 0) out.set_at(k, n, f.at(k, n) * zeta[static_cast<std::size_t>(power)]);
    }
  }
  return out;
}

/// True iff x^n may appear in coordinate k of h with gamma^{-rho_out} o h o gamma^{rho_in} = h.
inline bool admits_monomial(const DiagonalGroup& g, const MultiIndex& n, int k, long rho_in, long rho_out) {
  return g.reduce(rho_in * n.dot(g.weights()) - rho_out * g.weight(k)) == 0;
}

/// (1/p) sum_j gamma^{-j rho_out} o h o gamma^{j rho_in}, summed literally.
template <Scalar F>
Jet<F> equivariant_average(const Jet<F>& h, const DiagonalGroup& g, long rho_in, long rho_out) {
  Jet<F> sum(h.dimension(), h.order());
  for (long j = 0; j < g.order(); ++j) {
    const Jet<F> inner = apply_group(h, g, j * rho_in, GroupSide::Pre);
    sum += apply_group(inner, g, -j * rho_out, GroupSide::Post);
  }
  return scalar_from_int<F>(1) / scalar_from_int<F>(g.order()) * sum;
}

/// Same projection as equivariant_average, computed by dropping the monomials
/// outside the equivariance lattice. Exact zeros in both scalar modes.
template <Scalar F>
Jet<F> project_equivariant(const Jet<F>& h, const DiagonalGroup& g, long rho_in, long rho_out) {
  require(h.dimension() == g.dimension(), ErrorCode::DimensionMismatch, "group and jet dimensions differ");
  Jet<F> out = h;
  const MonomialBasis& basis = h.basis();
  for (int k = 0; k < h.dimension(); ++k)
    for (int n = 1; n < basis.size(); ++n)
      if (!exactly_zero(h.at(k, n)) && !admits_monomial(g, basis[n], k, rho_in, rho_out)) out.set_at(k, n, F{});
  return out;
}

/// f o gamma - gamma^k o f.
template <Scalar F>
Jet<F> check_commutes(const Jet<F>& f, const DiagonalGroup& g, long k) {
  return apply_group(f, g, 1, GroupSide::Pre) - apply_group(f, g, k, GroupSide::Post);
}

template <Scalar F>
bool commutes(const Jet<F>& f, const DiagonalGroup& g, long k, double tol = kDefaultTolerance) {
  return check_commutes(f, g, k).is_zero(ScalarTraits<F>::exact ? 0.0 : tol);
}

}  // namespace surfdyn

#pragma once

#include <cmath>
#include <vector>

#include "surfdyn/algebra/diagonal_group.hpp"

namespace surfdyn {

/// |x|^2 < 1, decided exactly whenever |x|^2 is rational.
template <Scalar F>
bool modulus_below_one(const F& x) {
  if constexpr (ScalarTraits<F>::exact) {
    const Cyclotomic norm2 = x * x.conj();
    if (norm2.is_rational()) return norm2.rational_value() < 1;
  }
  return ScalarTraits<F>::abs(x) < 1.0;
}

template <Scalar F>
struct ResonanceReport {
  std::vector<F> eigenvalues;
  int order = 0;
  /// resonant[k] lists every n with 2 <= |n| <= order and lambda^n = lambda_k.
  std::vector<std::vector<MultiIndex>> resonant;
  bool all_clear = true;
  /// No resonance exists above this degree.
  int termination_degree = 1;
  /// True when termination_degree <= order, i.e. the list is complete in all degrees.
  bool exhaustive = true;

  bool is_resonant(int k, const MultiIndex& n) const {
    for (const auto& r : resonant[static_cast<std::size_t>(k)])
      if (r == n) return true;
    return false;
  }
};

namespace detail {

template <Scalar F>
void check_attracting(const std::vector<F>& lambda) {
  require(!lambda.empty(), ErrorCode::InvalidInput, "empty spectrum");
  for (const F& l : lambda) {
    require(!exactly_zero(l), ErrorCode::SingularLinearPart, "zero eigenvalue");
    require(modulus_below_one(l), ErrorCode::NonAttracting,
            "eigenvalue " + ScalarTraits<F>::to_string(l) + " has modulus >= 1");
  }
}

/// lambda^n for every monomial of the basis, built by one multiplication each.
template <Scalar F>
std::vector<F> spectrum_powers(const std::vector<F>& lambda, const MonomialBasis& basis) {
  std::vector<F> pw(static_cast<std::size_t>(basis.size()));
  pw[0] = scalar_from_int<F>(1);
  for (int idx = 1; idx < basis.size(); ++idx) {
    const MultiIndex& n = basis[idx];
    int j = 0;
    while (n[j] == 0) ++j;
    std::vector<int> e = n.exponents();
    --e[static_cast<std::size_t>(j)];
    pw[static_cast<std::size_t>(idx)] =
        pw[static_cast<std::size_t>(basis.index_of(MultiIndex(std::move(e))))] * lambda[static_cast<std::size_t>(j)];
  }
  return pw;
}

template <Scalar F>
bool same_scalar(const F& a, const F& b, double tol) {
  if constexpr (ScalarTraits<F>::exact)
    return a == b;
  else
    return std::abs(a - b) <= tol;
}

}  // namespace detail

/// Largest degree at which lambda^n = lambda_k is possible: |lambda^n| <= max^|n| must reach min.
inline int resonance_degree_bound(double min_modulus, double max_modulus) {
  if (max_modulus <= 0.0) return 1;
  const double ratio = std::log(min_modulus) / std::log(max_modulus);
  return std::max(1, static_cast<int>(std::floor(ratio + 1e-9)));
}

template <Scalar F>
ResonanceReport<F> resonances(const std::vector<F>& lambda, int order, double tol = kDefaultTolerance) {
  detail::check_attracting(lambda);
  require(order >= 1, ErrorCode::InvalidInput, "order must be >= 1");
  ResonanceReport<F> report;
  report.eigenvalues = lambda;
  report.order = order;
  report.resonant.assign(lambda.size(), {});

  double lo = 1.0, hi = 0.0;
  for (const F& l : lambda) {
    lo = std::min(lo, ScalarTraits<F>::abs(l));
    hi = std::max(hi, ScalarTraits<F>::abs(l));
  }
  report.termination_degree = resonance_degree_bound(lo, hi);
  report.exhaustive = report.termination_degree <= order;

  const int scan = std::min(order, report.termination_degree);
  if (scan < 2) return report;
  const auto basis = MonomialBasis::get(static_cast<int>(lambda.size()), scan);
  const auto pw = detail::spectrum_powers(lambda, *basis);
  for (int idx = basis->degree_begin(2); idx < basis->size(); ++idx)
    for (std::size_t k = 0; k < lambda.size(); ++k)
      if (detail::same_scalar(pw[static_cast<std::size_t>(idx)], lambda[k], tol)) {
        report.resonant[k].push_back((*basis)[idx]);
        report.all_clear = false;
      }
  return report;
}

/// x^n may appear in coordinate k of a germ commuting with the generator (twist 1).
inline bool equivariance_lattice(const DiagonalGroup& g, const MultiIndex& n, int k) {
  return admits_monomial(g, n, k, 1, 1);
}

}  // namespace surfdyn

#pragma once

// Reference computations kept independent of the Series/Jet machinery: sparse
// polynomials keyed by exponent vectors, naive products, exhaustive scans.

#include <functional>
#include <map>
#include <vector>

#include "surfdyn/algebra/jet.hpp"

namespace surfdyn::oracle {

template <Scalar F>
using SparsePoly = std::map<std::vector<int>, F>;

template <Scalar F>
SparsePoly<F> multiply(const SparsePoly<F>& a, const SparsePoly<F>& b, int order) {
  SparsePoly<F> out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      int deg = 0;
      for (std::size_t i = 0; i < e.size(); ++i) deg += (e[i] = ea[i] + eb[i]);
      if (deg > order) continue;
      out[e] += ca * cb;
    }
  return out;
}

template <Scalar F>
SparsePoly<F> coordinate_poly(const Jet<F>& f, int k) {
  SparsePoly<F> p;
  for (int n = 1; n < f.basis().size(); ++n)
    if (!exactly_zero(f.at(k, n))) p[f.basis()[n].exponents()] = f.at(k, n);
  return p;
}

/// Every (n, k) with 2 <= |n| <= order and lambda^n = lambda_k, by enumerating
/// exponent vectors recursively. Result indexed by k.
template <Scalar F>
std::vector<std::vector<std::vector<int>>> brute_force_resonances(const std::vector<F>& lambda, int order,
                                                                  double tol = kDefaultTolerance) {
  const int d = static_cast<int>(lambda.size());
  std::vector<std::vector<std::vector<int>>> out(lambda.size());
  std::vector<int> e(lambda.size(), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == d) {
      int deg = 0;
      for (int x : e) deg += x;
      if (deg < 2) return;
      F value = scalar_from_int<F>(1);
      for (int j = 0; j < d; ++j) value *= scalar_pow(lambda[static_cast<std::size_t>(j)], e[static_cast<std::size_t>(j)]);
      for (int k = 0; k < d; ++k) {
        const F diff = value - lambda[static_cast<std::size_t>(k)];
        const bool hit = ScalarTraits<F>::exact ? exactly_zero(diff) : ScalarTraits<F>::abs(diff) <= tol;
        if (hit) out[static_cast<std::size_t>(k)].push_back(e);
      }
      return;
    }
    for (int x = 0; x <= left; ++x) {
      e[static_cast<std::size_t>(i)] = x;
      rec(i + 1, left - x);
    }
    e[static_cast<std::size_t>(i)] = 0;
  };
  rec(0, order);
  return out;
}

/// Solves eta o f = alpha eta coefficient by coefficient for f = (z, alpha w (1 + eps)),
/// normalized by eta = w + O(w^2). Coefficients are fixed in increasing w-exponent.
template <Scalar F>
SparsePoly<F> koenigs_by_coefficients(const Jet<F>& f, int order) {
  const F alpha = f.at(1, f.basis().unit_index(1));
  const SparsePoly<F> f2 = coordinate_poly(f, 1);
  // powers[b] = f_2^b truncated.
  std::vector<SparsePoly<F>> powers{SparsePoly<F>{{{0, 0}, scalar_from_int<F>(1)}}};
  for (int b = 1; b <= order; ++b) powers.push_back(multiply(powers.back(), f2, order));

  SparsePoly<F> eta{{{0, 1}, scalar_from_int<F>(1)}};
  for (int b = 2; b <= order; ++b) {
    for (int a = 0; a + b <= order; ++a) {
      // [z^a w^b] of sum over known c_{a',b'} z^{a'} f_2^{b'}, b' < b.
      F known{};
      for (const auto& [e, c] : eta) {
        if (e[1] >= b || e[0] > a) continue;
        const auto it = powers[static_cast<std::size_t>(e[1])].find({a - e[0], b});
        if (it != powers[static_cast<std::size_t>(e[1])].end()) known += c * it->second;
      }
      if (exactly_zero(known)) continue;
      eta[{a, b}] = known / (alpha - scalar_pow(alpha, b));
    }
  }
  return eta;
}

}  // namespace surfdyn::oracle

#pragma once

#include <omp.h>

#include <vector>

#include "surfdyn/algebra/jet.hpp"

namespace surfdyn {

namespace detail {

template <Scalar F>
void check_compose_args(int f_dim, int f_order, const Jet<F>& g, int order) {
  require(order >= 1, ErrorCode::InvalidInput, "composition order must be >= 1");
  require(f_dim == g.dimension(), ErrorCode::DimensionMismatch, "composition of maps of different dimension");
  require(f_order >= order, ErrorCode::OrderUnderflow, "outer map truncated below the requested order");
  require(g.order() >= order, ErrorCode::OrderUnderflow, "inner map truncated below the requested order");
}

/// g^n for every monomial n flagged in `needed` (predecessor-closed), truncated
/// at `order`. Monomials of one degree only depend on the previous degree, so
/// each degree level is a parallel loop.
template <Scalar F>
std::vector<Series<F>> monomial_powers(const Jet<F>& g, int order, std::vector<char> needed) {
  const auto basis = MonomialBasis::get(g.dimension(), order);
  const int d = g.dimension();
  std::vector<int> predecessor(static_cast<std::size_t>(basis->size()), -1);
  std::vector<int> factor(static_cast<std::size_t>(basis->size()), -1);
  for (int idx = basis->size() - 1; idx >= basis->degree_begin(2); --idx) {
    const MultiIndex& n = (*basis)[idx];
    int j = 0;
    while (n[j] == 0) ++j;
    std::vector<int> e = n.exponents();
    --e[static_cast<std::size_t>(j)];
    predecessor[static_cast<std::size_t>(idx)] = basis->index_of(MultiIndex(std::move(e)));
    factor[static_cast<std::size_t>(idx)] = j;
    if (needed[static_cast<std::size_t>(idx)]) needed[static_cast<std::size_t>(predecessor[static_cast<std::size_t>(idx)])] = 1;
  }

  std::vector<Series<F>> table(static_cast<std::size_t>(basis->size()));
  table[0] = Series<F>(basis);
  table[0][0] = scalar_from_int<F>(1);
  std::vector<Series<F>> units;
  for (int k = 0; k < d; ++k) {
    units.push_back(g[k].with_order(order));
    table[static_cast<std::size_t>(basis->unit_index(k))] = units.back();
  }
  for (int e = 2; e <= order; ++e) {
    const int begin = basis->degree_begin(e);
    const int end = basis->degree_end(e);
#pragma omp parallel for schedule(dynamic) if (end - begin > 4)
    for (int idx = begin; idx < end; ++idx) {
      if (!needed[static_cast<std::size_t>(idx)]) continue;
      table[static_cast<std::size_t>(idx)] = table[static_cast<std::size_t>(predecessor[static_cast<std::size_t>(idx)])] *
                                             units[static_cast<std::size_t>(factor[static_cast<std::size_t>(idx)])];
    }
  }
  return table;
}

template <Scalar F>
Series<F> accumulate(const Series<F>& phi, const std::vector<Series<F>>& table,
                     const std::shared_ptr<const MonomialBasis>& basis) {
  Series<F> out(basis);
  const int limit = std::min(phi.size(), basis->size());
  std::vector<int> terms;
  for (int n = 0; n < limit; ++n)
    if (!exactly_zero(phi[n])) terms.push_back(n);
#pragma omp parallel for schedule(static) if (basis->size() > 64)
  for (int m = 0; m < basis->size(); ++m) {
    F acc{};
    for (int n : terms) {
      // g^n has no terms below degree |n|.
      if (basis->degree(n) > basis->degree(m)) break;
      const F& t = table[static_cast<std::size_t>(n)][m];
      if (!exactly_zero(t)) acc += phi[n] * t;
    }
    out[m] = std::move(acc);
  }
  return out;
}

}  // namespace detail

/// phi o g truncated at `order`, for a scalar series phi (constant term allowed).
template <Scalar F>
Series<F> substitute(const Series<F>& phi, const Jet<F>& g, int order) {
  detail::check_compose_args(phi.dimension(), phi.order(), g, order);
  const auto basis = MonomialBasis::get(g.dimension(), order);
  std::vector<char> needed(static_cast<std::size_t>(basis->size()), 0);
  for (int n = 0; n < basis->size(); ++n) needed[static_cast<std::size_t>(n)] = !exactly_zero(phi[n]);
  const auto table = detail::monomial_powers(g, order, std::move(needed));
  return detail::accumulate(phi, table, basis);
}

/// f o g truncated at `order`. Parallel kernel; see compose_reference.
template <Scalar F>
Jet<F> compose(const Jet<F>& f, const Jet<F>& g, int order) {
  detail::check_compose_args(f.dimension(), f.order(), g, order);
  const auto basis = MonomialBasis::get(g.dimension(), order);
  std::vector<char> needed(static_cast<std::size_t>(basis->size()), 0);
  for (int k = 0; k < f.dimension(); ++k)
    for (int n = 0; n < basis->size(); ++n)
      if (!exactly_zero(f[k][n])) needed[static_cast<std::size_t>(n)] = 1;
  const auto table = detail::monomial_powers(g, order, std::move(needed));
  std::vector<Series<F>> coords;
  for (int k = 0; k < f.dimension(); ++k) coords.push_back(detail::accumulate(f[k], table, basis));
  return Jet<F>::from_coordinates(std::move(coords));
}

template <Scalar F>
Jet<F> compose(const Jet<F>& f, const Jet<F>& g) {
  return compose(f, g, std::min(f.order(), g.order()));
}

/// Serial reference for compose: every monomial of f is expanded by repeated
/// multiplication, with no sharing between monomials.
template <Scalar F>
Jet<F> compose_reference(const Jet<F>& f, const Jet<F>& g, int order) {
  detail::check_compose_args(f.dimension(), f.order(), g, order);
  const auto basis = MonomialBasis::get(g.dimension(), order);
  std::vector<Series<F>> gs;
  for (int i = 0; i < g.dimension(); ++i) gs.push_back(g[i].with_order(order));
  std::vector<Series<F>> coords;
  for (int k = 0; k < f.dimension(); ++k) {
    Series<F> out(basis);
    for (int n = 1; n < basis->size(); ++n) {
      const F& c = f[k][n];
      if (exactly_zero(c)) continue;
      Series<F> term(basis);
      term[0] = c;
      const MultiIndex& mono = (*basis)[n];
      for (int i = 0; i < mono.dimension(); ++i)
        for (int t = 0; t < mono[i]; ++t) term = term * gs[static_cast<std::size_t>(i)];
      out += term;
    }
    coords.push_back(std::move(out));
  }
  return Jet<F>::from_coordinates(std::move(coords));
}

/// Formal inverse up to `order`: g with f o g = g o f = id + O(|x|^{order+1}).
template <Scalar F>
Jet<F> invert(const Jet<F>& f, int order, double tol = kDefaultTolerance) {
  require(f.order() >= order, ErrorCode::OrderUnderflow, "map truncated below the requested order");
  const auto a_inv = f.linear_part().inverse(tol);
  require(a_inv.has_value(), ErrorCode::SingularLinearPart, "linear part is not invertible");
  const Jet<F> f_n = f.with_order(order);
  const Jet<F> rest = f_n.nonlinear_part();
  const Jet<F> id = Jet<F>::identity(f.dimension(), order);
  // g <- A^{-1} (x - R(g)); each pass fixes one more degree.
  Jet<F> g = apply_linear(*a_inv, id);
  for (int pass = 1; pass < order; ++pass) {
    Jet<F> next = apply_linear(*a_inv, id - compose(rest, g, order));
    if (next == g) break;
    g = std::move(next);
  }
  return g;
}

}  // namespace surfdyn

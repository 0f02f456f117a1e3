#pragma once

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "surfdyn/algebra/diagonal_group.hpp"
#include "surfdyn/algebra/matrix.hpp"
#include "surfdyn/normal_forms/resonance.hpp"

namespace surfdyn {

/// Square root inside Q(zeta_4) of a rational number, when it is a rational
/// square up to sign.
inline std::optional<Cyclotomic> rational_square_root(const Cyclotomic& x) {
  if (!x.is_rational()) return std::nullopt;
  const mpq_class v = x.rational_value();
  const mpq_class a = abs(v);
  if (mpz_perfect_square_p(a.get_num_mpz_t()) == 0 || mpz_perfect_square_p(a.get_den_mpz_t()) == 0) return std::nullopt;
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), a.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), a.get_den_mpz_t());
  Cyclotomic root(mpq_class(num, den));
  if (v < 0) root *= Cyclotomic::root_of_unity(4, 1);
  return root;
}

/// Eigenvalues of A when they can be produced in the scalar field: any size in
/// floating mode, triangular matrices or 2x2 with a square discriminant in exact mode.
template <Scalar F>
std::optional<std::vector<F>> field_eigenvalues(const Matrix<F>& a) {
  const int n = a.rows();
  if constexpr (!ScalarTraits<F>::exact) {
    Eigen::MatrixXcd m(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m(r, c) = a(r, c);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
    if (solver.info() != Eigen::Success) return std::nullopt;
    std::vector<F> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    return out;
  } else {
    bool lower = true, upper = true;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        if (c > r && !exactly_zero(a(r, c))) lower = false;
        if (c < r && !exactly_zero(a(r, c))) upper = false;
      }
    if (lower || upper) return a.diagonal_entries();
    if (n != 2) return std::nullopt;
    const F tr = a(0, 0) + a(1, 1);
    const F det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    const auto root = rational_square_root(tr * tr - F(4) * det);
    if (!root) return std::nullopt;
    const F half(mpq_class(1, 2));
    return std::vector<F>{half * (tr + *root), half * (tr - *root)};
  }
}

namespace detail {

/// A nonzero kernel vector of m, or nullopt when m is invertible.
template <Scalar F>
std::optional<std::vector<F>> kernel_vector(Matrix<F> m, double tol) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int best = -1;
    double best_abs = ScalarTraits<F>::exact ? 0.0 : tol;
    for (int i = r; i < rows; ++i) {
      const double v = ScalarTraits<F>::abs(m(i, c));
      if (ScalarTraits<F>::exact ? !exactly_zero(m(i, c)) : v > best_abs) {
        best = i;
        best_abs = v;
        if constexpr (ScalarTraits<F>::exact) break;
      }
    }
    if (best < 0) continue;
    for (int j = 0; j < cols; ++j) std::swap(m(r, j), m(best, j));
    const F inv = scalar_from_int<F>(1) / m(r, c);
    for (int j = 0; j < cols; ++j) m(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || exactly_zero(m(i, c))) continue;
      const F factor = m(i, c);
      for (int j = 0; j < cols; ++j) m(i, j) -= factor * m(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  int free_col = -1;
  for (int c = 0; c < cols; ++c)
    if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) {
      free_col = c;
      break;
    }
  if (free_col < 0) return std::nullopt;
  std::vector<F> v(static_cast<std::size_t>(cols), F{});
  v[static_cast<std::size_t>(free_col)] = scalar_from_int<F>(1);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) {
    F value = -m(static_cast<int>(i), free_col);
    if constexpr (!ScalarTraits<F>::exact)
      if (std::abs(value) <= tol) value = F{};
    v[static_cast<std::size_t>(pivot_col[i])] = value;
  }
  return v;
}

}  // namespace detail

/// Linear change of coordinates P with P^{-1} A P diagonal and P commuting with
/// the group generator.
template <Scalar F>
struct LinearPrenormalization {
  Matrix<F> change;
  Matrix<F> inverse;
  std::vector<F> eigenvalues;
};

template <Scalar F>
std::optional<LinearPrenormalization<F>> diagonalize_equivariantly(const Matrix<F>& a, const DiagonalGroup& g,
                                                                   double tol = kDefaultTolerance) {
  const int n = a.rows();
  require(n == g.dimension(), ErrorCode::DimensionMismatch, "group and linear part dimensions differ");
  const auto eig = field_eigenvalues(a);
  if (!eig) return std::nullopt;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (detail::same_scalar((*eig)[static_cast<std::size_t>(i)], (*eig)[static_cast<std::size_t>(j)], tol))
        return std::nullopt;

  std::vector<std::vector<F>> vectors;
  for (const F& l : *eig) {
    Matrix<F> shifted = a;
    for (int i = 0; i < n; ++i) shifted(i, i) -= l;
    auto v = detail::kernel_vector(shifted, ScalarTraits<F>::exact ? 0.0 : 1e3 * tol);
    if (!v) return std::nullopt;
    vectors.push_back(std::move(*v));
  }

  // Column j must be an eigenvector of the generator for zeta^{q_j}; among the
  // admissible orderings take the first one with a nonzero diagonal.
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<std::vector<int>> chosen;
  bool chosen_has_diagonal = false;
  do {
    bool ok = true, diagonal = true;
    for (int j = 0; j < n && ok; ++j) {
      const auto& v = vectors[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
      for (int i = 0; i < n; ++i)
        if (!exactly_zero(v[static_cast<std::size_t>(i)]) && g.weight(i) != g.weight(j)) ok = false;
      if (exactly_zero(v[static_cast<std::size_t>(j)])) diagonal = false;
    }
    if (ok && (!chosen || (diagonal && !chosen_has_diagonal))) {
      chosen = perm;
      chosen_has_diagonal = diagonal;
      if (diagonal) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!chosen) return std::nullopt;

  LinearPrenormalization<F> out{Matrix<F>(n, n), Matrix<F>(n, n), {}};
  for (int j = 0; j < n; ++j) {
    const std::size_t src = static_cast<std::size_t>((*chosen)[static_cast<std::size_t>(j)]);
    const auto& v = vectors[src];
    F scale = scalar_from_int<F>(1);
    if (!exactly_zero(v[static_cast<std::size_t>(j)])) scale = scalar_from_int<F>(1) / v[static_cast<std::size_t>(j)];
    for (int i = 0; i < n; ++i) out.change(i, j) = v[static_cast<std::size_t>(i)] * scale;
    out.eigenvalues.push_back((*eig)[src]);
  }
  const auto inv = out.change.inverse(tol);
  if (!inv) return std::nullopt;
  out.inverse = *inv;
  return out;
}

}  // namespace surfdyn

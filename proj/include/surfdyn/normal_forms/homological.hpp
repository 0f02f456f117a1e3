#pragma once

#include "surfdyn/algebra/compose.hpp"
#include "surfdyn/normal_forms/resonance.hpp"

namespace surfdyn {

template <Scalar F>
struct HomologicalSplit {
  Jet<F> resonant;   ///< S
  Jet<F> transform;  ///< H
};

/// H o A - A o H for a homogeneous H and linear A, kept at H's order.
template <Scalar F>
Jet<F> homological_operator(const Jet<F>& h, const Matrix<F>& a) {
  const Jet<F> lin = Jet<F>::linear(a, h.order());
  return compose(h, lin, h.order()) - apply_linear(a, h);
}

/// Splits a homogeneous part G into S + H o A - A o H for diagonal A. Resonance
/// is read from `report` when given, otherwise decided on the spot.
template <Scalar F>
HomologicalSplit<F> homological_split(const Jet<F>& g_hom, const Matrix<F>& a, double tol = kDefaultTolerance,
                                      const ResonanceReport<F>* report = nullptr) {
  require(a.rows() == g_hom.dimension() && a.cols() == g_hom.dimension(), ErrorCode::DimensionMismatch,
          "linear part and homogeneous part have different dimensions");
  require(a.is_diagonal(ScalarTraits<F>::exact ? 0.0 : tol), ErrorCode::Unsupported,
          "homological_split needs a diagonal linear part");
  const std::vector<F> lambda = a.diagonal_entries();
  const MonomialBasis& basis = g_hom.basis();
  const auto pw = detail::spectrum_powers(lambda, basis);

  HomologicalSplit<F> out{Jet<F>(g_hom.dimension(), g_hom.order()), Jet<F>(g_hom.dimension(), g_hom.order())};
  for (int k = 0; k < g_hom.dimension(); ++k) {
    for (int n = 1; n < basis.size(); ++n) {
      const F& c = g_hom.at(k, n);
      if (exactly_zero(c)) continue;
      const F denom = pw[static_cast<std::size_t>(n)] - lambda[static_cast<std::size_t>(k)];
      const bool vanishes = ScalarTraits<F>::exact ? exactly_zero(denom) : std::abs(ScalarTraits<F>::to_complex(denom)) <= tol;
      bool resonant = vanishes;
      if (report != nullptr && basis.degree(n) >= 2) {
        resonant = report->is_resonant(k, basis[n]);
        require(resonant || !vanishes, ErrorCode::ResonanceInconsistency,
                "vanishing denominator at non-resonant monomial " + basis[n].to_string());
      }
      if (resonant)
        out.resonant.set_at(k, n, c);
      else
        out.transform.set_at(k, n, c / denom);
    }
  }
  return out;
}

/// H with H o A - A o H = G (degree-d part) for arbitrary invertible A, by a
/// linear solve on the degree-d monomials. Throws Unsupported when singular.
template <Scalar F>
Jet<F> solve_homological(const Jet<F>& g_hom, const Matrix<F>& a, int degree, double tol = kDefaultTolerance) {
  const int dim = g_hom.dimension();
  const MonomialBasis& basis = g_hom.basis();
  const int begin = basis.degree_begin(degree);
  const int width = basis.degree_end(degree) - begin;
  const int unknowns = dim * width;
  Matrix<F> lmat(unknowns, unknowns);
  Matrix<F> rhs(unknowns, 1);
  for (int k = 0; k < dim; ++k) {
    for (int n = 0; n < width; ++n) {
      Jet<F> e(dim, degree);
      e.set_at(k, begin + n, scalar_from_int<F>(1));
      const Jet<F> image = homological_operator(e, a);
      for (int k2 = 0; k2 < dim; ++k2)
        for (int n2 = 0; n2 < width; ++n2) lmat(k2 * width + n2, k * width + n) = image.at(k2, begin + n2);
    }
    for (int n = 0; n < width; ++n) rhs(k * width + n, 0) = g_hom.at(k, begin + n);
  }
  const auto sol = Matrix<F>::solve(lmat, rhs, tol);
  require(sol.has_value(), ErrorCode::Unsupported,
          "resonant degree " + std::to_string(degree) + " with a non-diagonal linear part is not supported");
  Jet<F> h(dim, g_hom.order());
  for (int k = 0; k < dim; ++k)
    for (int n = 0; n < width; ++n) h.set_at(k, begin + n, (*sol)(k * width + n, 0));
  return h;
}

}  // namespace surfdyn

#pragma once

#include <numeric>
#include <optional>
#include <string>

#include "surfdyn/algebra/compose.hpp"
#include "surfdyn/normal_forms/homological.hpp"
#include "surfdyn/normal_forms/linear.hpp"
#include "surfdyn/normal_forms/resonance.hpp"

namespace surfdyn {

enum class NormalizationPath {
  Diagonal,       ///< linear part already diagonal
  Prenormalized,  ///< diagonalized by a recorded linear change commuting with the group
  ResonanceFree,  ///< non-diagonal linear part, full linearization by exact linear solves
};

inline const char* to_string(NormalizationPath p) {
  switch (p) {
    case NormalizationPath::Diagonal: return "diagonal";
    case NormalizationPath::Prenormalized: return "prenormalized";
    case NormalizationPath::ResonanceFree: return "resonance-free";
  }
  return "?";
}

template <Scalar F>
struct NormalFormResult {
  Jet<F> normal_form;
  /// Identity linear part; conjugates the (pre-normalized) germ to normal_form.
  Jet<F> conjugacy;
  /// P with P^{-1} o df(0) o P diagonal, when a pre-normalization was applied.
  std::optional<Matrix<F>> prenormalization;
  /// conjugacy o P^{-1}: full_conjugacy o f = normal_form o full_conjugacy.
  Jet<F> full_conjugacy;
  double residual_norm = 0.0;
  double normal_form_commutation = 0.0;
  double conjugacy_commutation = 0.0;
  DiagonalGroup group = DiagonalGroup::trivial(1);
  long k_twist = 1;
  NormalizationPath path = NormalizationPath::Diagonal;
  std::optional<ResonanceReport<F>> resonance;
};

namespace detail {

/// Complex spectrum of a linear part in either mode, for the attracting test.
template <Scalar F>
std::vector<std::complex<double>> complex_spectrum(const Matrix<F>& a) {
  Matrix<FloatScalar> m(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m(r, c) = ScalarTraits<F>::to_complex(a(r, c));
  auto eig = field_eigenvalues(m);
  require(eig.has_value(), ErrorCode::Internal, "eigenvalue solver failed");
  return *eig;
}

template <Scalar F>
void clean(Jet<F>& j, double tol) {
  if constexpr (!ScalarTraits<F>::exact) {
    for (int k = 0; k < j.dimension(); ++k)
      for (int n = 0; n < j.basis().size(); ++n)
        if (j.at(k, n) != F{} && std::abs(j.at(k, n)) <= tol * 1e-3) j.set_at(k, n, F{});
  } else {
    (void)j;
    (void)tol;
  }
}

/// Projects onto the equivariant part; in exact mode the input must already lie there.
template <Scalar F>
Jet<F> enforce_equivariance(const Jet<F>& h, const DiagonalGroup& g, long rho_out, const char* what) {
  Jet<F> p = project_equivariant(h, g, 1, rho_out);
  if constexpr (ScalarTraits<F>::exact)
    require(p == h, ErrorCode::Internal, std::string(what) + " left the equivariant subspace");
  return p;
}

}  // namespace detail

/// Gamma-equivariant Poincare-Dulac normalization of f through order N.
template <Scalar F>
NormalFormResult<F> poincare_dulac(const Jet<F>& f, const DiagonalGroup& g, long k_twist, int order,
                                   double tol = kDefaultTolerance) {
  require(order >= 1, ErrorCode::InvalidInput, "order must be >= 1");
  require(f.dimension() == g.dimension(), ErrorCode::DimensionMismatch, "group and germ dimensions differ");
  require(f.order() >= order, ErrorCode::OrderUnderflow, "germ truncated below the requested order");
  const long k = g.reduce(k_twist);
  require(std::gcd(k, g.order()) == 1, ErrorCode::InvalidInput, "twist must be prime to the group order");
  const double ztol = ScalarTraits<F>::exact ? 0.0 : tol;
  require(commutes(f, g, k, tol), ErrorCode::NotCommuting, "germ does not satisfy f o gamma = gamma^k o f");

  const int dim = f.dimension();
  const Matrix<F> a = f.linear_part();
  require(a.inverse(tol).has_value(), ErrorCode::SingularLinearPart, "linear part is not invertible");
  for (const auto& l : detail::complex_spectrum(a))
    require(std::abs(l) < 1.0, ErrorCode::NonAttracting, "linear part has an eigenvalue of modulus >= 1");

  NormalFormResult<F> out;
  out.group = g;
  out.k_twist = k;
  Jet<F> work = f.with_order(order);
  Matrix<F> d = a;
  std::optional<Matrix<F>> pre_inverse;
  if (a.is_diagonal(ztol)) {
    out.path = NormalizationPath::Diagonal;
  } else if (auto pre = diagonalize_equivariantly(a, g, tol)) {
    out.path = NormalizationPath::Prenormalized;
    out.prenormalization = pre->change;
    pre_inverse = pre->inverse;
    work = apply_linear(pre->inverse, compose(work, Jet<F>::linear(pre->change, order), order));
    d = Matrix<F>::diagonal(pre->eigenvalues);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) work.set_at(i, work.basis().unit_index(j), d(i, j));
  } else {
    out.path = NormalizationPath::ResonanceFree;
  }

  const ResonanceReport<F>* report = nullptr;
  if (out.path != NormalizationPath::ResonanceFree) {
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if (i != j) d(i, j) = F{};
    out.resonance = resonances(d.diagonal_entries(), order, tol);
    report = &*out.resonance;
  }

  const Jet<F> id = Jet<F>::identity(dim, order);
  Jet<F> phi = id;
  for (int deg = 2; deg <= order; ++deg) {
    const Jet<F> g_hom = work.homogeneous_part(deg);
    if (g_hom.is_zero()) continue;
    Jet<F> s(dim, order), h(dim, order);
    if (report != nullptr) {
      auto split = homological_split(g_hom, d, tol, report);
      s = detail::enforce_equivariance(split.resonant, g, k, "resonant part");
      h = detail::enforce_equivariance(split.transform, g, 1, "homological solution");
    } else {
      h = detail::enforce_equivariance(solve_homological(g_hom, a, deg, tol), g, 1, "homological solution");
    }
    if (h.is_zero()) continue;
    const Jet<F> psi = id - h;
    const Jet<F> psi_inv = invert(psi, order, tol);
    work = compose(psi, compose(work, psi_inv, order), order);
    phi = compose(psi, phi, order);
    // The conjugated degree-deg part is S; in exact mode this is a check.
    const Jet<F> new_hom = work.homogeneous_part(deg);
    if constexpr (ScalarTraits<F>::exact)
      require(new_hom == s, ErrorCode::Internal, "conjugation did not remove the non-resonant terms");
    work = work - new_hom + s;
    detail::clean(work, tol);
  }

  out.normal_form = work;
  out.conjugacy = phi;
  out.full_conjugacy = pre_inverse ? compose(phi, Jet<F>::linear(*pre_inverse, order), order) : phi;
  out.residual_norm =
      (compose(out.full_conjugacy, f.with_order(order), order) - compose(out.normal_form, out.full_conjugacy, order)).max_abs();
  out.normal_form_commutation = check_commutes(out.normal_form, g, k).max_abs();
  out.conjugacy_commutation = check_commutes(out.full_conjugacy, g, 1).max_abs();
  return out;
}

}  // namespace surfdyn

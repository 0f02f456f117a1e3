#pragma once

#include <memory>
#include <vector>

#include "surfdyn/algebra/matrix.hpp"
#include "surfdyn/algebra/series.hpp"

namespace surfdyn {

/// Truncated self-map of d-dimensional space fixing the origin: the
/// computational stand-in for a holomorphic germ. Coordinate k is a Series
/// over the shared monomial basis; the constant term is always zero.
template <Scalar F>
class Jet {
 public:
  Jet() = default;
  Jet(int dimension, int order) : basis_(MonomialBasis::get(dimension, order)) {
    require(order >= 1, ErrorCode::InvalidInput, "jet order must be >= 1");
    coords_.assign(static_cast<std::size_t>(dimension), Series<F>(basis_));
  }

  static Jet identity(int dimension, int order) {
    Jet j(dimension, order);
    for (int k = 0; k < dimension; ++k) j.coords_[static_cast<std::size_t>(k)][j.basis_->unit_index(k)] = scalar_from_int<F>(1);
    return j;
  }

  static Jet linear(const Matrix<F>& a, int order) {
    require(a.rows() == a.cols(), ErrorCode::DimensionMismatch, "linear part must be square");
    Jet j(a.rows(), order);
    for (int k = 0; k < a.rows(); ++k)
      for (int i = 0; i < a.cols(); ++i) j.coords_[static_cast<std::size_t>(k)][j.basis_->unit_index(i)] = a(k, i);
    return j;
  }

  static Jet from_coordinates(std::vector<Series<F>> coords) {
    require(!coords.empty(), ErrorCode::InvalidInput, "jet needs at least one coordinate");
    Jet j;
    j.basis_ = coords.front().basis_ptr();
    for (const auto& c : coords) {
      require(c.dimension() == j.basis_->dimension() && c.order() == j.basis_->order(), ErrorCode::DimensionMismatch,
              "coordinate series bases differ");
      require(exactly_zero(c[0]), ErrorCode::InvalidInput, "jet coordinates must vanish at the origin");
    }
    require(static_cast<int>(coords.size()) == j.basis_->dimension(), ErrorCode::DimensionMismatch,
            "a self-map needs one coordinate per variable");
    j.coords_ = std::move(coords);
    return j;
  }

  int dimension() const { return basis_->dimension(); }
  int order() const { return basis_->order(); }
  const MonomialBasis& basis() const { return *basis_; }
  const std::shared_ptr<const MonomialBasis>& basis_ptr() const { return basis_; }

  const Series<F>& operator[](int k) const { return coords_[static_cast<std::size_t>(k)]; }
  const std::vector<Series<F>>& coordinates() const { return coords_; }

  F coeff(int k, const MultiIndex& n) const { return coords_[static_cast<std::size_t>(k)].coeff(n); }
  void set(int k, const MultiIndex& n, F value) {
    require(k >= 0 && k < dimension(), ErrorCode::DimensionMismatch, "coordinate out of range");
    require(n.degree() >= 1, ErrorCode::InvalidInput, "jets have no constant term");
    coords_[static_cast<std::size_t>(k)].set(n, std::move(value));
  }
  /// Direct coefficient access by basis index (index 0, the constant, is never set).
  const F& at(int k, int index) const { return coords_[static_cast<std::size_t>(k)][index]; }
  void set_at(int k, int index, F value) {
    require(index > 0, ErrorCode::InvalidInput, "jets have no constant term");
    coords_[static_cast<std::size_t>(k)][index] = std::move(value);
  }

  Matrix<F> linear_part() const {
    Matrix<F> a(dimension(), dimension());
    for (int k = 0; k < dimension(); ++k)
      for (int i = 0; i < dimension(); ++i) a(k, i) = at(k, basis_->unit_index(i));
    return a;
  }

  Jet with_order(int order) const {
    Jet out(dimension(), order);
    for (int k = 0; k < dimension(); ++k) out.coords_[static_cast<std::size_t>(k)] = coords_[static_cast<std::size_t>(k)].with_order(order);
    return out;
  }

  Jet homogeneous_part(int degree) const {
    Jet out(dimension(), order());
    for (int k = 0; k < dimension(); ++k) out.coords_[static_cast<std::size_t>(k)] = coords_[static_cast<std::size_t>(k)].homogeneous(degree);
    return out;
  }

  /// Terms of degree >= 2.
  Jet nonlinear_part() const {
    Jet out = *this;
    for (auto& c : out.coords_)
      for (int i = basis_->degree_begin(1); i < basis_->degree_end(1); ++i) c[i] = F{};
    return out;
  }

  bool is_zero(double tol = 0.0) const {
    for (const auto& c : coords_)
      if (!c.is_zero(tol)) return false;
    return true;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& c : coords_) m = std::max(m, c.max_abs());
    return m;
  }

  Jet& operator+=(const Jet& rhs) {
    check_compatible(rhs);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += rhs.coords_[k];
    return *this;
  }
  Jet& operator-=(const Jet& rhs) {
    check_compatible(rhs);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= rhs.coords_[k];
    return *this;
  }
  Jet& operator*=(const F& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const F& s, Jet a) { return a *= s; }

  friend bool operator==(const Jet& a, const Jet& b) { return a.coords_ == b.coords_; }

 private:
  void check_compatible(const Jet& rhs) const {
    require(dimension() == rhs.dimension(), ErrorCode::DimensionMismatch, "jet dimensions differ");
    require(order() == rhs.order(), ErrorCode::OrderUnderflow, "jet orders differ");
  }

  std::shared_ptr<const MonomialBasis> basis_;
  std::vector<Series<F>> coords_;
};

/// A * f: mixes the coordinates of f by a constant matrix.
template <Scalar F>
Jet<F> apply_linear(const Matrix<F>& a, const Jet<F>& f) {
  require(a.cols() == f.dimension() && a.rows() == f.dimension(), ErrorCode::DimensionMismatch, "apply_linear shape");
  std::vector<Series<F>> coords;
  for (int k = 0; k < a.rows(); ++k) {
    Series<F> s(f.basis_ptr());
    for (int i = 0; i < a.cols(); ++i)
      if (!exactly_zero(a(k, i))) s += f[i] * a(k, i);
    coords.push_back(std::move(s));
  }
  return Jet<F>::from_coordinates(std::move(coords));
}

}  // namespace surfdyn

#pragma once

#include <algorithm>
#include <memory>
#include <vector>

#include "surfdyn/algebra/multi_index.hpp"
#include "surfdyn/algebra/scalar.hpp"
#include "surfdyn/error.hpp"

namespace surfdyn {

template <Scalar F>
bool exactly_zero(const F& x) {
  return ScalarTraits<F>::is_zero(x, 0.0);
}

/// Truncated power series in d variables: dense coefficients over the
/// graded basis of all monomials of degree <= order.
template <Scalar F>
class Series {
 public:
  Series() = default;
  explicit Series(std::shared_ptr<const MonomialBasis> basis)
      : basis_(std::move(basis)), c_(static_cast<std::size_t>(basis_->size()), F{}) {}
  Series(int dimension, int order) : Series(MonomialBasis::get(dimension, order)) {}

  const MonomialBasis& basis() const { return *basis_; }
  const std::shared_ptr<const MonomialBasis>& basis_ptr() const { return basis_; }
  int dimension() const { return basis_->dimension(); }
  int order() const { return basis_->order(); }
  int size() const { return basis_->size(); }

  const F& operator[](int index) const { return c_[static_cast<std::size_t>(index)]; }
  F& operator[](int index) { return c_[static_cast<std::size_t>(index)]; }

  F coeff(const MultiIndex& n) const {
    const int idx = basis_->index_of(n);
    return idx < 0 ? F{} : c_[static_cast<std::size_t>(idx)];
  }
  void set(const MultiIndex& n, F value) {
    const int idx = basis_->index_of(n);
    require(idx >= 0, ErrorCode::OrderUnderflow, "monomial " + n.to_string() + " exceeds truncation order");
    c_[static_cast<std::size_t>(idx)] = std::move(value);
  }

  bool is_zero(double tol = 0.0) const {
    return std::all_of(c_.begin(), c_.end(), [tol](const F& x) { return ScalarTraits<F>::is_zero(x, tol); });
  }

  double max_abs() const {
    double m = 0.0;
    for (const F& x : c_) m = std::max(m, ScalarTraits<F>::abs(x));
    return m;
  }

  /// Lowest degree carrying a non-zero coefficient; order() + 1 for zero.
  int min_degree() const {
    for (int i = 0; i < size(); ++i)
      if (!exactly_zero(c_[static_cast<std::size_t>(i)])) return basis_->degree(i);
    return order() + 1;
  }

  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 0; i < size(); ++i)
      if (!exactly_zero(c_[static_cast<std::size_t>(i)])) s.push_back(i);
    return s;
  }

  /// Same series re-expressed over the basis of another order (dropping or zero-padding).
  Series with_order(int order) const {
    Series out(MonomialBasis::get(dimension(), order));
    const int n = std::min(size(), out.size());
    for (int i = 0; i < n; ++i) out.c_[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)];
    return out;
  }

  Series homogeneous(int degree) const {
    Series out(basis_);
    if (degree > order()) return out;
    for (int i = basis_->degree_begin(degree); i < basis_->degree_end(degree); ++i)
      out.c_[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)];
    return out;
  }

  Series& operator+=(const Series& rhs) {
    check_same_basis(rhs);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!exactly_zero(rhs.c_[i])) c_[i] += rhs.c_[i];
    return *this;
  }
  Series& operator-=(const Series& rhs) {
    check_same_basis(rhs);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!exactly_zero(rhs.c_[i])) c_[i] -= rhs.c_[i];
    return *this;
  }
  Series& operator*=(const F& s) {
    for (auto& x : c_)
      if (!exactly_zero(x)) x *= s;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const F& s) { return a *= s; }
  friend Series operator*(const F& s, Series a) { return a *= s; }

  /// Truncated product: terms of total degree > order() are dropped.
  friend Series operator*(const Series& a, const Series& b) {
    a.check_same_basis(b);
    const MonomialBasis& basis = *a.basis_;
    const int order = basis.order();
    Series out(a.basis_);
    const std::vector<int> sb = b.support();
    if (sb.empty()) return out;
    const int b_min = basis.degree(sb.front());
    for (int i = 0; i < a.size(); ++i) {
      const F& ai = a.c_[static_cast<std::size_t>(i)];
      if (exactly_zero(ai)) continue;
      const int room = order - basis.degree(i);
      if (room < b_min) break;
      const int limit = basis.degree_end(room);
      for (int j : sb) {
        if (j >= limit) break;
        out.c_[static_cast<std::size_t>(basis.product(i, j))] += ai * b.c_[static_cast<std::size_t>(j)];
      }
    }
    return out;
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.basis_->dimension() == b.basis_->dimension() && a.order() == b.order() && a.c_ == b.c_;
  }

 private:
  void check_same_basis(const Series& rhs) const {
    require(basis_->dimension() == rhs.basis_->dimension() && basis_->order() == rhs.basis_->order(),
            ErrorCode::DimensionMismatch, "series bases differ");
  }

  std::shared_ptr<const MonomialBasis> basis_;
  std::vector<F> c_;
};

}  // namespace surfdyn

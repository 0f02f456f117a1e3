#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace surfdyn {

/// Exponent vector n of a monomial x^n = x_1^{n_1} ... x_d^{n_d}.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents);
  static MultiIndex unit(int dimension, int coordinate);

  int dimension() const noexcept { return static_cast<int>(exponents_.size()); }
  int degree() const noexcept { return degree_; }
  int operator[](int i) const { return exponents_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& exponents() const noexcept { return exponents_; }

  MultiIndex operator+(const MultiIndex& other) const;
  /// q . n, the weight of x^n under Diag(zeta^{q_1}, ..., zeta^{q_d}).
  long dot(std::span<const long> weights) const;

  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> exponents_;
  int degree_ = 0;
};

/// All monomials of degree <= order in `dimension` variables, graded and
/// lexicographically descending inside each degree (x_1^k first). Index 0
/// is the constant monomial. Shared per (dimension, order).
class MonomialBasis {
 public:
  static std::shared_ptr<const MonomialBasis> get(int dimension, int order);

  int dimension() const noexcept { return dimension_; }
  int order() const noexcept { return order_; }
  int size() const noexcept { return static_cast<int>(monomials_.size()); }
  const MultiIndex& operator[](int index) const { return monomials_[static_cast<std::size_t>(index)]; }
  int degree(int index) const { return monomials_[static_cast<std::size_t>(index)].degree(); }

  /// First index of degree d; degree_begin(order + 1) == size().
  int degree_begin(int d) const { return degree_begin_[static_cast<std::size_t>(d)]; }
  int degree_end(int d) const { return degree_begin_[static_cast<std::size_t>(d) + 1]; }

  /// Index of n, or -1 when deg(n) > order.
  int index_of(const MultiIndex& n) const;
  /// Index of x^{n_i + n_j}; requires degree(i) + degree(j) <= order.
  int product(int i, int j) const { return code_to_index_[static_cast<std::size_t>(codes_[static_cast<std::size_t>(i)] + codes_[static_cast<std::size_t>(j)])]; }
  /// Index of the monomial x_k (degree one).
  int unit_index(int k) const { return 1 + k; }

  MonomialBasis(int dimension, int order);

 private:
  int dimension_;
  int order_;
  std::vector<MultiIndex> monomials_;
  std::vector<int> degree_begin_;
  std::vector<long> codes_;
  std::vector<int> code_to_index_;
};

}  // namespace surfdyn

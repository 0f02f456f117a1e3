#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace surfdyn {

namespace detail {

// Arithmetic context for Q(zeta_n): the n-th cyclotomic polynomial plus the
// reductions of x^k modulo it. Instances live for the whole program.
struct CyclotomicModulus {
  int n = 1;
  int phi = 1;
  std::vector<long> poly;                    // monic, degree phi
  std::vector<std::vector<long>> power_mod;  // x^k mod poly for 0 <= k < max(n, 2*phi-1)
};

const CyclotomicModulus& cyclotomic_modulus(int n);

}  // namespace detail

/// Exact element of a cyclotomic field Q(zeta_n), zeta_n = exp(2*pi*i/n),
/// stored in the power basis 1, zeta, ..., zeta^(phi(n)-1).
///
/// Elements that happen to be rational drop their field context, so the
/// common all-rational computations stay on a single mpq. Mixed-order
/// arithmetic promotes both operands to Q(zeta_lcm).
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  explicit Cyclotomic(const mpq_class& value);

  static Cyclotomic root_of_unity(int n, long power);
  /// re + im * i, with i = zeta_4.
  static Cyclotomic gaussian(const mpq_class& re, const mpq_class& im);
  static Cyclotomic parse(std::string_view text);

  /// Order n of the field the value is stored in (1 when rational).
  int order() const noexcept { return mod_ ? mod_->n : 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_rational() const noexcept { return mod_ == nullptr; }
  mpq_class rational_value() const;  // throws unless is_rational()
  const std::vector<mpq_class>& coefficients() const noexcept { return c_; }

  std::complex<double> to_complex() const;
  double abs() const { return std::abs(to_complex()); }

  Cyclotomic conj() const;
  Cyclotomic inverse() const;
  /// Image under the Galois automorphism zeta_n -> zeta_n^j, gcd(j, n) = 1.
  Cyclotomic galois(long j) const;
  Cyclotomic promoted(int n) const;

  std::string to_string() const;

  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs) { return *this *= rhs.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

 private:
  Cyclotomic(const detail::CyclotomicModulus* mod, std::vector<mpq_class> coeffs);
  void normalize();
  void add_scaled(const Cyclotomic& rhs, int sign);

  const detail::CyclotomicModulus* mod_ = nullptr;
  std::vector<mpq_class> c_;  // trailing zeros trimmed; empty == 0
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

/// Parses "a", "a/b" or a decimal literal into an exact rational.
mpq_class parse_rational(std::string_view text);

}  // namespace surfdyn

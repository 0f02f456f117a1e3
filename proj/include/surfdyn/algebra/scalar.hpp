#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <concepts>
#include <numbers>
#include <string>

#include "surfdyn/algebra/cyclotomic.hpp"

namespace surfdyn {

/// Scalar modes. A computation runs entirely in one of them.
using ExactScalar = Cyclotomic;
using FloatScalar = std::complex<double>;

enum class Mode { Exact, Float };

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr int kDefaultOrder = 12;

template <class F>
struct ScalarTraits;

template <>
struct ScalarTraits<ExactScalar> {
  static constexpr bool exact = true;
  static constexpr Mode mode = Mode::Exact;
  static ExactScalar from_rational(const mpq_class& q) { return ExactScalar(q); }
  static ExactScalar root_of_unity(int n, long power) { return ExactScalar::root_of_unity(n, power); }
  static bool is_zero(const ExactScalar& x, double /*tol*/) { return x.is_zero(); }
  static double abs(const ExactScalar& x) {
    if (x.is_rational()) return std::abs(x.rational_value().get_d());
    return x.abs();
  }
  static std::complex<double> to_complex(const ExactScalar& x) { return x.to_complex(); }
  static std::string to_string(const ExactScalar& x) { return x.to_string(); }
};

template <>
struct ScalarTraits<FloatScalar> {
  static constexpr bool exact = false;
  static constexpr Mode mode = Mode::Float;
  static FloatScalar from_rational(const mpq_class& q) { return {q.get_d(), 0.0}; }
  static FloatScalar root_of_unity(int n, long power) {
    long j = power % n;
    if (j < 0) j += n;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    return std::polar(1.0, angle);
  }
  static bool is_zero(const FloatScalar& x, double tol) { return std::abs(x) <= tol; }
  static double abs(const FloatScalar& x) { return std::abs(x); }
  static std::complex<double> to_complex(const FloatScalar& x) { return x; }
  static std::string to_string(const FloatScalar& x) {
    return "(" + std::to_string(x.real()) + ", " + std::to_string(x.imag()) + ")";
  }
};

template <class F>
concept Scalar = requires(F a, F b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { ScalarTraits<F>::exact } -> std::convertible_to<bool>;
};

template <Scalar F>
F scalar_from_int(long v) {
  return ScalarTraits<F>::from_rational(mpq_class(v));
}

template <Scalar F>
bool scalar_is_zero(const F& x, double tol = kDefaultTolerance) {
  return ScalarTraits<F>::is_zero(x, tol);
}

template <Scalar F>
F scalar_pow(F base, long exponent) {
  F result = scalar_from_int<F>(1);
  if (exponent < 0) {
    base = scalar_from_int<F>(1) / base;
    exponent = -exponent;
  }
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace surfdyn

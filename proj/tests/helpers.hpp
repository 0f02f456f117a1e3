#pragma once

#include <functional>
#include <initializer_list>
#include <vector>

#include "surfdyn/algebra/jet.hpp"
#include "surfdyn/error.hpp"

namespace surfdyn::testing {

template <Scalar F>
struct Term {
  int coordinate;
  std::vector<int> exponents;
  F value;
};

template <Scalar F>
Jet<F> make_jet(int dimension, int order, std::initializer_list<Term<F>> terms) {
  Jet<F> j(dimension, order);
  for (const auto& t : terms) j.set(t.coordinate, MultiIndex(t.exponents), t.value);
  return j;
}

inline Cyclotomic q(long num, long den = 1) { return Cyclotomic(mpq_class(num, den)); }

/// Error code thrown by fn; Internal when nothing is thrown.
inline ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace surfdyn::testing

#include "surfdyn/normal_forms/hj_case.hpp"

#include <numeric>

#include "surfdyn/error.hpp"

namespace surfdyn {

const char* to_string(HJGermKind kind) {
  switch (kind) {
    case HJGermKind::DiagonalPair: return "DiagonalPair";
    case HJGermKind::ResonantTriangular: return "ResonantTriangular";
    case HJGermKind::AntiDiagonal: return "AntiDiagonal";
    case HJGermKind::Infeasible: return "Infeasible";
  }
  return "?";
}

HJGermCase classify_hj_germ(long m, long q, long k) {
  require(m >= 1, ErrorCode::InvalidInput, "m must be >= 1");
  const auto mod = [m](long x) { return ((x % m) + m) % m; };
  require(std::gcd(mod(q), m) == 1, ErrorCode::InvalidInput, "gcd(m, q) must be 1");
  require(std::gcd(mod(k), m) == 1, ErrorCode::InvalidInput, "gcd(m, k) must be 1");
  HJGermCase c;
  c.m = m;
  c.q = mod(q);
  c.k = mod(k);
  const long one = mod(1);
  if (c.k == one && c.q == one) {
    c.kind = HJGermKind::DiagonalPair;
    c.letter = 'a';
  } else if (c.k == one) {
    c.kind = HJGermKind::DiagonalPair;
    c.letter = 'b';
  } else if (c.k == c.q && mod(c.q * c.q) == one) {
    c.kind = HJGermKind::AntiDiagonal;
    c.letter = 'c';
  }
  return c;
}

}  // namespace surfdyn

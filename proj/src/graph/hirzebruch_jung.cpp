#include "surfdyn/graph/hirzebruch_jung.hpp"

#include <numeric>
#include <string>

#include "surfdyn/error.hpp"

namespace surfdyn {

HJExpansion hj_expand(long m, long q) {
  require(m >= 1, ErrorCode::InvalidInput, "m must be >= 1");
  HJExpansion out;
  if (m == 1) {
    out.smooth_point = true;
    return out;
  }
  require(q >= 1 && q < m, ErrorCode::InvalidInput, "q must satisfy 1 <= q < m");
  require(std::gcd(m, q) == 1, ErrorCode::InvalidInput, "gcd(m, q) must be 1");
  while (q != 0) {
    const long b = (m + q - 1) / q;
    out.weights.push_back(b);
    const long next = b * q - m;
    m = q;
    q = next;
  }
  return out;
}

CyclicQuotientData hj_fold(const std::vector<long>& weights) {
  if (weights.empty()) return {1, 1};
  for (long b : weights) require(b >= 2, ErrorCode::InvalidInput, "chain weight " + std::to_string(b) + " is < 2");
  long m = weights.back(), q = 1;
  for (auto it = weights.rbegin() + 1; it != weights.rend(); ++it) {
    const long next = *it * m - q;
    q = m;
    m = next;
  }
  return {m, q};
}

long dual_q(long m, long q) {
  require(m >= 1, ErrorCode::InvalidInput, "m must be >= 1");
  if (m == 1) return 1;
  long r = ((q % m) + m) % m;
  require(std::gcd(r, m) == 1, ErrorCode::InvalidInput, "q is not invertible mod m");
  // Extended Euclid.
  long old_r = r, cur_r = m, old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    const long t = old_r / cur_r;
    old_r -= t * cur_r;
    std::swap(old_r, cur_r);
    old_s -= t * cur_s;
    std::swap(old_s, cur_s);
  }
  return ((old_s % m) + m) % m;
}

long canonical_q(long m, long q) { return m == 1 ? 1 : std::min(((q % m) + m) % m, dual_q(m, q)); }

}  // namespace surfdyn

#pragma once

#include <vector>

namespace surfdyn {

struct CyclicQuotientData {
  long m = 1;
  long q = 1;
  friend bool operator==(const CyclicQuotientData&, const CyclicQuotientData&) = default;
};

struct HJExpansion {
  std::vector<long> weights;
  /// m = 1: nothing to resolve.
  bool smooth_point = false;
};

/// Minus continued fraction m/q = b_1 - 1/(b_2 - ...), all b_i >= 2.
HJExpansion hj_expand(long m, long q);
inline HJExpansion hj_expand(const CyclicQuotientData& c) { return hj_expand(c.m, c.q); }

/// Inverse of hj_expand; the empty chain folds to (1, 1).
CyclicQuotientData hj_fold(const std::vector<long>& weights);

/// q' with q q' = 1 mod m; expanding (m, q') reverses the chain of (m, q).
long dual_q(long m, long q);

/// min(q, q'): the representative independent of the chain orientation.
long canonical_q(long m, long q);

}  // namespace surfdyn

#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace surfdyn {

/// Compact Riemann surface of genus g with cone points of multiplicity m_i >= 2.
struct OrbifoldSurface {
  int genus = 0;
  std::vector<long> marks;

  /// Drops multiplicity-1 points and sorts; throws on genus < 0 or m_i < 1.
  static OrbifoldSurface make(int genus, std::vector<long> marks);
  long marks_lcm() const;
  friend bool operator==(const OrbifoldSurface&, const OrbifoldSurface&) = default;
};

enum class OrbifoldType { Bad, Spherical, Euclidean, Hyperbolic };
const char* to_string(OrbifoldType t);

/// 2 - 2g - sum (1 - 1/m_i).
mpq_class euler_characteristic(const OrbifoldSurface& s);
OrbifoldType classify_orbifold(const OrbifoldSurface& s);

struct SmoothCover {
  long degree = 1;
  /// 1 - NN chi / 2.
  mpq_class genus;
  bool integral = false;
};

/// Genus of a degree-NN orbifold-unramified cover; NN must be a multiple of lcm(m_i).
SmoothCover smooth_cover_data(const OrbifoldSurface& s, long degree);

/// Smallest admissible NN giving a smooth cover of non-negative integral genus:
/// 2 / chi for spherical bases, lcm(m_i) for euclidean ones, and the lcm of
/// lcm(m_i) with the denominator of chi / 2 for hyperbolic ones.
long canonical_cover_degree(const OrbifoldSurface& s);

/// Orbibundle numerics: background degree e and local invariants (m_i, b_i).
struct OrbibundleData {
  OrbifoldSurface base;
  long e = 0;
  std::vector<std::pair<long, long>> local;

  /// Checks 0 <= b_i < m_i and that the local multiplicities are the base marks.
  void validate() const;
};

/// e + sum b_i / m_i.
mpq_class orbidegree(const OrbibundleData& l);
inline bool is_contractible(const OrbibundleData& l) { return orbidegree(l) < 0; }

}  // namespace surfdyn

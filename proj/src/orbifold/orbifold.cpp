#include "surfdyn/orbifold/orbifold.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "surfdyn/error.hpp"

namespace surfdyn {

OrbifoldSurface OrbifoldSurface::make(int genus, std::vector<long> marks) {
  require(genus >= 0, ErrorCode::InvalidInput, "genus must be >= 0");
  for (long m : marks) require(m >= 1, ErrorCode::InvalidInput, "multiplicities must be >= 1");
  marks.erase(std::remove(marks.begin(), marks.end(), 1L), marks.end());
  std::sort(marks.begin(), marks.end());
  return {genus, std::move(marks)};
}

long OrbifoldSurface::marks_lcm() const {
  long l = 1;
  for (long m : marks) l = std::lcm(l, m);
  return l;
}

const char* to_string(OrbifoldType t) {
  switch (t) {
    case OrbifoldType::Bad: return "Bad";
    case OrbifoldType::Spherical: return "Spherical";
    case OrbifoldType::Euclidean: return "Euclidean";
    case OrbifoldType::Hyperbolic: return "Hyperbolic";
  }
  return "?";
}

mpq_class euler_characteristic(const OrbifoldSurface& s) {
  mpq_class chi = 2 - 2 * s.genus;
  for (long m : s.marks) chi -= 1 - mpq_class(1, m);
  chi.canonicalize();
  return chi;
}

OrbifoldType classify_orbifold(const OrbifoldSurface& s) {
  std::vector<long> marks;
  for (long m : s.marks)
    if (m != 1) marks.push_back(m);
  if (s.genus == 0 && (marks.size() == 1 || (marks.size() == 2 && marks[0] != marks[1]))) return OrbifoldType::Bad;
  const int sign = sgn(euler_characteristic(s));
  return sign > 0 ? OrbifoldType::Spherical : (sign == 0 ? OrbifoldType::Euclidean : OrbifoldType::Hyperbolic);
}

SmoothCover smooth_cover_data(const OrbifoldSurface& s, long degree) {
  require(classify_orbifold(s) != OrbifoldType::Bad, ErrorCode::BadOrbifold, "a bad orbifold has no smooth cover");
  require(degree >= 1 && degree % s.marks_lcm() == 0, ErrorCode::InvalidInput,
          "cover degree must be a positive multiple of lcm(m_i) = " + std::to_string(s.marks_lcm()));
  SmoothCover c;
  c.degree = degree;
  c.genus = 1 - mpq_class(degree) * euler_characteristic(s) / 2;
  c.genus.canonicalize();
  c.integral = c.genus.get_den() == 1;
  return c;
}

long canonical_cover_degree(const OrbifoldSurface& s) {
  const OrbifoldType t = classify_orbifold(s);
  require(t != OrbifoldType::Bad, ErrorCode::BadOrbifold, "a bad orbifold has no smooth cover");
  const mpq_class chi = euler_characteristic(s);
  const long l = s.marks_lcm();
  if (t == OrbifoldType::Euclidean) return l;
  if (t == OrbifoldType::Spherical) {
    const mpq_class nn = mpq_class(2) / chi;
    require(nn.get_den() == 1, ErrorCode::Internal, "2 / chi is not an integer for a good spherical orbifold");
    return nn.get_num().get_si();
  }
  mpq_class half = chi / 2;
  half.canonicalize();
  return std::lcm(l, half.get_den().get_si());
}

void OrbibundleData::validate() const {
  std::vector<long> ms;
  for (const auto& [m, b] : local) {
    require(m >= 1, ErrorCode::InvalidInput, "local multiplicity must be >= 1");
    require(b >= 0 && b < m, ErrorCode::InvalidInput,
            "local invariant b = " + std::to_string(b) + " must satisfy 0 <= b < " + std::to_string(m));
    if (m != 1) ms.push_back(m);
  }
  std::sort(ms.begin(), ms.end());
  require(ms == base.marks, ErrorCode::InvalidInput, "local invariants do not match the marked points of the base");
}

mpq_class orbidegree(const OrbibundleData& l) {
  l.validate();
  mpq_class d = l.e;
  for (const auto& [m, b] : l.local) d += mpq_class(b, m);
  d.canonicalize();
  return d;
}

}  // namespace surfdyn

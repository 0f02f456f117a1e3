#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "surfdyn/orbifold/orbifold.hpp"
#include "surfdyn/verify/oracles.hpp"

using namespace surfdyn;
using surfdyn::testing::code_of;

namespace {

OrbifoldSurface orb(int g, std::vector<long> marks) { return OrbifoldSurface::make(g, std::move(marks)); }

}  // namespace

TEST_CASE("orbifold Euler characteristic examples") {
  CHECK(euler_characteristic(orb(1, {})) == 0);
  for (long p = 2; p < 9; ++p)
    for (long q = 2; q < 9; ++q) CHECK(euler_characteristic(orb(0, {p, q})) == mpq_class(1, p) + mpq_class(1, q));
  CHECK(euler_characteristic(orb(0, {2, 3, 7})) == mpq_class(-1, 42));
}

TEST_CASE("orbifold surfaces are canonicalized") {
  CHECK(orb(0, {7, 1, 2, 3}) == orb(0, {2, 3, 7}));
  CHECK(euler_characteristic(orb(2, {3, 1})) == euler_characteristic(orb(2, {3})));
  CHECK(code_of([] { orb(-1, {}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { orb(0, {0}); }) == ErrorCode::InvalidInput);
}

TEST_CASE("orbifold classification examples") {
  CHECK(classify_orbifold(orb(0, {3})) == OrbifoldType::Bad);
  CHECK(classify_orbifold(orb(0, {2, 3})) == OrbifoldType::Bad);
  CHECK(classify_orbifold(orb(0, {2, 2})) == OrbifoldType::Spherical);
  CHECK(classify_orbifold(orb(0, {2, 3, 7})) == OrbifoldType::Hyperbolic);
  CHECK(classify_orbifold(orb(0, {2, 3, 6})) == OrbifoldType::Euclidean);
  CHECK(classify_orbifold(orb(0, {2, 2, 2, 2})) == OrbifoldType::Euclidean);
  CHECK(classify_orbifold(orb(0, {2, 3, 5})) == OrbifoldType::Spherical);
  CHECK(classify_orbifold(orb(0, {})) == OrbifoldType::Spherical);
  CHECK(classify_orbifold(orb(1, {})) == OrbifoldType::Euclidean);
  CHECK(classify_orbifold(orb(1, {2})) == OrbifoldType::Hyperbolic);
  CHECK(classify_orbifold(orb(2, {})) == OrbifoldType::Hyperbolic);
}

TEST_CASE("forced bad cases and the sign table on random orbifolds") {
  std::mt19937_64 rng(3);
  for (long m = 2; m < 30; ++m) {
    CHECK(classify_orbifold(orb(0, {m})) == OrbifoldType::Bad);
    for (long n = 2; n < 30; ++n)
      CHECK((classify_orbifold(orb(0, {m, n})) == OrbifoldType::Bad) == (m != n));
  }
  for (int trial = 0; trial < 500; ++trial) {
    const auto s = oracle::random_orbifold(rng);
    const auto t = classify_orbifold(s);
    if (t == OrbifoldType::Bad) {
      CHECK(s.genus == 0);
      CHECK(euler_characteristic(s) > 0);
      continue;
    }
    const int sign = sgn(euler_characteristic(s));
    CHECK(t == (sign > 0 ? OrbifoldType::Spherical : sign == 0 ? OrbifoldType::Euclidean : OrbifoldType::Hyperbolic));
  }
}

TEST_CASE("Euler characteristic decreases when a multiplicity grows") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    auto s = oracle::random_orbifold(rng);
    if (s.marks.empty()) continue;
    auto bigger = s.marks;
    bigger[std::uniform_int_distribution<std::size_t>(0, bigger.size() - 1)(rng)] += 1;
    CHECK(euler_characteristic(orb(s.genus, bigger)) < euler_characteristic(s));
  }
}

TEST_CASE("smooth cover examples") {
  const auto torus = smooth_cover_data(orb(1, {}), 2);
  CHECK(torus.genus == 1);
  CHECK(torus.integral);
  CHECK(smooth_cover_data(orb(0, {2, 2, 2, 2}), 2).genus == 1);
  CHECK(smooth_cover_data(orb(0, {2, 3, 7}), 84).genus == 2);
  CHECK(canonical_cover_degree(orb(0, {2, 3, 7})) == 84);
  CHECK(canonical_cover_degree(orb(0, {2, 3, 5})) == 60);
  CHECK(smooth_cover_data(orb(0, {2, 3, 5}), 60).genus == 0);
  CHECK(code_of([] { smooth_cover_data(orb(0, {2, 3}), 6); }) == ErrorCode::BadOrbifold);
  CHECK(code_of([] { smooth_cover_data(orb(0, {2, 3, 7}), 21); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { canonical_cover_degree(orb(0, {5})); }) == ErrorCode::BadOrbifold);
}

TEST_CASE("canonical cover genus is a non-negative integer") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const auto s = oracle::random_orbifold(rng);
    if (classify_orbifold(s) == OrbifoldType::Bad) continue;
    const auto c = smooth_cover_data(s, canonical_cover_degree(s));
    CHECK(c.integral);
    CHECK(c.genus >= 0);
  }
}

TEST_CASE("cover genus is integral at multiples of 2 lcm den(chi) off the spherical case") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = oracle::random_orbifold(rng);
    const auto t = classify_orbifold(s);
    if (t == OrbifoldType::Bad || t == OrbifoldType::Spherical) continue;
    const long base = 2 * s.marks_lcm() * euler_characteristic(s).get_den().get_si();
    for (long k = 1; k <= 3; ++k) {
      const auto c = smooth_cover_data(s, k * base);
      CHECK(c.integral);
      CHECK(c.genus >= 0);
    }
  }
}

TEST_CASE("orbidegree examples") {
  CHECK(orbidegree({orb(3, {}), -2, {}}) == -2);
  CHECK(orbidegree({orb(0, {2}), -1, {{2, 1}}}) == mpq_class(-1, 2));
  CHECK(is_contractible({orb(0, {2}), -1, {{2, 1}}}));
  CHECK_FALSE(is_contractible({orb(0, {2, 2}), -1, {{2, 1}, {2, 1}}}));
  const OrbibundleData bad_b{orb(0, {3}), -1, {{3, 3}}};
  CHECK(code_of([&] { bad_b.validate(); }) == ErrorCode::InvalidInput);
  const OrbibundleData mismatch{orb(0, {3}), -1, {{2, 1}}};
  CHECK(code_of([&] { mismatch.validate(); }) == ErrorCode::InvalidInput);
}

TEST_CASE("orbidegree clears denominators at multiples of lcm") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = oracle::random_orbifold(rng);
    OrbibundleData l{s, std::uniform_int_distribution<long>(-5, 2)(rng), {}};
    for (long m : s.marks) l.local.emplace_back(m, std::uniform_int_distribution<long>(0, m - 1)(rng));
    l.validate();
    const mpq_class scaled = orbidegree(l) * s.marks_lcm() * std::uniform_int_distribution<long>(1, 4)(rng);
    CHECK(scaled.get_den() == 1);
  }
}

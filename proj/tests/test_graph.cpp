#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "surfdyn/graph/dual_graph.hpp"
#include "surfdyn/graph/hirzebruch_jung.hpp"
#include "surfdyn/verify/oracles.hpp"

using namespace surfdyn;
using surfdyn::testing::code_of;

namespace {

DualGraph triangle(long a, long b, long c) {
  return DualGraph({{0, 0, a, {}}, {1, 0, b, {}}, {2, 0, c, {}}}, {{0, 1}, {1, 2}, {0, 2}});
}

DualGraph star_of(int legs, int length) {
  std::vector<Vertex> vs{{0, 0, -3, {}}};
  std::vector<std::pair<int, int>> es;
  int next = 1;
  for (int l = 0; l < legs; ++l) {
    int prev = 0;
    for (int i = 0; i < length; ++i) {
      vs.push_back({next, 0, -2, {}});
      es.emplace_back(prev, next);
      prev = next++;
    }
  }
  return DualGraph(vs, es);
}

}  // namespace

TEST_CASE("intersection matrix examples") {
  CHECK(intersection_matrix(DualGraph({{0, 0, -1, {}}}, {})) == IntMatrix{{-1}});
  CHECK(intersection_matrix(DualGraph::chain({2, 2})) == IntMatrix{{-2, 1}, {1, -2}});
  CHECK(intersection_matrix(triangle(-2, -2, -2)) == IntMatrix{{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}});
  // Multi-edges count with multiplicity.
  const DualGraph doubled({{0, 0, -2, {}}, {1, 0, -2, {}}}, {{0, 1}, {1, 0}});
  CHECK(intersection_matrix(doubled) == IntMatrix{{-2, 2}, {2, -2}});
}

TEST_CASE("negative definiteness examples") {
  CHECK(is_negative_definite({{-1}}));
  CHECK(is_negative_definite({{-2, 1}, {1, -2}}));
  CHECK(leading_minors_of_negation({{-2, 1}, {1, -2}}) == std::vector<mpz_class>{2, 3});
  CHECK_FALSE(is_negative_definite({{-1, 1}, {1, -1}}));
  CHECK_FALSE(is_negative_definite({{0}}));
  CHECK_FALSE(is_negative_definite({{-2, 0}, {0, 1}}));
  // Singular leading block but full matrix indefinite.
  CHECK_FALSE(is_negative_definite({{0, 1}, {1, 0}}));
  CHECK(code_of([] { is_negative_definite({{-1, 0}}); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("Sylvester test agrees with eigenvalues on random symmetric matrices") {
  std::mt19937_64 rng(7);
  int definite = 0, indefinite = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    IntMatrix m(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
    std::uniform_int_distribution<long> off(-2, 2), diag(-3 * n, 1);
    for (std::size_t i = 0; i < m.size(); ++i) {
      m[i][i] = diag(rng);
      for (std::size_t j = i + 1; j < m.size(); ++j) m[i][j] = m[j][i] = off(rng);
    }
    const bool exact = is_negative_definite(m);
    CHECK(exact == oracle::negative_definite_by_eigenvalues(m));
    (exact ? definite : indefinite)++;
  }
  CHECK(definite > 50);
  CHECK(indefinite > 50);
}

TEST_CASE("shape examples") {
  const auto path = shape(DualGraph::chain({2, 2, 2}));
  CHECK(path.kind == ShapeKind::Chain);
  CHECK(path.star_shaped());
  const auto star = shape(star_of(3, 1));
  CHECK(star.kind == ShapeKind::StarShaped);
  CHECK(star.center == 0);
  CHECK(shape(oracle::h_shaped_tree()).kind == ShapeKind::GeneralTree);
  CHECK_FALSE(shape(oracle::h_shaped_tree()).star_shaped());
  CHECK(shape(triangle(-2, -2, -2)).kind == ShapeKind::Cycle);
  CHECK(shape(DualGraph({{0, 0, -2, {}}}, {})).kind == ShapeKind::Chain);
  const DualGraph two_components({{0, 0, -2, {}}, {1, 0, -2, {}}}, {});
  CHECK(shape(two_components).kind == ShapeKind::Other);
}

TEST_CASE("graph construction rejects malformed documents") {
  CHECK(code_of([] { DualGraph({{0, 0, -1, {}}, {0, 0, -2, {}}}, {}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { DualGraph({{0, -1, -1, {}}}, {}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { DualGraph({{0, 0, -1, 0}}, {}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { DualGraph({{0, 0, -1, {}}}, {{0, 3}}); }) == ErrorCode::InvalidInput);
}

TEST_CASE("blow_down examples") {
  const auto mid = blow_down(DualGraph::chain({2, 1, 2}), 1);
  CHECK(mid.snc);
  CHECK(mid.graph.size() == 2);
  CHECK(mid.graph.vertex(0).self == -1);
  CHECK(mid.graph.vertex(2).self == -1);
  CHECK(mid.graph.multiplicity(0, 2) == 1);

  const auto leaf = blow_down(DualGraph::chain({1, 3, 2}), 0);
  CHECK(leaf.snc);
  CHECK(chain_weights(leaf.graph) == std::vector<long>{2, 2});

  const auto multi = blow_down(triangle(-2, -2, -1), 2);
  CHECK_FALSE(multi.snc);
  CHECK(multi.graph.multiplicity(0, 1) == 2);
  CHECK(multi.graph.vertex(0).self == -1);

  CHECK(code_of([] { blow_down(DualGraph::chain({2, 2}), 0); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { blow_down(DualGraph({{0, 1, -1, {}}}, {}), 0); }) == ErrorCode::InvalidInput);
}

TEST_CASE("blow_down of a curve met twice by one neighbour produces a loop") {
  const DualGraph g({{0, 0, -6, {}}, {1, 0, -1, {}}}, {{0, 1}, {0, 1}});
  const auto r = blow_down(g, 1);
  CHECK_FALSE(r.snc);
  CHECK(r.graph.vertex(0).self == -2);
  CHECK(r.graph.has_loops());
}

TEST_CASE("minimal negative model examples") {
  CHECK(code_of([] { minimal_negative_model(DualGraph::chain({2, 1, 2})); }) == ErrorCode::NotContractible);
  const auto unchanged = minimal_negative_model(DualGraph::chain({2, 2}));
  CHECK(unchanged.contracted.empty());
  CHECK(chain_weights(unchanged.graph) == std::vector<long>{2, 2});
  const auto shorter = minimal_negative_model(DualGraph::chain({3, 1, 3}));
  CHECK(shorter.contracted == std::vector<int>{1});
  CHECK(chain_weights(shorter.graph) == std::vector<long>{2, 2});
  const auto smooth = minimal_negative_model(DualGraph::chain({2, 1}));
  CHECK(smooth.smooth_point);
  CHECK(smooth.graph.empty());
  const DualGraph disconnected({{0, 0, -2, {}}, {1, 0, -2, {}}}, {});
  CHECK(code_of([&] { minimal_negative_model(disconnected); }) == ErrorCode::InvalidInput);
}

TEST_CASE("minimal model of a blown-up chain recovers the Hirzebruch-Jung chain") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> pick_m(2, 40);
  for (int trial = 0; trial < 150; ++trial) {
    const long m = pick_m(rng);
    long q;
    do q = std::uniform_int_distribution<long>(1, m - 1)(rng);
    while (std::gcd(m, q) != 1);
    const int blowups = std::uniform_int_distribution<int>(0, 5)(rng);
    const DualGraph g = oracle::random_blown_up_chain(rng, m, q, blowups);
    REQUIRE(shape(g).kind == ShapeKind::Chain);
    REQUIRE(is_negative_definite(intersection_matrix(g)));
    const auto model = minimal_negative_model(g);
    CHECK(model.contracted.size() == static_cast<std::size_t>(blowups));
    CHECK(shape(model.graph).kind == ShapeKind::Chain);
    auto w = chain_weights(model.graph);
    const auto expected = hj_expand(m, q).weights;
    if (w != expected) std::reverse(w.begin(), w.end());
    CHECK(w == expected);
  }
}

TEST_CASE("each blow-down step keeps the configuration negative definite") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    DualGraph g = oracle::random_blown_up_chain(rng, 17, 5, 4);
    while (true) {
      std::optional<int> pick;
      for (const auto& v : g.vertices())
        if (v.self == -1 && v.genus == 0) pick = v.id;
      if (!pick) break;
      g = blow_down(g, *pick).graph;
      CHECK(is_negative_definite(intersection_matrix(g)));
    }
  }
}

TEST_CASE("chain_walk orders a relabelled chain") {
  const DualGraph g({{5, 0, -3, {}}, {2, 0, -2, {}}, {9, 0, -4, {}}}, {{9, 5}, {5, 2}});
  CHECK(chain_walk(g) == std::vector<int>{2, 5, 9});
  CHECK(chain_weights(g) == std::vector<long>{2, 3, 4});
  CHECK(code_of([] { chain_walk(triangle(-2, -2, -2)); }) == ErrorCode::InvalidInput);
}

TEST_CASE("Hirzebruch-Jung expansion examples") {
  CHECK(hj_expand(2, 1).weights == std::vector<long>{2});
  CHECK(hj_expand(5, 2).weights == std::vector<long>{3, 2});
  CHECK(hj_expand(3, 2).weights == std::vector<long>{2, 2});
  CHECK(oracle::continued_fraction_value({2}) == 2);
  CHECK(oracle::continued_fraction_value({3, 2}) == mpq_class(5, 2));
  CHECK(oracle::continued_fraction_value({2, 2}) == mpq_class(3, 2));
  const auto smooth = hj_expand(1, 1);
  CHECK(smooth.smooth_point);
  CHECK(smooth.weights.empty());
  CHECK(code_of([] { hj_expand(6, 4); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { hj_expand(5, 5); }) == ErrorCode::InvalidInput);
}

TEST_CASE("Hirzebruch-Jung folding examples") {
  CHECK(hj_fold({2}) == CyclicQuotientData{2, 1});
  CHECK(hj_fold({3, 2}) == CyclicQuotientData{5, 2});
  CHECK(hj_fold({2, 2, 2}) == CyclicQuotientData{4, 3});
  CHECK(hj_fold({}) == CyclicQuotientData{1, 1});
  CHECK(code_of([] { hj_fold({3, 1}); }) == ErrorCode::InvalidInput);
}

TEST_CASE("Hirzebruch-Jung round trip and oracle agreement through m = 200") {
  for (long m = 2; m <= 200; ++m) {
    for (long q = 1; q < m; ++q) {
      if (std::gcd(m, q) != 1) continue;
      const auto w = hj_expand(m, q).weights;
      REQUIRE(std::all_of(w.begin(), w.end(), [](long b) { return b >= 2; }));
      REQUIRE(oracle::continued_fraction_value(w) == mpq_class(m, q));
      REQUIRE(hj_fold(w) == CyclicQuotientData{m, q});
      REQUIRE(is_negative_definite(intersection_matrix(DualGraph::chain(w))));
    }
  }
}

TEST_CASE("dual q reverses the chain") {
  CHECK(dual_q(5, 2) == 3);
  CHECK(canonical_q(5, 3) == 2);
  CHECK(canonical_q(7, 3) == 3);
  CHECK(dual_q(1, 1) == 1);
  for (long m = 2; m <= 60; ++m) {
    for (long q = 1; q < m; ++q) {
      if (std::gcd(m, q) != 1) continue;
      const long qd = dual_q(m, q);
      CHECK((q * qd) % m == 1);
      auto w = hj_expand(m, q).weights;
      std::reverse(w.begin(), w.end());
      CHECK(hj_expand(m, qd).weights == w);
      CHECK(canonical_q(m, q) == canonical_q(m, qd));
    }
  }
  CHECK(code_of([] { dual_q(6, 2); }) == ErrorCode::InvalidInput);
}

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "surfdyn/classify/classify.hpp"
#include "surfdyn/verify/oracles.hpp"

using namespace surfdyn;
using surfdyn::testing::code_of;
using surfdyn::testing::make_jet;
using surfdyn::testing::q;
using E = ExactScalar;

namespace {

AdmissibleDocument star_doc(int genus, long self, std::vector<CyclicQuotientData> legs, bool finite = true) {
  oracle::StarSpec spec{genus, self, std::move(legs)};
  AdmissibleDocument doc{oracle::star_graph(spec), std::nullopt, CentralPayload{}};
  doc.central->finite_order = finite;
  return doc;
}

}  // namespace

TEST_CASE("chain [3,2] with a germ for (5,2,1) is a cyclic quotient of case (b)") {
  AdmissibleDocument doc{DualGraph::chain({3, 2}), ChainPayload{}, std::nullopt};
  doc.chain->group = DiagonalGroup(5, {1, 2});
  doc.chain->k_twist = 1;
  doc.chain->germ = AnyJet(make_jet<E>(2, 6, {{0, {1, 0}, q(1, 2)}, {0, {0, 3}, q(1)}, {1, {0, 1}, q(1, 3)}, {1, {2, 0}, q(1)}}));
  const auto c = classify_singularity(doc, 6);
  REQUIRE(c.kind == ClassificationKind::CyclicQuotient);
  CHECK(c.cyclic->m == 5);
  CHECK(c.cyclic->q == 2);
  CHECK(c.cyclic->germ_case.letter == 'b');
  CHECK(c.cyclic->germ_case.kind == HJGermKind::DiagonalPair);
  CHECK(c.residuals.at("conjugacy") == 0.0);
  CHECK(c.residuals.at("normal_form_commutation") == 0.0);
  CHECK(classify_orbit_surface(c).kind == OrbitSurfaceKind::Hopf);
  CHECK(c.provenance.size() >= 5);
}

TEST_CASE("a resonant z^2 term promotes the chain case to the triangular form") {
  AdmissibleDocument doc{DualGraph::chain({3, 2}), ChainPayload{}, std::nullopt};
  doc.chain->group = DiagonalGroup(5, {1, 2});
  doc.chain->k_twist = 1;
  doc.chain->germ = AnyJet(make_jet<E>(2, 6, {{0, {1, 0}, q(1, 2)}, {1, {0, 1}, q(1, 4)}, {1, {2, 0}, q(3)}}));
  for (auto mode : {ScalarMode::Exact, ScalarMode::Float}) {
    const auto c = classify_singularity(doc, 6, mode);
    CHECK(c.cyclic->germ_case.kind == HJGermKind::ResonantTriangular);
    CHECK(c.cyclic->germ_case.u == 2);
    CHECK(c.residuals.at("conjugacy") < 1e-10);
  }
}

TEST_CASE("chain case without germ data") {
  const auto c = classify_singularity({DualGraph::chain({2, 2, 2, 2}), std::nullopt, std::nullopt});
  CHECK(c.cyclic->m == 5);
  CHECK(c.cyclic->q == 4);
  CHECK(c.cyclic->k_assumed);
  CHECK(c.cyclic->germ_case.letter == 'b');

  AdmissibleDocument twisted{DualGraph::chain({2, 2, 2, 2}), ChainPayload{}, std::nullopt};
  twisted.chain->k_twist = 4;
  const auto c4 = classify_singularity(twisted);
  CHECK(c4.cyclic->germ_case.letter == 'c');
  CHECK(c4.cyclic->germ_case.kind == HJGermKind::AntiDiagonal);

  twisted.chain->k_twist = 2;
  CHECK(code_of([&] { classify_singularity(twisted); }) == ErrorCode::InconsistentDynamics);
}

TEST_CASE("group data must match the chain") {
  AdmissibleDocument doc{DualGraph::chain({3, 2}), ChainPayload{}, std::nullopt};
  doc.chain->group = DiagonalGroup(5, {1, 3});
  CHECK(classify_singularity(doc).cyclic->q == 3);
  doc.chain->group = DiagonalGroup(5, {1, 4});
  CHECK(code_of([&] { classify_singularity(doc); }) == ErrorCode::InconsistentDynamics);
  doc.chain->group = DiagonalGroup(7, {1, 2});
  CHECK(code_of([&] { classify_singularity(doc); }) == ErrorCode::InconsistentDynamics);
}

TEST_CASE("a blown-up smooth point classifies as the trivial quotient") {
  const auto c = classify_singularity({DualGraph::chain({2, 1}), std::nullopt, std::nullopt});
  CHECK(c.cyclic->m == 1);
  CHECK(c.minimal_model.empty());
  CHECK(c.contracted.size() == 2);
}

TEST_CASE("star with a genus-2 center and three [2] legs") {
  const auto c = classify_singularity(star_doc(2, -2, {{2, 1}, {2, 1}, {2, 1}}));
  REQUIRE(c.kind == ClassificationKind::WeightedHomogeneous);
  CHECK(c.weighted->base == OrbifoldSurface::make(2, {2, 2, 2}));
  CHECK(c.weighted->geometry == OrbifoldType::Hyperbolic);
  CHECK(c.weighted->orbidegree == mpq_class(-1, 2));
  CHECK(classify_orbit_surface(c).kind == OrbitSurfaceKind::KappaOne);
}

TEST_CASE("the four reachable rows of the decision table") {
  const auto chain = classify_singularity({DualGraph::chain({3, 2}), std::nullopt, std::nullopt});
  const auto spherical = classify_singularity(star_doc(0, -2, {{2, 1}, {2, 1}, {3, 1}}));
  const auto euclidean = classify_singularity(star_doc(0, -2, {{2, 1}, {3, 1}, {6, 1}}));
  const auto hyperbolic = classify_singularity(star_doc(0, -2, {{2, 1}, {3, 1}, {7, 1}}));
  CHECK(classify_orbit_surface(chain).kind == OrbitSurfaceKind::Hopf);
  CHECK(spherical.weighted->geometry == OrbifoldType::Spherical);
  CHECK(classify_orbit_surface(spherical).kind == OrbitSurfaceKind::Hopf);
  CHECK(euclidean.weighted->geometry == OrbifoldType::Euclidean);
  CHECK(classify_orbit_surface(euclidean).kind == OrbitSurfaceKind::Kodaira);
  CHECK(hyperbolic.weighted->geometry == OrbifoldType::Hyperbolic);
  CHECK(classify_orbit_surface(hyperbolic).kind == OrbitSurfaceKind::KappaOne);
  CHECK(hyperbolic.weighted->base == OrbifoldSurface::make(0, {2, 3, 7}));
  for (const auto& c : {chain, spherical, euclidean, hyperbolic}) CHECK_FALSE(classify_orbit_surface(c).kahler);
}

TEST_CASE("orbit surface table is exhaustive") {
  CHECK(orbit_surface_for(ClassificationKind::CyclicQuotient, std::nullopt).kind == OrbitSurfaceKind::Hopf);
  CHECK(orbit_surface_for(ClassificationKind::WeightedHomogeneous, OrbifoldType::Spherical).kind == OrbitSurfaceKind::Hopf);
  CHECK(orbit_surface_for(ClassificationKind::WeightedHomogeneous, OrbifoldType::Euclidean).kind ==
        OrbitSurfaceKind::Kodaira);
  CHECK(orbit_surface_for(ClassificationKind::WeightedHomogeneous, OrbifoldType::Hyperbolic).kind ==
        OrbitSurfaceKind::KappaOne);
  CHECK(code_of([] { orbit_surface_for(ClassificationKind::WeightedHomogeneous, OrbifoldType::Bad); }) ==
        ErrorCode::BadOrbifold);
  CHECK(orbit_surface_for(ClassificationKind::WeightedHomogeneous, OrbifoldType::Euclidean).kodaira_dimension == "0");
}

TEST_CASE("a single elliptic curve is a weighted homogeneous cone over a torus") {
  AdmissibleDocument doc{DualGraph({{0, 1, -1, {}}}, {}), std::nullopt, std::nullopt};
  const auto c = classify_singularity(doc);
  REQUIRE(c.kind == ClassificationKind::WeightedHomogeneous);
  CHECK(c.weighted->geometry == OrbifoldType::Euclidean);
  CHECK(classify_orbit_surface(c).kind == OrbitSurfaceKind::Kodaira);
  doc.central = CentralPayload{};
  doc.central->finite_order = false;
  CHECK(code_of([&] { classify_singularity(doc); }) == ErrorCode::InconsistentDynamics);
}

TEST_CASE("cycles are rejected with a telescoping certificate") {
  std::mt19937_64 rng(1);
  DualGraph g = oracle::cycle_graph(3);
  const auto corners = oracle::random_matched_cycle(rng, 3);
  DynamicsAnnotation dyn;
  for (const auto& c : corners) dyn.corners.push_back({{c.e, c.e_prime}, c.lambda, c.mu});
  g.set_dynamics(dyn);
  try {
    classify_singularity({g, std::nullopt, std::nullopt});
    FAIL("expected a cycle obstruction");
  } catch (const CycleObstructionError& e) {
    CHECK(e.code() == ErrorCode::CycleObstruction);
    REQUIRE(e.certificate.has_value());
    CHECK(e.certificate->product_is_one);
    CHECK(e.cycle == std::vector<int>{0, 1, 2});
  }
  CHECK(code_of([] { classify_singularity({oracle::cycle_graph(4), std::nullopt, std::nullopt}); }) ==
        ErrorCode::CycleObstruction);
}

TEST_CASE("cycle corners read annotations in either orientation") {
  DualGraph g = oracle::cycle_graph(2);
  REQUIRE(cycle_walk(g) == std::vector<int>{0, 1});
  DynamicsAnnotation dyn;
  dyn.corners.push_back({{0, 1}, Modulus::rational(3), Modulus::rational(mpq_class(1, 5))});
  dyn.corners.push_back({{0, 1}, Modulus::rational(mpq_class(1, 3)), Modulus::rational(5)});
  g.set_dynamics(dyn);
  const auto corners = cycle_corners(g);
  REQUIRE(corners.size() == 2);
  CHECK(corners[1].e == 1);
  CHECK(*corners[1].lambda.exact == 5);
  CHECK(*corners[1].mu.exact == mpq_class(1, 3));
  CHECK(cycle_obstruction(corners).product_is_one);
}

TEST_CASE("classification errors") {
  CHECK(code_of([] { classify_singularity({DualGraph::chain({2, 1, 2}), std::nullopt, std::nullopt}); }) ==
        ErrorCode::NotContractible);
  CHECK(code_of([] { classify_singularity({oracle::h_shaped_tree(), std::nullopt, std::nullopt}); }) ==
        ErrorCode::InconsistentDynamics);
  CHECK(code_of([] { classify_singularity(star_doc(1, -3, {{2, 1}, {2, 1}, {2, 1}}, false)); }) ==
        ErrorCode::InconsistentDynamics);
  CHECK(code_of([] { classify_singularity(star_doc(0, -2, {{2, 1}, {2, 1}, {2, 1}}, false)); }) ==
        ErrorCode::InconsistentDynamics);
  CHECK(code_of([] { classify_singularity({DualGraph(), std::nullopt, std::nullopt}); }) == ErrorCode::InvalidInput);
  auto doc = star_doc(0, -2, {{2, 1}, {3, 1}, {7, 1}});
  doc.central->e = 0;
  CHECK(code_of([&] { classify_singularity(doc); }) == ErrorCode::NotContractible);
  doc.central->e = -1;
  doc.central->local = std::vector<std::pair<long, long>>{{2, 1}, {3, 1}, {5, 1}};
  CHECK(code_of([&] { classify_singularity(doc); }) == ErrorCode::InvalidInput);
}

TEST_CASE("supplied orbibundle data overrides the graph defaults") {
  auto doc = star_doc(0, -2, {{2, 1}, {3, 1}, {7, 1}});
  doc.central->e = -1;
  doc.central->local = std::vector<std::pair<long, long>>{{7, 1}, {2, 1}, {3, 1}};
  doc.central->order = 42;
  const auto c = classify_singularity(doc);
  CHECK(c.weighted->orbidegree == mpq_class(-1, 42));
  CHECK(c.weighted->twist == 42);
}

TEST_CASE("dynamics annotations are validated") {
  std::mt19937_64 rng(2);
  oracle::StarSpec spec{1, -3, {{2, 1}, {3, 2}, {5, 2}}};
  DualGraph g = oracle::star_graph(spec, &rng);
  const auto lab = propagate_hyperbolicity(g, 0, true);
  const auto corners = annotate_corners(g, lab, oracle::consistent_multipliers(g, lab, rng));
  DynamicsAnnotation dyn{0, {}};
  for (const auto& c : corners) dyn.corners.push_back({{c.e, c.e_prime}, c.lambda, c.mu});
  g.set_dynamics(dyn);
  const auto ok = classify_singularity({g, std::nullopt, std::nullopt});
  CHECK(ok.kind == ClassificationKind::WeightedHomogeneous);
  dyn.corners.front().mod_mu = Modulus::rational(2);
  g.set_dynamics(dyn);
  CHECK(code_of([&] { classify_singularity({g, std::nullopt, std::nullopt}); }) == ErrorCode::InconsistentDynamics);
}

TEST_CASE("chain dynamics without a center find a consistent end") {
  std::mt19937_64 rng(4);
  DualGraph g = DualGraph::chain({3, 2, 4});
  const auto lab = propagate_hyperbolicity(g, 2);
  const auto corners = annotate_corners(g, lab, oracle::consistent_multipliers(g, lab, rng));
  DynamicsAnnotation dyn;
  for (const auto& c : corners) dyn.corners.push_back({{c.e, c.e_prime}, c.lambda, c.mu});
  g.set_dynamics(dyn);
  const auto c = classify_singularity({g, std::nullopt, std::nullopt});
  CHECK(c.kind == ClassificationKind::CyclicQuotient);
  CHECK(c.cyclic->m == hj_fold({3, 2, 4}).m);
}

TEST_CASE("classification is invariant under relabeling") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    auto spec = oracle::random_star_spec(rng);
    AdmissibleDocument doc{oracle::star_graph(spec), std::nullopt, CentralPayload{}};
    const auto a = classify_singularity(doc);
    std::shuffle(spec.legs.begin(), spec.legs.end(), rng);
    doc.graph = oracle::relabeled(oracle::star_graph(spec), rng);
    const auto b = classify_singularity(doc);
    CHECK(a.weighted->base == b.weighted->base);
    CHECK(a.weighted->orbidegree == b.weighted->orbidegree);
    CHECK(a.weighted->bundle.local == b.weighted->bundle.local);
    CHECK(classify_orbit_surface(a).kind == classify_orbit_surface(b).kind);
  }
  for (int trial = 0; trial < 60; ++trial) {
    const long m = std::uniform_int_distribution<long>(2, 30)(rng);
    long qq;
    do qq = std::uniform_int_distribution<long>(1, m - 1)(rng);
    while (std::gcd(m, qq) != 1);
    const DualGraph g = oracle::random_blown_up_chain(rng, m, qq, 3);
    const auto a = classify_singularity({g, std::nullopt, std::nullopt});
    const auto b = classify_singularity({oracle::relabeled(g, rng), std::nullopt, std::nullopt});
    CHECK(a.cyclic->m == m);
    CHECK(a.cyclic->q == canonical_q(m, qq));
    CHECK(a.cyclic->q == b.cyclic->q);
    CHECK(hj_fold(a.cyclic->chain) == CyclicQuotientData{m, a.cyclic->q});
  }
}

TEST_CASE("cyclic cover relation keeps the class") {
  const auto hopf = orbit_surface_for(ClassificationKind::CyclicQuotient, std::nullopt);
  CHECK(cyclic_cover_degree(hopf, 1).note == "identity covering");
  const auto r = cyclic_cover_degree(hopf, 3);
  CHECK(r.degree == 3);
  CHECK(r.cover.kind == OrbitSurfaceKind::Hopf);
  const auto kod = orbit_surface_for(ClassificationKind::WeightedHomogeneous, OrbifoldType::Euclidean);
  CHECK(cyclic_cover_degree(kod, 2).cover.kind == OrbitSurfaceKind::Kodaira);
  CHECK(code_of([&] { cyclic_cover_degree(kod, 0); }) == ErrorCode::InvalidInput);
}

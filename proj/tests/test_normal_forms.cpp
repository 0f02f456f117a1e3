#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "surfdyn/normal_forms/hj_case.hpp"
#include "surfdyn/normal_forms/koenigs.hpp"
#include "surfdyn/normal_forms/poincare_dulac.hpp"
#include "surfdyn/verify/poly_oracle.hpp"

using namespace surfdyn;
using surfdyn::testing::make_jet;
using surfdyn::testing::q;
using surfdyn::testing::code_of;
using E = ExactScalar;
using C = FloatScalar;

namespace {

std::vector<std::vector<std::vector<int>>> sorted(std::vector<std::vector<std::vector<int>>> v) {
  for (auto& list : v) std::sort(list.begin(), list.end());
  return v;
}

std::vector<std::vector<std::vector<int>>> as_exponents(const ResonanceReport<E>& r) {
  std::vector<std::vector<std::vector<int>>> out;
  for (const auto& list : r.resonant) {
    out.emplace_back();
    for (const auto& n : list) out.back().push_back(n.exponents());
  }
  return sorted(out);
}

}  // namespace

TEST_CASE("resonances: (1/2, 1/4) through order 4") {
  const auto report = resonances<E>({q(1, 2), q(1, 4)}, 4);
  CHECK(report.resonant[0].empty());
  REQUIRE(report.resonant[1].size() == 1);
  CHECK(report.resonant[1][0] == MultiIndex({2, 0}));
  CHECK_FALSE(report.all_clear);
  CHECK(report.termination_degree == 2);
  CHECK(report.exhaustive);
}

TEST_CASE("resonances: (alpha, alpha^u) has z^u in the second coordinate") {
  const E alpha = q(2, 3);
  for (int u = 2; u <= 6; ++u) {
    const auto report = resonances<E>({alpha, scalar_pow(alpha, u)}, 8);
    CHECK(report.is_resonant(1, MultiIndex({u, 0})));
  }
}

TEST_CASE("resonances: opposite eigenvalues are resonance free") {
  const auto report = resonances<E>({q(1, 3), q(-1, 3)}, 10);
  CHECK(report.all_clear);
  const auto complex_pair = resonances<E>({q(1, 2) * E::root_of_unity(4, 1), q(-1, 2) * E::root_of_unity(4, 1)}, 10);
  CHECK(complex_pair.all_clear);
}

TEST_CASE("resonances: rejects non-attracting and zero spectra") {
  CHECK(code_of([] { resonances<E>({q(1, 2), q(1)}, 4); }) == ErrorCode::NonAttracting);
  CHECK(code_of([] { resonances<E>({E::root_of_unity(5, 1)}, 4); }) == ErrorCode::NonAttracting);
  CHECK(code_of([] { resonances<C>({C(0.5), C(0.0, 1.2)}, 4); }) == ErrorCode::NonAttracting);
  CHECK(code_of([] { resonances<E>({q(0), q(1, 2)}, 4); }) == ErrorCode::SingularLinearPart);
}

TEST_CASE("resonances agree with the brute-force scan on random rational spectra") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> base(2, 5), expo(1, 4), sign(0, 1);
  for (int trial = 0; trial < 40; ++trial) {
    // Spectra built from powers of a common base produce many resonances.
    const E b = q(1, base(rng));
    std::vector<E> lambda;
    const int d = 2 + trial % 2;
    for (int i = 0; i < d; ++i) lambda.push_back((sign(rng) != 0 ? q(-1) : q(1)) * scalar_pow(b, expo(rng)));
    const int order = 7;
    const auto report = resonances(lambda, order);
    CHECK(as_exponents(report) == sorted(oracle::brute_force_resonances(lambda, order)));
    CHECK(report.exhaustive == (report.termination_degree <= order));
  }
}

TEST_CASE("equivariance lattice") {
  CHECK(equivariance_lattice(DiagonalGroup::trivial(2), MultiIndex({3, 1}), 0));
  for (int m = 2; m <= 9; ++m)
    for (int u = 1; u <= 12; ++u)
      for (int q2 = 1; q2 < m; ++q2)
        CHECK(equivariance_lattice(DiagonalGroup(m, {1, q2}), MultiIndex({u, 0}), 1) == ((u - q2) % m == 0));
  CHECK_FALSE(equivariance_lattice(DiagonalGroup(4, {1, 3}), MultiIndex({2, 0}), 1));
}

TEST_CASE("homological_split: single monomial examples") {
  const auto a = Matrix<E>::diagonal({q(1, 2), q(1, 4)});
  const auto zw = make_jet<E>(2, 2, {{1, {1, 1}, q(1)}});
  const auto split = homological_split(zw, a);
  CHECK(split.resonant.is_zero());
  CHECK(split.transform == make_jet<E>(2, 2, {{1, {1, 1}, q(-8)}}));

  const auto z2 = make_jet<E>(2, 2, {{1, {2, 0}, q(1)}});
  const auto split2 = homological_split(z2, a);
  CHECK(split2.resonant == z2);
  CHECK(split2.transform.is_zero());

  Matrix<E> nondiag = a;
  nondiag(0, 1) = q(1);
  CHECK(code_of([&] { homological_split(zw, nondiag); }) == ErrorCode::Unsupported);
}

TEST_CASE("homological_split: G = S + H o A - A o H exactly") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> num(-5, 5);
  const auto a = Matrix<E>::diagonal({q(1, 2), q(1, 8), q(-1, 4)});
  for (int deg = 2; deg <= 4; ++deg) {
    Jet<E> g(3, 4);
    for (int k = 0; k < 3; ++k)
      for (int n = g.basis().degree_begin(deg); n < g.basis().degree_end(deg); ++n) g.set_at(k, n, q(num(rng), 3));
    const auto split = homological_split(g, a);
    CHECK(split.resonant + homological_operator(split.transform, a) == g);
  }
}

TEST_CASE("homological_split: vanishing denominator outside the report is an error") {
  const auto a = Matrix<E>::diagonal({q(1, 2), q(1, 4)});
  ResonanceReport<E> fake;
  fake.resonant.assign(2, {});
  const auto z2 = make_jet<E>(2, 2, {{1, {2, 0}, q(1)}});
  CHECK(code_of([&] { homological_split(z2, a, kDefaultTolerance, &fake); }) == ErrorCode::ResonanceInconsistency);
}

TEST_CASE("solve_homological inverts the operator for a non-diagonal resonance-free part") {
  Matrix<E> a(2, 2);
  a(0, 1) = q(1, 3);
  a(1, 0) = q(1, 2);
  const auto g = make_jet<E>(2, 4, {{0, {2, 0}, q(1)}, {1, {1, 1}, q(-2)}, {0, {0, 2}, q(3, 7)}});
  const auto h = solve_homological(g, a, 2);
  CHECK(homological_operator(h, a) == g);
}

TEST_CASE("poincare_dulac: linear diagonal germ is already normal") {
  const auto f = make_jet<E>(2, 6, {{0, {1, 0}, q(1, 2)}, {1, {0, 1}, q(1, 3)}});
  const auto r = poincare_dulac(f, DiagonalGroup::trivial(2), 1, 6);
  CHECK(r.normal_form == f);
  CHECK(r.conjugacy == Jet<E>::identity(2, 6));
  CHECK(r.residual_norm == 0.0);
}

TEST_CASE("poincare_dulac: zw is removed, the resonant z^2 survives") {
  const E alpha = q(1, 2);
  const auto f = make_jet<E>(2, 5, {{0, {1, 0}, alpha}, {1, {0, 1}, alpha * alpha}, {1, {2, 0}, q(1)}, {1, {1, 1}, q(1)}});
  const auto r = poincare_dulac(f, DiagonalGroup::trivial(2), 1, 5);
  CHECK(r.normal_form == make_jet<E>(2, 5, {{0, {1, 0}, alpha}, {1, {0, 1}, alpha * alpha}, {1, {2, 0}, q(1)}}));
  CHECK(r.residual_norm == 0.0);
  CHECK(r.path == NormalizationPath::Diagonal);
}

TEST_CASE("poincare_dulac: random equivariant exact germs satisfy the postconditions") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<int> pick_p(2, 7);
  for (int trial = 0; trial < 8; ++trial) {
    const int p = pick_p(rng);
    const DiagonalGroup g(p, {1, 1 + trial % (p - 1)});
    const E alpha = q(1, 2);
    const int u = 2 + trial % 3;
    Jet<E> f(2, 6);
    f.set(0, MultiIndex({1, 0}), alpha);
    f.set(1, MultiIndex({0, 1}), trial % 2 == 0 ? scalar_pow(alpha, u) : q(1, 3));
    for (int k = 0; k < 2; ++k)
      for (int n = f.basis().degree_begin(2); n < f.basis().size(); ++n) f.set_at(k, n, q(num(rng), 4));
    f = project_equivariant(f, g, 1, 1);
    const auto r = poincare_dulac(f, g, 1, 6);
    CHECK(r.residual_norm == 0.0);
    CHECK(r.normal_form_commutation == 0.0);
    CHECK(r.conjugacy_commutation == 0.0);
    CHECK(r.conjugacy.linear_part() == Matrix<E>::identity(2));
    const auto nonlinear = r.normal_form.nonlinear_part();
    for (int k = 0; k < 2; ++k)
      for (int n = 1; n < nonlinear.basis().size(); ++n)
        if (!nonlinear.at(k, n).is_zero()) CHECK(r.resonance->is_resonant(k, nonlinear.basis()[n]));
  }
}

TEST_CASE("poincare_dulac: anti-diagonal case (c) linearizes equivariantly") {
  const int m = 8, qq = 3;
  const DiagonalGroup g(m, {1, qq});
  Jet<E> f(2, 6);
  f.set(0, MultiIndex({0, 1}), q(1, 3));
  f.set(1, MultiIndex({1, 0}), q(1, 2));
  // Random higher-order terms, then project onto f o gamma = gamma^q o f.
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> num(-3, 3);
  for (int k = 0; k < 2; ++k)
    for (int n = f.basis().degree_begin(2); n < f.basis().size(); ++n) f.set_at(k, n, q(num(rng), 2));
  f = project_equivariant(f, g, 1, qq);
  REQUIRE(f.nonlinear_part().max_abs() > 0.0);
  const auto r = poincare_dulac(f, g, qq, 6);
  CHECK(r.path == NormalizationPath::ResonanceFree);
  CHECK(r.normal_form == Jet<E>::linear(f.linear_part(), 6));
  CHECK(r.residual_norm == 0.0);
  CHECK(r.conjugacy_commutation == 0.0);
  CHECK(r.normal_form_commutation == 0.0);
}

TEST_CASE("poincare_dulac: triangular linear part is pre-normalized") {
  const auto f = make_jet<E>(2, 5, {{0, {1, 0}, q(1, 2)}, {1, {1, 0}, q(1)}, {1, {0, 1}, q(1, 3)}, {0, {1, 1}, q(2)}});
  const auto r = poincare_dulac(f, DiagonalGroup::trivial(2), 1, 5);
  CHECK(r.path == NormalizationPath::Prenormalized);
  REQUIRE(r.prenormalization.has_value());
  CHECK(r.residual_norm == 0.0);
  CHECK(r.normal_form.linear_part().is_diagonal(0.0));
}

TEST_CASE("poincare_dulac: floating mode mirrors exact mode") {
  const auto fe = make_jet<E>(2, 6, {{0, {1, 0}, q(1, 2)}, {1, {0, 1}, q(1, 4)}, {1, {2, 0}, q(1)}, {1, {1, 1}, q(1)},
                                     {0, {0, 2}, q(-1, 3)}, {0, {2, 1}, q(1, 5)}});
  const auto fc = make_jet<C>(2, 6, {{0, {1, 0}, C(0.5)}, {1, {0, 1}, C(0.25)}, {1, {2, 0}, C(1.0)}, {1, {1, 1}, C(1.0)},
                                     {0, {0, 2}, C(-1.0 / 3)}, {0, {2, 1}, C(0.2)}});
  const auto re = poincare_dulac(fe, DiagonalGroup::trivial(2), 1, 6);
  const auto rc = poincare_dulac(fc, DiagonalGroup::trivial(2), 1, 6);
  CHECK(rc.residual_norm < 1e-10);
  for (int k = 0; k < 2; ++k)
    for (int n = 0; n < re.normal_form.basis().size(); ++n)
      CHECK(std::abs(re.normal_form.at(k, n).to_complex() - rc.normal_form.at(k, n)) < 1e-9);
}

TEST_CASE("poincare_dulac: input errors") {
  const auto f = make_jet<E>(2, 4, {{0, {1, 0}, q(1, 2)}, {1, {0, 1}, q(1, 3)}, {1, {1, 0}, q(0)}});
  CHECK(code_of([&] { poincare_dulac(f, DiagonalGroup::trivial(3), 1, 4); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([&] { poincare_dulac(f, DiagonalGroup::trivial(2), 1, 5); }) == ErrorCode::OrderUnderflow);
  const auto repelling = make_jet<E>(2, 4, {{0, {1, 0}, q(2)}, {1, {0, 1}, q(1, 3)}});
  CHECK(code_of([&] { poincare_dulac(repelling, DiagonalGroup::trivial(2), 1, 4); }) == ErrorCode::NonAttracting);
  const auto not_equivariant = make_jet<E>(2, 4, {{0, {1, 0}, q(1, 2)}, {1, {0, 1}, q(1, 3)}, {1, {2, 0}, q(1)}});
  CHECK(code_of([&] { poincare_dulac(not_equivariant, DiagonalGroup(5, {1, 3}), 1, 4); }) == ErrorCode::NotCommuting);
  // Jordan block for 1/2 next to the resonant eigenvalue 1/4.
  const auto jordan = make_jet<E>(3, 4, {{0, {1, 0, 0}, q(1, 2)}, {0, {0, 1, 0}, q(1)}, {1, {0, 1, 0}, q(1, 2)},
                                         {2, {0, 0, 1}, q(1, 4)}, {2, {2, 0, 0}, q(1)}});
  CHECK(code_of([&] { poincare_dulac(jordan, DiagonalGroup::trivial(3), 1, 4); }) == ErrorCode::Unsupported);
}

TEST_CASE("koenigs: linear input") {
  const auto f = make_jet<E>(2, 6, {{0, {1, 0}, q(1)}, {1, {0, 1}, q(1, 3)}});
  const auto r = koenigs(f, 6);
  CHECK(r.linearization == Jet<E>::identity(2, 6));
  CHECK(r.residual == 0.0);
}

TEST_CASE("koenigs: alpha w (1 + w) with alpha = 1/2 has w^2 coefficient 2") {
  const auto f = make_jet<E>(2, 6, {{0, {1, 0}, q(1)}, {1, {0, 1}, q(1, 2)}, {1, {0, 2}, q(1, 2)}});
  const auto r = koenigs(f, 6);
  CHECK(r.linearization.coeff(1, MultiIndex({0, 2})) == q(2));
  CHECK(r.residual == 0.0);
  CHECK(r.extrapolated);
  CHECK(r.depth == 6);
  const auto fc = make_jet<C>(2, 6, {{0, {1, 0}, C(1.0)}, {1, {0, 1}, C(0.5)}, {1, {0, 2}, C(0.5)}});
  const auto rc = koenigs(fc, 6);
  CHECK(std::abs(rc.linearization.coeff(1, MultiIndex({0, 2})) - C(2.0)) < 1e-9);
  CHECK(rc.residual < 1e-9);
}

TEST_CASE("koenigs agrees with the coefficient-by-coefficient oracle") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> num(-3, 3), den(1, 4);
  for (int trial = 0; trial < 6; ++trial) {
    const int order = 5 + trial % 3;
    const E alpha = trial % 2 == 0 ? q(1, 3) : q(-2, 5);
    Jet<E> f(2, order);
    f.set(0, MultiIndex({1, 0}), q(1));
    f.set(1, MultiIndex({0, 1}), alpha);
    for (int n = f.basis().degree_begin(2); n < f.basis().size(); ++n)
      if (f.basis()[n][1] >= 2) f.set_at(1, n, q(num(rng), den(rng)));
    const auto r = koenigs(f, order);
    CHECK(r.residual == 0.0);
    const auto expected = oracle::koenigs_by_coefficients(f, order);
    for (int n = 1; n < f.basis().size(); ++n) {
      const auto it = expected.find(f.basis()[n].exponents());
      const E want = it == expected.end() ? E{} : it->second;
      CHECK(r.linearization.at(1, n) == want);
    }
  }
}

TEST_CASE("koenigs: an invariant eps gives eta o gamma = zeta^q eta") {
  const int m = 5, qq = 2;
  const DiagonalGroup g(m, {1, qq});
  Jet<E> f(2, 8);
  f.set(0, MultiIndex({1, 0}), q(1));
  f.set(1, MultiIndex({0, 1}), q(1, 2));
  // Monomials z^a w^b (b >= 2) of f_2 = alpha w (1 + eps) need a + q b = q mod m.
  for (int n = f.basis().degree_begin(2); n < f.basis().size(); ++n) {
    const MultiIndex& e = f.basis()[n];
    if (e[1] >= 2 && (e[0] + qq * e[1] - qq) % m == 0) f.set_at(1, n, q(1, 1 + e[0]));
  }
  REQUIRE(f.nonlinear_part().max_abs() > 0.0);
  const auto r = koenigs(f, 8);
  CHECK(check_commutes(r.linearization, g, 1).is_zero());
}

TEST_CASE("koenigs: input errors") {
  const auto not_z = make_jet<E>(2, 4, {{0, {1, 0}, q(1, 2)}, {1, {0, 1}, q(1, 2)}});
  CHECK(code_of([&] { koenigs(not_z, 4); }) == ErrorCode::InvalidInput);
  const auto big = make_jet<E>(2, 4, {{0, {1, 0}, q(1)}, {1, {0, 1}, q(3, 2)}});
  CHECK(code_of([&] { koenigs(big, 4); }) == ErrorCode::NonAttracting);
  const auto pure_z = make_jet<E>(2, 4, {{0, {1, 0}, q(1)}, {1, {0, 1}, q(1, 2)}, {1, {1, 1}, q(1)}});
  CHECK(code_of([&] { koenigs(pure_z, 4); }) == ErrorCode::NotDivisible);
}

TEST_CASE("classify_hj_germ: the three cases") {
  CHECK(classify_hj_germ(3, 1, 1).letter == 'a');
  const auto b = classify_hj_germ(5, 2, 1);
  CHECK(b.letter == 'b');
  CHECK(b.kind == HJGermKind::DiagonalPair);
  const auto c = classify_hj_germ(8, 3, 3);
  CHECK(c.letter == 'c');
  CHECK(c.kind == HJGermKind::AntiDiagonal);
  CHECK(classify_hj_germ(8, 3, 5).kind == HJGermKind::Infeasible);
  CHECK(classify_hj_germ(7, 2, 2).kind == HJGermKind::Infeasible);
  CHECK(code_of([] { classify_hj_germ(6, 2, 1); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { classify_hj_germ(6, 1, 3); }) == ErrorCode::InvalidInput);
}

TEST_CASE("classify_hj_germ is invariant under shifts by m") {
  for (long m = 1; m <= 15; ++m)
    for (long qq = 0; qq < m; ++qq)
      for (long k = 0; k < m; ++k) {
        if (std::gcd(qq, m) != 1 || std::gcd(k, m) != 1) continue;
        const auto base = classify_hj_germ(m, qq, k);
        const auto shifted = classify_hj_germ(m, qq + 3 * m, k - 2 * m);
        CHECK(base.kind == shifted.kind);
        CHECK(base.letter == shifted.letter);
      }
}

TEST_CASE("refine_hj_case finds the resonant triangular term") {
  const E alpha = q(1, 2);
  const int m = 5, u = 7;
  Jet<E> nf(2, 8);
  nf.set(0, MultiIndex({1, 0}), alpha);
  nf.set(1, MultiIndex({0, 1}), scalar_pow(alpha, u));
  nf.set(1, MultiIndex({u, 0}), q(1));
  const auto c = refine_hj_case(classify_hj_germ(m, u % m, 1), nf);
  CHECK(c.kind == HJGermKind::ResonantTriangular);
  REQUIRE(c.u.has_value());
  CHECK(*c.u == u);
}

#include "surfdyn/verify/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "surfdyn/algebra/compose.hpp"
#include "surfdyn/algebra/diagonal_group.hpp"
#include "surfdyn/classify/classify.hpp"
#include "surfdyn/normal_forms/hj_case.hpp"
#include "surfdyn/normal_forms/homological.hpp"
#include "surfdyn/normal_forms/koenigs.hpp"
#include "surfdyn/normal_forms/poincare_dulac.hpp"
#include "surfdyn/verify/oracles.hpp"
#include "surfdyn/verify/poly_oracle.hpp"

namespace surfdyn::verify {

namespace {

using E = ExactScalar;
using Failure = std::optional<std::string>;
using Trial = std::function<Failure(int, std::mt19937_64&)>;

struct Outcome {
  bool passed = true;
  std::string detail;
};

CheckResult timed(std::string name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r{std::move(name), false, {}, 0.0};
  try {
    const Outcome o = body();
    r.passed = o.passed;
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// Runs every trial with its own generator; reports the lowest failing index.
Failure run_trials(int count, std::uint64_t seed, bool parallel, const Trial& fn) {
  std::vector<Failure> failures(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < count; ++i) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(i)};
    std::mt19937_64 rng(seq);
    try {
      failures[static_cast<std::size_t>(i)] = fn(i, rng);
    } catch (const std::exception& e) {
      failures[static_cast<std::size_t>(i)] = std::string("exception: ") + e.what();
    }
  }
  for (int i = 0; i < count; ++i)
    if (failures[static_cast<std::size_t>(i)]) return "trial " + std::to_string(i) + ": " + *failures[static_cast<std::size_t>(i)];
  return std::nullopt;
}

Outcome from(const Failure& f, std::string ok) {
  if (f) return {false, *f};
  return {true, std::move(ok)};
}

E rational(long num, long den) { return E(mpq_class(num, den)); }

/// Nonzero rational of modulus < 1 with small height.
E random_contraction(std::mt19937_64& rng) {
  const long den = std::uniform_int_distribution<long>(2, 6)(rng);
  const long num = std::uniform_int_distribution<long>(1, den - 1)(rng);
  return rational(std::bernoulli_distribution(0.3)(rng) ? -num : num, den);
}

E random_coefficient(std::mt19937_64& rng) {
  return rational(std::uniform_int_distribution<long>(-3, 3)(rng), std::uniform_int_distribution<long>(1, 4)(rng));
}

DiagonalGroup random_group(std::mt19937_64& rng) {
  const long p = std::uniform_int_distribution<long>(2, 12)(rng);
  std::uniform_int_distribution<long> w(0, p - 1);
  return DiagonalGroup(p, {w(rng), w(rng)});
}

void fill_nonlinear(Jet<E>& f, std::mt19937_64& rng, double density) {
  std::bernoulli_distribution keep(density);
  for (int k = 0; k < f.dimension(); ++k)
    for (int n = f.basis().degree_begin(2); n < f.basis().size(); ++n)
      if (keep(rng)) f.set_at(k, n, random_coefficient(rng));
}

Jet<E> random_jet(std::mt19937_64& rng, int dim, int order, bool invertible_linear) {
  Jet<E> j(dim, order);
  std::bernoulli_distribution keep(0.4);
  for (int k = 0; k < dim; ++k)
    for (int n = 1; n < j.basis().size(); ++n)
      if (keep(rng)) j.set_at(k, n, random_coefficient(rng));
  if (invertible_linear)
    for (int k = 0; k < dim; ++k)
      for (int i = 0; i < dim; ++i)
        j.set_at(k, j.basis().unit_index(i), k == i ? rational(std::uniform_int_distribution<long>(2, 5)(rng), 3) : E{});
  return j;
}

bool brute_force_clear(const std::vector<E>& lambda, int order) {
  for (const auto& list : oracle::brute_force_resonances(lambda, order))
    if (!list.empty()) return false;
  return true;
}

/// Residual, resonant support and group commutation of one normalization.
Failure check_normal_form(const Jet<E>& f, const NormalFormResult<E>& r, int order) {
  if (r.residual_norm != 0.0) return "nonzero conjugacy residual";
  if (compose_reference(r.full_conjugacy, f, order) != compose_reference(r.normal_form, r.full_conjugacy, order))
    return "conjugacy equation fails under the reference composition";
  const auto a = r.normal_form.linear_part();
  if (!a.is_diagonal(0.0)) return "normal form has a non-diagonal linear part";
  const auto allowed = oracle::brute_force_resonances(a.diagonal_entries(), order);
  const auto nonlinear = r.normal_form.nonlinear_part();
  for (int k = 0; k < nonlinear.dimension(); ++k)
    for (int n = 1; n < nonlinear.basis().size(); ++n) {
      if (nonlinear.at(k, n).is_zero()) continue;
      const auto& list = allowed[static_cast<std::size_t>(k)];
      if (std::find(list.begin(), list.end(), nonlinear.basis()[n].exponents()) == list.end())
        return "non-resonant monomial " + nonlinear.basis()[n].to_string() + " survives";
    }
  if (!check_commutes(r.normal_form, r.group, r.k_twist).is_zero()) return "normal form does not commute with the group";
  if (r.conjugacy_commutation != 0.0) return "conjugacy does not commute with the group";
  return std::nullopt;
}

/// (m, q) with q^2 = 1 mod m and q != 1: the anti-diagonal linear parts.
std::vector<std::pair<long, long>> involutive_pairs() {
  std::vector<std::pair<long, long>> out;
  for (long m = 3; m <= 12; ++m)
    for (long q = 2; q < m; ++q)
      if ((q * q) % m == 1) out.emplace_back(m, q);
  return out;
}

long random_unit(std::mt19937_64& rng, long m) {
  if (m <= 2) return 1;
  long q;
  do q = std::uniform_int_distribution<long>(1, m - 1)(rng);
  while (std::gcd(m, q) != 1);
  return q;
}

AdmissibleDocument star_document(long self, std::vector<CyclicQuotientData> legs) {
  AdmissibleDocument doc{oracle::star_graph({0, self, std::move(legs)}), std::nullopt, CentralPayload{}};
  doc.central->finite_order = true;
  return doc;
}

/// Second graph glued to the first with ids shifted past it.
DualGraph disjoint_union(const DualGraph& a, const DualGraph& b, int& offset) {
  offset = 0;
  for (const auto& v : a.vertices()) offset = std::max(offset, v.id + 1);
  auto vs = a.vertices();
  auto es = a.edges();
  for (auto v : b.vertices()) {
    v.id += offset;
    vs.push_back(v);
  }
  for (const auto& [x, y] : b.edges()) es.emplace_back(x + offset, y + offset);
  return DualGraph(std::move(vs), std::move(es));
}

DualGraph with_edge(const DualGraph& g, int a, int b) {
  auto es = g.edges();
  es.emplace_back(a, b);
  return DualGraph(g.vertices(), std::move(es));
}

/// Every choice of center must be refused with one of the given codes.
Failure refused_from_every_center(const DualGraph& g, std::initializer_list<ErrorCode> codes) {
  for (const auto& v : g.vertices()) {
    try {
      propagate_hyperbolicity(g, v.id);
      return "accepted with center " + std::to_string(v.id);
    } catch (const Error& e) {
      if (std::find(codes.begin(), codes.end(), e.code()) == codes.end())
        return std::string("unexpected error ") + std::string(code_name(e.code()));
    }
  }
  return std::nullopt;
}

}  // namespace

CheckResult check_normal_form_exactness(const SuiteOptions& opt) {
  return timed("1 Poincare-Dulac exactness", [&] {
    constexpr int kOrder = 8;
    const auto start = std::chrono::steady_clock::now();
    const auto failure = run_trials(50, opt.seed ^ 0x101, opt.parallel, [](int trial, std::mt19937_64& rng) -> Failure {
      const E l0 = random_contraction(rng);
      E l1;
      switch (trial % 3) {
        case 0: l1 = scalar_pow(l0, std::uniform_int_distribution<long>(2, 4)(rng)); break;
        case 1: l1 = random_contraction(rng); break;
        default: l1 = l0 * random_contraction(rng); break;
      }
      const DiagonalGroup g = random_group(rng);
      Jet<E> f(2, kOrder);
      f.set(0, MultiIndex({1, 0}), l0);
      f.set(1, MultiIndex({0, 1}), l1);
      if (trial % 4 == 3 && l0 != l1) f.set(1, MultiIndex({1, 0}), E(1));
      fill_nonlinear(f, rng, 0.5);
      f = project_equivariant(f, g, 1, 1);
      return check_normal_form(f, poincare_dulac(f, g, 1, kOrder), kOrder);
    });
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure) return Outcome{false, *failure};
    std::ostringstream os;
    os << "50 germs at order 8 in " << secs << " s";
    return Outcome{secs < 30.0, os.str()};
  });
}

CheckResult check_nonresonant_linearization(const SuiteOptions& opt) {
  return timed("2 non-resonant linearization", [&] {
    constexpr int kOrder = 8;
    const auto pairs = involutive_pairs();
    const auto failure =
        run_trials(45, opt.seed ^ 0x202, opt.parallel, [&pairs](int trial, std::mt19937_64& rng) -> Failure {
          Jet<E> f(2, kOrder);
          if (trial % 3 == 2) {
            const auto [m, q] = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
            const DiagonalGroup g(m, {1, q});
            const E r = random_contraction(rng);
            const E t = rational(std::uniform_int_distribution<long>(1, 4)(rng), std::uniform_int_distribution<long>(1, 4)(rng));
            if (!brute_force_clear({r, -r}, kOrder)) return "opposite spectrum reported resonant";
            f.set(0, MultiIndex({0, 1}), r * t);
            f.set(1, MultiIndex({1, 0}), r / t);
            fill_nonlinear(f, rng, 0.5);
            f = project_equivariant(f, g, 1, q);
            const auto res = poincare_dulac(f, g, q, kOrder);
            if (res.residual_norm != 0.0) return "nonzero residual";
            if (res.normal_form != Jet<E>::linear(f.linear_part(), kOrder)) return "anti-diagonal germ not linearized";
            if (!check_commutes(res.normal_form, g, q).is_zero()) return "linear form loses the twisted commutation";
            return std::nullopt;
          }
          E l0, l1;
          do {
            l0 = random_contraction(rng);
            l1 = random_contraction(rng);
          } while (l0 == l1 || !brute_force_clear({l0, l1}, kOrder));
          f.set(0, MultiIndex({1, 0}), l0);
          f.set(1, MultiIndex({0, 1}), l1);
          const bool triangular = trial % 3 == 1;
          const DiagonalGroup g = triangular ? DiagonalGroup::trivial(2) : random_group(rng);
          if (triangular) f.set(1, MultiIndex({1, 0}), random_contraction(rng));
          fill_nonlinear(f, rng, 0.5);
          f = project_equivariant(f, g, 1, 1);
          const auto res = poincare_dulac(f, g, 1, kOrder);
          if (auto fail = check_normal_form(f, res, kOrder)) return fail;
          const Jet<E> expected = Jet<E>::linear(triangular ? res.normal_form.linear_part() : f.linear_part(), kOrder);
          if (res.normal_form != expected) return "normal form keeps nonlinear terms";
          return std::nullopt;
        });
    return from(failure, "45 germs: diagonal, triangular and anti-diagonal linear parts");
  });
}

CheckResult check_koenigs_equivalence(const SuiteOptions& opt) {
  return timed("3 Koenigs equivalence", [&] {
    constexpr int kOrder = 10;
    const auto failure = run_trials(20, opt.seed ^ 0x303, opt.parallel, [](int, std::mt19937_64& rng) -> Failure {
      const long m = std::uniform_int_distribution<long>(2, 12)(rng);
      const long q = random_unit(rng, m);
      const DiagonalGroup g(m, {1, q});
      const E alpha = random_contraction(rng);
      Jet<E> f(2, kOrder);
      f.set(0, MultiIndex({1, 0}), E(1));
      f.set(1, MultiIndex({0, 1}), alpha);
      std::bernoulli_distribution keep(0.6);
      for (int n = f.basis().degree_begin(2); n < f.basis().size(); ++n) {
        const MultiIndex& e = f.basis()[n];
        if (e[1] >= 2 && (e[0] + q * e[1] - q) % m == 0 && keep(rng)) f.set_at(1, n, alpha * random_coefficient(rng));
      }
      const auto r = koenigs(f, kOrder);
      if (r.residual != 0.0) return "nonzero residual";
      const auto expected = oracle::koenigs_by_coefficients(f, kOrder);
      for (int n = 1; n < f.basis().size(); ++n) {
        const auto it = expected.find(f.basis()[n].exponents());
        const E want = it == expected.end() ? E{} : it->second;
        if (r.linearization.at(1, n) != want) return "coefficient of " + f.basis()[n].to_string() + " differs from the oracle";
      }
      const auto scale = Jet<E>::linear(Matrix<E>::diagonal({E(1), alpha}), kOrder);
      if (compose_reference(r.linearization, f, kOrder) != compose_reference(scale, r.linearization, kOrder))
        return "eta o f != alpha eta";
      if (!check_commutes(r.linearization, g, 1).is_zero()) return "eta o gamma != zeta^q eta";
      return std::nullopt;
    });
    if (failure) return Outcome{false, *failure};
    Jet<E> hand(2, kOrder);
    hand.set(0, MultiIndex({1, 0}), E(1));
    hand.set(1, MultiIndex({0, 1}), rational(1, 2));
    hand.set(1, MultiIndex({0, 2}), rational(1, 2));
    const E w2 = koenigs(hand, kOrder).linearization.coeff(1, MultiIndex({0, 2}));
    if (w2 != E(2)) return Outcome{false, "hand case w^2 coefficient is " + w2.to_string()};
    return Outcome{true, "20 families at order 10; hand case w^2 coefficient 2"};
  });
}

CheckResult check_hj_round_trip(const SuiteOptions& opt) {
  return timed("4 Hirzebruch-Jung round trip", [&] {
    const auto start = std::chrono::steady_clock::now();
    // One trial per m; the generator is unused.
    const auto failure = run_trials(198, opt.seed, opt.parallel, [](int trial, std::mt19937_64&) -> Failure {
      const long m = trial + 3;
      for (long q = 2; q < m; ++q) {
        if (std::gcd(m, q) != 1) continue;
        const auto w = hj_expand(m, q).weights;
        const auto where = " at (" + std::to_string(m) + ", " + std::to_string(q) + ")";
        if (!std::all_of(w.begin(), w.end(), [](long b) { return b >= 2; })) return "weight below 2" + where;
        if (oracle::continued_fraction_value(w) != mpq_class(m, q)) return "continued fraction differs" + where;
        if (!(hj_fold(w) == CyclicQuotientData{m, q})) return "fold does not invert expand" + where;
        if (!is_negative_definite(intersection_matrix(DualGraph::chain(w)))) return "chain not negative definite" + where;
      }
      return std::nullopt;
    });
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure) return Outcome{false, *failure};
    std::ostringstream os;
    os << "all coprime 2 <= q < m <= 200 in " << secs << " s";
    return Outcome{secs < 10.0, os.str()};
  });
}

CheckResult check_cycle_exclusion(const SuiteOptions& opt) {
  return timed("5 cycle exclusion", [&] {
    const auto failure = run_trials(1000, opt.seed ^ 0x505, opt.parallel, [](int, std::mt19937_64& rng) -> Failure {
      const int n = std::uniform_int_distribution<int>(2, 8)(rng);
      const auto cycle = oracle::random_matched_cycle(rng, n);
      const auto cert = cycle_obstruction(cycle);
      if (!cert.product || *cert.product != 1) return "telescoping product is not 1";
      if (!cert.infeasible) return "strict system not flagged infeasible";
      if (std::all_of(cert.corner_holds.begin(), cert.corner_holds.end(), [](bool h) { return h; }))
        return "every corner inequality holds on a cycle";
      // Independent product by repeated multiplication.
      long l = 1;
      for (const auto& c : cycle) l = std::lcm(l, static_cast<long>(c.a_e));
      mpq_class prod = 1;
      for (const auto& c : cycle) {
        for (long i = 0; i < l / c.a_e; ++i) prod *= *c.lambda.exact;
        for (long i = 0; i < l / c.a_e_prime; ++i) prod *= *c.mu.exact;
      }
      prod.canonicalize();
      if (prod != 1) return "oracle product is not 1";
      return std::nullopt;
    });
    return from(failure, "1000 matched cycles, zero failures");
  });
}

CheckResult check_propagation_soundness(const SuiteOptions& opt) {
  return timed("6 propagation soundness", [&] {
    const auto stars = run_trials(200, opt.seed ^ 0x606, opt.parallel, [](int, std::mt19937_64& rng) -> Failure {
      const auto spec = oracle::random_star_spec(rng);
      const DualGraph g = oracle::star_graph(spec, &rng);
      const auto lab = propagate_hyperbolicity(g, 0, spec.center_genus > 0);
      int non_hyperbolic = 0;
      for (const auto& [v, t] : lab.tags) non_hyperbolic += t != VertexTag::Hyperbolic;
      if (non_hyperbolic != 1) return "labeling has " + std::to_string(non_hyperbolic) + " non-hyperbolic vertices";
      const auto rho = oracle::consistent_multipliers(g, lab, rng);
      for (const auto& c : annotate_corners(g, lab, rho))
        if (!corner_inequality(c)) return "corner " + std::to_string(c.e) + "-" + std::to_string(c.e_prime) + " violates the inequality";
      return std::nullopt;
    });
    if (stars) return Outcome{false, *stars};
    const auto trees = run_trials(100, opt.seed ^ 0x607, opt.parallel, [](int, std::mt19937_64& rng) -> Failure {
      const DualGraph a = oracle::star_graph(oracle::random_star_spec(rng));
      const DualGraph b = oracle::star_graph(oracle::random_star_spec(rng));
      int offset = 0;
      DualGraph g = disjoint_union(a, b, offset);
      // Join the two centers, possibly through a short chain of (-2) curves.
      const int bridge = std::uniform_int_distribution<int>(0, 2)(rng);
      auto vs = g.vertices();
      auto es = g.edges();
      int fresh = 0;
      for (const auto& v : vs) fresh = std::max(fresh, v.id + 1);
      int prev = 0;
      for (int i = 0; i < bridge; ++i) {
        const int id = fresh + i;
        vs.push_back({id, 0, -2, std::nullopt});
        es.emplace_back(prev, id);
        prev = id;
      }
      es.emplace_back(prev, offset);
      return refused_from_every_center(DualGraph(std::move(vs), std::move(es)), {ErrorCode::BranchedLeg});
    });
    if (trees) return Outcome{false, "two branch points: " + *trees};
    const auto cycles = run_trials(100, opt.seed ^ 0x608, opt.parallel, [](int trial, std::mt19937_64& rng) -> Failure {
      if (trial % 4 == 0) return refused_from_every_center(oracle::cycle_graph(2 + trial % 7), {ErrorCode::NotATree});
      const DualGraph g = oracle::star_graph(oracle::random_star_spec(rng));
      std::uniform_int_distribution<int> pick(0, g.size() - 1);
      int a, b;
      do {
        a = g.vertices()[static_cast<std::size_t>(pick(rng))].id;
        b = g.vertices()[static_cast<std::size_t>(pick(rng))].id;
      } while (a == b || g.multiplicity(a, b) > 0);
      return refused_from_every_center(with_edge(g, a, b), {ErrorCode::NotATree});
    });
    if (cycles) return Outcome{false, "cycles: " + *cycles};
    return Outcome{true, "200 stars labeled; 100 two-branch trees and 100 cyclic graphs refused"};
  });
}

CheckResult check_orbifold_table(const SuiteOptions& opt) {
  return timed("7 orbifold table", [&] {
    for (long m = 2; m <= 40; ++m) {
      if (classify_orbifold(OrbifoldSurface::make(0, {m})) != OrbifoldType::Bad)
        return Outcome{false, "one mark " + std::to_string(m) + " not bad"};
      for (long n = 2; n <= 40; ++n) {
        const bool bad = classify_orbifold(OrbifoldSurface::make(0, {m, n})) == OrbifoldType::Bad;
        if (bad != (m != n)) return Outcome{false, "two marks " + std::to_string(m) + ", " + std::to_string(n)};
      }
    }
    const auto failure = run_trials(500, opt.seed ^ 0x707, opt.parallel, [](int, std::mt19937_64& rng) -> Failure {
      const auto s = oracle::random_orbifold(rng);
      const auto t = classify_orbifold(s);
      const mpq_class chi = euler_characteristic(s);
      if (t == OrbifoldType::Bad) {
        if (s.genus != 0 || chi <= 0) return "bad orbifold with g > 0 or chi <= 0";
        return std::nullopt;
      }
      const int sign = sgn(chi);
      const auto want = sign > 0 ? OrbifoldType::Spherical : sign == 0 ? OrbifoldType::Euclidean : OrbifoldType::Hyperbolic;
      if (t != want) return std::string("geometrization ") + to_string(t) + " disagrees with the sign of chi";
      const auto cover = smooth_cover_data(s, canonical_cover_degree(s));
      if (!cover.integral || cover.genus < 0) return "canonical cover genus " + cover.genus.get_str() + " is not a non-negative integer";
      return std::nullopt;
    });
    if (failure) return Outcome{false, *failure};
    const auto s237 = OrbifoldSurface::make(0, {2, 3, 7});
    const long nn = canonical_cover_degree(s237);
    const auto c = smooth_cover_data(s237, nn);
    if (nn != 84 || c.genus != 2) return Outcome{false, "{2,3,7}: NN = " + std::to_string(nn) + ", genus " + c.genus.get_str()};
    return Outcome{true, "forced cases, 500 random inputs, {2,3,7} covered by genus 2 at NN = 84"};
  });
}

CheckResult check_decision_table(const SuiteOptions&) {
  return timed("8 end-to-end decision table", [] {
    struct Row {
      const char* label;
      AdmissibleDocument doc;
      ClassificationKind kind;
      std::optional<OrbifoldType> geometry;
      OrbitSurfaceKind surface;
    };
    Jet<E> germ(2, kDefaultOrder);
    germ.set(0, MultiIndex({1, 0}), rational(1, 2));
    germ.set(1, MultiIndex({0, 1}), rational(1, 3));
    germ.set(0, MultiIndex({0, 3}), E(1));
    germ.set(1, MultiIndex({2, 0}), E(1));
    AdmissibleDocument chain{DualGraph::chain({3, 2}), ChainPayload{germ, DiagonalGroup(5, {1, 2}), 1}, std::nullopt};
    const std::vector<Row> rows{
        {"chain", chain, ClassificationKind::CyclicQuotient, std::nullopt, OrbitSurfaceKind::Hopf},
        {"spherical star", star_document(-2, {{2, 1}, {2, 1}, {3, 1}}), ClassificationKind::WeightedHomogeneous,
         OrbifoldType::Spherical, OrbitSurfaceKind::Hopf},
        {"euclidean star", star_document(-2, {{2, 1}, {3, 1}, {6, 1}}), ClassificationKind::WeightedHomogeneous,
         OrbifoldType::Euclidean, OrbitSurfaceKind::Kodaira},
        {"hyperbolic star", star_document(-2, {{2, 1}, {3, 1}, {7, 1}}), ClassificationKind::WeightedHomogeneous,
         OrbifoldType::Hyperbolic, OrbitSurfaceKind::KappaOne}};
    std::string summary;
    for (const auto& row : rows) {
      const auto c = classify_singularity(row.doc);
      const auto v = classify_orbit_surface(c);
      const std::optional<OrbifoldType> geometry =
          c.weighted ? std::optional<OrbifoldType>(c.weighted->geometry) : std::nullopt;
      if (c.kind != row.kind || geometry != row.geometry || v.kind != row.surface || v.kahler)
        return Outcome{false, std::string(row.label) + " classified as " + to_string(v.kind)};
      if (!summary.empty()) summary += ", ";
      summary += std::string(row.label) + " -> " + to_string(v.kind);
    }
    return Outcome{true, summary};
  });
}

std::vector<CheckResult> acceptance_checks(const SuiteOptions& opt) {
  return {check_normal_form_exactness(opt), check_nonresonant_linearization(opt), check_koenigs_equivalence(opt),
          check_hj_round_trip(opt),         check_cycle_exclusion(opt),           check_propagation_soundness(opt),
          check_orbifold_table(opt),        check_decision_table(opt)};
}

std::vector<CheckResult> invariant_checks(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  const bool par = opt.parallel;
  const std::uint64_t seed = opt.seed;

  out.push_back(timed("compose is associative up to truncation", [&] {
    return from(run_trials(12, seed ^ 0x11, par, [](int trial, std::mt19937_64& rng) -> Failure {
                  const int dim = 1 + trial % 3;
                  const auto f = random_jet(rng, dim, 5, false), g = random_jet(rng, dim, 5, false),
                             h = random_jet(rng, dim, 5, false);
                  if (compose(f, compose(g, h, 5), 5) != compose(compose(f, g, 5), h, 5)) return "not associative";
                  if (compose(f, g, 5) != compose_reference(f, g, 5)) return "parallel kernel differs from the serial reference";
                  return std::nullopt;
                }),
                "12 random triples, d = 1..3");
  }));
  out.push_back(timed("invert is a two-sided inverse", [&] {
    return from(run_trials(10, seed ^ 0x12, par, [](int trial, std::mt19937_64& rng) -> Failure {
                  const int dim = 1 + trial % 3;
                  const auto f = random_jet(rng, dim, 6, true);
                  const auto g = invert(f, 6);
                  const auto id = Jet<E>::identity(dim, 6);
                  if (compose(f, g, 6) != id || compose(g, f, 6) != id) return "inverse residual is nonzero";
                  return std::nullopt;
                }),
                "10 random jets at order 6");
  }));
  out.push_back(timed("equivariant_average is an idempotent projection", [&] {
    return from(run_trials(12, seed ^ 0x13, par, [](int, std::mt19937_64& rng) -> Failure {
                  const auto g = random_group(rng);
                  const long rho = random_unit(rng, g.order());
                  const auto h = random_jet(rng, 2, 4, false);
                  const auto avg = equivariant_average(h, g, 1, rho);
                  if (avg != project_equivariant(h, g, 1, rho)) return "average differs from the lattice projection";
                  if (equivariant_average(avg, g, 1, rho) != avg) return "average is not idempotent";
                  if (!commutes(avg, g, rho)) return "average does not commute";
                  if (apply_group(h, g, g.order(), GroupSide::Pre) != h || apply_group(h, g, g.order(), GroupSide::Post) != h)
                    return "gamma^p acts nontrivially";
                  return std::nullopt;
                }),
                "12 random groups and jets");
  }));
  out.push_back(timed("resonances agree with brute force", [&] {
    return from(run_trials(40, seed ^ 0x14, par, [](int trial, std::mt19937_64& rng) -> Failure {
                  const int dim = 2 + trial % 2;
                  std::vector<E> lambda;
                  for (int i = 0; i < dim; ++i)
                    lambda.push_back(i > 0 && trial % 4 == 0 ? scalar_pow(lambda[0], 2 + i) : random_contraction(rng));
                  const int order = 6;
                  const auto report = resonances(lambda, order);
                  auto brute = oracle::brute_force_resonances(lambda, order);
                  for (int k = 0; k < dim; ++k) {
                    std::vector<std::vector<int>> got;
                    for (const auto& n : report.resonant[static_cast<std::size_t>(k)]) got.push_back(n.exponents());
                    auto& want = brute[static_cast<std::size_t>(k)];
                    std::sort(got.begin(), got.end());
                    std::sort(want.begin(), want.end());
                    if (got != want) return "resonance lists differ in coordinate " + std::to_string(k);
                  }
                  return std::nullopt;
                }),
                "40 spectra, d = 2, 3, order 6");
  }));
  out.push_back(timed("homological split identity G = S + H A - A H", [&] {
    return from(run_trials(12, seed ^ 0x15, par, [](int trial, std::mt19937_64& rng) -> Failure {
                  const E l0 = random_contraction(rng);
                  const auto a = Matrix<E>::diagonal({l0, trial % 2 == 0 ? l0 * l0 : random_contraction(rng)});
                  const int deg = 2 + trial % 3;
                  Jet<E> g(2, 4);
                  for (int k = 0; k < 2; ++k)
                    for (int n = g.basis().degree_begin(deg); n < g.basis().degree_end(deg); ++n)
                      g.set_at(k, n, random_coefficient(rng));
                  const auto split = homological_split(g, a);
                  if (split.resonant + homological_operator(split.transform, a) != g) return "identity fails";
                  return std::nullopt;
                }),
                "12 homogeneous parts of degree 2..4");
  }));
  out.push_back(timed("classify_hj_germ is invariant under shifts by m", [] {
    for (long m = 1; m <= 20; ++m)
      for (long q = 0; q < m; ++q)
        for (long k = 0; k < m; ++k) {
          if (std::gcd(q, m) != 1 || std::gcd(k, m) != 1) continue;
          const auto base = classify_hj_germ(m, q, k);
          const auto shifted = classify_hj_germ(m, q + 3 * m, k - 2 * m);
          if (base.kind != shifted.kind || base.letter != shifted.letter)
            return Outcome{false, "m = " + std::to_string(m) + ", q = " + std::to_string(q) + ", k = " + std::to_string(k)};
        }
    return Outcome{true, "all unit pairs with m <= 20"};
  }));
  out.push_back(timed("Sylvester test agrees with eigenvalues", [&] {
    return from(run_trials(400, seed ^ 0x21, par, [](int, std::mt19937_64& rng) -> Failure {
                  const int n = std::uniform_int_distribution<int>(1, 12)(rng);
                  IntMatrix m(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
                  std::uniform_int_distribution<long> off(-2, 2), diag(-3 * n, 1);
                  for (std::size_t i = 0; i < m.size(); ++i) {
                    m[i][i] = diag(rng);
                    for (std::size_t j = i + 1; j < m.size(); ++j) m[i][j] = m[j][i] = off(rng);
                  }
                  if (is_negative_definite(m) != oracle::negative_definite_by_eigenvalues(m)) return "verdicts differ";
                  return std::nullopt;
                }),
                "400 symmetric matrices up to 12 x 12");
  }));
  out.push_back(timed("blow-downs keep contractible chains negative definite", [&] {
    return from(run_trials(100, seed ^ 0x22, par, [](int, std::mt19937_64& rng) -> Failure {
                  const long m = std::uniform_int_distribution<long>(2, 40)(rng);
                  const long q = random_unit(rng, m);
                  const int blowups = std::uniform_int_distribution<int>(0, 5)(rng);
                  DualGraph g = oracle::random_blown_up_chain(rng, m, q, blowups);
                  const auto model = minimal_negative_model(g);
                  if (!model.smooth_point && shape(model.graph).kind != ShapeKind::Chain) return "minimal model is not a chain";
                  auto w = model.smooth_point ? std::vector<long>{} : chain_weights(model.graph);
                  const auto expected = hj_expand(m, q).weights;
                  if (w != expected) std::reverse(w.begin(), w.end());
                  if (w != expected) return "minimal chain differs from the expansion";
                  while (true) {
                    std::optional<int> pick;
                    for (const auto& v : g.vertices())
                      if (v.self == -1 && v.genus == 0) pick = v.id;
                    if (!pick) break;
                    g = blow_down(g, *pick).graph;
                    if (!is_negative_definite(intersection_matrix(g))) return "blow-down broke negative definiteness";
                  }
                  return std::nullopt;
                }),
                "100 blown-up chains");
  }));
  out.push_back(timed("dual q reverses the chain", [] {
    for (long m = 2; m <= 80; ++m)
      for (long q = 1; q < m; ++q) {
        if (std::gcd(m, q) != 1) continue;
        auto w = hj_expand(m, q).weights;
        std::reverse(w.begin(), w.end());
        if (w != hj_expand(m, dual_q(m, q)).weights) return Outcome{false, "(" + std::to_string(m) + ", " + std::to_string(q) + ")"};
      }
    return Outcome{true, "all pairs with m <= 80"};
  }));
  out.push_back(timed("chains propagate from either end", [&] {
    return from(run_trials(60, seed ^ 0x31, par, [](int, std::mt19937_64& rng) -> Failure {
                  const long m = std::uniform_int_distribution<long>(2, 60)(rng);
                  const DualGraph g = DualGraph::chain(hj_expand(m, random_unit(rng, m)).weights);
                  const auto walk = chain_walk(g);
                  for (int end : {walk.front(), walk.back()}) {
                    const auto lab = propagate_hyperbolicity(g, end);
                    int non_hyperbolic = 0;
                    for (const auto& [v, t] : lab.tags) non_hyperbolic += t != VertexTag::Hyperbolic;
                    if (non_hyperbolic > 1) return "two non-hyperbolic vertices";
                  }
                  return std::nullopt;
                }),
                "60 chains, both ends");
  }));
  out.push_back(timed("Euler characteristic decreases as a multiplicity grows", [&] {
    return from(run_trials(300, seed ^ 0x41, par, [](int, std::mt19937_64& rng) -> Failure {
                  const auto s = oracle::random_orbifold(rng);
                  if (s.marks.empty()) return std::nullopt;
                  auto marks = s.marks;
                  const auto i = std::uniform_int_distribution<std::size_t>(0, marks.size() - 1)(rng);
                  marks[i] += 1 + std::uniform_int_distribution<long>(0, 3)(rng);
                  if (euler_characteristic(OrbifoldSurface::make(s.genus, marks)) >= euler_characteristic(s))
                    return "chi did not decrease";
                  auto with_one = s.marks;
                  with_one.push_back(1);
                  if (euler_characteristic(OrbifoldSurface::make(s.genus, with_one)) != euler_characteristic(s))
                    return "a multiplicity-one mark changed chi";
                  return std::nullopt;
                }),
                "300 random orbifolds");
  }));
  out.push_back(timed("cover genus is integral at multiples of 2 lcm den(chi), non-spherical bases", [&] {
    return from(run_trials(300, seed ^ 0x42, par, [](int, std::mt19937_64& rng) -> Failure {
                  const auto s = oracle::random_orbifold(rng);
                  const auto t = classify_orbifold(s);
                  if (t == OrbifoldType::Bad || t == OrbifoldType::Spherical) return std::nullopt;
                  const long base = 2 * s.marks_lcm() * euler_characteristic(s).get_den().get_si();
                  for (long k = 1; k <= 3; ++k) {
                    const auto c = smooth_cover_data(s, k * base);
                    if (!c.integral || c.genus < 0) return "genus " + c.genus.get_str() + " at NN = " + std::to_string(k * base);
                  }
                  return std::nullopt;
                }),
                "300 random orbifolds");
  }));
  out.push_back(timed("NN deg_orb is integral at multiples of lcm", [&] {
    return from(run_trials(300, seed ^ 0x43, par, [](int, std::mt19937_64& rng) -> Failure {
                  const auto s = oracle::random_orbifold(rng);
                  OrbibundleData l{s, std::uniform_int_distribution<long>(-5, 2)(rng), {}};
                  for (long m : s.marks) l.local.emplace_back(m, std::uniform_int_distribution<long>(0, m - 1)(rng));
                  l.validate();
                  mpq_class scaled = orbidegree(l) * s.marks_lcm() * std::uniform_int_distribution<long>(1, 4)(rng);
                  scaled.canonicalize();
                  if (scaled.get_den() != 1) return "non-integral degree " + scaled.get_str();
                  return std::nullopt;
                }),
                "300 random bundles");
  }));
  out.push_back(timed("classification is invariant under relabeling and leg order", [&] {
    return from(run_trials(60, seed ^ 0x51, par, [](int trial, std::mt19937_64& rng) -> Failure {
                  if (trial % 2 == 0) {
                    auto spec = oracle::random_star_spec(rng);
                    AdmissibleDocument doc{oracle::star_graph(spec), std::nullopt, CentralPayload{}};
                    const auto a = classify_singularity(doc);
                    std::shuffle(spec.legs.begin(), spec.legs.end(), rng);
                    doc.graph = oracle::relabeled(oracle::star_graph(spec), rng);
                    const auto b = classify_singularity(doc);
                    if (!(a.weighted->base == b.weighted->base) || a.weighted->orbidegree != b.weighted->orbidegree ||
                        classify_orbit_surface(a).kind != classify_orbit_surface(b).kind)
                      return "star verdict changed";
                    if (a.weighted->geometry == OrbifoldType::Bad) return "star base is bad";
                    return std::nullopt;
                  }
                  const long m = std::uniform_int_distribution<long>(2, 30)(rng);
                  const long q = random_unit(rng, m);
                  const DualGraph g = oracle::random_blown_up_chain(rng, m, q, 3);
                  const auto a = classify_singularity({g, std::nullopt, std::nullopt});
                  const auto b = classify_singularity({oracle::relabeled(g, rng), std::nullopt, std::nullopt});
                  if (a.cyclic->m != m || a.cyclic->q != canonical_q(m, q) || a.cyclic->q != b.cyclic->q)
                    return "chain verdict changed";
                  if (!(hj_fold(a.cyclic->chain) == CyclicQuotientData{m, a.cyclic->q})) return "chain does not refold";
                  auto w = hj_expand(m, a.cyclic->q).weights;
                  auto minimal = chain_weights(a.minimal_model);
                  if (w != minimal) std::reverse(w.begin(), w.end());
                  if (w != minimal) return "re-expansion differs from the minimal chain";
                  return std::nullopt;
                }),
                "30 stars and 30 blown-up chains");
  }));
  out.push_back(timed("orbit surface table has four reachable rows, never Kahler", [] {
    int rows = 0;
    for (auto kind : {ClassificationKind::CyclicQuotient, ClassificationKind::WeightedHomogeneous})
      for (std::optional<OrbifoldType> base : {std::optional<OrbifoldType>{}, std::optional(OrbifoldType::Spherical),
                                               std::optional(OrbifoldType::Euclidean), std::optional(OrbifoldType::Hyperbolic)}) {
        if ((kind == ClassificationKind::CyclicQuotient) != !base) continue;
        const auto v = orbit_surface_for(kind, base);
        if (v.kahler) return Outcome{false, "Kahler verdict"};
        ++rows;
      }
    try {
      orbit_surface_for(ClassificationKind::WeightedHomogeneous, OrbifoldType::Bad);
      return Outcome{false, "bad base accepted"};
    } catch (const Error&) {
    }
    return Outcome{rows == 4, std::to_string(rows) + " rows"};
  }));
  return out;
}

std::vector<CheckResult> full_suite(const SuiteOptions& opt) {
  auto out = acceptance_checks(opt);
  for (auto& r : invariant_checks(opt)) out.push_back(std::move(r));
  return out;
}

}  // namespace surfdyn::verify

#include "surfdyn/classify/classify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "surfdyn/normal_forms/poincare_dulac.hpp"

namespace surfdyn {

namespace {

std::string join(const std::vector<long>& xs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << ']';
  return os.str();
}

long mod(long x, long m) { return ((x % m) + m) % m; }

class Log {
 public:
  explicit Log(std::vector<ProvenanceEntry>& out) : out_(out) {}
  void operator()(std::string step, std::string theorem, std::string quote) {
    out_.push_back({std::move(step), std::move(theorem), std::move(quote)});
  }

 private:
  std::vector<ProvenanceEntry>& out_;
};

/// Validates supplied corner annotations on a tree. When no center is given,
/// the first vertex (by id) that yields a consistent labeling is used.
void check_tree_dynamics(const DualGraph& g, std::optional<bool> finite_order, Log& log) {
  const auto& dyn = g.dynamics();
  if (!dyn || (dyn->corners.empty() && !dyn->center)) return;
  std::vector<int> candidates;
  if (dyn->center) {
    require(g.contains(*dyn->center), ErrorCode::InconsistentDynamics,
            "annotated center " + std::to_string(*dyn->center) + " is not a vertex");
    candidates.push_back(*dyn->center);
  } else {
    for (const auto& v : g.vertices()) candidates.push_back(v.id);
    std::sort(candidates.begin(), candidates.end());
  }
  std::string first_failure;
  for (int c : candidates) {
    std::vector<std::string> problems;
    try {
      const bool fo = finite_order.value_or(g.vertex(c).genus > 0);
      const auto labeling = propagate_hyperbolicity(g, c, fo);
      problems = check_corner_annotations(g, labeling, dyn->corners);
    } catch (const Error& e) {
      problems.push_back(e.what());
    }
    if (problems.empty()) {
      log("dynamics", "hyperbolicity propagation",
          "corner data consistent with center " + std::to_string(c) + " (" + std::to_string(dyn->corners.size()) +
              " corners)");
      return;
    }
    if (first_failure.empty()) first_failure = "center " + std::to_string(c) + ": " + problems.front();
  }
  fail(ErrorCode::InconsistentDynamics, "no consistent hyperbolicity labeling; " + first_failure);
}

[[noreturn]] void reject_cycle(const DualGraph& g, Log& log) {
  const auto cycle = cycle_walk(g);
  std::optional<CycleCertificate> cert;
  std::string detail = "no corner data supplied";
  if (g.dynamics() && !g.dynamics()->corners.empty()) {
    cert = cycle_obstruction(cycle_corners(g));
    std::ostringstream os;
    os << "telescoping exponent L=" << cert->exponent;
    if (cert->product) os << ", product " << cert->product->get_str();
    os << ", log sum " << cert->log_sum;
    detail = os.str();
  }
  log("cycle", "cycle exclusion", detail);
  throw CycleObstructionError("the configuration is a cycle of curves; " + detail, cert, cycle);
}

CyclicQuotientVerdict chain_case(const AdmissibleDocument& doc, const MinimalModel& model, int order, ScalarMode mode,
                                 double tol, Classification& out, Log& log) {
  CyclicQuotientVerdict v;
  std::vector<long> weights = model.smooth_point ? std::vector<long>{} : chain_weights(model.graph);
  const CyclicQuotientData folded = hj_fold(weights);
  v.m = folded.m;
  log("fold", "Hirzebruch-Jung chain",
      "chain " + join(weights) + " folds to (" + std::to_string(folded.m) + "," + std::to_string(folded.q) + ")");

  const ChainPayload payload = doc.chain.value_or(ChainPayload{});
  if (payload.group) {
    const DiagonalGroup& g = *payload.group;
    require(g.dimension() == 2, ErrorCode::InconsistentDynamics, "chain case needs a group acting on two variables");
    require(g.order() == v.m, ErrorCode::InconsistentDynamics,
            "group order " + std::to_string(g.order()) + " differs from m = " + std::to_string(v.m));
    const long q = v.m == 1 ? 1 : mod(g.weight(1) * dual_q(v.m, g.weight(0)), v.m);
    require(v.m == 1 || q == folded.q || q == dual_q(v.m, folded.q), ErrorCode::InconsistentDynamics,
            "group weights give q = " + std::to_string(q) + ", not compatible with the chain");
    v.q = q;
  } else {
    v.q = canonical_q(v.m, folded.q);
  }
  v.chain = v.m == 1 ? std::vector<long>{} : hj_expand(v.m, v.q).weights;
  {
    auto reversed = weights;
    std::reverse(reversed.begin(), reversed.end());
    require(v.chain == weights || v.chain == reversed, ErrorCode::Internal, "re-expansion does not reproduce the chain");
  }

  v.k_assumed = !payload.k_twist.has_value();
  const long k = payload.k_twist.value_or(1);
  v.germ_case = classify_hj_germ(v.m, v.q, k);
  require(v.germ_case.kind != HJGermKind::Infeasible, ErrorCode::InconsistentDynamics,
          "no germ satisfies f o gamma = gamma^k o f for (m,q,k) = (" + std::to_string(v.m) + "," +
              std::to_string(v.q) + "," + std::to_string(k) + ")");
  log("germ", "congruence case",
      std::string("case (") + v.germ_case.letter + ") " + to_string(v.germ_case.kind) + " for (m,q,k) = (" +
          std::to_string(v.m) + "," + std::to_string(v.q) + "," + std::to_string(k) + ")" +
          (v.k_assumed ? ", k defaulted to 1" : ""));

  if (payload.germ) {
    const DiagonalGroup g = payload.group.value_or(DiagonalGroup(v.m, {1, v.q}));
    const auto run = [&](const auto& f) {
      const auto r = poincare_dulac(f, g, k, order, tol);
      v.germ_case = refine_hj_case(v.germ_case, r.normal_form);
      v.normalization_path = to_string(r.path);
      v.normal_form = AnyJet(r.normal_form);
      out.residuals["conjugacy"] = r.residual_norm;
      out.residuals["normal_form_commutation"] = r.normal_form_commutation;
      out.residuals["conjugacy_commutation"] = r.conjugacy_commutation;
      log("normalize", "equivariant normal form",
          std::string("path ") + to_string(r.path) + " through order " + std::to_string(order) + ", residual " +
              std::to_string(r.residual_norm) + ", refined case " + to_string(v.germ_case.kind));
    };
    if (mode == ScalarMode::Exact) {
      require(std::holds_alternative<Jet<ExactScalar>>(*payload.germ), ErrorCode::InvalidInput,
              "exact mode needs a germ with exact coefficients");
      run(std::get<Jet<ExactScalar>>(*payload.germ));
    } else if (std::holds_alternative<Jet<ExactScalar>>(*payload.germ)) {
      run(to_float(std::get<Jet<ExactScalar>>(*payload.germ)));
    } else {
      run(std::get<Jet<FloatScalar>>(*payload.germ));
    }
  }
  return v;
}

WeightedHomogeneousVerdict star_case(const AdmissibleDocument& doc, const MinimalModel& model, int center, Log& log) {
  WeightedHomogeneousVerdict v;
  const DualGraph& g = model.graph;
  for (const auto& w : g.vertices())
    require(w.id == center || w.genus == 0, ErrorCode::InconsistentDynamics,
            "curve " + std::to_string(w.id) + " away from the center has positive genus");
  const CentralPayload central = doc.central.value_or(CentralPayload{});
  const Vertex& c = g.vertex(center);
  v.finite_order = central.finite_order.value_or(true);
  v.twist = central.order;
  if (v.twist) require(*v.twist >= 1, ErrorCode::InvalidInput, "central order must be >= 1");

  const auto verdict = central_component_check(c.genus, v.finite_order);
  require(verdict.accepted, ErrorCode::InconsistentDynamics, verdict.note);
  // A rational center of infinite order forces a chain, not a star.
  require(v.finite_order, ErrorCode::InconsistentDynamics,
          "a branched configuration needs a central curve of finite order");
  log("center", "central curve", "vertex " + std::to_string(center) + " of genus " + std::to_string(c.genus) +
                                     (central.finite_order ? "" : ", finite order assumed") + "; " + verdict.note);

  const auto labeling = propagate_hyperbolicity(g, center, v.finite_order);
  log("propagate", "hyperbolicity propagation",
      std::to_string(labeling.legs.size()) + " legs, " + std::to_string(labeling.corners.size()) +
          " corners oriented away from the center");

  std::vector<long> marks;
  std::vector<std::pair<long, long>> local;
  for (const auto& leg : labeling.legs) {
    std::vector<long> w;
    for (int id : leg) w.push_back(-g.vertex(id).self);
    const auto cq = hj_fold(w);
    v.legs.push_back(cq);
    marks.push_back(cq.m);
    local.emplace_back(cq.m, cq.q);
  }
  std::sort(v.legs.begin(), v.legs.end(), [](const auto& a, const auto& b) { return std::tie(a.m, a.q) < std::tie(b.m, b.q); });
  std::sort(local.begin(), local.end());
  v.base = OrbifoldSurface::make(c.genus, marks);
  v.geometry = classify_orbifold(v.base);
  {
    std::vector<long> ms(v.base.marks.begin(), v.base.marks.end());
    std::ostringstream os;
    os << "base genus " << v.base.genus << ", marks " << join(ms) << ", chi " << euler_characteristic(v.base).get_str()
       << ", " << to_string(v.geometry);
    log("orbifold", "orbifold type", os.str());
  }
  // Bad bases only arise with at most two marks, i.e. from chains.
  require(v.geometry != OrbifoldType::Bad, ErrorCode::Internal, "bad orbifold base on a branched configuration");

  v.bundle.base = v.base;
  v.bundle.e = central.e.value_or(c.self);
  if (central.local) {
    v.bundle.local = *central.local;
    std::sort(v.bundle.local.begin(), v.bundle.local.end());
  } else {
    v.bundle.local = local;
  }
  v.bundle.validate();
  v.orbidegree = orbidegree(v.bundle);
  log("bundle", "orbibundle degree",
      "e = " + std::to_string(v.bundle.e) + ", degree " + v.orbidegree.get_str() +
          (central.e ? "" : " (e and b_i read from the graph)"));
  require(v.orbidegree < 0, ErrorCode::NotContractible,
          "orbibundle degree " + v.orbidegree.get_str() + " is not negative");
  return v;
}

}  // namespace

const char* to_string(ScalarMode mode) { return mode == ScalarMode::Exact ? "exact" : "float"; }

const char* to_string(ClassificationKind kind) {
  return kind == ClassificationKind::CyclicQuotient ? "CyclicQuotient" : "WeightedHomogeneous";
}

const char* to_string(OrbitSurfaceKind kind) {
  switch (kind) {
    case OrbitSurfaceKind::Hopf: return "Hopf";
    case OrbitSurfaceKind::Kodaira: return "Kodaira";
    case OrbitSurfaceKind::KappaOne: return "KappaOne";
  }
  return "?";
}

Jet<FloatScalar> to_float(const Jet<ExactScalar>& j) {
  Jet<FloatScalar> out(j.dimension(), j.order());
  for (int k = 0; k < j.dimension(); ++k)
    for (int n = 1; n < j.basis().size(); ++n) out.set_at(k, n, j.at(k, n).to_complex());
  return out;
}

std::vector<int> cycle_walk(const DualGraph& g) {
  require(shape(g).kind == ShapeKind::Cycle, ErrorCode::InvalidInput, "graph is not a cycle");
  int start = g.vertices().front().id;
  for (const auto& v : g.vertices()) start = std::min(start, v.id);
  std::vector<int> out{start};
  int prev = -1, cur = start;
  while (true) {
    const auto nb = g.neighbors(cur);
    int next = -1;
    for (int w : nb)
      if (w != prev && (next < 0 || w < next)) next = w;
    if (next < 0 || next == start) break;
    out.push_back(next);
    prev = cur;
    cur = next;
  }
  return out;
}

std::vector<CornerData> cycle_corners(const DualGraph& g) {
  const auto ids = cycle_walk(g);
  require(g.dynamics().has_value(), ErrorCode::InvalidInput, "no dynamics annotations");
  const auto& anns = g.dynamics()->corners;
  std::vector<bool> used(anns.size(), false);
  std::vector<CornerData> out;
  const std::size_t n = ids.size();
  for (std::size_t j = 0; j < n; ++j) {
    const int a = ids[j], b = ids[(j + 1) % n];
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < anns.size() && !hit; ++i) {
      const auto [x, y] = anns[i].edge;
      if (!used[i] && ((x == a && y == b) || (x == b && y == a))) hit = i;
    }
    require(hit.has_value(), ErrorCode::InvalidInput,
            "no corner data for edge [" + std::to_string(a) + "," + std::to_string(b) + "]");
    used[*hit] = true;
    const auto& ann = anns[*hit];
    const bool forward = ann.edge.first == a;
    CornerData c;
    c.e = a;
    c.e_prime = b;
    c.lambda = forward ? ann.mod_lambda : ann.mod_mu;
    c.mu = forward ? ann.mod_mu : ann.mod_lambda;
    c.a_e = g.vertex(a).order();
    c.a_e_prime = g.vertex(b).order();
    out.push_back(c);
  }
  return out;
}

Classification classify_singularity(const AdmissibleDocument& doc, int order, ScalarMode mode, double tol) {
  Classification out;
  Log log(out.provenance);
  const DualGraph& g = doc.graph;
  require(!g.empty(), ErrorCode::InvalidInput, "empty dual graph");
  require(g.connected(), ErrorCode::InvalidInput, "dual graph is not connected");
  require(is_negative_definite(intersection_matrix(g)), ErrorCode::NotContractible,
          "intersection form is not negative definite");
  log("contractibility", "negative definite intersection form",
      std::to_string(g.size()) + " curves, all leading minors of -M positive");

  const GraphShape input_shape = shape(g);
  if (input_shape.kind == ShapeKind::Cycle) reject_cycle(g, log);
  require(is_tree(g) && !g.has_multi_edges(), ErrorCode::NotATree, "dual graph contains a cycle");

  const MinimalModel model = minimal_negative_model(g);
  out.minimal_model = model.graph;
  out.contracted = model.contracted;
  log("minimal model", "(-1)-curve contraction",
      std::to_string(model.contracted.size()) + " curves contracted, " + std::to_string(model.graph.size()) + " remain");

  const GraphShape s = model.smooth_point ? GraphShape{ShapeKind::Chain, std::nullopt, {}} : shape(model.graph);
  out.shape = s.kind;
  log("shape", "star-shapedness", std::string(to_string(s.kind)) + (s.center ? " with center " + std::to_string(*s.center) : ""));

  if (s.kind == ShapeKind::GeneralTree) {
    std::ostringstream os;
    for (int b : s.branch_points) os << ' ' << b;
    fail(ErrorCode::InconsistentDynamics, "two or more branch points:" + os.str());
  }
  require(s.kind == ShapeKind::Chain || s.kind == ShapeKind::StarShaped, ErrorCode::Internal, "unexpected shape");

  const std::optional<bool> center_finite = doc.central ? doc.central->finite_order : std::nullopt;
  check_tree_dynamics(g, center_finite, log);

  std::vector<int> irrational;
  for (const auto& v : model.graph.vertices())
    if (v.genus > 0) irrational.push_back(v.id);
  require(irrational.size() <= 1, ErrorCode::InconsistentDynamics, "more than one curve of positive genus");

  if (s.kind == ShapeKind::Chain && irrational.empty()) {
    out.kind = ClassificationKind::CyclicQuotient;
    out.cyclic = chain_case(doc, model, order, mode, tol, out, log);
  } else {
    if (s.kind == ShapeKind::StarShaped)
      require(irrational.empty() || irrational.front() == *s.center, ErrorCode::InconsistentDynamics,
              "the curve of positive genus is not the branch point");
    const int center = s.kind == ShapeKind::StarShaped ? *s.center : irrational.front();
    out.kind = ClassificationKind::WeightedHomogeneous;
    out.weighted = star_case(doc, model, center, log);
  }
  return out;
}

OrbitSurfaceVerdict orbit_surface_for(ClassificationKind kind, std::optional<OrbifoldType> base) {
  OrbitSurfaceVerdict v;
  if (kind == ClassificationKind::CyclicQuotient) {
    v = {OrbitSurfaceKind::Hopf, "-inf", false, "quotient of a primary Hopf surface"};
    return v;
  }
  require(base.has_value(), ErrorCode::Internal, "weighted homogeneous verdict without a base");
  switch (*base) {
    case OrbifoldType::Spherical: return {OrbitSurfaceKind::Hopf, "-inf", false, "spherical base orbifold"};
    case OrbifoldType::Euclidean: return {OrbitSurfaceKind::Kodaira, "0", false, "euclidean base orbifold"};
    case OrbifoldType::Hyperbolic: return {OrbitSurfaceKind::KappaOne, "1", false, "hyperbolic base orbifold"};
    case OrbifoldType::Bad: break;
  }
  fail(ErrorCode::BadOrbifold, "bad orbifold base after classification");
}

OrbitSurfaceVerdict classify_orbit_surface(const Classification& c) {
  if (c.kind == ClassificationKind::CyclicQuotient) return orbit_surface_for(c.kind, std::nullopt);
  require(c.weighted.has_value(), ErrorCode::Internal, "weighted homogeneous verdict without data");
  return orbit_surface_for(c.kind, c.weighted->geometry);
}

CoverRelation cyclic_cover_degree(const OrbitSurfaceVerdict& v, long n) {
  require(n >= 1, ErrorCode::InvalidInput, "cover degree must be >= 1");
  CoverRelation r{n, v, v, {}};
  r.note = n == 1 ? "identity covering" : "cyclic unramified cover of degree " + std::to_string(n) + ", same class";
  return r;
}

}  // namespace surfdyn

#include "surfdyn/dynamics/graph_dynamics.hpp"

#include <cmath>
#include <numeric>
#include <queue>

#include "surfdyn/error.hpp"

namespace surfdyn {

namespace {

void check_positive(const Modulus& m, const char* what) {
  const bool positive = m.exact ? *m.exact > 0 : m.value > 0.0;
  require(positive, ErrorCode::InvalidInput, std::string(what) + " modulus must be positive");
}

double log_of(const Modulus& m) { return m.exact ? std::log(m.exact->get_d()) : std::log(m.value); }

/// Sign of |x| - 1, exact for rationals.
int compare_to_one(const Modulus& m, double tol) {
  if (m.exact) return *m.exact > 1 ? 1 : (*m.exact < 1 ? -1 : 0);
  if (std::abs(m.value - 1.0) <= tol) return 0;
  return m.value > 1.0 ? 1 : -1;
}

}  // namespace

mpq_class rational_power(const mpq_class& x, unsigned long k) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), k);
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

bool corner_inequality(const CornerData& c, double tol) {
  check_positive(c.lambda, "lambda");
  check_positive(c.mu, "mu");
  require(c.a_e >= 1 && c.a_e_prime >= 1, ErrorCode::InvalidInput, "vanishing orders must be >= 1");
  if (c.lambda.exact && c.mu.exact) {
    const mpq_class lhs = rational_power(*c.lambda.exact, static_cast<unsigned long>(c.a_e_prime)) *
                          rational_power(*c.mu.exact, static_cast<unsigned long>(c.a_e));
    return lhs < 1;
  }
  return log_of(c.lambda) / c.a_e + log_of(c.mu) / c.a_e_prime < -tol;
}

CycleCertificate cycle_obstruction(const std::vector<CornerData>& cycle, double tol) {
  require(!cycle.empty(), ErrorCode::InvalidInput, "empty cycle");
  const std::size_t n = cycle.size();
  CycleCertificate cert;
  bool all_exact = true;
  for (std::size_t j = 0; j < n; ++j) {
    const CornerData& c = cycle[j];
    const CornerData& next = cycle[(j + 1) % n];
    const CornerData& prev = cycle[(j + n - 1) % n];
    check_positive(c.lambda, "lambda");
    check_positive(c.mu, "mu");
    require(c.e_prime == next.e && c.a_e_prime == next.a_e, ErrorCode::InvalidInput,
            "corner " + std::to_string(j) + " does not chain onto corner " + std::to_string((j + 1) % n));
    bool matched;
    if (c.lambda.exact && prev.mu.exact) {
      matched = *c.lambda.exact * *prev.mu.exact == 1;
    } else {
      matched = std::abs(log_of(c.lambda) + log_of(prev.mu)) <= tol;
      all_exact = false;
    }
    require(matched, ErrorCode::MatchingViolated,
            "lambda_" + std::to_string(j) + " is not the inverse of mu_" + std::to_string((j + n - 1) % n));
    cert.exponent = std::lcm(cert.exponent, static_cast<long>(c.a_e));
  }
  mpq_class product = 1;
  for (const CornerData& c : cycle) {
    cert.log_sum += log_of(c.lambda) / c.a_e + log_of(c.mu) / c.a_e_prime;
    cert.corner_holds.push_back(corner_inequality(c, tol));
    if (all_exact)
      product *= rational_power(*c.lambda.exact, static_cast<unsigned long>(cert.exponent / c.a_e)) *
                 rational_power(*c.mu.exact, static_cast<unsigned long>(cert.exponent / c.a_e_prime));
  }
  if (all_exact) {
    cert.product = product;
    cert.product_is_one = product == 1;
    cert.infeasible = cert.product_is_one;
  } else {
    cert.infeasible = std::abs(cert.log_sum) <= tol * static_cast<double>(n);
  }
  return cert;
}

const char* to_string(VertexTag tag) {
  switch (tag) {
    case VertexTag::Hyperbolic: return "Hyperbolic";
    case VertexTag::NonHyperbolic: return "NonHyperbolic";
    case VertexTag::FiniteOrder: return "FiniteOrder";
  }
  return "?";
}

HyperbolicityLabeling propagate_hyperbolicity(const DualGraph& g, int center, bool center_finite_order) {
  require(g.contains(center), ErrorCode::InvalidInput, "center " + std::to_string(center) + " is not a vertex");
  require(is_tree(g) && !g.has_multi_edges(), ErrorCode::NotATree, "dual graph is not a tree");
  HyperbolicityLabeling out;
  out.center = center;
  out.distance[center] = 0;
  out.tags[center] = center_finite_order ? VertexTag::FiniteOrder : VertexTag::NonHyperbolic;
  std::queue<int> todo;
  todo.push(center);
  while (!todo.empty()) {
    const int v = todo.front();
    todo.pop();
    for (int w : g.neighbors(v)) {
      if (out.distance.count(w)) continue;
      out.distance[w] = out.distance[v] + 1;
      todo.push(w);
    }
  }
  for (const auto& v : g.vertices()) {
    if (v.id == center) continue;
    int closer = 0;
    for (int w : g.neighbors(v.id)) closer += out.distance[w] < out.distance[v.id];
    require(closer == 1, ErrorCode::NotATree,
            "vertex " + std::to_string(v.id) + " has " + std::to_string(closer) + " neighbours closer to the center");
    require(g.degree(v.id) <= 2, ErrorCode::BranchedLeg,
            "vertex " + std::to_string(v.id) + " away from the center has degree " + std::to_string(g.degree(v.id)));
    out.tags[v.id] = VertexTag::Hyperbolic;
  }
  for (const auto& [a, b] : g.edges()) {
    const bool a_near = out.distance[a] < out.distance[b];
    const int near = a_near ? a : b, far = a_near ? b : a;
    out.corners.push_back({near, far, near == center});
  }
  for (int start : g.neighbors(center)) {
    std::vector<int> leg{start};
    int prev = center, cur = start;
    while (true) {
      int next = -1;
      for (int w : g.neighbors(cur))
        if (w != prev) next = w;
      if (next < 0) break;
      leg.push_back(next);
      prev = cur;
      cur = next;
    }
    out.legs.push_back(std::move(leg));
  }
  return out;
}

std::vector<CornerData> annotate_corners(const DualGraph& g, const HyperbolicityLabeling& labeling,
                                         const std::map<int, mpq_class>& rho) {
  std::vector<CornerData> out;
  for (const auto& c : labeling.corners) {
    const auto far_rho = rho.find(c.far);
    require(far_rho != rho.end(), ErrorCode::InvalidInput, "missing multiplier for vertex " + std::to_string(c.far));
    CornerData d;
    d.e = c.near;
    d.e_prime = c.far;
    if (c.near_is_center) {
      d.lambda = Modulus::rational(1);
    } else {
      const auto near_rho = rho.find(c.near);
      require(near_rho != rho.end(), ErrorCode::InvalidInput, "missing multiplier for vertex " + std::to_string(c.near));
      d.lambda = Modulus::rational(1 / near_rho->second);
    }
    d.mu = Modulus::rational(far_rho->second);
    d.a_e = g.vertex(c.near).order();
    d.a_e_prime = g.vertex(c.far).order();
    out.push_back(d);
  }
  return out;
}

std::vector<std::string> check_corner_annotations(const DualGraph& g, const HyperbolicityLabeling& labeling,
                                                  const std::vector<CornerAnnotation>& corners, double tol) {
  std::vector<std::string> problems;
  for (const auto& ann : corners) {
    const auto [a, b] = ann.edge;
    const std::string name = "corner [" + std::to_string(a) + "," + std::to_string(b) + "]";
    const OrientedCorner* oc = nullptr;
    for (const auto& c : labeling.corners)
      if ((c.near == a && c.far == b) || (c.near == b && c.far == a)) oc = &c;
    if (oc == nullptr) {
      problems.push_back(name + " is not an edge of the graph");
      continue;
    }
    const bool forward = oc->near == a;
    CornerData d;
    d.e = oc->near;
    d.e_prime = oc->far;
    d.lambda = forward ? ann.mod_lambda : ann.mod_mu;
    d.mu = forward ? ann.mod_mu : ann.mod_lambda;
    d.a_e = g.vertex(oc->near).order();
    d.a_e_prime = g.vertex(oc->far).order();
    if (compare_to_one(d.mu, tol) >= 0) problems.push_back(name + ": the side away from the center is not contracting");
    const int near_cmp = compare_to_one(d.lambda, tol);
    if (oc->near_is_center && labeling.tags.at(oc->near) == VertexTag::FiniteOrder && near_cmp != 0)
      problems.push_back(name + ": a finite-order center must have a multiplier of modulus one");
    if (!oc->near_is_center && near_cmp <= 0) problems.push_back(name + ": the side towards the center is not expanding");
    try {
      if (!corner_inequality(d, tol)) problems.push_back(name + ": corner inequality fails");
    } catch (const Error& e) {
      problems.push_back(name + ": " + e.what());
    }
  }
  return problems;
}

CentralVerdict central_component_check(int genus, bool finite_order) {
  require(genus >= 0, ErrorCode::InvalidInput, "genus must be >= 0");
  if (genus >= 1 && !finite_order) return {false, "a central curve of positive genus must carry a finite-order map"};
  if (genus == 0 && !finite_order) return {true, "rational center of infinite order: the configuration is a chain"};
  return {true, "finite-order central curve"};
}

}  // namespace surfdyn

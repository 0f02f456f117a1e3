#include "surfdyn/verify/oracles.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <numeric>

#include "surfdyn/error.hpp"

namespace surfdyn::oracle {

mpq_class continued_fraction_value(const std::vector<long>& b) {
  if (b.empty()) return 1;
  mpq_class x = b.back();
  for (auto it = b.rbegin() + 1; it != b.rend(); ++it) {
    x = mpq_class(*it) - 1 / x;
    x.canonicalize();
  }
  return x;
}

bool negative_definite_by_eigenvalues(const IntMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  if (n == 0) return true;
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      a(i, j) = static_cast<double>(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff() < -1e-9;
}

DualGraph blow_up_vertex(const DualGraph& g, int v, int new_id) {
  auto vertices = g.vertices();
  auto edges = g.edges();
  for (auto& w : vertices)
    if (w.id == v) w.self -= 1;
  vertices.push_back({new_id, 0, -1, std::nullopt});
  edges.emplace_back(v, new_id);
  return DualGraph(std::move(vertices), std::move(edges));
}

DualGraph blow_up_edge(const DualGraph& g, int a, int b, int new_id) {
  auto vertices = g.vertices();
  auto edges = g.edges();
  const auto key = std::make_pair(std::min(a, b), std::max(a, b));
  const auto it = std::find(edges.begin(), edges.end(), key);
  require(it != edges.end(), ErrorCode::InvalidInput, "no such edge");
  edges.erase(it);
  for (auto& w : vertices)
    if (w.id == a || w.id == b) w.self -= 1;
  vertices.push_back({new_id, 0, -1, std::nullopt});
  edges.emplace_back(a, new_id);
  edges.emplace_back(new_id, b);
  return DualGraph(std::move(vertices), std::move(edges));
}

DualGraph random_blown_up_chain(std::mt19937_64& rng, long m, long q, int blowups) {
  DualGraph g = DualGraph::chain(hj_expand(m, q).weights);
  int next_id = g.size();
  for (int i = 0; i < blowups; ++i) {
    const bool on_edge = !g.edges().empty() && std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    if (on_edge) {
      const auto& e = g.edges()[std::uniform_int_distribution<std::size_t>(0, g.edges().size() - 1)(rng)];
      g = blow_up_edge(g, e.first, e.second, next_id++);
    } else {
      // Only chain ends keep the result a chain.
      std::vector<int> ends;
      for (const auto& v : g.vertices())
        if (g.degree(v.id) <= 1) ends.push_back(v.id);
      g = blow_up_vertex(g, ends[std::uniform_int_distribution<std::size_t>(0, ends.size() - 1)(rng)], next_id++);
    }
  }
  // Relabel with a random permutation of ids.
  std::vector<int> perm(static_cast<std::size_t>(g.size()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::map<int, int> relabel;
  for (std::size_t i = 0; i < g.vertices().size(); ++i) relabel[g.vertices()[i].id] = perm[i];
  std::vector<Vertex> vs;
  for (auto v : g.vertices()) {
    v.id = relabel[v.id];
    vs.push_back(v);
  }
  std::vector<std::pair<int, int>> es;
  for (const auto& [a, b] : g.edges()) es.emplace_back(relabel[a], relabel[b]);
  return DualGraph(std::move(vs), std::move(es));
}

DualGraph star_graph(const StarSpec& spec, std::mt19937_64* rng) {
  std::vector<Vertex> vs{{0, spec.center_genus, spec.center_self, std::nullopt}};
  std::vector<std::pair<int, int>> es;
  int next = 1;
  for (const auto& leg : spec.legs) {
    const auto weights = hj_expand(leg.m, leg.q).weights;
    int prev = 0;
    for (long b : weights) {
      vs.push_back({next, 0, -b, std::nullopt});
      es.emplace_back(prev, next);
      prev = next++;
    }
  }
  if (rng != nullptr) {
    std::uniform_int_distribution<int> order(1, 4);
    for (auto& v : vs) v.a = order(*rng);
  }
  return DualGraph(std::move(vs), std::move(es));
}

StarSpec random_star_spec(std::mt19937_64& rng, int max_m) {
  StarSpec spec;
  spec.center_genus = std::uniform_int_distribution<int>(0, 3)(rng);
  const int legs = std::uniform_int_distribution<int>(3, 5)(rng);
  std::uniform_int_distribution<long> pick_m(2, max_m);
  mpq_class sum = 0;
  for (int i = 0; i < legs; ++i) {
    const long m = pick_m(rng);
    long q;
    do q = std::uniform_int_distribution<long>(1, m - 1)(rng);
    while (std::gcd(m, q) != 1);
    spec.legs.push_back({m, q});
    sum += mpq_class(q, m);
  }
  // The center of a star is negative definite iff -e > sum q_i / m_i.
  const long bound = static_cast<long>(std::floor(sum.get_d())) + 1;
  spec.center_self = -(bound + std::uniform_int_distribution<long>(0, 2)(rng));
  return spec;
}

std::map<int, mpq_class> consistent_multipliers(const DualGraph& g, const HyperbolicityLabeling& labeling,
                                                std::mt19937_64& rng) {
  std::map<int, mpq_class> rho;
  std::uniform_int_distribution<long> r(1, 6);
  // Vertices in order of distance so parents come first.
  std::vector<std::pair<int, int>> order;
  for (const auto& [id, d] : labeling.distance) order.emplace_back(d, id);
  std::sort(order.begin(), order.end());
  std::map<int, int> parent;
  for (const auto& c : labeling.corners) parent[c.far] = c.near;
  for (const auto& [d, id] : order) {
    if (id == labeling.center) continue;
    const long rr = r(rng);
    const mpq_class shrink(rr, rr + 1);
    const int p = parent.at(id);
    if (p == labeling.center) {
      rho[id] = shrink;
    } else {
      const long a_c = g.vertex(id).order(), a_p = g.vertex(p).order();
      const long k = (a_c + a_p - 1) / a_p;
      rho[id] = rational_power(rho.at(p), static_cast<unsigned long>(k)) * shrink;
    }
  }
  return rho;
}

std::vector<CornerData> random_matched_cycle(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long> num(1, 9), den(1, 9), order(1, 5);
  std::vector<int> a(static_cast<std::size_t>(n));
  for (auto& x : a) x = static_cast<int>(order(rng));
  std::vector<mpq_class> mu(static_cast<std::size_t>(n));
  for (auto& x : mu) {
    x = mpq_class(num(rng), den(rng));
    x.canonicalize();
  }
  std::vector<CornerData> out;
  for (int j = 0; j < n; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    const auto prev = static_cast<std::size_t>((j + n - 1) % n);
    const auto next = static_cast<std::size_t>((j + 1) % n);
    CornerData c;
    c.e = j;
    c.e_prime = static_cast<int>(next);
    c.lambda = Modulus::rational(1 / mu[prev]);
    c.mu = Modulus::rational(mu[ju]);
    c.a_e = a[ju];
    c.a_e_prime = a[next];
    out.push_back(c);
  }
  return out;
}

DualGraph cycle_graph(int n) {
  std::vector<Vertex> vs;
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) {
    vs.push_back({i, 0, -3, std::nullopt});
    es.emplace_back(i, (i + 1) % n);
  }
  return DualGraph(std::move(vs), std::move(es));
}

OrbifoldSurface random_orbifold(std::mt19937_64& rng) {
  const int genus = std::uniform_int_distribution<int>(0, 3)(rng);
  const int count = std::uniform_int_distribution<int>(0, 5)(rng);
  std::uniform_int_distribution<long> mult(1, 9);
  std::vector<long> marks;
  for (int i = 0; i < count; ++i) marks.push_back(mult(rng));
  return OrbifoldSurface::make(genus, std::move(marks));
}

DualGraph h_shaped_tree() {
  std::vector<Vertex> vs;
  for (int i = 0; i < 6; ++i) vs.push_back({i, 0, i < 2 ? -4 : -2, std::nullopt});
  return DualGraph(std::move(vs), {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
}

DualGraph relabeled(const DualGraph& g, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(g.size()));
  std::iota(perm.begin(), perm.end(), 100);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::map<int, int> to;
  for (std::size_t i = 0; i < perm.size(); ++i) to[g.vertices()[i].id] = perm[i];
  std::vector<Vertex> vs;
  for (auto v : g.vertices()) {
    v.id = to[v.id];
    vs.push_back(v);
  }
  std::shuffle(vs.begin(), vs.end(), rng);
  std::vector<std::pair<int, int>> es;
  for (const auto& [a, b] : g.edges()) es.emplace_back(to[b], to[a]);
  std::shuffle(es.begin(), es.end(), rng);
  return DualGraph(std::move(vs), std::move(es));
}

}  // namespace surfdyn::oracle

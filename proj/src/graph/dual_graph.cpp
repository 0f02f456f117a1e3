#include "surfdyn/graph/dual_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "surfdyn/algebra/cyclotomic.hpp"
#include "surfdyn/error.hpp"

namespace surfdyn {

Modulus Modulus::parse(const std::string& text) { return rational(parse_rational(text)); }

std::string Modulus::to_string() const {
  if (exact) return exact->get_str();
  return std::to_string(value);
}

DualGraph::DualGraph(std::vector<Vertex> vertices, std::vector<std::pair<int, int>> edges,
                     std::optional<DynamicsAnnotation> dynamics)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), dynamics_(std::move(dynamics)) {
  std::set<int> ids;
  for (const auto& v : vertices_) {
    require(ids.insert(v.id).second, ErrorCode::InvalidInput, "duplicate vertex id " + std::to_string(v.id));
    require(v.genus >= 0, ErrorCode::InvalidInput, "negative genus at vertex " + std::to_string(v.id));
    require(!v.a || *v.a >= 1, ErrorCode::InvalidInput, "vanishing order must be >= 1");
  }
  for (auto& [a, b] : edges_) {
    require(ids.count(a) && ids.count(b), ErrorCode::InvalidInput,
            "edge [" + std::to_string(a) + "," + std::to_string(b) + "] references a missing vertex");
    if (a > b) std::swap(a, b);
  }
}

DualGraph DualGraph::chain(const std::vector<long>& weights) {
  std::vector<Vertex> vs;
  std::vector<std::pair<int, int>> es;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    vs.push_back({static_cast<int>(i), 0, -weights[i], std::nullopt});
    if (i > 0) es.emplace_back(static_cast<int>(i) - 1, static_cast<int>(i));
  }
  return DualGraph(std::move(vs), std::move(es));
}

bool DualGraph::contains(int id) const {
  return std::any_of(vertices_.begin(), vertices_.end(), [id](const Vertex& v) { return v.id == id; });
}

int DualGraph::index_of(int id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == id) return static_cast<int>(i);
  fail(ErrorCode::InvalidInput, "no vertex with id " + std::to_string(id));
}

int DualGraph::multiplicity(int a, int b) const {
  if (a > b) std::swap(a, b);
  return static_cast<int>(std::count(edges_.begin(), edges_.end(), std::make_pair(a, b)));
}

int DualGraph::degree(int id) const {
  int d = 0;
  for (const auto& [a, b] : edges_) d += (a == id) + (b == id);
  return d;
}

std::vector<int> DualGraph::neighbors(int id) const {
  std::set<int> out;
  for (const auto& [a, b] : edges_) {
    if (a == id && b != id) out.insert(b);
    if (b == id && a != id) out.insert(a);
  }
  return {out.begin(), out.end()};
}

bool DualGraph::connected() const {
  if (vertices_.empty()) return true;
  std::set<int> seen{vertices_.front().id};
  std::queue<int> todo;
  todo.push(vertices_.front().id);
  while (!todo.empty()) {
    const int v = todo.front();
    todo.pop();
    for (int w : neighbors(v))
      if (seen.insert(w).second) todo.push(w);
  }
  return seen.size() == vertices_.size();
}

bool DualGraph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const auto& e) { return e.first == e.second; });
}

bool DualGraph::has_multi_edges() const {
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges_)
    if (e.first != e.second && !seen.insert(e).second) return true;
  return false;
}

IntMatrix intersection_matrix(const DualGraph& g) {
  const int n = g.size();
  IntMatrix m(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = g.vertices()[static_cast<std::size_t>(i)].self;
  for (const auto& [a, b] : g.edges()) {
    if (a == b) continue;
    const auto i = static_cast<std::size_t>(g.index_of(a)), j = static_cast<std::size_t>(g.index_of(b));
    ++m[i][j];
    ++m[j][i];
  }
  return m;
}

std::vector<mpz_class> leading_minors_of_negation(const IntMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) require(row.size() == n, ErrorCode::DimensionMismatch, "matrix is not square");
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = -m[i][j];
  // Bareiss without pivoting: after step k the entry a[k][k] is the (k+1)-th
  // leading minor. A zero minor stops the elimination; later minors are not needed.
  std::vector<mpz_class> minors;
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    minors.push_back(a[k][k]);
    if (a[k][k] == 0) break;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return minors;
}

bool is_negative_definite(const IntMatrix& m) {
  if (m.empty()) return true;
  const auto minors = leading_minors_of_negation(m);
  if (minors.size() != m.size()) return false;
  return std::all_of(minors.begin(), minors.end(), [](const mpz_class& x) { return x > 0; });
}

const char* to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Chain: return "Chain";
    case ShapeKind::Cycle: return "Cycle";
    case ShapeKind::StarShaped: return "StarShaped";
    case ShapeKind::GeneralTree: return "GeneralTree";
    case ShapeKind::Other: return "Other";
  }
  return "?";
}

bool is_tree(const DualGraph& g) {
  return g.connected() && !g.has_loops() && static_cast<int>(g.edges().size()) == g.size() - 1;
}

GraphShape shape(const DualGraph& g) {
  GraphShape s;
  for (const auto& v : g.vertices())
    if (g.degree(v.id) >= 3) s.branch_points.push_back(v.id);
  if (g.empty() || !g.connected()) return s;
  const bool all_degree_two = std::all_of(g.vertices().begin(), g.vertices().end(),
                                          [&](const Vertex& v) { return g.degree(v.id) == 2; });
  if (is_tree(g)) {
    if (s.branch_points.empty())
      s.kind = ShapeKind::Chain;
    else if (s.branch_points.size() == 1) {
      s.kind = ShapeKind::StarShaped;
      s.center = s.branch_points.front();
    } else
      s.kind = ShapeKind::GeneralTree;
  } else if (all_degree_two && static_cast<int>(g.edges().size()) == g.size()) {
    s.kind = ShapeKind::Cycle;
  }
  return s;
}

std::vector<int> chain_walk(const DualGraph& g) {
  require(shape(g).kind == ShapeKind::Chain, ErrorCode::InvalidInput, "graph is not a chain");
  int start = -1;
  for (const auto& v : g.vertices())
    if (g.degree(v.id) <= 1 && (start < 0 || v.id < start)) start = v.id;
  std::vector<int> out{start};
  int prev = -1, cur = start;
  while (true) {
    int next = -1;
    for (int w : g.neighbors(cur))
      if (w != prev) next = w;
    if (next < 0) break;
    out.push_back(next);
    prev = cur;
    cur = next;
  }
  return out;
}

std::vector<long> chain_weights(const DualGraph& g) {
  std::vector<long> out;
  for (int id : chain_walk(g)) out.push_back(-g.vertex(id).self);
  return out;
}

BlowDownResult blow_down(const DualGraph& g, int v) {
  const Vertex& target = g.vertex(v);
  require(target.genus == 0 && target.self == -1, ErrorCode::InvalidInput,
          "vertex " + std::to_string(v) + " is not a rational (-1)-curve");
  require(g.multiplicity(v, v) == 0, ErrorCode::SncViolation, "vertex " + std::to_string(v) + " carries a loop");

  std::map<int, long> meet;  // neighbour -> A.v
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : g.edges()) {
    if (e.first == v)
      ++meet[e.second];
    else if (e.second == v)
      ++meet[e.first];
    else
      edges.push_back(e);
  }
  std::vector<Vertex> vertices;
  for (const auto& w : g.vertices()) {
    if (w.id == v) continue;
    Vertex copy = w;
    if (auto it = meet.find(w.id); it != meet.end()) copy.self += it->second * it->second;
    vertices.push_back(copy);
  }
  for (auto a = meet.begin(); a != meet.end(); ++a) {
    for (auto b = std::next(a); b != meet.end(); ++b)
      for (long k = 0; k < a->second * b->second; ++k) edges.emplace_back(a->first, b->first);
    // t branches through the contracted point become t(t-1)/2 self-crossings.
    for (long k = 0; k < a->second * (a->second - 1) / 2; ++k) edges.emplace_back(a->first, a->first);
  }
  std::optional<DynamicsAnnotation> dyn;
  if (g.dynamics() && g.dynamics()->center && *g.dynamics()->center != v) dyn = DynamicsAnnotation{g.dynamics()->center, {}};
  BlowDownResult out{DualGraph(std::move(vertices), std::move(edges), std::move(dyn)), true};
  out.snc = out.graph.is_snc();
  return out;
}

MinimalModel minimal_negative_model(const DualGraph& g) {
  require(g.connected(), ErrorCode::InvalidInput, "dual graph is not connected");
  require(is_negative_definite(intersection_matrix(g)), ErrorCode::NotContractible,
          "intersection form is not negative definite");
  MinimalModel out{g, {}, false};
  while (true) {
    std::optional<int> pick;
    for (const auto& v : out.graph.vertices())
      if (v.genus == 0 && v.self == -1 && out.graph.degree(v.id) <= 2 && (!pick || v.id < *pick)) pick = v.id;
    if (!pick) break;
    auto step = blow_down(out.graph, *pick);
    require(step.snc, ErrorCode::SncViolation,
            "contracting vertex " + std::to_string(*pick) + " leaves the simple normal crossing class");
    out.contracted.push_back(*pick);
    out.graph = std::move(step.graph);
  }
  require(is_negative_definite(intersection_matrix(out.graph)), ErrorCode::Internal,
          "blow-down broke negative definiteness");
  out.smooth_point = out.graph.empty();
  return out;
}

}  // namespace surfdyn

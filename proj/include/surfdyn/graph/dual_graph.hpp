#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace surfdyn {

/// Modulus of a multiplier: exact when given as a rational, otherwise a double.
struct Modulus {
  std::optional<mpq_class> exact;
  double value = 0.0;

  static Modulus rational(const mpq_class& q) { return {q, q.get_d()}; }
  static Modulus real(double v) { return {std::nullopt, v}; }
  static Modulus parse(const std::string& text);
  bool is_exact() const { return exact.has_value(); }
  std::string to_string() const;
};

struct CornerAnnotation {
  std::pair<int, int> edge;
  Modulus mod_lambda;  ///< along edge.first
  Modulus mod_mu;      ///< along edge.second
};

struct DynamicsAnnotation {
  std::optional<int> center;
  std::vector<CornerAnnotation> corners;
};

struct Vertex {
  int id = 0;
  int genus = 0;
  long self = -1;
  /// Vanishing order a_E; 1 when absent.
  std::optional<int> a;

  int order() const { return a.value_or(1); }
};

/// Resolution dual graph. Multi-edges and loops are representable so that
/// non-SNC states can be reported.
class DualGraph {
 public:
  DualGraph() = default;
  DualGraph(std::vector<Vertex> vertices, std::vector<std::pair<int, int>> edges,
            std::optional<DynamicsAnnotation> dynamics = std::nullopt);

  /// Chain of genus-0 curves with self-intersections -b_i and ids 0..n-1.
  static DualGraph chain(const std::vector<long>& weights);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::optional<DynamicsAnnotation>& dynamics() const { return dynamics_; }
  void set_dynamics(std::optional<DynamicsAnnotation> d) { dynamics_ = std::move(d); }

  int size() const { return static_cast<int>(vertices_.size()); }
  bool empty() const { return vertices_.empty(); }
  bool contains(int id) const;
  /// Position of a vertex id in vertices(); throws when absent.
  int index_of(int id) const;
  const Vertex& vertex(int id) const { return vertices_[static_cast<std::size_t>(index_of(id))]; }

  /// Number of edges between two distinct vertices.
  int multiplicity(int a, int b) const;
  /// Incident edge ends; a loop counts twice.
  int degree(int id) const;
  /// Distinct neighbours, sorted by id.
  std::vector<int> neighbors(int id) const;
  bool connected() const;
  bool has_loops() const;
  bool has_multi_edges() const;
  bool is_snc() const { return !has_loops() && !has_multi_edges(); }

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::pair<int, int>> edges_;
  std::optional<DynamicsAnnotation> dynamics_;
};

using IntMatrix = std::vector<std::vector<long>>;

/// Self-intersections on the diagonal, edge counts off the diagonal, in vertex order.
IntMatrix intersection_matrix(const DualGraph& g);

/// Sylvester test on -M with fraction-free elimination.
bool is_negative_definite(const IntMatrix& m);
/// Leading principal minors of -M.
std::vector<mpz_class> leading_minors_of_negation(const IntMatrix& m);

enum class ShapeKind { Chain, Cycle, StarShaped, GeneralTree, Other };
const char* to_string(ShapeKind kind);

struct GraphShape {
  ShapeKind kind = ShapeKind::Other;
  /// Unique branch vertex for StarShaped.
  std::optional<int> center;
  /// Vertices of degree >= 3.
  std::vector<int> branch_points;
  /// Chains count as star-shaped.
  bool star_shaped() const { return kind == ShapeKind::Chain || kind == ShapeKind::StarShaped; }
};

GraphShape shape(const DualGraph& g);
bool is_tree(const DualGraph& g);

/// Vertex ids of a chain in path order, starting from the end with the lower id.
std::vector<int> chain_walk(const DualGraph& g);
/// -self along chain_walk.
std::vector<long> chain_weights(const DualGraph& g);

struct BlowDownResult {
  DualGraph graph;
  bool snc = true;
};

/// Contracts the genus-0 (-1) vertex v.
BlowDownResult blow_down(const DualGraph& g, int v);

struct MinimalModel {
  DualGraph graph;
  /// Contracted vertex ids in order.
  std::vector<int> contracted;
  /// Everything was contracted: the point is smooth.
  bool smooth_point = false;
};

/// Blows down genus-0 (-1) vertices of degree <= 2, lowest id first, until none
/// is left. Throws NotContractible / SncViolation.
MinimalModel minimal_negative_model(const DualGraph& g);

}  // namespace surfdyn

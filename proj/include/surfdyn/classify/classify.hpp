#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "surfdyn/algebra/diagonal_group.hpp"
#include "surfdyn/algebra/jet.hpp"
#include "surfdyn/dynamics/graph_dynamics.hpp"
#include "surfdyn/error.hpp"
#include "surfdyn/graph/dual_graph.hpp"
#include "surfdyn/graph/hirzebruch_jung.hpp"
#include "surfdyn/normal_forms/hj_case.hpp"
#include "surfdyn/orbifold/orbifold.hpp"

namespace surfdyn {

enum class ScalarMode { Exact, Float };
const char* to_string(ScalarMode mode);

using AnyJet = std::variant<Jet<ExactScalar>, Jet<FloatScalar>>;

/// Germ data for the chain case; every field is optional.
struct ChainPayload {
  std::optional<AnyJet> germ;
  std::optional<DiagonalGroup> group;
  std::optional<long> k_twist;
};

/// Data about the central curve for the star case.
struct CentralPayload {
  std::optional<bool> finite_order;
  /// Declared order N of the action on the central curve.
  std::optional<long> order;
  std::optional<long> e;
  std::optional<std::vector<std::pair<long, long>>> local;
};

struct AdmissibleDocument {
  DualGraph graph;
  std::optional<ChainPayload> chain;
  std::optional<CentralPayload> central;
};

struct ProvenanceEntry {
  std::string step;
  /// Short name of the criterion applied.
  std::string theorem;
  /// The concrete fact established at this step.
  std::string quote;
};

struct CyclicQuotientVerdict {
  long m = 1, q = 1;
  /// Minimal chain, oriented so that it expands from (m, q).
  std::vector<long> chain;
  HJGermCase germ_case;
  /// k was not supplied and defaulted to 1.
  bool k_assumed = false;
  std::optional<std::string> normalization_path;
  std::optional<AnyJet> normal_form;
};

struct WeightedHomogeneousVerdict {
  OrbifoldSurface base;
  OrbifoldType geometry = OrbifoldType::Hyperbolic;
  OrbibundleData bundle;
  mpq_class orbidegree;
  /// Declared order N of the central action, when known.
  std::optional<long> twist;
  std::vector<CyclicQuotientData> legs;
  bool finite_order = true;
};

enum class ClassificationKind { CyclicQuotient, WeightedHomogeneous };
const char* to_string(ClassificationKind kind);

struct Classification {
  ClassificationKind kind = ClassificationKind::CyclicQuotient;
  std::optional<CyclicQuotientVerdict> cyclic;
  std::optional<WeightedHomogeneousVerdict> weighted;
  DualGraph minimal_model;
  std::vector<int> contracted;
  ShapeKind shape = ShapeKind::Chain;
  std::vector<ProvenanceEntry> provenance;
  std::map<std::string, double> residuals;
};

/// Raised when the configuration contains a cycle; carries the certificate
/// when corner data around the cycle was supplied.
class CycleObstructionError : public Error {
 public:
  CycleObstructionError(const std::string& message, std::optional<CycleCertificate> cert, std::vector<int> cycle)
      : Error(ErrorCode::CycleObstruction, message), certificate(std::move(cert)), cycle(std::move(cycle)) {}
  std::optional<CycleCertificate> certificate;
  std::vector<int> cycle;
};

Classification classify_singularity(const AdmissibleDocument& doc, int order = 12, ScalarMode mode = ScalarMode::Exact,
                                    double tol = kDefaultTolerance);

/// Vertex ids around a cycle graph, starting at the lowest id.
std::vector<int> cycle_walk(const DualGraph& g);

/// Corner data around a cycle graph from its dynamics annotations.
std::vector<CornerData> cycle_corners(const DualGraph& g);

enum class OrbitSurfaceKind { Hopf, Kodaira, KappaOne };
const char* to_string(OrbitSurfaceKind kind);

struct OrbitSurfaceVerdict {
  OrbitSurfaceKind kind = OrbitSurfaceKind::Hopf;
  std::string kodaira_dimension;
  bool kahler = false;
  std::string note;
};

OrbitSurfaceVerdict classify_orbit_surface(const Classification& c);
OrbitSurfaceVerdict orbit_surface_for(ClassificationKind kind, std::optional<OrbifoldType> base);

struct CoverRelation {
  long degree = 1;
  OrbitSurfaceVerdict cover;
  OrbitSurfaceVerdict base;
  std::string note;
};

/// The orbit surface of f^N is an N-sheeted cyclic unramified cover of that of f
/// and lies in the same class.
CoverRelation cyclic_cover_degree(const OrbitSurfaceVerdict& v, long n);

Jet<FloatScalar> to_float(const Jet<ExactScalar>& j);

}  // namespace surfdyn

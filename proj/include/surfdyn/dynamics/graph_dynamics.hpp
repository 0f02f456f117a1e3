#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "surfdyn/algebra/scalar.hpp"
#include "surfdyn/graph/dual_graph.hpp"

namespace surfdyn {

/// Moduli of dF along E and E' at their intersection point, with vanishing orders.
struct CornerData {
  int e = 0, e_prime = 0;
  Modulus lambda;  ///< |dF|_E(p)|
  Modulus mu;      ///< |dF|_{E'}(p)|
  int a_e = 1, a_e_prime = 1;
};

/// x^k for a positive rational and k >= 0.
mpq_class rational_power(const mpq_class& x, unsigned long k);

/// log|lambda| / a_E + log|mu| / a_E' < 0, decided as |lambda|^{a_E'} |mu|^{a_E} < 1
/// when both moduli are rational.
bool corner_inequality(const CornerData& c, double tol = kDefaultTolerance);

struct CycleCertificate {
  /// lcm of the vanishing orders around the cycle.
  long exponent = 1;
  /// prod_j |lambda_j|^{L/a_j} |mu_j|^{L/a_{j+1}}, when every modulus is rational.
  std::optional<mpq_class> product;
  bool product_is_one = false;
  /// sum_j log|lambda_j| / a_j + log|mu_j| / a_{j+1}.
  double log_sum = 0.0;
  /// Which corners satisfy the strict inequality; not all of them can.
  std::vector<bool> corner_holds;
  /// The strict system is infeasible: the sum of the corner terms vanishes.
  bool infeasible = false;
};

/// Corner j joins E_j and E_{j+1}; the matching |lambda_j| |mu_{j-1}| = 1 is required.
CycleCertificate cycle_obstruction(const std::vector<CornerData>& cycle, double tol = kDefaultTolerance);

enum class VertexTag { Hyperbolic, NonHyperbolic, FiniteOrder };
const char* to_string(VertexTag tag);

/// Corner oriented away from the center: dF along `far` is contracting; along
/// `near` it is expanding, or of modulus one when `near` is the center.
struct OrientedCorner {
  int near = 0, far = 0;
  bool near_is_center = false;
};

struct HyperbolicityLabeling {
  int center = 0;
  std::map<int, VertexTag> tags;
  std::map<int, int> distance;
  std::vector<OrientedCorner> corners;
  /// Chains hanging off the center, listed from the center outwards.
  std::vector<std::vector<int>> legs;
};

/// Breadth-first labeling from the center. Throws NotATree / BranchedLeg.
HyperbolicityLabeling propagate_hyperbolicity(const DualGraph& g, int center, bool center_finite_order = false);

/// Corner data consistent with a labeling: for every vertex a rational rho in
/// (0, 1); corner (P, C) gets |lambda| = 1/rho_P (1 at the center) and |mu| = rho_C.
std::vector<CornerData> annotate_corners(const DualGraph& g, const HyperbolicityLabeling& labeling,
                                         const std::map<int, mpq_class>& rho);

/// Checks supplied corner annotations against a labeling: the far side contracts,
/// the near side expands (or is unit at the center), and the corner inequality holds.
/// Returns the list of problems, empty when consistent.
std::vector<std::string> check_corner_annotations(const DualGraph& g, const HyperbolicityLabeling& labeling,
                                                  const std::vector<CornerAnnotation>& corners,
                                                  double tol = kDefaultTolerance);

struct CentralVerdict {
  bool accepted = true;
  std::string note;
};

CentralVerdict central_component_check(int genus, bool finite_order);

}  // namespace surfdyn

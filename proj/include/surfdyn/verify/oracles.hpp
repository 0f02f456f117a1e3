#pragma once

// Independent reference computations and random input generators for the
// test suite, the acceptance runner and `surfdyn verify`.

#include <gmpxx.h>

#include <map>
#include <random>
#include <vector>

#include "surfdyn/dynamics/graph_dynamics.hpp"
#include "surfdyn/graph/dual_graph.hpp"
#include "surfdyn/graph/hirzebruch_jung.hpp"
#include "surfdyn/orbifold/orbifold.hpp"

namespace surfdyn::oracle {

/// b_1 - 1/(b_2 - 1/(...)) by direct rational recursion.
mpq_class continued_fraction_value(const std::vector<long>& b);

/// All eigenvalues of the symmetric matrix are < 0, in double precision.
bool negative_definite_by_eigenvalues(const IntMatrix& m);

/// Adds a (-1) leaf at v, with the given id.
DualGraph blow_up_vertex(const DualGraph& g, int v, int new_id);
/// Replaces one a-b edge by a (-1) vertex between them.
DualGraph blow_up_edge(const DualGraph& g, int a, int b, int new_id);

/// Chain of (m, q) followed by `blowups` random point blow-ups; ids shuffled.
DualGraph random_blown_up_chain(std::mt19937_64& rng, long m, long q, int blowups);

struct StarSpec {
  int center_genus = 0;
  long center_self = -1;
  std::vector<CyclicQuotientData> legs;
};

/// Star-shaped graph: center id 0, legs expanded from (m_i, q_i) and attached
/// by their first vertex; random vanishing orders when `with_orders`.
DualGraph star_graph(const StarSpec& spec, std::mt19937_64* rng = nullptr);

/// Random star with 3..5 legs whose center self-intersection makes it negative definite.
StarSpec random_star_spec(std::mt19937_64& rng, int max_m = 12);

/// Rational multipliers rho in (0, 1) along a labeling so that every corner
/// inequality holds: rho_C = rho_P^{ceil(a_C / a_P)} * r/(r+1).
std::map<int, mpq_class> consistent_multipliers(const DualGraph& g, const HyperbolicityLabeling& labeling,
                                                std::mt19937_64& rng);

/// Corner data around a cycle of n curves obeying lambda_j = mu_{j-1}^{-1}.
std::vector<CornerData> random_matched_cycle(std::mt19937_64& rng, int n);

/// Cycle graph of n rational curves with self-intersection -3.
DualGraph cycle_graph(int n);

OrbifoldSurface random_orbifold(std::mt19937_64& rng);

/// Tree with two branch points (an H shape).
DualGraph h_shaped_tree();

/// Same graph with fresh ids from 100 upward and shuffled vertex and edge lists.
DualGraph relabeled(const DualGraph& g, std::mt19937_64& rng);

}  // namespace surfdyn::oracle

#pragma once

#include <array>
#include <span>
#include <vector>

#include "ltinfluence/exact.hpp"
#include "ltinfluence/graph.hpp"

namespace ltinfluence {

// m! times the m-th elementary symmetric polynomial of xs, by the standard
// recurrence. Returns 0 for m > |xs| (empty subset family).
double f_m(std::span<const double> xs, int m);

// Closed-form influence of a seed set on the complete UISLT graph:
// sigma = |A0| + alpha_A0 * sum_m terms[m], terms[m] = h^(m) over the
// non-seed nodes.
struct UISLTEvaluation {
  double sigma = 0.0;
  std::vector<double> terms;
  double alpha_seed_total = 0.0;
};

UISLTEvaluation sigma_uislt(const UISLTParams& params, std::span<const int> seeds);

// Uniform-influence specializations. sigma_uslt fixes alpha = 1 (betas carry
// the model; beta_i = 0 is allowed and means the node never activates);
// sigma_uilt fixes beta = 1.
double sigma_uslt(std::span<const double> betas, std::span<const int> seeds);
double sigma_uilt(std::span<const double> alphas, std::span<const int> seeds);

// Influence of one node on a degree-normalized forest: d_i + 1. Rejects
// graphs whose underlying undirected structure contains a cycle.
double sigma_degree_acyclic(const InfluenceGraph& g, int node);

// The three pairwise decomposition identities, evaluated with the exact
// engine; residuals should vanish up to floating error.
struct PairwiseIdentities {
  double sigma_pair = 0.0;  // sigma({i, j})
  double sigma_i = 0.0;
  double sigma_j = 0.0;
  std::array<double, 3> residuals{};
};

PairwiseIdentities pairwise_influence_identities(const InfluenceGraph& g, int i, int j,
                                                 const ExactOptions& opts = {});

}  // namespace ltinfluence

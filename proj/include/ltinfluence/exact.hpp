#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ltinfluence/graph.hpp"

namespace ltinfluence {

// Bitset over node ids; exact-mode operations address at most 64 nodes.
using NodeMask = std::uint64_t;

inline constexpr NodeMask kAllNodes = ~0ULL;

NodeMask full_mask(int node_count);
NodeMask mask_of(std::span<const int> nodes);
std::vector<int> mask_nodes(NodeMask mask);

struct ExactOptions {
  // Max active (non-excluded) nodes for the memoized recursion. The state
  // space is exponential; this is a guard, not a promise of feasibility.
  int recursion_cap = 20;
};

struct PathOptions {
  // Max intermediate universe for self-avoiding path enumeration.
  int enumeration_cap = 12;
  // Branches are explored in descending edge-probability order and cut when
  // the running product drops below this; 0 disables pruning (oracle mode).
  double prune = 1e-15;
};

// Influence of `node` on the subnetwork with `excluded` removed, by the
// memoized recursion sigma(N\X, i) = 1 + sum_j w(i,j) sigma(N\X\{i}, j).
double sigma_node_exact(const InfluenceGraph& g, int node, NodeMask excluded = 0,
                        const ExactOptions& opts = {});

// Influence of a seed set: sum over seeds i of the node influence on the
// subnetwork keeping i and dropping the other seeds.
double sigma_set_exact(const InfluenceGraph& g, std::span<const int> seeds,
                       NodeMask excluded = 0, const ExactOptions& opts = {});

// First-hit probability of `targets` from `start` along self-avoiding paths
// of the reversed chain, intermediates restricted to `allowed`, optionally
// required to pass through `via` before the hit. 1 when start is a target.
struct PathProbQuery {
  int start = 0;
  NodeMask targets = 0;
  int via = -1;               // -1: no via constraint
  NodeMask allowed = kAllNodes;
};

double acyclic_hit_prob(const TransitionMatrix& P, const PathProbQuery& query,
                        const PathOptions& opts = {});

// sigma via the reversed-chain identity: |A0| + sum_{j not in A0} c(j -> A0).
double sigma_via_paths(const InfluenceGraph& g, std::span<const int> seeds,
                       const PathOptions& opts = {});

// Exact terminal activation probability g_j = c(j -> A0); 1 for seeds.
double activation_prob_exact(const InfluenceGraph& g, std::span<const int> seeds, int node,
                             const PathOptions& opts = {});

struct ExhaustiveResult {
  std::vector<int> seeds;  // lexicographically smallest argmax
  double sigma = 0.0;
};

struct ExhaustiveOptions {
  ExactOptions exact;
  std::int64_t max_combinations = 1'000'000;
};

// Brute-force optimum over all K-subsets; test oracle for the maximization
// problem. Throws when C(n, K) exceeds the combination budget.
ExhaustiveResult optimal_seed_exhaustive(const InfluenceGraph& g, int k,
                                         const ExhaustiveOptions& opts = {});

}  // namespace ltinfluence

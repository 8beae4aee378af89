#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ltinfluence/evaluator.hpp"
#include "ltinfluence/graph.hpp"

namespace ltinfluence {

struct SievingConfig {
  int k = 1;                // target seed-set size
  double alpha = 0.3;       // subordinate threshold in (0, 1]
  double epsilon = 1e-6;    // leecher cutoff on restricted influence, >= 0
};

struct RoundRecord {
  int pool_size = 0;   // candidates whose sigma was evaluated this round
  int picked = -1;
  double gain = 0.0;   // greedy: marginal sigma; sieving: restricted sigma of the pick
};

struct SelectionResult {
  std::vector<int> chosen;  // ascending; pick order is in per_round
  double sigma = 0.0;       // evaluator value of the chosen set
  std::vector<RoundRecord> per_round;
  std::int64_t evaluator_calls = 0;
  bool exhausted = false;   // sieving ran out of candidates before K picks
  std::string warning;
};

// Hill climbing (Algorithm 1): K rounds of argmax_v sigma(X ∪ {v}), ties by
// ascending node id. Throws when K exceeds the node count.
SelectionResult greedy(const InfluenceGraph& g, int k, InfluenceEvaluator& evaluator);

// G1-Sieving (Algorithm 2): rank nodes by individual influence, take the
// head, then per round drop alpha-subordinates (g_i > alpha) and leechers
// (restricted sigma < epsilon) and pick the best survivor by restricted
// influence sigma(N \ X, {i}). May return fewer than K nodes.
SelectionResult g1_sieving(const InfluenceGraph& g, const SievingConfig& config,
                           InfluenceEvaluator& evaluator);

// sigma({node}) on the node-deleted subgraph N \ restricted_set.
double evaluate_restricted(const InfluenceGraph& g, std::span<const int> restricted_set,
                           int node, InfluenceEvaluator& evaluator);

// Diagnostic split of the non-chosen nodes. residuals[i] holds the
// leecher-defining quantity sigma(N,i) - sum_{j in X} w(i,j) sigma(N\i, j)
// (NaN for members of X); the leecher *set* uses the operational cutoff
// sigma(N\X, i) < epsilon.
struct DummyClassification {
  std::vector<int> subordinates;
  std::vector<int> leechers;
  std::vector<double> residuals;
};

DummyClassification classify_dummies(const InfluenceGraph& g, std::span<const int> chosen,
                                     const SievingConfig& config,
                                     InfluenceEvaluator& evaluator);

}  // namespace ltinfluence

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ltinfluence/evaluator.hpp"
#include "ltinfluence/graph.hpp"

namespace ltinfluence {

struct RankEntry {
  int node = 0;
  double score = 0.0;
};

// Node ranking: scores non-increasing, ties broken by ascending node id,
// every node exactly once. params carries evaluation metadata.
struct RankList {
  std::vector<RankEntry> entries;
  std::string method;
  std::string tie_break = "ascending-node-id";
  std::map<std::string, std::string> params;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(std::string what, double residual)
      : std::runtime_error(std::move(what)), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// Stationary distribution of P_d = damping * P + (1 - damping) * uniform by
// power iteration, returned when the L1 residual against P_d drops to tol.
// damping = 1 computes the raw stationary distribution. Iterates the lazy
// chain (I + P_d)/2, which has the same fixed points but no periodicity.
std::vector<double> stationary_distribution(const TransitionMatrix& P, double damping = 1.0,
                                            double tol = 1e-12, std::int64_t max_iter = 100000);

RankList pagerank(const TransitionMatrix& P, double damping = 1.0, double tol = 1e-12,
                  std::int64_t max_iter = 100000);

// Out-edge count / out-weight sum heuristics.
RankList rank_by_degree(const InfluenceGraph& g);
RankList rank_by_weighted_outdegree(const InfluenceGraph& g);

// Nodes sorted by individual influence sigma(N, {i}) descending: the G1 list.
RankList build_g1(const InfluenceGraph& g, InfluenceEvaluator& evaluator);

// Internal helper shared by rankers: sort (node, score) pairs into a RankList.
RankList make_rank_list(std::vector<double> scores, std::string method);

}  // namespace ltinfluence

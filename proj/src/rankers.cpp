#include "ltinfluence/rankers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ltinfluence {

RankList make_rank_list(std::vector<double> scores, std::string method) {
  RankList out;
  out.method = std::move(method);
  out.entries.reserve(scores.size());
  for (int v = 0; v < static_cast<int>(scores.size()); ++v)
    out.entries.push_back({v, scores[v]});
  std::stable_sort(out.entries.begin(), out.entries.end(),
                   [](const RankEntry& a, const RankEntry& b) {
                     return a.score != b.score ? a.score > b.score : a.node < b.node;
                   });
  return out;
}

std::vector<double> stationary_distribution(const TransitionMatrix& P, double damping,
                                            double tol, std::int64_t max_iter) {
  if (!(damping > 0.0 && damping <= 1.0))
    throw std::invalid_argument("damping must be in (0, 1]");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  int n = P.node_count();
  if (n == 0) return {};

  std::vector<double> x(n, 1.0 / n), y(n, 0.0);
  double teleport = (1.0 - damping) / n;
  double residual = 0.0;
  for (std::int64_t iter = 0; iter < max_iter; ++iter) {
    // y = x P_d  (row vector times row-stochastic matrix)
    std::fill(y.begin(), y.end(), teleport);
    for (int j = 0; j < n; ++j) {
      double xj = damping * x[j];
      if (xj == 0.0) continue;
      auto t = P.row_targets(j);
      auto p = P.row_probs(j);
      for (std::size_t k = 0; k < t.size(); ++k) y[t[k]] += xj * p[k];
    }
    residual = 0.0;
    for (int j = 0; j < n; ++j) residual += std::abs(y[j] - x[j]);
    if (residual <= tol) return x;
    // lazy step keeps periodic chains from oscillating
    double total = 0.0;
    for (int j = 0; j < n; ++j) {
      x[j] = 0.5 * (x[j] + y[j]);
      total += x[j];
    }
    for (int j = 0; j < n; ++j) x[j] /= total;
  }
  std::ostringstream os;
  os << "power iteration did not reach tol " << tol << " within " << max_iter
     << " iterations; last residual " << residual;
  throw ConvergenceError(os.str(), residual);
}

RankList pagerank(const TransitionMatrix& P, double damping, double tol,
                  std::int64_t max_iter) {
  RankList out = make_rank_list(stationary_distribution(P, damping, tol, max_iter), "pagerank");
  std::ostringstream d;
  d << damping;
  out.params["damping"] = d.str();
  std::ostringstream t;
  t << tol;
  out.params["tol"] = t.str();
  return out;
}

RankList rank_by_degree(const InfluenceGraph& g) {
  std::vector<double> scores(g.node_count(), 0.0);
  for (int i = 0; i < g.node_count(); ++i) {
    int d = 0;
    for (double w : g.out_weights(i))
      if (w > 0.0) ++d;
    scores[i] = d;
  }
  return make_rank_list(std::move(scores), "degree");
}

RankList rank_by_weighted_outdegree(const InfluenceGraph& g) {
  std::vector<double> scores(g.node_count(), 0.0);
  for (int i = 0; i < g.node_count(); ++i) scores[i] = g.out_sum(i);
  return make_rank_list(std::move(scores), "wdegree");
}

RankList build_g1(const InfluenceGraph& g, InfluenceEvaluator& evaluator) {
  std::vector<int> nodes(g.node_count());
  for (int v = 0; v < g.node_count(); ++v) nodes[v] = v;
  RankList out = make_rank_list(evaluator.sigma_with_each({}, nodes), "g1");
  out.params["evaluator"] = evaluator.describe();
  return out;
}

}  // namespace ltinfluence

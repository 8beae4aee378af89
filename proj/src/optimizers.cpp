#include "ltinfluence/optimizers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ltinfluence/rankers.hpp"

namespace ltinfluence {

namespace {

void check_config(const SievingConfig& c) {
  if (!(c.alpha > 0.0 && c.alpha <= 1.0))
    throw std::invalid_argument("alpha must be in (0, 1]");
  if (!(c.epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
  if (c.k < 1) throw std::invalid_argument("K must be >= 1");
}

void insert_sorted(std::vector<int>& set, int v) {
  set.insert(std::upper_bound(set.begin(), set.end(), v), v);
}

}  // namespace

SelectionResult greedy(const InfluenceGraph& g, int k, InfluenceEvaluator& evaluator) {
  int n = g.node_count();
  if (k < 1) throw std::invalid_argument("K must be >= 1");
  if (k > n) throw std::invalid_argument("K exceeds the node count");

  std::int64_t calls_before = evaluator.calls();
  SelectionResult result;
  std::vector<char> in_set(n, 0);
  double sigma_prev = 0.0;

  for (int round = 1; round <= k; ++round) {
    evaluator.set_stream(static_cast<std::uint64_t>(round));
    std::vector<int> candidates;
    candidates.reserve(n - round + 1);
    for (int v = 0; v < n; ++v)
      if (!in_set[v]) candidates.push_back(v);

    std::vector<double> values = evaluator.sigma_with_each(result.chosen, candidates);
    int best = -1;
    double best_value = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (values[i] > best_value) {  // strict: ascending-id tie-break
        best_value = values[i];
        best = candidates[i];
      }
    }
    insert_sorted(result.chosen, best);
    in_set[best] = 1;
    result.per_round.push_back(
        {static_cast<int>(candidates.size()), best, best_value - sigma_prev});
    sigma_prev = best_value;
  }
  result.sigma = sigma_prev;
  result.evaluator_calls = evaluator.calls() - calls_before;
  return result;
}

SelectionResult g1_sieving(const InfluenceGraph& g, const SievingConfig& config,
                           InfluenceEvaluator& evaluator) {
  check_config(config);
  int n = g.node_count();
  if (n < 1) throw std::invalid_argument("empty graph");

  std::int64_t calls_before = evaluator.calls();
  SelectionResult result;

  // G1: every node by individual influence, descending, ties ascending id.
  evaluator.set_stream(1);
  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  std::vector<double> individual = evaluator.sigma_with_each({}, all);
  RankList g1 = make_rank_list(individual, "g1");

  std::vector<int> remaining;  // G1 order, head removed
  remaining.reserve(n - 1);
  for (std::size_t i = 1; i < g1.entries.size(); ++i) remaining.push_back(g1.entries[i].node);

  int head = g1.entries.front().node;
  result.chosen.push_back(head);
  result.per_round.push_back({n, head, g1.entries.front().score});

  for (int round = 2; round <= config.k; ++round) {
    if (remaining.empty()) {
      result.exhausted = true;
      break;
    }
    evaluator.set_stream(static_cast<std::uint64_t>(round));
    std::vector<double> probs = evaluator.activation_probs(result.chosen);

    // Thresholding: alpha-subordinates leave G1 for good.
    std::vector<int> survivors;
    survivors.reserve(remaining.size());
    for (int v : remaining) {
      if (probs[v] > config.alpha) continue;
      survivors.push_back(v);
    }
    if (survivors.empty()) {
      remaining.clear();
      result.exhausted = true;
      break;
    }

    // Restriction: sigma(N \ X, {i}) for the survivors; values below epsilon
    // mark leechers, which also leave for good.
    std::vector<int> by_id(survivors);
    std::sort(by_id.begin(), by_id.end());
    std::vector<double> restricted = evaluator.sigma_with_each({}, by_id, result.chosen);

    int best = -1;
    double best_value = -std::numeric_limits<double>::infinity();
    std::vector<char> leech(n, 0);
    for (std::size_t i = 0; i < by_id.size(); ++i) {
      if (restricted[i] < config.epsilon) {
        leech[by_id[i]] = 1;
        continue;
      }
      if (restricted[i] > best_value) {
        best_value = restricted[i];
        best = by_id[i];
      }
    }
    if (best < 0) {
      remaining.clear();
      result.exhausted = true;
      break;
    }

    result.per_round.push_back({static_cast<int>(by_id.size()), best, best_value});
    insert_sorted(result.chosen, best);

    std::vector<int> next;
    next.reserve(survivors.size());
    for (int v : survivors)
      if (v != best && !leech[v]) next.push_back(v);
    remaining = std::move(next);
  }

  if (result.exhausted)
    result.warning = "candidate list exhausted after " +
                     std::to_string(result.chosen.size()) + " of " +
                     std::to_string(config.k) + " picks";

  evaluator.set_stream(static_cast<std::uint64_t>(config.k) + 1);
  result.sigma = evaluator.sigma(result.chosen);
  result.evaluator_calls = evaluator.calls() - calls_before;
  return result;
}

double evaluate_restricted(const InfluenceGraph& g, std::span<const int> restricted_set,
                           int node, InfluenceEvaluator& evaluator) {
  if (node < 0 || node >= g.node_count()) throw std::invalid_argument("node out of range");
  for (int v : restricted_set)
    if (v == node) throw std::invalid_argument("node belongs to the restricted set");
  const int seeds[1] = {node};
  return evaluator.sigma(seeds, restricted_set);
}

DummyClassification classify_dummies(const InfluenceGraph& g, std::span<const int> chosen,
                                     const SievingConfig& config,
                                     InfluenceEvaluator& evaluator) {
  check_config(config);
  if (chosen.empty()) throw std::invalid_argument("chosen set must be nonempty");
  int n = g.node_count();
  std::vector<char> in_set(n, 0);
  for (int v : chosen) {
    if (v < 0 || v >= n) throw std::invalid_argument("chosen node out of range");
    in_set[v] = 1;
  }

  DummyClassification out;
  out.residuals.assign(n, std::numeric_limits<double>::quiet_NaN());
  std::vector<double> probs = evaluator.activation_probs(chosen);

  for (int i = 0; i < n; ++i) {
    if (in_set[i]) continue;
    if (probs[i] > config.alpha) out.subordinates.push_back(i);

    const int self[1] = {i};
    if (evaluator.sigma(self, chosen) < config.epsilon) out.leechers.push_back(i);

    // Leecher-defining residual: individual influence minus the part that
    // flows straight into the chosen set.
    double res = evaluator.sigma(self);
    const int excl[1] = {i};
    for (int j : chosen) {
      double w = g.weight(i, j);
      if (w > 0.0) {
        const int seed_j[1] = {j};
        res -= w * evaluator.sigma(seed_j, excl);
      }
    }
    out.residuals[i] = res;
  }
  return out;
}

}  // namespace ltinfluence

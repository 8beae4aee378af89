#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ltinfluence/exact.hpp"
#include "ltinfluence/graph.hpp"
#include "ltinfluence/montecarlo.hpp"

namespace ltinfluence {

// Pluggable sigma / activation-probability backend for rankers and seed
// selection. calls() counts evaluation requests: one per sigma value and one
// per activation-probability sweep (a single simulation batch serves every
// node, which is what makes thresholding cheap). Instances are not
// thread-safe; use one per thread.
class InfluenceEvaluator {
 public:
  virtual ~InfluenceEvaluator() = default;

  // sigma of `seeds` on the subgraph with `excluded` removed.
  virtual double sigma(std::span<const int> seeds, std::span<const int> excluded = {}) = 0;

  // Terminal activation probability g_j(N, seeds) for every node.
  virtual std::vector<double> activation_probs(std::span<const int> seeds) = 0;

  // sigma(base ∪ {v}) for each candidate v, on the subgraph with `excluded`
  // removed. base may be empty (individual influences). Counts one call per
  // candidate; backends may batch the work.
  virtual std::vector<double> sigma_with_each(std::span<const int> base,
                                              std::span<const int> candidates,
                                              std::span<const int> excluded = {});

  // Derived-randomness selector (e.g. one stream per selection round); the
  // exact backend ignores it.
  virtual void set_stream(std::uint64_t) {}

  virtual std::string describe() const = 0;

  std::int64_t calls() const { return calls_; }

 protected:
  std::int64_t calls_ = 0;
};

class ExactEvaluator final : public InfluenceEvaluator {
 public:
  explicit ExactEvaluator(const InfluenceGraph& g, ExactOptions exact = {},
                          PathOptions paths = {.enumeration_cap = 12, .prune = 0.0});

  double sigma(std::span<const int> seeds, std::span<const int> excluded = {}) override;
  std::vector<double> activation_probs(std::span<const int> seeds) override;
  std::string describe() const override;

 private:
  const InfluenceGraph& g_;
  ExactOptions exact_;
  PathOptions paths_;
  TransitionMatrix transition_;
};

class MonteCarloEvaluator final : public InfluenceEvaluator {
 public:
  MonteCarloEvaluator(const InfluenceGraph& g, std::int64_t runs, std::uint64_t rng_seed);

  double sigma(std::span<const int> seeds, std::span<const int> excluded = {}) override;
  std::vector<double> activation_probs(std::span<const int> seeds) override;
  // Snapshot-based: simulates the base once per run and extends each run
  // with the candidate under the same thresholds; bit-identical to a fresh
  // batch per candidate with this stream.
  std::vector<double> sigma_with_each(std::span<const int> base,
                                      std::span<const int> candidates,
                                      std::span<const int> excluded = {}) override;
  void set_stream(std::uint64_t stream) override;
  std::string describe() const override;

  std::int64_t runs() const { return runs_; }
  std::uint64_t effective_seed() const;

 private:
  const InfluenceGraph& g_;
  std::int64_t runs_;
  std::uint64_t base_seed_;
  std::uint64_t stream_ = 0;
  LtSimulator sim_;
};

}  // namespace ltinfluence

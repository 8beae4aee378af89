#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ltinfluence/graph.hpp"

namespace ltinfluence {

// One realized LT diffusion. steps holds D_0 .. D_{S-1} (D_0 = the seed
// set); the stopping time S is the first step with no new activation, so an
// empty D_S is never stored and stop_time() == steps.size().
struct ActivationTrace {
  std::vector<std::vector<int>> steps;

  int stop_time() const { return static_cast<int>(steps.size()); }
  std::vector<int> final_set() const;
};

// Integer-exact batch tallies. sum_size / sum_size_sq accumulate |A_S| per
// run; activation_counts[j] counts runs with j in A_S (filled on request).
struct ActivationStats {
  std::int64_t runs = 0;
  std::uint64_t rng_seed = 0;
  std::int64_t sum_size = 0;
  std::int64_t sum_size_sq = 0;
  std::vector<std::int64_t> activation_counts;

  double mean() const;
  double half_width() const;  // 3-sigma confidence half-width
  std::vector<double> probs() const;
};

struct SigmaEstimate {
  double mean = 0.0;
  double half_width = 0.0;
  std::int64_t runs = 0;
  std::uint64_t rng_seed = 0;
};

// Threshold of node j in run r: a pure function of (rng_seed, r, j), so
// batches are reproducible across platforms and thread counts and a run can
// be resumed from a snapshot without storing generator state.
double lt_threshold(std::uint64_t rng_seed, std::int64_t run_index, int node);

ActivationTrace simulate_activation(const InfluenceGraph& g, std::span<const int> seeds,
                                    std::uint64_t rng_seed, std::span<const int> excluded = {});

ActivationStats run_activation_batch(const InfluenceGraph& g, std::span<const int> seeds,
                                     std::int64_t runs, std::uint64_t rng_seed,
                                     std::span<const int> excluded = {},
                                     bool with_counts = false);

SigmaEstimate estimate_sigma(const InfluenceGraph& g, std::span<const int> seeds,
                             std::int64_t runs, std::uint64_t rng_seed,
                             std::span<const int> excluded = {});

std::vector<double> estimate_activation_probs(const InfluenceGraph& g, std::span<const int> seeds,
                                              std::int64_t runs, std::uint64_t rng_seed,
                                              std::span<const int> excluded = {});

// Reusable single-threaded simulator bound to one graph. Scratch arrays are
// stamped per run, so consecutive runs cost O(touched nodes), not O(n).
// Also provides per-run terminal-set snapshots: because thresholds are
// counter-based and the fixed-threshold cascade is a monotone closure,
// extending a snapshot with one more seed reproduces bit-exactly the
// terminal set of a fresh run on the enlarged seed set.
class LtSimulator {
 public:
  explicit LtSimulator(const InfluenceGraph& g);

  void set_excluded(std::span<const int> excluded);
  std::span<const int> excluded() const { return excluded_list_; }

  ActivationTrace trace(std::span<const int> seeds, std::uint64_t rng_seed);
  ActivationStats batch(std::span<const int> seeds, std::int64_t runs, std::uint64_t rng_seed,
                        bool with_counts = false);
  // Runs the absolute run indices [begin_run, end_run); lets parallel callers
  // split a batch into chunks that tally the exact same per-run outcomes.
  ActivationStats batch_range(std::span<const int> seeds, std::int64_t begin_run,
                              std::int64_t end_run, std::uint64_t rng_seed,
                              bool with_counts = false);

  // Runs the batch and keeps each run's terminal set. The seed list may be
  // empty here (an empty base for evaluating singletons incrementally).
  void snapshot(std::span<const int> seeds, std::int64_t runs, std::uint64_t rng_seed);
  bool has_snapshot() const { return snapshot_runs_ > 0; }
  std::int64_t snapshot_runs() const { return snapshot_runs_; }

  // Mean terminal-set size over the snapshot runs with `candidate` added to
  // the base seed set, under the snapshot's thresholds.
  double extend_mean(int candidate);
  // Integer sum behind extend_mean (bit-exact comparisons in tests).
  std::int64_t extend_sum(int candidate);

 private:
  void check_seeds(std::span<const int> seeds, bool allow_empty) const;
  // Core wave propagation from `seeds` with thresholds keyed by run_key.
  // Returns |A_S|. When `record` is non-null, every activated node id is
  // appended (seeds first).
  int propagate(std::span<const int> seeds, std::uint64_t run_key, std::vector<int>* record);
  void touch(int node, std::uint64_t run_key);

  const InfluenceGraph& g_;
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint8_t> excluded_flag_;
  std::vector<int> excluded_list_;

  std::vector<std::uint64_t> stamp_;
  std::vector<double> bsum_;
  std::vector<double> theta_;
  std::vector<std::uint8_t> active_;
  std::uint64_t epoch_ = 0;
  std::vector<int> frontier_, next_, activated_;

  std::vector<std::uint64_t> snap_bits_;
  std::vector<int> snap_sizes_;
  std::vector<int> snap_seeds_;
  std::int64_t snapshot_runs_ = 0;
  std::uint64_t snapshot_seed_ = 0;
  std::vector<std::uint64_t> overlay_;
};

}  // namespace ltinfluence

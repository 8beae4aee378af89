#include "ltinfluence/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "ltinfluence/parallel.hpp"
#include "ltinfluence/rng.hpp"

namespace ltinfluence {

int thread_budget() {
  if (const char* env = std::getenv("LT_INFLUENCE_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_chunks(std::int64_t count,
                     const std::function<void(int, std::int64_t, std::int64_t)>& fn) {
  if (count <= 0) return;
  int budget = thread_budget();
  std::int64_t chunks = std::min<std::int64_t>(budget, count);
  if (chunks <= 1) {
    fn(0, 0, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  std::int64_t per = (count + chunks - 1) / chunks;
  for (int c = 0; c < chunks; ++c) {
    std::int64_t begin = c * per;
    std::int64_t end = std::min(count, begin + per);
    if (begin >= end) break;
    pool.emplace_back(fn, c, begin, end);
  }
  for (auto& t : pool) t.join();
}

std::vector<int> ActivationTrace::final_set() const {
  std::vector<int> all;
  for (const auto& step : steps) all.insert(all.end(), step.begin(), step.end());
  std::sort(all.begin(), all.end());
  return all;
}

double ActivationStats::mean() const {
  return runs > 0 ? static_cast<double>(sum_size) / static_cast<double>(runs) : 0.0;
}

double ActivationStats::half_width() const {
  if (runs < 2) return 0.0;
  double r = static_cast<double>(runs);
  double var = (static_cast<double>(sum_size_sq) -
                static_cast<double>(sum_size) * static_cast<double>(sum_size) / r) /
               (r - 1.0);
  if (var < 0.0) var = 0.0;
  return 3.0 * std::sqrt(var / r);
}

std::vector<double> ActivationStats::probs() const {
  std::vector<double> p(activation_counts.size());
  for (std::size_t j = 0; j < p.size(); ++j)
    p[j] = static_cast<double>(activation_counts[j]) / static_cast<double>(runs);
  return p;
}

double lt_threshold(std::uint64_t rng_seed, std::int64_t run_index, int node) {
  std::uint64_t run_key = rng::mix(rng_seed, static_cast<std::uint64_t>(run_index));
  return rng::uniform(run_key, static_cast<std::uint64_t>(node));
}

LtSimulator::LtSimulator(const InfluenceGraph& g)
    : g_(g), n_(g.node_count()), words_((g.node_count() + 63) / 64) {
  excluded_flag_.assign(n_, 0);
  stamp_.assign(n_, 0);
  bsum_.assign(n_, 0.0);
  theta_.assign(n_, 0.0);
  active_.assign(n_, 0);
  overlay_.assign(words_, 0);
}

void LtSimulator::set_excluded(std::span<const int> excluded) {
  for (int v : excluded_list_) excluded_flag_[v] = 0;
  excluded_list_.assign(excluded.begin(), excluded.end());
  for (int v : excluded_list_) {
    if (v < 0 || v >= n_) throw std::invalid_argument("excluded node out of range");
    excluded_flag_[v] = 1;
  }
  snapshot_runs_ = 0;  // snapshots are only valid for the mask they were built with
}

void LtSimulator::check_seeds(std::span<const int> seeds, bool allow_empty) const {
  if (seeds.empty()) {
    if (allow_empty) return;
    throw std::invalid_argument("seed set must be nonempty");
  }
  for (int s : seeds) {
    if (s < 0 || s >= n_) throw std::invalid_argument("seed node out of range");
    if (excluded_flag_[s]) throw std::invalid_argument("seed node is excluded");
  }
  for (std::size_t k = 1; k < seeds.size(); ++k) {
    for (std::size_t l = 0; l < k; ++l)
      if (seeds[k] == seeds[l]) throw std::invalid_argument("duplicate seed node");
  }
}

inline void LtSimulator::touch(int node, std::uint64_t run_key) {
  if (stamp_[node] != epoch_) {
    stamp_[node] = epoch_;
    active_[node] = 0;
    bsum_[node] = 0.0;
    theta_[node] = rng::uniform(run_key, static_cast<std::uint64_t>(node));
  }
}

int LtSimulator::propagate(std::span<const int> seeds, std::uint64_t run_key,
                           std::vector<int>* record) {
  ++epoch_;
  frontier_.clear();
  int size = 0;
  for (int s : seeds) {
    touch(s, run_key);
    active_[s] = 1;
    frontier_.push_back(s);
    ++size;
    if (record) record->push_back(s);
  }
  while (!frontier_.empty()) {
    next_.clear();
    for (int u : frontier_) {
      auto targets = g_.out_targets(u);
      auto weights = g_.out_weights(u);
      for (std::size_t k = 0; k < targets.size(); ++k) {
        double w = weights[k];
        if (w <= 0.0) continue;
        int t = targets[k];
        if (excluded_flag_[t]) continue;
        touch(t, run_key);
        if (active_[t]) continue;
        bsum_[t] += w;
        if (bsum_[t] >= theta_[t]) {
          active_[t] = 1;
          next_.push_back(t);
          ++size;
          if (record) record->push_back(t);
        }
      }
    }
    std::swap(frontier_, next_);
  }
  return size;
}

ActivationTrace LtSimulator::trace(std::span<const int> seeds, std::uint64_t rng_seed) {
  check_seeds(seeds, false);
  std::uint64_t run_key = rng::mix(rng_seed, 0);

  ActivationTrace out;
  ++epoch_;
  std::vector<int> frontier(seeds.begin(), seeds.end());
  std::sort(frontier.begin(), frontier.end());
  for (int s : frontier) {
    touch(s, run_key);
    active_[s] = 1;
  }
  out.steps.push_back(frontier);
  while (true) {
    std::vector<int> wave;
    for (int u : frontier) {
      auto targets = g_.out_targets(u);
      auto weights = g_.out_weights(u);
      for (std::size_t k = 0; k < targets.size(); ++k) {
        double w = weights[k];
        if (w <= 0.0) continue;
        int t = targets[k];
        if (excluded_flag_[t]) continue;
        touch(t, run_key);
        if (active_[t]) continue;
        bsum_[t] += w;
        if (bsum_[t] >= theta_[t]) {
          active_[t] = 1;
          wave.push_back(t);
        }
      }
    }
    if (wave.empty()) break;  // A_k = A_{k-1}: stop, do not store the empty D_S
    std::sort(wave.begin(), wave.end());
    out.steps.push_back(wave);
    frontier = std::move(wave);
  }
  return out;
}

ActivationStats LtSimulator::batch(std::span<const int> seeds, std::int64_t runs,
                                   std::uint64_t rng_seed, bool with_counts) {
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");
  return batch_range(seeds, 0, runs, rng_seed, with_counts);
}

ActivationStats LtSimulator::batch_range(std::span<const int> seeds, std::int64_t begin_run,
                                         std::int64_t end_run, std::uint64_t rng_seed,
                                         bool with_counts) {
  check_seeds(seeds, false);
  if (begin_run < 0 || end_run <= begin_run) throw std::invalid_argument("bad run range");

  ActivationStats stats;
  stats.runs = end_run - begin_run;
  stats.rng_seed = rng_seed;
  if (with_counts) stats.activation_counts.assign(n_, 0);

  std::vector<int> record;
  for (std::int64_t r = begin_run; r < end_run; ++r) {
    std::uint64_t run_key = rng::mix(rng_seed, static_cast<std::uint64_t>(r));
    record.clear();
    int size = propagate(seeds, run_key, with_counts ? &record : nullptr);
    stats.sum_size += size;
    stats.sum_size_sq += static_cast<std::int64_t>(size) * size;
    if (with_counts)
      for (int v : record) ++stats.activation_counts[v];
  }
  return stats;
}

void LtSimulator::snapshot(std::span<const int> seeds, std::int64_t runs,
                           std::uint64_t rng_seed) {
  check_seeds(seeds, true);
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");

  snap_seeds_.assign(seeds.begin(), seeds.end());
  snapshot_runs_ = runs;
  snapshot_seed_ = rng_seed;
  snap_bits_.assign(static_cast<std::size_t>(runs) * words_, 0);
  snap_sizes_.assign(runs, 0);

  std::vector<int> record;
  for (std::int64_t r = 0; r < runs; ++r) {
    std::uint64_t run_key = rng::mix(rng_seed, static_cast<std::uint64_t>(r));
    record.clear();
    int size = propagate(snap_seeds_, run_key, &record);
    snap_sizes_[r] = size;
    std::uint64_t* bits = snap_bits_.data() + static_cast<std::size_t>(r) * words_;
    for (int v : record) bits[v >> 6] |= (1ULL << (v & 63));
  }
}

std::int64_t LtSimulator::extend_sum(int candidate) {
  if (!has_snapshot()) throw std::logic_error("extend without snapshot");
  if (candidate < 0 || candidate >= n_) throw std::invalid_argument("candidate out of range");
  if (excluded_flag_[candidate]) throw std::invalid_argument("candidate is excluded");

  std::int64_t total = 0;
  for (std::int64_t r = 0; r < snapshot_runs_; ++r) {
    const std::uint64_t* base = snap_bits_.data() + static_cast<std::size_t>(r) * words_;
    if (base[candidate >> 6] & (1ULL << (candidate & 63))) {
      total += snap_sizes_[r];
      continue;
    }
    std::memcpy(overlay_.data(), base, static_cast<std::size_t>(words_) * sizeof(std::uint64_t));
    std::uint64_t run_key = rng::mix(snapshot_seed_, static_cast<std::uint64_t>(r));
    ++epoch_;
    int size = snap_sizes_[r] + 1;
    overlay_[candidate >> 6] |= (1ULL << (candidate & 63));
    frontier_.assign(1, candidate);
    while (!frontier_.empty()) {
      next_.clear();
      for (int u : frontier_) {
        auto targets = g_.out_targets(u);
        auto weights = g_.out_weights(u);
        for (std::size_t k = 0; k < targets.size(); ++k) {
          double w = weights[k];
          if (w <= 0.0) continue;
          int t = targets[k];
          if (excluded_flag_[t]) continue;
          if (overlay_[t >> 6] & (1ULL << (t & 63))) continue;
          if (stamp_[t] != epoch_) {
            stamp_[t] = epoch_;
            theta_[t] = rng::uniform(run_key, static_cast<std::uint64_t>(t));
            // b from every in-neighbour already active in this overlay;
            // the pusher u is active, so its weight arrives here too.
            double b = 0.0;
            auto srcs = g_.in_sources(t);
            auto ws = g_.in_weights(t);
            for (std::size_t m = 0; m < srcs.size(); ++m) {
              int s = srcs[m];
              if (overlay_[s >> 6] & (1ULL << (s & 63))) b += ws[m];
            }
            bsum_[t] = b;
          } else {
            bsum_[t] += w;
          }
          if (bsum_[t] >= theta_[t]) {
            overlay_[t >> 6] |= (1ULL << (t & 63));
            next_.push_back(t);
            ++size;
          }
        }
      }
      std::swap(frontier_, next_);
    }
    total += size;
  }
  return total;
}

double LtSimulator::extend_mean(int candidate) {
  return static_cast<double>(extend_sum(candidate)) / static_cast<double>(snapshot_runs_);
}

// --- free functions ----------------------------------------------------------

ActivationTrace simulate_activation(const InfluenceGraph& g, std::span<const int> seeds,
                                    std::uint64_t rng_seed, std::span<const int> excluded) {
  LtSimulator sim(g);
  sim.set_excluded(excluded);
  return sim.trace(seeds, rng_seed);
}

ActivationStats run_activation_batch(const InfluenceGraph& g, std::span<const int> seeds,
                                     std::int64_t runs, std::uint64_t rng_seed,
                                     std::span<const int> excluded, bool with_counts) {
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");
  int budget = thread_budget();
  if (budget <= 1 || runs < 2048) {
    LtSimulator sim(g);
    sim.set_excluded(excluded);
    return sim.batch(seeds, runs, rng_seed, with_counts);
  }

  // Per-chunk simulators; run r's outcome is a pure function of
  // (rng_seed, r) and the tallies are integers, so the chunk layout does
  // not affect the combined result.
  int chunks = static_cast<int>(std::min<std::int64_t>(budget, runs));
  std::vector<ActivationStats> partial(chunks);
  std::vector<int> seed_copy(seeds.begin(), seeds.end());
  std::vector<int> excl_copy(excluded.begin(), excluded.end());
  parallel_chunks(runs, [&](int chunk, std::int64_t begin, std::int64_t end) {
    LtSimulator sim(g);
    sim.set_excluded(excl_copy);
    partial[chunk] = sim.batch_range(seed_copy, begin, end, rng_seed, with_counts);
  });

  ActivationStats stats;
  stats.runs = runs;
  stats.rng_seed = rng_seed;
  if (with_counts) stats.activation_counts.assign(g.node_count(), 0);
  for (const auto& p : partial) {
    stats.sum_size += p.sum_size;
    stats.sum_size_sq += p.sum_size_sq;
    if (with_counts)
      for (int j = 0; j < g.node_count(); ++j) stats.activation_counts[j] += p.activation_counts[j];
  }
  return stats;
}

SigmaEstimate estimate_sigma(const InfluenceGraph& g, std::span<const int> seeds,
                             std::int64_t runs, std::uint64_t rng_seed,
                             std::span<const int> excluded) {
  ActivationStats stats = run_activation_batch(g, seeds, runs, rng_seed, excluded, false);
  return {stats.mean(), stats.half_width(), stats.runs, stats.rng_seed};
}

std::vector<double> estimate_activation_probs(const InfluenceGraph& g,
                                              std::span<const int> seeds, std::int64_t runs,
                                              std::uint64_t rng_seed,
                                              std::span<const int> excluded) {
  ActivationStats stats = run_activation_batch(g, seeds, runs, rng_seed, excluded, true);
  return stats.probs();
}

}  // namespace ltinfluence

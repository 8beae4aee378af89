#include "ltinfluence/exact.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "ltinfluence/rng.hpp"

namespace ltinfluence {

NodeMask full_mask(int node_count) {
  if (node_count < 0 || node_count > 64)
    throw std::invalid_argument("exact mode handles at most 64 nodes");
  return node_count == 64 ? kAllNodes : ((1ULL << node_count) - 1);
}

NodeMask mask_of(std::span<const int> nodes) {
  NodeMask m = 0;
  for (int v : nodes) {
    if (v < 0 || v >= 64) throw std::invalid_argument("node id outside exact-mode range");
    m |= 1ULL << v;
  }
  return m;
}

std::vector<int> mask_nodes(NodeMask mask) {
  std::vector<int> out;
  while (mask) {
    int v = std::countr_zero(mask);
    out.push_back(v);
    mask &= mask - 1;
  }
  return out;
}

namespace {

inline bool has(NodeMask m, int v) { return (m >> v) & 1ULL; }

void check_exact_size(const InfluenceGraph& g, NodeMask excluded, int cap) {
  int n = g.node_count();
  if (n > 64) throw std::invalid_argument("exact mode handles at most 64 nodes");
  int active = n - std::popcount(excluded & full_mask(n));
  if (active > cap)
    throw std::invalid_argument("graph too large for exact mode: " + std::to_string(active) +
                                " active nodes exceed cap " + std::to_string(cap) +
                                "; raise the cap explicitly to override");
}

struct MemoKey {
  NodeMask removed;
  int node;
  bool operator==(const MemoKey&) const = default;
};

struct MemoHash {
  std::size_t operator()(const MemoKey& k) const {
    return static_cast<std::size_t>(
        rng::splitmix64(k.removed ^ (static_cast<std::uint64_t>(k.node) * rng::kGamma)));
  }
};

// Memoized evaluation of sigma(N \ removed, i). The memo is keyed on the
// full removed mask, so it can be shared across seed-set decompositions and
// across subsets in the exhaustive search for one fixed graph.
class SigmaRecursion {
 public:
  explicit SigmaRecursion(const InfluenceGraph& g) : g_(g) {}

  double node_sigma(int i, NodeMask removed) {
    MemoKey key{removed, i};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    double s = 1.0;
    NodeMask removed_i = removed | (1ULL << i);
    auto targets = g_.out_targets(i);
    auto weights = g_.out_weights(i);
    for (std::size_t k = 0; k < targets.size(); ++k) {
      double w = weights[k];
      if (w <= 0.0) continue;
      int j = targets[k];
      if (has(removed_i, j)) continue;
      s += w * node_sigma(j, removed_i);
    }
    memo_.emplace(key, s);
    return s;
  }

  double set_sigma(std::span<const int> seeds, NodeMask excluded) {
    NodeMask seed_mask = mask_of(seeds);
    double total = 0.0;
    for (int i : seeds) total += node_sigma(i, excluded | (seed_mask & ~(1ULL << i)));
    return total;
  }

 private:
  const InfluenceGraph& g_;
  std::unordered_map<MemoKey, double, MemoHash> memo_;
};

void check_seed_list(const InfluenceGraph& g, std::span<const int> seeds, NodeMask excluded) {
  if (seeds.empty()) throw std::invalid_argument("seed set must be nonempty");
  NodeMask seen = 0;
  for (int s : seeds) {
    if (s < 0 || s >= g.node_count()) throw std::invalid_argument("seed node out of range");
    if (has(excluded, s)) throw std::invalid_argument("seed node is excluded");
    if (has(seen, s)) throw std::invalid_argument("duplicate seed node");
    seen |= 1ULL << s;
  }
}

// Depth-first enumeration of self-avoiding paths with a running probability
// product. Rows are pre-sorted by descending probability so a prune can cut
// the remainder of a row in one comparison.
class PathEnumerator {
 public:
  PathEnumerator(const TransitionMatrix& P, NodeMask targets, int via, NodeMask allowed,
                 double prune)
      : targets_(targets), via_(via), allowed_(allowed), prune_(prune) {
    int n = P.node_count();
    rows_.resize(n);
    for (int u = 0; u < n; ++u) {
      auto t = P.row_targets(u);
      auto p = P.row_probs(u);
      for (std::size_t k = 0; k < t.size(); ++k) {
        if (t[k] == u || p[k] <= 0.0) continue;  // self-loops never lie on acyclic paths
        rows_[u].push_back({p[k], t[k]});
      }
      std::sort(rows_[u].begin(), rows_[u].end(), [](const Hop& a, const Hop& b) {
        return a.prob != b.prob ? a.prob > b.prob : a.target < b.target;
      });
    }
  }

  double run(int start) {
    total_ = 0.0;
    dfs(start, 1ULL << start, 1.0, via_ < 0 || start == via_);
    return total_;
  }

 private:
  struct Hop {
    double prob;
    int target;
  };

  void dfs(int u, NodeMask visited, double product, bool via_seen) {
    for (const Hop& hop : rows_[u]) {
      double next = product * hop.prob;
      if (prune_ > 0.0 && next < prune_) break;  // descending order: rest is smaller
      int l = hop.target;
      if (has(targets_, l)) {
        if (via_seen) total_ += next;
        continue;
      }
      if (!has(allowed_, l) || has(visited, l)) continue;
      dfs(l, visited | (1ULL << l), next, via_seen || l == via_);
    }
  }

  std::vector<std::vector<Hop>> rows_;
  NodeMask targets_;
  int via_;
  NodeMask allowed_;
  double prune_;
  double total_ = 0.0;
};

}  // namespace

double sigma_node_exact(const InfluenceGraph& g, int node, NodeMask excluded,
                        const ExactOptions& opts) {
  check_exact_size(g, excluded, opts.recursion_cap);
  if (node < 0 || node >= g.node_count()) throw std::invalid_argument("node out of range");
  if (has(excluded, node)) throw std::invalid_argument("node is excluded");
  SigmaRecursion rec(g);
  return rec.node_sigma(node, excluded);
}

double sigma_set_exact(const InfluenceGraph& g, std::span<const int> seeds, NodeMask excluded,
                       const ExactOptions& opts) {
  check_exact_size(g, excluded, opts.recursion_cap);
  check_seed_list(g, seeds, excluded);
  SigmaRecursion rec(g);
  return rec.set_sigma(seeds, excluded);
}

double acyclic_hit_prob(const TransitionMatrix& P, const PathProbQuery& query,
                        const PathOptions& opts) {
  int n = P.node_count();
  if (n > 64) throw std::invalid_argument("exact mode handles at most 64 nodes");
  NodeMask universe = full_mask(n);
  NodeMask allowed = query.allowed & universe;
  NodeMask targets = query.targets & universe;
  if (query.start < 0 || query.start >= n) throw std::invalid_argument("start out of range");
  if (has(targets, query.start)) return 1.0;  // already in the target set
  if (!has(allowed, query.start))
    throw std::invalid_argument("start node must belong to the allowed set");
  if (query.via >= 0) {
    if (query.via >= n) throw std::invalid_argument("via node out of range");
    if (has(targets, query.via))
      throw std::invalid_argument("via node must not belong to the target set");
    if (!has(allowed, query.via))
      throw std::invalid_argument("via node must belong to the allowed set");
  }
  if (targets == 0) return 0.0;
  int intermediates = std::popcount(allowed & ~targets);
  if (intermediates > opts.enumeration_cap)
    throw std::invalid_argument("path enumeration universe of " + std::to_string(intermediates) +
                                " nodes exceeds cap " + std::to_string(opts.enumeration_cap));

  PathEnumerator en(P, targets, query.via, allowed, opts.prune);
  return en.run(query.start);
}

double sigma_via_paths(const InfluenceGraph& g, std::span<const int> seeds,
                       const PathOptions& opts) {
  check_seed_list(g, seeds, 0);
  TransitionMatrix P = make_transition_matrix(g);
  NodeMask seed_mask = mask_of(seeds);
  int n = g.node_count();
  int intermediates = n - std::popcount(seed_mask);
  if (n > 64 || intermediates > opts.enumeration_cap)
    throw std::invalid_argument("path enumeration universe of " + std::to_string(intermediates) +
                                " nodes exceeds cap " + std::to_string(opts.enumeration_cap));

  PathEnumerator en(P, seed_mask, -1, full_mask(n), opts.prune);
  double sigma = static_cast<double>(seeds.size());
  for (int j = 0; j < n; ++j) {
    if (has(seed_mask, j)) continue;
    sigma += en.run(j);
  }
  return sigma;
}

double activation_prob_exact(const InfluenceGraph& g, std::span<const int> seeds, int node,
                             const PathOptions& opts) {
  check_seed_list(g, seeds, 0);
  if (node < 0 || node >= g.node_count()) throw std::invalid_argument("node out of range");
  TransitionMatrix P = make_transition_matrix(g);
  PathProbQuery q{node, mask_of(seeds), -1, kAllNodes};
  return acyclic_hit_prob(P, q, opts);
}

ExhaustiveResult optimal_seed_exhaustive(const InfluenceGraph& g, int k,
                                         const ExhaustiveOptions& opts) {
  int n = g.node_count();
  if (k < 1 || k > n) throw std::invalid_argument("K must be between 1 and the node count");
  check_exact_size(g, 0, opts.exact.recursion_cap);

  // C(n, k) against the budget, computed without overflow drama.
  double combos = 1.0;
  for (int i = 0; i < k; ++i) combos = combos * (n - i) / (i + 1);
  if (combos > static_cast<double>(opts.max_combinations))
    throw std::invalid_argument("C(n, K) exceeds the enumeration budget of " +
                                std::to_string(opts.max_combinations) + " combinations");

  SigmaRecursion rec(g);
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;

  ExhaustiveResult best;
  best.sigma = -1.0;
  while (true) {
    double s = rec.set_sigma(pick, 0);
    if (s > best.sigma) {  // strict: lexicographically smallest argmax wins ties
      best.sigma = s;
      best.seeds = pick;
    }
    // next combination in lexicographic order
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

}  // namespace ltinfluence
